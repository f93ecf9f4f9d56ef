#pragma once

#include <memory>
#include <vector>

#include "ncwave/fourier.hpp"
#include "ncwave/signal.hpp"

namespace ncwave {

/// Analysis window: a signal on the same group, nonzero norm required at use.
struct Window {
    SampledSignal values;
    double norm_sq() const;
};

/// Base translation lattice: every `stride[a]`-th point of axis a. Strides
/// must divide the axis sizes so translations stay exact re-indexings.
struct BaseGrid {
    std::vector<std::size_t> strides;
};

/// f^psi_b(g) = f(g) * conj(psi(g - b)): the window translated to base point
/// `base_multi` (per-axis index offsets, cyclically) and multiplied against f.
/// Translation is componentwise on the parametrization box: for Euclidean
/// factors this is the group translation; for Motion2 it matches the
/// (k u^{-1}, x - t) windowed slice; on Heisenberg1 the central twist is
/// dropped so translations stay on-grid (the isometry only needs
/// sum_b |psi(g-b)|^2 db = ||psi||^2, which holds).
SampledSignal windowed_slice(const SampledSignal& f, const Window& psi,
                             const std::vector<std::size_t>& base_multi);

/// Continuous Gabor transform sampled on base x dual: coefficient block at
/// (b, pi) is the group Fourier transform of the windowed slice at b.
struct GaborField {
    std::shared_ptr<const GroupSpec> group;
    BaseGrid base;
    std::vector<std::size_t> base_dims;    ///< points per axis on the base lattice
    std::vector<double> base_weights;      ///< Haar cell measure per base point
    DualGrid dual;
    bool scalar = true;
    /// coeffs[b * dual.size() + i]: scalar kinds
    std::vector<cplx> coeffs;
    /// matrix coefficient blocks, same indexing: operator kinds
    std::vector<ComplexMatrix> coeff_blocks;
    double window_norm_sq = 0.0;
    double signal_l2_sq = 0.0;

    std::size_t base_size() const { return base_weights.size(); }
};

GaborField gabor_transform(const SampledSignal& f, const Window& psi, const BaseGrid& base,
                           const DualOptions& opts = {},
                           Motion2Path path = Motion2Path::Direct);

struct IsometryResult {
    double lhs = 0.0; ///< sum_b w_b sum_i w_i |G(b,i)|^2
    double rhs = 0.0; ///< ||psi||_2^2 ||f||_2^2
    double rel_error = 0.0;
};

/// ||G_psi f||^2 = ||psi||_2^2 ||f||_2^2 on the sampled base x dual.
IsometryResult gabor_isometry_check(const GaborField& field);

} // namespace ncwave
