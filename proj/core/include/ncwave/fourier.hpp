#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "ncwave/complex_matrix.hpp"
#include "ncwave/group.hpp"
#include "ncwave/signal.hpp"

namespace ncwave {

/// Which evaluation route computes the Motion2 matrix coefficients' circle
/// integral: numeric quadrature on the representation-space grid, or the
/// Bessel expansion of the plane-wave kernel. Both must agree; Direct is the
/// default, Bessel the cross-check (and the faster choice for large grids).
enum class Motion2Path { Direct, Bessel };

/// Basis bookkeeping attached to operator-valued transforms.
struct BasisDescriptor {
    std::string family;    // "circular-modes" (Motion2) or "hermite-lambda-scaled" (H1)
    std::size_t dimension = 0;
};

/// Group Fourier transform of one signal: scalar entries on abelian duals,
/// operator blocks elsewhere. Entry i corresponds to dual point i of `dual`.
struct FourierData {
    std::shared_ptr<const GroupSpec> group;
    DualGrid dual;
    BasisDescriptor basis;
    std::variant<std::vector<cplx>, std::vector<ComplexMatrix>> entries;
    double source_l2_sq = 0.0; ///< Haar-weighted ||f||_2^2 of the transformed signal

    bool scalar() const { return entries.index() == 0; }
    const std::vector<cplx>& scalar_entries() const { return std::get<0>(entries); }
    const std::vector<ComplexMatrix>& matrix_entries() const { return std::get<1>(entries); }

    /// Plancherel mass on the truncated dual: sum_i w_i |entry_i|^2 (or HS^2).
    double dual_energy() const;
    /// dual_energy / source_l2_sq: fraction of the signal's energy the
    /// truncated dual retains.
    double captured_fraction() const;
};

/// f_hat(w) = int f(x) e^{-2 pi i <w,x>} dx on the FFT-conjugate dual grid.
/// Exact Parseval: sum |f_hat|^2 dw equals the grid l2_norm_sq to rounding.
FourierData fourier_euclidean(const SampledSignal& f);

/// Operator blocks <pi_lambda(f) h_k, h_j> in the lambda-scaled Hermite basis,
/// for the Schroedinger representation
///   pi_lambda(x,y,t) phi(u) = e^{i l t} e^{i l (xu + xy/2)} phi(u+y).
/// Computed by quadrature of the representation action; cost is
/// O(n_lambda * n_u * nx * ny) after the t-transform.
FourierData fourier_heisenberg(const SampledSignal& f, const DualOptions& opts);

/// Operator blocks of the induced representation
///   pi_r(k,x) xi(s) = e^{i <s.l, x>} xi(k^{-1} s),  |l| = r,
/// in the circular mode basis e^{i n theta}, |n| <= mode_cutoff. For l != 0
/// the SO(2) stabilizer is trivial, so each orbit radius carries exactly one
/// block; r = 0 is excluded (Plancherel-null).
FourierData fourier_motion2(const SampledSignal& f, const DualOptions& opts,
                            Motion2Path path = Motion2Path::Direct);

/// f_hat(z, p) = (1/m) sum_j e^{-2 pi i j p / m} (FT_x f(., j))(z).
FourierData fourier_product_rfinite(const SampledSignal& f);

/// Kind dispatch over the four transforms above.
FourierData group_fourier(const SampledSignal& f, const DualOptions& opts = {},
                          Motion2Path path = Motion2Path::Direct);

struct PlancherelResult {
    double lhs = 0.0;       ///< int |f|^2 dg
    double rhs = 0.0;       ///< dual-weighted transform energy
    double rel_error = 0.0; ///< |lhs-rhs| / lhs
};

/// Verify int |f|^2 dg against the dual side. `fd` must have been produced
/// from `f` (checked via group identity and stored source norm).
/// Throws DegenerateSignalError for (numerically) zero signals.
PlancherelResult plancherel_check(const SampledSignal& f, const FourierData& fd);

struct DerivativeIdentityResult {
    double residual = 0.0; ///< ||FT(D1 f) - 2 pi i w1 FT(f)||_2 / ||2 pi i w1 FT(f)||_2
};

/// Check FT(d f/d x1) = 2 pi i w1 FT(f) with a 4th-order central difference
/// along the first axis (cyclic). Euclidean kinds only; needs >= 5 points.
DerivativeIdentityResult fourier_derivative_identity_check(const SampledSignal& f);

} // namespace ncwave
