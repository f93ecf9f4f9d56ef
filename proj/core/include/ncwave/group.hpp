#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ncwave/grid.hpp"

namespace ncwave {

enum class GroupKind { Euclidean, Heisenberg1, Motion2, ProductRFinite };

std::string kind_name(GroupKind k);

enum class AxisType { Real, Circle, Finite };

/// One parametrization axis of a group. The Haar cell measure along the axis
/// is grid.weight(i) * haar_scale; compact and finite axes carry
/// haar_scale = 1/(total length) so they integrate to 1.
struct Axis {
    std::string name;
    AxisType type;
    Grid1D grid;
    double haar_scale;
};

/// Fixed analytic conventions for one group kind. These are derivations, not
/// tunables: plancherel_normalizer is the constant c in
///   int |f|^2 dg = c * sum_dual weight_density * ||pi(f)||_HS^2,
/// with weight_density = 1 (Euclidean, R x Z_m), |lambda| d(lambda)
/// (Heisenberg, Schroedinger representations), r dr (Motion2, induced
/// representations).
struct ConventionSet {
    double fourier_kernel_sign = -1.0; ///< e^{sign * 2*pi*i <x,w>} on Euclidean factors
    double plancherel_normalizer = 1.0;
    bool compact_factors_normalized = true;
};

/// A concrete group: parametrization axes + conventions.
///
/// Axis order: Euclidean(n): x1..xn; Heisenberg1: x, y, t;
/// Motion2: theta, x1, x2; ProductRFinite: x, j.
/// Signal values are stored row-major in this axis order.
class GroupSpec {
public:
    GroupKind kind() const { return kind_; }
    const std::vector<Axis>& axes() const { return axes_; }
    const Axis& axis(std::size_t i) const { return axes_[i]; }
    std::size_t total_points() const { return total_; }
    std::size_t finite_order() const { return finite_order_; } ///< m for R x Z_m, else 0
    const ConventionSet& conventions() const { return conv_; }

    /// Row-major strides matching the axis order.
    const std::vector<std::size_t>& strides() const { return strides_; }
    std::size_t flat_index(const std::vector<std::size_t>& multi) const;
    void multi_index(std::size_t flat, std::vector<std::size_t>& multi) const;

    friend std::shared_ptr<const GroupSpec> make_euclidean(std::vector<Grid1D> axes);
    friend std::shared_ptr<const GroupSpec> make_heisenberg1(const Grid1D& x, const Grid1D& y,
                                                             const Grid1D& t);
    friend std::shared_ptr<const GroupSpec> make_motion2(std::size_t n_theta, const Grid1D& x1,
                                                         const Grid1D& x2);
    friend std::shared_ptr<const GroupSpec> make_product_rfinite(const Grid1D& x, std::size_t m);

private:
    GroupSpec() = default;

    GroupKind kind_ = GroupKind::Euclidean;
    std::vector<Axis> axes_;
    std::vector<std::size_t> strides_;
    std::size_t total_ = 0;
    std::size_t finite_order_ = 0;
    ConventionSet conv_;
};

/// Factories. Real axes must use the periodic (FFT-compatible) rule; Euclidean
/// supports 1..3 axes. Motion2 builds its own theta axis, ProductRFinite its
/// own Z_m axis.
std::shared_ptr<const GroupSpec> make_euclidean(std::vector<Grid1D> axes);
std::shared_ptr<const GroupSpec> make_heisenberg1(const Grid1D& x, const Grid1D& y, const Grid1D& t);
std::shared_ptr<const GroupSpec> make_motion2(std::size_t n_theta, const Grid1D& x1, const Grid1D& x2);
std::shared_ptr<const GroupSpec> make_product_rfinite(const Grid1D& x, std::size_t m);

/// Haar measure of the cell at a flat grid index (product of axis weights).
double haar_cell_measure(const GroupSpec& g, std::size_t flat);
/// Total Haar mass of the truncated parametrization box.
double haar_total_mass(const GroupSpec& g);

/// Resolution/truncation parameters for the non-abelian dual sides.
struct DualOptions {
    // Heisenberg1: lambda in [-lambda_max, lambda_max] \ {0}, n_lambda midpoints;
    // N x N operator blocks in the lambda-scaled Hermite basis sampled on
    // [-u_max, u_max] x n_u.
    double lambda_max = 4.0;
    std::size_t n_lambda = 64;
    std::size_t hermite_order = 64;
    double u_max = 16.0;
    std::size_t n_u = 768;
    // Motion2: radii (i+1/2) * r_max/n_r; circular modes |n| <= mode_cutoff.
    double r_max = 8.0;
    std::size_t n_r = 64;
    int mode_cutoff = 32;
};

/// Discretized unitary dual with Plancherel weights.
///
/// One entry per retained dual point. `weights` includes the kind's
/// plancherel_normalizer and the dual cell measure, so a Plancherel right-hand
/// side is literally sum_i weights[i] * (|entry_i|^2 or ||matrix_i||_HS^2).
/// `norms` holds |gamma| as used by frequency moments: |omega| (Euclidean),
/// |lambda| (Heisenberg1), r (Motion2), |z| (R x Z_m).
struct DualGrid {
    GroupKind kind;
    std::vector<double> norms;
    std::vector<double> weights;

    // Euclidean / ProductRFinite: frequency values along each real axis
    // (row-major tensor structure; for ProductRFinite the character index is
    // the innermost axis, char_count = m).
    std::vector<std::vector<double>> axis_freqs;
    std::size_t char_count = 0;

    std::vector<double> lambdas; // Heisenberg1: signed lambda per point
    std::vector<double> radii;   // Motion2: orbit radius per point

    std::size_t hermite_order = 0;
    std::optional<Grid1D> hermite_grid;
    int mode_cutoff = 0;
    double cutoff = 0.0; // lambda_max / r_max; 0 where not applicable

    std::size_t size() const { return norms.size(); }
    std::size_t matrix_dim() const; ///< operator block size (0 for scalar kinds)
};

/// Build the dual grid for a group. Euclidean and R x Z_m ignore `opts`
/// (their duals are the FFT-conjugate grids and the m characters).
DualGrid dual_grid(const GroupSpec& g, const DualOptions& opts = {});

/// Compact "key=value;..." summary of a dual truncation, for reports.
std::string dual_truncation_summary(const DualGrid& d);

} // namespace ncwave
