#pragma once

#include <cstdint>
#include <memory>
#include <variant>
#include <vector>

#include "ncwave/group.hpp"

namespace ncwave {

/// Complex samples on the parametrization grid of a group, row-major in the
/// group's axis order. Values must be finite.
struct SampledSignal {
    std::shared_ptr<const GroupSpec> group;
    std::vector<cplx> values;

    SampledSignal() = default;
    SampledSignal(std::shared_ptr<const GroupSpec> g, std::vector<cplx> v);
};

/// Haar-weighted squared L^2 norm.
double l2_norm_sq(const SampledSignal& f);

/// Named per-axis signal factors; a signal is the product over axes.
struct GaussianFactor { double width = 1.0; double center = 0.0; };
struct BoxFactor { double lo = 0.0; double hi = 1.0; };
struct SineGaussianFactor { double freq = 1.0; double width = 1.0; double center = 0.0; double phase = 0.0; };
struct HermiteMixFactor { double width = 1.0; std::vector<double> weights; }; // sum_k w_k h_k(x/width)
struct ConstFactor {};
/// Circle axes: c0 + sum_k (a_k cos k*theta + b_k sin k*theta).
struct TrigFactor { double c0 = 1.0; std::vector<double> cos_coeff, sin_coeff; };
/// Finite axes: unit mass at one residue.
struct DeltaFactor { std::size_t at = 0; };
/// Finite axes: arbitrary complex weights (size m).
struct WeightsFactor { std::vector<cplx> weights; };

using AxisFactor = std::variant<GaussianFactor, BoxFactor, SineGaussianFactor, HermiteMixFactor,
                                ConstFactor, TrigFactor, DeltaFactor, WeightsFactor>;

/// Evaluate a product signal on the group grid. One factor per axis; factor
/// families must suit the axis type (Gaussian/Box/SineGaussian/HermiteMix on
/// real axes, Trig/Const on the circle, Delta/Weights/Const on finite axes).
SampledSignal make_signal(std::shared_ptr<const GroupSpec> group,
                          const std::vector<AxisFactor>& factors, cplx scale = 1.0);

/// Deterministic smooth test signal: a seeded sum of a few complex Gaussian
/// bumps (real axes), low trigonometric modes (circle axes) and random weights
/// (finite axes).
SampledSignal random_smooth_signal(std::shared_ptr<const GroupSpec> group, std::uint64_t seed,
                                   std::size_t bumps = 4);

} // namespace ncwave
