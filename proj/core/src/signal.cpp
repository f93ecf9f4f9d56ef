#include "ncwave/signal.hpp"

#include <cmath>
#include <random>

#include "ncwave/errors.hpp"
#include "ncwave/special.hpp"

namespace ncwave {

namespace {
constexpr double kPi = 3.14159265358979323846;

void require_axis_type(const Axis& ax, AxisType want, const char* family) {
    if (ax.type != want)
        throw ConfigError(std::string(family) + " factor not valid on axis '" + ax.name + "'");
}

/// Tabulate one factor along its axis.
std::vector<cplx> evaluate_factor(const AxisFactor& factor, const Axis& ax) {
    std::size_t n = ax.grid.size();
    std::vector<cplx> out(n);
    std::visit(
        [&](const auto& fac) {
            using T = std::decay_t<decltype(fac)>;
            if constexpr (std::is_same_v<T, GaussianFactor>) {
                require_axis_type(ax, AxisType::Real, "gaussian");
                if (fac.width <= 0.0) throw ConfigError("gaussian factor: width > 0 required");
                for (std::size_t i = 0; i < n; ++i) {
                    double u = (ax.grid.point(i) - fac.center) / fac.width;
                    out[i] = std::exp(-kPi * u * u);
                }
            } else if constexpr (std::is_same_v<T, BoxFactor>) {
                require_axis_type(ax, AxisType::Real, "box");
                if (fac.hi <= fac.lo) throw ConfigError("box factor: hi > lo required");
                for (std::size_t i = 0; i < n; ++i) {
                    double x = ax.grid.point(i);
                    out[i] = (x >= fac.lo && x < fac.hi) ? 1.0 : 0.0;
                }
            } else if constexpr (std::is_same_v<T, SineGaussianFactor>) {
                require_axis_type(ax, AxisType::Real, "sine_gaussian");
                if (fac.width <= 0.0)
                    throw ConfigError("sine_gaussian factor: width > 0 required");
                for (std::size_t i = 0; i < n; ++i) {
                    double x = ax.grid.point(i) - fac.center;
                    double u = x / fac.width;
                    out[i] = std::sin(2.0 * kPi * fac.freq * x + fac.phase) *
                             std::exp(-kPi * u * u);
                }
            } else if constexpr (std::is_same_v<T, HermiteMixFactor>) {
                require_axis_type(ax, AxisType::Real, "hermite_mix");
                if (fac.width <= 0.0) throw ConfigError("hermite_mix factor: width > 0 required");
                if (fac.weights.empty())
                    throw ConfigError("hermite_mix factor: at least one weight required");
                std::vector<double> vals(fac.weights.size());
                for (std::size_t i = 0; i < n; ++i) {
                    double u = ax.grid.point(i) / fac.width;
                    hermite_values(fac.weights.size(), u, vals.data());
                    double s = 0.0;
                    for (std::size_t k = 0; k < fac.weights.size(); ++k)
                        s += fac.weights[k] * vals[k];
                    out[i] = s;
                }
            } else if constexpr (std::is_same_v<T, ConstFactor>) {
                for (std::size_t i = 0; i < n; ++i) out[i] = 1.0;
            } else if constexpr (std::is_same_v<T, TrigFactor>) {
                require_axis_type(ax, AxisType::Circle, "trig");
                for (std::size_t i = 0; i < n; ++i) {
                    double th = ax.grid.point(i);
                    double s = fac.c0;
                    for (std::size_t k = 0; k < fac.cos_coeff.size(); ++k)
                        s += fac.cos_coeff[k] * std::cos(double(k + 1) * th);
                    for (std::size_t k = 0; k < fac.sin_coeff.size(); ++k)
                        s += fac.sin_coeff[k] * std::sin(double(k + 1) * th);
                    out[i] = s;
                }
            } else if constexpr (std::is_same_v<T, DeltaFactor>) {
                require_axis_type(ax, AxisType::Finite, "delta");
                if (fac.at >= n) throw ConfigError("delta factor: residue out of range");
                for (std::size_t i = 0; i < n; ++i) out[i] = (i == fac.at) ? 1.0 : 0.0;
            } else if constexpr (std::is_same_v<T, WeightsFactor>) {
                require_axis_type(ax, AxisType::Finite, "weights");
                if (fac.weights.size() != n)
                    throw DimensionError("weights factor: need one weight per residue");
                for (std::size_t i = 0; i < n; ++i) out[i] = fac.weights[i];
            }
        },
        factor);
    return out;
}
} // namespace

SampledSignal::SampledSignal(std::shared_ptr<const GroupSpec> g, std::vector<cplx> v)
    : group(std::move(g)), values(std::move(v)) {
    if (!group) throw PreconditionError("SampledSignal: null group");
    if (values.size() != group->total_points())
        throw DimensionError("SampledSignal: value count does not match group grid");
    for (const cplx& z : values)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw DomainError("SampledSignal: non-finite sample");
}

double l2_norm_sq(const SampledSignal& f) {
    if (!f.group) throw PreconditionError("l2_norm_sq: empty signal");
    if (f.values.size() != f.group->total_points())
        throw DimensionError("l2_norm_sq: value count does not match group grid");
    // accumulate axis-by-axis to reuse per-axis weights without a full
    // haar_cell_measure call per sample
    const auto& axes = f.group->axes();
    std::vector<const Grid1D*> grids;
    std::vector<double> scales;
    for (const auto& ax : axes) {
        grids.push_back(&ax.grid);
        scales.push_back(ax.haar_scale);
    }
    double total = 0.0;
    std::vector<std::size_t> multi(axes.size(), 0);
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        double w = 1.0;
        std::size_t rem = i;
        for (std::size_t a = 0; a < axes.size(); ++a) {
            std::size_t idx = rem / f.group->strides()[a];
            rem %= f.group->strides()[a];
            w *= grids[a]->weight(idx) * scales[a];
        }
        total += w * std::norm(f.values[i]);
    }
    return total;
}

SampledSignal make_signal(std::shared_ptr<const GroupSpec> group,
                          const std::vector<AxisFactor>& factors, cplx scale) {
    if (!group) throw PreconditionError("make_signal: null group");
    if (factors.size() != group->axes().size())
        throw DimensionError("make_signal: need exactly one factor per axis");
    std::vector<std::vector<cplx>> tab;
    for (std::size_t a = 0; a < factors.size(); ++a)
        tab.push_back(evaluate_factor(factors[a], group->axis(a)));
    std::vector<cplx> values(group->total_points());
    for (std::size_t i = 0; i < values.size(); ++i) {
        cplx v = scale;
        std::size_t rem = i;
        for (std::size_t a = 0; a < tab.size(); ++a) {
            std::size_t idx = rem / group->strides()[a];
            rem %= group->strides()[a];
            v *= tab[a][idx];
        }
        values[i] = v;
    }
    return SampledSignal(std::move(group), std::move(values));
}

SampledSignal random_smooth_signal(std::shared_ptr<const GroupSpec> group, std::uint64_t seed,
                                   std::size_t bumps) {
    if (!group) throw PreconditionError("random_smooth_signal: null group");
    if (bumps == 0) throw ConfigError("random_smooth_signal: bumps >= 1 required");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    // per-axis tables, one per bump; the signal is sum_b prod_a table[b][a]
    std::vector<std::vector<std::vector<cplx>>> tab(bumps);
    for (std::size_t b = 0; b < bumps; ++b) {
        tab[b].resize(group->axes().size());
        for (std::size_t a = 0; a < group->axes().size(); ++a) {
            const Axis& ax = group->axis(a);
            std::size_t n = ax.grid.size();
            auto& col = tab[b][a];
            col.resize(n);
            if (ax.type == AxisType::Real) {
                double span = ax.grid.hi() - ax.grid.lo();
                // keep bump centers in the middle half so mass stays in the box
                double center = ax.grid.lo() + span * (0.3 + 0.4 * unit(rng));
                double width = span * (0.06 + 0.10 * unit(rng));
                double freq = 2.0 * (unit(rng) - 0.5) / width * 0.25;
                double phase = 2.0 * kPi * unit(rng);
                for (std::size_t i = 0; i < n; ++i) {
                    double u = (ax.grid.point(i) - center) / width;
                    col[i] = std::exp(-kPi * u * u) *
                             std::exp(cplx(0.0, 2.0 * kPi * freq * ax.grid.point(i) + phase));
                }
            } else if (ax.type == AxisType::Circle) {
                double c0 = 0.5 + unit(rng);
                double a1 = unit(rng) - 0.5, b1 = unit(rng) - 0.5;
                double a2 = 0.5 * (unit(rng) - 0.5);
                for (std::size_t i = 0; i < n; ++i) {
                    double th = ax.grid.point(i);
                    col[i] = c0 + a1 * std::cos(th) + b1 * std::sin(th) +
                             a2 * std::cos(2.0 * th);
                }
            } else { // Finite
                for (std::size_t i = 0; i < n; ++i)
                    col[i] = cplx(unit(rng) - 0.5, unit(rng) - 0.5);
            }
        }
    }
    std::vector<cplx> values(group->total_points(), 0.0);
    for (std::size_t b = 0; b < bumps; ++b) {
        for (std::size_t i = 0; i < values.size(); ++i) {
            cplx v = 1.0;
            std::size_t rem = i;
            for (std::size_t a = 0; a < group->axes().size(); ++a) {
                std::size_t idx = rem / group->strides()[a];
                rem %= group->strides()[a];
                v *= tab[b][a][idx];
            }
            values[i] += v;
        }
    }
    return SampledSignal(std::move(group), std::move(values));
}

} // namespace ncwave
