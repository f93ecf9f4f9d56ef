#include "ncwave/uncertainty.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "ncwave/errors.hpp"
#include "ncwave/optim.hpp"

namespace ncwave {

namespace {
constexpr double kPi = 3.14159265358979323846;

void require_orders(const MomentSpec& m, const char* fn) {
    if (!(m.a >= 1.0) || !(m.b >= 1.0))
        throw ConfigError(std::string(fn) + ": moment orders a, b >= 1 required");
}

/// Axes whose coordinates enter the time moment.
std::vector<std::size_t> moment_axes(const GroupSpec& g) {
    switch (g.kind()) {
        case GroupKind::Euclidean: {
            std::vector<std::size_t> all(g.axes().size());
            for (std::size_t a = 0; a < all.size(); ++a) all[a] = a;
            return all;
        }
        case GroupKind::Heisenberg1: return {2}; // central coordinate only
        case GroupKind::Motion2: return {1, 2};  // translation plane
        case GroupKind::ProductRFinite: return {0};
    }
    return {};
}

double dual_point_energy(const FourierData& fd, std::size_t i) {
    return fd.scalar() ? std::norm(fd.scalar_entries()[i]) : hs_norm_sq(fd.matrix_entries()[i]);
}

/// Shared top-octave test: does |gamma| > max/2 carry more than 5% of the
/// weighted moment? `energy(i)` must give the (aggregated) energy at dual
/// point i.
bool top_octave_dominates(const DualGrid& dual, double b,
                          const std::function<double(std::size_t)>& energy) {
    double gmax = 0.0;
    for (double g : dual.norms) gmax = std::max(gmax, g);
    if (gmax <= 0.0) return false;
    double total = 0.0, top = 0.0;
    for (std::size_t i = 0; i < dual.size(); ++i) {
        double c = dual.weights[i] * std::pow(dual.norms[i], 2.0 * b) * energy(i);
        total += c;
        if (dual.norms[i] > 0.5 * gmax) top += c;
    }
    if (total <= 0.0) return false;
    return top > 0.05 * total;
}
} // namespace

double time_moment(const SampledSignal& f, double a) {
    if (!f.group) throw PreconditionError("time_moment: empty signal");
    if (!(a > 0.0)) throw ConfigError("time_moment: order a > 0 required");
    const GroupSpec& g = *f.group;
    auto axes = moment_axes(g);
    double total = 0.0;
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        double w = haar_cell_measure(g, i);
        double nsq = 0.0;
        for (std::size_t a_idx : axes) {
            std::size_t idx = (i / g.strides()[a_idx]) % g.axis(a_idx).grid.size();
            double x = g.axis(a_idx).grid.point(idx);
            nsq += x * x;
        }
        total += w * std::pow(nsq, a) * std::norm(f.values[i]);
    }
    return total;
}

double freq_moment(const FourierData& fd, double b) {
    if (!(b > 0.0)) throw ConfigError("freq_moment: order b > 0 required");
    double total = 0.0;
    for (std::size_t i = 0; i < fd.dual.size(); ++i)
        total += fd.dual.weights[i] * std::pow(fd.dual.norms[i], 2.0 * b) *
                 dual_point_energy(fd, i);
    return total;
}

double freq_moment(const GaborField& field, double b) {
    if (!(b > 0.0)) throw ConfigError("freq_moment: order b > 0 required");
    std::size_t ds = field.dual.size();
    double total = 0.0;
    for (std::size_t i = 0; i < ds; ++i) {
        double e = 0.0;
        for (std::size_t bp = 0; bp < field.base_size(); ++bp)
            e += field.base_weights[bp] *
                 (field.scalar ? std::norm(field.coeffs[bp * ds + i])
                               : hs_norm_sq(field.coeff_blocks[bp * ds + i]));
        total += field.dual.weights[i] * std::pow(field.dual.norms[i], 2.0 * b) * e;
    }
    return total;
}

bool moment_diverges(const FourierData& fd, double b) {
    return top_octave_dominates(fd.dual, b, [&](std::size_t i) { return dual_point_energy(fd, i); });
}

bool moment_diverges(const GaborField& field, double b) {
    std::size_t ds = field.dual.size();
    return top_octave_dominates(field.dual, b, [&](std::size_t i) {
        double e = 0.0;
        for (std::size_t bp = 0; bp < field.base_size(); ++bp)
            e += field.base_weights[bp] *
                 (field.scalar ? std::norm(field.coeffs[bp * ds + i])
                               : hs_norm_sq(field.coeff_blocks[bp * ds + i]));
        return e;
    });
}

UncertaintyReport heisenberg_report(const SampledSignal& f, const FourierData& fd,
                                    const MomentSpec& m) {
    require_orders(m, "heisenberg_report");
    if (!f.group || !fd.group) throw PreconditionError("heisenberg_report: empty inputs");
    if (f.group.get() != fd.group.get())
        throw PreconditionError("heisenberg_report: transform comes from a different group");

    UncertaintyReport rep;
    rep.group = kind_name(f.group->kind());
    rep.a = m.a;
    rep.b = m.b;
    rep.norm_sq = l2_norm_sq(f);
    if (rep.norm_sq < 1e-280) throw DegenerateSignalError("heisenberg_report: zero signal");
    rep.time_moment = time_moment(f, m.a);
    rep.freq_moment = freq_moment(fd, m.b);
    rep.lhs = std::pow(rep.norm_sq, 0.5 * (1.0 / m.a + 1.0 / m.b));
    rep.rhs_without_constant =
        std::pow(rep.time_moment, 0.5 / m.a) * std::pow(rep.freq_moment, 0.5 / m.b);
    if (rep.rhs_without_constant <= 0.0)
        throw DegenerateSignalError("heisenberg_report: vanishing moment product");
    rep.min_constant = rep.lhs / rep.rhs_without_constant;
    rep.divergence_flag = moment_diverges(fd, m.b);
    rep.captured_fraction = fd.captured_fraction();
    rep.truncation = dual_truncation_summary(fd.dual);

    if (f.group->kind() == GroupKind::Euclidean && f.group->axes().size() == 1 &&
        m.a == 1.0 && m.b == 1.0 && rep.min_constant > 4.0 * kPi * (1.0 + 1e-6))
        throw InequalityViolation("heisenberg_report: scalar sharp bound 4*pi exceeded");
    return rep;
}

UncertaintyReport gabor_heisenberg_report(const SampledSignal& f, const GaborField& field,
                                          const MomentSpec& m) {
    require_orders(m, "gabor_heisenberg_report");
    if (!f.group || !field.group) throw PreconditionError("gabor_heisenberg_report: empty inputs");
    if (f.group.get() != field.group.get())
        throw PreconditionError("gabor_heisenberg_report: field comes from a different group");

    UncertaintyReport rep;
    rep.group = kind_name(f.group->kind());
    rep.a = m.a;
    rep.b = m.b;
    rep.norm_sq = l2_norm_sq(f);
    if (rep.norm_sq < 1e-280 || field.window_norm_sq <= 0.0)
        throw DegenerateSignalError("gabor_heisenberg_report: zero signal or window");
    rep.time_moment = time_moment(f, m.a);
    rep.freq_moment = freq_moment(field, m.b);
    rep.lhs = std::pow(field.window_norm_sq, 0.5 / m.b) *
              std::pow(rep.norm_sq, 0.5 * (1.0 / m.a + 1.0 / m.b));
    rep.rhs_without_constant =
        std::pow(rep.time_moment, 0.5 / m.a) * std::pow(rep.freq_moment, 0.5 / m.b);
    if (rep.rhs_without_constant <= 0.0)
        throw DegenerateSignalError("gabor_heisenberg_report: vanishing moment product");
    rep.min_constant = rep.lhs / rep.rhs_without_constant;
    rep.divergence_flag = moment_diverges(field, m.b);
    IsometryResult iso = gabor_isometry_check(field);
    rep.captured_fraction = iso.lhs / iso.rhs;
    rep.truncation = dual_truncation_summary(field.dual);
    return rep;
}

HoelderResult hoelder_interpolation_check(const FourierData& fd, double b) {
    if (!(b >= 1.0)) throw ConfigError("hoelder_interpolation_check: b >= 1 required");
    double lhs = 0.0, mom = 0.0, energy = 0.0;
    for (std::size_t i = 0; i < fd.dual.size(); ++i) {
        double we = fd.dual.weights[i] * dual_point_energy(fd, i);
        double g = fd.dual.norms[i];
        lhs += we * g * g;
        mom += we * std::pow(g, 2.0 * b);
        energy += we;
    }
    HoelderResult res;
    res.lhs = lhs;
    res.rhs = std::pow(mom, 1.0 / b) * std::pow(energy, 1.0 - 1.0 / b);
    res.holds = res.lhs <= res.rhs * (1.0 + 1e-12);
    return res;
}

namespace {
std::size_t family_dim(WindowFamily f) {
    return f == WindowFamily::GaussianWidth ? 1 : 2;
}

SampledSignal family_window(const SampledSignal& f, WindowFamily family,
                            const std::vector<double>& params) {
    const GroupSpec& g = *f.group;
    if (g.kind() != GroupKind::Euclidean)
        throw CapabilityError("optimize_window: window families are Euclidean-only");
    if (params.size() != family_dim(family))
        throw DimensionError("optimize_window: wrong parameter count for family");
    double s = params[0];
    if (!(s > 0.0)) throw ConfigError("optimize_window: width parameter must be positive");
    std::vector<AxisFactor> factors;
    switch (family) {
        case WindowFamily::GaussianWidth:
            for (std::size_t a = 0; a < g.axes().size(); ++a)
                factors.push_back(GaussianFactor{s, 0.0});
            break;
        case WindowFamily::GaussianWidthCenter:
            if (g.axes().size() != 1)
                throw CapabilityError("optimize_window: centered family needs 1 axis");
            factors.push_back(GaussianFactor{s, params[1]});
            break;
        case WindowFamily::GaussianHermiteMix:
            if (g.axes().size() != 1)
                throw CapabilityError("optimize_window: hermite-mix family needs 1 axis");
            factors.push_back(HermiteMixFactor{s, {1.0, params[1]}});
            break;
    }
    return make_signal(f.group, factors);
}
} // namespace

double window_objective(const SampledSignal& f, const OptimizeOptions& opts,
                        const std::vector<double>& params, bool* diverged) {
    require_orders(opts.moments, "window_objective");
    if (!f.group) throw PreconditionError("window_objective: empty signal");
    Window psi{family_window(f, opts.family, params)};
    BaseGrid base = opts.base;
    if (base.strides.empty()) base.strides.assign(f.group->axes().size(), 1);
    GaborField field = gabor_transform(f, psi, base);
    double a = opts.moments.a, b = opts.moments.b;
    double tm = time_moment(f, a);
    double fm = freq_moment(field, b);
    double nsq = field.signal_l2_sq;
    if (nsq < 1e-280) throw DegenerateSignalError("window_objective: zero signal");
    if (diverged) *diverged = moment_diverges(field, b);
    return std::pow(tm, 0.5 / a) * std::pow(fm, 0.5 / b) /
           std::pow(nsq, 0.5 * (1.0 / a + 1.0 / b));
}

OptimizeResult optimize_window(const SampledSignal& f, const OptimizeOptions& opts) {
    std::size_t dim = family_dim(opts.family);
    if (opts.lower.size() != dim || opts.upper.size() != dim)
        throw ConfigError("optimize_window: bounds must match the family parameter count");
    for (std::size_t i = 0; i < dim; ++i)
        if (!(opts.lower[i] < opts.upper[i]))
            throw ConfigError("optimize_window: lower bound must be below upper bound");
    if (opts.budget < 8) throw ConfigError("optimize_window: budget >= 8 required");

    OptimizeResult result;
    ObjectiveFn fn = [&](const std::vector<double>& p) {
        double v = window_objective(f, opts, p, nullptr);
        result.trace.push_back(OptimizeTracePoint{p, v});
        return v;
    };
    if (dim == 1)
        golden_section_minimize(fn, opts.lower[0], opts.upper[0], opts.budget);
    else
        nelder_mead_minimize(fn, opts.lower, opts.upper, opts.budget);

    // pick from the trace so ties resolve to the lexicographically smallest
    // parameter vector regardless of evaluation order
    double best = result.trace.front().objective;
    for (const auto& tp : result.trace) best = std::min(best, tp.objective);
    double tol = 1e-12 * std::max(1.0, std::abs(best));
    const OptimizeTracePoint* pick = nullptr;
    for (const auto& tp : result.trace) {
        if (tp.objective > best + tol) continue;
        if (!pick || std::lexicographical_compare(tp.params.begin(), tp.params.end(),
                                                  pick->params.begin(), pick->params.end()))
            pick = &tp;
    }
    result.best_params = pick->params;
    bool div = false;
    result.best_objective = window_objective(f, opts, result.best_params, &div);
    result.divergence_flag = div;
    return result;
}

} // namespace ncwave
