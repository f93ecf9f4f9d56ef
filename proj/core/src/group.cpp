#include "ncwave/group.hpp"

#include <cmath>
#include <cstdio>

#include "ncwave/errors.hpp"
#include "ncwave/special.hpp"

namespace ncwave {

namespace {
constexpr double kPi = 3.14159265358979323846;

void require_periodic_real(const Grid1D& g, const char* what) {
    if (!g.is_periodic())
        throw ConfigError(std::string("group axis '") + what +
                          "' must use the periodic (FFT-compatible) rule");
}

struct StrideInit {
    std::vector<std::size_t> strides;
    std::size_t total = 1;
};

StrideInit row_major_strides(const std::vector<Axis>& axes) {
    StrideInit init;
    for (const auto& ax : axes) init.total *= ax.grid.size();
    init.strides.resize(axes.size());
    std::size_t s = init.total;
    for (std::size_t a = 0; a < axes.size(); ++a) {
        s /= axes[a].grid.size();
        init.strides[a] = s;
    }
    return init;
}
} // namespace

std::string kind_name(GroupKind k) {
    switch (k) {
        case GroupKind::Euclidean: return "euclidean";
        case GroupKind::Heisenberg1: return "heisenberg1";
        case GroupKind::Motion2: return "motion2";
        case GroupKind::ProductRFinite: return "product_rfinite";
    }
    return "?";
}

std::size_t GroupSpec::flat_index(const std::vector<std::size_t>& multi) const {
    std::size_t flat = 0;
    for (std::size_t a = 0; a < axes_.size(); ++a) flat += multi[a] * strides_[a];
    return flat;
}

void GroupSpec::multi_index(std::size_t flat, std::vector<std::size_t>& multi) const {
    multi.resize(axes_.size());
    for (std::size_t a = 0; a < axes_.size(); ++a) {
        multi[a] = flat / strides_[a];
        flat %= strides_[a];
    }
}

std::shared_ptr<const GroupSpec> make_euclidean(std::vector<Grid1D> axes) {
    if (axes.empty() || axes.size() > 3)
        throw CapabilityError("make_euclidean: 1..3 axes supported");
    auto g = std::shared_ptr<GroupSpec>(new GroupSpec());
    g->kind_ = GroupKind::Euclidean;
    for (std::size_t i = 0; i < axes.size(); ++i) {
        require_periodic_real(axes[i], ("x" + std::to_string(i + 1)).c_str());
        g->axes_.push_back(Axis{"x" + std::to_string(i + 1), AxisType::Real, axes[i], 1.0});
    }
    g->conv_.plancherel_normalizer = 1.0;
    auto init = row_major_strides(g->axes_);
    g->strides_ = std::move(init.strides);
    g->total_ = init.total;
    return g;
}

std::shared_ptr<const GroupSpec> make_heisenberg1(const Grid1D& x, const Grid1D& y,
                                                  const Grid1D& t) {
    require_periodic_real(x, "x");
    require_periodic_real(y, "y");
    require_periodic_real(t, "t");
    auto g = std::shared_ptr<GroupSpec>(new GroupSpec());
    g->kind_ = GroupKind::Heisenberg1;
    g->axes_ = {Axis{"x", AxisType::Real, x, 1.0}, Axis{"y", AxisType::Real, y, 1.0},
                Axis{"t", AxisType::Real, t, 1.0}};
    g->conv_.plancherel_normalizer = 1.0 / (4.0 * kPi * kPi);
    auto init = row_major_strides(g->axes_);
    g->strides_ = std::move(init.strides);
    g->total_ = init.total;
    return g;
}

std::shared_ptr<const GroupSpec> make_motion2(std::size_t n_theta, const Grid1D& x1,
                                              const Grid1D& x2) {
    if (n_theta < 2) throw ConfigError("make_motion2: need at least 2 rotation samples");
    require_periodic_real(x1, "x1");
    require_periodic_real(x2, "x2");
    auto g = std::shared_ptr<GroupSpec>(new GroupSpec());
    g->kind_ = GroupKind::Motion2;
    Grid1D theta = Grid1D::periodic(0.0, 2.0 * kPi, n_theta);
    g->axes_ = {Axis{"theta", AxisType::Circle, theta, 1.0 / (2.0 * kPi)},
                Axis{"x1", AxisType::Real, x1, 1.0}, Axis{"x2", AxisType::Real, x2, 1.0}};
    g->conv_.plancherel_normalizer = 1.0 / (2.0 * kPi);
    auto init = row_major_strides(g->axes_);
    g->strides_ = std::move(init.strides);
    g->total_ = init.total;
    return g;
}

std::shared_ptr<const GroupSpec> make_product_rfinite(const Grid1D& x, std::size_t m) {
    if (m < 2) throw ConfigError("make_product_rfinite: m >= 2 required");
    require_periodic_real(x, "x");
    auto g = std::shared_ptr<GroupSpec>(new GroupSpec());
    g->kind_ = GroupKind::ProductRFinite;
    Grid1D jaxis = Grid1D::periodic(0.0, double(m), m);
    g->axes_ = {Axis{"x", AxisType::Real, x, 1.0},
                Axis{"j", AxisType::Finite, jaxis, 1.0 / double(m)}};
    g->finite_order_ = m;
    g->conv_.plancherel_normalizer = 1.0;
    auto init = row_major_strides(g->axes_);
    g->strides_ = std::move(init.strides);
    g->total_ = init.total;
    return g;
}

double haar_cell_measure(const GroupSpec& g, std::size_t flat) {
    double w = 1.0;
    for (std::size_t a = 0; a < g.axes().size(); ++a) {
        std::size_t idx = (flat / g.strides()[a]) % g.axis(a).grid.size();
        w *= g.axis(a).grid.weight(idx) * g.axis(a).haar_scale;
    }
    return w;
}

double haar_total_mass(const GroupSpec& g) {
    double total = 1.0;
    for (const auto& ax : g.axes()) {
        double s = 0.0;
        for (std::size_t i = 0; i < ax.grid.size(); ++i) s += ax.grid.weight(i);
        total *= s * ax.haar_scale;
    }
    return total;
}

std::size_t DualGrid::matrix_dim() const {
    if (kind == GroupKind::Heisenberg1) return hermite_order;
    if (kind == GroupKind::Motion2) return std::size_t(2 * mode_cutoff + 1);
    return 0;
}

namespace {
std::vector<double> conjugate_freqs(const Grid1D& g) {
    // FFT-conjugate grid: spacing 1/(hi-lo), centered about zero
    std::size_t n = g.size();
    double dw = 1.0 / (g.hi() - g.lo());
    std::vector<double> w(n);
    for (std::size_t k = 0; k < n; ++k) w[k] = (double(k) - double(n / 2)) * dw;
    return w;
}
} // namespace

std::string dual_truncation_summary(const DualGrid& d) {
    char buf[160];
    switch (d.kind) {
        case GroupKind::Euclidean:
            std::snprintf(buf, sizeof buf, "fft;points=%zu", d.size());
            return buf;
        case GroupKind::ProductRFinite:
            std::snprintf(buf, sizeof buf, "fft;points=%zu;characters=%zu", d.size(),
                          d.char_count);
            return buf;
        case GroupKind::Heisenberg1:
            std::snprintf(buf, sizeof buf, "lambda_max=%g;n_lambda=%zu;N=%zu;n_u=%zu", d.cutoff,
                          d.size(), d.hermite_order,
                          d.hermite_grid ? d.hermite_grid->size() : std::size_t(0));
            return buf;
        case GroupKind::Motion2:
            std::snprintf(buf, sizeof buf, "r_max=%g;n_r=%zu;mode_cutoff=%d", d.cutoff, d.size(),
                          d.mode_cutoff);
            return buf;
    }
    return "?";
}

DualGrid dual_grid(const GroupSpec& g, const DualOptions& opts) {
    DualGrid d;
    d.kind = g.kind();
    switch (g.kind()) {
        case GroupKind::Euclidean: {
            std::size_t total = 1;
            for (const auto& ax : g.axes()) {
                d.axis_freqs.push_back(conjugate_freqs(ax.grid));
                total *= ax.grid.size();
            }
            double cell = 1.0;
            for (const auto& ax : g.axes()) cell *= 1.0 / (ax.grid.hi() - ax.grid.lo());
            d.norms.resize(total);
            d.weights.assign(total, cell);
            for (std::size_t i = 0; i < total; ++i) {
                std::size_t rem = i;
                double nsq = 0.0;
                for (std::size_t a = 0; a < g.axes().size(); ++a) {
                    std::size_t idx = rem / g.strides()[a];
                    rem %= g.strides()[a];
                    double w = d.axis_freqs[a][idx];
                    nsq += w * w;
                }
                d.norms[i] = std::sqrt(nsq);
            }
            break;
        }
        case GroupKind::ProductRFinite: {
            const auto& xg = g.axis(0).grid;
            std::size_t m = g.finite_order();
            auto freqs = conjugate_freqs(xg);
            d.axis_freqs.push_back(freqs);
            d.char_count = m;
            double dz = 1.0 / (xg.hi() - xg.lo());
            d.norms.resize(freqs.size() * m);
            d.weights.assign(freqs.size() * m, dz); // characters carry counting weight 1
            for (std::size_t k = 0; k < freqs.size(); ++k)
                for (std::size_t p = 0; p < m; ++p) d.norms[k * m + p] = std::abs(freqs[k]);
            break;
        }
        case GroupKind::Heisenberg1: {
            if (opts.n_lambda < 2 || opts.lambda_max <= 0.0)
                throw ConfigError("dual_grid: need lambda_max > 0 and n_lambda >= 2");
            if (opts.hermite_order == 0 || opts.hermite_order > kHermiteMaxOrder)
                throw CapabilityError("dual_grid: Hermite order outside [1, 256]");
            if (opts.n_u < 8 || opts.u_max <= 0.0)
                throw ConfigError("dual_grid: need u_max > 0 and n_u >= 8");
            double dl = 2.0 * opts.lambda_max / double(opts.n_lambda);
            double c = g.conventions().plancherel_normalizer; // 1/(4 pi^2)
            for (std::size_t i = 0; i < opts.n_lambda; ++i) {
                double lam = -opts.lambda_max + (double(i) + 0.5) * dl; // midpoints avoid 0
                if (lam == 0.0) continue;
                d.lambdas.push_back(lam);
                d.norms.push_back(std::abs(lam));
                d.weights.push_back(c * std::abs(lam) * dl);
            }
            d.hermite_order = opts.hermite_order;
            d.hermite_grid = Grid1D::periodic(-opts.u_max, opts.u_max, opts.n_u);
            d.cutoff = opts.lambda_max;
            break;
        }
        case GroupKind::Motion2: {
            if (opts.n_r < 1 || opts.r_max <= 0.0)
                throw ConfigError("dual_grid: need r_max > 0 and n_r >= 1");
            if (opts.mode_cutoff < 0) throw ConfigError("dual_grid: mode_cutoff >= 0 required");
            double dr = opts.r_max / double(opts.n_r);
            double c = g.conventions().plancherel_normalizer; // 1/(2 pi)
            for (std::size_t i = 0; i < opts.n_r; ++i) {
                double r = (double(i) + 0.5) * dr; // r = 0 excluded (Plancherel-null orbit)
                d.radii.push_back(r);
                d.norms.push_back(r);
                d.weights.push_back(c * r * dr);
            }
            d.mode_cutoff = opts.mode_cutoff;
            d.cutoff = opts.r_max;
            break;
        }
    }
    return d;
}

} // namespace ncwave
