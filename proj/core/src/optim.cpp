#include "ncwave/optim.hpp"

#include <algorithm>
#include <cmath>

#include "ncwave/errors.hpp"

namespace ncwave {

MinimizeResult golden_section_minimize(const ObjectiveFn& fn, double lo, double hi,
                                       std::size_t budget, double tol) {
    if (!(lo < hi)) throw ConfigError("golden_section_minimize: lo < hi required");
    if (budget < 4) throw ConfigError("golden_section_minimize: budget >= 4 required");
    const double R = 0.6180339887498949; // (sqrt(5)-1)/2
    std::size_t evals = 0;
    auto eval = [&](double x) {
        ++evals;
        return fn({x});
    };
    double a = lo, b = hi;
    double x1 = b - R * (b - a);
    double x2 = a + R * (b - a);
    double f1 = eval(x1), f2 = eval(x2);
    while (evals < budget && (b - a) > tol) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - R * (b - a);
            f1 = eval(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + R * (b - a);
            f2 = eval(x2);
        }
    }
    MinimizeResult res;
    if (f1 <= f2) {
        res.x = {x1};
        res.value = f1;
    } else {
        res.x = {x2};
        res.value = f2;
    }
    res.evaluations = evals;
    return res;
}

MinimizeResult nelder_mead_minimize(const ObjectiveFn& fn, const std::vector<double>& lower,
                                    const std::vector<double>& upper, std::size_t budget,
                                    double tol) {
    std::size_t n = lower.size();
    if (n == 0 || upper.size() != n)
        throw ConfigError("nelder_mead_minimize: bound dimensions must match");
    for (std::size_t i = 0; i < n; ++i)
        if (!(lower[i] < upper[i]))
            throw ConfigError("nelder_mead_minimize: lower < upper required");
    if (budget < n + 2) throw ConfigError("nelder_mead_minimize: budget too small");

    auto clamp = [&](std::vector<double> x) {
        for (std::size_t i = 0; i < n; ++i) x[i] = std::clamp(x[i], lower[i], upper[i]);
        return x;
    };
    std::size_t evals = 0;
    auto eval = [&](const std::vector<double>& x) {
        ++evals;
        return fn(x);
    };

    // simplex: box center plus a 1/4-box step along each coordinate
    std::vector<std::vector<double>> pts(n + 1);
    std::vector<double> vals(n + 1);
    std::vector<double> center(n);
    for (std::size_t i = 0; i < n; ++i) center[i] = 0.5 * (lower[i] + upper[i]);
    pts[0] = center;
    for (std::size_t i = 0; i < n; ++i) {
        pts[i + 1] = center;
        pts[i + 1][i] += 0.25 * (upper[i] - lower[i]);
    }
    for (std::size_t i = 0; i <= n; ++i) vals[i] = eval(pts[i]);

    const double alpha = 1.0, gamma = 2.0, rho = 0.5, sigma = 0.5;
    auto order = [&] {
        std::vector<std::size_t> idx(n + 1);
        for (std::size_t i = 0; i <= n; ++i) idx[i] = i;
        std::stable_sort(idx.begin(), idx.end(),
                         [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
        std::vector<std::vector<double>> p2(n + 1);
        std::vector<double> v2(n + 1);
        for (std::size_t i = 0; i <= n; ++i) {
            p2[i] = pts[idx[i]];
            v2[i] = vals[idx[i]];
        }
        pts.swap(p2);
        vals.swap(v2);
    };

    order();
    while (evals < budget) {
        // spread termination on both values and vertices
        double vspread = vals[n] - vals[0];
        double xspread = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            xspread = std::max(xspread, std::abs(pts[n][i] - pts[0][i]));
        if (vspread < tol && xspread < tol) break;

        std::vector<double> cen(n, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t v = 0; v < n; ++v) cen[i] += pts[v][i];
            cen[i] /= double(n);
        }
        std::vector<double> xr(n);
        for (std::size_t i = 0; i < n; ++i) xr[i] = cen[i] + alpha * (cen[i] - pts[n][i]);
        xr = clamp(std::move(xr));
        double fr = eval(xr);
        if (fr < vals[0]) {
            std::vector<double> xe(n);
            for (std::size_t i = 0; i < n; ++i) xe[i] = cen[i] + gamma * (xr[i] - cen[i]);
            xe = clamp(std::move(xe));
            if (evals >= budget) {
                pts[n] = xr;
                vals[n] = fr;
                order();
                break;
            }
            double fe = eval(xe);
            if (fe < fr) {
                pts[n] = xe;
                vals[n] = fe;
            } else {
                pts[n] = xr;
                vals[n] = fr;
            }
        } else if (fr < vals[n - 1]) {
            pts[n] = xr;
            vals[n] = fr;
        } else {
            std::vector<double> xc(n);
            const std::vector<double>& towards = fr < vals[n] ? xr : pts[n];
            for (std::size_t i = 0; i < n; ++i) xc[i] = cen[i] + rho * (towards[i] - cen[i]);
            xc = clamp(std::move(xc));
            if (evals >= budget) break;
            double fc = eval(xc);
            if (fc < std::min(fr, vals[n])) {
                pts[n] = xc;
                vals[n] = fc;
            } else {
                // shrink towards the best vertex
                for (std::size_t v = 1; v <= n; ++v) {
                    for (std::size_t i = 0; i < n; ++i)
                        pts[v][i] = pts[0][i] + sigma * (pts[v][i] - pts[0][i]);
                    pts[v] = clamp(std::move(pts[v]));
                    if (evals >= budget) break;
                    vals[v] = eval(pts[v]);
                }
            }
        }
        order();
    }
    return MinimizeResult{pts[0], vals[0], evals};
}

} // namespace ncwave
