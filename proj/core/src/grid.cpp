#include "ncwave/grid.hpp"

#include <cmath>

#include "ncwave/errors.hpp"

namespace ncwave {

Grid1D::Grid1D(double lo, double hi, std::size_t n, bool periodic)
    : lo_(lo), hi_(hi), periodic_(periodic) {
    if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi))
        throw DomainError("Grid1D: need finite lo < hi");
    if (n < 2) throw DomainError("Grid1D: need at least 2 points");

    pts_.resize(n);
    wts_.resize(n);
    if (periodic) {
        step_ = (hi - lo) / double(n);
        for (std::size_t i = 0; i < n; ++i) {
            pts_[i] = lo + double(i) * step_;
            wts_[i] = step_;
        }
    } else {
        step_ = (hi - lo) / double(n - 1);
        for (std::size_t i = 0; i < n; ++i) {
            pts_[i] = lo + double(i) * step_;
            wts_[i] = step_;
        }
        pts_[n - 1] = hi; // avoid accumulated rounding at the right end
        if (n >= 8) {
            // trapezoid + 3rd-order Gregory end corrections: exact on cubics
            static const double c[3] = {3.0 / 8.0, 7.0 / 6.0, 23.0 / 24.0};
            for (std::size_t i = 0; i < 3; ++i) {
                wts_[i] = c[i] * step_;
                wts_[n - 1 - i] = c[i] * step_;
            }
        } else {
            wts_[0] = 0.5 * step_;
            wts_[n - 1] = 0.5 * step_;
        }
    }
}

Grid1D Grid1D::periodic(double lo, double hi, std::size_t n) { return Grid1D(lo, hi, n, true); }
Grid1D Grid1D::closed(double lo, double hi, std::size_t n) { return Grid1D(lo, hi, n, false); }

namespace {
template <typename T>
T integrate_impl(const std::vector<T>& samples, const Grid1D& grid) {
    if (samples.size() != grid.size())
        throw DimensionError("quadrature_integrate: samples do not match grid");
    T acc{};
    for (std::size_t i = 0; i < samples.size(); ++i) acc += samples[i] * grid.weight(i);
    return acc;
}
} // namespace

double quadrature_integrate(const std::vector<double>& samples, const Grid1D& grid) {
    return integrate_impl(samples, grid);
}

cplx quadrature_integrate(const std::vector<cplx>& samples, const Grid1D& grid) {
    return integrate_impl(samples, grid);
}

} // namespace ncwave
