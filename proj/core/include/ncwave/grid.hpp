#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace ncwave {

using cplx = std::complex<double>;

/// One uniform sampling axis with per-point quadrature weights.
///
/// Two rules are provided:
///  - periodic(lo, hi, n): n points at lo + j*(hi-lo)/n, all weights equal.
///    This is the trapezoid rule for signals that are periodic on [lo,hi) or
///    decay to ~0 at the ends, and it is the sampling an FFT expects: the
///    conjugate frequency grid has spacing exactly 1/(hi-lo).
///  - closed(lo, hi, n): n points spanning [lo,hi] inclusive, trapezoid
///    weights with 3rd-order endpoint corrections (h*[3/8, 7/6, 23/24, 1, ...]),
///    exact on cubics. Falls back to plain trapezoid for n < 8.
///
/// Invariants: lo < hi, n >= 2, weights sum to (hi-lo) within 1e-12 relative.
class Grid1D {
public:
    static Grid1D periodic(double lo, double hi, std::size_t n);
    static Grid1D closed(double lo, double hi, std::size_t n);

    double lo() const { return lo_; }
    double hi() const { return hi_; }
    std::size_t size() const { return pts_.size(); }
    double spacing() const { return step_; }
    bool is_periodic() const { return periodic_; }

    double point(std::size_t i) const { return pts_[i]; }
    double weight(std::size_t i) const { return wts_[i]; }
    const std::vector<double>& points() const { return pts_; }
    const std::vector<double>& weights() const { return wts_; }

private:
    Grid1D(double lo, double hi, std::size_t n, bool periodic);

    double lo_, hi_, step_;
    bool periodic_;
    std::vector<double> pts_, wts_;
};

/// Weighted sum of samples against grid weights. Sizes must match.
double quadrature_integrate(const std::vector<double>& samples, const Grid1D& grid);
cplx quadrature_integrate(const std::vector<cplx>& samples, const Grid1D& grid);

} // namespace ncwave
