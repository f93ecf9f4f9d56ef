#pragma once

#include <functional>
#include <vector>

namespace ncwave {

using ObjectiveFn = std::function<double(const std::vector<double>&)>;

struct MinimizeResult {
    std::vector<double> x;
    double value;
    std::size_t evaluations;
};

/// Golden-section search on [lo, hi]; runs until the bracket shrinks below
/// tol or the evaluation budget is spent. Deterministic.
MinimizeResult golden_section_minimize(const ObjectiveFn& fn, double lo, double hi,
                                       std::size_t budget, double tol = 1e-10);

/// Deterministic Nelder-Mead simplex with box clamping (alpha=1, gamma=2,
/// rho=1/2, sigma=1/2). The initial simplex is the box-center plus scaled
/// coordinate steps, so identical inputs always walk the same path.
MinimizeResult nelder_mead_minimize(const ObjectiveFn& fn, const std::vector<double>& lower,
                                    const std::vector<double>& upper, std::size_t budget,
                                    double tol = 1e-10);

} // namespace ncwave
