#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ncwave/fourier.hpp"
#include "ncwave/gabor.hpp"

namespace ncwave {

/// Moment orders; the uncertainty inequalities require a, b >= 1.
struct MomentSpec {
    double a = 1.0;
    double b = 1.0;
};

/// One evaluated uncertainty inequality
///   ||f||^(1/a+1/b) <= C * time^(1/2a) * freq^(1/2b)
/// (with an extra ||psi||^(1/b) factor on the left in the Gabor variant).
/// min_constant = lhs / rhs_without_constant, so the scalar sharp bound reads
/// min_constant <= 4*pi.
struct UncertaintyReport {
    std::string group;
    double a = 1.0, b = 1.0;
    double norm_sq = 0.0;
    double time_moment = 0.0;
    double freq_moment = 0.0;
    double lhs = 0.0;
    double rhs_without_constant = 0.0;
    double min_constant = 0.0;
    bool divergence_flag = false;
    double captured_fraction = 1.0;
    std::string truncation; ///< dual truncation / basis size summary
};

/// int |x|^{2a} |f|^2 dg over the moment-carrying coordinates: all axes
/// (Euclidean), the R^2 factor (Motion2), the R factor (R x Z_m), and the
/// central t only (Heisenberg1).
double time_moment(const SampledSignal& f, double a);

/// sum_i w_i |gamma_i|^{2b} (|entry_i|^2 or ||matrix_i||_HS^2).
double freq_moment(const FourierData& fd, double b);
/// Same over a Gabor field: base-weighted sum of per-slice dual moments.
double freq_moment(const GaborField& field, double b);

/// True when the top octave of the dual (|gamma| > max/2) contributes more
/// than 5% of the weighted moment: the continuum moment is then not resolved
/// by this truncation.
bool moment_diverges(const FourierData& fd, double b);
bool moment_diverges(const GaborField& field, double b);

/// Fourier-side report. For Euclidean(1) with a = b = 1 the sharp bound
/// min_constant <= 4*pi*(1+1e-6) is asserted (InequalityViolation on failure).
UncertaintyReport heisenberg_report(const SampledSignal& f, const FourierData& fd,
                                    const MomentSpec& m);

/// Gabor variant: lhs = ||psi||^{1/b} ||f||^{1/a+1/b}, freq side integrates
/// |gamma|^{2b} over base x dual.
UncertaintyReport gabor_heisenberg_report(const SampledSignal& f, const GaborField& field,
                                          const MomentSpec& m);

struct HoelderResult {
    double lhs = 0.0; ///< sum w |gamma|^2 E
    double rhs = 0.0; ///< (sum w |gamma|^{2b} E)^{1/b} (sum w E)^{1-1/b}
    bool holds = false;
};

/// Discrete Hoelder interpolation between the b-weighted moment and the plain
/// dual energy; holds with slack 1e-12 for every b > 1.
HoelderResult hoelder_interpolation_check(const FourierData& fd, double b);

/// Window families for optimize_window. Parameter vectors:
///   GaussianWidth:       {s}        psi(x) = e^{-pi x^2 / s^2}
///   GaussianWidthCenter: {s, c}     psi(x) = e^{-pi (x-c)^2 / s^2}
///   GaussianHermiteMix:  {s, beta}  psi(x) = (h_0 + beta h_1)(x/s)
enum class WindowFamily { GaussianWidth, GaussianWidthCenter, GaussianHermiteMix };

struct OptimizeOptions {
    WindowFamily family = WindowFamily::GaussianWidth;
    std::vector<double> lower, upper; ///< box bounds per parameter
    std::size_t budget = 60;          ///< objective evaluations
    std::uint64_t seed = 0;
    MomentSpec moments;
    BaseGrid base;
};

struct OptimizeTracePoint {
    std::vector<double> params;
    double objective;
};

struct OptimizeResult {
    std::vector<double> best_params;
    double best_objective = 0.0; ///< time^{1/2a} freq^{1/2b} / ||f||^{1/a+1/b}
    bool divergence_flag = false;
    std::vector<OptimizeTracePoint> trace;
};

/// Minimize the Gabor uncertainty product over a window family: golden-section
/// for one parameter, deterministic Nelder-Mead for two. Ties resolve to the
/// lexicographically smallest parameter vector.
OptimizeResult optimize_window(const SampledSignal& f, const OptimizeOptions& opts);

/// Evaluate the optimize_window objective for explicit parameters (the
/// brute-force scan oracle uses this directly).
double window_objective(const SampledSignal& f, const OptimizeOptions& opts,
                        const std::vector<double>& params, bool* diverged = nullptr);

} // namespace ncwave
