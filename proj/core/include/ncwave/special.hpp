#pragma once

#include <cstddef>
#include <vector>

namespace ncwave {

/// Highest Hermite index the three-term recurrence is certified for.
constexpr std::size_t kHermiteMaxOrder = 256;
/// Highest Bessel order served.
constexpr int kBesselMaxOrder = 512;

/// L^2(R)-orthonormal Hermite function h_k(u):
///   h_0(u) = pi^{-1/4} e^{-u^2/2},
///   h_{k+1}(u) = sqrt(2/(k+1)) u h_k(u) - sqrt(k/(k+1)) h_{k-1}(u).
/// Throws CapabilityError for k > kHermiteMaxOrder.
double hermite_function(std::size_t k, double u);

/// h_0..h_{n-1} at a single point in one recurrence sweep (out.size() == n).
void hermite_values(std::size_t n, double u, double* out);

/// Bessel function of the first kind, integer order (either sign), computed
/// with Miller's downward recurrence and the normalization
/// J_0 + 2*sum_k J_{2k} = 1. J_{-n}(x) = (-1)^n J_n(x).
/// Throws CapabilityError for |n| > kBesselMaxOrder.
double bessel_j(int n, double x);

/// J_0(x)..J_{nmax}(x) in one downward sweep (out.size() == nmax+1).
void bessel_j_all(int nmax, double x, double* out);

} // namespace ncwave
