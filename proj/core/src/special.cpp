#include "ncwave/special.hpp"

#include <cmath>
#include <cstdlib>
#include <vector>

#include "ncwave/errors.hpp"

namespace ncwave {

void hermite_values(std::size_t n, double u, double* out) {
    if (n == 0) return;
    if (n - 1 > kHermiteMaxOrder)
        throw CapabilityError("hermite_values: order beyond certified range");
    out[0] = 0.7511255444649425 * std::exp(-0.5 * u * u); // pi^{-1/4} e^{-u^2/2}
    if (n == 1) return;
    out[1] = std::sqrt(2.0) * u * out[0];
    for (std::size_t k = 1; k + 1 < n; ++k)
        out[k + 1] = std::sqrt(2.0 / double(k + 1)) * u * out[k] -
                     std::sqrt(double(k) / double(k + 1)) * out[k - 1];
}

double hermite_function(std::size_t k, double u) {
    if (k > kHermiteMaxOrder) throw CapabilityError("hermite_function: order beyond certified range");
    std::vector<double> buf(k + 1);
    hermite_values(k + 1, u, buf.data());
    return buf[k];
}

void bessel_j_all(int nmax, double x, double* out) {
    if (nmax < 0 || nmax > kBesselMaxOrder)
        throw CapabilityError("bessel_j_all: order outside [0, 512]");
    if (!std::isfinite(x)) throw DomainError("bessel_j_all: non-finite argument");

    const double ax = std::abs(x);
    if (ax < 1e-300) {
        out[0] = 1.0;
        for (int k = 1; k <= nmax; ++k) out[k] = 0.0;
        return;
    }

    // Miller's downward recurrence with normalization J_0 + 2 sum J_{2k} = 1.
    // Starting ~64 orders above max(nmax, x) keeps the contamination of the
    // dominant solution below ~2^-64.
    int start = std::max(nmax, int(std::ceil(ax))) + 64;
    start += start % 2; // even start keeps the normalization accumulation simple
    std::vector<double> j(start + 2, 0.0);
    j[start + 1] = 0.0;
    j[start] = 1e-30;
    double norm = 0.0;
    for (int k = start; k >= 1; --k) {
        j[k - 1] = (2.0 * k / ax) * j[k] - j[k + 1];
        if (std::abs(j[k - 1]) > 1e250) { // rescale to dodge overflow
            for (int i = k - 1; i <= start + 1; ++i) j[i] *= 1e-250;
            norm *= 1e-250;
        }
        if ((k - 1) % 2 == 0 && k - 1 > 0) norm += j[k - 1];
    }
    norm = 2.0 * norm + j[0];
    const double neg = (x < 0.0) ? -1.0 : 1.0; // J_n(-x) = (-1)^n J_n(x)
    double sign = 1.0;
    for (int k = 0; k <= nmax; ++k) {
        out[k] = sign * j[k] / norm;
        sign *= neg;
    }
}

double bessel_j(int n, double x) {
    int an = std::abs(n);
    if (an > kBesselMaxOrder) throw CapabilityError("bessel_j: order outside [-512, 512]");
    std::vector<double> buf(an + 1);
    bessel_j_all(an, x, buf.data());
    double v = buf[an];
    if (n < 0 && an % 2 == 1) v = -v; // J_{-n} = (-1)^n J_n
    return v;
}

} // namespace ncwave
