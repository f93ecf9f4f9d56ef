#include "ncwave/fourier.hpp"

#include <algorithm>
#include <cmath>

#include "ncwave/errors.hpp"
#include "ncwave/fft.hpp"
#include "ncwave/parallel.hpp"
#include "ncwave/special.hpp"

namespace ncwave {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr cplx kI{0.0, 1.0};

void require_kind(const SampledSignal& f, GroupKind kind, const char* fn) {
    if (!f.group) throw PreconditionError(std::string(fn) + ": empty signal");
    if (f.group->kind() != kind)
        throw KindError(std::string(fn) + ": wrong group kind '" +
                        kind_name(f.group->kind()) + "'");
}

/// Centered forward transform along one real axis of a row-major tensor:
/// bin k ends up holding sum_j f_j e^{-2 pi i w_k (x_j - lo)} with
/// w_k = (k - floor(n/2)) / (hi - lo). Pre-twiddling by e^{+2 pi i j m / n}
/// (m = floor(n/2)) turns the centering into an exact circular shift for any
/// n, so the discrete Parseval identity survives to rounding.
void centered_fft_axis(std::vector<cplx>& data, const std::vector<std::size_t>& dims,
                       std::size_t axis, const Grid1D& grid) {
    std::size_t n = dims[axis];
    std::size_t inner = 1;
    for (std::size_t a = axis + 1; a < dims.size(); ++a) inner *= dims[a];
    std::size_t outer = data.size() / (n * inner);
    std::size_t m = n / 2;

    std::vector<cplx> pre(n), post(n);
    double L = grid.hi() - grid.lo();
    double dx = grid.spacing();
    for (std::size_t j = 0; j < n; ++j)
        pre[j] = std::polar(1.0, 2.0 * kPi * double(j) * double(m) / double(n));
    for (std::size_t k = 0; k < n; ++k) {
        double w = (double(k) - double(m)) / L;
        post[k] = dx * std::polar(1.0, -2.0 * kPi * w * grid.lo());
    }
    for (std::size_t o = 0; o < outer; ++o)
        for (std::size_t j = 0; j < n; ++j) {
            cplx* row = data.data() + (o * n + j) * inner;
            for (std::size_t i = 0; i < inner; ++i) row[i] *= pre[j];
        }
    fft_axis(data, dims, axis);
    for (std::size_t o = 0; o < outer; ++o)
        for (std::size_t k = 0; k < n; ++k) {
            cplx* row = data.data() + (o * n + k) * inner;
            for (std::size_t i = 0; i < inner; ++i) row[i] *= post[k];
        }
}

std::vector<std::size_t> axis_dims(const GroupSpec& g) {
    std::vector<std::size_t> dims;
    for (const auto& ax : g.axes()) dims.push_back(ax.grid.size());
    return dims;
}
} // namespace

double FourierData::dual_energy() const {
    double total = 0.0;
    if (scalar()) {
        const auto& e = scalar_entries();
        for (std::size_t i = 0; i < e.size(); ++i) total += dual.weights[i] * std::norm(e[i]);
    } else {
        const auto& e = matrix_entries();
        for (std::size_t i = 0; i < e.size(); ++i) total += dual.weights[i] * hs_norm_sq(e[i]);
    }
    return total;
}

double FourierData::captured_fraction() const {
    if (source_l2_sq <= 0.0)
        throw DegenerateSignalError("captured_fraction: zero source signal");
    return dual_energy() / source_l2_sq;
}

FourierData fourier_euclidean(const SampledSignal& f) {
    require_kind(f, GroupKind::Euclidean, "fourier_euclidean");
    const GroupSpec& g = *f.group;
    FourierData out;
    out.group = f.group;
    out.dual = dual_grid(g);
    out.basis = BasisDescriptor{"plane-waves", 0};
    out.source_l2_sq = l2_norm_sq(f);
    std::vector<cplx> data = f.values;
    auto dims = axis_dims(g);
    for (std::size_t a = 0; a < dims.size(); ++a)
        centered_fft_axis(data, dims, a, g.axis(a).grid);
    out.entries = std::move(data);
    return out;
}

FourierData fourier_product_rfinite(const SampledSignal& f) {
    require_kind(f, GroupKind::ProductRFinite, "fourier_product_rfinite");
    const GroupSpec& g = *f.group;
    FourierData out;
    out.group = f.group;
    out.dual = dual_grid(g);
    out.basis = BasisDescriptor{"plane-waves-x-characters", 0};
    out.source_l2_sq = l2_norm_sq(f);

    std::size_t m = g.finite_order();
    auto dims = axis_dims(g);
    std::vector<cplx> data = f.values;
    centered_fft_axis(data, dims, 0, g.axis(0).grid);
    // character pairing: entry(z, p) = (1/m) sum_j e^{-2 pi i j p / m} G(z, j)
    fft_axis(data, dims, 1);
    for (auto& v : data) v /= double(m);
    out.entries = std::move(data);
    return out;
}

FourierData fourier_heisenberg(const SampledSignal& f, const DualOptions& opts) {
    require_kind(f, GroupKind::Heisenberg1, "fourier_heisenberg");
    const GroupSpec& g = *f.group;
    const Grid1D& gx = g.axis(0).grid;
    const Grid1D& gy = g.axis(1).grid;
    const Grid1D& gt = g.axis(2).grid;
    std::size_t nx = gx.size(), ny = gy.size(), nt = gt.size();

    FourierData out;
    out.group = f.group;
    out.dual = dual_grid(g, opts);
    out.source_l2_sq = l2_norm_sq(f);
    std::size_t N = out.dual.hermite_order;
    out.basis = BasisDescriptor{"hermite-lambda-scaled", N};
    const Grid1D& gu = *out.dual.hermite_grid;
    std::size_t nu = gu.size();
    double du = gu.spacing();

    // Hermite table on the representation grid (lambda-independent after the
    // u' = sqrt|lambda| u substitution)
    std::vector<double> H(N * nu);
    {
        std::vector<double> buf(N);
        for (std::size_t iu = 0; iu < nu; ++iu) {
            hermite_values(N, gu.point(iu), buf.data());
            for (std::size_t k = 0; k < N; ++k) H[k * nu + iu] = buf[k];
        }
    }

    std::size_t nl = out.dual.size();
    std::vector<ComplexMatrix> blocks(nl, ComplexMatrix(N, N));

    // per lambda: t-transform, then the oscillatory x-integral onto the
    // representation grid, then the y-shifted Hermite pairing
    parallel_for(nl, [&](std::size_t il) {
        double lam = out.dual.lambdas[il];
        double s = std::sqrt(std::abs(lam));
        double sgn = lam >= 0.0 ? 1.0 : -1.0;

        std::vector<cplx> pt(nt);
        for (std::size_t it = 0; it < nt; ++it)
            pt[it] = gt.weight(it) * std::polar(1.0, -lam * gt.point(it));

        // F(x, y; lambda), with the x weight and central phase folded in
        std::vector<cplx> G(nx * ny);
        for (std::size_t ix = 0; ix < nx; ++ix) {
            double x = gx.point(ix);
            double wx = gx.weight(ix);
            for (std::size_t iy = 0; iy < ny; ++iy) {
                const cplx* col = f.values.data() + (ix * ny + iy) * nt;
                cplx acc = 0.0;
                for (std::size_t it = 0; it < nt; ++it) acc += col[it] * pt[it];
                G[ix * ny + iy] =
                    acc * wx * std::polar(1.0, lam * x * gy.point(iy) * 0.5);
            }
        }

        // M(u', y) = sum_x G(x, y) e^{-i sgn s x u'}
        std::vector<cplx> E(nu * nx);
        for (std::size_t iu = 0; iu < nu; ++iu)
            for (std::size_t ix = 0; ix < nx; ++ix)
                E[iu * nx + ix] = std::polar(1.0, -sgn * s * gx.point(ix) * gu.point(iu));
        std::vector<cplx> M(nu * ny, 0.0);
        for (std::size_t iu = 0; iu < nu; ++iu)
            for (std::size_t ix = 0; ix < nx; ++ix) {
                cplx e = E[iu * nx + ix];
                const cplx* grow = G.data() + ix * ny;
                cplx* mrow = M.data() + iu * ny;
                for (std::size_t iy = 0; iy < ny; ++iy) mrow[iy] += e * grow[iy];
            }

        // phi_k(u') = sum_y M(u', y) h_k(u' - s y)
        std::vector<cplx> phi(nu * N, 0.0);
        std::vector<double> hbuf(N);
        for (std::size_t iu = 0; iu < nu; ++iu) {
            double up = gu.point(iu);
            for (std::size_t iy = 0; iy < ny; ++iy) {
                cplx c = M[iu * ny + iy] * gy.weight(iy);
                hermite_values(N, up - s * gy.point(iy), hbuf.data());
                cplx* prow = phi.data() + iu * N;
                for (std::size_t k = 0; k < N; ++k) prow[k] += c * hbuf[k];
            }
        }

        // A_jk = sum_{u'} h_j(u') phi_k(u') du'
        ComplexMatrix& A = blocks[il];
        for (std::size_t j = 0; j < N; ++j) {
            const double* hrow = H.data() + j * nu;
            for (std::size_t iu = 0; iu < nu; ++iu) {
                cplx c = hrow[iu] * du;
                const cplx* prow = phi.data() + iu * N;
                for (std::size_t k = 0; k < N; ++k) A.at(j, k) += c * prow[k];
            }
        }
    });

    out.entries = std::move(blocks);
    return out;
}

FourierData fourier_motion2(const SampledSignal& f, const DualOptions& opts, Motion2Path path) {
    require_kind(f, GroupKind::Motion2, "fourier_motion2");
    const GroupSpec& g = *f.group;
    const Grid1D& gth = g.axis(0).grid;
    const Grid1D& g1 = g.axis(1).grid;
    const Grid1D& g2 = g.axis(2).grid;
    std::size_t nth = gth.size(), n1 = g1.size(), n2 = g2.size();
    std::size_t nxf = n1 * n2;

    FourierData out;
    out.group = f.group;
    out.dual = dual_grid(g, opts);
    out.source_l2_sq = l2_norm_sq(f);
    int M = out.dual.mode_cutoff;
    std::size_t dim = out.dual.matrix_dim();
    out.basis = BasisDescriptor{"circular-modes", dim};

    // rotation modes of the signal: fcheck_m(x) = (1/n_theta) sum_l f e^{i m theta_l}
    std::vector<cplx> fhat = f.values;
    fft_axis(fhat, {nth, nxf}, 0);
    std::vector<cplx> ck(dim * nxf);
    for (int m = -M; m <= M; ++m) {
        std::size_t mm = std::size_t(((m % int(nth)) + int(nth)) % int(nth));
        std::size_t src = (nth - mm) % nth; // DFT bin holding e^{+i m theta} pairing
        const cplx* row = fhat.data() + src * nxf;
        cplx* dst = ck.data() + std::size_t(m + M) * nxf;
        for (std::size_t ix = 0; ix < nxf; ++ix) dst[ix] = row[ix] / double(nth);
    }

    // polar data and Haar weights of the translation plane
    std::vector<double> rho(nxf), phi(nxf), wx(nxf);
    for (std::size_t i1 = 0; i1 < n1; ++i1)
        for (std::size_t i2 = 0; i2 < n2; ++i2) {
            double x1 = g1.point(i1), x2 = g2.point(i2);
            std::size_t ix = i1 * n2 + i2;
            rho[ix] = std::hypot(x1, x2);
            phi[ix] = std::atan2(x2, x1);
            wx[ix] = g1.weight(i1) * g2.weight(i2);
        }

    // representation-space circle grid for the direct path: fine enough for
    // all modes |q| <= 2M and a multiple of n_theta so the group rotations
    // act on it exactly
    std::size_t nfine = std::max<std::size_t>(4 * std::size_t(M) + 64, nth);
    nfine = ((nfine + nth - 1) / nth) * nth;
    std::vector<double> cos_fine;
    if (path == Motion2Path::Direct) {
        cos_fine.resize(nxf * nfine);
        for (std::size_t ix = 0; ix < nxf; ++ix)
            for (std::size_t l = 0; l < nfine; ++l)
                cos_fine[ix * nfine + l] =
                    std::cos(2.0 * kPi * double(l) / double(nfine) - phi[ix]);
    }

    std::size_t nq = 4 * std::size_t(M) + 1; // q = n - m ranges over [-2M, 2M]
    std::vector<cplx> iq_pow(nq);            // (-i)^q
    for (std::size_t qi = 0; qi < nq; ++qi) {
        int q = int(qi) - 2 * M;
        int r4 = ((q % 4) + 4) % 4;
        static const cplx tab[4] = {cplx(1, 0), cplx(0, -1), cplx(-1, 0), cplx(0, 1)};
        iq_pow[qi] = tab[r4];
    }

    std::size_t nr = out.dual.size();
    std::vector<ComplexMatrix> blocks(nr, ComplexMatrix(dim, dim));

    parallel_for(nr, [&](std::size_t ir) {
        double r = out.dual.radii[ir];
        ComplexMatrix& A = blocks[ir];
        std::vector<cplx> D(nq);
        std::vector<double> jbuf(2 * std::size_t(M) + 1);
        std::vector<cplx> kern;
        if (path == Motion2Path::Direct) kern.resize(nxf * nfine);

        if (path == Motion2Path::Direct) {
            for (std::size_t ix = 0; ix < nxf; ++ix) {
                double a = r * rho[ix];
                const double* crow = cos_fine.data() + ix * nfine;
                cplx* krow = kern.data() + ix * nfine;
                for (std::size_t l = 0; l < nfine; ++l) krow[l] = std::polar(1.0, -a * crow[l]);
            }
            fft_axis(kern, {nxf, nfine}, 1);
        }

        for (std::size_t ix = 0; ix < nxf; ++ix) {
            if (path == Motion2Path::Direct) {
                const cplx* krow = kern.data() + ix * nfine;
                for (std::size_t qi = 0; qi < nq; ++qi) {
                    int q = int(qi) - 2 * M;
                    std::size_t bin = std::size_t(((-q) % int(nfine) + int(nfine)) % int(nfine));
                    D[qi] = krow[bin] / double(nfine);
                }
            } else {
                bessel_j_all(2 * M, r * rho[ix], jbuf.data());
                for (std::size_t qi = 0; qi < nq; ++qi) {
                    int q = int(qi) - 2 * M;
                    double jv = jbuf[std::size_t(std::abs(q))];
                    if (q < 0 && (q & 1)) jv = -jv; // J_{-q} = (-1)^q J_q
                    D[qi] = std::polar(1.0, double(q) * phi[ix]) * iq_pow[qi] * jv;
                }
            }
            for (std::size_t mi = 0; mi < dim; ++mi) {
                cplx c = wx[ix] * ck[mi * nxf + ix];
                if (c == cplx(0.0, 0.0)) continue;
                cplx* arow = &A.at(mi, 0);
                const cplx* drow = D.data() + (2 * std::size_t(M) - mi);
                // entry (m, n) pairs with D_{n - m}; with mi = m + M, ni = n + M
                // the needed offset is (ni - mi) + 2M
                for (std::size_t ni = 0; ni < dim; ++ni) arow[ni] += c * drow[ni];
            }
        }
    });

    out.entries = std::move(blocks);
    return out;
}

FourierData group_fourier(const SampledSignal& f, const DualOptions& opts, Motion2Path path) {
    if (!f.group) throw PreconditionError("group_fourier: empty signal");
    switch (f.group->kind()) {
        case GroupKind::Euclidean: return fourier_euclidean(f);
        case GroupKind::Heisenberg1: return fourier_heisenberg(f, opts);
        case GroupKind::Motion2: return fourier_motion2(f, opts, path);
        case GroupKind::ProductRFinite: return fourier_product_rfinite(f);
    }
    throw KindError("group_fourier: unknown group kind");
}

PlancherelResult plancherel_check(const SampledSignal& f, const FourierData& fd) {
    if (!f.group || !fd.group) throw PreconditionError("plancherel_check: empty inputs");
    if (f.group.get() != fd.group.get())
        throw PreconditionError("plancherel_check: transform comes from a different group");
    PlancherelResult res;
    res.lhs = l2_norm_sq(f);
    if (res.lhs < 1e-280) throw DegenerateSignalError("plancherel_check: zero signal");
    if (std::abs(res.lhs - fd.source_l2_sq) > 1e-9 * res.lhs)
        throw PreconditionError("plancherel_check: transform comes from a different signal");
    res.rhs = fd.dual_energy();
    res.rel_error = std::abs(res.lhs - res.rhs) / res.lhs;
    return res;
}

DerivativeIdentityResult fourier_derivative_identity_check(const SampledSignal& f) {
    require_kind(f, GroupKind::Euclidean, "fourier_derivative_identity_check");
    const GroupSpec& g = *f.group;
    const Grid1D& gx = g.axis(0).grid;
    std::size_t n = gx.size();
    if (n < 5)
        throw ResolutionError("fourier_derivative_identity_check: need >= 5 points on axis 1");
    double h = gx.spacing();
    std::size_t inner = g.strides()[0];

    // 4th-order central difference, cyclic along axis 1
    std::vector<cplx> dvals(f.values.size());
    for (std::size_t j = 0; j < n; ++j) {
        std::size_t jm2 = (j + n - 2) % n, jm1 = (j + n - 1) % n;
        std::size_t jp1 = (j + 1) % n, jp2 = (j + 2) % n;
        for (std::size_t i = 0; i < inner; ++i) {
            cplx v = f.values[jm2 * inner + i] - 8.0 * f.values[jm1 * inner + i] +
                     8.0 * f.values[jp1 * inner + i] - f.values[jp2 * inner + i];
            dvals[j * inner + i] = v / (12.0 * h);
        }
    }
    SampledSignal df(f.group, std::move(dvals));

    FourierData fhat = fourier_euclidean(f);
    FourierData dhat = fourier_euclidean(df);
    const auto& a = dhat.scalar_entries();
    const auto& b = fhat.scalar_entries();
    double num = 0.0, den = 0.0, total = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double w1 = fhat.dual.axis_freqs[0][i / inner];
        cplx want = 2.0 * kPi * kI * w1 * b[i];
        num += fhat.dual.weights[i] * std::norm(a[i] - want);
        den += fhat.dual.weights[i] * std::norm(want);
        total += fhat.dual.weights[i] * std::norm(b[i]);
    }
    // a (numerically) constant signal has all its spectral mass at w1 = 0;
    // compare against the largest representable |2 pi w1| so FFT rounding
    // noise in the empty bins cannot masquerade as bandwidth
    double wmax = std::max(std::abs(fhat.dual.axis_freqs[0].front()),
                           std::abs(fhat.dual.axis_freqs[0].back()));
    if (den <= 1e-20 * (2.0 * kPi * wmax) * (2.0 * kPi * wmax) * total)
        throw DegenerateSignalError("fourier_derivative_identity_check: constant signal");
    return DerivativeIdentityResult{std::sqrt(num / den)};
}

} // namespace ncwave
