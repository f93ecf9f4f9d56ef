#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <cstdio>
#include <vector>

#include "ncwave/errors.hpp"
#include "ncwave/fourier.hpp"
#include "ncwave/group.hpp"
#include "ncwave/signal.hpp"
#include "ncwave/special.hpp"

using namespace ncwave;

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr cplx kI{0.0, 1.0};

Grid1D box(double half, std::size_t n) { return Grid1D::periodic(-half, half, n); }

double max_abs(const ComplexMatrix& m) {
    double v = 0.0;
    for (const auto& z : m.data()) v = std::max(v, std::abs(z));
    return v;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    double v = 0.0;
    for (std::size_t i = 0; i < a.data().size(); ++i)
        v = std::max(v, std::abs(a.data()[i] - b.data()[i]));
    return v;
}

// Independent slow oracle for the Heisenberg blocks: quadruple quadrature sum
// of f(g) <pi_lambda(g^{-1}) chi_k, chi_j> in the scaled variable u' =
// sqrt|lambda| u, evaluated with scalar Hermite calls and no factorization:
//   A_jk = sum_{x,y,t,u'} wx wy wt du' f e^{-i l t} e^{i l x y/2}
//          e^{-i sgn(l) sqrt|l| x u'} h_j(u') h_k(u' - sqrt|l| y)
ComplexMatrix heisenberg_block_oracle(const SampledSignal& f, double lam, std::size_t N,
                                      const Grid1D& gu) {
    const GroupSpec& g = *f.group;
    const Grid1D& gx = g.axis(0).grid;
    const Grid1D& gy = g.axis(1).grid;
    const Grid1D& gt = g.axis(2).grid;
    double s = std::sqrt(std::abs(lam));
    double sgn = lam >= 0.0 ? 1.0 : -1.0;
    double du = gu.spacing();
    ComplexMatrix A(N, N);
    for (std::size_t j = 0; j < N; ++j)
        for (std::size_t k = 0; k < N; ++k) {
            cplx acc = 0.0;
            for (std::size_t ix = 0; ix < gx.size(); ++ix)
                for (std::size_t iy = 0; iy < gy.size(); ++iy) {
                    double x = gx.point(ix), y = gy.point(iy);
                    cplx tsum = 0.0;
                    for (std::size_t it = 0; it < gt.size(); ++it)
                        tsum += f.values[(ix * gy.size() + iy) * gt.size() + it] *
                                gt.weight(it) * std::polar(1.0, -lam * gt.point(it));
                    cplx base = gx.weight(ix) * gy.weight(iy) * tsum *
                                std::polar(1.0, lam * x * y * 0.5);
                    for (std::size_t iu = 0; iu < gu.size(); ++iu) {
                        double up = gu.point(iu);
                        acc += base * du * std::polar(1.0, -sgn * s * x * up) *
                               hermite_function(j, up) * hermite_function(k, up - s * y);
                    }
                }
            A.at(j, k) = acc;
        }
    return A;
}

// Independent oracle for the planar-motion blocks via the Bessel series of
// the plane-wave kernel (std::cyl_bessel_j, not the library's Miller scheme):
//   D_q(x; r) = e^{i q phi} (-i)^q J_q(r rho),
//   A(m+M, n+M) = sum_x wx fcheck_m(x) D_{n-m}(x; r),
//   fcheck_m(x) = (1/n_theta) sum_l f(theta_l, x) e^{i m theta_l}.
ComplexMatrix motion2_block_oracle(const SampledSignal& f, double r, int M) {
    const GroupSpec& g = *f.group;
    const Grid1D& gth = g.axis(0).grid;
    const Grid1D& g1 = g.axis(1).grid;
    const Grid1D& g2 = g.axis(2).grid;
    std::size_t nth = gth.size(), n1 = g1.size(), n2 = g2.size();
    std::size_t dim = std::size_t(2 * M + 1);
    auto ipow = [](int q) { // (-i)^q
        static const cplx tab[4] = {cplx(1, 0), cplx(0, -1), cplx(-1, 0), cplx(0, 1)};
        return tab[((q % 4) + 4) % 4];
    };
    auto bessel = [](int q, double x) {
        double v = std::cyl_bessel_j(double(std::abs(q)), x);
        return (q < 0 && (q & 1)) ? -v : v;
    };
    ComplexMatrix A(dim, dim);
    for (std::size_t i1 = 0; i1 < n1; ++i1)
        for (std::size_t i2 = 0; i2 < n2; ++i2) {
            double x1 = g1.point(i1), x2 = g2.point(i2);
            double rho = std::hypot(x1, x2), phi = std::atan2(x2, x1);
            double wx = g1.weight(i1) * g2.weight(i2);
            for (int m = -M; m <= M; ++m) {
                cplx fm = 0.0;
                for (std::size_t l = 0; l < nth; ++l)
                    fm += f.values[(l * n1 + i1) * n2 + i2] *
                          std::polar(1.0, double(m) * gth.point(l));
                fm /= double(nth);
                for (int n = -M; n <= M; ++n) {
                    int q = n - m;
                    cplx d = std::polar(1.0, double(q) * phi) * ipow(q) * bessel(q, r * rho);
                    A.at(std::size_t(m + M), std::size_t(n + M)) += wx * fm * d;
                }
            }
        }
    return A;
}
} // namespace

TEST_CASE("product signals: factor evaluation and frozen norms") {
    auto e = make_euclidean({box(8.0, 1024)});
    auto f = make_signal(e, {GaussianFactor{1.0, 0.0}});
    // unit-amplitude Gaussian e^{-pi x^2}: values at 0 and at one width
    std::size_t mid = 512; // x = 0 on the periodic grid
    CHECK(e->axis(0).grid.point(mid) == 0.0);
    CHECK(f.values[mid].real() == doctest::Approx(1.0).epsilon(1e-15));
    // ||f||_2^2 = int e^{-2 pi x^2} = 1/sqrt(2)
    CHECK(l2_norm_sq(f) == doctest::Approx(0.7071067811865476).epsilon(1e-12));

    auto fb = make_signal(e, {BoxFactor{-1.0, 1.0}});
    CHECK(l2_norm_sq(fb) == doctest::Approx(2.0).epsilon(1e-12));

    auto fh = make_signal(e, {HermiteMixFactor{1.0, {1.0}}});
    CHECK(fh.values[mid].real() == doctest::Approx(0.7511255444649425).epsilon(1e-14));

    auto fs = make_signal(e, {GaussianFactor{2.0, 0.5}}, cplx(0.0, 3.0));
    // center sits on the grid (spacing 1/64)
    std::size_t ic = 512 + 32;
    CHECK(fs.values[ic] == cplx(0.0, 3.0));

    auto m2 = make_motion2(8, box(3.0, 12), box(3.0, 12));
    auto ft = make_signal(m2, {TrigFactor{1.0, {0.5}, {0.0, 0.25}},
                               ConstFactor{}, ConstFactor{}});
    // theta = 0 sample: 1 + 0.5 cos 0 + 0.25 sin 0 = 1.5
    CHECK(ft.values[0].real() == doctest::Approx(1.5).epsilon(1e-14));

    auto p = make_product_rfinite(box(4.0, 64), 4);
    auto fd = make_signal(p, {ConstFactor{}, DeltaFactor{2}});
    CHECK(fd.values[2] == cplx(1.0, 0.0));
    CHECK(fd.values[3] == cplx(0.0, 0.0));
}

TEST_CASE("signal validation") {
    auto e = make_euclidean({box(8.0, 64)});
    CHECK_THROWS_AS(make_signal(e, {GaussianFactor{-1.0, 0.0}}), ConfigError);
    CHECK_THROWS_AS(make_signal(e, {TrigFactor{}}), ConfigError); // circle factor on a line
    CHECK_THROWS_AS(make_signal(e, {GaussianFactor{}, GaussianFactor{}}), DimensionError);
    CHECK_THROWS_AS(make_signal(nullptr, {GaussianFactor{}}), PreconditionError);

    std::vector<cplx> bad(e->total_points(), 1.0);
    bad[7] = cplx(std::nan(""), 0.0);
    CHECK_THROWS_AS(SampledSignal(e, bad), DomainError);
    CHECK_THROWS_AS(SampledSignal(e, std::vector<cplx>(5, 1.0)), DimensionError);

    auto m2 = make_motion2(8, box(3.0, 8), box(3.0, 8));
    CHECK_THROWS_AS(make_signal(m2, {GaussianFactor{}, ConstFactor{}, ConstFactor{}}),
                    ConfigError); // real-axis factor on the circle
}

TEST_CASE("euclidean transform equals direct quadrature of the defining integral") {
    // f_hat(w) = sum_j w_j f(x_j) e^{-2 pi i w x_j} computed by plain loops
    auto e = make_euclidean({box(8.0, 64)});
    auto f = random_smooth_signal(e, 20260823);
    auto fd = fourier_euclidean(f);
    const Grid1D& gx = e->axis(0).grid;
    double num = 0.0, den = 0.0;
    for (std::size_t k = 0; k < 64; ++k) {
        double w = (double(k) - 32.0) / 16.0;
        cplx acc = 0.0;
        for (std::size_t j = 0; j < 64; ++j)
            acc += gx.weight(j) * f.values[j] * std::polar(1.0, -2.0 * kPi * w * gx.point(j));
        num += std::norm(fd.scalar_entries()[k] - acc);
        den += std::norm(acc);
    }
    CHECK(std::sqrt(num / den) < 1e-12);

    // two axes with distinct boxes; row-major entry order (k1 outer)
    auto e2 = make_euclidean({box(8.0, 16), box(4.0, 8)});
    auto f2 = random_smooth_signal(e2, 7);
    auto fd2 = fourier_euclidean(f2);
    const Grid1D& a0 = e2->axis(0).grid;
    const Grid1D& a1 = e2->axis(1).grid;
    num = den = 0.0;
    for (std::size_t k1 = 0; k1 < 16; ++k1)
        for (std::size_t k2 = 0; k2 < 8; ++k2) {
            double w1 = (double(k1) - 8.0) / 16.0;
            double w2 = (double(k2) - 4.0) / 8.0;
            cplx acc = 0.0;
            for (std::size_t j1 = 0; j1 < 16; ++j1)
                for (std::size_t j2 = 0; j2 < 8; ++j2)
                    acc += a0.weight(j1) * a1.weight(j2) * f2.values[j1 * 8 + j2] *
                           std::polar(1.0, -2.0 * kPi *
                                               (w1 * a0.point(j1) + w2 * a1.point(j2)));
            num += std::norm(fd2.scalar_entries()[k1 * 8 + k2] - acc);
            den += std::norm(acc);
        }
    CHECK(std::sqrt(num / den) < 1e-12);
}

TEST_CASE("unit gaussian is a fixed point of the transform") {
    auto e = make_euclidean({box(8.0, 512)});
    auto f = make_signal(e, {GaussianFactor{1.0, 0.0}});
    auto fd = fourier_euclidean(f);
    double worst = 0.0;
    for (std::size_t k = 0; k < 512; ++k) {
        double w = fd.dual.axis_freqs[0][k];
        worst = std::max(worst,
                         std::abs(fd.scalar_entries()[k] - cplx(std::exp(-kPi * w * w), 0.0)));
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("cyclic shift and integer-bin modulation act as phase and bin relabeling") {
    auto e = make_euclidean({box(8.0, 128)});
    auto f = random_smooth_signal(e, 99);
    auto fd = fourier_euclidean(f);
    const Grid1D& gx = e->axis(0).grid;

    // shift by 17 samples: f_hat picks up e^{-2 pi i w * 17 dx}
    std::vector<cplx> sh(128);
    for (std::size_t j = 0; j < 128; ++j) sh[j] = f.values[(j + 128 - 17) % 128];
    auto fds = fourier_euclidean(SampledSignal(e, sh));
    double worst = 0.0;
    for (std::size_t k = 0; k < 128; ++k) {
        cplx want = fd.scalar_entries()[k] *
                    std::polar(1.0, -2.0 * kPi * fd.dual.axis_freqs[0][k] * 17.0 * gx.spacing());
        worst = std::max(worst, std::abs(fds.scalar_entries()[k] - want));
    }
    CHECK(worst < 1e-12);

    // modulation by 5 whole bins: spectrum relabels cyclically (n even)
    std::vector<cplx> md(128);
    for (std::size_t j = 0; j < 128; ++j)
        md[j] = f.values[j] * std::polar(1.0, 2.0 * kPi * 5.0 * gx.point(j) / 16.0);
    auto fdm = fourier_euclidean(SampledSignal(e, md));
    worst = 0.0;
    for (std::size_t k = 0; k < 128; ++k)
        worst = std::max(worst, std::abs(fdm.scalar_entries()[k] -
                                         fd.scalar_entries()[(k + 128 - 5) % 128]));
    CHECK(worst < 1e-12);
}

TEST_CASE("transform diagonalizes the first partial derivative") {
    auto e = make_euclidean({box(8.0, 4096)});
    auto fg = make_signal(e, {GaussianFactor{1.0, 0.0}});
    CHECK(fourier_derivative_identity_check(fg).residual < 1e-6);

    auto fsg = make_signal(e, {SineGaussianFactor{2.0, 1.0, 0.0, 0.0}});
    CHECK(fourier_derivative_identity_check(fsg).residual < 1e-5);

    auto tiny = make_euclidean({box(1.0, 4)});
    CHECK_THROWS_AS(
        fourier_derivative_identity_check(make_signal(tiny, {GaussianFactor{1.0, 0.0}})),
        ResolutionError);

    auto fc = make_signal(e, {ConstFactor{}});
    CHECK_THROWS_AS(fourier_derivative_identity_check(fc), DegenerateSignalError);
}

TEST_CASE("discrete plancherel is exact for the scalar kinds") {
    auto e1 = make_euclidean({box(8.0, 128)});
    auto e2 = make_euclidean({box(8.0, 32), box(4.0, 16)});
    auto e3 = make_euclidean({box(4.0, 16), box(4.0, 12), box(2.0, 8)});
    auto p = make_product_rfinite(box(8.0, 64), 6);
    std::uint64_t seed = 5;
    for (auto& g : {e1, e2, e3}) {
        auto f = random_smooth_signal(g, seed++);
        auto res = plancherel_check(f, fourier_euclidean(f));
        CHECK(res.rel_error < 1e-12);
    }
    auto fp = random_smooth_signal(p, 17);
    auto fdp = fourier_product_rfinite(fp);
    CHECK(plancherel_check(fp, fdp).rel_error < 1e-12);
    CHECK(fdp.captured_fraction() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(fdp.basis.family == "plane-waves-x-characters");
}

TEST_CASE("product transform factors into a line transform times characters") {
    auto p = make_product_rfinite(box(8.0, 32), 4);
    // separable f(x, j) = g(x) c_j
    std::vector<cplx> c = {cplx(1, 0), cplx(0, 2), cplx(-1, 1), cplx(0.5, 0)};
    auto f = make_signal(p, {GaussianFactor{1.0, 0.5}, WeightsFactor{c}});
    auto fd = fourier_product_rfinite(f);

    auto e = make_euclidean({box(8.0, 32)});
    auto fe = make_signal(e, {GaussianFactor{1.0, 0.5}});
    auto fde = fourier_euclidean(fe);

    double worst = 0.0;
    for (std::size_t k = 0; k < 32; ++k)
        for (std::size_t q = 0; q < 4; ++q) {
            cplx ch = 0.0;
            for (std::size_t j = 0; j < 4; ++j)
                ch += c[j] * std::polar(1.0, -2.0 * kPi * double(j * q) / 4.0);
            ch /= 4.0;
            worst = std::max(worst,
                             std::abs(fd.scalar_entries()[k * 4 + q] -
                                      fde.scalar_entries()[k] * ch));
        }
    CHECK(worst < 1e-13);
}

TEST_CASE("heisenberg blocks match the defining quadrature on a tiny grid") {
    auto h = make_heisenberg1(box(4.0, 8), box(4.0, 8), box(4.0, 8));
    auto f = random_smooth_signal(h, 31);
    DualOptions opts;
    opts.lambda_max = 2.0;
    opts.n_lambda = 4;
    opts.hermite_order = 4;
    opts.u_max = 6.0;
    opts.n_u = 48;
    auto fd = fourier_heisenberg(f, opts);
    REQUIRE(fd.dual.size() == 4);
    CHECK(fd.basis.family == "hermite-lambda-scaled");
    for (std::size_t il = 0; il < fd.dual.size(); ++il) {
        auto want = heisenberg_block_oracle(f, fd.dual.lambdas[il], 4, *fd.dual.hermite_grid);
        CHECK(max_abs_diff(fd.matrix_entries()[il], want) < 1e-10 * std::max(1.0, max_abs(want)));
    }
}

TEST_CASE("heisenberg blocks conjugate under lambda sign flip for real signals") {
    auto h = make_heisenberg1(box(4.0, 16), box(4.0, 16), box(4.0, 16));
    auto f = make_signal(h, {GaussianFactor{1.0, 0.3}, GaussianFactor{1.5, 0.0},
                             SineGaussianFactor{1.0, 1.0, 0.1, 0.7}});
    DualOptions opts;
    opts.lambda_max = 3.0;
    opts.n_lambda = 6;
    opts.hermite_order = 6;
    opts.u_max = 6.0;
    opts.n_u = 64;
    auto fd = fourier_heisenberg(f, opts);
    double scale = 0.0;
    for (const auto& m : fd.matrix_entries()) scale = std::max(scale, max_abs(m));
    REQUIRE(scale > 0.0);
    for (std::size_t i = 0; i < 3; ++i) {
        const auto& neg = fd.matrix_entries()[i];          // lambda = -(5-i is mirror)
        const auto& pos = fd.matrix_entries()[5 - i];
        CHECK(fd.dual.lambdas[i] == -fd.dual.lambdas[5 - i]);
        double worst = 0.0;
        for (std::size_t e = 0; e < neg.data().size(); ++e)
            worst = std::max(worst, std::abs(neg.data()[e] - std::conj(pos.data()[e])));
        CHECK(worst < 1e-12 * scale);
    }
}

TEST_CASE("central time shift scales heisenberg blocks by the central character") {
    // supports [-2,2) and [1,5) stay inside the t box, so the lattice shift by
    // tau = 3 is an exact group translation along the center
    auto h = make_heisenberg1(box(4.0, 12), box(4.0, 12), Grid1D::periodic(-12.0, 12.0, 24));
    auto f0 = make_signal(h, {GaussianFactor{1.0, 0.0}, GaussianFactor{1.0, 0.0},
                              BoxFactor{-2.0, 2.0}});
    auto f1 = make_signal(h, {GaussianFactor{1.0, 0.0}, GaussianFactor{1.0, 0.0},
                              BoxFactor{1.0, 5.0}});
    DualOptions opts;
    opts.lambda_max = 2.0;
    opts.n_lambda = 4;
    opts.hermite_order = 5;
    opts.u_max = 6.0;
    opts.n_u = 64;
    auto a0 = fourier_heisenberg(f0, opts);
    auto a1 = fourier_heisenberg(f1, opts);
    for (std::size_t il = 0; il < 4; ++il) {
        double lam = a0.dual.lambdas[il];
        ComplexMatrix want = a0.matrix_entries()[il];
        want *= std::polar(1.0, -lam * 3.0);
        CHECK(max_abs_diff(a1.matrix_entries()[il], want) <
              1e-12 * std::max(1.0, max_abs(want)));
    }
}

TEST_CASE("planar motion blocks match a bessel-series oracle on a tiny grid") {
    auto m2 = make_motion2(8, box(3.0, 12), box(3.0, 12));
    auto f = random_smooth_signal(m2, 41);
    DualOptions opts;
    opts.r_max = 2.0;
    opts.n_r = 2;
    opts.mode_cutoff = 4;
    for (auto path : {Motion2Path::Direct, Motion2Path::Bessel}) {
        auto fd = fourier_motion2(f, opts, path);
        REQUIRE(fd.dual.size() == 2);
        CHECK(fd.basis.family == "circular-modes");
        for (std::size_t ir = 0; ir < 2; ++ir) {
            auto want = motion2_block_oracle(f, fd.dual.radii[ir], 4);
            CHECK(max_abs_diff(fd.matrix_entries()[ir], want) <
                  1e-9 * std::max(1.0, max_abs(want)));
        }
    }
}

TEST_CASE("direct and bessel routes agree on planar motion blocks") {
    auto m2 = make_motion2(16, box(6.0, 32), box(6.0, 32));
    auto f = random_smooth_signal(m2, 4242);
    DualOptions opts;
    opts.r_max = 8.0;
    opts.n_r = 4;
    opts.mode_cutoff = 8;
    auto fa = fourier_motion2(f, opts, Motion2Path::Direct);
    auto fb = fourier_motion2(f, opts, Motion2Path::Bessel);
    double num = 0.0, den = 0.0;
    for (std::size_t ir = 0; ir < fa.dual.size(); ++ir) {
        for (std::size_t e = 0; e < fa.matrix_entries()[ir].data().size(); ++e)
            num += fa.dual.weights[ir] * std::norm(fa.matrix_entries()[ir].data()[e] -
                                                   fb.matrix_entries()[ir].data()[e]);
        den += fa.dual.weights[ir] * hs_norm_sq(fa.matrix_entries()[ir]);
    }
    CHECK(std::sqrt(num / den) < 1e-9);
}

TEST_CASE("heisenberg plancherel error shrinks under dual refinement") {
    // modulated separable signal, two rungs of the resolution ladder
    auto run = [](std::size_t n, std::size_t nl, std::size_t N, std::size_t nu, double umax) {
        auto h = make_heisenberg1(box(6.0, n), box(6.0, n),
                                  Grid1D::periodic(-12.0, 12.0, n));
        auto f = make_signal(h, {GaussianFactor{1.0, 0.0}, GaussianFactor{1.0, 0.0},
                                 SineGaussianFactor{1.0 / kPi, 4.0, 0.0, kPi / 2.0}});
        DualOptions opts;
        opts.lambda_max = 4.0;
        opts.n_lambda = nl;
        opts.hermite_order = N;
        opts.u_max = umax;
        opts.n_u = nu;
        return plancherel_check(f, fourier_heisenberg(f, opts)).rel_error;
    };
    double r1 = run(48, 16, 16, 256, 10.0);
    double r2 = run(64, 32, 32, 384, 12.0);
    std::printf("  heisenberg plancherel ladder: %.3e -> %.3e\n", r1, r2);
    CHECK(r1 < 0.5);
    CHECK(r2 < r1);
}

TEST_CASE("planar motion plancherel error shrinks under dual refinement") {
    auto run = [](std::size_t nth, std::size_t n, std::size_t nr, int M) {
        auto m2 = make_motion2(nth, box(6.0, n), box(6.0, n));
        auto f = make_signal(m2, {TrigFactor{1.0, {0.5}, {0.0, 0.25}},
                                  GaussianFactor{1.0, 0.3}, GaussianFactor{1.0, 0.0}});
        DualOptions opts;
        opts.r_max = 8.0;
        opts.n_r = nr;
        opts.mode_cutoff = M;
        return plancherel_check(f, fourier_motion2(f, opts, Motion2Path::Bessel)).rel_error;
    };
    double r1 = run(16, 32, 16, 8);
    double r2 = run(32, 48, 32, 16);
    std::printf("  planar motion plancherel ladder: %.3e -> %.3e\n", r1, r2);
    CHECK(r1 < 0.5);
    CHECK(r2 < r1);
}

TEST_CASE("transform and check guards") {
    auto e = make_euclidean({box(8.0, 64)});
    auto h = make_heisenberg1(box(4.0, 8), box(4.0, 8), box(4.0, 8));
    auto fh = random_smooth_signal(h, 1);
    CHECK_THROWS_AS(fourier_euclidean(fh), KindError);
    CHECK_THROWS_AS(fourier_motion2(fh, DualOptions{}), KindError);
    CHECK_THROWS_AS(group_fourier(SampledSignal{}), PreconditionError);

    DualOptions bad;
    bad.n_u = 4;
    CHECK_THROWS_AS(fourier_heisenberg(fh, bad), ConfigError);

    auto f1 = random_smooth_signal(e, 2);
    auto e_clone = make_euclidean({box(8.0, 64)});
    auto f2 = random_smooth_signal(e_clone, 2);
    auto fd1 = fourier_euclidean(f1);
    CHECK_THROWS_AS(plancherel_check(f2, fd1), PreconditionError); // distinct group objects

    auto fd_t = fourier_euclidean(f1);
    fd_t.source_l2_sq *= 2.0; // tampered provenance
    CHECK_THROWS_AS(plancherel_check(f1, fd_t), PreconditionError);

    auto fz = make_signal(e, {GaussianFactor{1.0, 0.0}}, 0.0);
    auto fdz = fourier_euclidean(fz);
    CHECK_THROWS_AS(plancherel_check(fz, fdz), DegenerateSignalError);
}
