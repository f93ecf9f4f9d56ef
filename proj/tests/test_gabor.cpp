#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <cstdio>
#include <vector>

#include "ncwave/errors.hpp"
#include "ncwave/gabor.hpp"
#include "ncwave/group.hpp"
#include "ncwave/signal.hpp"

using namespace ncwave;

namespace {
constexpr double kPi = 3.14159265358979323846;

Grid1D box(double half, std::size_t n) { return Grid1D::periodic(-half, half, n); }
} // namespace

TEST_CASE("windowed slice multiplies by the cyclically translated window") {
    auto e = make_euclidean({box(4.0, 8)});
    auto f = random_smooth_signal(e, 3);
    auto w = random_smooth_signal(e, 4);
    Window psi{w};
    auto s = windowed_slice(f, psi, {3});
    for (std::size_t j = 0; j < 8; ++j)
        CHECK(std::abs(s.values[j] - f.values[j] * std::conj(w.values[(j + 5) % 8])) < 1e-15);

    CHECK_THROWS_AS(windowed_slice(f, psi, {8}), DimensionError);   // offset out of range
    CHECK_THROWS_AS(windowed_slice(f, psi, {0, 0}), DimensionError); // one offset per axis
    auto e2 = make_euclidean({box(4.0, 8)});
    Window psi2{random_smooth_signal(e2, 4)};
    CHECK_THROWS_AS(windowed_slice(f, psi2, {0}), PreconditionError); // different group object
}

TEST_CASE("matched gaussian pair reproduces the closed-form coefficient field") {
    // f = psi = e^{-pi t^2}:
    //   G(b, w) = (1/sqrt 2) e^{-pi b^2/2} e^{-pi i w b} e^{-pi w^2/2}
    auto e = make_euclidean({box(8.0, 512)});
    auto f = make_signal(e, {GaussianFactor{1.0, 0.0}});
    Window psi{make_signal(e, {GaussianFactor{1.0, 0.0}})};
    auto field = gabor_transform(f, psi, BaseGrid{{16}});
    REQUIRE(field.base_dims == std::vector<std::size_t>{32});
    REQUIRE(field.scalar);
    CHECK(field.base_weights[0] == doctest::Approx(16.0 / 32.0).epsilon(1e-15));
    // base index k translates the window by k * stride * dx, wrapping on the box
    double worst = 0.0;
    for (std::size_t k = 0; k < 32; ++k) {
        double b = 0.5 * double(k);
        if (b > 8.0) b -= 16.0;
        for (std::size_t i = 0; i < 512; ++i) {
            double w = field.dual.axis_freqs[0][i];
            cplx want = (1.0 / std::sqrt(2.0)) * std::exp(-kPi * b * b / 2.0) *
                        std::polar(1.0, -kPi * w * b) * std::exp(-kPi * w * w / 2.0);
            worst = std::max(worst, std::abs(field.coeffs[k * 512 + i] - want));
        }
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("line-group isometry tightens under base refinement") {
    auto e = make_euclidean({box(8.0, 512)});
    auto f = make_signal(e, {GaussianFactor{1.0, 0.3}});
    Window psi{make_signal(e, {GaussianFactor{1.0, 0.0}})};
    double last = 1.0;
    std::vector<double> errs;
    for (std::size_t stride : {32, 16, 8}) {
        auto res = gabor_isometry_check(gabor_transform(f, psi, BaseGrid{{stride}}));
        errs.push_back(res.rel_error);
        CHECK(res.rel_error < last);
        last = res.rel_error;
    }
    std::printf("  line isometry ladder: %.3e %.3e %.3e\n", errs[0], errs[1], errs[2]);
    CHECK(errs[1] < 1e-4); // base spacing 1/2: window periodization is spectrally small
}

TEST_CASE("line-times-residues isometry is exact at fine base spacing") {
    auto p = make_product_rfinite(box(8.0, 256), 2);
    std::vector<cplx> cw = {cplx(1.0, 0.0), cplx(0.0, 0.5)};
    auto f = random_smooth_signal(p, 11);
    Window psi{make_signal(p, {GaussianFactor{1.0, 0.0}, WeightsFactor{cw}})};
    auto res = gabor_isometry_check(gabor_transform(f, psi, BaseGrid{{4, 1}}));
    CHECK(res.rel_error < 1e-6);
}

TEST_CASE("coefficients shift covariantly with the signal") {
    auto e = make_euclidean({box(8.0, 128)});
    auto f = random_smooth_signal(e, 21);
    Window psi{make_signal(e, {GaussianFactor{1.0, 0.0}})};
    std::size_t stride = 8, shift = 3 * stride; // lattice-compatible translation
    auto base = BaseGrid{{stride}};
    auto f0 = gabor_transform(f, psi, base);

    std::vector<cplx> sh(128);
    for (std::size_t j = 0; j < 128; ++j) sh[j] = f.values[(j + 128 - shift) % 128];
    auto f1 = gabor_transform(SampledSignal(e, sh), psi, base);

    double dx = e->axis(0).grid.spacing();
    double worst = 0.0;
    std::size_t nb = 128 / stride;
    for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t i = 0; i < 128; ++i) {
            double w = f0.dual.axis_freqs[0][i];
            cplx want = f0.coeffs[((k + nb - 3) % nb) * 128 + i] *
                        std::polar(1.0, -2.0 * kPi * w * double(shift) * dx);
            worst = std::max(worst, std::abs(f1.coeffs[k * 128 + i] - want));
        }
    CHECK(worst < 1e-12);
}

TEST_CASE("heisenberg field: blocks are slice transforms; flat window splits the energy") {
    auto h = make_heisenberg1(box(4.0, 32), box(4.0, 32), Grid1D::periodic(-12.0, 12.0, 24));
    auto f = make_signal(h, {GaussianFactor{1.0, 0.0}, GaussianFactor{1.0, 0.0},
                             SineGaussianFactor{1.0 / kPi, 4.0, 0.0, kPi / 2.0}});
    // window flat in x, y and a wide centered Gaussian along the center axis
    Window psi{make_signal(h, {ConstFactor{}, ConstFactor{}, GaussianFactor{6.0, 0.0}})};
    DualOptions opts;
    opts.lambda_max = 3.0;
    opts.n_lambda = 12;
    opts.hermite_order = 12;
    opts.u_max = 8.0;
    opts.n_u = 128;
    BaseGrid base{{32, 32, 2}};
    auto field = gabor_transform(f, psi, base, opts);
    REQUIRE(!field.scalar);
    REQUIRE(field.base_size() == 12);
    REQUIRE(field.base_dims == std::vector<std::size_t>{1, 1, 12});

    // structural identity: block (b, i) is the group transform of slice b
    auto slice = windowed_slice(f, psi, {0, 0, 2});
    auto fd = fourier_heisenberg(slice, opts);
    double worst = 0.0;
    for (std::size_t i = 0; i < fd.dual.size(); ++i) {
        const auto& a = field.coeff_blocks[1 * fd.dual.size() + i].data();
        const auto& b = fd.matrix_entries()[i].data();
        for (std::size_t q = 0; q < a.size(); ++q)
            worst = std::max(worst, std::abs(a[q] - b[q]));
    }
    CHECK(worst == 0.0); // same code path, bitwise

    // the base sum splits ||f||^2 ||psi||^2 before dual truncation: compare
    // sum_b w_b ||slice_b||^2 against the isometry right-hand side
    double mass = 0.0;
    for (std::size_t bt = 0; bt < 12; ++bt) {
        auto sl = windowed_slice(f, psi, {0, 0, bt * 2});
        mass += field.base_weights[bt] * l2_norm_sq(sl);
    }
    double rhs = field.window_norm_sq * field.signal_l2_sq;
    CHECK(std::abs(mass - rhs) / rhs < 1e-5);

    auto iso = gabor_isometry_check(field);
    std::printf("  heisenberg gabor isometry rel: %.3e\n", iso.rel_error);
    CHECK(iso.rel_error < 1e-1); // remaining gap is the operator-side truncation
}

TEST_CASE("planar motion field: both routes agree and the energy splits") {
    auto m2 = make_motion2(8, box(6.0, 24), box(6.0, 24));
    auto f = make_signal(m2, {TrigFactor{1.0, {0.5}, {0.0, 0.25}},
                              GaussianFactor{1.0, 0.3}, GaussianFactor{1.0, 0.0}});
    Window psi{make_signal(m2, {ConstFactor{}, GaussianFactor{4.5, 0.0},
                                GaussianFactor{4.5, 0.0}})};
    DualOptions opts;
    opts.r_max = 6.0;
    opts.n_r = 6;
    opts.mode_cutoff = 6;
    BaseGrid base{{8, 3, 3}};
    auto fa = gabor_transform(f, psi, base, opts, Motion2Path::Direct);
    auto fb = gabor_transform(f, psi, base, opts, Motion2Path::Bessel);
    REQUIRE(fa.base_size() == 64);
    double worst = 0.0, scale = 0.0;
    for (std::size_t q = 0; q < fa.coeff_blocks.size(); ++q) {
        for (std::size_t i = 0; i < fa.coeff_blocks[q].data().size(); ++i) {
            worst = std::max(worst,
                             std::abs(fa.coeff_blocks[q].data()[i] - fb.coeff_blocks[q].data()[i]));
            scale = std::max(scale, std::abs(fa.coeff_blocks[q].data()[i]));
        }
    }
    CHECK(worst < 1e-9 * std::max(1.0, scale));

    double mass = 0.0;
    for (std::size_t b = 0; b < fa.base_size(); ++b) {
        std::vector<std::size_t> offs = {0, ((b / 8) % 8) * 3, (b % 8) * 3};
        mass += fa.base_weights[b] * l2_norm_sq(windowed_slice(f, psi, offs));
    }
    double rhs = fa.window_norm_sq * fa.signal_l2_sq;
    CHECK(std::abs(mass - rhs) / rhs < 2e-4);

    auto iso = gabor_isometry_check(fa);
    std::printf("  planar motion gabor isometry rel: %.3e\n", iso.rel_error);
    CHECK(iso.rel_error < 5e-2);
}

TEST_CASE("gabor guards") {
    auto e = make_euclidean({box(8.0, 512)});
    auto f = make_signal(e, {GaussianFactor{1.0, 0.0}});
    Window psi{make_signal(e, {GaussianFactor{1.0, 0.0}})};
    CHECK_THROWS_AS(gabor_transform(f, psi, BaseGrid{{7}}), AlignmentError);
    CHECK_THROWS_AS(gabor_transform(f, psi, BaseGrid{{0}}), AlignmentError);
    CHECK_THROWS_AS(gabor_transform(f, psi, BaseGrid{{16, 16}}), DimensionError);

    Window zero{make_signal(e, {GaussianFactor{1.0, 0.0}}, 0.0)};
    CHECK_THROWS_AS(gabor_transform(f, zero, BaseGrid{{16}}), DegenerateSignalError);

    auto e2 = make_euclidean({box(8.0, 512)});
    Window psi2{make_signal(e2, {GaussianFactor{1.0, 0.0}})};
    CHECK_THROWS_AS(gabor_transform(f, psi2, BaseGrid{{16}}), PreconditionError);

    CHECK_THROWS_AS(gabor_isometry_check(GaborField{}), PreconditionError);
}
