#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "qpc/correlation.hpp"
#include "qpc/pulses.hpp"

using Catch::Approx;
using qpc::Grid;
using qpc::PulseSpec;
using qpc::Shape;

namespace {

PulseSpec make(Shape shape, double p = 1.0) {
    PulseSpec s;
    s.shape = shape;
    switch (shape) {
        case Shape::Gaussian: s.alpha = p; break;
        case Shape::Laplacian: s.beta = p; break;
        case Shape::Rect: s.kappa = p; break;
        case Shape::HermiteGaussian: s.lambda = p; break;
        case Shape::SoftRect: s.gamma = p; s.kappa = 1.0; break;
    }
    return s;
}

Grid lag_grid_of(const Grid& g, std::size_t stride, std::size_t half_lags) {
    const double dt = g.dt * static_cast<double>(stride);
    return Grid{-dt * static_cast<double>(half_lags), dt, 2 * half_lags + 1};
}

}  // namespace

TEST_CASE("correlate: engine vs direct sums and closed forms") {
    SECTION("fft engine equals the direct O(n m) sum") {
        const Grid g = Grid::symmetric(8.0, 1601);
        const auto z = qpc::component_pair(make(Shape::Gaussian), g);
        const auto f = z.in_phase(), h = z.quadrature();
        const Grid lags = lag_grid_of(g, 40, 20);
        const auto r = qpc::correlate(f, h, lags);
        for (std::size_t i = 0; i < lags.n; ++i) {
            const long shift = std::lround(lags.time(i) / g.dt);
            CHECK(r[i] == Approx(oracle::direct_correlation(f, h, shift)).margin(1e-12));
        }
    }

    SECTION("rect autocorrelation is the triangle 2k * Lambda(tau; 2k)") {
        const Grid g = Grid::symmetric(4.0, 8001);  // kappa = 1 on-grid
        const auto x = qpc::envelope(make(Shape::Rect), g);
        const Grid lags = lag_grid_of(g, 4, 900);
        const auto r = qpc::correlate(x, x, lags);
        double max_err = 0.0;
        for (std::size_t i = 0; i < lags.n; ++i) {
            const double tau = std::abs(lags.time(i));
            const double expected = tau >= 2.0 ? 0.0 : 2.0 - tau;
            max_err = std::max(max_err, std::abs(r[i] - expected));
        }
        CHECK(max_err < 2.0 * g.dt);  // peak 2 = pulse energy
        CHECK(r[(lags.n - 1) / 2] == Approx(2.0).margin(2.0 * g.dt));
    }

    SECTION("correlate(f,g)(tau) = correlate(g,f)(-tau)") {
        const Grid g = Grid::symmetric(8.0, 801);
        const auto z = qpc::component_pair(make(Shape::Gaussian), g);
        const Grid lags = lag_grid_of(g, 10, 30);
        const auto fg = qpc::correlate(z.in_phase(), z.quadrature(), lags);
        const auto gf = qpc::correlate(z.quadrature(), z.in_phase(), lags);
        for (std::size_t i = 0; i < lags.n; ++i)
            CHECK(fg[i] == Approx(gf[lags.n - 1 - i]).margin(1e-13));
    }

    SECTION("gaussian self-correlation at zero lag = sqrt(pi/2)") {
        const Grid g = Grid::symmetric(8.0, 16001);
        const auto x = qpc::envelope(make(Shape::Gaussian), g);
        const Grid lags{0.0, g.dt, 2};
        const auto r = qpc::correlate(x, x, lags);
        CHECK(r[0] == Approx(1.2533141373155003).margin(1e-9));
    }

    SECTION("non-multiple lag is rejected") {
        const Grid g = Grid::symmetric(1.0, 101);
        const auto x = qpc::envelope(make(Shape::Gaussian, 8.0), g);
        const Grid lags{0.0123, 1.0, 2};
        CHECK_THROWS_AS(qpc::correlate(x, x, lags), qpc::GridError);
    }
}

TEST_CASE("complex autocorrelation against the published closed forms") {
    // mirrors the acceptance tolerances: 1e-4*peak smooth, 1e-3*peak cusped
    struct Case {
        Shape shape;
        double tol_rel;
    };
    for (const auto& c : {Case{Shape::Gaussian, 1e-4}, Case{Shape::Laplacian, 1e-3},
                          Case{Shape::HermiteGaussian, 1e-4}}) {
        const PulseSpec spec = make(c.shape);
        const Grid g = spec.default_grid();
        const auto z = qpc::component_pair(spec, g);
        const Grid lags = lag_grid_of(g, (g.n - 1) / 10000, 4800);
        const auto num = qpc::complex_autocorrelation(z, lags);
        const auto ref = qpc::closed_form_correlations(spec, lags);
        const double peak = ref.Rsum[(lags.n - 1) / 2];
        double max_err = 0.0;
        for (std::size_t i = 0; i < lags.n; ++i) {
            max_err = std::max({max_err, std::abs(num.Rxx[i] - ref.Rxx[i]),
                                std::abs(num.Ryy[i] - ref.Ryy[i]),
                                std::abs(num.Rsum[i] - ref.Rsum[i]),
                                std::abs(num.Rdelta[i] - ref.Rdelta[i])});
        }
        INFO("shape " << qpc::to_string(c.shape));
        CHECK(max_err < c.tol_rel * peak);
    }
}

TEST_CASE("complex autocorrelation, spot values") {
    SECTION("gaussian: Rsum(0) = sqrt(2 pi), Rdelta(0) = 0") {
        const PulseSpec spec = make(Shape::Gaussian);
        const Grid g = spec.default_grid();
        const auto z = qpc::component_pair(spec, g);
        const Grid lags = lag_grid_of(g, 400, 10);
        const auto r = qpc::complex_autocorrelation(z, lags);
        const std::size_t k0 = (lags.n - 1) / 2;
        CHECK(r.Rsum[k0] == Approx(2.5066282746310005).epsilon(1e-4));
        CHECK(r.Rdelta[k0] == 0.0);
    }

    SECTION("laplacian at tau = 1: Rsum = Rdelta = 2/e") {
        const PulseSpec spec = make(Shape::Laplacian);
        const Grid g = spec.default_grid();
        const auto z = qpc::component_pair(spec, g);
        const auto m = static_cast<std::size_t>(std::llround(1.0 / g.dt));
        const Grid lags{-g.dt * static_cast<double>(m), g.dt * static_cast<double>(m), 3};
        const auto r = qpc::complex_autocorrelation(z, lags);
        CHECK(r.Rsum[2] == Approx(0.73575888234288464).epsilon(1e-5));
        CHECK(r.Rdelta[2] == Approx(0.73575888234288464).epsilon(1e-5));
        CHECK(r.Rdelta[0] == Approx(-0.73575888234288464).epsilon(1e-5));
    }
}

TEST_CASE("closed-form correlations, spot values") {
    SECTION("laplacian at tau = 0") {
        const Grid lags = Grid::symmetric(3.0, 7);
        const auto r = qpc::closed_form_correlations(make(Shape::Laplacian), lags);
        const std::size_t k0 = 3;
        CHECK(r.Rxx[k0] == Approx(1.0).margin(1e-14));
        CHECK(r.Ryy[k0] == Approx(1.0).margin(1e-14));
        CHECK(r.Rsum[k0] == Approx(2.0).margin(1e-14));
    }

    SECTION("gaussian Rsum(1): frozen oracle value") {
        // oracle: 4 * quadrature of int_0^inf x(t) x(t+1) dt
        const double a1 = 4.0 * oracle::integrate(
                                    [](double t) {
                                        return std::exp(-t * t) * std::exp(-(t + 1) * (t + 1));
                                    },
                                    0.0, 20.0);
        CHECK(a1 == Approx(0.48242204730514919).margin(1e-12));
        const Grid lags{1.0, 1.0, 2};
        const auto r = qpc::closed_form_correlations(make(Shape::Gaussian), lags);
        CHECK(r.Rsum[0] == Approx(0.48242204730514919).margin(1e-14));
    }

    SECTION("hermite with lambda^2 = 1/2: Rsum(0) = sqrt(pi)/lambda^3 = 2 E_y") {
        const double lam = 1.0 / std::numbers::sqrt2;
        const Grid lags{0.0, 0.5, 3};
        const auto r = qpc::closed_form_correlations(make(Shape::HermiteGaussian, lam), lags);
        const double expected = std::sqrt(std::numbers::pi) / (lam * lam * lam);
        CHECK(r.Rsum[0] == Approx(expected).margin(1e-12));
        // oracle: quadrature of 4 int_0^inf y(t) y(t+tau) dt at tau = 0
        const double ey2 = 4.0 * oracle::integrate(
                                     [lam](double t) {
                                         return t * t * std::exp(-lam * lam * t * t);
                                     },
                                     0.0, 40.0);
        CHECK(r.Rsum[0] == Approx(ey2).margin(1e-10));
    }

    SECTION("hermite normalised Rxx display at lambda^2 = 1/2: scale is sqrt(2 pi)") {
        const double lam = 1.0 / std::numbers::sqrt2;
        const double pi = std::numbers::pi;
        for (double tau : {0.0, 0.7, 1.5, 3.0}) {
            const Grid lags{tau, 1.0, 2};
            const auto r =
                qpc::closed_form_correlations(make(Shape::HermiteGaussian, lam), lags);
            const double z = tau * tau / 8.0;
            const double display =
                (16.0 * qpc::upper_incomplete_gamma(1.5, z) -
                 2.0 * tau * tau * qpc::upper_incomplete_gamma(0.5, z) +
                 std::sqrt(pi) * (tau * tau - 4.0)) *
                std::exp(-z) / (4.0 * std::sqrt(pi));
            CHECK(r.Rxx[0] == Approx(std::sqrt(2.0 * pi) * display).margin(1e-12));
        }
    }

    SECTION("hermite closed forms vs quadrature oracle across lags") {
        for (double tau : {0.5, 1.0, 2.0}) {
            const Grid lags{tau, 1.0, 2};
            const auto r =
                qpc::closed_form_correlations(make(Shape::HermiteGaussian), lags);
            auto y = [](double t) { return t * std::exp(-0.5 * t * t); };
            const double ryy = oracle::integrate(
                [&](double t) { return y(t) * y(t + tau); }, -40.0, 40.0);
            const double rsum = 4.0 * oracle::integrate(
                                          [&](double t) { return y(t) * y(t + tau); }, 0.0,
                                          40.0);
            CHECK(r.Ryy[0] == Approx(ryy).margin(1e-10));
            CHECK(r.Rsum[0] == Approx(rsum).margin(1e-10));
        }
    }

    SECTION("rect published forms are the engine shape normalised by 2*kappa") {
        const Grid g = Grid::symmetric(4.0, 8001);
        const auto z = qpc::component_pair(make(Shape::Rect), g);
        const Grid lags = lag_grid_of(g, 8, 450);
        const auto num = qpc::complex_autocorrelation(z, lags);
        const auto ref = qpc::closed_form_correlations(make(Shape::Rect), lags);
        double max_err = 0.0;
        for (std::size_t i = 0; i < lags.n; ++i) {
            max_err = std::max(max_err, std::abs(num.Rsum[i] / 2.0 - ref.Rsum[i]));
            max_err = std::max(max_err, std::abs(num.Rxx[i] / 2.0 - ref.Rxx[i]));
        }
        CHECK(max_err < 2e-3);
        // sidelobe-free: Rsum vanishes beyond |tau| = kappa (fft noise floor)
        for (std::size_t i = 0; i < lags.n; ++i)
            if (std::abs(lags.time(i)) >= 1.0 + 2.0 * g.dt)
                CHECK(std::abs(num.Rsum[i]) < 1e-10);
    }

    SECTION("soft rect has no closed form here") {
        CHECK_THROWS_AS(
            qpc::closed_form_correlations(make(Shape::SoftRect, 3.0), Grid{0.0, 1.0, 3}),
            qpc::DomainError);
    }
}

TEST_CASE("auxiliary one-sided split") {
    SECTION("B(0) = 0 and Rsum(0) = 4A(0) = 2 E_x") {
        const PulseSpec spec = make(Shape::Gaussian);
        const Grid g = Grid::symmetric(8.0, 16001);
        const auto x = qpc::envelope(spec, g);
        const auto ab = qpc::auxiliary_AB(x, 0.0);
        CHECK(ab.B == 0.0);
        CHECK(4.0 * ab.A == Approx(2.0 * qpc::signum_pair_energy(x)).epsilon(1e-12));
        CHECK(4.0 * ab.A == Approx(2.5066282746310005).epsilon(1e-8));
    }

    SECTION("gaussian at tau = 1: 4A equals the closed-form Rsum") {
        const Grid g = Grid::symmetric(8.0, 16001);
        const auto x = qpc::envelope(make(Shape::Gaussian), g);
        const auto ab = qpc::auxiliary_AB(x, 1.0);
        CHECK(4.0 * ab.A == Approx(0.48242204730514919).margin(5e-7));
        // 2B = Rdelta(1): oracle value
        CHECK(2.0 * ab.B == Approx(1.0379248537611316).margin(5e-7));
    }

    SECTION("laplacian split: A = e^-tau/2, B = tau e^-tau") {
        const Grid g = Grid::symmetric(14.0, 28001);
        const auto x = qpc::envelope(make(Shape::Laplacian), g);
        for (double tau : {0.5, 1.0, 2.0}) {
            const auto ab = qpc::auxiliary_AB(x, tau);
            CHECK(ab.A == Approx(0.5 * std::exp(-tau)).epsilon(1e-6));
            CHECK(ab.B == Approx(tau * std::exp(-tau)).epsilon(1e-6));
        }
    }

    SECTION("bimodal split: Btilde < 0 and |Btilde| enters the identities") {
        const Grid g = Grid::symmetric(8.0, 16001);
        const auto z = qpc::component_pair(make(Shape::HermiteGaussian), g);
        const auto ab = qpc::auxiliary_AB_bimodal(z.quadrature(), 1.0);
        CHECK(ab.B < 0.0);
        CHECK(ab.B == Approx(-0.12364232535119247).margin(5e-7));
        // Rxx = 2A + |B| against the closed form
        const Grid lags{1.0, 1.0, 2};
        const auto ref = qpc::closed_form_correlations(make(Shape::HermiteGaussian), lags);
        CHECK(2.0 * ab.A + std::abs(ab.B) == Approx(ref.Rxx[0]).margin(1e-6));
        CHECK(2.0 * ab.A - std::abs(ab.B) == Approx(ref.Ryy[0]).margin(1e-6));
    }

    SECTION("misaligned tau is rejected") {
        const Grid g = Grid::symmetric(8.0, 1601);
        const auto x = qpc::envelope(make(Shape::Gaussian), g);
        CHECK_THROWS_AS(qpc::auxiliary_AB(x, 0.0123456), qpc::GridError);
        CHECK_THROWS_AS(qpc::auxiliary_AB(x, -1.0), qpc::DomainError);
    }
}

TEST_CASE("appendix identities hold for the engine, randomized lags") {
    std::mt19937 gen(20240817);
    for (auto shape : {Shape::Gaussian, Shape::Laplacian, Shape::HermiteGaussian}) {
        const PulseSpec spec = make(shape);
        const Grid g = Grid::symmetric(spec.coverage_half_width(), 16001);
        const auto z = qpc::component_pair(spec, g);
        const auto x = z.in_phase();
        const auto y = z.quadrature();
        std::uniform_int_distribution<long> pick(1, static_cast<long>((g.n - 1) / 2 - 1));

        for (int trial = 0; trial < 20; ++trial) {
            const long m = pick(gen);
            const double tau = static_cast<double>(m) * g.dt;
            const Grid lags{-tau, tau, 3};
            const auto r = qpc::complex_autocorrelation(z, lags);
            const double peak = 2.0 * qpc::signum_pair_energy(x);

            const bool bimodal = shape == Shape::HermiteGaussian;
            const auto ab = bimodal ? qpc::auxiliary_AB_bimodal(y, tau)
                                    : qpc::auxiliary_AB(x, tau);
            const double babs = bimodal ? std::abs(ab.B) : ab.B;

            INFO(qpc::to_string(shape) << " tau=" << tau);
            CHECK(std::abs(r.Rxx[2] - (2.0 * ab.A + babs)) < 1e-6 * peak);
            CHECK(std::abs(r.Ryy[2] - (2.0 * ab.A - babs)) < 1e-6 * peak);
            CHECK(std::abs(r.Rsum[2] - 4.0 * ab.A) < 1e-6 * peak);
            CHECK(std::abs(r.Rdelta[2] - 2.0 * babs) < 1e-6 * peak);
            CHECK(std::abs(r.Rdelta[0] + 2.0 * babs) < 1e-6 * peak);  // odd in tau
        }
    }
}

TEST_CASE("correlation invariants") {
    for (auto shape : {Shape::Gaussian, Shape::Laplacian, Shape::HermiteGaussian}) {
        const PulseSpec spec = make(shape);
        const Grid g = Grid::symmetric(spec.coverage_half_width(), 16001);
        const auto z = qpc::component_pair(spec, g);
        const Grid lags = lag_grid_of(g, 16, 400);
        const auto r = qpc::complex_autocorrelation(z, lags);
        const std::size_t k0 = (lags.n - 1) / 2;
        const double peak = r.Rsum[k0];

        INFO(qpc::to_string(shape));
        for (std::size_t i = 0; i < lags.n; ++i) {
            const std::size_t j = lags.n - 1 - i;
            CHECK(std::abs(r.Rsum[i] - r.Rsum[j]) < 1e-10 * peak);
            CHECK(std::abs(r.Rdelta[i] + r.Rdelta[j]) < 1e-10 * peak);
            CHECK(std::abs(r.Ryx[i] + r.Rxy[i]) < 1e-9 * peak);
            const double s = qpc::detail::sgn(lags.time(i));
            CHECK(std::abs(r.Rdelta[i] - (r.Rxx[i] - r.Ryy[i]) * s) < 1e-9 * peak);
        }

        // conjugating z negates Rdelta and keeps Rsum
        auto zc = z;
        for (auto& v : zc.y) v = -v;
        const auto rc = qpc::complex_autocorrelation(zc, lags);
        for (std::size_t i = 0; i < lags.n; i += 29) {
            CHECK(rc.Rsum[i] == Approx(r.Rsum[i]).margin(1e-12 * peak));
            CHECK(rc.Rdelta[i] == Approx(-r.Rdelta[i]).margin(1e-12 * peak));
        }
    }
}

TEST_CASE("determinant identity") {
    SECTION("numerical traces satisfy it at rounding level") {
        for (auto shape :
             {Shape::Gaussian, Shape::Laplacian, Shape::Rect, Shape::HermiteGaussian}) {
            const PulseSpec spec = make(shape);
            Grid g = Grid::symmetric(spec.coverage_half_width(), 16001);
            if (shape == Shape::Rect) g = Grid::symmetric(2.0, 16001);
            const auto z = qpc::component_pair(spec, g);
            const Grid lags = lag_grid_of(g, 16, 450);
            const auto r = qpc::complex_autocorrelation(z, lags);
            const auto rep = qpc::determinant_identity(r);
            INFO(qpc::to_string(shape));
            CHECK(rep.relative < 1e-6);
        }
    }

    SECTION("laplacian closed form reproduces exp(-2 beta |tau|)/beta^2") {
        const Grid lags = Grid::symmetric(5.0, 2001);
        const auto r = qpc::closed_form_correlations(make(Shape::Laplacian), lags);
        for (std::size_t i = 0; i < lags.n; i += 41) {
            const double tau = lags.time(i);
            const double det = r.Rxx[i] * r.Ryy[i] - r.Rxy[i] * r.Ryx[i];
            CHECK(det == Approx(std::exp(-2.0 * std::abs(tau))).margin(1e-12));
        }
        const auto rep = qpc::determinant_identity(r);
        CHECK(rep.relative < 1e-12);
    }
}

TEST_CASE("wiener-khinchin route") {
    SECTION("laplacian: F^-1{4/(w^2+1)} = 2 exp(-|tau|)") {
        // 1/w^2 spectral tail: the window must be wide for the cusp
        const Grid wg = Grid::symmetric(20000.0, 800001);
        const auto sp =
            qpc::closed_form_spectrum(make(Shape::Laplacian), wg);
        const Grid lags = Grid::symmetric(3.0, 41);
        const auto wk = qpc::wiener_khinchin_correlations(sp, lags);
        double max_s = 0.0, max_d = 0.0;
        for (std::size_t i = 0; i < lags.n; ++i) {
            const double tau = lags.time(i);
            max_s = std::max(max_s, std::abs(wk.Rsum[i] - 2.0 * std::exp(-std::abs(tau))));
            max_d = std::max(max_d,
                             std::abs(wk.Rdelta[i] - 2.0 * tau * std::exp(-std::abs(tau))));
        }
        CHECK(max_s < 1e-4);
        CHECK(max_d < 1e-5);
    }

    SECTION("zero spectrum gives zero traces") {
        const Grid wg = Grid::symmetric(10.0, 101);
        qpc::Spectrum sp{wg, std::vector<double>(wg.n, 0.0), std::vector<double>(wg.n, 0.0)};
        const auto wk = qpc::wiener_khinchin_correlations(sp, Grid::symmetric(1.0, 11));
        for (double v : wk.Rsum) CHECK(v == 0.0);
        for (double v : wk.Rdelta) CHECK(v == 0.0);
    }
}
