#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

#include "qpc/errors.hpp"
#include "qpc/fft.hpp"
#include "qpc/grid.hpp"
#include "qpc/numerics.hpp"
#include "qpc/pulses.hpp"
#include "qpc/special_functions.hpp"
#include "qpc/spectra.hpp"

namespace qpc {

/// Correlation traces over a lag grid. Rsum = Rxx + Ryy and
/// Rdelta = Rxy - Ryx are the real/imaginary parts of the complex
/// autocorrelation of z = x + jy.
struct CorrelationResult {
    Grid lag_grid;
    std::vector<double> Rxx, Ryy, Rxy, Ryx, Rsum, Rdelta;
};

namespace detail {

// Linear cross-correlation sums S[s] = sum_k f[k] g[k+s] for all shifts,
// via zero-padded FFTs. fetch() returns 0 outside the overlap range.
struct ShiftSums {
    std::vector<double> vals;  // circular layout, length L
    std::int64_t nf = 0, ng = 0;

    double fetch(std::int64_t s) const {
        if (s <= -nf || s >= ng) return 0.0;
        const auto L = static_cast<std::int64_t>(vals.size());
        return vals[static_cast<std::size_t>(((s % L) + L) % L)];
    }
};

inline std::vector<cplx> padded_fft(const std::vector<double>& v, std::size_t L) {
    std::vector<cplx> a(L, cplx{0.0, 0.0});
    for (std::size_t k = 0; k < v.size(); ++k) a[k] = v[k];
    fft_pow2(a, false);
    return a;
}

inline ShiftSums xcorr_from_ffts(const std::vector<cplx>& A, const std::vector<cplx>& B,
                                 std::int64_t nf, std::int64_t ng) {
    const std::size_t L = A.size();
    std::vector<cplx> c(L);
    for (std::size_t k = 0; k < L; ++k) c[k] = std::conj(A[k]) * B[k];
    fft_pow2(c, true);
    ShiftSums out;
    out.nf = nf;
    out.ng = ng;
    out.vals.resize(L);
    for (std::size_t k = 0; k < L; ++k) out.vals[k] = c[k].real();
    return out;
}

// Index shift corresponding to lag tau between two aligned grids.
inline std::int64_t lag_shift(const Grid& f, const Grid& g, double tau) {
    const double raw = (f.t0 - g.t0 + tau) / f.dt;
    const auto s = static_cast<std::int64_t>(std::llround(raw));
    if (std::abs(raw - static_cast<double>(s)) > 1e-6)
        throw GridError("correlate: lag is not an integer multiple of dt");
    return s;
}

inline void check_aligned(const Grid& f, const Grid& g) {
    if (std::abs(f.dt - g.dt) > 1e-12 * f.dt)
        throw GridError("correlate: sample steps differ");
    const double off = (f.t0 - g.t0) / f.dt;
    if (std::abs(off - std::round(off)) > 1e-6)
        throw GridError("correlate: grids are not offset by a whole number of steps");
}

}  // namespace detail

/// Discrete correlation dt * sum_k f(t_k) g(t_k + tau) for each lag on the
/// lag grid. Lags must be integer multiples of dt; the grids may differ in
/// origin and length but must share dt and be mutually aligned. Equals the
/// trapezoid-rule integral whenever the integrand has decayed at the overlap
/// ends (the coverage rules guarantee that for the pulse families here).
inline std::vector<double> correlate(const SampledWaveform& f, const SampledWaveform& g,
                                     const Grid& lag_grid) {
    f.validate();
    g.validate();
    lag_grid.validate();
    detail::check_aligned(f.grid, g.grid);

    const std::size_t L = detail::next_pow2(f.grid.n + g.grid.n);
    const auto A = detail::padded_fft(f.samples, L);
    const auto B = detail::padded_fft(g.samples, L);
    const auto sums = detail::xcorr_from_ffts(A, B, static_cast<std::int64_t>(f.grid.n),
                                              static_cast<std::int64_t>(g.grid.n));

    std::vector<double> out(lag_grid.n);
    for (std::size_t i = 0; i < lag_grid.n; ++i)
        out[i] = f.grid.dt * sums.fetch(detail::lag_shift(f.grid, g.grid, lag_grid.time(i)));
    return out;
}

/// All six correlation traces of z = x + jy in one pass (the two component
/// FFTs are shared; Ryx is the exact reflection of Rxy).
inline CorrelationResult complex_autocorrelation(const ComplexEnvelope& z,
                                                 const Grid& lag_grid) {
    z.validate();
    lag_grid.validate();

    const auto n = static_cast<std::int64_t>(z.grid.n);
    const std::size_t L = detail::next_pow2(2 * z.grid.n);
    const auto Fx = detail::padded_fft(z.x, L);
    const auto Fy = detail::padded_fft(z.y, L);
    const auto sxx = detail::xcorr_from_ffts(Fx, Fx, n, n);
    const auto syy = detail::xcorr_from_ffts(Fy, Fy, n, n);
    const auto sxy = detail::xcorr_from_ffts(Fx, Fy, n, n);

    CorrelationResult r;
    r.lag_grid = lag_grid;
    r.Rxx.resize(lag_grid.n);
    r.Ryy.resize(lag_grid.n);
    r.Rxy.resize(lag_grid.n);
    r.Ryx.resize(lag_grid.n);
    r.Rsum.resize(lag_grid.n);
    r.Rdelta.resize(lag_grid.n);
    const double dt = z.grid.dt;
    for (std::size_t i = 0; i < lag_grid.n; ++i) {
        const std::int64_t s = detail::lag_shift(z.grid, z.grid, lag_grid.time(i));
        r.Rxx[i] = dt * sxx.fetch(s);
        r.Ryy[i] = dt * syy.fetch(s);
        r.Rxy[i] = dt * sxy.fetch(s);
        r.Ryx[i] = dt * sxy.fetch(-s);  // R_yx(tau) = R_xy(-tau)
        r.Rsum[i] = r.Rxx[i] + r.Ryy[i];
        r.Rdelta[i] = r.Rxy[i] - r.Ryx[i];
    }
    return r;
}

namespace detail {

// Unit triangle: 1 - |tau|/rho on [-rho, rho], zero outside.
inline double triangle(double tau, double rho) {
    const double a = std::abs(tau);
    return a >= rho ? 0.0 : 1.0 - a / rho;
}

}  // namespace detail

/// Closed-form correlation traces for the hard-signum pulse families.
///
/// The Rect traces are the energy-normalised published shapes (unit peak for
/// Rxx); the engine's unnormalised output is 2*kappa times larger. All other
/// shapes are physical (peak = pulse energy).
inline CorrelationResult closed_form_correlations(const PulseSpec& spec,
                                                  const Grid& lag_grid) {
    spec.validate();
    lag_grid.validate();
    if (spec.phase_model != PhaseModel::HardSignum)
        throw DomainError("closed_form_correlations: hard-signum phase only");
    if (spec.shape == Shape::SoftRect)
        throw DomainError(
            "closed_form_correlations: soft-rect correlations are numerical only");

    CorrelationResult r;
    r.lag_grid = lag_grid;
    const std::size_t n = lag_grid.n;
    r.Rxx.resize(n);
    r.Ryy.resize(n);
    r.Rxy.resize(n);
    r.Ryx.resize(n);
    r.Rsum.resize(n);
    r.Rdelta.resize(n);

    for (std::size_t i = 0; i < n; ++i) {
        const double tau = lag_grid.time(i);
        const double at = std::abs(tau);
        double rxx = 0, ryy = 0, rsum = 0, rdelta = 0;
        switch (spec.shape) {
            case Shape::Laplacian: {
                const double b = spec.beta;
                const double e = std::exp(-b * at);
                rxx = (1.0 + b * at) * e / b;
                ryy = (1.0 - b * at) * e / b;
                rsum = 2.0 * e / b;
                rdelta = 2.0 * tau * e;
                break;
            }
            case Shape::Gaussian: {
                const double a = spec.alpha;
                const double e = std::exp(-0.5 * a * a * tau * tau);
                const double root = std::sqrt(std::numbers::pi / 2.0);
                rxx = root * e / a;
                ryy = root * e * (2.0 * std::erfc(a * at / std::numbers::sqrt2) - 1.0) / a;
                rsum = rxx + ryy;
                rdelta = std::sqrt(2.0 * std::numbers::pi) * e *
                         std::erf(a * tau / std::numbers::sqrt2) / a;
                break;
            }
            case Shape::Rect: {
                const double k = spec.kappa;
                rxx = detail::triangle(tau, 2.0 * k);
                ryy = 2.0 * detail::triangle(tau, k) - detail::triangle(tau, 2.0 * k);
                rsum = 2.0 * detail::triangle(tau, k);
                rdelta = 2.0 * (detail::triangle(tau, 2.0 * k) - detail::triangle(tau, k)) *
                         detail::sgn(tau);
                break;
            }
            case Shape::HermiteGaussian: {
                const double l = spec.lambda;
                const double l2 = l * l, l3 = l2 * l;
                const double z = 0.25 * l2 * tau * tau;
                ryy = std::sqrt(std::numbers::pi) * (2.0 - l2 * tau * tau) * std::exp(-z) /
                      (4.0 * l3);
                rsum = std::exp(-z) / (2.0 * l3) *
                       (4.0 * upper_incomplete_gamma(1.5, z) -
                        l2 * tau * tau * upper_incomplete_gamma(0.5, z));
                rxx = rsum - ryy;
                rdelta = detail::sgn(tau) * (rxx - ryy);
                break;
            }
            default:
                break;
        }
        r.Rxx[i] = rxx;
        r.Ryy[i] = ryy;
        r.Rsum[i] = rsum;
        r.Rdelta[i] = rdelta;
        r.Rxy[i] = 0.5 * rdelta;   // R_xy = B sgn(tau) = Rdelta/2
        r.Ryx[i] = -0.5 * rdelta;  // R_yx = -R_xy
    }
    return r;
}

/// The one-sided split of a symmetric pulse's correlation integrals:
///   A(tau) = int_0^inf x(t) x(t+tau) dt,  B(tau) = int_{-tau}^0 x(t) x(t+tau) dt
/// with Rxx = 2A + B, Ryy = 2A - B, Rsum = 4A, Rdelta = 2 sgn(tau) B.
/// Because the jump of the signum replica becomes an integration limit here,
/// these sums satisfy the identities exactly; they are the faithful route to
/// lag-zero energies.
struct AuxAB {
    double A = 0.0;
    double B = 0.0;
};

namespace detail {

inline double trapz_product_range(const std::vector<double>& f,
                                  const std::vector<double>& g, std::int64_t lo,
                                  std::int64_t hi, std::int64_t shift, double dt) {
    if (hi <= lo) return 0.0;
    auto val = [&](std::int64_t k) {
        return f[static_cast<std::size_t>(k)] * g[static_cast<std::size_t>(k + shift)];
    };
    double sum = 0.5 * (val(lo) + val(hi));
    for (std::int64_t k = lo + 1; k < hi; ++k) sum += val(k);
    return sum * dt;
}

inline AuxAB auxiliary_split(const SampledWaveform& w, double tau) {
    w.validate();
    if (!(tau >= 0.0) || !std::isfinite(tau))
        throw DomainError("auxiliary_AB: tau must be finite and >= 0");
    const auto k0 = w.grid.zero_index();
    if (!k0) throw GridError("auxiliary_AB: grid has no sample at t = 0");
    const auto m = step_offset(tau, w.grid.dt, 1e-6);
    if (!m) throw GridError("auxiliary_AB: tau is not an integer multiple of dt");
    const auto z = static_cast<std::int64_t>(*k0);
    const auto n = static_cast<std::int64_t>(w.grid.n);
    if (z - *m < 0) throw GridError("auxiliary_AB: grid has no sample at t = -tau");

    AuxAB ab;
    ab.A = trapz_product_range(w.samples, w.samples, z, n - 1 - *m, *m, w.grid.dt);
    ab.B = trapz_product_range(w.samples, w.samples, z - *m, z, *m, w.grid.dt);
    return ab;
}

}  // namespace detail

inline AuxAB auxiliary_AB(const SampledWaveform& x, double tau) {
    return detail::auxiliary_split(x, tau);
}

/// Bimodal variant over the antisymmetric primary y: Rxx = 2A + |B|,
/// Ryy = 2A - |B|, Rsum = 4A, Rdelta = 2 sgn(tau) |B| (B <= 0 for tau >= 0).
inline AuxAB auxiliary_AB_bimodal(const SampledWaveform& y, double tau) {
    return detail::auxiliary_split(y, tau);
}

/// Pointwise residual of the determinant identity
/// Rxx*Ryy - Rxy*Ryx = Rsum^2 / 4.
struct DeterminantReport {
    double max_abs_residual = 0.0;
    double relative = 0.0;  // max abs residual / (Rsum(0)^2 / 4)
};

inline DeterminantReport determinant_identity(const CorrelationResult& res) {
    DeterminantReport rep;
    double scale = 0.0;
    if (const auto k0 = res.lag_grid.zero_index())
        scale = res.Rsum[*k0] * res.Rsum[*k0] / 4.0;
    for (std::size_t i = 0; i < res.lag_grid.n; ++i) {
        const double det = res.Rxx[i] * res.Ryy[i] - res.Rxy[i] * res.Ryx[i];
        const double residual = det - res.Rsum[i] * res.Rsum[i] / 4.0;
        rep.max_abs_residual = std::max(rep.max_abs_residual, std::abs(residual));
        if (scale == 0.0)
            scale = std::max(scale, res.Rsum[i] * res.Rsum[i] / 4.0);
    }
    rep.relative = scale > 0.0 ? rep.max_abs_residual / scale : rep.max_abs_residual;
    return rep;
}

/// Correlations from the spectrum:
///   Rsum(tau)   = F^-1{ |W|^2 }             = (1/2pi) int (X^2+Y^2) cos(w tau) dw
///   Rdelta(tau) = sgn(tau) F^-1{ X^2 - Y^2 } (both integrands even).
struct WkCorrelations {
    std::vector<double> Rsum;
    std::vector<double> Rdelta;
};

inline WkCorrelations wiener_khinchin_correlations(const Spectrum& sp, const Grid& lag_grid) {
    sp.validate();
    lag_grid.validate();

    const std::size_t n = sp.omega_grid.n;
    std::vector<double> p(n), q(n);
    double peak = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        p[k] = sp.X[k] * sp.X[k] + sp.Y[k] * sp.Y[k];
        q[k] = sp.X[k] * sp.X[k] - sp.Y[k] * sp.Y[k];
        peak = std::max(peak, p[k]);
    }
    if (peak > 0.0 && std::max(p.front(), p.back()) > 1e-3 * peak)
        throw CoverageError("wiener_khinchin: spectrum does not decay at the grid edges");

    WkCorrelations out;
    out.Rsum.resize(lag_grid.n);
    out.Rdelta.resize(lag_grid.n);
    const double dw = sp.omega_grid.dt;
    const double w_front = sp.omega_grid.t0;
    const double w_back = sp.omega_grid.back();
    for (std::size_t i = 0; i < lag_grid.n; ++i) {
        const double tau = lag_grid.time(i);
        double cp, sp_, cq, sq;
        detail::cos_sin_sum(p, sp.omega_grid, tau, cp, sp_);
        detail::cos_sin_sum(q, sp.omega_grid, tau, cq, sq);
        // trapezoid end-weights
        cp -= 0.5 * (p.front() * std::cos(w_front * tau) + p.back() * std::cos(w_back * tau));
        cq -= 0.5 * (q.front() * std::cos(w_front * tau) + q.back() * std::cos(w_back * tau));
        out.Rsum[i] = cp * dw / (2.0 * std::numbers::pi);
        out.Rdelta[i] = detail::sgn(tau) * cq * dw / (2.0 * std::numbers::pi);
    }
    return out;
}

}  // namespace qpc
