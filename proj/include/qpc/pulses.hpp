#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "qpc/errors.hpp"
#include "qpc/grid.hpp"
#include "qpc/numerics.hpp"

namespace qpc {

enum class Shape : std::uint8_t { Gaussian, Laplacian, SoftRect, Rect, HermiteGaussian };
enum class PhaseModel : std::uint8_t { HardSignum, TanhSigmoid };

inline const char* to_string(Shape s) {
    switch (s) {
        case Shape::Gaussian: return "gaussian";
        case Shape::Laplacian: return "laplacian";
        case Shape::SoftRect: return "soft-rect";
        case Shape::Rect: return "rect";
        case Shape::HermiteGaussian: return "hermite-gaussian";
    }
    return "?";
}

inline const char* to_string(PhaseModel m) {
    return m == PhaseModel::HardSignum ? "hard-signum" : "tanh-sigmoid";
}

/// Declarative description of a pulse family. Exactly the parameters the
/// shape (and phase model) needs must be set, all strictly positive:
///   Gaussian          exp(-alpha^2 t^2)                alpha
///   Laplacian         exp(-beta |t|)                   beta
///   SoftRect          {tanh[g(t+k)] - tanh[g(t-k)]}/2  gamma, kappa
///   Rect              [sgn(t+k) - sgn(t-k)]/2          kappa
///   HermiteGaussian   |t| exp(-lambda^2 t^2 / 2)       lambda
/// The TanhSigmoid phase model additionally needs gamma.
struct PulseSpec {
    Shape shape = Shape::Gaussian;
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
    double kappa = 0.0;
    double lambda = 0.0;
    PhaseModel phase_model = PhaseModel::HardSignum;

    void validate() const {
        auto need = [](double v, const char* name) {
            if (!(v > 0.0) || !std::isfinite(v))
                throw DomainError(std::string("pulse spec: parameter '") + name +
                                  "' must be set and positive");
        };
        auto forbid = [](double v, const char* name) {
            if (v != 0.0)
                throw DomainError(std::string("pulse spec: parameter '") + name +
                                  "' is not used by this shape");
        };
        const bool needs_gamma =
            shape == Shape::SoftRect || phase_model == PhaseModel::TanhSigmoid;
        switch (shape) {
            case Shape::Gaussian:
                need(alpha, "alpha"); forbid(beta, "beta"); forbid(kappa, "kappa");
                forbid(lambda, "lambda");
                break;
            case Shape::Laplacian:
                need(beta, "beta"); forbid(alpha, "alpha"); forbid(kappa, "kappa");
                forbid(lambda, "lambda");
                break;
            case Shape::SoftRect:
                need(gamma, "gamma"); need(kappa, "kappa"); forbid(alpha, "alpha");
                forbid(beta, "beta"); forbid(lambda, "lambda");
                break;
            case Shape::Rect:
                need(kappa, "kappa"); forbid(alpha, "alpha"); forbid(beta, "beta");
                forbid(lambda, "lambda");
                break;
            case Shape::HermiteGaussian:
                need(lambda, "lambda"); forbid(alpha, "alpha"); forbid(beta, "beta");
                forbid(kappa, "kappa");
                if (phase_model == PhaseModel::TanhSigmoid)
                    throw DomainError("pulse spec: hermite-gaussian supports hard-signum only");
                break;
        }
        if (needs_gamma) need(gamma, "gamma");
        else if (shape != Shape::SoftRect) forbid(gamma, "gamma");
    }

    /// Time scale of the family (1/alpha, 1/beta, kappa, 1/lambda).
    double characteristic_width() const {
        switch (shape) {
            case Shape::Gaussian: return 1.0 / alpha;
            case Shape::Laplacian: return 1.0 / beta;
            case Shape::SoftRect: return kappa;
            case Shape::Rect: return kappa;
            case Shape::HermiteGaussian: return 1.0 / lambda;
        }
        return 1.0;
    }

    /// Half-width that keeps the envelope below 1e-6 of its peak at the grid
    /// edge: 8/alpha, 14/beta, kappa + 8/gamma, 2*kappa, 8/lambda.
    double coverage_half_width() const {
        switch (shape) {
            case Shape::Gaussian: return 8.0 / alpha;
            case Shape::Laplacian: return 14.0 / beta;
            case Shape::SoftRect: return kappa + 8.0 / gamma;
            case Shape::Rect: return 2.0 * kappa;
            case Shape::HermiteGaussian: return 8.0 / lambda;
        }
        return 8.0;
    }

    /// Grid sized for correlation-grade quadrature. The Gaussian grid is the
    /// finest: the t=0 sample of a signum replica carries the jump midpoint,
    /// which costs dt*x(0)^2 in lag-zero correlation sums.
    Grid default_grid() const {
        validate();
        std::size_t n = 16001;
        switch (shape) {
            case Shape::Gaussian: n = 160001; break;
            case Shape::Laplacian: n = 28001; break;
            default: break;
        }
        return Grid::symmetric(coverage_half_width(), n);
    }
};

namespace detail {

// Index offset of tau on the grid, or nullopt if tau is not a sample multiple.
inline std::optional<std::int64_t> step_offset(double tau, double dt, double tol = 1e-9) {
    const double mf = tau / dt;
    const auto m = static_cast<std::int64_t>(std::llround(mf));
    if (std::abs(mf - static_cast<double>(m)) > tol) return std::nullopt;
    return m;
}

}  // namespace detail

namespace detail {

// Sample time, measured from the zero sample when the grid has one: dt*(k-k0)
// is exactly antisymmetric in floating point, so sampled even/odd pulses are
// bitwise symmetric.
struct TimeOf {
    const Grid& grid;
    std::optional<std::size_t> k0;
    explicit TimeOf(const Grid& g) : grid(g), k0(g.zero_index()) {}
    double operator()(std::size_t k) const {
        if (k0)
            return grid.dt * (static_cast<double>(k) -
                              static_cast<double>(*k0));
        return grid.time(k);
    }
};

}  // namespace detail

/// Natural envelope mu(t) sampled on the grid. Throws CoverageError when the
/// grid cuts the envelope off above 1e-6 of its peak.
inline SampledWaveform envelope(const PulseSpec& spec, const Grid& grid) {
    spec.validate();
    grid.validate();

    SampledWaveform w;
    w.grid = grid;
    w.samples.resize(grid.n);
    const detail::TimeOf time(grid);

    switch (spec.shape) {
        case Shape::Gaussian:
            for (std::size_t k = 0; k < grid.n; ++k) {
                const double t = time(k);
                w.samples[k] = std::exp(-spec.alpha * spec.alpha * t * t);
            }
            break;
        case Shape::Laplacian:
            for (std::size_t k = 0; k < grid.n; ++k)
                w.samples[k] = std::exp(-spec.beta * std::abs(time(k)));
            break;
        case Shape::SoftRect:
            for (std::size_t k = 0; k < grid.n; ++k) {
                const double t = time(k);
                w.samples[k] = 0.5 * (std::tanh(spec.gamma * (t + spec.kappa)) -
                                      std::tanh(spec.gamma * (t - spec.kappa)));
            }
            break;
        case Shape::Rect: {
            // Edge samples take the signum midpoint value 1/2; resolved by
            // index arithmetic when kappa lands on the grid.
            const auto k0 = grid.zero_index();
            const auto m = detail::step_offset(spec.kappa, grid.dt);
            if (k0 && m) {
                const auto z = static_cast<std::int64_t>(*k0);
                for (std::size_t k = 0; k < grid.n; ++k) {
                    const auto d = std::llabs(static_cast<std::int64_t>(k) - z);
                    w.samples[k] = d < *m ? 1.0 : (d == *m ? 0.5 : 0.0);
                }
            } else {
                const double tol = 1e-12 * std::max(1.0, spec.kappa);
                for (std::size_t k = 0; k < grid.n; ++k) {
                    const double t = time(k);
                    w.samples[k] = 0.5 * (detail::sgn(t + spec.kappa, tol) -
                                          detail::sgn(t - spec.kappa, tol));
                }
            }
            break;
        }
        case Shape::HermiteGaussian:
            for (std::size_t k = 0; k < grid.n; ++k) {
                const double t = time(k);
                w.samples[k] = std::abs(t) * std::exp(-0.5 * spec.lambda * spec.lambda * t * t);
            }
            break;
    }

    double peak = 0.0;
    for (double v : w.samples) peak = std::max(peak, std::abs(v));
    const double edge = std::max(std::abs(w.samples.front()), std::abs(w.samples.back()));
    if (spec.shape != Shape::Rect && edge > 1e-6 * peak)
        throw CoverageError("envelope: grid too narrow, edge value above 1e-6 of peak");
    if (spec.shape == Shape::Rect && grid.span() / 2.0 <= spec.kappa)
        throw CoverageError("envelope: grid too narrow for the rect support");
    return w;
}

/// Antisymmetric replica y(t) = x(t) sgn(t) with sgn(0) = 0. The grid must
/// carry a sample at t = 0.
///
/// Note on energy sums: trapz(y^2) undercounts the almost-everywhere value of
/// y^2 by dt*x(0)^2 because the t=0 sample is the jump midpoint; use
/// auxiliary_AB / signum_pair_energy when the energy identity E_y = E_x is
/// the quantity of interest.
inline SampledWaveform antisymmetric_replica(const SampledWaveform& x) {
    x.validate();
    const auto k0 = x.grid.zero_index();
    if (!k0) throw GridError("antisymmetric_replica: grid has no sample at t = 0");
    SampledWaveform y;
    y.grid = x.grid;
    y.samples.resize(x.grid.n);
    for (std::size_t k = 0; k < x.grid.n; ++k) {
        if (k < *k0)
            y.samples[k] = -x.samples[k];
        else if (k == *k0)
            y.samples[k] = 0.0;
        else
            y.samples[k] = x.samples[k];
    }
    return y;
}

/// w(t) = x(t) + y(t). For a signum replica this is the causal waveform:
/// 2x for t > 0, x(0) at t = 0, identically zero for t < 0.
inline SampledWaveform causal_sum(const SampledWaveform& x, const SampledWaveform& y) {
    x.validate();
    y.validate();
    if (!x.grid.same_as(y.grid)) throw GridError("causal_sum: grids differ");
    SampledWaveform w;
    w.grid = x.grid;
    w.samples.resize(x.grid.n);
    for (std::size_t k = 0; k < x.grid.n; ++k) w.samples[k] = x.samples[k] + y.samples[k];
    return w;
}

/// The symmetric pulse and its signum replica as one complex envelope,
/// z = x (1 + j sgn): the pair every correlation and receiver path consumes.
inline ComplexEnvelope component_pair(const PulseSpec& spec, const Grid& grid) {
    SampledWaveform x = envelope(spec, grid);
    SampledWaveform y = antisymmetric_replica(x);
    return ComplexEnvelope{grid, std::move(x.samples), std::move(y.samples)};
}

/// Canonical QAM components x = mu cos(psi), y = mu sin(psi).
///
/// HardSignum: psi = (pi/4) sgn(t), so x = mu/sqrt(2) off t = 0 and x(0) = mu(0).
/// TanhSigmoid: psi = (pi/4) tanh(gamma t).
/// HermiteGaussian: the bimodal pair y = t exp(-lambda^2 t^2/2), x = |t| exp(...).
inline ComplexEnvelope quadrature_components(const PulseSpec& spec, const Grid& grid) {
    spec.validate();
    if (spec.shape == Shape::HermiteGaussian) {
        SampledWaveform x = envelope(spec, grid);
        SampledWaveform y = antisymmetric_replica(x);
        return ComplexEnvelope{grid, std::move(x.samples), std::move(y.samples)};
    }

    SampledWaveform mu = envelope(spec, grid);
    ComplexEnvelope z;
    z.grid = grid;
    z.x.resize(grid.n);
    z.y.resize(grid.n);
    if (spec.phase_model == PhaseModel::HardSignum) {
        const auto k0 = grid.zero_index();
        if (!k0) throw GridError("quadrature_components: grid has no sample at t = 0");
        const double c = std::numbers::sqrt2 / 2.0;
        for (std::size_t k = 0; k < grid.n; ++k) {
            if (k == *k0) {
                z.x[k] = mu.samples[k];
                z.y[k] = 0.0;
            } else {
                z.x[k] = mu.samples[k] * c;
                z.y[k] = (k < *k0 ? -c : c) * mu.samples[k];
            }
        }
    } else {
        const detail::TimeOf time(grid);
        for (std::size_t k = 0; k < grid.n; ++k) {
            const double psi =
                0.25 * std::numbers::pi * std::tanh(spec.gamma * time(k));
            z.x[k] = mu.samples[k] * std::cos(psi);
            z.y[k] = mu.samples[k] * std::sin(psi);
        }
    }
    return z;
}

/// Energy of x (equivalently of its signum replica) from the one-sided split
/// E = 2 * int_0^inf x^2 dt, which charges the t = 0 jump of the replica by
/// its two-sided limits and therefore satisfies E_y = E_x exactly.
inline double signum_pair_energy(const SampledWaveform& x) {
    x.validate();
    const auto k0 = x.grid.zero_index();
    if (!k0) throw GridError("signum_pair_energy: grid has no sample at t = 0");
    double sum = 0.5 * (x.samples[*k0] * x.samples[*k0] +
                        x.samples.back() * x.samples.back());
    for (std::size_t k = *k0 + 1; k + 1 < x.grid.n; ++k)
        sum += x.samples[k] * x.samples[k];
    return 2.0 * sum * x.grid.dt;
}

}  // namespace qpc
