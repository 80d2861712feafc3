#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "qpc/errors.hpp"
#include "qpc/grid.hpp"
#include "qpc/numerics.hpp"
#include "qpc/pulses.hpp"
#include "qpc/special_functions.hpp"

namespace qpc {

/// W(omega) = X(omega) + j Y(omega) of a causal waveform, sampled on an
/// angular-frequency grid. X is even and Y odd for every pulse family here.
struct Spectrum {
    Grid omega_grid;
    std::vector<double> X;
    std::vector<double> Y;

    void validate() const {
        omega_grid.validate();
        if (X.size() != omega_grid.n || Y.size() != omega_grid.n)
            throw GridError("spectrum: component length does not match grid");
    }
};

/// Closed-form spectrum of the causal (hard-signum) pulse.
///
/// Gaussian:  X = (sqrt(pi)/a) exp(-w^2/4a^2),     Y = -(2/a) D(w/2a)
/// Laplacian: X = 2b/(w^2+b^2),                    Y = -2w/(w^2+b^2)
/// Hermite:   X = 2/l^2 - (2 sqrt2/l^3) w D(w/(sqrt2 l)),
///            Y = -(sqrt(2 pi)/l^3) w exp(-w^2/2l^2)
///
/// The Hermite X and the Gaussian Y are evaluated through the Dawson
/// integral; the erf-of-imaginary-argument form would overflow for
/// |w|/l beyond ~19.
inline Spectrum closed_form_spectrum(const PulseSpec& spec, const Grid& omega_grid) {
    spec.validate();
    omega_grid.validate();
    if (spec.phase_model != PhaseModel::HardSignum)
        throw DomainError("closed_form_spectrum: hard-signum phase only");

    Spectrum sp;
    sp.omega_grid = omega_grid;
    sp.X.resize(omega_grid.n);
    sp.Y.resize(omega_grid.n);

    switch (spec.shape) {
        case Shape::Gaussian: {
            const double a = spec.alpha;
            for (std::size_t k = 0; k < omega_grid.n; ++k) {
                const double w = omega_grid.time(k);
                sp.X[k] = std::sqrt(std::numbers::pi) / a * std::exp(-w * w / (4.0 * a * a));
                sp.Y[k] = -2.0 / a * dawson(w / (2.0 * a));
            }
            break;
        }
        case Shape::Laplacian: {
            const double b = spec.beta;
            for (std::size_t k = 0; k < omega_grid.n; ++k) {
                const double w = omega_grid.time(k);
                sp.X[k] = 2.0 * b / (w * w + b * b);
                sp.Y[k] = -2.0 * w / (w * w + b * b);
            }
            break;
        }
        case Shape::HermiteGaussian: {
            const double l = spec.lambda;
            const double l2 = l * l, l3 = l2 * l;
            for (std::size_t k = 0; k < omega_grid.n; ++k) {
                const double w = omega_grid.time(k);
                sp.X[k] = 2.0 / l2 -
                          2.0 * std::numbers::sqrt2 / l3 * w *
                              dawson(w / (std::numbers::sqrt2 * l));
                sp.Y[k] = -std::sqrt(2.0 * std::numbers::pi) / l3 * w *
                          std::exp(-w * w / (2.0 * l2));
            }
            break;
        }
        default:
            throw DomainError("closed_form_spectrum: no closed form for this shape");
    }
    return sp;
}

/// X(w) = Re, Y(w) = Im of int w(t) exp(-j w t) dt by direct quadrature on
/// the requested frequency grid. Rectangle sums on the library's symmetric
/// grids equal the piecewise trapezoid because jump samples carry their
/// two-sided midpoint values.
inline Spectrum numerical_spectrum(const SampledWaveform& w, const Grid& omega_grid) {
    w.validate();
    omega_grid.validate();
    double peak = 0.0;
    for (double v : w.samples) peak = std::max(peak, std::abs(v));
    const double edge = std::max(std::abs(w.samples.front()), std::abs(w.samples.back()));
    if (peak > 0.0 && edge > 1e-6 * peak)
        throw CoverageError("numerical_spectrum: waveform does not decay at the grid edges");

    Spectrum sp;
    sp.omega_grid = omega_grid;
    sp.X.resize(omega_grid.n);
    sp.Y.resize(omega_grid.n);
    for (std::size_t i = 0; i < omega_grid.n; ++i) {
        const double omega = omega_grid.time(i);
        double c, s;
        detail::cos_sin_sum(w.samples, w.grid, omega, c, s);
        sp.X[i] = w.grid.dt * c;
        sp.Y[i] = -w.grid.dt * s;
    }
    return sp;
}

/// Residuals of the Hilbert-pair (Kramers-Kronig) relation between X and Y:
/// forward H{X} + Y and inverse X - H{Y}. Reports rather than throws; large
/// residuals mean the spectrum is not the transform of a causal waveform
/// (or the grid truncates its tails).
struct KkResidual {
    double max_abs_forward = 0.0;
    double rms_forward = 0.0;
    double max_abs_inverse = 0.0;
    double rms_inverse = 0.0;
    double max_abs_x = 0.0;
};

inline KkResidual kramers_kronig_check(const Spectrum& sp) {
    sp.validate();
    const SampledWaveform hx = hilbert(SampledWaveform{sp.omega_grid, sp.X});
    const SampledWaveform hy = hilbert(SampledWaveform{sp.omega_grid, sp.Y});

    KkResidual r;
    double sum_f = 0.0, sum_i = 0.0;
    for (std::size_t k = 0; k < sp.omega_grid.n; ++k) {
        const double f = hx.samples[k] + sp.Y[k];
        const double i = sp.X[k] - hy.samples[k];
        r.max_abs_forward = std::max(r.max_abs_forward, std::abs(f));
        r.max_abs_inverse = std::max(r.max_abs_inverse, std::abs(i));
        r.max_abs_x = std::max(r.max_abs_x, std::abs(sp.X[k]));
        sum_f += f * f;
        sum_i += i * i;
    }
    r.rms_forward = std::sqrt(sum_f / static_cast<double>(sp.omega_grid.n));
    r.rms_inverse = std::sqrt(sum_i / static_cast<double>(sp.omega_grid.n));
    return r;
}

/// |W(omega)| = sqrt(X^2 + Y^2).
inline SampledWaveform spectral_envelope(const Spectrum& sp) {
    sp.validate();
    SampledWaveform out;
    out.grid = sp.omega_grid;
    out.samples.resize(sp.omega_grid.n);
    for (std::size_t k = 0; k < sp.omega_grid.n; ++k)
        out.samples[k] = std::hypot(sp.X[k], sp.Y[k]);
    return out;
}

}  // namespace qpc
