#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "qpc/errors.hpp"
#include "qpc/grid.hpp"
#include "qpc/numerics.hpp"

namespace qpc {

/// mu(t) = |z(t)| = sqrt(x^2 + y^2), pointwise.
inline SampledWaveform natural_envelope(const ComplexEnvelope& z) {
    z.validate();
    SampledWaveform mu;
    mu.grid = z.grid;
    mu.samples.resize(z.grid.n);
    for (std::size_t k = 0; k < z.grid.n; ++k)
        mu.samples[k] = std::hypot(z.x[k], z.y[k]);
    return mu;
}

/// psi(t) = atan2(y, x), masked to 0 where the envelope is below
/// 1e-12 of its peak (the phase of a null is undefined).
struct PhaseFunction {
    SampledWaveform psi;
    std::vector<unsigned char> masked;
};

inline PhaseFunction phase_function(const ComplexEnvelope& z) {
    z.validate();
    double mu_max = 0.0;
    for (std::size_t k = 0; k < z.grid.n; ++k)
        mu_max = std::max(mu_max, std::hypot(z.x[k], z.y[k]));
    const double floor = 1e-12 * mu_max;

    PhaseFunction out;
    out.psi.grid = z.grid;
    out.psi.samples.resize(z.grid.n);
    out.masked.assign(z.grid.n, 0);
    for (std::size_t k = 0; k < z.grid.n; ++k) {
        if (std::hypot(z.x[k], z.y[k]) < floor) {
            out.psi.samples[k] = 0.0;
            out.masked[k] = 1;
        } else {
            out.psi.samples[k] = std::atan2(z.y[k], z.x[k]);
        }
    }
    return out;
}

struct TrajectoryPoint {
    double t, x, y;
};

/// (t, x, y) triplets for plotting the phasor-tip trajectory.
inline std::vector<TrajectoryPoint> phasor_trajectory(const ComplexEnvelope& z) {
    z.validate();
    std::vector<TrajectoryPoint> rows(z.grid.n);
    for (std::size_t k = 0; k < z.grid.n; ++k)
        rows[k] = {z.grid.time(k), z.x[k], z.y[k]};
    return rows;
}

/// RF pulse samples on a fine grid.
struct RfSignal {
    Grid grid;
    std::vector<double> samples;
    double f0 = 0.0;  // carrier, Hz
    /// Set when the carrier is less than 8x the envelope's -60 dB bandwidth
    /// (the slow-envelope assumption is then questionable).
    bool carrier_margin_warning = false;
};

namespace detail {

// Piecewise-linear sample of (x, y) at time t; zero outside the grid.
inline void interp_pair(const ComplexEnvelope& z, double t, double& x, double& y) {
    const double pos = (t - z.grid.t0) / z.grid.dt;
    if (pos <= 0.0 || pos >= static_cast<double>(z.grid.n - 1)) {
        const long k = pos <= 0.0 ? 0 : static_cast<long>(z.grid.n - 1);
        const double d = std::abs(pos - static_cast<double>(k));
        if (d < 1e-9) {
            x = z.x[static_cast<std::size_t>(k)];
            y = z.y[static_cast<std::size_t>(k)];
        } else {
            x = 0.0;
            y = 0.0;
        }
        return;
    }
    const auto k = static_cast<std::size_t>(pos);
    const double f = pos - static_cast<double>(k);
    x = (1.0 - f) * z.x[k] + f * z.x[k + 1];
    y = (1.0 - f) * z.y[k] + f * z.y[k + 1];
}

// -60 dB bandwidth estimate of the natural envelope, from a coarse direct
// transform. Good to ~the scan step; only feeds the warning flag.
inline double bandwidth_60db(const ComplexEnvelope& z) {
    SampledWaveform mu = natural_envelope(z);
    double c0, s0;
    cos_sin_sum(mu.samples, mu.grid, 0.0, c0, s0);
    if (c0 <= 0.0) return 0.0;
    const double w_max = std::numbers::pi / mu.grid.dt / 4.0;
    const int steps = 256;
    double bw = 0.0;
    for (int i = 1; i <= steps; ++i) {
        const double w = w_max * static_cast<double>(i) / steps;
        double c, s;
        cos_sin_sum(mu.samples, mu.grid, w, c, s);
        if (std::hypot(c, s) > 1e-3 * c0) bw = w;
    }
    return bw;
}

}  // namespace detail

/// s(t) = x(t) cos(w0 t) + y(t) sin(w0 t), with x and y linearly
/// interpolated onto the RF grid. The RF grid must resolve the carrier
/// (w0 * dt <= pi/8) and cover the envelope grid.
inline RfSignal synthesize_rf(const ComplexEnvelope& z, double f0, const Grid& rf_grid) {
    z.validate();
    rf_grid.validate();
    if (!(f0 > 0.0) || !std::isfinite(f0)) throw DomainError("synthesize_rf: f0 must be positive");
    const double w0 = 2.0 * std::numbers::pi * f0;
    if (w0 * rf_grid.dt > std::numbers::pi / 8.0 * (1.0 + 1e-9))
        throw SamplingError("synthesize_rf: rf grid too coarse for the carrier (w0*dt > pi/8)");
    if (rf_grid.t0 > z.grid.t0 + 1e-9 * z.grid.dt ||
        rf_grid.back() < z.grid.back() - 1e-9 * z.grid.dt)
        throw GridError("synthesize_rf: rf grid does not cover the envelope grid");

    RfSignal s;
    s.grid = rf_grid;
    s.f0 = f0;
    s.samples.resize(rf_grid.n);
    for (std::size_t k = 0; k < rf_grid.n; ++k) {
        const double t = rf_grid.time(k);
        double x, y;
        detail::interp_pair(z, t, x, y);
        s.samples[k] = x * std::cos(w0 * t) + y * std::sin(w0 * t);
    }
    s.carrier_margin_warning = (w0 < 8.0 * detail::bandwidth_60db(z));
    return s;
}

}  // namespace qpc
