#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <vector>

#include "qpc/errors.hpp"
#include "qpc/fft.hpp"
#include "qpc/grid.hpp"

namespace qpc {

/// Trapezoidal integral over the waveform's grid.
inline double trapz(const SampledWaveform& w) {
    w.validate();
    double sum = 0.5 * (w.samples.front() + w.samples.back());
    for (std::size_t k = 1; k + 1 < w.grid.n; ++k) sum += w.samples[k];
    return sum * w.grid.dt;
}

/// Trapezoidal integral of the squared samples.
inline double energy(const SampledWaveform& w) {
    w.validate();
    double sum = 0.5 * (w.samples.front() * w.samples.front() +
                        w.samples.back() * w.samples.back());
    for (std::size_t k = 1; k + 1 < w.grid.n; ++k) sum += w.samples[k] * w.samples[k];
    return sum * w.grid.dt;
}

/// Complex spectrum produced by dft(); keeps the originating time grid so
/// idft() is self-contained.
struct DftSpectrum {
    Grid omega_grid;  // rad/s, d_omega = 2*pi/(n*dt), omega = 0 on-grid
    std::vector<std::complex<double>> values;
    Grid time_grid;
};

/// Discrete approximation of W(omega) = int w(t) exp(-j omega t) dt: the raw
/// DFT scaled by dt with the phase factor exp(-j omega t0), so closed-form
/// transforms compare directly. Frequencies run over the centred DFT grid.
inline DftSpectrum dft(const SampledWaveform& w) {
    w.validate();
    const std::size_t n = w.grid.n;
    std::vector<std::complex<double>> a(n);
    for (std::size_t k = 0; k < n; ++k) a[k] = w.samples[k];
    detail::dft_any(a, false);

    const double dw = 2.0 * std::numbers::pi / (static_cast<double>(n) * w.grid.dt);
    const auto k_lo = -static_cast<std::int64_t>(n / 2);
    DftSpectrum sp;
    sp.time_grid = w.grid;
    sp.omega_grid = Grid{dw * static_cast<double>(k_lo), dw, n};
    sp.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::int64_t k = k_lo + static_cast<std::int64_t>(i);
        const std::size_t bin = static_cast<std::size_t>((k % static_cast<std::int64_t>(n) +
                                                          static_cast<std::int64_t>(n)) %
                                                         static_cast<std::int64_t>(n));
        const double omega = sp.omega_grid.time(i);
        sp.values[i] = a[bin] * std::polar(w.grid.dt, -omega * w.grid.t0);
    }
    return sp;
}

/// Inverse of dft(): recovers the time samples (real part; the imaginary
/// residue of a real round trip is at rounding level).
inline SampledWaveform idft(const DftSpectrum& sp) {
    const std::size_t n = sp.values.size();
    if (n < 2 || sp.omega_grid.n != n)
        throw GridError("idft: inconsistent spectrum");
    const auto k_lo = -static_cast<std::int64_t>(n / 2);
    std::vector<std::complex<double>> a(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::int64_t k = k_lo + static_cast<std::int64_t>(i);
        const std::size_t bin = static_cast<std::size_t>((k % static_cast<std::int64_t>(n) +
                                                          static_cast<std::int64_t>(n)) %
                                                         static_cast<std::int64_t>(n));
        const double omega = sp.omega_grid.time(i);
        a[bin] = sp.values[i] * std::polar(1.0 / sp.time_grid.dt, omega * sp.time_grid.t0);
    }
    detail::dft_any(a, true);
    SampledWaveform w;
    w.grid = sp.time_grid;
    w.samples.resize(n);
    for (std::size_t k = 0; k < n; ++k) w.samples[k] = a[k].real();
    return w;
}

/// Discrete Hilbert transform via -j*sgn multiplication in the transform
/// domain. The input is zero-padded (pad_factor times, rounded to a power of
/// two) before the FFT, which pushes the periodic images of the slowly
/// decaying output far from the window. The caller is responsible for inputs
/// that decay toward the grid edges.
inline SampledWaveform hilbert(const SampledWaveform& f, std::size_t pad_factor = 8) {
    f.validate();
    if (pad_factor < 1) pad_factor = 1;
    const std::size_t n = f.grid.n;
    const std::size_t m = detail::next_pow2(pad_factor * n);

    std::vector<std::complex<double>> a(m, std::complex<double>{0.0, 0.0});
    for (std::size_t k = 0; k < n; ++k) a[k] = f.samples[k];
    detail::fft_pow2(a, false);
    a[0] = 0.0;
    a[m / 2] = 0.0;
    for (std::size_t k = 1; k < m / 2; ++k) {
        a[k] *= std::complex<double>{0.0, -1.0};
        a[m - k] *= std::complex<double>{0.0, 1.0};
    }
    detail::fft_pow2(a, true);

    SampledWaveform out;
    out.grid = f.grid;
    out.samples.resize(n);
    for (std::size_t k = 0; k < n; ++k) out.samples[k] = a[k].real();
    return out;
}

/// Full width at half height of a single-peaked trace.
struct FwhhResult {
    double width = 0.0;
    double left = 0.0;   // left half-height crossing (grid units)
    double right = 0.0;  // right crossing
    bool ambiguous = false;  // peak value attained at more than one sample
};

namespace detail {

// Crossing of the linear interpolant through value `level` between samples
// k and k+1, located by bisection to an absolute bracket of 1e-12. A sample
// sitting exactly on the level is itself the crossing.
inline double bisect_crossing(const Grid& g, double va, double vb,
                              std::size_t k, double level) {
    double a = g.time(k), b = g.time(k + 1);
    const double slope = (vb - va) / (b - a);
    auto f = [&](double t) { return va + slope * (t - g.time(k)) - level; };
    double fa = f(a);
    const double fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    for (int it = 0; it < 200 && (b - a) > 1e-12; ++it) {
        const double mid = 0.5 * (a + b);
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fa < 0.0) == (fm < 0.0)) {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
    }
    return 0.5 * (a + b);
}

}  // namespace detail

inline FwhhResult find_half_height_width(const SampledWaveform& w) {
    w.validate();
    const auto& s = w.samples;
    const std::size_t n = w.grid.n;

    std::size_t k_max = 0;
    for (std::size_t k = 1; k < n; ++k)
        if (s[k] > s[k_max]) k_max = k;
    const double peak = s[k_max];
    if (!(peak > 0.0)) throw ShapeError("fwhh: peak must be positive");

    // Peak plateau / multiple equal maxima: measure between the outermost
    // crossings and flag the ambiguity.
    const double peak_tol = 1e-12 * std::abs(peak);
    std::size_t k_lo = k_max, k_hi = k_max;
    std::size_t max_count = 0;
    for (std::size_t k = 0; k < n; ++k) {
        if (std::abs(s[k] - peak) <= peak_tol) {
            ++max_count;
            k_lo = std::min(k_lo, k);
            k_hi = std::max(k_hi, k);
        }
    }

    const double half = 0.5 * peak;
    if (s.front() >= half || s.back() >= half)
        throw ShapeError("fwhh: trace does not fall below half height at the ends");

    std::size_t kl = k_lo;
    while (kl > 0 && s[kl] >= half) --kl;
    if (s[kl] >= half) throw ShapeError("fwhh: no crossing left of the peak");
    std::size_t kr = k_hi;
    while (kr + 1 < n && s[kr] >= half) ++kr;
    if (s[kr] >= half) throw ShapeError("fwhh: no crossing right of the peak");

    FwhhResult r;
    r.left = detail::bisect_crossing(w.grid, s[kl], s[kl + 1], kl, half);
    r.right = detail::bisect_crossing(w.grid, s[kr - 1], s[kr], kr - 1, half);
    r.width = r.right - r.left;
    r.ambiguous = max_count > 1;
    return r;
}

namespace detail {

/// Accumulates C = sum w_k cos(omega t_k) and S = sum w_k sin(omega t_k)
/// with an incremental phase rotation, re-anchored periodically to keep the
/// recurrence at rounding level.
inline void cos_sin_sum(const std::vector<double>& samples, const Grid& g,
                        double omega, double& c_out, double& s_out) {
    const double cd = std::cos(omega * g.dt);
    const double sd = std::sin(omega * g.dt);
    double c = 0.0, s = 0.0;
    double cc = 0.0, ss = 0.0;
    for (std::size_t k = 0; k < g.n; ++k) {
        if (k % 1024 == 0) {
            const double ph = omega * g.time(k);
            cc = std::cos(ph);
            ss = std::sin(ph);
        }
        c += samples[k] * cc;
        s += samples[k] * ss;
        const double cn = cc * cd - ss * sd;
        ss = cc * sd + ss * cd;
        cc = cn;
    }
    c_out = c;
    s_out = s;
}

}  // namespace detail

}  // namespace qpc
