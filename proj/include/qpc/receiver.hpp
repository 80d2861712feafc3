#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

#include "qpc/correlation.hpp"
#include "qpc/envelope_ops.hpp"
#include "qpc/errors.hpp"
#include "qpc/grid.hpp"
#include "qpc/pulses.hpp"
#include "qpc/rng.hpp"

namespace qpc {

/// What the transmission path does to the RF pulse before the receiver sees
/// it. The delay must be a whole number of RF samples.
struct ChannelSpec {
    double phi = 0.0;          // demodulator phase offset, radians
    double delay = 0.0;        // seconds, >= 0
    double amplitude = 1.0;    // > 0
    double noise_sigma = 0.0;  // per-RF-sample AWGN std dev
    std::uint64_t seed = 0;

    void validate() const {
        if (!(amplitude > 0.0) || !std::isfinite(amplitude))
            throw DomainError("channel: amplitude must be positive");
        if (!(delay >= 0.0) || !std::isfinite(delay))
            throw DomainError("channel: delay must be >= 0");
        if (!(noise_sigma >= 0.0) || !std::isfinite(noise_sigma))
            throw DomainError("channel: noise_sigma must be >= 0");
        if (!std::isfinite(phi)) throw DomainError("channel: phi must be finite");
    }
};

/// The four matched-filter outputs over lag and the processor output
/// [a+d]^2 - [a-d]^2 - [b+c]^2 + [b-c]^2 (= 4(ad - bc) = Rsum^2).
struct ReceiverTrace {
    Grid lag_grid;
    std::vector<double> a, b, c, d;
    std::vector<double> processor_out;
};

/// Linear-phase windowed-sinc low-pass FIR, Hamming window, unit DC gain.
struct FirLowpass {
    std::vector<double> taps;  // odd length; group delay (taps-1)/2 samples
};

inline FirLowpass design_lowpass(double sample_rate, double cutoff_hz, std::size_t length) {
    if (length % 2 == 0) ++length;
    if (!(cutoff_hz > 0.0) || cutoff_hz >= sample_rate / 2.0)
        throw DomainError("design_lowpass: cutoff must lie inside (0, rate/2)");
    FirLowpass f;
    f.taps.resize(length);
    const auto mid = static_cast<std::int64_t>((length - 1) / 2);
    const double fc = cutoff_hz / sample_rate;  // cycles per sample
    double sum = 0.0;
    for (std::size_t i = 0; i < length; ++i) {
        const auto m = static_cast<std::int64_t>(i) - mid;
        const double x = 2.0 * std::numbers::pi * fc * static_cast<double>(m);
        double v = m == 0 ? 2.0 * fc : std::sin(x) / (std::numbers::pi * static_cast<double>(m));
        v *= 0.54 + 0.46 * std::cos(std::numbers::pi * static_cast<double>(m) /
                                    static_cast<double>(mid));
        f.taps[i] = v;
        sum += v;
    }
    for (auto& t : f.taps) t /= sum;
    return f;
}

namespace detail {

// Centered FIR convolution: group delay compensated by construction, edges
// see implicit zeros.
inline std::vector<double> convolve_centered(const std::vector<double>& x,
                                             const std::vector<double>& taps) {
    const auto n = static_cast<std::int64_t>(x.size());
    const auto L = static_cast<std::int64_t>(taps.size());
    const std::int64_t mid = (L - 1) / 2;
    std::vector<double> out(x.size(), 0.0);
    for (std::int64_t k = 0; k < n; ++k) {
        double acc = 0.0;
        const std::int64_t j_lo = std::max<std::int64_t>(0, k - (n - 1) + mid);
        const std::int64_t j_hi = std::min(L - 1, k + mid);
        for (std::int64_t j = j_lo; j <= j_hi; ++j)
            acc += taps[static_cast<std::size_t>(j)] *
                   x[static_cast<std::size_t>(k + mid - j)];
        out[static_cast<std::size_t>(k)] = acc;
    }
    return out;
}

}  // namespace detail

/// Quadrature demodulation: multiply by 2cos(w0 t + phi) and 2sin(w0 t + phi),
/// low-pass filter (windowed-sinc, cutoff f0/2, length 8*(rate/f0)+1), then
/// decimate onto env_grid. In noiseless loopback u = x cos(phi) - y sin(phi)
/// and v = x sin(phi) + y cos(phi), up to the filter's passband error.
inline ComplexEnvelope demodulate(const RfSignal& r, double f0, double phi,
                                  const Grid& env_grid) {
    r.grid.validate();
    env_grid.validate();
    if (!(f0 > 0.0)) throw DomainError("demodulate: f0 must be positive");
    const double w0 = 2.0 * std::numbers::pi * f0;
    if (w0 * r.grid.dt > std::numbers::pi / 8.0 * (1.0 + 1e-9))
        throw SamplingError("demodulate: rf grid too coarse for the carrier");

    const double ratio = env_grid.dt / r.grid.dt;
    const auto decim = static_cast<std::int64_t>(std::llround(ratio));
    if (decim < 1 || std::abs(ratio - static_cast<double>(decim)) > 1e-9)
        throw GridError("demodulate: envelope step is not a multiple of the rf step");
    const double off = (env_grid.t0 - r.grid.t0) / r.grid.dt;
    const auto k_start = static_cast<std::int64_t>(std::llround(off));
    if (std::abs(off - static_cast<double>(k_start)) > 1e-6)
        throw GridError("demodulate: envelope grid is not aligned with the rf grid");
    const std::int64_t k_end =
        k_start + decim * static_cast<std::int64_t>(env_grid.n - 1);
    if (k_start < 0 || k_end >= static_cast<std::int64_t>(r.grid.n))
        throw GridError("demodulate: envelope grid extends beyond the rf grid");

    const double rate = 1.0 / r.grid.dt;
    const auto length = static_cast<std::size_t>(8.0 * rate / f0) + 1;
    const FirLowpass lpf = design_lowpass(rate, f0 / 2.0, length);

    std::vector<double> up(r.grid.n), vp(r.grid.n);
    for (std::size_t k = 0; k < r.grid.n; ++k) {
        const double ph = w0 * r.grid.time(k) + phi;
        up[k] = r.samples[k] * 2.0 * std::cos(ph);
        vp[k] = r.samples[k] * 2.0 * std::sin(ph);
    }
    const std::vector<double> u = detail::convolve_centered(up, lpf.taps);
    const std::vector<double> v = detail::convolve_centered(vp, lpf.taps);

    ComplexEnvelope z;
    z.grid = env_grid;
    z.x.resize(env_grid.n);
    z.y.resize(env_grid.n);
    for (std::size_t i = 0; i < env_grid.n; ++i) {
        const auto k = static_cast<std::size_t>(k_start + decim * static_cast<std::int64_t>(i));
        z.x[i] = u[k];
        z.y[i] = v[k];
    }
    return z;
}

/// Lag-axis convention of the filter bank.
enum class MfAxis : std::uint8_t {
    /// out(tau) = dt * sum in(t) T(t+tau): the canonical four-output rows
    /// a = Rxx cos - Ryx sin, b = Rxy cos - Ryy sin, c, d in loopback.
    TemplateLead,
    /// out(tau) = dt * sum T(t) in(t+tau): the reflection of TemplateLead;
    /// a pulse arriving `d` late peaks at lag +d, so this is the axis a
    /// range processor reports.
    ArrivalDelay,
};

/// Bank of two matched filters applied to both demodulated channels:
/// a = MFX(u), b = MFY(u), c = MFX(v), d = MFY(v), plus the phase-invariant
/// processor output.
inline ReceiverTrace matched_filter_bank(const SampledWaveform& u, const SampledWaveform& v,
                                         const ComplexEnvelope& templates,
                                         const Grid& lag_grid,
                                         MfAxis axis = MfAxis::TemplateLead) {
    u.validate();
    v.validate();
    templates.validate();
    if (!u.grid.same_as(v.grid)) throw GridError("matched_filter_bank: u/v grids differ");

    const SampledWaveform tx = templates.in_phase();
    const SampledWaveform ty = templates.quadrature();

    ReceiverTrace tr;
    tr.lag_grid = lag_grid;
    if (axis == MfAxis::TemplateLead) {
        tr.a = correlate(u, tx, lag_grid);
        tr.b = correlate(u, ty, lag_grid);
        tr.c = correlate(v, tx, lag_grid);
        tr.d = correlate(v, ty, lag_grid);
    } else {
        tr.a = correlate(tx, u, lag_grid);
        tr.b = correlate(ty, u, lag_grid);
        tr.c = correlate(tx, v, lag_grid);
        tr.d = correlate(ty, v, lag_grid);
    }
    tr.processor_out.resize(lag_grid.n);
    for (std::size_t i = 0; i < lag_grid.n; ++i) {
        const double s1 = tr.a[i] + tr.d[i], s2 = tr.a[i] - tr.d[i];
        const double s3 = tr.b[i] + tr.c[i], s4 = tr.b[i] - tr.c[i];
        tr.processor_out[i] = s1 * s1 - s2 * s2 - s3 * s3 + s4 * s4;
    }
    return tr;
}

/// The processor combination recomputed from the four traces (identical
/// arithmetic to what matched_filter_bank stores).
inline std::vector<double> phase_invariant_processor(const ReceiverTrace& tr) {
    std::vector<double> out(tr.lag_grid.n);
    for (std::size_t i = 0; i < tr.lag_grid.n; ++i) {
        const double s1 = tr.a[i] + tr.d[i], s2 = tr.a[i] - tr.d[i];
        const double s3 = tr.b[i] + tr.c[i], s4 = tr.b[i] - tr.c[i];
        out[i] = s1 * s1 - s2 * s2 - s3 * s3 + s4 * s4;
    }
    return out;
}

/// a^2 + b^2 + c^2 + d^2, the other phase-invariant combination.
inline std::vector<double> sum_of_squares_invariant(const ReceiverTrace& tr) {
    std::vector<double> out(tr.lag_grid.n);
    for (std::size_t i = 0; i < tr.lag_grid.n; ++i)
        out[i] = tr.a[i] * tr.a[i] + tr.b[i] * tr.b[i] + tr.c[i] * tr.c[i] +
                 tr.d[i] * tr.d[i];
    return out;
}

/// Knobs for run_chain's internally constructed grids.
struct RunChainOptions {
    std::size_t env_samples_per_width = 128;  // envelope rate, per characteristic width
    std::size_t rf_oversampling = 8;          // rf rate = oversampling * envelope rate
    double lag_half_widths = 4.0;             // lag span, in characteristic widths
    std::size_t lag_stride = 1;               // lag step, in envelope samples
};

/// Full simulation of the quadrature receiver/pulse compressor:
/// synthesize RF -> delay/scale/add noise -> demodulate -> matched-filter
/// bank -> processor. Lags are reported on the ArrivalDelay axis, so a
/// noiseless pulse delayed by d peaks at lag d (within one lag step).
inline ReceiverTrace run_chain(const PulseSpec& spec, const ChannelSpec& channel, double f0,
                               const RunChainOptions& opts = {}) {
    spec.validate();
    channel.validate();
    if (!(f0 > 0.0) || !std::isfinite(f0)) throw DomainError("run_chain: f0 must be positive");

    const double width = spec.characteristic_width();
    const double half = spec.coverage_half_width();
    const double dt_env = width / static_cast<double>(opts.env_samples_per_width);
    const double dt_rf = dt_env / static_cast<double>(opts.rf_oversampling);

    const double w0 = 2.0 * std::numbers::pi * f0;
    if (w0 * dt_rf > std::numbers::pi / 8.0 * (1.0 + 1e-9))
        throw SamplingError("run_chain: rf rate too low for this carrier; "
                            "raise rf_oversampling or env_samples_per_width");

    const double delay_steps_f = channel.delay / dt_rf;
    const auto delay_steps = static_cast<std::int64_t>(std::llround(delay_steps_f));
    if (std::abs(delay_steps_f - static_cast<double>(delay_steps)) > 1e-6)
        throw GridError("run_chain: delay is not a whole number of rf samples");

    // Templates on the symmetric envelope grid.
    const auto half_steps =
        static_cast<std::size_t>(std::ceil(half / dt_env));
    const Grid env_grid = Grid::symmetric(dt_env * static_cast<double>(half_steps),
                                          2 * half_steps + 1);
    const ComplexEnvelope templates = component_pair(spec, env_grid);

    // RF grid: envelope span plus room for the delayed pulse and the filter
    // transient on both sides.
    const double rate = 1.0 / dt_rf;
    const auto fir_len = static_cast<std::size_t>(8.0 * rate / f0) + 1;
    const double margin = dt_rf * static_cast<double>(fir_len);
    const auto lead = static_cast<std::size_t>(std::ceil(margin / dt_rf));
    const auto tail = static_cast<std::size_t>(delay_steps) + lead;
    const std::size_t n_rf =
        (env_grid.n - 1) * opts.rf_oversampling + 1 + lead + tail;
    const Grid rf_grid{env_grid.t0 - dt_rf * static_cast<double>(lead), dt_rf, n_rf};

    const RfSignal s = synthesize_rf(templates, f0, rf_grid);

    RfSignal r = s;
    // delay, attenuate, add noise
    for (std::size_t k = n_rf; k-- > 0;) {
        const auto src = static_cast<std::int64_t>(k) - delay_steps;
        r.samples[k] =
            src >= 0 ? channel.amplitude * s.samples[static_cast<std::size_t>(src)] : 0.0;
    }
    if (channel.noise_sigma > 0.0)
        for (std::size_t k = 0; k < n_rf; ++k)
            r.samples[k] += channel.noise_sigma * rng::gaussian(channel.seed, k);

    // Demodulate onto an envelope-rate grid covering the received pulse.
    const auto extra = static_cast<std::size_t>(
        std::ceil(static_cast<double>(delay_steps) * dt_rf / dt_env));
    const Grid rx_grid{env_grid.t0, dt_env, env_grid.n + extra};
    const ComplexEnvelope uv = demodulate(r, f0, channel.phi, rx_grid);

    const double lag_half = opts.lag_half_widths * width;
    const double lag_dt = dt_env * static_cast<double>(opts.lag_stride);
    const auto lag_steps = static_cast<std::size_t>(std::ceil(lag_half / lag_dt));
    const Grid lag_grid{-lag_dt * static_cast<double>(lag_steps), lag_dt,
                        2 * lag_steps + 1 + extra / opts.lag_stride};

    return matched_filter_bank(uv.in_phase(), uv.quadrature(), templates, lag_grid,
                               MfAxis::ArrivalDelay);
}

}  // namespace qpc
