#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

#include "qpc/correlation.hpp"
#include "qpc/grid.hpp"
#include "qpc/numerics.hpp"
#include "qpc/pulses.hpp"

namespace qpc {

/// Compression gain G_C = T_O / T_C, where T_O is the half-height duration
/// of the plain matched-filter response Rxx and T_C that of the
/// phase-pair response Rsum.
struct GainReport {
    PulseSpec spec;
    double T_O = 0.0;
    double T_C = 0.0;
    double G_C = 0.0;
    bool ambiguous = false;
};

/// Measures both widths on dense engine traces. The defaults give a lag grid
/// of roughly 1e4 points spanning the coverage width; the ratio is
/// scale-free, so the gain depends only on the shape (and gamma for
/// soft-rect).
inline GainReport compression_gain(const PulseSpec& spec, std::size_t samples = 16001,
                                   std::size_t max_lags = 10001) {
    spec.validate();
    Grid grid = Grid::symmetric(spec.coverage_half_width(), samples);
    // Rect widths are exact when kappa sits on the grid.
    if (spec.shape == Shape::Rect || spec.shape == Shape::SoftRect) {
        const auto steps = static_cast<std::size_t>(
            std::ceil(spec.coverage_half_width() / spec.kappa));
        std::size_t per = (samples - 1) / (2 * steps);
        if (per == 0) per = 1;
        grid = Grid::symmetric(spec.kappa * static_cast<double>(steps),
                               2 * steps * per + 1);
    }

    const ComplexEnvelope z = component_pair(spec, grid);

    std::size_t stride = (grid.n - 1) / (max_lags - 1);
    if (stride == 0) stride = 1;
    const std::size_t half_lags = (grid.n - 1) / 2 / stride;
    const double lag_dt = grid.dt * static_cast<double>(stride);
    const Grid lag_grid{-lag_dt * static_cast<double>(half_lags), lag_dt, 2 * half_lags + 1};

    CorrelationResult r = complex_autocorrelation(z, lag_grid);
    // The engine's lag-zero Ryy sample charges the replica's t=0 jump as the
    // midpoint product (zero); the pair identity E_y = E_x gives the faithful
    // peak value Rsum(0) = 2 Rxx(0), which the half-height levels need.
    if (const auto k0 = lag_grid.zero_index()) r.Rsum[*k0] = 2.0 * r.Rxx[*k0];

    const FwhhResult to = find_half_height_width(SampledWaveform{lag_grid, r.Rxx});
    const FwhhResult tc = find_half_height_width(SampledWaveform{lag_grid, r.Rsum});

    GainReport rep;
    rep.spec = spec;
    rep.T_O = to.width;
    rep.T_C = tc.width;
    rep.G_C = to.width / tc.width;
    rep.ambiguous = to.ambiguous || tc.ambiguous;
    return rep;
}

/// The length-2 complementary pair, its integer autocorrelations and their
/// sidelobe-free sum, all computed rather than tabulated.
struct GolayDemo {
    std::array<int, 2> seq_a{+1, +1};
    std::array<int, 2> seq_b{-1, +1};
    std::array<int, 3> acf_a{};
    std::array<int, 3> acf_b{};
    std::array<int, 3> acf_sum{};
};

inline GolayDemo golay_demo() {
    GolayDemo g;
    auto acf = [](const std::array<int, 2>& s) {
        std::array<int, 3> r{};
        for (int lag = -1; lag <= 1; ++lag) {
            int acc = 0;
            for (int k = 0; k < 2; ++k) {
                const int j = k + lag;
                if (j >= 0 && j < 2) acc += s[static_cast<std::size_t>(k)] *
                                            s[static_cast<std::size_t>(j)];
            }
            r[static_cast<std::size_t>(lag + 1)] = acc;
        }
        return r;
    };
    g.acf_a = acf(g.seq_a);
    g.acf_b = acf(g.seq_b);
    for (std::size_t i = 0; i < 3; ++i) g.acf_sum[i] = g.acf_a[i] + g.acf_b[i];
    return g;
}

/// Continuous analogue of the pair: the rect pulse and its signum replica,
/// whose Rsum is the sidelobe-free triangle 2*kappa * 2*Lambda(tau; kappa).
inline CorrelationResult golay_continuous(double kappa, std::size_t samples = 8001,
                                          std::size_t max_lags = 4001) {
    PulseSpec spec;
    spec.shape = Shape::Rect;
    spec.kappa = kappa;
    const std::size_t per = (samples - 1) / 4 == 0 ? 1 : (samples - 1) / 4;
    const Grid grid = Grid::symmetric(2.0 * kappa, 4 * per + 1);
    const ComplexEnvelope z = component_pair(spec, grid);

    std::size_t stride = (grid.n - 1) / (max_lags - 1);
    if (stride == 0) stride = 1;
    const std::size_t half_lags = (grid.n - 1) / 2 / stride;
    const double lag_dt = grid.dt * static_cast<double>(stride);
    const Grid lag_grid{-lag_dt * static_cast<double>(half_lags), lag_dt, 2 * half_lags + 1};
    return complex_autocorrelation(z, lag_grid);
}

}  // namespace qpc
