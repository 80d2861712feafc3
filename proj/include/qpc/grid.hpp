#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "qpc/errors.hpp"

namespace qpc {

/// Uniform sample grid. Sample k lives at t0 + k*dt.
///
/// Symmetric grids built with Grid::symmetric() place t = 0 on an exact
/// sample (odd n), which the signum-based constructions rely on.
struct Grid {
    double t0 = 0.0;
    double dt = 1.0;
    std::size_t n = 0;

    double time(std::size_t k) const { return t0 + static_cast<double>(k) * dt; }
    double back() const { return time(n - 1); }
    double span() const { return dt * static_cast<double>(n - 1); }

    void validate() const {
        if (!(dt > 0.0) || !std::isfinite(dt) || !std::isfinite(t0))
            throw GridError("grid: dt must be positive and finite");
        if (n < 2) throw GridError("grid: need at least 2 samples");
    }

    /// Index of the sample at t = 0, if one exists (within 1e-9*dt).
    std::optional<std::size_t> zero_index() const {
        const double kf = -t0 / dt;
        const auto k = static_cast<std::int64_t>(std::llround(kf));
        if (k < 0 || k >= static_cast<std::int64_t>(n)) return std::nullopt;
        if (std::abs(time(static_cast<std::size_t>(k))) > 1e-9 * dt) return std::nullopt;
        return static_cast<std::size_t>(k);
    }

    /// t = 0 centred grid over [-half_width, half_width]; n forced odd so that
    /// t0 + k0*dt is exactly zero in floating point.
    static Grid symmetric(double half_width, std::size_t n) {
        if (n % 2 == 0) ++n;
        const std::size_t k0 = (n - 1) / 2;
        const double dt = half_width / static_cast<double>(k0);
        Grid g{-(dt * static_cast<double>(k0)), dt, n};
        g.validate();
        return g;
    }

    bool same_as(const Grid& o, double rel = 1e-12) const {
        const double scale = std::abs(dt);
        return n == o.n && std::abs(dt - o.dt) <= rel * scale &&
               std::abs(t0 - o.t0) <= rel * std::max(std::abs(t0), scale);
    }
};

/// Real samples on a grid; the common currency between modules.
struct SampledWaveform {
    Grid grid;
    std::vector<double> samples;

    void validate() const {
        grid.validate();
        if (samples.size() != grid.n)
            throw GridError("waveform: sample count does not match grid");
    }
};

/// Paired in-phase/quadrature samples sharing one grid: z(t) = x(t) + j y(t).
struct ComplexEnvelope {
    Grid grid;
    std::vector<double> x;
    std::vector<double> y;

    void validate() const {
        grid.validate();
        if (x.size() != grid.n || y.size() != grid.n)
            throw GridError("complex envelope: component length does not match grid");
    }

    SampledWaveform in_phase() const { return {grid, x}; }
    SampledWaveform quadrature() const { return {grid, y}; }
};

namespace detail {

/// Signum with an exact zero at |u| <= tol. sgn(0) = 0 throughout the library.
inline double sgn(double u, double tol = 0.0) {
    if (u > tol) return 1.0;
    if (u < -tol) return -1.0;
    return 0.0;
}

}  // namespace detail

}  // namespace qpc
