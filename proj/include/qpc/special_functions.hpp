#pragma once

#include <cmath>
#include <numbers>

#include "qpc/errors.hpp"

namespace qpc {

inline double erf(double x) {
    if (!std::isfinite(x)) throw DomainError("erf: non-finite argument");
    return std::erf(x);
}

inline double erfc(double x) {
    if (!std::isfinite(x)) throw DomainError("erfc: non-finite argument");
    return std::erfc(x);
}

/// Dawson integral D(x) = exp(-x^2) * int_0^x exp(r^2) dr.
///
/// Evaluated by the sampling series of Rybicki for |x| <= 8 (step h = 0.25,
/// truncation error ~ exp(-(pi/2h)^2) ~ 1e-17) and by the asymptotic series
/// 1/(2x) + 1/(4x^3) + 3/(8x^5) + ... beyond. Never goes through
/// exp(x^2)*erf(ix), so it cannot overflow.
inline double dawson(double x) {
    if (!std::isfinite(x)) throw DomainError("dawson: non-finite argument");
    const double ax = std::abs(x);
    if (ax == 0.0) return 0.0;

    double result;
    if (ax <= 8.0) {
        constexpr double h = 0.25;
        constexpr double window = 6.7;  // exp(-6.7^2) ~ 3e-20
        const auto lo = static_cast<long>(std::floor((ax - window) / h));
        const auto hi = static_cast<long>(std::ceil((ax + window) / h));
        double sum = 0.0;
        for (long m = lo; m <= hi; ++m) {
            if (m % 2 == 0) continue;
            const double u = ax - static_cast<double>(m) * h;
            sum += std::exp(-u * u) / static_cast<double>(m);
        }
        result = sum / std::sqrt(std::numbers::pi);
    } else {
        const double inv2x2 = 1.0 / (2.0 * ax * ax);
        double term = 1.0 / (2.0 * ax);
        double sum = term;
        for (int k = 1; k < 60; ++k) {
            term *= static_cast<double>(2 * k - 1) * inv2x2;
            const double next = sum + term;
            if (next == sum) break;
            sum = next;
        }
        result = sum;
    }
    return x < 0.0 ? -result : result;
}

/// Upper incomplete gamma for the two orders the correlation closed forms
/// need. Gamma(1/2, z) = sqrt(pi) erfc(sqrt(z)); order 3/2 follows from the
/// recurrence Gamma(nu+1, z) = nu Gamma(nu, z) + z^nu exp(-z).
inline double upper_incomplete_gamma(double nu, double zeta) {
    if (!std::isfinite(zeta) || zeta < 0.0)
        throw DomainError("upper_incomplete_gamma: zeta must be finite and >= 0");
    const double g_half = std::sqrt(std::numbers::pi) * std::erfc(std::sqrt(zeta));
    if (nu == 0.5) return g_half;
    if (nu == 1.5) return 0.5 * g_half + std::sqrt(zeta) * std::exp(-zeta);
    throw DomainError("upper_incomplete_gamma: only nu = 1/2 and nu = 3/2 are supported");
}

}  // namespace qpc
