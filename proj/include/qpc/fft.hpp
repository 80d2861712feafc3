#pragma once

#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

#include "qpc/errors.hpp"

namespace qpc::detail {

using cplx = std::complex<double>;

inline bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

inline std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

/// In-place iterative radix-2 FFT. Twiddles from a table, not a recurrence,
/// so round-trip error stays near machine epsilon.
inline void fft_pow2(std::vector<cplx>& a, bool inverse) {
    const std::size_t n = a.size();
    if (n <= 1) return;
    if (!is_pow2(n)) throw GridError("fft_pow2: length must be a power of two");

    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }

    std::vector<cplx> roots(n / 2);
    const double base = (inverse ? 2.0 : -2.0) * std::numbers::pi / static_cast<double>(n);
    for (std::size_t k = 0; k < n / 2; ++k)
        roots[k] = std::polar(1.0, base * static_cast<double>(k));

    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t stride = n / len;
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t k = 0; k < len / 2; ++k) {
                const cplx u = a[i + k];
                const cplx v = a[i + k + len / 2] * roots[k * stride];
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
            }
        }
    }
    if (inverse) {
        const double inv = 1.0 / static_cast<double>(n);
        for (auto& z : a) z *= inv;
    }
}

/// DFT of arbitrary length via Bluestein's chirp-z reduction to a power-of-two
/// convolution. Chirp phases use m^2 mod 2n in integer arithmetic so large
/// indices lose no precision.
inline void dft_bluestein(std::vector<cplx>& a, bool inverse) {
    const std::size_t n = a.size();
    const auto two_n = static_cast<std::int64_t>(2 * n);
    const double ang = (inverse ? 1.0 : -1.0) * std::numbers::pi / static_cast<double>(n);

    const std::size_t m = next_pow2(2 * n - 1);
    std::vector<cplx> b(m, cplx{0.0, 0.0});
    std::vector<cplx> c(m, cplx{0.0, 0.0});
    std::vector<cplx> chirp(n);
    for (std::size_t k = 0; k < n; ++k) {
        const auto k2 = static_cast<std::int64_t>(k) * static_cast<std::int64_t>(k) % two_n;
        chirp[k] = std::polar(1.0, ang * static_cast<double>(k2));
        b[k] = a[k] * chirp[k];
        c[k] = std::conj(chirp[k]);
        if (k > 0) c[m - k] = std::conj(chirp[k]);
    }
    fft_pow2(b, false);
    fft_pow2(c, false);
    for (std::size_t k = 0; k < m; ++k) b[k] *= c[k];
    fft_pow2(b, true);
    for (std::size_t k = 0; k < n; ++k) a[k] = b[k] * chirp[k];
    if (inverse) {
        const double inv = 1.0 / static_cast<double>(n);
        for (auto& z : a) z *= inv;
    }
}

/// Forward/inverse DFT for any length (radix-2 when possible).
inline void dft_any(std::vector<cplx>& a, bool inverse) {
    if (a.size() <= 1) return;
    if (is_pow2(a.size()))
        fft_pow2(a, inverse);
    else
        dft_bluestein(a, inverse);
}

}  // namespace qpc::detail
