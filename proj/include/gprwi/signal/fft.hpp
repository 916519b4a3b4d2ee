#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "gprwi/errors.hpp"

namespace gprwi::signal {

inline std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

// Iterative radix-2 Cooley-Tukey. n must be a power of two.
inline void fft_inplace(std::vector<std::complex<double>>& a, bool inverse) {
  const std::size_t n = a.size();
  if (n == 0 || (n & (n - 1)) != 0)
    throw ArgumentError("fft: length must be a power of two");

  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = (inverse ? 2.0 : -2.0) * M_PI / static_cast<double>(len);
    const std::complex<double> wl(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (std::size_t k = 0; k < len / 2; ++k) {
        const std::complex<double> u = a[i + k];
        const std::complex<double> v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wl;
      }
    }
  }
  if (inverse)
    for (auto& x : a) x /= static_cast<double>(n);
}

// Magnitude of the analytic signal, computed on a zero-padded grid.
// Standard instantaneous-amplitude estimate for arrival picking.
inline std::vector<double> envelope(const std::vector<double>& x) {
  const std::size_t n = x.size();
  if (n == 0) return {};
  const std::size_t m = next_pow2(n);
  std::vector<std::complex<double>> a(m, {0.0, 0.0});
  for (std::size_t i = 0; i < n; ++i) a[i] = {x[i], 0.0};
  fft_inplace(a, false);
  for (std::size_t k = 1; k < m / 2; ++k) a[k] *= 2.0;
  for (std::size_t k = m / 2 + 1; k < m; ++k) a[k] = {0.0, 0.0};
  fft_inplace(a, true);
  std::vector<double> env(n);
  for (std::size_t i = 0; i < n; ++i) env[i] = std::abs(a[i]);
  return env;
}

}  // namespace gprwi::signal
