#pragma once

#include <cmath>

namespace gprwi::em {

// Ricker wavelet, peak amplitude 1 at t == delay.
//   w(tau) = (1 - 2 pi^2 f^2 tau^2) exp(-pi^2 f^2 tau^2)
inline double ricker_wavelet(double t, double f, double delay) {
  const double tau = t - delay;
  const double u = M_PI * M_PI * f * f * tau * tau;
  return (1.0 - 2.0 * u) * std::exp(-u);
}

}  // namespace gprwi::em
