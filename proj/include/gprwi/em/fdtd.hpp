#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "gprwi/em/constants.hpp"
#include "gprwi/em/ricker.hpp"
#include "gprwi/em/types.hpp"
#include "gprwi/errors.hpp"

namespace gprwi::em {

// Transverse-magnetic (Ez out of plane) Yee solver with a convolutional PML
// frame. One instance owns the field state of a single run; distinct runs are
// independent.
//
// Ez lives on integer nodes, Hx on (i, j+1/2), Hy on (i+1/2, j). The psi
// recursive-convolution accumulators degenerate to (b=1, a=0) outside the
// PML, so the hot interior loops skip them entirely.
//
// Scalar is double for the physics oracles; float halves the bandwidth when
// bulk-generating radargrams and matches the storage precision.
template <typename Scalar = double>
class TmzSolver {
 public:
  TmzSolver(const SimGrid& grid, const SourceSpec& source,
            double blowup_threshold = 1e6)
      : g_(grid), src_(source), blowup_(static_cast<Scalar>(blowup_threshold)) {
    g_.validate();
    src_.validate(g_);
    const std::size_t n = g_.nx * g_.ny;
    ez_.assign(n, Scalar(0));
    hx_.assign(n, Scalar(0));
    hy_.assign(n, Scalar(0));
    psi_ezx_.assign(n, Scalar(0));
    psi_ezy_.assign(n, Scalar(0));
    psi_hx_.assign(n, Scalar(0));
    psi_hy_.assign(n, Scalar(0));
    build_material_coeffs();
    build_pml_coeffs();
  }

  // One leapfrog update (H then E), soft Ricker injection at tx.
  void step(std::size_t n) {
    const std::size_t nx = g_.nx, ny = g_.ny, p = g_.pml_cells;
    const Scalar ch = static_cast<Scalar>(g_.dt_s / mu0);
    const Scalar inv_d = static_cast<Scalar>(1.0 / g_.cell_m);

    // Hx: psi graded along y, active only in the top/bottom PML rows
    for (std::size_t j = 0; j + 1 < ny; ++j) {
      Scalar* hx = &hx_[j * nx];
      const Scalar* e0 = &ez_[j * nx];
      const Scalar* e1 = &ez_[(j + 1) * nx];
      if (j >= p && j < ny - 1 - p) {
        for (std::size_t i = 0; i < nx; ++i)
          hx[i] -= ch * (e1[i] - e0[i]) * inv_d;
      } else {
        const Scalar bh = bh_y_[j], ah = ah_y_[j];
        Scalar* ph = &psi_hx_[j * nx];
        for (std::size_t i = 0; i < nx; ++i) {
          const Scalar dezy = (e1[i] - e0[i]) * inv_d;
          ph[i] = bh * ph[i] + ah * dezy;
          hx[i] -= ch * (dezy + ph[i]);
        }
      }
    }

    // Hy: psi graded along x, active only in the left/right PML columns
    for (std::size_t j = 0; j < ny; ++j) {
      Scalar* hy = &hy_[j * nx];
      Scalar* ph = &psi_hy_[j * nx];
      const Scalar* e = &ez_[j * nx];
      for (std::size_t i = 0; i < p; ++i) {
        const Scalar dezx = (e[i + 1] - e[i]) * inv_d;
        ph[i] = bh_x_[i] * ph[i] + ah_x_[i] * dezx;
        hy[i] += ch * (dezx + ph[i]);
      }
      for (std::size_t i = p; i < nx - 1 - p; ++i)
        hy[i] += ch * (e[i + 1] - e[i]) * inv_d;
      for (std::size_t i = nx - 1 - p; i + 1 < nx; ++i) {
        const Scalar dezx = (e[i + 1] - e[i]) * inv_d;
        ph[i] = bh_x_[i] * ph[i] + ah_x_[i] * dezx;
        hy[i] += ch * (dezx + ph[i]);
      }
    }

    // Ez update (outermost ring is PEC and stays zero)
    for (std::size_t j = 1; j + 1 < ny; ++j) {
      Scalar* ez = &ez_[j * nx];
      const Scalar* hyr = &hy_[j * nx];
      const Scalar* hxr = &hx_[j * nx];
      const Scalar* hxu = &hx_[(j - 1) * nx];
      const Scalar* ca = &ca_[j * nx];
      const Scalar* cb = &cb_[j * nx];
      const bool y_pml = (j < p) || (j >= ny - p);
      if (!y_pml) {
        Scalar* px = &psi_ezx_[j * nx];
        for (std::size_t i = 1; i < p; ++i) {
          const Scalar dhy = (hyr[i] - hyr[i - 1]) * inv_d;
          const Scalar dhx = (hxr[i] - hxu[i]) * inv_d;
          px[i] = be_x_[i] * px[i] + ae_x_[i] * dhy;
          ez[i] = ca[i] * ez[i] + cb[i] * (dhy - dhx + px[i]);
        }
        for (std::size_t i = p; i < nx - p; ++i) {
          const Scalar dhy = (hyr[i] - hyr[i - 1]) * inv_d;
          const Scalar dhx = (hxr[i] - hxu[i]) * inv_d;
          ez[i] = ca[i] * ez[i] + cb[i] * (dhy - dhx);
        }
        for (std::size_t i = nx - p; i + 1 < nx; ++i) {
          const Scalar dhy = (hyr[i] - hyr[i - 1]) * inv_d;
          const Scalar dhx = (hxr[i] - hxu[i]) * inv_d;
          px[i] = be_x_[i] * px[i] + ae_x_[i] * dhy;
          ez[i] = ca[i] * ez[i] + cb[i] * (dhy - dhx + px[i]);
        }
      } else {
        const Scalar be = be_y_[j], ae = ae_y_[j];
        Scalar* px = &psi_ezx_[j * nx];
        Scalar* py = &psi_ezy_[j * nx];
        for (std::size_t i = 1; i + 1 < nx; ++i) {
          const Scalar dhy = (hyr[i] - hyr[i - 1]) * inv_d;
          const Scalar dhx = (hxr[i] - hxu[i]) * inv_d;
          px[i] = be_x_[i] * px[i] + ae_x_[i] * dhy;
          py[i] = be * py[i] + ae * dhx;
          ez[i] = ca[i] * ez[i] + cb[i] * (dhy - dhx + px[i] - py[i]);
        }
      }
    }

    // soft source
    const double t = static_cast<double>(n + 1) * g_.dt_s;
    ez_[g_.idx(src_.tx_pos.iy, src_.tx_pos.ix)] += static_cast<Scalar>(
        ricker_wavelet(t, src_.center_freq_hz, src_.delay_s));

    if ((n & 63u) == 0 || n + 1 == g_.n_steps) check_stability(n);
  }

  double rx_sample() const {
    return static_cast<double>(ez_[g_.idx(src_.rx_pos.iy, src_.rx_pos.ix)]);
  }

  AScan run() {
    AScan out;
    out.samples.resize(g_.n_steps);
    out.dt_s = g_.dt_s;
    out.t0_s = g_.dt_s;
    for (std::size_t n = 0; n < g_.n_steps; ++n) {
      step(n);
      out.samples[n] = rx_sample();
    }
    return out;
  }

  const std::vector<Scalar>& ez() const { return ez_; }
  const std::vector<Scalar>& hx() const { return hx_; }
  const std::vector<Scalar>& hy() const { return hy_; }

 private:
  void build_material_coeffs() {
    const std::size_t n = g_.nx * g_.ny;
    ca_.resize(n);
    cb_.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
      const double eps = eps0 * g_.eps_r[k];
      const double loss = g_.sigma[k] * g_.dt_s / (2.0 * eps);
      ca_[k] = static_cast<Scalar>((1.0 - loss) / (1.0 + loss));
      cb_[k] = static_cast<Scalar>((g_.dt_s / eps) / (1.0 + loss));
    }
  }

  // Polynomial-graded (order 3) CPML, kappa = 1. Positions are measured in
  // cells; E nodes sit on integers, H nodes on half-integers.
  void build_pml_coeffs() {
    const double m = 3.0;
    const double sigma_max = 0.8 * (m + 1.0) / (eta0 * g_.cell_m);
    const double alpha_max = 0.05;

    auto coeffs = [&](double pos, double extent, Scalar& b, Scalar& a) {
      const double p = static_cast<double>(g_.pml_cells);
      double depth = 0.0;
      if (pos < p)
        depth = p - pos;
      else if (pos > extent - 1.0 - p)
        depth = pos - (extent - 1.0 - p);
      if (depth <= 0.0) {
        b = Scalar(1);
        a = Scalar(0);
        return;
      }
      const double rho = depth / p;
      const double sig = sigma_max * std::pow(rho, m);
      const double alp = alpha_max * (1.0 - rho);
      const double bb = std::exp(-(sig + alp) * g_.dt_s / eps0);
      b = static_cast<Scalar>(bb);
      a = static_cast<Scalar>(
          (sig + alp > 0.0) ? sig * (bb - 1.0) / (sig + alp) : 0.0);
    };

    be_x_.resize(g_.nx);
    ae_x_.resize(g_.nx);
    bh_x_.resize(g_.nx);
    ah_x_.resize(g_.nx);
    for (std::size_t i = 0; i < g_.nx; ++i) {
      coeffs(static_cast<double>(i), static_cast<double>(g_.nx), be_x_[i],
             ae_x_[i]);
      coeffs(static_cast<double>(i) + 0.5, static_cast<double>(g_.nx),
             bh_x_[i], ah_x_[i]);
    }
    be_y_.resize(g_.ny);
    ae_y_.resize(g_.ny);
    bh_y_.resize(g_.ny);
    ah_y_.resize(g_.ny);
    for (std::size_t j = 0; j < g_.ny; ++j) {
      coeffs(static_cast<double>(j), static_cast<double>(g_.ny), be_y_[j],
             ae_y_[j]);
      coeffs(static_cast<double>(j) + 0.5, static_cast<double>(g_.ny),
             bh_y_[j], ah_y_[j]);
    }
  }

  void check_stability(std::size_t n) const {
    for (const Scalar v : ez_)
      if (!(std::abs(v) <= blowup_))
        throw StabilityViolation("field blow-up at step " + std::to_string(n) +
                                 ": |Ez| exceeded " +
                                 std::to_string(static_cast<double>(blowup_)));
  }

  SimGrid g_;
  SourceSpec src_;
  Scalar blowup_;
  std::vector<Scalar> ez_, hx_, hy_;
  std::vector<Scalar> psi_ezx_, psi_ezy_, psi_hx_, psi_hy_;
  std::vector<Scalar> ca_, cb_;
  std::vector<Scalar> be_x_, ae_x_, bh_x_, ah_x_;
  std::vector<Scalar> be_y_, ae_y_, bh_y_, ah_y_;
};

inline AScan run_ascan(const SimGrid& grid, const SourceSpec& source) {
  TmzSolver<double> solver(grid, source);
  return solver.run();
}

// Linear resampling onto a uniform grid spanning the same time interval,
// endpoints included. Identity when n_out equals the input length.
inline std::vector<double> resample_trace(const AScan& a, std::size_t n_out) {
  if (n_out < 2) throw ArgumentError("resample_trace: n_out must be >= 2");
  if (a.samples.size() < n_out)
    throw ArgumentError("resample_trace: input shorter than n_out");
  const std::size_t n_in = a.samples.size();
  std::vector<double> out(n_out);
  const double scale =
      static_cast<double>(n_in - 1) / static_cast<double>(n_out - 1);
  for (std::size_t k = 0; k < n_out; ++k) {
    const double pos = static_cast<double>(k) * scale;
    std::size_t i = static_cast<std::size_t>(pos);
    if (i >= n_in - 1) i = n_in - 2;
    const double f = pos - static_cast<double>(i);
    out[k] = a.samples[i] + f * (a.samples[i + 1] - a.samples[i]);
  }
  return out;
}

}  // namespace gprwi::em
