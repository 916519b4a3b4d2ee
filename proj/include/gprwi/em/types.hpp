#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "gprwi/em/constants.hpp"
#include "gprwi/errors.hpp"

namespace gprwi::em {

struct CellPos {
  std::size_t ix = 0;  // column (width axis)
  std::size_t iy = 0;  // row (depth axis, 0 = top of grid)
};

// Discretized 2D scene: full simulation domain including the PML frame and
// the air gap above the wall. eps_r/sigma are row-major [ny][nx].
struct SimGrid {
  double width_m = 0.24;   // wall width
  double depth_m = 0.46;   // wall depth capacity
  double cell_m = 0.002;   // spatial step
  std::size_t nx = 0;
  std::size_t ny = 0;
  std::vector<double> eps_r;
  std::vector<double> sigma;
  std::size_t pml_cells = 10;
  double dt_s = 0.0;
  std::size_t n_steps = 0;
  std::size_t surface_row = 0;  // first wall row; rows above are air

  std::size_t idx(std::size_t iy, std::size_t ix) const { return iy * nx + ix; }

  // 2D Courant bound for the Yee scheme
  double courant_limit() const { return cell_m / (c0 * std::sqrt(2.0)); }

  void validate() const {
    if (nx == 0 || ny == 0 || eps_r.size() != nx * ny ||
        sigma.size() != nx * ny)
      throw ShapeError("SimGrid: field arrays do not match nx*ny");
    if (dt_s <= 0.0 || dt_s > courant_limit())
      throw StabilityViolation("SimGrid: dt " + std::to_string(dt_s) +
                               " exceeds Courant limit " +
                               std::to_string(courant_limit()));
    if (pml_cells < 8) throw ArgumentError("SimGrid: pml_cells must be >= 8");
    if (nx <= 4 * pml_cells || ny <= 4 * pml_cells)
      throw ArgumentError("SimGrid: interior must exceed 2*pml_cells");
    for (double e : eps_r)
      if (!(e >= 1.0)) throw ArgumentError("SimGrid: eps_r cell < 1");
    for (double s : sigma)
      if (!(s >= 0.0)) throw ArgumentError("SimGrid: sigma cell < 0");
  }

  bool in_interior(CellPos p) const {
    return p.ix >= pml_cells && p.ix < nx - pml_cells && p.iy >= pml_cells &&
           p.iy < ny - pml_cells;
  }
};

enum class Waveform { Ricker };

struct SourceSpec {
  Waveform kind = Waveform::Ricker;
  double center_freq_hz = 1e9;
  double delay_s = 1.5e-9;
  CellPos tx_pos;
  CellPos rx_pos;

  void validate(const SimGrid& g) const {
    if (center_freq_hz <= 0.0) throw ArgumentError("SourceSpec: freq <= 0");
    if (delay_s < 1.0 / center_freq_hz)
      throw ArgumentError("SourceSpec: delay shorter than one period");
    const double sep =
        std::abs(static_cast<double>(tx_pos.ix) - static_cast<double>(rx_pos.ix)) *
        g.cell_m;
    if (std::abs(sep - 0.040) > g.cell_m + 1e-12)
      throw ArgumentError("SourceSpec: tx/rx separation must be 40mm +- one cell");
    if (!g.in_interior(tx_pos) || !g.in_interior(rx_pos))
      throw GeometryError("SourceSpec: antenna inside PML");
  }
};

// Receiver time series of Ez.
struct AScan {
  std::vector<double> samples;
  double dt_s = 0.0;
  double t0_s = 0.0;
};

// Canonical radargram: rows = time (255), cols = traces (40).
struct BScan {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<float> data;  // row-major [rows][cols]
  double time_window_s = 12e-9;
  double trace_step_m = 0.004;
  std::string meta;

  float& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const float& at(std::size_t r, std::size_t c) const {
    return data[r * cols + c];
  }

  void validate() const {
    if (data.size() != rows * cols)
      throw ShapeError("BScan: data size does not match rows*cols");
    for (float v : data)
      if (!std::isfinite(v)) throw Error("BScan: non-finite sample");
  }
};

inline constexpr std::size_t kCanonicalRows = 255;
inline constexpr std::size_t kCanonicalCols = 40;

}  // namespace gprwi::em
