#pragma once

#include <cmath>
#include <cstddef>
#include <string>

#include "gprwi/em/fdtd.hpp"
#include "gprwi/em/types.hpp"
#include "gprwi/scene/rasterize.hpp"
#include "gprwi/scene/wall.hpp"

namespace gprwi::em {

// Lateral scan geometry. 40 tx/rx pairs, pair midpoints stepping 4 mm across
// the central 156 mm of the wall, antennas 40 mm apart just above the
// surface.
struct AcquisitionSpec {
  std::size_t n_traces = kCanonicalCols;
  double trace_step_m = 0.004;
  double first_midpoint_m = 0.042;
  double antenna_sep_m = 0.040;
  double antenna_height_m = 0.015;
  std::size_t rows = kCanonicalRows;
  scene::RasterParams raster;
};

// Antenna cell for a wall-local x coordinate and a height above the surface.
inline CellPos antenna_cell(const SimGrid& g, double x_m, double height_m) {
  const auto ix = static_cast<std::size_t>(
      std::llround(x_m / g.cell_m - 0.5) + static_cast<long long>(g.pml_cells));
  const auto up = static_cast<std::size_t>(
      std::llround(height_m / g.cell_m + 0.5));
  if (up > g.surface_row) throw GeometryError("antenna above the grid");
  return CellPos{ix, g.surface_row - up};
}

inline SourceSpec make_source(const SimGrid& g, const AcquisitionSpec& acq,
                              double midpoint_x_m) {
  SourceSpec s;
  s.center_freq_hz = 1e9;
  s.delay_s = 1.5 / s.center_freq_hz;
  const double half = acq.antenna_sep_m / 2.0;
  s.tx_pos = antenna_cell(g, midpoint_x_m - half, acq.antenna_height_m);
  s.rx_pos = antenna_cell(g, midpoint_x_m + half, acq.antenna_height_m);
  if (!g.in_interior(s.tx_pos) || !g.in_interior(s.rx_pos))
    throw GeometryError("antenna position falls inside the PML");
  return s;
}

// Full radargram: one A-scan per lateral position, each resampled onto the
// canonical time grid. Deterministic for identical inputs.
inline BScan run_bscan(const scene::WallConfig& config,
                       const AcquisitionSpec& acq = {}) {
  const SimGrid grid = scene::rasterize(config, acq.raster.cell_m, acq.raster);

  BScan b;
  b.rows = acq.rows;
  b.cols = acq.n_traces;
  b.data.assign(b.rows * b.cols, 0.0f);
  b.trace_step_m = acq.trace_step_m;
  b.time_window_s = acq.raster.time_window_s;

  for (std::size_t t = 0; t < acq.n_traces; ++t) {
    const double mid =
        acq.first_midpoint_m + static_cast<double>(t) * acq.trace_step_m;
    const SourceSpec src = make_source(grid, acq, mid);
    const AScan a = run_ascan(grid, src);
    const std::vector<double> col = resample_trace(a, b.rows);
    for (std::size_t r = 0; r < b.rows; ++r)
      b.at(r, t) = static_cast<float>(col[r]);
  }
  b.validate();
  return b;
}

}  // namespace gprwi::em
