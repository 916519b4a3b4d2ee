#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "gprwi/em/constants.hpp"
#include "gprwi/em/types.hpp"
#include "gprwi/scene/wall.hpp"

namespace gprwi::scene {

// Discretization defaults: 2 mm cells give >= 10 cells per wavelength at
// 1 GHz in eps_r = 7, and dt sits at 95% of the 2D Courant bound.
struct RasterParams {
  double cell_m = 0.002;
  std::size_t pml_cells = 10;
  double air_gap_m = 0.04;        // free space above the wall surface
  double courant_fraction = 0.95;
  double time_window_s = 12e-9;
  double sigma_wall = 0.001;      // uniform small loss in solid material
};

// Replicates the outermost interior cells outward so the PML is matched to
// whatever material touches it.
inline void extend_edges_into_pml(em::SimGrid& g) {
  const std::size_t p = g.pml_cells;
  auto clamp = [](std::size_t v, std::size_t lo, std::size_t hi) {
    return v < lo ? lo : (v > hi ? hi : v);
  };
  for (std::size_t iy = 0; iy < g.ny; ++iy) {
    const std::size_t sy = clamp(iy, p, g.ny - 1 - p);
    for (std::size_t ix = 0; ix < g.nx; ++ix) {
      const std::size_t sx = clamp(ix, p, g.nx - 1 - p);
      if (sx == ix && sy == iy) continue;
      g.eps_r[g.idx(iy, ix)] = g.eps_r[g.idx(sy, sx)];
      g.sigma[g.idx(iy, ix)] = g.sigma[g.idx(sy, sx)];
    }
  }
}

// Cell centers take the permittivity of the layer they fall in; grain disks
// override layers; everything above the surface and below the wall bottom is
// air. Conductivity is sigma_wall inside solids, zero in air.
inline em::SimGrid rasterize(const WallConfig& config, double cell_m,
                             const RasterParams& params = {}) {
  config.validate();
  RasterParams p = params;
  p.cell_m = cell_m;

  em::SimGrid g;
  g.cell_m = p.cell_m;
  g.pml_cells = p.pml_cells;
  const auto wall_cols =
      static_cast<std::size_t>(std::llround(g.width_m / p.cell_m));
  const auto wall_rows =
      static_cast<std::size_t>(std::llround(g.depth_m / p.cell_m));
  const auto air_rows =
      static_cast<std::size_t>(std::llround(p.air_gap_m / p.cell_m));
  g.nx = wall_cols + 2 * p.pml_cells;
  g.ny = wall_rows + air_rows + 2 * p.pml_cells;
  g.surface_row = p.pml_cells + air_rows;
  g.dt_s = p.courant_fraction * g.courant_limit();
  g.n_steps = static_cast<std::size_t>(std::ceil(p.time_window_s / g.dt_s));

  g.eps_r.assign(g.nx * g.ny, 1.0);
  g.sigma.assign(g.nx * g.ny, 0.0);

  // cumulative layer bottoms, depth measured from the surface
  std::vector<double> bottoms;
  double acc = 0.0;
  for (const auto& l : config.layers) {
    acc += l.thickness_m;
    bottoms.push_back(acc);
  }
  const double wall_depth = acc;

  for (std::size_t iy = g.surface_row; iy < g.surface_row + wall_rows; ++iy) {
    const double depth =
        (static_cast<double>(iy - g.surface_row) + 0.5) * p.cell_m;
    if (depth >= wall_depth) break;
    std::size_t li = 0;
    while (li + 1 < bottoms.size() && depth >= bottoms[li]) ++li;
    const double eps = config.layers[li].eps_r;
    for (std::size_t ix = p.pml_cells; ix < p.pml_cells + wall_cols; ++ix) {
      g.eps_r[g.idx(iy, ix)] = eps;
      g.sigma[g.idx(iy, ix)] = p.sigma_wall;
    }
  }

  for (const auto& gr : config.grains) {
    if (gr.x_m - gr.radius_m < 0.0 || gr.x_m + gr.radius_m > g.width_m ||
        gr.y_m - gr.radius_m < 0.0 || gr.y_m + gr.radius_m > wall_depth)
      throw GeometryError("rasterize: grain outside the wall volume");
    const double r2 = gr.radius_m * gr.radius_m;
    for (std::size_t iy = g.surface_row; iy < g.surface_row + wall_rows;
         ++iy) {
      const double cy =
          (static_cast<double>(iy - g.surface_row) + 0.5) * p.cell_m;
      for (std::size_t ix = p.pml_cells; ix < p.pml_cells + wall_cols; ++ix) {
        const double cx =
            (static_cast<double>(ix - p.pml_cells) + 0.5) * p.cell_m;
        const double dx = cx - gr.x_m, dy = cy - gr.y_m;
        if (dx * dx + dy * dy <= r2) g.eps_r[g.idx(iy, ix)] = gr.eps_r;
      }
    }
  }

  // The wall continues past the scan area in reality, so materials are
  // extended into the PML frame; otherwise the domain edge itself would
  // reflect.
  extend_edges_into_pml(g);

  return g;
}

}  // namespace gprwi::scene
