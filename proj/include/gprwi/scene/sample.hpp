#pragma once

#include <cstddef>
#include <vector>

#include "gprwi/rng.hpp"
#include "gprwi/scene/wall.hpp"

namespace gprwi::scene {

// Layer count in [1,6], weighted toward deeper stacks: P(k) = k/21.
inline std::size_t sample_layer_count(Rng& rng) {
  static const std::vector<double> weights{1, 2, 3, 4, 5, 6};
  return rng.categorical(weights) + 1;
}

// Random wall draw.
//
// Total thickness is uniform over [0.10, 0.46] m in 5 mm quanta. Every layer
// gets a 2 cm floor; the remaining quanta are split by a multinomial with
// equal category probabilities, so no layer index is favored. Permittivities
// are uniform in [1, 7]. 0-20 noise grains land uniformly inside the wall.
inline WallConfig sample_wall(Rng& rng) {
  constexpr double quantum = 0.005;
  constexpr int floor_quanta = 4;  // 2 cm

  for (int attempt = 0; attempt < 100; ++attempt) {
    const std::size_t n = sample_layer_count(rng);
    const int total_quanta = 20 + static_cast<int>(rng.uniform_int(0, 72));
    const int spare = total_quanta - floor_quanta * static_cast<int>(n);
    if (spare < 0) continue;

    std::vector<int> share(n, 0);
    for (int q = 0; q < spare; ++q)
      share[static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(n) - 1))]++;

    WallConfig c;
    for (std::size_t i = 0; i < n; ++i) {
      Layer l;
      l.thickness_m = (floor_quanta + share[i]) * quantum;
      l.eps_r = rng.uniform(1.0, 7.0);
      c.layers.push_back(l);
    }

    const double depth = c.total_thickness();
    const std::size_t n_grains = static_cast<std::size_t>(rng.uniform_int(0, 20));
    for (std::size_t k = 0; k < n_grains; ++k) {
      NoiseGrain gr;
      gr.radius_m = rng.uniform(0.002, 0.008);
      gr.x_m = rng.uniform(gr.radius_m, kWallWidth - gr.radius_m);
      gr.y_m = rng.uniform(gr.radius_m, depth - gr.radius_m);
      gr.eps_r = rng.uniform(1.0, 7.0);
      c.grains.push_back(gr);
    }

    c.validate();
    return c;
  }
  throw ConstraintError("sample_wall: no feasible draw in 100 attempts");
}

}  // namespace gprwi::scene
