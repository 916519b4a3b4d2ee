#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "gprwi/errors.hpp"

namespace gprwi::scene {

inline constexpr std::size_t kMaxLayers = 6;
inline constexpr double kWallWidth = 0.24;
inline constexpr double kWallDepthCap = 0.46;
inline constexpr double kMinLayerThickness = 0.02;

struct Layer {
  double thickness_m = 0.0;
  double eps_r = 1.0;
};

struct NoiseGrain {
  double x_m = 0.0;  // across the wall width
  double y_m = 0.0;  // depth below the wall surface
  double radius_m = 0.0;
  double eps_r = 1.0;
};

// Ground-truth wall description: layer 0 is nearest the scanner.
struct WallConfig {
  std::vector<Layer> layers;
  std::vector<NoiseGrain> grains;
  std::uint64_t seed = 0;

  double total_thickness() const {
    double t = 0.0;
    for (const auto& l : layers) t += l.thickness_m;
    return t;
  }

  void validate() const {
    if (layers.empty() || layers.size() > kMaxLayers)
      throw ConstraintError("WallConfig: layer count must be in [1,6]");
    for (const auto& l : layers) {
      if (l.thickness_m < kMinLayerThickness)
        throw ConstraintError("WallConfig: layer thinner than 2cm");
      if (l.eps_r < 1.0 || l.eps_r > 8.0)
        throw ConstraintError("WallConfig: layer eps_r outside [1,8]");
    }
    if (total_thickness() > kWallDepthCap + 1e-12)
      throw ConstraintError("WallConfig: total thickness exceeds 0.46m");
    const double depth = total_thickness();
    for (const auto& gr : grains) {
      if (gr.radius_m < 0.002 || gr.radius_m > 0.008)
        throw ConstraintError("WallConfig: grain radius outside [2mm,8mm]");
      if (gr.eps_r < 1.0 || gr.eps_r > 7.0)
        throw ConstraintError("WallConfig: grain eps_r outside [1,7]");
      if (gr.x_m - gr.radius_m < 0.0 || gr.x_m + gr.radius_m > kWallWidth ||
          gr.y_m - gr.radius_m < 0.0 || gr.y_m + gr.radius_m > depth)
        throw ConstraintError("WallConfig: grain not fully inside the wall");
    }
  }
};

// 12 reals: slots 0-5 layer thicknesses (m), slots 6-11 relative
// permittivities, zero-padded past the actual layer count.
struct TargetVector {
  std::array<double, 12> values{};

  double thickness(std::size_t i) const { return values[i]; }
  double permittivity(std::size_t i) const { return values[6 + i]; }

  std::size_t layer_count() const {
    std::size_t n = 0;
    while (n < kMaxLayers && values[n] > 0.0) ++n;
    return n;
  }
};

inline TargetVector to_target(const WallConfig& c) {
  TargetVector t;
  for (std::size_t i = 0; i < c.layers.size() && i < kMaxLayers; ++i) {
    t.values[i] = c.layers[i].thickness_m;
    t.values[6 + i] = c.layers[i].eps_r;
  }
  return t;
}

// Inverse of to_target for grain-free configs.
inline WallConfig from_target(const TargetVector& t) {
  WallConfig c;
  for (std::size_t i = 0; i < kMaxLayers; ++i) {
    if (t.values[i] <= 0.0) break;
    c.layers.push_back({t.values[i], t.values[6 + i]});
  }
  return c;
}

}  // namespace gprwi::scene
