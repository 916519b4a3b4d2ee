#pragma once

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "gprwi/errors.hpp"
#include "gprwi/scene/wall.hpp"

namespace gprwi::scene {

// Line-oriented scene text format:
//   layer <thickness_m> <eps_r>
//   grain <x_m> <y_m> <r_m> <eps_r>
//   seed <u64>
// Values are written with 6 significant digits so a write/read cycle is
// bit-stable.

inline std::string format_g6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

inline std::string write_scene_text(const WallConfig& c) {
  std::ostringstream out;
  out << "seed " << c.seed << "\n";
  for (const auto& l : c.layers)
    out << "layer " << format_g6(l.thickness_m) << " " << format_g6(l.eps_r)
        << "\n";
  for (const auto& g : c.grains)
    out << "grain " << format_g6(g.x_m) << " " << format_g6(g.y_m) << " "
        << format_g6(g.radius_m) << " " << format_g6(g.eps_r) << "\n";
  return out.str();
}

inline WallConfig parse_scene_text(const std::string& text) {
  WallConfig c;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    const auto fail = [&](const char* why) {
      throw FormatError("scene line " + std::to_string(line_no) + ": " + why);
    };
    if (tag == "layer") {
      Layer l;
      if (!(ls >> l.thickness_m >> l.eps_r)) fail("expected thickness eps_r");
      c.layers.push_back(l);
    } else if (tag == "grain") {
      NoiseGrain g;
      if (!(ls >> g.x_m >> g.y_m >> g.radius_m >> g.eps_r))
        fail("expected x y r eps_r");
      c.grains.push_back(g);
    } else if (tag == "seed") {
      if (!(ls >> c.seed)) fail("expected u64 seed");
    } else {
      fail("unknown directive");
    }
  }
  if (c.layers.empty())
    throw FormatError("scene: no layer lines");
  return c;
}

inline void save_scene(const WallConfig& c, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open for write: " + path);
  f << write_scene_text(c);
  if (!f) throw IoError("write failed: " + path);
}

inline WallConfig load_scene(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_scene_text(ss.str());
}

}  // namespace gprwi::scene
