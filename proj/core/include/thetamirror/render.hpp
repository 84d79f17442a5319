#pragma once

#include <string>
#include <vector>

#include "thetamirror/broken_lines.hpp"
#include "thetamirror/scattering2d.hpp"

namespace thetamirror {

struct RenderOptions {
  int size = 480;       // pixels, square canvas
  double extent = 4.0;  // lattice units from the origin to the border
};

// SVG 1.1: rays and walls with their functions as <title> text, shaded
// chambers with kink labels (looijenga mode), and broken lines.
std::string render_svg(const WallStructure& s, const std::vector<BrokenLine>& lines = {},
                       const RenderOptions& o = {});

// One line per wall: direction, origin and function.
std::string render_text(const WallStructure& s);

}  // namespace thetamirror
