#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hookcensus/hooks.hpp"

namespace hookcensus {

struct Rgb {
  int r = 0, g = 0, b = 0;

  std::string hex() const;
};

// Color 0 is gray; color t sits at hue 137.5*t degrees (mod 360) at fixed
// saturation and lightness, so nearby indices stay visually distinct.
Rgb palette_color(int t);

// Character used for color index t in the ASCII grid: digits, then letters.
char color_char(int t);

// One diagram: points as color digits on an n-by-(2n-1) grid with hook
// segments drawn in '|' and '-', plus a header line.
std::string render_ascii(const HookConfiguration& config, const ColoredDiagram& diagram);

// One SVG 1.1 document; multiple configurations are stacked vertically.
// Output is byte-stable for fixed input.
std::string render_svg(const std::vector<std::pair<HookConfiguration, ColoredDiagram>>& items);

}  // namespace hookcensus
