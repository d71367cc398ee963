#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "ferrers/diagram.hpp"

namespace ferrers {

enum class RenderFormat { ascii, svg, tikz, json };

struct RenderSpec {
  enum class Align { bottom_left };

  RenderFormat format = RenderFormat::ascii;
  double cell_size = 10.0;  // SVG units; TikZ squares stay unit-sized
  Align align = Align::bottom_left;
};

// Deterministic text rendering of a canonical diagram.
//
//   ascii  one line per row, shorter rows first (longest row at the
//          bottom), '#' per square, no trailing whitespace
//   svg    a single <svg> element, one <rect> per square, bottom-left
//          aligned on a cell_size grid
//   tikz   one unit-square \draw rectangle per square, y axis up, for use
//          inside a tikzpicture environment
//   json   {"n": <natural|string|null>, "rows": [...]} — the canonical
//          form, n recomputed via from_diagram (null past 128 bits)
//
// The empty diagram renders to empty output for ascii/tikz.
std::string render(const Partition& d, const RenderSpec& spec = {});

std::optional<RenderFormat> parse_render_format(std::string_view name);

}  // namespace ferrers
