#include "ferrers/render.hpp"

#include <cassert>
#include <charconv>
#include <limits>
#include <string>

#include <nlohmann/json.hpp>

#include "ferrers/errors.hpp"

namespace ferrers {

namespace {

// Shortest round-trip formatting; integral values print without a point,
// keeping default-cell-size SVG on an integer pixel grid.
std::string coord(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string render_ascii(const Partition& d) {
  std::string out;
  const std::vector<u64>& rows = d.rows();
  // Shorter rows first: the longest row sits at the bottom.
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
    out.append(*it, '#');
    out.push_back('\n');
  }
  return out;
}

std::string render_svg(const Partition& d, double cell) {
  const std::vector<u64>& rows = d.rows();
  const u64 k = rows.size();
  const std::string w = coord(static_cast<double>(width(d)) * cell);
  const std::string h = coord(static_cast<double>(k) * cell);
  const std::string c = coord(cell);
  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + w +
                    "\" height=\"" + h + "\" viewBox=\"0 0 " + w + " " + h +
                    "\">\n";
  // Canonical row i sits i cells above the bottom edge; emit top-to-bottom.
  for (u64 i = k; i-- > 0;) {
    const std::string y = coord(static_cast<double>(k - 1 - i) * cell);
    for (u64 col = 0; col < rows[i]; ++col) {
      out += "<rect x=\"" + coord(static_cast<double>(col) * cell) +
             "\" y=\"" + y + "\" width=\"" + c + "\" height=\"" + c +
             "\" fill=\"none\" stroke=\"black\"/>\n";
    }
  }
  out += "</svg>\n";
  return out;
}

std::string render_tikz(const Partition& d) {
  const std::vector<u64>& rows = d.rows();
  std::string out;
  // y axis points up: canonical row i is drawn at height i, so the
  // longest row lands on the x axis.
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (u64 col = 0; col < rows[i]; ++col) {
      out += "\\draw (" + std::to_string(col) + "," + std::to_string(i) +
             ") rectangle +(1,1);\n";
    }
  }
  return out;
}

std::string render_json(const Partition& d) {
  nlohmann::ordered_json j;
  try {
    u128 n = from_diagram(d);
    if (n <= u128{std::numeric_limits<u64>::max()}) {
      j["n"] = static_cast<u64>(n);
    } else {
      j["n"] = to_string(n);
    }
  } catch (const OverflowError&) {
    j["n"] = nullptr;
  }
  j["rows"] = d.rows();
  return j.dump();
}

}  // namespace

std::string render(const Partition& d, const RenderSpec& spec) {
  assert(spec.cell_size > 0);
  switch (spec.format) {
    case RenderFormat::ascii:
      return render_ascii(d);
    case RenderFormat::svg:
      return render_svg(d, spec.cell_size);
    case RenderFormat::tikz:
      return render_tikz(d);
    case RenderFormat::json:
      return render_json(d);
  }
  return {};
}

std::optional<RenderFormat> parse_render_format(std::string_view name) {
  if (name == "ascii") return RenderFormat::ascii;
  if (name == "svg") return RenderFormat::svg;
  if (name == "tikz") return RenderFormat::tikz;
  if (name == "json") return RenderFormat::json;
  return std::nullopt;
}

}  // namespace ferrers
