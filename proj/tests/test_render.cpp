#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ferrers/diagram.hpp"
#include "ferrers/render.hpp"

using ferrers::Partition;
using ferrers::RenderFormat;
using ferrers::RenderSpec;
using ferrers::u64;

namespace {

Partition P(std::vector<u64> rows) { return Partition(std::move(rows)); }

std::string draw(const Partition& p, RenderFormat format,
                 double cell_size = 10.0) {
  RenderSpec spec;
  spec.format = format;
  spec.cell_size = cell_size;
  return ferrers::render(p, spec);
}

std::size_t count_occurrences(const std::string& haystack,
                              const std::string& needle) {
  std::size_t count = 0;
  for (std::size_t pos = haystack.find(needle); pos != std::string::npos;
       pos = haystack.find(needle, pos + needle.size())) {
    ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("ascii renders shortest row first") {
  CHECK(draw(P({3, 1}), RenderFormat::ascii) == "#\n###\n");
  CHECK(draw(P({}), RenderFormat::ascii) == "");
  CHECK(draw(P({1, 1, 1}), RenderFormat::ascii) == "#\n#\n#\n");
  CHECK(draw(P({2, 2}), RenderFormat::ascii) == "##\n##\n");
  CHECK(draw(P({4, 2, 1}), RenderFormat::ascii) == "#\n##\n####\n");
}

TEST_CASE("ascii cell count equals the number of boxes") {
  for (u64 n = 1; n <= 500; ++n) {
    Partition p = ferrers::to_diagram(n);
    u64 boxes = 0;
    for (u64 row : p.rows()) boxes += row;
    std::string art = draw(p, RenderFormat::ascii);
    REQUIRE(u64(std::count(art.begin(), art.end(), '#')) == boxes);
    REQUIRE(u64(std::count(art.begin(), art.end(), '\n')) ==
            ferrers::height(p));
  }
}

TEST_CASE("svg output is a fixed grid of stroked squares") {
  CHECK(draw(P({3, 1}), RenderFormat::svg) ==
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"30\" height=\"20\" "
        "viewBox=\"0 0 30 20\">\n"
        "<rect x=\"0\" y=\"0\" width=\"10\" height=\"10\" fill=\"none\" "
        "stroke=\"black\"/>\n"
        "<rect x=\"0\" y=\"10\" width=\"10\" height=\"10\" fill=\"none\" "
        "stroke=\"black\"/>\n"
        "<rect x=\"10\" y=\"10\" width=\"10\" height=\"10\" fill=\"none\" "
        "stroke=\"black\"/>\n"
        "<rect x=\"20\" y=\"10\" width=\"10\" height=\"10\" fill=\"none\" "
        "stroke=\"black\"/>\n"
        "</svg>\n");
  CHECK(draw(P({}), RenderFormat::svg) ==
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"0\" height=\"0\" "
        "viewBox=\"0 0 0 0\">\n</svg>\n");
}

TEST_CASE("svg rect count equals the number of boxes") {
  for (u64 n = 1; n <= 300; ++n) {
    Partition p = ferrers::to_diagram(n);
    u64 boxes = 0;
    for (u64 row : p.rows()) boxes += row;
    std::string svg = draw(p, RenderFormat::svg);
    REQUIRE(count_occurrences(svg, "<rect ") == boxes);
    REQUIRE(count_occurrences(svg, "</svg>") == 1);
  }
}

TEST_CASE("svg honours the cell size") {
  std::string svg = draw(P({2, 1}), RenderFormat::svg, 2.5);
  CHECK(svg.find("width=\"5\" height=\"5\"") != std::string::npos);
  CHECK(svg.find("x=\"2.5\" y=\"2.5\"") != std::string::npos);
  CHECK(svg.find("width=\"2.5\" height=\"2.5\"") != std::string::npos);
}

TEST_CASE("tikz draws unit squares, longest row on the x axis") {
  CHECK(draw(P({3, 1}), RenderFormat::tikz) ==
        "\\draw (0,0) rectangle +(1,1);\n"
        "\\draw (1,0) rectangle +(1,1);\n"
        "\\draw (2,0) rectangle +(1,1);\n"
        "\\draw (0,1) rectangle +(1,1);\n");
  CHECK(draw(P({}), RenderFormat::tikz) == "");
  CHECK(count_occurrences(draw(P({4, 4, 2}), RenderFormat::tikz),
                          "\\draw") == 10);
  CHECK(count_occurrences(draw(P({4, 4, 2}), RenderFormat::tikz),
                          "rectangle +(1,1);") == 10);
}

TEST_CASE("json renders n and the row list") {
  CHECK(draw(P({3, 1}), RenderFormat::json) == R"({"n":10,"rows":[3,1]})");
  CHECK(draw(P({}), RenderFormat::json) == R"({"n":1,"rows":[]})");
  CHECK(draw(P({1, 1, 1}), RenderFormat::json) == R"({"n":8,"rows":[1,1,1]})");
}

TEST_CASE("json switches to strings, then null, as n grows") {
  std::string narrow = draw(P(std::vector<u64>(63, 1)), RenderFormat::json);
  nlohmann::json parsed = nlohmann::json::parse(narrow);
  CHECK(parsed["n"].is_number_unsigned());
  CHECK(parsed["n"].get<u64>() == (u64{1} << 63));

  std::string wide = draw(P(std::vector<u64>(127, 1)), RenderFormat::json);
  parsed = nlohmann::json::parse(wide);
  CHECK(parsed["n"].is_string());
  CHECK(parsed["n"].get<std::string>() ==
        "170141183460469231731687303715884105728");
  CHECK(parsed["rows"].size() == 127);

  std::string huge = draw(P(std::vector<u64>(128, 1)), RenderFormat::json);
  parsed = nlohmann::json::parse(huge);
  CHECK(parsed["n"].is_null());
  CHECK(parsed["rows"].size() == 128);
}

TEST_CASE("rendering is deterministic") {
  Partition p = ferrers::to_diagram(987654);
  for (RenderFormat format : {RenderFormat::ascii, RenderFormat::svg,
                              RenderFormat::tikz, RenderFormat::json}) {
    REQUIRE(draw(p, format) == draw(p, format));
  }
}

TEST_CASE("format names parse exactly") {
  CHECK(ferrers::parse_render_format("ascii") == RenderFormat::ascii);
  CHECK(ferrers::parse_render_format("svg") == RenderFormat::svg);
  CHECK(ferrers::parse_render_format("tikz") == RenderFormat::tikz);
  CHECK(ferrers::parse_render_format("json") == RenderFormat::json);
  CHECK_FALSE(ferrers::parse_render_format("png").has_value());
  CHECK_FALSE(ferrers::parse_render_format("ASCII").has_value());
  CHECK_FALSE(ferrers::parse_render_format("").has_value());
}
