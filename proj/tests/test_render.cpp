#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <string>

#include "rodring/enumerate.hpp"
#include "rodring/render.hpp"

using namespace rodring;

namespace {

int count_substr(const std::string& haystack, const std::string& needle) {
  int count = 0;
  for (size_t pos = haystack.find(needle); pos != std::string::npos;
       pos = haystack.find(needle, pos + needle.size())) {
    ++count;
  }
  return count;
}

GeometricTiling geo(const char* word, int m, int n) {
  return to_geometric(tiling_from_word(word), {m, n});
}

}  // namespace

TEST_CASE("ascii: four separate boxes") {
  const std::string expected =
      "┌───┬───┐\n"
      "│   │   │\n"
      "├───┼───┤\n"
      "│   │   │\n"
      "└───┴───┘\n";
  CHECK(render_tiling_ascii(geo("CCCC", 2, 2)) == expected);
}

TEST_CASE("ascii: horizontal dimer merges two boxes") {
  const std::string expected =
      "┌───────┐\n"
      "│       │\n"
      "├───┬───┤\n"
      "│   │   │\n"
      "└───┴───┘\n";
  CHECK(render_tiling_ascii(geo("RLCC", 2, 2)) == expected);
}

TEST_CASE("ascii: wrapping dimer is vertical on the left column") {
  const std::string expected =
      "┌───┬───┐\n"
      "│   │   │\n"
      "│   ├───┤\n"
      "│   │   │\n"
      "└───┴───┘\n";
  CHECK(render_tiling_ascii(geo("LCCR", 2, 2)) == expected);
}

TEST_CASE("ascii: 3x3 monomers box every border cell") {
  const std::string expected =
      "┌───┬───┬───┐\n"
      "│   │   │   │\n"
      "├───┼───┼───┤\n"
      "│   │   │   │\n"
      "├───┼───┼───┤\n"
      "│   │   │   │\n"
      "└───┴───┴───┘\n";
  CHECK(render_tiling_ascii(geo("CCCCCCCC", 3, 3)) == expected);
}

TEST_CASE("ascii output is deterministic and newline-terminated") {
  const GeometricTiling t = geo("RLCCRLCC", 3, 3);
  const std::string a = render_tiling_ascii(t);
  CHECK(a == render_tiling_ascii(t));
  REQUIRE_FALSE(a.empty());
  CHECK(a.back() == '\n');
  for (size_t pos = a.find(" \n"); pos != std::string::npos; pos = a.find(" \n", pos + 1)) {
    FAIL_CHECK("trailing space before newline at offset " << pos);
  }
}

namespace {

std::vector<GeometricTiling> full_catalog(int m, int n) {
  std::vector<GeometricTiling> out;
  for (const Tiling& t : enumerate_ring_tilings(ring_length({m, n}))) {
    out.push_back(to_geometric(t, {m, n}));
  }
  return out;
}

}  // namespace

TEST_CASE("svg: one <g> per tiling and nothing else") {
  const std::string seven = render_catalog_svg(full_catalog(2, 2));
  CHECK(count_substr(seven, "<g ") == 7);
  CHECK(count_substr(seven, "<g") == 7);
  CHECK(seven.rfind("<svg xmlns=\"http://www.w3.org/2000/svg\"", 0) == 0);

  const std::string fortyseven = render_catalog_svg(full_catalog(3, 3));
  CHECK(count_substr(fortyseven, "<g ") == 47);
}

TEST_CASE("svg: catalog layout") {
  // Seven 2x2 tilings fit one default row: every group sits at y = 12.
  const std::string seven = render_catalog_svg(full_catalog(2, 2));
  CHECK(count_substr(seven, "translate(") == 7);
  CHECK(seven.find("translate(12 12)") != std::string::npos);
  CHECK(seven.find("translate(372 12)") != std::string::npos);  // seventh column
  CHECK(seven.find(" 72)") == std::string::npos);               // no second row

  // Forty-seven 3x3 tilings wrap into rows of eight.
  const std::string fortyseven = render_catalog_svg(full_catalog(3, 3));
  CHECK(fortyseven.find("translate(12 96)") != std::string::npos);  // second row
  CHECK(fortyseven.find("height=\"516\"") != std::string::npos);    // six rows
}

TEST_CASE("svg: fills by tile kind and the interior hole") {
  const std::string seven = render_catalog_svg(full_catalog(2, 2));
  CHECK(seven.find("fill=\"white\"") != std::string::npos);
  CHECK(seven.find("fill=\"red\"") != std::string::npos);
  CHECK(seven.find("fill=\"gray\"") == std::string::npos);  // 2x2 has no hole

  const std::string fortyseven = render_catalog_svg(full_catalog(3, 3));
  CHECK(count_substr(fortyseven, "fill=\"gray\"") == 47);  // one hole per tiling

  const std::string rods = render_catalog_svg(enumerate_geometric_tilings({2, 3}, 3));
  CHECK(rods.find("fill=\"lightsteelblue\"") != std::string::npos);
}

TEST_CASE("svg: style overrides") {
  RenderStyle style;
  style.cell_size = 10;
  style.columns = 3;
  style.dimer_fill = "blue";
  const std::string svg = render_catalog_svg(full_catalog(2, 2), style);
  CHECK(svg.find("fill=\"blue\"") != std::string::npos);
  CHECK(svg.find("fill=\"red\"") == std::string::npos);
  CHECK(svg.find("width=\"80\"") != std::string::npos);  // 5 + 3 * (20 + 5)
  CHECK(svg.find("translate(5 30)") != std::string::npos);  // second row starts
}

TEST_CASE("svg: input validation and determinism") {
  CHECK_THROWS_AS(render_catalog_svg({}), std::invalid_argument);

  std::vector<GeometricTiling> mixed = full_catalog(2, 2);
  mixed.push_back(geo("CCCCCC", 2, 3));
  CHECK_THROWS_AS(render_catalog_svg(mixed), std::invalid_argument);

  RenderStyle bad;
  bad.columns = 0;
  CHECK_THROWS_AS(render_catalog_svg(full_catalog(2, 2), bad), std::invalid_argument);

  const auto catalog = full_catalog(3, 3);
  CHECK(render_catalog_svg(catalog) == render_catalog_svg(catalog));
}
