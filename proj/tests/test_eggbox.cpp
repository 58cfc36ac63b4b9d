#include <catch_amalgamated.hpp>

#include "sandwich/eggbox.hpp"
#include "sandwich/engine.hpp"
#include "sandwich/regular.hpp"
#include "sandwich/transformation.hpp"
#include "sandwich/variant.hpp"

using namespace sandwich;

namespace {
sandwich_element se(std::string const& literal) {
  return sandwich_element::parse(literal);
}
auto const compose_fn = [](transformation const& f, transformation const& g) {
  return compose(f, g);
};

egg_box_layout layout_of_tn(int n) {
  auto const table =
      semigroup_table<transformation>::from_elements(all_transformations(n), compose_fn);
  std::vector<int> identity;
  for (int i = 1; i <= n; ++i) {
    identity.push_back(i);
  }
  return build_egg_box(table, n, identity, "tn");
}

egg_box_layout layout_of_reg(sandwich_element const& s) {
  auto const table = semigroup_table<transformation>::from_elements(
      enumerate_reg(s), [&](auto const& f, auto const& g) { return star(f, g, s); });
  std::vector<int> sandwich_images;
  for (point v : s.a().images()) {
    sandwich_images.push_back(v + 1);
  }
  return build_egg_box(table, s.degree(), sandwich_images, "reg");
}
}  // namespace

TEST_CASE("egg box of T_2") {
  egg_box_layout const layout = layout_of_tn(2);
  REQUIRE(layout.dclasses.size() == 2);
  // rank ascending: the constants first
  CHECK(layout.dclasses[0].rank == 1);
  CHECK(layout.dclasses[0].rows == 1);
  CHECK(layout.dclasses[0].cols == 2);
  CHECK(layout.dclasses[0].h_size == 1);
  CHECK(layout.dclasses[0].groups == std::vector<std::vector<bool>>{{true, true}});
  CHECK(layout.dclasses[1].rank == 2);
  CHECK(layout.dclasses[1].rows == 1);
  CHECK(layout.dclasses[1].cols == 1);
  CHECK(layout.dclasses[1].h_size == 2);
  CHECK(layout.dclasses[1].groups == std::vector<std::vector<bool>>{{true}});
  CHECK(layout.dorder == std::vector<std::pair<int, int>>{{0, 1}});
}

TEST_CASE("egg box of Reg(T_4^a) for the running sandwich") {
  egg_box_layout const layout = layout_of_reg(se("[1,2,3,3]"));
  REQUIRE(layout.dclasses.size() == 3);
  CHECK(layout.semigroup == "reg");
  CHECK(layout.sandwich == std::vector<int>{1, 2, 3, 3});
  // chain of three regular classes: 1x4, 6x5, 3x2
  CHECK(layout.dclasses[0].rank == 1);
  CHECK(layout.dclasses[0].rows == 1);
  CHECK(layout.dclasses[0].cols == 4);
  CHECK(layout.dclasses[0].h_size == 1);
  CHECK(layout.dclasses[1].rank == 2);
  CHECK(layout.dclasses[1].rows == 6);
  CHECK(layout.dclasses[1].cols == 5);
  CHECK(layout.dclasses[1].h_size == 2);
  CHECK(layout.dclasses[2].rank == 3);
  CHECK(layout.dclasses[2].rows == 3);
  CHECK(layout.dclasses[2].cols == 2);
  CHECK(layout.dclasses[2].h_size == 6);
  for (auto const& dc : layout.dclasses) {
    CHECK(dc.case_tag == "regular");
  }
  CHECK(layout.dorder == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
  // every row and column of a regular class carries a group cell
  for (auto const& dc : layout.dclasses) {
    for (int row = 0; row < dc.rows; ++row) {
      bool any = false;
      for (int col = 0; col < dc.cols; ++col) {
        any = any || dc.groups[row][col];
      }
      CHECK(any);
    }
    for (int col = 0; col < dc.cols; ++col) {
      bool any = false;
      for (int row = 0; row < dc.rows; ++row) {
        any = any || dc.groups[row][col];
      }
      CHECK(any);
    }
  }
}

TEST_CASE("variant egg box separates the non-regular cases") {
  sandwich_element const s = se("[1,1,3]");
  auto const table = variant_table(s);
  egg_box_layout const layout = build_egg_box(table, 3, {1, 1, 3}, "variant");
  bool seen_singleton = false, seen_regular = false;
  bool seen_fragment = false;  // an R- or L-shaped non-regular class
  for (auto const& dc : layout.dclasses) {
    if (dc.case_tag == "regular") {
      seen_regular = true;
    }
    if (dc.case_tag == "singleton") {
      seen_singleton = true;
      CHECK(dc.rows == 1);
      CHECK(dc.cols == 1);
      CHECK(dc.h_size == 1);
    }
    if (dc.case_tag == "R" || dc.case_tag == "L") {
      seen_fragment = true;
      CHECK(dc.h_size == 1);  // non-regular H-classes are singletons
    }
  }
  CHECK(seen_regular);
  CHECK(seen_singleton);
  CHECK(seen_fragment);
}

TEST_CASE("variant egg box global statistics") {
  sandwich_element const s = se("[1,2,3,3]");
  auto const table = variant_table(s);
  egg_box_layout const layout = build_egg_box(table, 4, {1, 2, 3, 3}, "variant");
  long long total = 0;
  int regular_classes = 0;
  std::size_t high_rank_classes = 0;
  for (auto const& dc : layout.dclasses) {
    total += static_cast<long long>(dc.rows) * dc.cols * dc.h_size;
    if (dc.case_tag == "regular") {
      ++regular_classes;
    }
    if (dc.rank > s.rank()) {
      ++high_rank_classes;
      CHECK(dc.case_tag == "singleton");
    }
  }
  CHECK(total == 256);
  CHECK(regular_classes == s.rank());
  // one singleton class per element of rank above rank(a)
  std::size_t high_rank_elements = 0;
  for (transformation const& f : all_transformations(4)) {
    if (f.rank() > s.rank()) {
      ++high_rank_elements;
    }
  }
  CHECK(high_rank_classes == high_rank_elements);
}

TEST_CASE("text rendering is stable") {
  std::string const text = render_text(layout_of_tn(2));
  CHECK(text ==
        "egg box: semigroup=tn n=2 sandwich=[1,2]\n"
        "D1: rank=2 case=regular 1x1 |H|=2\n"
        "  |2|\n"
        "D0: rank=1 case=regular 1x2 |H|=1\n"
        "  |11|\n"
        "order: D0<D1\n");
}

TEST_CASE("dot rendering is a digraph with covering edges") {
  std::string const dot = render_dot(layout_of_reg(se("[1,2,3,3]")));
  CHECK(dot.find("digraph eggbox {") == 0);
  CHECK(dot.find("d1 -> d0;") != std::string::npos);
  CHECK(dot.find("d2 -> d1;") != std::string::npos);
  CHECK(dot.find("BGCOLOR=\"grey\"") != std::string::npos);
  CHECK(dot.rfind("}\n") == dot.size() - 2);
}

TEST_CASE("json round trip") {
  for (auto const& layout :
       {layout_of_tn(3), layout_of_reg(se("[1,2,3,3]")), layout_of_reg(se("[1,1,1,4]"))}) {
    std::string const text = render_json(layout);
    egg_box_layout const parsed = parse_egg_box_json(text);
    CHECK(parsed == layout);
  }
}

TEST_CASE("rendering an empty layout is an error") {
  egg_box_layout empty;
  CHECK_THROWS_AS(render_text(empty), std::invalid_argument);
  CHECK_THROWS_AS(render_dot(empty), std::invalid_argument);
  CHECK_THROWS_AS(render_json(empty), std::invalid_argument);
}

TEST_CASE("format names") {
  CHECK(parse_egg_box_format("text") == egg_box_format::text);
  CHECK(parse_egg_box_format("dot") == egg_box_format::dot);
  CHECK(parse_egg_box_format("json") == egg_box_format::json);
  CHECK_THROWS_AS(parse_egg_box_format("svg"), std::invalid_argument);
}
