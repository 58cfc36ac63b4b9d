#include <catch_amalgamated.hpp>

#include <set>

#include "sandwich/engine.hpp"
#include "sandwich/transformation.hpp"
#include "sandwich/variant.hpp"

using namespace sandwich;

namespace {
transformation t(std::string const& literal) { return transformation::parse(literal); }
sandwich_element se(std::string const& literal) {
  return sandwich_element::parse(literal);
}
}  // namespace

TEST_CASE("star is composition through the sandwich element") {
  sandwich_element const s = se("[1,2,3,3]");
  CHECK(star(t("[2,4,2,4]"), t("[2,4,2,4]"), s) == t("[4,2,4,2]"));
  CHECK(star(s.a(), s.a(), s) == s.a());
  sandwich_element const id = se("[1,2,3,4]");
  CHECK(star(t("[2,1,4,3]"), t("[3,3,1,1]"), id) ==
        compose(t("[2,1,4,3]"), t("[3,3,1,1]")));
  CHECK_THROWS_AS(star(t("[1,2]"), t("[1,2]"), s), std::invalid_argument);
}

TEST_CASE("P-classification examples") {
  sandwich_element const s = se("[1,2,3,3]");
  auto const both = classify_p(t("[1,1,3,3]"), s);
  CHECK(both.in_p1);
  CHECK(both.in_p2);
  CHECK(both.in_p());

  auto const p2_only = classify_p(t("[3,4,3,4]"), s);
  CHECK_FALSE(p2_only.in_p1);
  CHECK(p2_only.in_p2);

  auto const neither = classify_p(t("[2,3,4,1]"), s);
  CHECK_FALSE(neither.in_p1);
  CHECK_FALSE(neither.in_p2);
}

TEST_CASE("P-classification agrees with rank characterisations exhaustively") {
  for (auto const& a_lit : {"[1,2,3,3]", "[1,1,3,3]", "[1,1,1,4]", "[1,1,3,4]"}) {
    sandwich_element const s = se(a_lit);
    for (transformation const& f : all_transformations(4)) {
      auto const pc = classify_p(f, s);
      CHECK(pc.in_p1 == (compose(f, s.a()).rank() == f.rank()));
      CHECK(pc.in_p2 == (compose(s.a(), f).rank() == f.rank()));
      CHECK(pc.in_p() ==
            (compose(compose(s.a(), f), s.a()).rank() == f.rank()));
      if (f.rank() > s.rank()) {
        CHECK_FALSE(pc.in_p1);
        CHECK_FALSE(pc.in_p2);
      }
    }
  }
}

TEST_CASE("P membership matches oracle regularity and P is closed") {
  sandwich_element const s = se("[1,2,2]");
  auto const table = variant_table(s);
  auto const regular_list = table.regular_elements();
  std::set<std::size_t> regular(regular_list.begin(), regular_list.end());
  std::vector<transformation> p_members;
  for (std::size_t i = 0; i < table.size(); ++i) {
    bool const in_p = classify_p(table.element(i), s).in_p();
    CHECK(in_p == (regular.count(i) > 0));
    if (in_p) {
      p_members.push_back(table.element(i));
    }
  }
  for (transformation const& f : p_members) {
    for (transformation const& g : p_members) {
      CHECK(classify_p(star(f, g, s), s).in_p());
    }
  }
}

TEST_CASE("membership in P1 is an L-class property, P2 an R-class property") {
  sandwich_element const s = se("[1,2,3,3]");
  auto const maps = all_transformations(4);
  for (transformation const& f : maps) {
    auto const pc = classify_p(f, s);
    for (transformation const& g : maps) {
      if (g.image_set() == f.image_set()) {
        CHECK(classify_p(g, s).in_p1 == pc.in_p1);
      }
      if (g.kernel_signature() == f.kernel_signature()) {
        CHECK(classify_p(g, s).in_p2 == pc.in_p2);
      }
    }
  }
}

TEST_CASE("variant Green's classes by formula") {
  sandwich_element const s = se("[1,2,3,3]");
  // H-class of an element of P is its full H-class in T_4
  auto const h = variant_green_class(t("[1,1,3,3]"), s, green_relation::H);
  CHECK(h == std::vector<transformation>{t("[1,1,3,3]"), t("[3,3,1,1]")});
  // any rank-4 element forms a singleton class in every relation
  for (auto rel : {green_relation::R, green_relation::L, green_relation::H,
                   green_relation::D}) {
    CHECK(variant_green_class(t("[2,3,4,1]"), s, rel) ==
          std::vector<transformation>{t("[2,3,4,1]")});
  }
  // outside P the H-class is a singleton
  sandwich_element const s2 = se("[1,1,1,4]");
  CHECK_FALSE(classify_p(t("[2,3,1,1]"), s2).in_p());
  CHECK(variant_green_class(t("[2,3,1,1]"), s2, green_relation::H) ==
        std::vector<transformation>{t("[2,3,1,1]")});
}

TEST_CASE("variant Green's classes match the oracle exhaustively on degree 3") {
  for (auto const& a_lit : {"[1,1,3]", "[1,2,2]", "[1,1,1]"}) {
    sandwich_element const s = se(a_lit);
    auto const table = variant_table(s);
    green_data const& g = table.greens();
    for (std::size_t i = 0; i < table.size(); ++i) {
      transformation const& f = table.element(i);
      auto collect = [&](std::vector<int> const& ids,
                         std::vector<std::vector<std::size_t>> const& members) {
        std::vector<transformation> out;
        for (std::size_t x : members[ids[i]]) {
          out.push_back(table.element(x));
        }
        std::sort(out.begin(), out.end());
        return out;
      };
      auto sorted = [](std::vector<transformation> v) {
        std::sort(v.begin(), v.end());
        return v;
      };
      CHECK(sorted(variant_green_class(f, s, green_relation::R)) ==
            collect(g.r_class_of, g.r_class_members));
      CHECK(sorted(variant_green_class(f, s, green_relation::L)) ==
            collect(g.l_class_of, g.l_class_members));
      CHECK(sorted(variant_green_class(f, s, green_relation::H)) ==
            collect(g.h_class_of, g.h_class_members));
      CHECK(sorted(variant_green_class(f, s, green_relation::D)) ==
            collect(g.d_class_of, g.d_class_members));
    }
  }
}

TEST_CASE("D-order: reflexivity, maximality of high ranks, the quoted example") {
  sandwich_element const s5 = se("[1,1,1,4,5]");
  transformation const f = t("[1,2,3,1,1]");
  // sits above the constants
  CHECK(d_order_leq(t("[1,1,1,1,1]"), f, s5));
  // sits below the top regular class
  bool below_top = false;
  for (transformation const& g : all_transformations(5)) {
    if (g.rank() == 3 && classify_p(g, s5).in_p() && d_order_leq(f, g, s5)) {
      below_top = true;
      break;
    }
  }
  CHECK(below_top);
  // but not above any rank-2 regular class member
  for (transformation const& h : all_transformations(5)) {
    if (h.rank() == 2 && classify_p(h, s5).in_p()) {
      CHECK_FALSE(d_order_leq(h, f, s5));
    }
  }

  sandwich_element const s = se("[1,2,3,3]");
  CHECK(d_order_leq(t("[2,3,4,1]"), t("[2,3,4,1]"), s));
  // a rank > r element sits above nothing else and below nothing
  for (transformation const& g : all_transformations(4)) {
    if (g != t("[2,3,4,1]")) {
      CHECK_FALSE(d_order_leq(t("[2,3,4,1]"), g, s));
    }
  }
}

TEST_CASE("D-order agrees with the oracle ordering on a degree-3 variant") {
  sandwich_element const s = se("[1,1,3]");
  auto const table = variant_table(s);
  green_data const& g = table.greens();
  for (std::size_t i = 0; i < table.size(); ++i) {
    for (std::size_t j = 0; j < table.size(); ++j) {
      bool const oracle = g.d_leq[g.d_class_of[i]][g.d_class_of[j]];
      CHECK(d_order_leq(table.element(i), table.element(j), s) == oracle);
    }
  }
}

TEST_CASE("rank formula for the variant") {
  CHECK(rank_variant_formula(4, 3) == 24);
  CHECK(rank_variant_formula(3, 1) == 24);
  CHECK(rank_variant_formula(5, 3) == 1320);
  CHECK_THROWS_AS(rank_variant_formula(4, 4), std::invalid_argument);
  CHECK_THROWS_AS(rank_variant_formula(4, 0), std::invalid_argument);
}

TEST_CASE("the unique minimal generating set closes to the whole variant") {
  {
    sandwich_element const s = se("[1,1,1]");
    auto const gens = unique_min_generating_set(s);
    CHECK(gens.size() == 24);
    auto const closure = semigroup_table<transformation>::closure(
        gens, [&](auto const& f, auto const& g) { return star(f, g, s); });
    CHECK(closure.size() == 27);
  }
  {
    sandwich_element const s = se("[1,2,3,3]");
    auto const gens = unique_min_generating_set(s);
    CHECK(gens.size() == 24);  // exactly the permutations
    auto const closure = semigroup_table<transformation>::closure(
        gens, [&](auto const& f, auto const& g) { return star(f, g, s); });
    CHECK(closure.size() == 256);
  }
}

TEST_CASE("census of maximal classes above the top regular class") {
  CHECK(count_maximal_above_top_regular(se("[1,2,3,3]")) == 12);
  CHECK(count_maximal_above_top_regular(se("[1,1,1,4]")) == 72);
  CHECK(count_maximal_above_top_regular(se("[1,2,3,3,3]")) == 288);
}

TEST_CASE("a variant with a non-invertible sandwich element has no identity") {
  for (auto const& a_lit : {"[1,2,2]", "[1,2,3,3]", "[1,1,1,4]"}) {
    sandwich_element const s = se(a_lit);
    auto const table = variant_table(s);
    bool found_identity = false;
    for (std::size_t e = 0; e < table.size() && !found_identity; ++e) {
      bool is_identity = true;
      for (std::size_t x = 0; x < table.size(); ++x) {
        if (table.product(e, x) != x || table.product(x, e) != x) {
          is_identity = false;
          break;
        }
      }
      found_identity = is_identity;
    }
    CHECK_FALSE(found_identity);
  }
}
