// Acceptance suite: every structural formula of the library checked against
// the brute-force oracle at desk scale, exact equality throughout.  One
// pass/fail line per criterion; nonzero exit if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "sandwich/sandwich.hpp"

using namespace sandwich;

namespace {

int failures = 0;

void run_criterion(int number, std::string const& description,
                   std::function<bool(std::string&)> const& body) {
  auto const start = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (std::exception const& e) {
    detail = std::string("exception: ") + e.what();
  }
  auto const elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << number << ": "
            << description << " [" << elapsed << " ms]";
  if (!detail.empty()) {
    std::cout << " -- " << detail;
  }
  std::cout << "\n" << std::flush;
  if (!ok) {
    ++failures;
  }
}

std::vector<sandwich_element> all_sandwiches(int n, int min_rank, int max_rank) {
  std::vector<sandwich_element> out;
  for (transformation const& a : all_transformations(n)) {
    if (a.is_idempotent() && a.rank() >= min_rank && a.rank() <= max_rank) {
      out.emplace_back(a);
    }
  }
  return out;
}

// one idempotent per kernel-class-size multiset (conjugation symmetry)
std::vector<sandwich_element> shape_sandwiches(int n, int min_rank, int max_rank) {
  std::vector<sandwich_element> out;
  for (int r = min_rank; r <= max_rank; ++r) {
    std::vector<int> parts;
    std::function<void(int, int, int)> rec = [&](int remaining, int slots,
                                                 int max_part) {
      if (slots == 0) {
        if (remaining == 0) {
          std::vector<point> img(static_cast<std::size_t>(n));
          int start = 0;
          for (int p : parts) {
            for (int i = 0; i < p; ++i) {
              img[start + i] = static_cast<point>(start);
            }
            start += p;
          }
          out.emplace_back(transformation(img));
        }
        return;
      }
      for (int p = std::min(max_part, remaining - slots + 1); p >= 1; --p) {
        parts.push_back(p);
        rec(remaining - p, slots - 1, p);
        parts.pop_back();
      }
    };
    rec(n, r, n);
  }
  return out;
}

template <typename T>
std::string str(T const& value) {
  std::ostringstream out;
  out << value;
  return out.str();
}

bool check_tag(std::vector<check_result> const& results, std::string const& prefix,
               std::string& detail) {
  bool ok = true;
  for (check_result const& check : results) {
    if (check.tag.rfind(prefix, 0) == 0 && !check.ok) {
      ok = false;
      detail += " " + check.to_line();
    }
  }
  return ok;
}

// ---------------------------------------------------------------------------

bool criterion_green_classes(std::string& detail) {
  for (int n : {3, 4}) {
    for (sandwich_element const& s : all_sandwiches(n, 2, n - 1)) {
      auto const results = verify_sandwich(s);
      if (!check_tag(results, "green-classes", detail) ||
          !check_tag(results, "nonreg-h-singleton", detail)) {
        detail += " at a=" + s.a().to_string();
        return false;
      }
    }
  }
  return true;
}

bool criterion_regularity(std::string& detail) {
  // predicate vs oracle regularity, exhaustive for n <= 4 (all idempotents)
  for (int n : {2, 3, 4}) {
    for (sandwich_element const& s : all_sandwiches(n, 1, n - 1)) {
      auto star_product = [&s](transformation const& f, transformation const& g) {
        return star(f, g, s);
      };
      auto const table = semigroup_table<transformation>::from_elements(
          all_transformations(n), star_product);
      auto const regular_list = table.regular_elements();
      std::set<std::size_t> regular(regular_list.begin(), regular_list.end());
      for (std::size_t i = 0; i < table.size(); ++i) {
        if (classify_p(table.element(i), s).in_p() != (regular.count(i) > 0)) {
          detail = "predicate mismatch at a=" + s.a().to_string() + " f=" +
                   table.element(i).to_string();
          return false;
        }
      }
    }
  }
  // |Reg| formula vs enumeration for n = 5, all kernel shapes
  for (sandwich_element const& s : shape_sandwiches(5, 1, 4)) {
    if (size_reg_formula(s) != enumerate_reg(s).size()) {
      detail = "size mismatch at a=" + s.a().to_string();
      return false;
    }
  }
  // the named examples
  if (size_reg_formula(sandwich_element::parse("[1,2,3,3]")) != 100 ||
      size_reg_formula(sandwich_element::parse("[1,1,1,4]")) != 28) {
    detail = "named example values";
    return false;
  }
  return true;
}

bool criterion_inflation(std::string& detail) {
  for (int n : {2, 3, 4, 5}) {
    for (sandwich_element const& s : shape_sandwiches(n, 1, n - 1)) {
      auto const results = verify_sandwich(s);
      if (!check_tag(results, "inflation-grid", detail)) {
        detail += " at a=" + s.a().to_string();
        return false;
      }
    }
  }
  // spot value: D_3^a of a=[1,2,3,3] is a 3x2 grid of 6-element H-classes
  auto const counts =
      hat_class_counts(sandwich_element::parse("[1,2,3,3]"), 3, {0, 1, 2});
  if (counts.d_rows != 3 || counts.d_cols != 2 || counts.h_class_size != 6) {
    detail = "spot grid";
    return false;
  }
  return true;
}

bool criterion_rank_reg(std::string& detail) {
  // construction closes for n <= 5 over all shapes with 1 < r < n
  for (int n : {3, 4, 5}) {
    for (sandwich_element const& s : shape_sandwiches(n, 2, n - 1)) {
      auto star_product = [&s](transformation const& f, transformation const& g) {
        return star(f, g, s);
      };
      auto const gens = build_reg_generating_set(s);
      bignat const expected_size =
          bigpow(s.rank(), static_cast<unsigned>(n - s.rank())) + 1;
      if (expected_size != gens.size()) {
        detail = "generator count at a=" + s.a().to_string();
        return false;
      }
      auto const closure =
          semigroup_table<transformation>::closure(gens, star_product);
      if (closure.size() != size_reg_formula(s)) {
        detail = "closure size at a=" + s.a().to_string();
        return false;
      }
    }
  }
  // exhaustive minimality for (n, r) = (4, 2) and (4, 3)
  struct target {
    char const* a;
    std::size_t rank;
  };
  for (auto const& [a_lit, expected_rank] :
       {target{"[1,1,1,4]", 5}, target{"[1,2,3,3]", 4}}) {
    sandwich_element const s = sandwich_element::parse(a_lit);
    auto star_product = [&s](transformation const& f, transformation const& g) {
      return star(f, g, s);
    };
    auto const table = semigroup_table<transformation>::from_elements(
        enumerate_reg(s), star_product);
    std::size_t const found = min_rank_exhaustive(table, expected_rank);
    if (found != expected_rank) {
      detail = "rank of Reg at a=" + std::string(a_lit) + " is " + str(found);
      return false;
    }
  }
  return true;
}

bool criterion_idempotent_count(std::string& detail) {
  for (int n : {2, 3, 4, 5}) {
    for (sandwich_element const& s : shape_sandwiches(n, 1, n - 1)) {
      if (count_variant_idempotents(s) != variant_idempotents(s).size()) {
        detail = "count mismatch at a=" + s.a().to_string();
        return false;
      }
    }
  }
  if (variant_idempotents(sandwich_element::parse("[1,2,3,3]")).size() != 30 ||
      variant_idempotents(sandwich_element::parse("[1,2,3,3,3]")).size() != 88) {
    detail = "named example values";
    return false;
  }
  return true;
}

bool criterion_exa_structure(std::string& detail) {
  for (int n : {2, 3, 4}) {
    for (sandwich_element const& s : all_sandwiches(n, 1, n - 1)) {
      auto star_product = [&s](transformation const& f, transformation const& g) {
        return star(f, g, s);
      };
      auto const closure = semigroup_table<transformation>::closure(
          variant_idempotents(s), star_product);
      std::set<transformation> closed(closure.elements().begin(),
                                      closure.elements().end());
      for (transformation const& f : all_transformations(n)) {
        if (exa_membership(f, s) != (closed.count(f) > 0)) {
          detail = "membership mismatch at a=" + s.a().to_string() + " f=" +
                   f.to_string();
          return false;
        }
      }
    }
  }
  sandwich_element const s = sandwich_element::parse("[1,2,3,3]");
  if (exa_elements(s).size() != 70) {
    detail = "named example size";
    return false;
  }
  return true;
}

bool criterion_rank_exa(std::string& detail) {
  sandwich_element const s = sandwich_element::parse("[1,2,3,3]");
  auto star_product = [&s](transformation const& f, transformation const& g) {
    return star(f, g, s);
  };
  auto const gens = build_exa_generating_set(s);
  if (gens.size() != 6) {
    detail = "constructed size " + str(gens.size());
    return false;
  }
  for (transformation const& e : gens) {
    if (star(e, e, s) != e) {
      detail = "non-idempotent generator";
      return false;
    }
  }
  auto const exa = exa_elements(s);
  auto const table = semigroup_table<transformation>::from_elements(exa, star_product);
  std::vector<std::size_t> gen_indices;
  for (transformation const& e : gens) {
    gen_indices.push_back(*table.index_of(e));
  }
  if (!table.is_generating(gen_indices)) {
    detail = "constructed set does not generate";
    return false;
  }
  // no idempotent subset of size <= 5 generates
  std::vector<std::size_t> pool;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table.product(i, i) == i) {
      pool.push_back(i);
    }
  }
  if (pool.size() != 30) {
    detail = "idempotent pool size " + str(pool.size());
    return false;
  }
  for (std::size_t k = 1; k <= 5; ++k) {
    if (generating_subsets(table, pool, k).first) {
      detail = "found a generating idempotent subset of size " + str(k);
      return false;
    }
  }
  return true;
}

bool criterion_genset_count(std::string& detail) {
  struct target {
    char const* a;
    unsigned long long expected;
  };
  for (auto const& [a_lit, expected] :
       {target{"[1,2,3,3]", 384}, target{"[1,1,1,4]", 108}}) {
    sandwich_element const s = sandwich_element::parse(a_lit);
    if (count_min_idempotent_gensets(s) != expected) {
      detail = "formula value at a=" + std::string(a_lit);
      return false;
    }
    auto star_product = [&s](transformation const& f, transformation const& g) {
      return star(f, g, s);
    };
    auto const exa = exa_elements(s);
    auto const table =
        semigroup_table<transformation>::from_elements(exa, star_product);
    std::vector<std::size_t> pool;
    for (std::size_t i = 0; i < table.size(); ++i) {
      if (table.product(i, i) == i) {
        pool.push_back(i);
      }
    }
    std::size_t const size =
        static_cast<std::size_t>(bigpow(s.rank(), static_cast<unsigned>(
                                                      s.degree() - s.rank()))
                                     .convert_to<unsigned>()) +
        static_cast<std::size_t>(rho(static_cast<unsigned>(s.rank())));
    subset_search_options options;
    options.collect_all = true;
    auto const found = generating_subsets(table, pool, size, options);
    if (found.generating_count != expected) {
      detail = "enumerated " + str(found.generating_count) + " at a=" +
               std::string(a_lit) + " (expected " + str(expected) + ")";
      return false;
    }
  }
  return true;
}

bool criterion_tournaments(std::string& detail) {
  auto const results = verify_tournaments(5);
  return check_tag(results, "tournament", detail);
}

bool criterion_ideals(std::string& detail) {
  for (sandwich_element const& s : shape_sandwiches(5, 3, 4)) {
    int const r = s.rank();
    for (int m = 2; m < r; ++m) {
      auto const gens = build_ideal_generating_set(m, s);
      if (gens.size() != ideal_rank_formula(m, s)) {
        detail = "size at a=" + s.a().to_string() + " m=" + str(m);
        return false;
      }
      // lower bound: the R-classes of the top level are exactly met
      std::set<std::vector<point>> kernels;
      for (transformation const& e : gens) {
        if (e.rank() != m || star(e, e, s) != e ||
            !kernels.insert(e.kernel_signature()).second) {
          detail = "generator shape at a=" + s.a().to_string() + " m=" + str(m);
          return false;
        }
      }
      auto star_product = [&s](transformation const& f, transformation const& g) {
        return star(f, g, s);
      };
      auto const closure =
          semigroup_table<transformation>::closure(gens, star_product);
      auto const target = ideal(m, s);
      if (closure.size() != target.elements.size()) {
        detail = "closure size at a=" + s.a().to_string() + " m=" + str(m);
        return false;
      }
      std::set<transformation> closed(closure.elements().begin(),
                                      closure.elements().end());
      for (transformation const& f : target.elements) {
        if (!closed.count(f)) {
          detail = "closure misses an element at a=" + s.a().to_string();
          return false;
        }
      }
    }
  }
  return true;
}

bool criterion_rank_variant(std::string& detail) {
  // closure of M for n <= 4, all idempotents of deficient rank
  for (int n : {2, 3, 4}) {
    for (sandwich_element const& s : all_sandwiches(n, 1, n - 1)) {
      auto star_product = [&s](transformation const& f, transformation const& g) {
        return star(f, g, s);
      };
      auto const m_set = unique_min_generating_set(s);
      if (rank_variant_formula(static_cast<unsigned>(n),
                               static_cast<unsigned>(s.rank())) != m_set.size()) {
        detail = "|M| at a=" + s.a().to_string();
        return false;
      }
      auto const closure =
          semigroup_table<transformation>::closure(m_set, star_product);
      if (closure.size() != all_transformations(n).size()) {
        detail = "closure at a=" + s.a().to_string();
        return false;
      }
      // every member of M is maximal and alone in its class: no sandwich
      // product reaches rank above rank(a)
      auto const table = semigroup_table<transformation>::from_elements(
          all_transformations(n), star_product);
      for (std::size_t i = 0; i < table.size(); ++i) {
        for (std::size_t j = 0; j < table.size(); ++j) {
          if (table.element(table.product(i, j)).rank() > s.rank()) {
            detail = "a product escaped rank(a) at a=" + s.a().to_string();
            return false;
          }
        }
      }
      green_data const& g = table.greens();
      auto const maximal_list = g.maximal_d_classes();
      std::set<int> maximal(maximal_list.begin(), maximal_list.end());
      for (transformation const& f : m_set) {
        int const d = g.d_class_of[*table.index_of(f)];
        if (g.d_class_members[d].size() != 1 || !maximal.count(d)) {
          detail = "M member not a singleton maximal class at a=" +
                   s.a().to_string();
          return false;
        }
      }
    }
  }
  // formula identity for n <= 12: the ranks of all variants sum against n^n
  for (unsigned n = 2; n <= 12; ++n) {
    for (unsigned r = 1; r < n; ++r) {
      bignat lower = 0;
      for (unsigned m = 1; m <= r; ++m) {
        lower += stirling2(n, m) * binomial(n, m) * factorial(m);
      }
      if (rank_variant_formula(n, r) + lower != bigpow(n, n)) {
        detail = "identity at n=" + str(n) + " r=" + str(r);
        return false;
      }
    }
  }
  return true;
}

bool criterion_table1(std::string& detail) {
  sandwich_element const s = sandwich_element::parse("[1,2,3,3]");
  auto const t4 = semigroup_table<transformation>::from_elements(
      all_transformations(4), [](transformation const& f, transformation const& g) {
        return compose(f, g);
      });
  auto const variant = variant_table(s);
  struct row {
    char const* x;
    bool group_plain;
    bool group_variant;
  };
  for (auto const& [x_lit, expect_plain, expect_variant] :
       {row{"[1,1,3,3]", true, true}, row{"[4,2,2,4]", true, false},
        row{"[2,4,2,4]", false, true}, row{"[1,3,1,3]", false, false}}) {
    transformation const x = transformation::parse(x_lit);
    green_data const& gp = t4.greens();
    green_data const& gv = variant.greens();
    bool const plain = gp.h_class_is_group[gp.h_class_of[*t4.index_of(x)]];
    bool const in_variant = gv.h_class_is_group[gv.h_class_of[*variant.index_of(x)]];
    if (plain != expect_plain || in_variant != expect_variant) {
      detail = std::string("row ") + x_lit + ": plain=" + str(plain) +
               " variant=" + str(in_variant);
      return false;
    }
  }
  return true;
}

bool criterion_census(std::string& detail) {
  for (int n : {2, 3, 4, 5}) {
    for (sandwich_element const& s : shape_sandwiches(n, 1, n - 1)) {
      std::size_t oracle = 0;
      for (transformation const& f : all_transformations(n)) {
        if (compose(compose(s.a(), f), s.a()).rank() == s.rank() &&
            f.rank() > s.rank()) {
          ++oracle;
        }
      }
      if (count_maximal_above_top_regular(s) != oracle) {
        detail = "census at a=" + s.a().to_string();
        return false;
      }
    }
  }
  if (count_maximal_above_top_regular(sandwich_element::parse("[1,2,3,3]")) != 12 ||
      count_maximal_above_top_regular(sandwich_element::parse("[1,2,3,3,3]")) != 288) {
    detail = "named example values";
    return false;
  }
  return true;
}

}  // namespace

int main() {
  run_criterion(1, "Green's class formulas equal oracle classes on T_n^a, n=3,4",
                criterion_green_classes);
  run_criterion(2, "regularity predicate matches the oracle; |Reg| formula at n=5",
                criterion_regularity);
  run_criterion(3, "inflation grid dimensions match the oracle egg box, n<=5",
                criterion_inflation);
  run_criterion(4, "rank(Reg) = r^{n-r}+1: construction closes, minimality exhaustive",
                criterion_rank_reg);
  run_criterion(5, "idempotent count formula matches the filter, n<=5",
                criterion_idempotent_count);
  run_criterion(6, "idempotent generated part: membership formula equals closure, n<=4",
                criterion_exa_structure);
  run_criterion(7, "rank and idempotent rank of the idempotent generated part",
                criterion_rank_exa);
  run_criterion(8, "count of minimal idempotent generating sets by exhaustive search",
                criterion_genset_count);
  run_criterion(9, "strongly connected tournaments: counts and generation criterion",
                criterion_tournaments);
  run_criterion(10, "ideal generating sets of size m^{n-r}S(r,m) close to the ideals",
                criterion_ideals);
  run_criterion(11, "rank of the variant: M closes, members maximal, formula identity",
                criterion_rank_variant);
  run_criterion(12, "group H-class table for a=[1,2,3,3] in T_4 and its variant",
                criterion_table1);
  run_criterion(13, "census of maximal classes above the top regular class, n<=5",
                criterion_census);

  if (failures == 0) {
    std::cout << "acceptance: all 13 criteria passed\n";
    return 0;
  }
  std::cout << "acceptance: " << failures << " criterion(s) FAILED\n";
  return 1;
}
