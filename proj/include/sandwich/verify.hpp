#ifndef SANDWICH_VERIFY_HPP_
#define SANDWICH_VERIFY_HPP_

#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "eggbox.hpp"
#include "engine.hpp"
#include "ideals.hpp"
#include "idemgen.hpp"
#include "regular.hpp"
#include "sandwich_element.hpp"
#include "transformation.hpp"
#include "variant.hpp"

namespace sandwich {

// One formula-vs-oracle comparison.  Tags are stable identifiers; a failed
// check reports both sides.
struct check_result {
  std::string tag;
  bool ok = false;
  std::string expected;  // formula / membership-rule side
  std::string actual;    // brute-force oracle side

  std::string to_line() const {
    std::string line = ok ? "[ok]   " : "[FAIL] ";
    line += tag;
    if (!ok) {
      line += ": formula=" + expected + " oracle=" + actual;
    } else if (!expected.empty()) {
      line += ": " + expected;
    }
    return line;
  }
};

namespace detail {
template <typename T>
std::string str(T const& v) {
  std::ostringstream out;
  out << v;
  return out.str();
}

inline check_result make_check(std::string tag, std::string expected,
                               std::string actual) {
  bool const ok = expected == actual;
  return check_result{std::move(tag), ok, std::move(expected), std::move(actual)};
}
}  // namespace detail

struct verify_options {
  // Degree bound for checks that need full Green's data of the n^n-element
  // variant table (the most expensive oracle).
  int full_variant_degree = 4;
  bool run_green_classes = true;
  // Largest semigroup for which a full product table is built; beyond this
  // the table-based checks are skipped with a note.
  std::size_t max_table_size = 5000;
};

// The per-sandwich formula-vs-oracle suite.  Every check compares a value
// computed by a closed formula or membership rule against the brute-force
// engine on concrete tables.
inline std::vector<check_result> verify_sandwich(sandwich_element const& s,
                                                 verify_options const& options = {}) {
  using detail::make_check;
  using detail::str;
  std::vector<check_result> results;
  int const n = s.degree();
  int const r = s.rank();

  std::vector<transformation> const universe = all_transformations(n);
  std::vector<transformation> const reg = enumerate_reg(s);

  // --- regularity predicate vs oracle, and the size formula ---
  results.push_back(make_check("reg-size", str(size_reg_formula(s)),
                               str(reg.size())));

  auto star_product = [&s](transformation const& f, transformation const& g) {
    return star(f, g, s);
  };

  if (n <= options.full_variant_degree) {
    auto const table = semigroup_table<transformation>::from_elements(universe,
                                                                      star_product);
    {
      std::set<std::size_t> oracle_regular;
      for (std::size_t i : table.regular_elements()) {
        oracle_regular.insert(i);
      }
      bool agree = true;
      for (std::size_t i = 0; i < table.size(); ++i) {
        if (classify_p(table.element(i), s).in_p() != (oracle_regular.count(i) > 0)) {
          agree = false;
          break;
        }
      }
      results.push_back(make_check("reg-predicate", "predicate",
                                   agree ? "predicate" : "disagrees"));
    }

    if (options.run_green_classes) {
      // --- Green's class formulas vs oracle classes, all four relations ---
      green_data const& g = table.greens();
      bool all_match = true;
      std::string failure;
      for (std::size_t i = 0; i < table.size() && all_match; ++i) {
        transformation const& f = table.element(i);
        auto oracle_class = [&](std::vector<int> const& ids,
                                std::vector<std::vector<std::size_t>> const& members) {
          std::vector<transformation> out;
          for (std::size_t x : members[ids[i]]) {
            out.push_back(table.element(x));
          }
          std::sort(out.begin(), out.end());
          return out;
        };
        struct relation_case {
          green_relation rel;
          std::vector<transformation> oracle;
        };
        std::vector<relation_case> cases;
        cases.push_back({green_relation::R, oracle_class(g.r_class_of, g.r_class_members)});
        cases.push_back({green_relation::L, oracle_class(g.l_class_of, g.l_class_members)});
        cases.push_back({green_relation::H, oracle_class(g.h_class_of, g.h_class_members)});
        cases.push_back({green_relation::D, oracle_class(g.d_class_of, g.d_class_members)});
        for (auto& c : cases) {
          std::vector<transformation> formula = variant_green_class(f, s, c.rel);
          std::sort(formula.begin(), formula.end());
          if (formula != c.oracle) {
            all_match = false;
            failure = "class of " + f.to_string() + " differs";
            break;
          }
        }
      }
      results.push_back(make_check("green-classes", "match",
                                   all_match ? "match" : failure));

      // --- every H-class outside P is a singleton non-group ---
      bool singleton_ok = true;
      for (std::size_t i = 0; i < table.size(); ++i) {
        if (!classify_p(table.element(i), s).in_p()) {
          int const h = g.h_class_of[i];
          if (g.h_class_members[h].size() != 1 || g.h_class_is_group[h]) {
            singleton_ok = false;
            break;
          }
        }
      }
      results.push_back(make_check("nonreg-h-singleton", "singleton",
                                   singleton_ok ? "singleton" : "violated"));

      // --- maximal D-classes are exactly the singletons of rank > r ---
      {
        std::set<std::size_t> maximal_elements;
        for (int d : g.maximal_d_classes()) {
          for (std::size_t x : g.d_class_members[d]) {
            maximal_elements.insert(x);
          }
        }
        bool max_ok = true;
        for (std::size_t i = 0; i < table.size(); ++i) {
          bool const should = table.element(i).rank() > r;
          if (should != (maximal_elements.count(i) > 0)) {
            max_ok = false;
            break;
          }
        }
        results.push_back(
            make_check("maximal-classes", "rank>r singletons",
                       max_ok ? "rank>r singletons" : "differ"));
      }
    }
  }

  // --- inflation grid of Reg vs oracle egg box ---
  if (!reg.empty() && reg.size() <= options.max_table_size) {
    auto const ptable = semigroup_table<transformation>::from_elements(reg, star_product);
    green_data const& pg = ptable.greens();
    bool grid_ok = true;
    std::string detail_msg = "grid";
    std::map<int, int> d_of_rank;  // rank -> D-class id of P
    for (int d = 0; d < pg.n_d_classes; ++d) {
      d_of_rank[ptable.element(pg.d_class_members[d].front()).rank()] = d;
    }
    if (static_cast<int>(d_of_rank.size()) != r || pg.n_d_classes != r) {
      grid_ok = false;
      detail_msg = "expected a chain of r D-classes, found " + str(pg.n_d_classes);
    }
    for (int m = 1; m <= r && grid_ok; ++m) {
      std::vector<int> first_indices;
      for (int i = 0; i < m; ++i) {
        first_indices.push_back(i);
      }
      inflation_counts const counts = hat_class_counts(s, m, first_indices);
      int const d = d_of_rank.at(m);
      std::set<int> row_ids, col_ids;
      for (std::size_t x : pg.d_class_members[d]) {
        row_ids.insert(pg.r_class_of[x]);
        col_ids.insert(pg.l_class_of[x]);
      }
      bignat const h_size =
          pg.d_class_members[d].size() / (row_ids.size() * col_ids.size());
      if (counts.d_rows != row_ids.size() || counts.d_cols != col_ids.size() ||
          counts.h_class_size != h_size ||
          counts.d_class_size() != pg.d_class_members[d].size()) {
        grid_ok = false;
        detail_msg = "level " + str(m) + ": oracle " + str(row_ids.size()) + "x" +
                     str(col_ids.size()) + " |H|=" + str(h_size);
      }
    }
    results.push_back(make_check(
        "inflation-grid",
        grid_ok ? "grid" : "rows=m^{n-r}S(r,m) cols=sum Lambda_J hsize=m!",
        detail_msg));

    // --- the regular D-classes form a chain ---
    {
      bool chain = true;
      for (int c = 0; c < pg.n_d_classes && chain; ++c) {
        for (int d = 0; d < pg.n_d_classes; ++d) {
          if (!pg.d_leq[c][d] && !pg.d_leq[d][c]) {
            chain = false;
            break;
          }
        }
      }
      results.push_back(make_check("reg-d-chain", "chain", chain ? "chain" : "not a chain"));
    }
  }

  // --- idempotent count formula vs filter ---
  results.push_back(make_check("idempotent-count", str(count_variant_idempotents(s)),
                               str(variant_idempotents(s).size())));

  // --- census of maximal classes above the top regular class ---
  if (r < n) {
    std::size_t oracle = 0;
    for (transformation const& f : universe) {
      transformation const afa = compose(compose(s.a(), f), s.a());
      if (afa.rank() == r && f.rank() > r) {
        ++oracle;
      }
    }
    results.push_back(make_check("census-above-top",
                                 str(count_maximal_above_top_regular(s)), str(oracle)));
  }

  // --- membership formula for the idempotent generated subsemigroup ---
  if (n <= options.full_variant_degree) {
    std::vector<transformation> const idems = variant_idempotents(s);
    auto const closure = semigroup_table<transformation>::closure(idems, star_product);
    std::set<transformation> closure_set(closure.elements().begin(),
                                         closure.elements().end());
    bool member_ok = true;
    for (transformation const& f : universe) {
      if (exa_membership(f, s) != (closure_set.count(f) > 0)) {
        member_ok = false;
        break;
      }
    }
    results.push_back(make_check("exa-membership", "formula",
                                 member_ok ? "formula" : "disagrees"));
    results.push_back(make_check("exa-size", str(exa_elements(s).size()),
                                 str(closure.size())));
  }

  // --- constructed generating sets close to their targets ---
  if (r > 1 && r < n) {
    {
      std::vector<transformation> const gens = build_reg_generating_set(s);
      std::size_t const closed = closure_size<transformation>(gens, star_product);
      bignat const expected_rank = bigpow(r, static_cast<unsigned>(n - r)) + 1;
      results.push_back(make_check("rank-reg-construct",
                                   str(expected_rank) + " generators -> " +
                                       str(size_reg_formula(s)) + " elements",
                                   str(gens.size()) + " generators -> " +
                                       str(closed) + " elements"));
    }
    {
      std::vector<transformation> const gens = build_exa_generating_set(s);
      bool all_idempotent = true;
      for (transformation const& e : gens) {
        if (star(e, e, s) != e) {
          all_idempotent = false;
        }
      }
      std::size_t const closed = closure_size<transformation>(gens, star_product);
      bignat const expected_size =
          bigpow(r, static_cast<unsigned>(n - r)) * s.big_lambda() +
          (size_reg_formula(s) -
           factorial(static_cast<unsigned>(r)) *
               bigpow(r, static_cast<unsigned>(n - r)) * s.big_lambda());
      bignat const expected_rank =
          bigpow(r, static_cast<unsigned>(n - r)) + rho(static_cast<unsigned>(r));
      results.push_back(make_check(
          "rank-exa-construct",
          str(expected_rank) + " idempotents -> " + str(expected_size) + " elements",
          str(gens.size()) + (all_idempotent ? "" : " (non-idempotent!)") +
              " idempotents -> " + str(closed) + " elements"));
    }
    for (int m = 1; m < r; ++m) {
      std::vector<transformation> const gens = build_ideal_generating_set(m, s);
      ideal_descriptor const target = ideal(m, s);
      auto const closure = closure_elements<transformation>(gens, star_product);
      std::set<transformation> const closed(closure.begin(), closure.end());
      bool const equal = closed == std::set<transformation>(target.elements.begin(),
                                                            target.elements.end());
      results.push_back(make_check(
          "ideal-genset-m" + str(m),
          str(ideal_rank_formula(m, s)) + " -> " + str(target.elements.size()),
          str(gens.size()) + " -> " + (equal ? str(closure.size()) : "wrong closure")));
    }
  }

  // --- unique minimal generating set of the variant ---
  if (r < n) {
    std::vector<transformation> const m_set = unique_min_generating_set(s);
    results.push_back(make_check("variant-rank-size",
                                 str(rank_variant_formula(static_cast<unsigned>(n),
                                                          static_cast<unsigned>(r))),
                                 str(m_set.size())));
    if (n <= options.full_variant_degree) {
      std::size_t const closed = closure_size<transformation>(m_set, star_product);
      results.push_back(make_check("variant-rank-closure",
                                   str(universe.size()), str(closed)));
    }
  }

  return results;
}

// Tournament counts and the generation criterion for the realisations.
inline std::vector<check_result> verify_tournaments(int max_r) {
  using detail::make_check;
  using detail::str;
  std::vector<check_result> results;
  std::vector<std::size_t> const expected = {0, 0, 1, 2, 24, 544, 22320};
  for (int r = 2; r <= max_r; ++r) {
    auto const sc = strongly_connected_tournaments(r);
    if (r < static_cast<int>(expected.size())) {
      results.push_back(make_check("tournament-count-r" + str(r),
                                   str(expected[static_cast<std::size_t>(r)]),
                                   str(sc.size())));
    }
    bool degree_sum_ok = true;
    for (tournament const& t : sc) {
      std::size_t total = 0;
      for (int d : t.in_degrees()) {
        total += static_cast<std::size_t>(d);
      }
      if (total != rho(static_cast<unsigned>(r))) {
        degree_sum_ok = false;
      }
    }
    results.push_back(make_check("tournament-degree-sum-r" + str(r), "rho",
                                 degree_sum_ok ? "rho" : "differs"));
    if (r > 4) {
      continue;  // generation checks below enumerate T_r
    }
    // Realisations of strongly connected tournaments generate the singular
    // part; realisations of the others do not.
    std::size_t singular_size = 0;
    for (transformation const& f : all_transformations(r)) {
      if (f.rank() < r) {
        ++singular_size;
      }
    }
    auto generated_size = [&](tournament const& t) {
      auto gens = singular_idempotent_genset(r, t);
      auto const closure = semigroup_table<transformation>::closure(
          gens, [](transformation const& f, transformation const& g) {
            return compose(f, g);
          });
      return closure.size();
    };
    bool generation_ok = true;
    for (tournament const& t : sc) {
      if (generated_size(t) != singular_size) {
        generation_ok = false;
      }
    }
    if (r >= 3) {
      std::uint64_t const codes = std::uint64_t{1} << (r * (r - 1) / 2);
      for (std::uint64_t code = 0; code < codes && generation_ok; ++code) {
        tournament const t = tournament::from_code(r, code);
        if (t.is_strongly_connected()) {
          continue;
        }
        std::vector<transformation> gens;
        for (auto const& [i, j] : t.arcs()) {
          gens.push_back(elementary_idempotent(r, i, j));
        }
        auto const closure = semigroup_table<transformation>::closure(
            gens, [](transformation const& f, transformation const& g) {
              return compose(f, g);
            });
        if (closure.size() == singular_size) {
          generation_ok = false;  // a non-strongly-connected realisation generated
        }
      }
    }
    results.push_back(make_check("tournament-generation-r" + str(r), "criterion",
                                 generation_ok ? "criterion" : "violated"));
  }
  return results;
}

}  // namespace sandwich

#endif  // SANDWICH_VERIFY_HPP_
