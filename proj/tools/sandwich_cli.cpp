// Command line surface for the sandwich semigroup toolkit: analysis of a
// variant T_n^a, egg box diagrams, formula-vs-oracle verification, tournament
// enumeration, generating set construction and search, and normalisation of
// arbitrary sandwich elements.

#include <array>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sandwich/sandwich.hpp"

namespace {

using namespace sandwich;

constexpr int exit_ok = 0;
constexpr int exit_mismatch = 1;
constexpr int exit_usage = 2;

sandwich_element parse_sandwich(std::string const& literal) {
  transformation const a = transformation::parse(literal);
  if (!a.is_idempotent()) {
    auto const normalized = normalize_sandwich(a);
    std::cerr << "note: " << a.to_string() << " is not idempotent; using "
              << normalized.element.a().to_string() << " = a*p with p = "
              << normalized.unit.to_string() << " (isomorphic variant)\n";
    return normalized.element;
  }
  return sandwich_element(a);
}

void apply_max_n(int max_n) {
  if (max_n > 0) {
    set_max_enumeration_degree(max_n);
    if (max_n > 5) {
      std::cerr << "warning: enumeration guard raised to " << max_n
                << "; expect n^n-element tables\n";
    }
  }
}

// Idempotents of T_n with 1 < rank < n, one per kernel-class-size multiset
// when deduplication is on (conjugate sandwich elements give isomorphic
// variants), all of them otherwise.
std::vector<transformation> sandwich_candidates(int n, bool dedup) {
  std::vector<transformation> out;
  if (dedup) {
    // partitions of n into r parts, non-increasing; canonical idempotent has
    // consecutive classes with the least element of each as image point
    for (int r = 2; r < n; ++r) {
      std::vector<int> parts;
      std::function<void(int, int, int)> rec = [&](int remaining, int slots, int max_part) {
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
            out.emplace_back(img);
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
  } else {
    for (transformation const& f : all_transformations(n)) {
      if (f.is_idempotent() && f.rank() > 1 && f.rank() < n) {
        out.push_back(f);
      }
    }
  }
  return out;
}

int run_analyze(sandwich_element const& s, std::string const& format) {
  int const n = s.degree();
  int const r = s.rank();
  std::map<std::string, std::string> report;
  report["n"] = std::to_string(n);
  report["a"] = s.a().to_string();
  report["r"] = std::to_string(r);
  {
    std::string lambdas;
    for (int l : s.lambdas()) {
      lambdas += (lambdas.empty() ? "" : ",") + std::to_string(l);
    }
    report["lambdas"] = lambdas;
    report["kernel"] = s.kernel().to_string();
  }
  report["big_lambda"] = s.big_lambda().str();
  report["reg_size"] = size_reg_formula(s).str();
  report["idempotents"] = count_variant_idempotents(s).str();
  if (r < n) {
    report["rank_variant"] =
        rank_variant_formula(static_cast<unsigned>(n), static_cast<unsigned>(r)).str();
    report["maximal_above_top"] = count_maximal_above_top_regular(s).str();
  }
  if (r > 1 && r < n) {
    report["rank_reg"] =
        (bigpow(r, static_cast<unsigned>(n - r)) + 1).str();
    report["rank_exa"] =
        (bigpow(r, static_cast<unsigned>(n - r)) + rho(static_cast<unsigned>(r))).str();
    try {
      report["min_idem_gensets"] = count_min_idempotent_gensets(s).str();
    } catch (std::length_error const&) {
      report["min_idem_gensets"] = "(top band too large for exact evaluation)";
    }
    for (int m = 1; m < r; ++m) {
      report["rank_ideal_" + std::to_string(m)] = ideal_rank_formula(m, s).str();
    }
  }
  if (n <= max_enumeration_degree()) {
    auto const census = [&] {
      std::size_t p1 = 0, p2 = 0, p = 0;
      for (transformation const& f : all_transformations(n)) {
        auto const pc = classify_p(f, s);
        p1 += pc.in_p1;
        p2 += pc.in_p2;
        p += pc.in_p();
      }
      return std::array<std::size_t, 3>{p1, p2, p};
    }();
    report["p1_size"] = std::to_string(census[0]);
    report["p2_size"] = std::to_string(census[1]);
    report["p_size"] = std::to_string(census[2]);
  }
  if (format == "json") {
    nlohmann::json j;
    for (auto const& [key, value] : report) {
      j[key] = value;
    }
    std::cout << j.dump(2) << "\n";
  } else {
    for (auto const& [key, value] : report) {
      std::cout << key << "=" << value << "\n";
    }
  }
  return exit_ok;
}

int run_eggbox(sandwich_element const& s, std::string const& semigroup,
               std::string const& format, int ideal_level) {
  auto star_product = [&s](transformation const& f, transformation const& g) {
    return star(f, g, s);

  };
  std::vector<transformation> elements;
  std::string tag = semigroup;
  if (semigroup == "variant") {
    elements = all_transformations(s.degree());
  } else if (semigroup == "reg") {
    elements = enumerate_reg(s);
  } else if (semigroup == "exa") {
    elements = exa_elements(s);
  } else if (semigroup == "ideal") {
    elements = ideal(ideal_level, s).elements;
    tag = "ideal:" + std::to_string(ideal_level);
  } else if (semigroup == "tn") {
    elements = all_transformations(s.degree());
  } else {
    throw CLI::ValidationError("--semigroup",
                               "expected variant|reg|exa|ideal|tn");
  }
  if (elements.size() > 20000) {
    throw std::length_error("egg box needs a full product table; " +
                            std::to_string(elements.size()) +
                            " elements is beyond the supported size");
  }
  semigroup_table<transformation> const table =
      semigroup == "tn"
          ? semigroup_table<transformation>::from_elements(
                elements, [](transformation const& f, transformation const& g) {
                  return compose(f, g);
                })
          : semigroup_table<transformation>::from_elements(elements, star_product);
  std::vector<int> sandwich_images;
  for (point v : s.a().images()) {
    sandwich_images.push_back(v + 1);
  }
  auto const layout = build_egg_box(table, s.degree(), sandwich_images, tag);
  std::cout << render(layout, parse_egg_box_format(format));
  return exit_ok;
}

int run_verify(std::vector<sandwich_element> const& candidates) {
  std::vector<check_result> results;
  for (sandwich_element const& s : candidates) {
    std::cout << "== a = " << s.a().to_string() << "\n";
    auto const checks = verify_sandwich(s);
    for (check_result const& check : checks) {
      std::cout << check.to_line() << "\n";
    }
    results.insert(results.end(), checks.begin(), checks.end());
  }
  bool all_ok = true;
  for (check_result const& check : results) {
    all_ok = all_ok && check.ok;
  }
  std::cout << (all_ok ? "verification passed" : "verification FAILED") << " ("
            << results.size() << " checks)\n";
  return all_ok ? exit_ok : exit_mismatch;
}

int run_tournaments(int r, bool count_only) {
  auto const list = strongly_connected_tournaments(r);
  if (count_only) {
    std::cout << list.size() << "\n";
    return exit_ok;
  }
  for (tournament const& t : list) {
    std::cout << (t.is_convention_pair() ? std::string("convention")
                                         : std::to_string(t.code()))
              << ":";
    for (auto const& [i, j] : t.arcs()) {
      std::cout << " " << (i + 1) << "->" << (j + 1);
    }
    std::cout << "\n";
  }
  std::cout << "total " << list.size() << "\n";
  return exit_ok;
}

int run_gensets(sandwich_element const& s, std::string const& target,
                bool enumerate_all) {
  auto star_product = [&s](transformation const& f, transformation const& g) {
    return star(f, g, s);
  };
  if (target == "reg") {
    if (enumerate_all) {
      std::cerr << "note: exhaustive enumeration of minimal generating sets of "
                   "Reg is out of scope; constructing and checking one\n";
    }
    auto const gens = build_reg_generating_set(s);
    std::cout << "constructed generating set of Reg (size " << gens.size() << "):\n";
    for (transformation const& f : gens) {
      std::cout << "  " << f.to_string() << "\n";
    }
    auto const closure = semigroup_table<transformation>::closure(gens, star_product);
    std::cout << "closure size " << closure.size() << " (expected "
              << size_reg_formula(s).str() << ")\n";
    return closure.size() == size_reg_formula(s) ? exit_ok : exit_mismatch;
  }
  if (target != "exa") {
    throw CLI::ValidationError("--target", "expected exa|reg");
  }
  auto const gens = build_exa_generating_set(s);
  std::cout << "constructed idempotent generating set of the idempotent "
               "generated part (size "
            << gens.size() << "):\n";
  for (transformation const& f : gens) {
    std::cout << "  " << f.to_string() << "\n";
  }
  auto const exa = exa_elements(s);
  auto const table = semigroup_table<transformation>::from_elements(exa, star_product);
  if (!enumerate_all) {
    std::vector<std::size_t> indices;
    for (transformation const& f : gens) {
      indices.push_back(*table.index_of(f));
    }
    std::cout << "closure size "
              << (table.is_generating(indices) ? exa.size() : 0) << " of "
              << exa.size() << "\n";
    return table.is_generating(indices) ? exit_ok : exit_mismatch;
  }
  // exhaustive enumeration of minimal idempotent generating sets
  std::vector<std::size_t> pool;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table.product(i, i) == i) {
      pool.push_back(i);
    }
  }
  subset_search_options options;
  options.collect_all = true;
  auto const found = generating_subsets(table, pool, gens.size(), options);
  std::cout << "idempotent generating sets of size " << gens.size() << ": "
            << found.generating_count << " (formula "
            << count_min_idempotent_gensets(s).str() << ")\n";
  return found.generating_count == count_min_idempotent_gensets(s) ? exit_ok
                                                                   : exit_mismatch;
}

int run_normalize(std::string const& literal) {
  transformation const b = transformation::parse(literal);
  auto const [element, p] = normalize_sandwich(b);
  std::cout << "b=" << b.to_string() << "\n";
  std::cout << "p=" << p.to_string() << "\n";
  std::cout << "a=" << element.a().to_string() << "\n";
  std::cout << "kernel=" << element.kernel().to_string() << "\n";
  std::cout << "rank=" << element.rank() << "\n";
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sandwich semigroups of transformations: exact structure "
               "formulas with a brute-force oracle"};
  app.require_subcommand(1);

  std::string a_literal, b_literal;
  std::string format = "text";
  std::string semigroup = "variant";
  std::string target = "exa";
  int max_n = 0;
  int ideal_level = 1;
  int tournament_r = 3;
  bool count_only = false;
  bool enumerate_all = false;
  bool all_sandwiches = false;
  bool no_dedup = false;
  int verify_n = 0;

  auto* analyze = app.add_subcommand("analyze", "structure report for one variant");
  analyze->add_option("--a", a_literal, "sandwich element, e.g. [1,2,3,3]")->required();
  analyze->add_option("--format", format, "text|json");
  analyze->add_option("--max-n", max_n, "raise the enumeration guard");

  auto* eggbox = app.add_subcommand("eggbox", "egg box diagram of a computed semigroup");
  eggbox->add_option("--a", a_literal, "sandwich element")->required();
  eggbox->add_option("--semigroup", semigroup, "variant|reg|exa|ideal|tn");
  eggbox->add_option("--format", format, "text|dot|json");
  eggbox->add_option("--m", ideal_level, "ideal level for --semigroup ideal");
  eggbox->add_option("--max-n", max_n, "raise the enumeration guard");

  auto* verify = app.add_subcommand("verify", "formula-vs-oracle verification");
  verify->add_option("--a", a_literal, "verify a single sandwich element");
  verify->add_option("--n", verify_n, "degree for --all-sandwiches");
  verify->add_flag("--all-sandwiches", all_sandwiches,
                   "verify every idempotent with 1 < rank < n");
  verify->add_flag("--no-dedup", no_dedup,
                   "do not deduplicate by kernel-class sizes");
  verify->add_option("--max-n", max_n, "raise the enumeration guard");

  auto* tournaments = app.add_subcommand("tournaments",
                                         "strongly connected tournaments on r vertices");
  tournaments->add_option("--r", tournament_r, "vertex count")->required();
  tournaments->add_flag("--count-only", count_only, "print only the count");

  auto* gensets = app.add_subcommand("gensets", "construct or enumerate generating sets");
  gensets->add_option("--a", a_literal, "sandwich element")->required();
  gensets->add_option("--target", target, "exa|reg");
  gensets->add_flag("--enumerate", enumerate_all,
                    "exhaustively enumerate minimal idempotent generating sets");
  gensets->add_option("--max-n", max_n, "raise the enumeration guard");

  auto* normalize = app.add_subcommand("normalize",
                                       "normalise a sandwich element to an idempotent");
  normalize->add_option("--b", b_literal, "any transformation")->required();

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    apply_max_n(max_n);
    if (analyze->parsed()) {
      return run_analyze(parse_sandwich(a_literal), format);
    }
    if (eggbox->parsed()) {
      return run_eggbox(parse_sandwich(a_literal), semigroup, format, ideal_level);
    }
    if (verify->parsed()) {
      std::vector<sandwich_element> candidates;
      if (!a_literal.empty()) {
        candidates.push_back(parse_sandwich(a_literal));
      }
      if (all_sandwiches) {
        if (verify_n < 3) {
          throw CLI::ValidationError("--n", "need --n >= 3 with --all-sandwiches");
        }
        for (transformation const& a : sandwich_candidates(verify_n, !no_dedup)) {
          candidates.emplace_back(a);
        }
      }
      if (candidates.empty()) {
        throw CLI::ValidationError("verify", "need --a or --all-sandwiches");
      }
      return run_verify(candidates);
    }
    if (tournaments->parsed()) {
      return run_tournaments(tournament_r, count_only);
    }
    if (gensets->parsed()) {
      return run_gensets(parse_sandwich(a_literal), target, enumerate_all);
    }
    if (normalize->parsed()) {
      return run_normalize(b_literal);
    }
  } catch (CLI::ValidationError const& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return exit_usage;
  } catch (std::invalid_argument const& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return exit_usage;
  } catch (std::length_error const& e) {
    std::cerr << "guard: " << e.what() << "\n";
    return exit_usage;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_mismatch;
  }
  return exit_usage;
}
