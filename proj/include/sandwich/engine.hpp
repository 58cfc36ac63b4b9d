#ifndef SANDWICH_ENGINE_HPP_
#define SANDWICH_ENGINE_HPP_

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace sandwich {

// Green's structure of a concrete finite semigroup, computed from first
// principles via principal-ideal reachability.  Class ids are assigned in
// order of first appearance, so identical inputs yield identical ids.
struct green_data {
  std::vector<int> r_class_of, l_class_of, h_class_of, d_class_of;
  int n_r_classes = 0, n_l_classes = 0, n_h_classes = 0, n_d_classes = 0;
  std::vector<char> h_class_is_group;             // per H-class id
  std::vector<std::vector<char>> d_leq;           // d_leq[c][d]: D_c <= D_d
  std::vector<std::vector<std::size_t>> r_class_members, l_class_members,
      h_class_members, d_class_members;
  std::vector<char> d_class_regular;              // contains a group H-class

  bool d_class_is_regular(int d) const {
    return d_class_regular[static_cast<std::size_t>(d)] != 0;
  }

  std::vector<int> maximal_d_classes() const {
    std::vector<int> out;
    for (int c = 0; c < n_d_classes; ++c) {
      bool maximal = true;
      for (int d = 0; d < n_d_classes; ++d) {
        if (d != c && d_leq[c][d]) {
          maximal = false;
          break;
        }
      }
      if (maximal) {
        out.push_back(c);
      }
    }
    return out;
  }

  // Covering pairs (lower, upper) of the D-order.
  std::vector<std::pair<int, int>> d_order_covers() const {
    std::vector<std::pair<int, int>> covers;
    for (int c = 0; c < n_d_classes; ++c) {
      for (int d = 0; d < n_d_classes; ++d) {
        if (c == d || !d_leq[c][d]) {
          continue;
        }
        bool covering = true;
        for (int e = 0; e < n_d_classes; ++e) {
          if (e != c && e != d && d_leq[c][e] && d_leq[e][d]) {
            covering = false;
            break;
          }
        }
        if (covering) {
          covers.emplace_back(c, d);
        }
      }
    }
    return covers;
  }
};

struct closure_options {
  std::size_t max_size = 10'000'000;
  int associativity_samples = 1000;
  bool full_associativity_check = false;  // only honoured for size <= 300
};

// A concrete finite semigroup: an indexed element list closed under a
// black-box product, with the full product table cached by index.  This is
// the oracle substrate: every formula in the library is validated against
// Green's data and searches computed here by brute force.
template <typename Element, typename Hash = std::hash<Element>>
class semigroup_table {
 public:
  using product_fn = std::function<Element(Element const&, Element const&)>;

  // Breadth-first Cayley closure of the generators.  Element order is
  // deterministic: generators first (duplicates dropped), then products in
  // order of discovery, frontier elements multiplied on the right by the
  // generators in input order.
  static semigroup_table closure(std::vector<Element> const& generators,
                                 product_fn product,
                                 closure_options const& options = {}) {
    if (generators.empty()) {
      throw std::invalid_argument("closure: need at least one generator");
    }
    semigroup_table table;
    table.product_ = std::move(product);
    for (Element const& g : generators) {
      table.intern(g);
    }
    table.generators_.resize(table.elements_.size());
    std::iota(table.generators_.begin(), table.generators_.end(), std::size_t{0});
    for (std::size_t next = 0; next < table.elements_.size(); ++next) {
      for (std::size_t g : table.generators_) {
        Element prod = table.product_(table.elements_[next], table.elements_[g]);
        table.intern(prod);
        if (table.elements_.size() > options.max_size) {
          throw std::length_error("closure exceeded the size cap");
        }
      }
    }
    table.fill_table(options);
    return table;
  }

  // Wraps a set already known to be closed; throws if a product escapes it.
  static semigroup_table from_elements(std::vector<Element> const& elements,
                                       product_fn product,
                                       closure_options const& options = {}) {
    if (elements.empty()) {
      throw std::invalid_argument("from_elements: empty element list");
    }
    semigroup_table table;
    table.product_ = std::move(product);
    for (Element const& e : elements) {
      table.intern(e);
    }
    table.fill_table(options);
    return table;
  }

  std::size_t size() const { return elements_.size(); }
  Element const& element(std::size_t i) const { return elements_[i]; }
  std::vector<Element> const& elements() const { return elements_; }
  std::vector<std::size_t> const& generator_indices() const { return generators_; }

  std::optional<std::size_t> index_of(Element const& e) const {
    auto it = index_.find(e);
    if (it == index_.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  std::size_t product(std::size_t i, std::size_t j) const {
    return table_[i * elements_.size() + j];
  }

  std::vector<std::size_t> idempotents() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size(); ++i) {
      if (product(i, i) == i) {
        out.push_back(i);
      }
    }
    return out;
  }

  // All x with x = x*y*x for some y; the witness y' = y*x*y then satisfies
  // both regularity equations.
  std::vector<std::size_t> regular_elements() const {
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < size(); ++x) {
      for (std::size_t y = 0; y < size(); ++y) {
        if (product(product(x, y), x) == x) {
          out.push_back(x);
          break;
        }
      }
    }
    return out;
  }

  // True when the closure of the given element indices is the whole table.
  bool is_generating(std::vector<std::size_t> const& subset) const {
    if (subset.empty()) {
      return false;
    }
    std::vector<char> seen(size(), 0);
    std::vector<std::size_t> queue;
    for (std::size_t s : subset) {
      if (!seen[s]) {
        seen[s] = 1;
        queue.push_back(s);
      }
    }
    std::size_t reached = queue.size();
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (std::size_t s : subset) {
        std::size_t p = product(queue[head], s);
        if (!seen[p]) {
          seen[p] = 1;
          queue.push_back(p);
          ++reached;
        }
      }
    }
    return reached == size();
  }

  // Lazily computed once; the table itself never changes after construction.
  green_data const& greens() const {
    static std::mutex guard;
    std::scoped_lock lock(guard);
    if (!greens_) {
      greens_ = compute_greens();
    }
    return *greens_;
  }

 private:
  using bitset = boost::dynamic_bitset<>;

  void intern(Element const& e) {
    auto [it, inserted] = index_.try_emplace(e, elements_.size());
    if (inserted) {
      elements_.push_back(e);
    }
  }

  void fill_table(closure_options const& options) {
    std::size_t n = elements_.size();
    table_.resize(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Element prod = product_(elements_[i], elements_[j]);
        auto it = index_.find(prod);
        if (it == index_.end()) {
          throw std::logic_error("element set is not closed under the product");
        }
        table_[i * n + j] = it->second;
      }
    }
    check_associativity(options);
  }

  void check_associativity(closure_options const& options) const {
    std::size_t n = elements_.size();
    auto check = [&](std::size_t x, std::size_t y, std::size_t z) {
      if (product(product(x, y), z) != product(x, product(y, z))) {
        throw std::logic_error("product is not associative");
      }
    };
    if (options.full_associativity_check && n <= 300) {
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          for (std::size_t z = 0; z < n; ++z) {
            check(x, y, z);
          }
        }
      }
      return;
    }
    std::mt19937 rng(0xC0FFEE);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (int i = 0; i < options.associativity_samples; ++i) {
      check(pick(rng), pick(rng), pick(rng));
    }
  }

  green_data compute_greens() const {
    std::size_t n = elements_.size();
    green_data g;
    // Principal right/left ideals with a virtually adjoined identity: the
    // element itself is always a member.
    std::vector<bitset> right(n, bitset(n)), left(n, bitset(n));
    for (std::size_t x = 0; x < n; ++x) {
      right[x].set(x);
      left[x].set(x);
      for (std::size_t s = 0; s < n; ++s) {
        right[x].set(product(x, s));
        left[x].set(product(s, x));
      }
    }
    // x R y iff equal right ideals (mutual reachability gives equality).
    auto classify = [n](std::vector<bitset> const& ideals, std::vector<int>& ids) {
      ids.assign(n, -1);
      std::map<bitset, int> seen;
      int next = 0;
      for (std::size_t x = 0; x < n; ++x) {
        auto [it, inserted] = seen.try_emplace(ideals[x], next);
        if (inserted) {
          ++next;
        }
        ids[x] = it->second;
      }
      return next;
    };
    g.n_r_classes = classify(right, g.r_class_of);
    g.n_l_classes = classify(left, g.l_class_of);

    // H = R meet L.
    g.h_class_of.assign(n, -1);
    {
      std::map<std::pair<int, int>, int> seen;
      int next = 0;
      for (std::size_t x = 0; x < n; ++x) {
        auto key = std::make_pair(g.r_class_of[x], g.l_class_of[x]);
        auto [it, inserted] = seen.try_emplace(key, next);
        if (inserted) {
          ++next;
        }
        g.h_class_of[x] = it->second;
      }
      g.n_h_classes = next;
    }

    // D = join of R and L, via fixed-point merging of class components.
    {
      std::vector<int> parent(n);
      std::iota(parent.begin(), parent.end(), 0);
      std::function<int(int)> find = [&](int v) {
        while (parent[v] != v) {
          parent[v] = parent[parent[v]];
          v = parent[v];
        }
        return v;
      };
      auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
      std::vector<int> r_first(static_cast<std::size_t>(g.n_r_classes), -1);
      std::vector<int> l_first(static_cast<std::size_t>(g.n_l_classes), -1);
      for (std::size_t x = 0; x < n; ++x) {
        int& rf = r_first[g.r_class_of[x]];
        if (rf < 0) {
          rf = static_cast<int>(x);
        } else {
          unite(static_cast<int>(x), rf);
        }
        int& lf = l_first[g.l_class_of[x]];
        if (lf < 0) {
          lf = static_cast<int>(x);
        } else {
          unite(static_cast<int>(x), lf);
        }
      }
      g.d_class_of.assign(n, -1);
      std::unordered_map<int, int> renumber;
      int next = 0;
      for (std::size_t x = 0; x < n; ++x) {
        int root = find(static_cast<int>(x));
        auto [it, inserted] = renumber.try_emplace(root, next);
        if (inserted) {
          ++next;
        }
        g.d_class_of[x] = it->second;
      }
      g.n_d_classes = next;
    }

    auto collect = [n](std::vector<int> const& ids, int count) {
      std::vector<std::vector<std::size_t>> members(static_cast<std::size_t>(count));
      for (std::size_t x = 0; x < n; ++x) {
        members[ids[x]].push_back(x);
      }
      return members;
    };
    g.r_class_members = collect(g.r_class_of, g.n_r_classes);
    g.l_class_members = collect(g.l_class_of, g.n_l_classes);
    g.h_class_members = collect(g.h_class_of, g.n_h_classes);
    g.d_class_members = collect(g.d_class_of, g.n_d_classes);

    g.h_class_is_group.assign(static_cast<std::size_t>(g.n_h_classes), 0);
    for (std::size_t x = 0; x < n; ++x) {
      if (product(x, x) == x) {
        g.h_class_is_group[g.h_class_of[x]] = 1;
      }
    }
    g.d_class_regular.assign(static_cast<std::size_t>(g.n_d_classes), 0);
    for (int h = 0; h < g.n_h_classes; ++h) {
      if (g.h_class_is_group[h]) {
        g.d_class_regular[g.d_class_of[g.h_class_members[h].front()]] = 1;
      }
    }

    // J-order via two-sided principal ideals: for a representative y,
    // S^1 y S^1 is the union of the right ideals of the members of S^1 y.
    g.d_leq.assign(static_cast<std::size_t>(g.n_d_classes),
                   std::vector<char>(static_cast<std::size_t>(g.n_d_classes), 0));
    std::vector<std::size_t> rep(static_cast<std::size_t>(g.n_d_classes));
    for (int c = 0; c < g.n_d_classes; ++c) {
      rep[c] = g.d_class_members[c].front();
    }
    for (int d = 0; d < g.n_d_classes; ++d) {
      bitset two_sided(n);
      std::size_t y = rep[d];
      two_sided |= right[y];
      for (std::size_t s = 0; s < n; ++s) {
        two_sided |= right[product(s, y)];
      }
      for (int c = 0; c < g.n_d_classes; ++c) {
        g.d_leq[c][d] = two_sided.test(rep[c]) ? 1 : 0;
      }
    }
    // In a finite semigroup J = D; mutual J-containment across distinct
    // D-classes would contradict that, so it is asserted here.
    for (int c = 0; c < g.n_d_classes; ++c) {
      for (int d = 0; d < g.n_d_classes; ++d) {
        if (c != d && g.d_leq[c][d] && g.d_leq[d][c]) {
          throw std::logic_error("J=D violated: distinct mutually comparable classes");
        }
      }
    }
    return g;
  }

  std::vector<Element> elements_;
  std::unordered_map<Element, std::size_t, Hash> index_;
  std::vector<std::size_t> table_;
  std::vector<std::size_t> generators_;
  product_fn product_;
  mutable std::optional<green_data> greens_;
};

// The closure of the generators as an element list, without materialising a
// product table; memory stays linear in the closure.  Same deterministic
// discovery order as semigroup_table::closure.
template <typename Element, typename Hash = std::hash<Element>>
std::vector<Element> closure_elements(
    std::vector<Element> const& generators,
    std::function<Element(Element const&, Element const&)> const& product,
    std::size_t max_size = 10'000'000) {
  if (generators.empty()) {
    throw std::invalid_argument("closure_elements: need at least one generator");
  }
  std::unordered_map<Element, std::size_t, Hash> index;
  std::vector<Element> elements;
  for (Element const& g : generators) {
    if (index.try_emplace(g, elements.size()).second) {
      elements.push_back(g);
    }
  }
  std::size_t const n_generators = elements.size();
  for (std::size_t next = 0; next < elements.size(); ++next) {
    for (std::size_t g = 0; g < n_generators; ++g) {
      Element prod = product(elements[next], elements[g]);
      if (index.try_emplace(prod, elements.size()).second) {
        elements.push_back(prod);
        if (elements.size() > max_size) {
          throw std::length_error("closure exceeded the size cap");
        }
      }
    }
  }
  return elements;
}

template <typename Element, typename Hash = std::hash<Element>>
std::size_t closure_size(
    std::vector<Element> const& generators,
    std::function<Element(Element const&, Element const&)> const& product,
    std::size_t max_size = 10'000'000) {
  return closure_elements<Element, Hash>(generators, product, max_size).size();
}

struct subset_search_options {
  std::size_t max_candidates = 200'000'000;
  std::chrono::milliseconds time_budget{0};  // 0 = unlimited
  bool collect_all = false;
};

struct subset_search_result {
  std::size_t candidates_examined = 0;
  std::size_t generating_count = 0;
  std::optional<std::vector<std::size_t>> first;
  std::vector<std::vector<std::size_t>> all;
};

// Enumerates the k-subsets of `pool` whose closure is the whole table,
// in lexicographic order of pool positions.  Candidates are pre-filtered by
// the covering rule: every generating set must meet every R-class of every
// maximal D-class.
template <typename Element, typename Hash>
subset_search_result generating_subsets(semigroup_table<Element, Hash> const& S,
                                        std::vector<std::size_t> const& pool,
                                        std::size_t k,
                                        subset_search_options const& options = {}) {
  green_data const& g = S.greens();
  // required_class[x] = id of the R-class-of-a-maximal-D-class containing x,
  // or -1; every one of the `n_required` ids must be hit.
  std::vector<int> required_class(S.size(), -1);
  int n_required = 0;
  {
    std::map<int, int> r_id;
    for (int d : g.maximal_d_classes()) {
      for (std::size_t x : g.d_class_members[d]) {
        auto [it, inserted] = r_id.try_emplace(g.r_class_of[x], n_required);
        if (inserted) {
          ++n_required;
        }
        required_class[x] = it->second;
      }
    }
  }
  subset_search_result result;
  if (k == 0 || k > pool.size() ||
      static_cast<std::size_t>(n_required) > k) {
    return result;
  }
  auto deadline = std::chrono::steady_clock::now() + options.time_budget;
  std::vector<std::size_t> combo(k);
  std::vector<int> hits(static_cast<std::size_t>(n_required), 0);
  std::iota(combo.begin(), combo.end(), std::size_t{0});
  std::vector<std::size_t> subset(k);
  while (true) {
    ++result.candidates_examined;
    if (result.candidates_examined > options.max_candidates) {
      throw std::runtime_error("generating_subsets: candidate limit exceeded");
    }
    if (options.time_budget.count() > 0 &&
        (result.candidates_examined & 0xFFF) == 0 &&
        std::chrono::steady_clock::now() > deadline) {
      throw std::runtime_error("generating_subsets: time budget exceeded");
    }
    std::fill(hits.begin(), hits.end(), 0);
    int covered = 0;
    for (std::size_t i = 0; i < k; ++i) {
      subset[i] = pool[combo[i]];
      int rc = required_class[subset[i]];
      if (rc >= 0 && !hits[rc]) {
        hits[rc] = 1;
        ++covered;
      }
    }
    if (covered == n_required && S.is_generating(subset)) {
      ++result.generating_count;
      if (!result.first) {
        result.first = subset;
      }
      if (options.collect_all) {
        result.all.push_back(subset);
      } else if (result.first) {
        // Caller only needs existence; stop at the first witness.
        return result;
      }
    }
    // next k-combination of pool indices
    std::size_t i = k;
    while (i > 0 && combo[i - 1] == pool.size() - k + i - 1) {
      --i;
    }
    if (i == 0) {
      break;
    }
    ++combo[i - 1];
    for (std::size_t j = i; j < k; ++j) {
      combo[j] = combo[j - 1] + 1;
    }
  }
  return result;
}

struct min_rank_options {
  std::size_t max_candidates = 200'000'000;
  std::chrono::milliseconds time_budget{0};
};

// Least k <= upper_bound admitting a generating k-subset, by exhaustive
// search in ascending k.  The caller supplies upper_bound from a known
// generating set, so the search always terminates with a result.
template <typename Element, typename Hash>
std::size_t min_rank_exhaustive(semigroup_table<Element, Hash> const& S,
                                std::size_t upper_bound,
                                min_rank_options const& options = {}) {
  std::vector<std::size_t> pool(S.size());
  std::iota(pool.begin(), pool.end(), std::size_t{0});
  for (std::size_t k = 1; k <= upper_bound; ++k) {
    subset_search_options search;
    search.max_candidates = options.max_candidates;
    search.time_budget = options.time_budget;
    if (generating_subsets(S, pool, k, search).first) {
      return k;
    }
  }
  throw std::logic_error("min_rank_exhaustive: upper bound is not attainable");
}

}  // namespace sandwich

#endif  // SANDWICH_ENGINE_HPP_
