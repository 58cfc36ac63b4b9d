#ifndef SANDWICH_VARIANT_HPP_
#define SANDWICH_VARIANT_HPP_

#include <cassert>
#include <stdexcept>
#include <vector>

#include "combinatorics.hpp"
#include "engine.hpp"
#include "sandwich_element.hpp"
#include "transformation.hpp"

namespace sandwich {

// The sandwich product f * g = f a g defining the variant semigroup.
inline transformation star(transformation const& f, transformation const& g,
                           sandwich_element const& s) {
  if (f.degree() != s.degree() || g.degree() != s.degree()) {
    throw std::invalid_argument("star: degree mismatch");
  }
  transformation const& a = s.a();
  std::vector<point> img(static_cast<std::size_t>(f.degree()));
  for (int x = 0; x < f.degree(); ++x) {
    img[x] = g[a[f[x]]];
  }
  return transformation(std::move(img));
}

// Membership of f in the rank-preservation sets:
//   P1 = { f : ker(a) separates im(f) } = { f : rank(fa) = rank(f) }
//   P2 = { f : im(a) saturates ker(f) } = { f : rank(af) = rank(f) }
// P = P1 n P2 is exactly the set of regular elements of the variant.
struct p_classification {
  bool in_p1 = false;
  bool in_p2 = false;
  bool in_p() const { return in_p1 && in_p2; }
};

inline p_classification classify_p(transformation const& f,
                                   sandwich_element const& s) {
  if (f.degree() != s.degree()) {
    throw std::invalid_argument("classify_p: degree mismatch");
  }
  int n = f.degree();
  int const r = s.rank();
  // P1: no two image points of f share a kernel class of a.
  std::vector<char> block_hit(static_cast<std::size_t>(r), 0);
  std::vector<char> is_image(static_cast<std::size_t>(n), 0);
  bool p1 = true;
  for (int x = 0; x < n && p1; ++x) {
    point v = f[x];
    if (is_image[v]) {
      continue;
    }
    is_image[v] = 1;
    int b = s.block_index_of(v);
    if (block_hit[b]) {
      p1 = false;
    }
    block_hit[b] = 1;
  }
  // P2: every kernel class of f contains a point of im(a).  A class is
  // identified by its common image value, so count the distinct values of
  // f on im(a) against rank(f).
  std::vector<char> value_hit(static_cast<std::size_t>(n), 0);
  int values_on_a = 0;
  for (point ai : s.image()) {
    point v = f[ai];
    if (!value_hit[v]) {
      value_hit[v] = 1;
      ++values_on_a;
    }
  }
  int const rank_f = f.rank();
  p_classification out{p1, values_on_a == rank_f};
  // Cross-checks from the rank characterisation.
  assert(out.in_p1 == (compose(f, s.a()).rank() == rank_f));
  assert(out.in_p2 == (compose(s.a(), f).rank() == rank_f));
  return out;
}

enum class green_relation { R, L, H, D };

// The Green's class of f in the variant, enumerated from the case formulas:
//   R^a_f = R_f n P1 if f in P1, else {f};  L^a dually with P2;
//   H^a_f = H_f if f in P, else {f};
//   D^a_f = D_f n P if f in P, L^a_f if f in P2 only, R^a_f if f in P1 only,
//           else {f}.
// Output is in lexicographic order of image sequences.
inline std::vector<transformation> variant_green_class(transformation const& f,
                                                       sandwich_element const& s,
                                                       green_relation relation) {
  if (f.degree() != s.degree()) {
    throw std::invalid_argument("variant_green_class: degree mismatch");
  }
  p_classification const pc = classify_p(f, s);
  auto singleton = [&] { return std::vector<transformation>{f}; };
  auto same_kernel = [sig = f.kernel_signature()](transformation const& g) {
    return g.kernel_signature() == sig;
  };
  auto same_image = [im = f.image_set()](transformation const& g) {
    return g.image_set() == im;
  };
  switch (relation) {
    case green_relation::R: {
      if (!pc.in_p1) {
        return singleton();
      }
      std::vector<transformation> out;
      for (transformation const& g : all_transformations(f.degree())) {
        if (same_kernel(g) && classify_p(g, s).in_p1) {
          out.push_back(g);
        }
      }
      return out;
    }
    case green_relation::L: {
      if (!pc.in_p2) {
        return singleton();
      }
      std::vector<transformation> out;
      for (transformation const& g : all_transformations(f.degree())) {
        if (same_image(g) && classify_p(g, s).in_p2) {
          out.push_back(g);
        }
      }
      return out;
    }
    case green_relation::H: {
      if (!pc.in_p()) {
        return singleton();
      }
      std::vector<transformation> out;
      for (transformation const& g : all_transformations(f.degree())) {
        if (same_kernel(g) && same_image(g)) {
          out.push_back(g);
        }
      }
      return out;
    }
    case green_relation::D: {
      if (pc.in_p()) {
        std::vector<transformation> out;
        int const m = f.rank();
        for (transformation const& g : all_transformations(f.degree())) {
          if (g.rank() == m && classify_p(g, s).in_p()) {
            out.push_back(g);
          }
        }
        return out;
      }
      if (pc.in_p2) {
        return variant_green_class(f, s, green_relation::L);
      }
      if (pc.in_p1) {
        return variant_green_class(f, s, green_relation::R);
      }
      return singleton();
    }
  }
  throw std::invalid_argument("variant_green_class: unknown relation");
}

namespace detail {
// ker(g) refines ker(f): whenever g identifies two points, so does f.
inline bool kernel_coarser_or_equal(transformation const& f,
                                    transformation const& g) {
  int n = f.degree();
  std::vector<int> value_of(static_cast<std::size_t>(n), -1);
  for (int x = 0; x < n; ++x) {
    int& v = value_of[g[x]];
    if (v < 0) {
      v = f[x];
    } else if (v != f[x]) {
      return false;
    }
  }
  return true;
}

inline bool image_subset(transformation const& f, transformation const& g) {
  std::vector<char> in_g(static_cast<std::size_t>(g.degree()), 0);
  for (int x = 0; x < g.degree(); ++x) {
    in_g[g[x]] = 1;
  }
  for (int x = 0; x < f.degree(); ++x) {
    if (!in_g[f[x]]) {
      return false;
    }
  }
  return true;
}
}  // namespace detail

// The order on D-classes of the variant: D^a_f <= D^a_g iff f = g, or
// rank(f) <= rank(aga), or im(f) is contained in im(ag), or ker(f) contains
// ker(ga).  When f or g is regular the disjunction collapses to a single
// rank comparison; those shortcuts are asserted, not substituted.
inline bool d_order_leq(transformation const& f, transformation const& g,
                        sandwich_element const& s) {
  if (f.degree() != s.degree() || g.degree() != s.degree()) {
    throw std::invalid_argument("d_order_leq: degree mismatch");
  }
  transformation const& a = s.a();
  transformation const ag = compose(a, g);
  transformation const ga = compose(g, a);
  transformation const aga = compose(ag, a);
  bool const result = f == g || f.rank() <= aga.rank() ||
                      detail::image_subset(f, ag) ||
                      detail::kernel_coarser_or_equal(f, ga);
#ifndef NDEBUG
  if (classify_p(f, s).in_p()) {
    assert(result == (f.rank() <= aga.rank()));
  }
  if (classify_p(g, s).in_p()) {
    assert(result == (f.rank() <= g.rank()));
  }
#endif
  return result;
}

// rank of the variant: the number of transformations of rank exceeding
// rank(a), i.e. sum_{m=r+1}^{n} S(n,m) C(n,m) m!.
inline bignat rank_variant_formula(unsigned n, unsigned r) {
  if (r < 1 || r >= n) {
    throw std::invalid_argument("rank_variant_formula: need 1 <= r < n");
  }
  bignat total = 0;
  for (unsigned m = r + 1; m <= n; ++m) {
    total += stirling2(n, m) * binomial(n, m) * factorial(m);
  }
  return total;
}

// The unique minimal generating set of the variant: every transformation of
// rank greater than rank(a).  Guarded enumeration, lexicographic order.
inline std::vector<transformation> unique_min_generating_set(
    sandwich_element const& s) {
  if (s.rank() >= s.degree()) {
    throw std::invalid_argument("unique_min_generating_set: need rank(a) < n");
  }
  std::vector<transformation> out;
  for (transformation const& f : all_transformations(s.degree())) {
    if (f.rank() > s.rank()) {
      out.push_back(f);
    }
  }
  return out;
}

// Number of maximal D-classes sitting above the top regular class, i.e. of
// f with rank(afa) = r < rank(f):  (n^{n-r} - r^{n-r}) r! Lambda.
inline bignat count_maximal_above_top_regular(sandwich_element const& s) {
  unsigned const n = static_cast<unsigned>(s.degree());
  unsigned const r = static_cast<unsigned>(s.rank());
  if (r >= n) {
    throw std::invalid_argument("count_maximal_above_top_regular: need r < n");
  }
  return (bigpow(n, n - r) - bigpow(r, n - r)) * factorial(r) * s.big_lambda();
}

// The variant as a concrete table over all n^n elements (guarded).
inline semigroup_table<transformation> variant_table(sandwich_element const& s) {
  return semigroup_table<transformation>::from_elements(
      all_transformations(s.degree()),
      [s](transformation const& f, transformation const& g) {
        return star(f, g, s);
      });
}

}  // namespace sandwich

#endif  // SANDWICH_VARIANT_HPP_
