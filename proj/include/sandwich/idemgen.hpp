#ifndef SANDWICH_IDEMGEN_HPP_
#define SANDWICH_IDEMGEN_HPP_

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "combinatorics.hpp"
#include "regular.hpp"
#include "sandwich_element.hpp"
#include "transformation.hpp"
#include "variant.hpp"

namespace sandwich {

// A tournament on r labelled vertices: one directed arc per unordered pair.
// Encoded one bit per pair (i < j) in lexicographic pair order, bit set
// meaning the arc i -> j.  The two-vertex member of the strongly connected
// family is a distinguished convention object carrying both arcs (1,2) and
// (2,1); it is not a tournament proper, and its in-degree vector is (1,1).
class tournament {
 public:
  static tournament from_code(int r, std::uint64_t code) {
    check_vertex_count(r);
    if (code >> (r * (r - 1) / 2) != 0) {
      throw std::invalid_argument("tournament: code out of range");
    }
    tournament t;
    t.r_ = r;
    t.code_ = code;
    return t;
  }

  static tournament convention_pair() {
    tournament t;
    t.r_ = 2;
    t.convention_ = true;
    return t;
  }

  int vertex_count() const { return r_; }
  bool is_convention_pair() const { return convention_; }
  std::uint64_t code() const { return code_; }

  static std::size_t pair_index(int i, int j, int r) {
    // pairs (0,1), (0,2), ..., (0,r-1), (1,2), ... in order
    return static_cast<std::size_t>(i) * (2 * r - i - 1) / 2 + (j - i - 1);
  }

  // Directed arcs, in pair order (both directions listed for the
  // convention object).
  std::vector<std::pair<int, int>> arcs() const {
    std::vector<std::pair<int, int>> out;
    if (convention_) {
      out.emplace_back(0, 1);
      out.emplace_back(1, 0);
      return out;
    }
    for (int i = 0; i < r_; ++i) {
      for (int j = i + 1; j < r_; ++j) {
        if (code_ >> pair_index(i, j, r_) & 1) {
          out.emplace_back(i, j);
        } else {
          out.emplace_back(j, i);
        }
      }
    }
    return out;
  }

  std::vector<int> in_degrees() const {
    std::vector<int> deg(static_cast<std::size_t>(r_), 0);
    for (auto const& [from, to] : arcs()) {
      (void)from;
      ++deg[to];
    }
    return deg;
  }

  bool is_strongly_connected() const {
    if (convention_) {
      return true;
    }
    auto reaches_all = [&](bool forward) {
      std::vector<char> seen(static_cast<std::size_t>(r_), 0);
      std::vector<int> queue{0};
      seen[0] = 1;
      std::vector<std::vector<int>> adj(static_cast<std::size_t>(r_));
      for (auto const& [from, to] : arcs()) {
        if (forward) {
          adj[from].push_back(to);
        } else {
          adj[to].push_back(from);
        }
      }
      for (std::size_t head = 0; head < queue.size(); ++head) {
        for (int next : adj[queue[head]]) {
          if (!seen[next]) {
            seen[next] = 1;
            queue.push_back(next);
          }
        }
      }
      return queue.size() == static_cast<std::size_t>(r_);
    };
    return reaches_all(true) && reaches_all(false);
  }

 private:
  static void check_vertex_count(int r) {
    if (r < 2 || r > enumeration_hard_cap) {
      throw std::invalid_argument("tournament: vertex count out of range");
    }
  }

  int r_ = 2;
  std::uint64_t code_ = 0;
  bool convention_ = false;
};

// All strongly connected tournaments on r labelled vertices, in numeric
// order of their codes.  For r = 2 no genuine tournament is strongly
// connected; the convention object is the single member.
inline std::vector<tournament> strongly_connected_tournaments(int r) {
  if (r < 2) {
    throw std::invalid_argument("strongly_connected_tournaments: need r >= 2");
  }
  if (r == 2) {
    return {tournament::convention_pair()};
  }
  if (r > enumeration_hard_cap) {
    throw std::length_error("strongly_connected_tournaments: r too large");
  }
  std::vector<tournament> out;
  std::uint64_t const codes = std::uint64_t{1} << (r * (r - 1) / 2);
  for (std::uint64_t code = 0; code < codes; ++code) {
    tournament t = tournament::from_code(r, code);
    if (t.is_strongly_connected()) {
      out.push_back(t);
    }
  }
  return out;
}

// A canonical strongly connected tournament: the arcs i -> i+1 and r -> 1
// form a spanning cycle, all other pairs point backwards.
inline tournament canonical_cyclic_tournament(int r) {
  if (r == 2) {
    return tournament::convention_pair();
  }
  std::uint64_t code = 0;
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) {
      bool const forward = (j == i + 1) && !(i == 0 && j == r - 1);
      if (forward) {
        code |= std::uint64_t{1} << tournament::pair_index(i, j, r);
      }
    }
  }
  tournament t = tournament::from_code(r, code);
  if (!t.is_strongly_connected()) {
    throw std::logic_error("canonical cyclic tournament must be strongly connected");
  }
  return t;
}

// The map on r points sending j to i and fixing the rest; the elementary
// idempotents realising tournament arcs.
inline transformation elementary_idempotent(int r, int i, int j) {
  if (i == j || i < 0 || j < 0 || i >= r || j >= r) {
    throw std::invalid_argument("elementary_idempotent: need distinct i, j in range");
  }
  std::vector<point> img(static_cast<std::size_t>(r));
  std::iota(img.begin(), img.end(), point{0});
  img[j] = static_cast<point>(i);
  return transformation(std::move(img));
}

// The idempotents of the variant: f with f*f = f, equivalently those f
// for which af fixes im(f) pointwise.  Guarded enumeration.
inline std::vector<transformation> variant_idempotents(sandwich_element const& s) {
  std::vector<transformation> out;
  for (transformation const& f : all_transformations(s.degree())) {
    if (star(f, f, s) == f) {
      out.push_back(f);
    }
  }
  return out;
}

// |E_a(T_n^a)| = sum_{m=1}^{r} m^{n-m} sum_{|I|=m} Lambda_I.
inline bignat count_variant_idempotents(sandwich_element const& s) {
  unsigned const n = static_cast<unsigned>(s.degree());
  unsigned const r = static_cast<unsigned>(s.rank());
  std::vector<bignat> const e = elementary_symmetric(s.lambdas());
  bignat total = 0;
  for (unsigned m = 1; m <= r; ++m) {
    total += bigpow(m, n - m) * e[m];
  }
  return total;
}

// Lifts an idempotent q of T_A to an idempotent of the variant with the
// same rank and projection: each class of ker(a) maps to the image point
// selected by q.
inline transformation lift_idempotent(transformation const& q,
                                      sandwich_element const& s) {
  if (!q.is_idempotent()) {
    throw std::invalid_argument("lift_idempotent: map on A must be idempotent");
  }
  return lift_transformation(q, s);
}

// Membership in the idempotent generated subsemigroup of the variant:
// E_n^a = E_a(D) u (P \ D), i.e. the regular elements of rank below r
// together with the sandwich-idempotents of the top class.
inline bool exa_membership(transformation const& f, sandwich_element const& s) {
  if (f.degree() != s.degree()) {
    throw std::invalid_argument("exa_membership: degree mismatch");
  }
  if (!classify_p(f, s).in_p()) {
    return false;
  }
  if (f.rank() < s.rank()) {
    return true;
  }
  return star(f, f, s) == f;
}

// All elements of E_n^a, in lexicographic order (guarded enumeration).
inline std::vector<transformation> exa_elements(sandwich_element const& s) {
  std::vector<transformation> out;
  for (transformation const& f : all_transformations(s.degree())) {
    if (exa_membership(f, s)) {
      out.push_back(f);
    }
  }
  return out;
}

// An idempotent generating set of E_n^a of the minimal size r^{n-r} + rho_r:
// r^{n-r} idempotents generating the top rectangular band (kernels paired
// with images round-robin) plus the lifts of the elementary idempotents
// realising a canonical strongly connected tournament, whose projections
// generate the singular part of T_A.
inline std::vector<transformation> build_exa_generating_set(
    sandwich_element const& s) {
  int const r = s.rank();
  if (r <= 1 || r >= s.degree()) {
    throw std::invalid_argument("build_exa_generating_set: need 1 < rank(a) < n");
  }
  rectangular_group const rg(s);
  transformation const id_r = transformation::identity(r);
  std::vector<transformation> out;
  for (std::size_t ki = 0; ki < rg.kernel_count(); ++ki) {
    out.push_back(rg.encode(ki, ki % rg.image_count(), id_r));
  }
  for (auto const& [i, j] : canonical_cyclic_tournament(r).arcs()) {
    out.push_back(lift_idempotent(elementary_idempotent(r, i, j), s));
  }
  return out;
}

// rank = idrank of an x-by-y rectangular band is max(x, y); the number of
// minimal (idempotent) generating sets is y! S(x, y) for x >= y, the count
// of surjections from the long side onto the short one.
inline bignat rect_band_genset_count(unsigned x, unsigned y) {
  if (y < 1 || x < y) {
    throw std::invalid_argument("rect_band_genset_count: need x >= y >= 1");
  }
  return factorial(y) * stirling2(x, y);
}

// The number of idempotent generating sets of E_n^a of minimal size:
//   [(r-1)^{n-r} Lambda]^{rho_r} Lambda! S(r^{n-r}, Lambda)
//     * sum over strongly connected tournaments of prod_j lambda_j^{-d+(j)}.
// The sum is evaluated over exact rationals and the total asserted integral.
inline bignat count_min_idempotent_gensets(sandwich_element const& s) {
  int const r = s.rank();
  unsigned const n = static_cast<unsigned>(s.degree());
  unsigned const nr = n - static_cast<unsigned>(r);
  if (r <= 1 || r >= s.degree()) {
    throw std::invalid_argument("count_min_idempotent_gensets: need 1 < rank(a) < n");
  }
  bignat const rows = bigpow(r, nr);       // r^{n-r}
  bignat const lambda = s.big_lambda();    // Lambda
  if (rows > 20000 || lambda > 20000) {
    throw std::length_error(
        "count_min_idempotent_gensets: top band is too large to evaluate exactly");
  }
  bigrat tournament_sum = 0;
  for (tournament const& t : strongly_connected_tournaments(r)) {
    bignat denom = 1;
    std::vector<int> const deg = t.in_degrees();
    for (int j = 0; j < r; ++j) {
      denom *= bigpow(s.lambda(j), static_cast<unsigned>(deg[j]));
    }
    tournament_sum += bigrat(1, denom);
  }
  unsigned const rho_r = static_cast<unsigned>(rho(static_cast<unsigned>(r)));
  bignat const band_part =
      factorial(lambda.convert_to<unsigned>()) *
      stirling2(rows.convert_to<unsigned>(), lambda.convert_to<unsigned>());
  bignat const lift_base = bigpow(r - 1, nr) * lambda;  // choices per arc, times lambda_j
  bigrat total = bigrat(bigpow(lift_base, rho_r)) * bigrat(band_part) * tournament_sum;
  if (boost::multiprecision::denominator(total) != 1) {
    throw std::logic_error("count_min_idempotent_gensets: non-integral total");
  }
  return boost::multiprecision::numerator(total);
}

// The realisation of a strongly connected tournament as elementary
// idempotents of T_A (as degree-r maps): one eps_{ij} per arc (i, j).
// Their closure under composition is the singular part of T_A.
inline std::vector<transformation> singular_idempotent_genset(
    int r, tournament const& t) {
  if (t.vertex_count() != r) {
    throw std::invalid_argument("singular_idempotent_genset: vertex count mismatch");
  }
  if (!t.is_strongly_connected()) {
    throw std::invalid_argument(
        "singular_idempotent_genset: tournament must be strongly connected");
  }
  std::vector<transformation> out;
  for (auto const& [i, j] : t.arcs()) {
    out.push_back(elementary_idempotent(r, i, j));
  }
  return out;
}

}  // namespace sandwich

#endif  // SANDWICH_IDEMGEN_HPP_
