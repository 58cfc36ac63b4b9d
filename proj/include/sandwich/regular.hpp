#ifndef SANDWICH_REGULAR_HPP_
#define SANDWICH_REGULAR_HPP_

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "combinatorics.hpp"
#include "sandwich_element.hpp"
#include "transformation.hpp"
#include "variant.hpp"

namespace sandwich {

// Reg(T_n^a) = P = { f : rank(afa) = rank(f) }, in lexicographic order.
inline std::vector<transformation> enumerate_reg(sandwich_element const& s) {
  std::vector<transformation> out;
  for (transformation const& f : all_transformations(s.degree())) {
    if (classify_p(f, s).in_p()) {
      out.push_back(f);
    }
  }
  return out;
}

// The embedding of P into a direct product: f -> (fa, af).  The first
// component lands in the regular part of the restricted-range semigroup
// {g : im(g) in A}, the second in the restricted-kernel one.
inline std::pair<transformation, transformation> psi(transformation const& f,
                                                     sandwich_element const& s) {
  if (!classify_p(f, s).in_p()) {
    throw std::invalid_argument("psi: element is not regular in the variant");
  }
  return {compose(f, s.a()), compose(s.a(), f)};
}

// The projection P ->> T_A, f -> (fa)|_A, re-indexed through the sorted
// order of A so the result is a transformation of degree r.
inline transformation phi(transformation const& f, sandwich_element const& s) {
  if (!classify_p(f, s).in_p()) {
    throw std::invalid_argument("phi: element is not regular in the variant");
  }
  std::vector<point> img(static_cast<std::size_t>(s.rank()));
  for (int i = 0; i < s.rank(); ++i) {
    img[i] = static_cast<point>(s.block_index_of(f[s.image_point(i)]));
  }
  return transformation(std::move(img));
}

// Canonical section of phi: a degree-r map q on A lifts to the element of P
// sending the whole class A_i to the image point of index iq.
inline transformation lift_transformation(transformation const& q,
                                          sandwich_element const& s) {
  if (q.degree() != s.rank()) {
    throw std::invalid_argument("lift_transformation: map must have degree rank(a)");
  }
  std::vector<point> img(static_cast<std::size_t>(s.degree()));
  for (int x = 0; x < s.degree(); ++x) {
    img[x] = s.image_point(q[s.block_index_of(static_cast<point>(x))]);
  }
  return transformation(std::move(img));
}

// How one Green's class of T_A inflates inside P = Reg(T_n^a): the class of
// a rank-m element with image indices I corresponds to
//   m^{n-r} R-classes per R-fibre, Lambda_I L-classes per L-fibre,
//   H-classes of size m!, and a D-class forming an
//   [m^{n-r} S(r,m)] x [sum_J Lambda_J] grid of H-classes.
struct inflation_counts {
  int m = 0;
  bignat r_hat_classes;  // R-classes inside one R-fibre: m^{n-r}
  bignat l_hat_classes;  // L-classes inside one L-fibre: Lambda_I
  bignat h_class_size;   // m!
  bignat d_rows;         // R-classes of the D-class: m^{n-r} S(r,m)
  bignat d_cols;         // L-classes of the D-class: sum over |J|=m of Lambda_J

  bignat d_class_size() const { return h_class_size * d_rows * d_cols; }
};

inline inflation_counts hat_class_counts(sandwich_element const& s, int m,
                                         std::vector<int> const& image_indices) {
  int const r = s.rank();
  unsigned const n = static_cast<unsigned>(s.degree());
  if (m < 1 || m > r) {
    throw std::invalid_argument("hat_class_counts: need 1 <= m <= rank(a)");
  }
  if (static_cast<int>(image_indices.size()) != m) {
    throw std::invalid_argument("hat_class_counts: |I| must equal m");
  }
  {
    std::vector<int> sorted = image_indices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw std::invalid_argument("hat_class_counts: indices must be distinct");
    }
  }
  inflation_counts out;
  out.m = m;
  out.r_hat_classes = bigpow(m, n - static_cast<unsigned>(r));
  out.l_hat_classes = s.lambda_product(image_indices);
  out.h_class_size = factorial(static_cast<unsigned>(m));
  out.d_rows = out.r_hat_classes * stirling2(static_cast<unsigned>(r),
                                             static_cast<unsigned>(m));
  out.d_cols = elementary_symmetric(s.lambdas())[static_cast<std::size_t>(m)];
  return out;
}

// |Reg(T_n^a)| = sum_{m=1}^{r} m! m^{n-r} S(r,m) sum_{|I|=m} Lambda_I.
inline bignat size_reg_formula(sandwich_element const& s) {
  unsigned const n = static_cast<unsigned>(s.degree());
  unsigned const r = static_cast<unsigned>(s.rank());
  std::vector<bignat> const e = elementary_symmetric(s.lambdas());
  bignat total = 0;
  for (unsigned m = 1; m <= r; ++m) {
    total += factorial(m) * bigpow(m, n - r) * stirling2(r, m) * e[m];
  }
  return total;
}

// The top D-class D of P as a rectangular group: the r^{n-r} kernels that
// cross-sect ker(a), the Lambda images that cross-sect it, and S_r.  An
// element decodes as [kernel, image, permutation] and the sandwich product
// acts as (k1,i1,p)(k2,i2,q) = (k1,i2,pq).
class rectangular_group {
 public:
  explicit rectangular_group(sandwich_element const& s) : s_(s) {
    int const n = s.degree();
    int const r = s.rank();
    for (int x = 0; x < n; ++x) {
      if (!is_image_point(static_cast<point>(x))) {
        free_points_.push_back(static_cast<point>(x));
      }
    }
    // Kernels: assignments of the non-image points to the r classes, as a
    // mixed-radix counter, most significant digit first.
    std::size_t kernel_count = 1;
    for (std::size_t i = 0; i < free_points_.size(); ++i) {
      kernel_count *= static_cast<std::size_t>(r);
    }
    kernels_.reserve(kernel_count);
    std::vector<point> assign(static_cast<std::size_t>(n));
    for (int i = 0; i < r; ++i) {
      assign[s.image_point(i)] = static_cast<point>(i);
    }
    std::vector<int> digits(free_points_.size(), 0);
    while (true) {
      for (std::size_t i = 0; i < free_points_.size(); ++i) {
        assign[free_points_[i]] = static_cast<point>(digits[i]);
      }
      kernels_.push_back(assign);
      int i = static_cast<int>(free_points_.size()) - 1;
      while (i >= 0 && digits[i] == r - 1) {
        digits[i--] = 0;
      }
      if (i < 0) {
        break;
      }
      ++digits[i];
    }
    // Images: one point from each class of ker(a), mixed-radix over the
    // sorted class contents.
    std::vector<int> pick(static_cast<std::size_t>(r), 0);
    while (true) {
      std::vector<point> image(static_cast<std::size_t>(r));
      for (int i = 0; i < r; ++i) {
        image[i] = s.block(i)[pick[i]];
      }
      images_.push_back(std::move(image));
      int i = r - 1;
      while (i >= 0 && pick[i] == s.lambda(i) - 1) {
        pick[i--] = 0;
      }
      if (i < 0) {
        break;
      }
      ++pick[i];
    }
  }

  std::size_t kernel_count() const { return kernels_.size(); }
  std::size_t image_count() const { return images_.size(); }
  int group_degree() const { return s_.rank(); }

  // Kernel ki as a class-assignment vector: entry x is the class index.
  std::vector<point> const& kernel_assignment(std::size_t ki) const {
    return kernels_[ki];
  }
  std::vector<point> const& image(std::size_t ii) const { return images_[ii]; }

  transformation encode(std::size_t ki, std::size_t ii,
                        transformation const& perm) const {
    if (perm.degree() != s_.rank() || !perm.is_permutation()) {
      throw std::invalid_argument("encode: third component must be in S_r");
    }
    std::vector<point> const& assign = kernels_[ki];
    std::vector<point> const& image = images_[ii];
    std::vector<point> img(static_cast<std::size_t>(s_.degree()));
    for (int x = 0; x < s_.degree(); ++x) {
      img[x] = image[perm[assign[x]]];
    }
    return transformation(std::move(img));
  }

  struct decoded {
    std::size_t kernel_index;
    std::size_t image_index;
    transformation perm;
  };

  decoded decode(transformation const& f) const {
    int const r = s_.rank();
    if (f.degree() != s_.degree() || f.rank() != r || !classify_p(f, s_).in_p()) {
      throw std::invalid_argument("decode: element is not in the top class");
    }
    // The class of x is the class of the unique image point it shares a
    // kernel class of f with, i.e. the one with the same f-value.
    std::vector<int> class_of_value(static_cast<std::size_t>(s_.degree()), -1);
    for (int i = 0; i < r; ++i) {
      class_of_value[f[s_.image_point(i)]] = i;
    }
    std::vector<point> assign(static_cast<std::size_t>(s_.degree()));
    std::vector<point> image(static_cast<std::size_t>(r));
    std::vector<point> perm(static_cast<std::size_t>(r));
    for (int x = 0; x < s_.degree(); ++x) {
      assign[x] = static_cast<point>(class_of_value[f[x]]);
    }
    for (point v : f.image_set()) {
      image[s_.block_index_of(v)] = v;
    }
    for (int i = 0; i < r; ++i) {
      perm[i] = static_cast<point>(s_.block_index_of(f[s_.image_point(i)]));
    }
    auto kit = std::find(kernels_.begin(), kernels_.end(), assign);
    auto iit = std::find(images_.begin(), images_.end(), image);
    if (kit == kernels_.end() || iit == images_.end()) {
      throw std::logic_error("decode: unindexed kernel or image");
    }
    return decoded{static_cast<std::size_t>(kit - kernels_.begin()),
                   static_cast<std::size_t>(iit - images_.begin()),
                   transformation(std::move(perm))};
  }

  // All elements of the top class, in (kernel, image, permutation) order
  // with permutations lexicographic.
  std::vector<transformation> elements() const {
    std::vector<transformation> perms;
    for (transformation const& q : all_transformations(s_.rank())) {
      if (q.is_permutation()) {
        perms.push_back(q);
      }
    }
    std::vector<transformation> out;
    out.reserve(kernels_.size() * images_.size() * perms.size());
    for (std::size_t ki = 0; ki < kernels_.size(); ++ki) {
      for (std::size_t ii = 0; ii < images_.size(); ++ii) {
        for (transformation const& p : perms) {
          out.push_back(encode(ki, ii, p));
        }
      }
    }
    return out;
  }

 private:
  bool is_image_point(point x) const {
    auto const& im = s_.image();
    return std::binary_search(im.begin(), im.end(), x);
  }

  sandwich_element s_;
  std::vector<point> free_points_;
  std::vector<std::vector<point>> kernels_;  // class-assignment vectors
  std::vector<std::vector<point>> images_;   // transversals of ker(a)
};

inline rectangular_group top_rect_group(sandwich_element const& s) {
  return rectangular_group(s);
}

// e is a mididentity of the variant (f*e*g = f*g for all f, g) exactly when
// aea = a.
inline bool is_mididentity(transformation const& e, sandwich_element const& s) {
  if (e.degree() != s.degree()) {
    throw std::invalid_argument("is_mididentity: degree mismatch");
  }
  return compose(compose(s.a(), e), s.a()) == s.a();
}

// The regularity-preserving elements of P: exactly the top D-class
// D = { f in P : rank(f) = r }.
inline std::vector<transformation> rp_elements(sandwich_element const& s) {
  std::vector<transformation> out;
  for (transformation const& f : all_transformations(s.degree())) {
    if (f.rank() == s.rank() && classify_p(f, s).in_p()) {
      out.push_back(f);
    }
  }
  return out;
}

// Given f, g in P with the same projection to T_A and rank(f) <= m <= r,
// produces idempotents e1, e2 of the variant, both of rank m, with
// f = e1 * g * e2.  Follows the block-splitting construction: e2 collapses
// the unused classes of ker(a) onto the first one (via the padding set B)
// and e1 splits the kernel classes of f far enough to reach rank m.
inline std::pair<transformation, transformation> factor_between(
    transformation const& f, transformation const& g, int m,
    sandwich_element const& s) {
  if (!classify_p(f, s).in_p() || !classify_p(g, s).in_p()) {
    throw std::invalid_argument("factor_between: both elements must be regular");
  }
  if (phi(f, s) != phi(g, s)) {
    throw std::invalid_argument("factor_between: projections to T_A differ");
  }
  int const r = s.rank();
  int const l = f.rank();
  if (m < l || m > r) {
    throw std::invalid_argument("factor_between: need rank(f) <= m <= rank(a)");
  }
  int const n = s.degree();

  // Kernel classes F_1..F_l of f in canonical order, with image values f_s
  // and the index k_s of the class of ker(a) containing f_s.
  kernel_partition const ker_f = kernel_partition::of(f);
  int const classes = static_cast<int>(ker_f.block_count());
  std::vector<point> f_value(static_cast<std::size_t>(classes));
  std::vector<int> k_index(static_cast<std::size_t>(classes));
  std::vector<char> k_used(static_cast<std::size_t>(r), 0);
  for (int sidx = 0; sidx < classes; ++sidx) {
    f_value[sidx] = f[ker_f.block(sidx).front()];
    k_index[sidx] = s.block_index_of(f_value[sidx]);
    k_used[k_index[sidx]] = 1;
  }
  std::vector<int> complement;  // j_1 < ... < j_{r-l}
  for (int j = 0; j < r; ++j) {
    if (!k_used[j]) {
      complement.push_back(j);
    }
  }

  // e2: classes of ker(a) indexed k_s keep the image value f_s; the first
  // m - l unused classes keep their own image point; the rest (the padding
  // set B) collapse onto the class of k_1.
  std::vector<point> e2_img(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    int const b = s.block_index_of(static_cast<point>(x));
    point target = 0;
    bool assigned = false;
    for (int sidx = 0; sidx < classes && !assigned; ++sidx) {
      if (b == k_index[sidx]) {
        target = f_value[sidx];
        assigned = true;
      }
    }
    if (!assigned) {
      auto it = std::find(complement.begin(), complement.end(), b);
      std::size_t t = static_cast<std::size_t>(it - complement.begin());
      if (static_cast<int>(t) < m - l) {
        target = s.image_point(b);  // keeps its own class
      } else {
        target = f_value[0];  // padding set B joins the first class
      }
    }
    e2_img[x] = target;
  }
  transformation e2(std::move(e2_img));

  // e1: split each F_s into p_s parts, each holding one of the image points
  // of a lying in F_s, with sum p_s = m; all remaining points of F_s join
  // the first part.
  std::vector<std::vector<point>> a_points_in(static_cast<std::size_t>(classes));
  for (int i = 0; i < r; ++i) {
    point const ai = s.image_point(i);
    a_points_in[ker_f.block_of(ai)].push_back(ai);
  }
  std::vector<int> p_count(static_cast<std::size_t>(classes), 1);
  int extra = m - l;
  for (int sidx = 0; sidx < classes && extra > 0; ++sidx) {
    int const take = std::min<int>(extra, static_cast<int>(a_points_in[sidx].size()) - 1);
    p_count[sidx] += take;
    extra -= take;
  }
  if (extra != 0) {
    throw std::logic_error("factor_between: could not distribute rank surplus");
  }
  std::vector<point> e1_img(static_cast<std::size_t>(n));
  for (int sidx = 0; sidx < classes; ++sidx) {
    auto const& anchors = a_points_in[sidx];
    for (point x : ker_f.block(sidx)) {
      point target = anchors[0];
      for (int t = 1; t < p_count[sidx]; ++t) {
        if (x == anchors[t]) {
          target = anchors[t];
          break;
        }
      }
      e1_img[x] = target;
    }
  }
  transformation e1(std::move(e1_img));

  if (star(e1, e1, s) != e1 || star(e2, e2, s) != e2 || e1.rank() != m ||
      e2.rank() != m || star(star(e1, g, s), e2, s) != f) {
    throw std::logic_error("factor_between: construction check failed");
  }
  return {e1, e2};
}

namespace detail {
// Deterministic permutation components for a generating set of a
// rectangular group over S_r: a transposition, then (for r >= 3) the
// r-cycle, then identities.
inline transformation rect_group_perm(int r, std::size_t slot) {
  std::vector<point> img(static_cast<std::size_t>(r));
  std::iota(img.begin(), img.end(), point{0});
  if (slot == 0 && r >= 2) {
    std::swap(img[0], img[1]);
  } else if (slot == 1 && r >= 3) {
    for (int i = 0; i < r; ++i) {
      img[i] = static_cast<point>((i + 1) % r);
    }
  }
  return transformation(std::move(img));
}
}  // namespace detail

// A generating set of P = Reg(T_n^a) of the minimal size r^{n-r} + 1:
// r^{n-r} elements generating the top rectangular group (kernels paired
// with images round-robin, permutation components covering the generators
// of S_r) plus the lift of the map on A merging a_2 into a_1, which has
// rank r - 1.
inline std::vector<transformation> build_reg_generating_set(
    sandwich_element const& s) {
  int const r = s.rank();
  if (r <= 1 || r >= s.degree()) {
    throw std::invalid_argument("build_reg_generating_set: need 1 < rank(a) < n");
  }
  rectangular_group const rg(s);
  std::vector<transformation> out;
  out.reserve(rg.kernel_count() + 1);
  for (std::size_t ki = 0; ki < rg.kernel_count(); ++ki) {
    out.push_back(rg.encode(ki, ki % rg.image_count(),
                            detail::rect_group_perm(r, ki)));
  }
  std::vector<point> eps(static_cast<std::size_t>(r));
  std::iota(eps.begin(), eps.end(), point{0});
  eps[1] = 0;  // a_2 -> a_1
  out.push_back(lift_transformation(transformation(std::move(eps)), s));
  return out;
}

}  // namespace sandwich

#endif  // SANDWICH_REGULAR_HPP_
