#ifndef SANDWICH_SANDWICH_ELEMENT_HPP_
#define SANDWICH_SANDWICH_ELEMENT_HPP_

#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bignat.hpp"
#include "transformation.hpp"

namespace sandwich {

// The fixed sandwich element: an idempotent a of T_n together with its image
// A = {a_1 < ... < a_r}, its kernel classes aligned so that a_i lies in the
// i-th class, and the class sizes lambda_i.  Every structural formula in the
// library is phrased in terms of these data.
class sandwich_element {
 public:
  explicit sandwich_element(transformation a) : a_(std::move(a)) {
    if (!a_.is_idempotent()) {
      throw std::invalid_argument("sandwich element must be an idempotent");
    }
    image_ = a_.image_set();
    blocks_.resize(image_.size());
    block_of_.assign(static_cast<std::size_t>(a_.degree()), 0);
    for (int x = 0; x < a_.degree(); ++x) {
      point v = a_[x];
      std::size_t i = static_cast<std::size_t>(
          std::lower_bound(image_.begin(), image_.end(), v) - image_.begin());
      blocks_[i].push_back(static_cast<point>(x));
      block_of_[x] = static_cast<int>(i);
    }
    lambdas_.reserve(blocks_.size());
    for (auto const& b : blocks_) {
      lambdas_.push_back(static_cast<int>(b.size()));
    }
  }

  static sandwich_element parse(std::string const& text) {
    return sandwich_element(transformation::parse(text));
  }

  transformation const& a() const { return a_; }
  int degree() const { return a_.degree(); }
  int rank() const { return static_cast<int>(image_.size()); }

  // A = im(a), sorted.
  std::vector<point> const& image() const { return image_; }
  point image_point(int i) const { return image_[static_cast<std::size_t>(i)]; }

  // The i-th kernel class A_i (contains image_point(i)), sorted.
  std::vector<point> const& block(int i) const {
    return blocks_[static_cast<std::size_t>(i)];
  }
  std::vector<std::vector<point>> const& blocks() const { return blocks_; }

  // Index i with x in A_i.
  int block_index_of(point x) const { return block_of_[x]; }

  int lambda(int i) const { return lambdas_[static_cast<std::size_t>(i)]; }
  std::vector<int> const& lambdas() const { return lambdas_; }

  // Kernel of a in canonical (least-element) block order; note this order can
  // differ from the image-aligned order of block(i).
  kernel_partition kernel() const { return kernel_partition::of(a_); }

  // Lambda_I: the product of lambda_i over i in I (0-indexed); 1 for empty I.
  bignat lambda_product(std::vector<int> const& indices) const {
    bignat result = 1;
    for (int i : indices) {
      if (i < 0 || i >= rank()) {
        throw std::out_of_range("lambda_product: index out of range");
      }
      result *= lambdas_[static_cast<std::size_t>(i)];
    }
    return result;
  }

  // Lambda = lambda_1 * ... * lambda_r.
  bignat big_lambda() const {
    bignat result = 1;
    for (int l : lambdas_) {
      result *= l;
    }
    return result;
  }

 private:
  transformation a_;
  std::vector<point> image_;
  std::vector<std::vector<point>> blocks_;
  std::vector<int> lambdas_;
  std::vector<int> block_of_;
};

struct normalized_sandwich {
  sandwich_element element;
  transformation unit;  // permutation p with b * p idempotent
};

// Any b in T_n becomes an idempotent after composing with a suitable
// permutation p, and the variants by b and by b*p are isomorphic.  The
// choice of p is canonical: the image point of each kernel class of b is
// sent to the least element of that class, and the remaining points are
// matched in ascending order.
inline normalized_sandwich normalize_sandwich(transformation const& b) {
  int n = b.degree();
  kernel_partition ker = kernel_partition::of(b);
  std::vector<int> p(static_cast<std::size_t>(n), -1);
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  for (auto const& blk : ker.blocks()) {
    point image_of_block = b[blk.front()];
    point target = blk.front();  // least element of the class
    p[image_of_block] = target;
    used[target] = 1;
  }
  std::vector<point> free_targets;
  for (int x = 0; x < n; ++x) {
    if (!used[x]) {
      free_targets.push_back(static_cast<point>(x));
    }
  }
  std::size_t next = 0;
  std::vector<point> img(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    img[x] = p[x] >= 0 ? static_cast<point>(p[x]) : free_targets[next++];
  }
  transformation unit{std::move(img)};
  return normalized_sandwich{sandwich_element(compose(b, unit)), unit};
}

}  // namespace sandwich

#endif  // SANDWICH_SANDWICH_ELEMENT_HPP_
