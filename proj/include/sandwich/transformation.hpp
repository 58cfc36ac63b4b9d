#ifndef SANDWICH_TRANSFORMATION_HPP_
#define SANDWICH_TRANSFORMATION_HPP_

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace sandwich {

// Points of the underlying set {1..n}, stored 0-indexed.  The degree is
// capped at 255 so a point always fits in one byte; text I/O is 1-indexed.
using point = std::uint8_t;
inline constexpr int max_degree = 255;

class transformation;
class kernel_partition;

// The degree up to which "enumerate all n^n transformations" operations are
// allowed to run.  Defaults to 5, may be raised via the SANDWICH_MAX_N
// environment variable or set_max_enumeration_degree, hard-capped at 7.
inline constexpr int enumeration_hard_cap = 7;

namespace detail {
inline int& enumeration_degree_ref() {
  static int value = [] {
    int v = 5;
    if (char const* env = std::getenv("SANDWICH_MAX_N")) {
      v = std::atoi(env);
      if (v < 1) {
        v = 5;
      }
    }
    return std::min(v, enumeration_hard_cap);
  }();
  return value;
}
}  // namespace detail

inline int max_enumeration_degree() { return detail::enumeration_degree_ref(); }

inline void set_max_enumeration_degree(int n) {
  if (n < 1 || n > enumeration_hard_cap) {
    throw std::invalid_argument("enumeration guard must be between 1 and 7");
  }
  detail::enumeration_degree_ref() = n;
}

inline void check_enumeration_degree(int n) {
  if (n > max_enumeration_degree()) {
    throw std::length_error("enumeration of all transformations of degree " +
                            std::to_string(n) + " exceeds the guard (" +
                            std::to_string(max_enumeration_degree()) +
                            "); raise via SANDWICH_MAX_N or --max-n");
  }
}

// A total map on {1..n} in one-line notation: entry x holds the image of x.
class transformation {
 public:
  transformation() = default;

  explicit transformation(std::vector<point> images) : img_(std::move(images)) {
    validate();
  }

  // From 1-indexed images, the notation used in all text I/O.
  static transformation from_one_indexed(std::vector<int> const& images) {
    std::vector<point> img;
    img.reserve(images.size());
    for (int v : images) {
      if (v < 1 || v > static_cast<int>(images.size())) {
        throw std::invalid_argument("transformation entry out of range 1..n");
      }
      img.push_back(static_cast<point>(v - 1));
    }
    return transformation(std::move(img));
  }

  static transformation identity(int n) {
    std::vector<point> img(n);
    std::iota(img.begin(), img.end(), point{0});
    return transformation(std::move(img));
  }

  static transformation constant(int n, point value) {
    if (value >= n) {
      throw std::invalid_argument("constant value out of range");
    }
    return transformation(std::vector<point>(n, value));
  }

  // Accepts "[1,2,3,3]" or "1,2,3,3"; whitespace is ignored.
  static transformation parse(std::string const& text) {
    std::vector<int> images;
    std::string body;
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) {
        body += c;
      }
    }
    if (!body.empty() && body.front() == '[') {
      if (body.back() != ']') {
        throw std::invalid_argument("unterminated '[' in transformation literal");
      }
      body = body.substr(1, body.size() - 2);
    }
    if (body.empty()) {
      throw std::invalid_argument("empty transformation literal");
    }
    std::istringstream in(body);
    std::string item;
    while (std::getline(in, item, ',')) {
      std::size_t pos = 0;
      int v = std::stoi(item, &pos);
      if (pos != item.size()) {
        throw std::invalid_argument("bad transformation entry: " + item);
      }
      images.push_back(v);
    }
    return from_one_indexed(images);
  }

  int degree() const { return static_cast<int>(img_.size()); }

  point operator[](int x) const { return img_[static_cast<std::size_t>(x)]; }

  std::vector<point> const& images() const { return img_; }

  // Sorted set of image points.
  std::vector<point> image_set() const {
    std::vector<point> im = img_;
    std::sort(im.begin(), im.end());
    im.erase(std::unique(im.begin(), im.end()), im.end());
    return im;
  }

  int rank() const { return static_cast<int>(image_set().size()); }

  bool is_permutation() const { return rank() == degree(); }

  bool is_idempotent() const {
    for (int x = 0; x < degree(); ++x) {
      if (img_[img_[x]] != img_[x]) {
        return false;
      }
    }
    return true;
  }

  // Canonical signature of the kernel: entry x holds the least point with the
  // same image as x.  Two maps have equal kernels iff equal signatures.
  std::vector<point> kernel_signature() const {
    std::vector<point> first(degree(), point(max_degree));
    std::vector<point> sig(degree());
    for (int x = 0; x < degree(); ++x) {
      point v = img_[x];
      if (first[v] == point(max_degree)) {
        first[v] = static_cast<point>(x);
      }
      sig[x] = first[v];
    }
    return sig;
  }

  std::string to_string() const {
    std::string out = "[";
    for (int x = 0; x < degree(); ++x) {
      if (x > 0) {
        out += ',';
      }
      out += std::to_string(img_[x] + 1);
    }
    out += ']';
    return out;
  }

  friend bool operator==(transformation const& a, transformation const& b) {
    return a.img_ == b.img_;
  }
  friend bool operator!=(transformation const& a, transformation const& b) {
    return !(a == b);
  }
  friend bool operator<(transformation const& a, transformation const& b) {
    return a.img_ < b.img_;
  }

 private:
  void validate() const {
    if (img_.size() > max_degree) {
      throw std::invalid_argument("transformation degree exceeds 255");
    }
    for (point v : img_) {
      if (v >= img_.size()) {
        throw std::invalid_argument("transformation entry out of range 1..n");
      }
    }
  }

  std::vector<point> img_;
};

// Left-to-right composition: x(fg) = (xf)g, so f acts first.
inline transformation compose(transformation const& f, transformation const& g) {
  if (f.degree() != g.degree()) {
    throw std::invalid_argument("compose: degree mismatch");
  }
  std::vector<point> img(static_cast<std::size_t>(f.degree()));
  for (int x = 0; x < f.degree(); ++x) {
    img[x] = g[f[x]];
  }
  return transformation(std::move(img));
}

inline transformation operator*(transformation const& f, transformation const& g) {
  return compose(f, g);
}

// The partition of {1..n} into preimage classes, in canonical form: each
// block sorted ascending, blocks ordered by least element.  Equality of
// partitions is structural equality of this form.
class kernel_partition {
 public:
  kernel_partition(int n, std::vector<std::vector<point>> blocks)
      : n_(n), blocks_(std::move(blocks)) {
    canonicalize_and_validate();
  }

  static kernel_partition of(transformation const& f) {
    std::vector<std::vector<point>> blocks(static_cast<std::size_t>(f.degree()));
    for (int x = 0; x < f.degree(); ++x) {
      blocks[f[x]].push_back(static_cast<point>(x));
    }
    blocks.erase(std::remove_if(blocks.begin(), blocks.end(),
                                [](auto const& b) { return b.empty(); }),
                 blocks.end());
    return kernel_partition(f.degree(), std::move(blocks));
  }

  int degree() const { return n_; }
  std::size_t block_count() const { return blocks_.size(); }
  std::vector<std::vector<point>> const& blocks() const { return blocks_; }
  std::vector<point> const& block(std::size_t i) const { return blocks_[i]; }

  // Index of the block containing x.
  std::size_t block_of(point x) const {
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
      if (std::binary_search(blocks_[i].begin(), blocks_[i].end(), x)) {
        return i;
      }
    }
    throw std::out_of_range("kernel_partition::block_of");
  }

  // True when every block contains at most one element of the sorted set B.
  bool separates(std::vector<point> const& sorted_set) const {
    for (auto const& b : blocks_) {
      int hits = 0;
      for (point x : b) {
        if (std::binary_search(sorted_set.begin(), sorted_set.end(), x)) {
          ++hits;
        }
      }
      if (hits > 1) {
        return false;
      }
    }
    return true;
  }

  // True when every block contains at least one element of the sorted set B.
  bool saturated_by(std::vector<point> const& sorted_set) const {
    for (auto const& b : blocks_) {
      bool hit = false;
      for (point x : b) {
        if (std::binary_search(sorted_set.begin(), sorted_set.end(), x)) {
          hit = true;
          break;
        }
      }
      if (!hit) {
        return false;
      }
    }
    return true;
  }

  // "({1}|{2}|{3,4})", 1-indexed.
  std::string to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
      if (i > 0) {
        out += '|';
      }
      out += '{';
      for (std::size_t j = 0; j < blocks_[i].size(); ++j) {
        if (j > 0) {
          out += ',';
        }
        out += std::to_string(blocks_[i][j] + 1);
      }
      out += '}';
    }
    out += ')';
    return out;
  }

  friend bool operator==(kernel_partition const& a, kernel_partition const& b) {
    return a.n_ == b.n_ && a.blocks_ == b.blocks_;
  }
  friend bool operator!=(kernel_partition const& a, kernel_partition const& b) {
    return !(a == b);
  }

 private:
  void canonicalize_and_validate() {
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    std::size_t total = 0;
    for (auto& b : blocks_) {
      if (b.empty()) {
        throw std::invalid_argument("kernel_partition: empty block");
      }
      std::sort(b.begin(), b.end());
      for (point x : b) {
        if (x >= n_ || seen[x]) {
          throw std::invalid_argument("kernel_partition: blocks must partition 1..n");
        }
        seen[x] = 1;
        ++total;
      }
    }
    if (total != static_cast<std::size_t>(n_)) {
      throw std::invalid_argument("kernel_partition: blocks must cover 1..n");
    }
    std::sort(blocks_.begin(), blocks_.end(),
              [](auto const& a, auto const& b) { return a.front() < b.front(); });
  }

  int n_;
  std::vector<std::vector<point>> blocks_;
};

inline kernel_partition kernel(transformation const& f) {
  return kernel_partition::of(f);
}

// All n^n transformations of degree n in lexicographic order of their image
// sequences.  Guarded: see max_enumeration_degree().
inline std::vector<transformation> all_transformations(int n) {
  check_enumeration_degree(n);
  std::vector<transformation> out;
  std::size_t count = 1;
  for (int i = 0; i < n; ++i) {
    count *= static_cast<std::size_t>(n);
  }
  out.reserve(count);
  std::vector<point> img(static_cast<std::size_t>(n), 0);
  while (true) {
    out.emplace_back(img);
    int i = n - 1;
    while (i >= 0 && img[i] == n - 1) {
      img[i] = 0;
      --i;
    }
    if (i < 0) {
      break;
    }
    ++img[i];
  }
  return out;
}

}  // namespace sandwich

template <>
struct std::hash<sandwich::transformation> {
  std::size_t operator()(sandwich::transformation const& f) const noexcept {
    // FNV-1a over the image bytes.
    std::size_t h = 1469598103934665603ULL;
    for (sandwich::point v : f.images()) {
      h ^= v;
      h *= 1099511628211ULL;
    }
    h ^= static_cast<std::size_t>(f.degree());
    h *= 1099511628211ULL;
    return h;
  }
};

#endif  // SANDWICH_TRANSFORMATION_HPP_
