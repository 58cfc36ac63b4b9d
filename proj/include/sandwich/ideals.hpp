#ifndef SANDWICH_IDEALS_HPP_
#define SANDWICH_IDEALS_HPP_

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "combinatorics.hpp"
#include "engine.hpp"
#include "idemgen.hpp"
#include "regular.hpp"
#include "sandwich_element.hpp"
#include "transformation.hpp"
#include "variant.hpp"

namespace sandwich {

// The m-th member of the ideal chain of P = Reg(T_n^a):
// I_m^a = { f in P : rank(f) <= m }.
struct ideal_descriptor {
  int m = 0;
  std::vector<transformation> elements;  // lexicographic order
};

inline ideal_descriptor ideal(int m, sandwich_element const& s) {
  if (m < 1 || m > s.rank()) {
    throw std::invalid_argument("ideal: need 1 <= m <= rank(a)");
  }
  ideal_descriptor out;
  out.m = m;
  for (transformation const& f : all_transformations(s.degree())) {
    if (f.rank() <= m && classify_p(f, s).in_p()) {
      out.elements.push_back(f);
    }
  }
  return out;
}

// rank = idrank of the proper ideal I_m^a: n for m = 1 and m^{n-r} S(r,m)
// for 1 < m < r.  The top ideal I_r^a = P is reported separately (its rank
// is r^{n-r} + 1, not of this form).
inline bignat ideal_rank_formula(int m, sandwich_element const& s) {
  int const r = s.rank();
  unsigned const n = static_cast<unsigned>(s.degree());
  if (m == 1) {
    return n;
  }
  if (m <= 1 || m >= r) {
    throw std::invalid_argument("ideal_rank_formula: need 1 <= m < rank(a)");
  }
  return bigpow(m, n - static_cast<unsigned>(r)) *
         stirling2(static_cast<unsigned>(r), static_cast<unsigned>(m));
}

// The baseline for the full transformation semigroup on r points: the ideal
// of rank at most m has rank = idrank S(r,m) for 1 < m < r, and r for m = 1.
inline bignat tx_ideal_rank(int m, int r) {
  if (m == 1) {
    return r;
  }
  if (m <= 1 || m >= r) {
    throw std::invalid_argument("tx_ideal_rank: need 1 <= m < r");
  }
  return stirling2(static_cast<unsigned>(r), static_cast<unsigned>(m));
}

namespace detail {

// Set partitions of {0..r-1} into exactly m blocks, as restricted-growth
// strings in ascending order; each partition is returned as blocks in
// least-element order.
inline std::vector<std::vector<std::vector<point>>> set_partitions(int r, int m) {
  std::vector<std::vector<std::vector<point>>> out;
  std::vector<int> rgs(static_cast<std::size_t>(r), 0);
  auto emit = [&] {
    int blocks = *std::max_element(rgs.begin(), rgs.end()) + 1;
    if (blocks != m) {
      return;
    }
    std::vector<std::vector<point>> part(static_cast<std::size_t>(m));
    for (int x = 0; x < r; ++x) {
      part[rgs[x]].push_back(static_cast<point>(x));
    }
    out.push_back(std::move(part));
  };
  // iterate restricted growth strings
  while (true) {
    emit();
    int i = r - 1;
    while (i > 0) {
      int prefix_max = 0;
      for (int j = 0; j < i; ++j) {
        prefix_max = std::max(prefix_max, rgs[j]);
      }
      if (rgs[i] <= prefix_max) {
        break;
      }
      --i;
    }
    if (i == 0) {
      break;
    }
    ++rgs[i];
    std::fill(rgs.begin() + i + 1, rgs.end(), 0);
  }
  return out;
}

// All transversal images of a partition: one point per block, as sorted
// m-subsets in mixed-radix order.
inline std::vector<std::vector<point>> transversals(
    std::vector<std::vector<point>> const& blocks) {
  std::vector<std::vector<point>> out;
  std::vector<std::size_t> pick(blocks.size(), 0);
  while (true) {
    std::vector<point> choice;
    choice.reserve(blocks.size());
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      choice.push_back(blocks[b][pick[b]]);
    }
    std::sort(choice.begin(), choice.end());
    out.push_back(std::move(choice));
    int b = static_cast<int>(blocks.size()) - 1;
    while (b >= 0 && pick[b] == blocks[b].size() - 1) {
      pick[b--] = 0;
    }
    if (b < 0) {
      break;
    }
    ++pick[b];
  }
  return out;
}

// The rank-m idempotent of T_r with the given kernel blocks and transversal
// image: each block maps to its image point.
inline transformation partition_idempotent(int r,
                                           std::vector<std::vector<point>> const& blocks,
                                           std::vector<point> const& image) {
  std::vector<point> img(static_cast<std::size_t>(r));
  for (auto const& block : blocks) {
    point target = 0;
    bool found = false;
    for (point x : block) {
      if (std::binary_search(image.begin(), image.end(), x) ||
          std::find(image.begin(), image.end(), x) != image.end()) {
        target = x;
        found = true;
        break;
      }
    }
    if (!found) {
      throw std::invalid_argument("partition_idempotent: image is not a transversal");
    }
    for (point x : block) {
      img[x] = target;
    }
  }
  return transformation(std::move(img));
}

}  // namespace detail

// A minimal idempotent generating set V of the ideal { f in T_r :
// rank(f) <= m } for 1 < m < r: one rank-m idempotent per kernel (S(r,m)
// of them), images assigned by a usage-balanced greedy sweep and certified
// by a closure check, with depth-first backtracking over image choices when
// the greedy assignment fails to generate.
inline std::vector<transformation> tx_ideal_idempotent_genset(int r, int m) {
  if (m <= 1 || m >= r) {
    throw std::invalid_argument("tx_ideal_idempotent_genset: need 1 < m < r");
  }
  check_enumeration_degree(r);
  auto const partitions = detail::set_partitions(r, m);
  std::vector<std::vector<std::vector<point>>> options;  // per partition
  for (auto const& part : partitions) {
    options.push_back(detail::transversals(part));
  }
  // target: every element of T_r of rank <= m
  std::size_t target_size = 0;
  for (transformation const& f : all_transformations(r)) {
    if (f.rank() <= m) {
      ++target_size;
    }
  }
  auto generates_ideal = [&](std::vector<transformation> const& gens) {
    auto table = semigroup_table<transformation>::closure(gens, [](auto const& f, auto const& g) {
      return compose(f, g);
    });
    return table.size() == target_size;
  };

  std::vector<transformation> chosen(partitions.size(), transformation::identity(r));
  std::map<std::vector<point>, int> usage;
  std::size_t attempts = 0;
  // Depth-first over per-kernel image choices; at each kernel the choices
  // are tried in (current usage, lexicographic) order, so the first leaf is
  // the balanced greedy assignment.
  std::function<bool(std::size_t)> assign = [&](std::size_t k) -> bool {
    if (k == partitions.size()) {
      ++attempts;
      if (attempts > 100000) {
        throw std::runtime_error("tx_ideal_idempotent_genset: search limit exceeded");
      }
      return generates_ideal(chosen);
    }
    std::vector<std::vector<point>> order = options[k];
    std::stable_sort(order.begin(), order.end(),
                     [&](auto const& x, auto const& y) { return usage[x] < usage[y]; });
    for (auto const& image : order) {
      chosen[k] = detail::partition_idempotent(r, partitions[k], image);
      ++usage[image];
      if (assign(k + 1)) {
        return true;
      }
      --usage[image];
    }
    return false;
  };
  if (!assign(0)) {
    throw std::logic_error("tx_ideal_idempotent_genset: no assignment generates");
  }
  return chosen;
}

// An idempotent generating set of I_m^a of the minimal size m^{n-r} S(r,m):
// for m = 1 the n constants; for 1 < m < r, each member v of a minimal
// generating set of the T_A ideal lifts to the m^{n-r} x Lambda_I band of
// sandwich-idempotents over its H-class, generated by m^{n-r} members with
// images assigned round-robin.
inline std::vector<transformation> build_ideal_generating_set(
    int m, sandwich_element const& s) {
  int const r = s.rank();
  int const n = s.degree();
  if (m == 1) {
    std::vector<transformation> out;
    for (int x = 0; x < n; ++x) {
      out.push_back(transformation::constant(n, static_cast<point>(x)));
    }
    return out;
  }
  if (m <= 1 || m >= r) {
    throw std::invalid_argument("build_ideal_generating_set: need 1 <= m < rank(a)");
  }
  std::vector<transformation> out;
  for (transformation const& v : tx_ideal_idempotent_genset(r, m)) {
    // v partitions {0..r-1}; list its blocks in least-element order together
    // with the image index of each block.
    kernel_partition const ker_v = kernel_partition::of(v);
    int const blocks = static_cast<int>(ker_v.block_count());
    std::vector<point> image_index(static_cast<std::size_t>(blocks));
    for (int t = 0; t < blocks; ++t) {
      image_index[t] = v[ker_v.block(t).front()];
    }
    // Kernels: class index for every point of {1..n}; the A-points follow v,
    // the remaining n-r points run through a mixed-radix counter.
    std::vector<point> base_assign(static_cast<std::size_t>(n), 0);
    std::vector<point> free_points;
    {
      std::vector<char> is_a(static_cast<std::size_t>(n), 0);
      for (int i = 0; i < r; ++i) {
        base_assign[s.image_point(i)] =
            static_cast<point>(ker_v.block_of(static_cast<point>(i)));
        is_a[s.image_point(i)] = 1;
      }
      for (int x = 0; x < n; ++x) {
        if (!is_a[x]) {
          free_points.push_back(static_cast<point>(x));
        }
      }
    }
    // Images: one point b_t from the class of ker(a) holding image_index[t].
    std::vector<std::vector<point>> image_choices;
    {
      std::vector<std::vector<point>> pools;
      for (int t = 0; t < blocks; ++t) {
        pools.push_back(s.block(image_index[t]));
      }
      std::vector<std::size_t> pick(pools.size(), 0);
      while (true) {
        std::vector<point> b(static_cast<std::size_t>(blocks));
        for (int t = 0; t < blocks; ++t) {
          b[t] = pools[t][pick[t]];
        }
        image_choices.push_back(std::move(b));
        int t = blocks - 1;
        while (t >= 0 && pick[t] == pools[t].size() - 1) {
          pick[t--] = 0;
        }
        if (t < 0) {
          break;
        }
        ++pick[t];
      }
    }
    // Enumerate the m^{n-r} kernels and pair round-robin with images.
    std::vector<int> digits(free_points.size(), 0);
    std::size_t kernel_counter = 0;
    while (true) {
      std::vector<point> assign = base_assign;
      for (std::size_t i = 0; i < free_points.size(); ++i) {
        assign[free_points[i]] = static_cast<point>(digits[i]);
      }
      std::vector<point> const& b = image_choices[kernel_counter % image_choices.size()];
      std::vector<point> img(static_cast<std::size_t>(n));
      for (int x = 0; x < n; ++x) {
        img[x] = b[assign[x]];
      }
      out.emplace_back(std::move(img));
      ++kernel_counter;
      int i = static_cast<int>(free_points.size()) - 1;
      while (i >= 0 && digits[i] == m - 1) {
        digits[i--] = 0;
      }
      if (i < 0) {
        break;
      }
      ++digits[i];
    }
  }
  return out;
}

}  // namespace sandwich

#endif  // SANDWICH_IDEALS_HPP_
