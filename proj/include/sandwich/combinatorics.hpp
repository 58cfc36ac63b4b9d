#ifndef SANDWICH_COMBINATORICS_HPP_
#define SANDWICH_COMBINATORICS_HPP_

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "bignat.hpp"

namespace sandwich {

// S(n, m), Stirling numbers of the second kind, by the standard recurrence
// S(n, m) = m * S(n-1, m) + S(n-1, m-1).  S(0, 0) = 1 and S(n, m) = 0 for
// m > n or (n > 0, m = 0).
inline bignat stirling2(unsigned n, unsigned m) {
  if (m > n) {
    return 0;
  }
  if (n == 0) {
    return 1;  // m == 0 here
  }
  if (m == 0) {
    return 0;
  }
  std::vector<bignat> row(m + 1, 0);
  row[0] = 1;  // row for n' = 0
  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned j = std::min(i, m); j >= 1; --j) {
      row[j] = j * row[j] + row[j - 1];
    }
    row[0] = 0;
  }
  return row[m];
}

inline bignat binomial(unsigned n, unsigned k) {
  if (k > n) {
    return 0;
  }
  if (k > n - k) {
    k = n - k;
  }
  bignat result = 1;
  for (unsigned i = 0; i < k; ++i) {
    result *= n - i;
    result /= i + 1;  // exact at every step
  }
  return result;
}

inline bignat factorial(unsigned n) {
  bignat result = 1;
  for (unsigned i = 2; i <= n; ++i) {
    result *= i;
  }
  return result;
}

inline bignat bigpow(bignat const& base, unsigned exp) {
  bignat result = 1;
  bignat b = base;
  for (unsigned e = exp; e != 0; e >>= 1) {
    if (e & 1) {
      result *= b;
    }
    b *= b;
  }
  return result;
}

// Rank of the singular part of a full transformation semigroup of degree n:
// 2 for n = 2 and n(n-1)/2 for n >= 3.
inline std::uint64_t rho(unsigned n) {
  if (n < 2) {
    throw std::invalid_argument("rho: defined only for n >= 2");
  }
  if (n == 2) {
    return 2;
  }
  return static_cast<std::uint64_t>(n) * (n - 1) / 2;
}

// Elementary symmetric polynomials e_0..e_k of the given values, so
// e_m(lambda) = sum over all m-subsets I of the products prod_{i in I} x_i.
inline std::vector<bignat> elementary_symmetric(std::vector<int> const& values) {
  std::vector<bignat> e(values.size() + 1, 0);
  e[0] = 1;
  std::size_t used = 0;
  for (int v : values) {
    ++used;
    for (std::size_t m = std::min(used, e.size() - 1); m >= 1; --m) {
      e[m] += e[m - 1] * v;
    }
  }
  return e;
}

}  // namespace sandwich

#endif  // SANDWICH_COMBINATORICS_HPP_
