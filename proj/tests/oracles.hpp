#pragma once

// Slow, independent reference computations used only by the tests.

#include "twoloop/algebra.hpp"
#include "twoloop/rational.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

namespace oracle {

using twoloop::ExponentTriple;
using twoloop::Rational;
using Dense = std::vector<std::vector<Rational>>;

// Leibniz expansion over all permutations.
inline Rational determinant(const Dense& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  Rational det;
  do {
    int sign = 1;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (p[i] > p[j]) sign = -sign;
      }
    }
    Rational term = sign;
    for (std::size_t i = 0; i < n; ++i) term *= m[i][p[i]];
    det += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return det;
}

inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> mask(n, false);
  std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask[i]) s.push_back(i);
    }
    out.push_back(s);
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return out;
}

// Largest k with a nonzero k x k minor.
inline std::size_t rank_by_minors(const Dense& m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m.front().size();
  for (std::size_t k = std::min(rows, cols); k > 0; --k) {
    for (const auto& rs : subsets(rows, k)) {
      for (const auto& cs : subsets(cols, k)) {
        Dense sub(k, std::vector<Rational>(k));
        for (std::size_t i = 0; i < k; ++i) {
          for (std::size_t j = 0; j < k; ++j) sub[i][j] = m[rs[i]][cs[j]];
        }
        if (!determinant(sub).is_zero()) return k;
      }
    }
  }
  return 0;
}

// Bubble sort of a word over {1,2,3}, one sign flip per swap of distinct letters.
inline std::pair<ExponentTriple, int> bubble_normalize(std::vector<int> w, bool odd) {
  int sign = 1;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = 0; j + 1 < w.size() - i; ++j) {
      if (w[j] > w[j + 1]) {
        std::swap(w[j], w[j + 1]);
        if (odd) sign = -sign;
      }
    }
  }
  ExponentTriple e;
  for (int x : w) ++e.k[static_cast<std::size_t>(x - 1)];
  return {e, sign};
}

inline std::vector<int> word_of(const ExponentTriple& e) {
  std::vector<int> w;
  for (int v = 1; v <= 3; ++v) w.insert(w.end(), e[static_cast<std::size_t>(v - 1)], v);
  return w;
}

// Orbit sum built from words: rename letters, bubble-sort, weight by the
// permutation sign in the antisymmetric case.
inline std::map<ExponentTriple, std::int64_t> orbit_sum(const ExponentTriple& e, bool odd,
                                                        bool anti) {
  std::map<ExponentTriple, std::int64_t> sum;
  std::array<int, 3> p{1, 2, 3};
  do {
    int psign = 1;
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) {
        if (p[static_cast<std::size_t>(i)] > p[static_cast<std::size_t>(j)]) psign = -psign;
      }
    }
    std::vector<int> w;
    for (int x : word_of(e)) w.push_back(p[static_cast<std::size_t>(x - 1)]);
    const auto [img, s] = bubble_normalize(w, odd);
    sum[img] += s * (anti ? psign : 1);
  } while (std::next_permutation(p.begin(), p.end()));
  std::erase_if(sum, [](const auto& kv) { return kv.second == 0; });
  return sum;
}

// Sorted triples of the given degree whose orbit sum survives.
inline std::size_t surviving_orbits(unsigned degree, bool odd, bool anti) {
  std::size_t n = 0;
  for (unsigned a = 0; a <= degree; ++a) {
    for (unsigned b = 0; b <= a && a + b <= degree; ++b) {
      const unsigned c = degree - a - b;
      if (c > b) continue;
      if (!orbit_sum({a, b, c}, odd, anti).empty()) ++n;
    }
  }
  return n;
}

inline std::size_t partitions_into_three(unsigned d) {
  std::size_t n = 0;
  for (unsigned a = 0; a <= d; ++a) {
    for (unsigned b = 0; b <= a; ++b) {
      if (a + b <= d && d - a - b <= b) ++n;
    }
  }
  return n;
}

// Power series of num / prod (1 + s_i t^p_i), each factor inverted as a
// geometric series.
inline std::vector<std::int64_t> geometric_expand(
    const std::vector<std::pair<std::int64_t, unsigned>>& numerator,
    const std::vector<std::pair<int, unsigned>>& factors, unsigned kmax) {
  std::vector<std::int64_t> series(kmax + 1, 0);
  for (const auto& [c, p] : numerator) {
    if (p <= kmax) series[p] += c;
  }
  for (const auto& [s, p] : factors) {
    std::vector<std::int64_t> inv(kmax + 1, 0);
    std::int64_t coeff = 1;
    for (unsigned n = 0; n * p <= kmax; ++n) {
      inv[n * p] = coeff;
      coeff *= -s;
    }
    std::vector<std::int64_t> next(kmax + 1, 0);
    for (unsigned i = 0; i <= kmax; ++i) {
      for (unsigned j = 0; i + j <= kmax; ++j) next[i + j] += series[i] * inv[j];
    }
    series = next;
  }
  return series;
}

}  // namespace oracle
