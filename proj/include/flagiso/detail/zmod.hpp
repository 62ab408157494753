// Copyright 2026 The flagiso Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exact linear algebra over Z/mZ.

#ifndef FLAGISO_DETAIL_ZMOD_HPP
#define FLAGISO_DETAIL_ZMOD_HPP

#include <cstdint>
#include <numeric>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

namespace flagiso::detail {

inline std::int64_t mod(std::int64_t x, std::int64_t m) {
  x %= m;
  return x < 0 ? x + m : x;
}

inline std::int64_t lcm(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

/// Returns (g, s, t) with s*a + t*b = g = gcd(a, b), for a, b >= 0.
inline std::tuple<std::int64_t, std::int64_t, std::int64_t> ext_gcd(std::int64_t a,
                                                                    std::int64_t b) {
  std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
    std::tie(old_t, t) = std::make_pair(t, old_t - q * t);
  }
  return {old_r, old_s, old_t};
}

/// Like ext_gcd, but returns (a, 1, 0) whenever a divides b so that the pivot
/// row or column is left untouched.
inline std::tuple<std::int64_t, std::int64_t, std::int64_t> bezout(std::int64_t a,
                                                                   std::int64_t b) {
  if (a != 0 && b % a == 0) return {a, 1, 0};
  return ext_gcd(a, b);
}

/// Dense matrix over Z/mZ, row-major, entries kept in [0, m).
struct ZmodMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::int64_t> data;

  ZmodMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}
  std::int64_t& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

/// Solves A x = b (mod m) exactly, or reports infeasibility.
///
/// A is brought to diagonal form U A V = D by unimodular row and column
/// operations built from extended gcds; the 2x2 blocks [[s, t], [-b/g, a/g]]
/// have determinant 1 over Z, so they stay invertible modulo any m. The
/// diagonal system d_k y_k = (U b)_k is then solved one coordinate at a time
/// and x = V y. Free coordinates are set to 0.
inline std::optional<std::vector<std::int64_t>> solve_mod(ZmodMatrix a,
                                                          std::vector<std::int64_t> b,
                                                          std::int64_t m) {
  const std::size_t rows = a.rows, cols = a.cols;
  if (m == 1) return std::vector<std::int64_t>(cols, 0);
  for (auto& x : a.data) x = mod(x, m);
  for (auto& x : b) x = mod(x, m);

  ZmodMatrix v(cols, cols);
  for (std::size_t j = 0; j < cols; ++j) v(j, j) = 1;

  auto row_combine = [&](std::size_t p, std::size_t i, std::int64_t s, std::int64_t t,
                         std::int64_t u, std::int64_t w) {
    // row_p <- s*row_p + t*row_i ; row_i <- u*row_p + w*row_i
    for (std::size_t j = 0; j < cols; ++j) {
      std::int64_t x = a(p, j), y = a(i, j);
      a(p, j) = mod(s * x + t * y, m);
      a(i, j) = mod(u * x + w * y, m);
    }
    std::int64_t x = b[p], y = b[i];
    b[p] = mod(s * x + t * y, m);
    b[i] = mod(u * x + w * y, m);
  };
  auto col_combine = [&](std::size_t p, std::size_t j, std::int64_t s, std::int64_t t,
                         std::int64_t u, std::int64_t w) {
    for (std::size_t i = 0; i < rows; ++i) {
      std::int64_t x = a(i, p), y = a(i, j);
      a(i, p) = mod(s * x + t * y, m);
      a(i, j) = mod(u * x + w * y, m);
    }
    for (std::size_t i = 0; i < cols; ++i) {
      std::int64_t x = v(i, p), y = v(i, j);
      v(i, p) = mod(s * x + t * y, m);
      v(i, j) = mod(u * x + w * y, m);
    }
  };

  std::size_t rank = 0;
  for (; rank < rows && rank < cols; ++rank) {
    const std::size_t t = rank;
    // Pivot: smallest nonzero representative in the trailing block.
    std::optional<std::pair<std::size_t, std::size_t>> pivot;
    for (std::size_t i = t; i < rows; ++i) {
      for (std::size_t j = t; j < cols; ++j) {
        if (a(i, j) != 0 && (!pivot || a(i, j) < a(pivot->first, pivot->second))) {
          pivot = std::make_pair(i, j);
        }
      }
    }
    if (!pivot) break;
    if (pivot->first != t) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(t, j), a(pivot->first, j));
      std::swap(b[t], b[pivot->first]);
    }
    if (pivot->second != t) {
      for (std::size_t i = 0; i < rows; ++i) std::swap(a(i, t), a(i, pivot->second));
      for (std::size_t i = 0; i < cols; ++i) std::swap(v(i, t), v(i, pivot->second));
    }

    // The pivot representative strictly decreases whenever a pass changes
    // it, so this loop terminates.
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        auto [g, s, u] = bezout(a(t, t), a(i, t));
        std::int64_t p = a(t, t) / g, q = a(i, t) / g;
        row_combine(t, i, s, u, -q, p);
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        auto [g, s, u] = bezout(a(t, t), a(t, j));
        std::int64_t p = a(t, t) / g, q = a(t, j) / g;
        col_combine(t, j, s, u, -q, p);
      }
      for (std::size_t i = t + 1; i < rows && !dirty; ++i) dirty = a(i, t) != 0;
    }
    if (a(t, t) == 0) break;
  }

  std::vector<std::int64_t> y(cols, 0);
  for (std::size_t k = 0; k < rows; ++k) {
    std::int64_t d = (k < rank && k < cols) ? a(k, k) : 0;
    if (d == 0) {
      if (b[k] != 0) return std::nullopt;
      continue;
    }
    std::int64_t g = std::gcd(d, m);
    if (b[k] % g != 0) return std::nullopt;
    std::int64_t mg = m / g;
    auto [one, inv, unused] = ext_gcd(mod(d / g, mg), mg);
    (void)one;
    (void)unused;
    y[k] = mod((b[k] / g) % mg * mod(inv, mg), mg);
  }

  std::vector<std::int64_t> x(cols, 0);
  for (std::size_t i = 0; i < cols; ++i) {
    std::int64_t acc = 0;
    for (std::size_t j = 0; j < cols; ++j) acc = mod(acc + v(i, j) * y[j], m);
    x[i] = acc;
  }
  return x;
}

}  // namespace flagiso::detail

#endif  // FLAGISO_DETAIL_ZMOD_HPP
