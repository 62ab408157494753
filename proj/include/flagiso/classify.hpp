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

// Classification of degree tuples for fixed (G, m, D) up to isomorphism of
// the algebras A(D,m,g).
//
// Two tuples give isomorphic algebras iff one is obtained from the other by
//   g_i -> g_{sigma(i)} h_{sigma(i)} g
// with sigma block preserving, h_i in supp D and g an admissible shift
// ([g^-1]D[g] isomorphic to D). The canonical form is the lexicographically
// smallest tuple (element index order) reachable this way.

#ifndef FLAGISO_CLASSIFY_HPP
#define FLAGISO_CLASSIFY_HPP

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <variant>
#include <vector>

#include "flagiso/algebra.hpp"
#include "flagiso/division.hpp"
#include "flagiso/error.hpp"
#include "flagiso/group.hpp"
#include "flagiso/iso.hpp"
#include "flagiso/presentation.hpp"

namespace flagiso {

/// Largest number of tuples enumerate() visits unless told otherwise.
inline constexpr std::uint64_t kDefaultTupleBudget = 1'000'000;
/// Largest number of iso_algebras calls spent on cross-checking a table.
inline constexpr std::uint64_t kDefaultCrossCheckBudget = 2'000;

/// `fallback`, or the value of FLAGISO_BUDGET when it is set.
inline std::uint64_t budget_from_env(std::uint64_t fallback) {
  const char* raw = std::getenv("FLAGISO_BUDGET");
  if (raw == nullptr || *raw == '\0') return fallback;
  char* end = nullptr;
  unsigned long long v = std::strtoull(raw, &end, 10);
  if (*end != '\0' || raw[0] == '-' || v == 0) {
    throw Error(ErrorCode::kInvalidInput, "FLAGISO_BUDGET must be a positive integer, got '" +
                                              std::string(raw) + "'");
  }
  return v;
}

/// Precomputed canonical-form machinery for one (D, m).
class Canonicalizer {
 public:
  Canonicalizer(GradedDivisionAlgebra d, BlockShape shape)
      : division_(std::move(d)), shape_(std::move(shape)) {
    const Group& g = division_.group();
    const Subgroup& h = division_.support();
    for (Elem s : g.elements()) {
      if (!iso_division(shift_conjugate(division_, s), division_)) continue;
      shifts_.push_back(s);
      // min over h in H of x h s, for every x.
      std::vector<Elem> row;
      for (Elem x : g.elements()) {
        Elem best = g.mul(g.mul(x, h.at(0)), s);
        for (Elem y : h.members()) best = std::min(best, g.mul(g.mul(x, y), s));
        row.push_back(best);
      }
      min_image_.push_back(std::move(row));
    }
  }

  const GradedDivisionAlgebra& division() const { return division_; }
  const BlockShape& shape() const { return shape_; }
  /// Shifts g with [g^-1]D[g] isomorphic to D, in index order.
  const std::vector<Elem>& admissible_shifts() const { return shifts_; }

  std::vector<Elem> canonical(const std::vector<Elem>& tuple) const {
    if (tuple.size() != shape_.n()) {
      throw Error(ErrorCode::kLengthMismatch, "tuple length does not match the block shape");
    }
    for (Elem x : tuple) division_.group().check(x);
    std::vector<Elem> best, cur(tuple.size());
    for (std::size_t s = 0; s < shifts_.size(); ++s) {
      for (std::size_t i = 0; i < tuple.size(); ++i) cur[i] = min_image_[s][tuple[i].index];
      for (std::size_t b = 0; b < shape_.num_blocks(); ++b) {
        std::sort(cur.begin() + shape_.block_begin(b), cur.begin() + shape_.block_end(b));
      }
      if (best.empty() || cur < best) best = cur;
    }
    return best;
  }

 private:
  GradedDivisionAlgebra division_;
  BlockShape shape_;
  std::vector<Elem> shifts_;
  std::vector<std::vector<Elem>> min_image_;
};

inline std::vector<Elem> canonical_form(const FlagPresentation& p) {
  return Canonicalizer(p.division(), p.shape()).canonical(p.tuple());
}

struct ClassTable {
  std::string group;
  std::vector<int> blocks;
  std::string division;
  std::uint64_t tuples = 0;
  std::vector<std::vector<Elem>> representatives;  // sorted lexicographically
  std::vector<std::uint64_t> orbit_sizes;          // parallel to representatives
  bool cross_checked = false;

  std::size_t count() const { return representatives.size(); }
};

inline std::string division_descriptor(const GradedDivisionAlgebra& d) {
  if (d.is_trivial()) return "trivial";
  const Group& g = d.group();
  std::string out = "twisted[support={";
  for (std::size_t p = 0; p < d.support().size(); ++p) out += (p ? "," : "") + g.name(d.support().at(p));
  return out + "},m=" + std::to_string(d.cocycle().order()) + "]";
}

namespace detail {

inline std::uint64_t checked_power(std::uint64_t base, std::size_t exp, std::uint64_t cap) {
  std::uint64_t out = 1;
  for (std::size_t k = 0; k < exp; ++k) {
    if (out > cap / std::max<std::uint64_t>(base, 1)) return cap + 1;
    out *= base;
  }
  return out;
}

inline std::vector<Elem> tuple_at(const Group& g, std::size_t n, std::uint64_t code) {
  std::vector<Elem> t(n);
  for (std::size_t i = n; i-- > 0;) {
    t[i] = g.at(code % g.size());
    code /= g.size();
  }
  return t;
}

}  // namespace detail

struct EnumerateOptions {
  std::uint64_t budget = kDefaultTupleBudget;
  std::uint64_t cross_check_budget = kDefaultCrossCheckBudget;
  unsigned threads = 1;
};

/// All |G|^n tuples, bucketed by canonical form. The output does not
/// depend on the thread count. When the number of iso_algebras calls fits
/// the cross-check budget, every tuple is checked Isomorphic to its
/// representative and every pair of representatives NotIsomorphic; a
/// disagreement is an internal error.
inline ClassTable enumerate(const Group& g, const std::vector<int>& blocks,
                            const GradedDivisionAlgebra& d, const EnumerateOptions& options = {}) {
  if (!(d.group() == g)) throw Error(ErrorCode::kGroupMismatch, "division algebra is graded by another group");
  Canonicalizer canon(d, BlockShape(blocks));
  const std::size_t n = canon.shape().n();
  const std::uint64_t total = detail::checked_power(g.size(), n, options.budget);
  if (total > options.budget) {
    throw Error(ErrorCode::kBudgetExceeded, std::to_string(g.size()) + "^" + std::to_string(n) +
                                                " tuples exceed the budget of " +
                                                std::to_string(options.budget));
  }

  using Bucket = std::map<std::vector<Elem>, std::uint64_t>;
  const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, 64));
  std::vector<Bucket> partial(threads);
  auto work = [&](unsigned t) {
    for (std::uint64_t code = t; code < total; code += threads) {
      ++partial[t][canon.canonical(detail::tuple_at(g, n, code))];
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  Bucket merged;
  for (const auto& part : partial) {
    for (const auto& [rep, c] : part) merged[rep] += c;
  }

  ClassTable table{g.descriptor(), blocks, division_descriptor(d), total, {}, {}, false};
  for (const auto& [rep, c] : merged) {
    table.representatives.push_back(rep);
    table.orbit_sizes.push_back(c);
  }

  const std::uint64_t classes = table.count();
  const std::uint64_t calls = total + classes * (classes - 1) / 2;
  if (calls <= options.cross_check_budget) {
    std::vector<GradedAlgebra> reps;
    for (const auto& rep : table.representatives) {
      reps.push_back(realize(FlagPresentation(d, canon.shape(), rep)));
    }
    for (std::size_t x = 0; x < reps.size(); ++x) {
      for (std::size_t y = x + 1; y < reps.size(); ++y) {
        if (std::holds_alternative<Isomorphic>(iso_algebras(reps[x], reps[y]))) {
          throw Error(ErrorCode::kInternal, "two canonical representatives are isomorphic");
        }
      }
    }
    for (std::uint64_t code = 0; code < total; ++code) {
      auto tuple = detail::tuple_at(g, n, code);
      auto rep = canon.canonical(tuple);
      std::size_t r = std::lower_bound(table.representatives.begin(), table.representatives.end(), rep) -
                      table.representatives.begin();
      GradedAlgebra a = realize(FlagPresentation(d, canon.shape(), tuple));
      if (!std::holds_alternative<Isomorphic>(iso_algebras(a, reps[r]))) {
        throw Error(ErrorCode::kInternal, "a tuple is not isomorphic to its canonical representative");
      }
    }
    table.cross_checked = true;
  }
  return table;
}

/// Number of isomorphism classes by union-find over all pairwise
/// iso_algebras calls. Quadratic; for cross-checking small cases.
inline std::size_t count_classes_pairwise(const Group& g, const std::vector<int>& blocks,
                                          const GradedDivisionAlgebra& d, std::uint64_t budget) {
  BlockShape shape(blocks);
  const std::size_t n = shape.n();
  const std::uint64_t total = detail::checked_power(g.size(), n, budget);
  if (total > budget || total * (total - 1) / 2 > budget) {
    throw Error(ErrorCode::kBudgetExceeded, "pairwise classification exceeds the budget");
  }
  std::vector<GradedAlgebra> algebras;
  for (std::uint64_t code = 0; code < total; ++code) {
    algebras.push_back(realize(FlagPresentation(d, shape, detail::tuple_at(g, n, code))));
  }
  std::vector<std::size_t> parent(total);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t classes = total;
  for (std::size_t x = 0; x < total; ++x) {
    for (std::size_t y = x + 1; y < total; ++y) {
      if (find(x) == find(y)) continue;
      if (std::holds_alternative<Isomorphic>(iso_algebras(algebras[x], algebras[y]))) {
        parent[find(x)] = find(y);
        --classes;
      }
    }
  }
  return classes;
}

}  // namespace flagiso

#endif  // FLAGISO_CLASSIFY_HPP
