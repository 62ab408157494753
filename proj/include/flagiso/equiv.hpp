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

// Graded equivalence, where the two grading groups may differ.
//
// equiv_check() tests necessary conditions only. equiv_elementary() decides
// equivalence of elementary gradings: it looks for a bijection lambda
// between the distinct tuple values with matching per-block counts such
// that, over admissible index pairs,
//   g_i g_j^-1 = g_k g_l^-1  iff  lambda(g_i) lambda(g_j)^-1 = lambda(g_k) lambda(g_l)^-1.

#ifndef FLAGISO_EQUIV_HPP
#define FLAGISO_EQUIV_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flagiso/algebra.hpp"
#include "flagiso/division.hpp"
#include "flagiso/error.hpp"
#include "flagiso/group.hpp"
#include "flagiso/presentation.hpp"
#include "flagiso/verdict.hpp"
#include "flagiso/witness.hpp"

namespace flagiso {

namespace detail {

/// Distinct values of key(g_i), sorted by element index, with the count of
/// each value in every block.
struct ValueProfile {
  std::vector<Elem> values;                     // sorted by element index
  std::vector<std::vector<std::size_t>> counts;  // counts[v][block]
  std::vector<std::size_t> value_of;            // per tuple index
};

template <class Key>
ValueProfile profile(const FlagPresentation& p, Key key) {
  ValueProfile out;
  std::vector<Elem> keys;
  for (std::size_t i = 0; i < p.n(); ++i) keys.push_back(key(p.tuple()[i]));
  out.values = keys;
  std::sort(out.values.begin(), out.values.end());
  out.values.erase(std::unique(out.values.begin(), out.values.end()), out.values.end());
  out.counts.assign(out.values.size(), std::vector<std::size_t>(p.shape().num_blocks(), 0));
  for (std::size_t i = 0; i < p.n(); ++i) {
    std::size_t v = std::lower_bound(out.values.begin(), out.values.end(), keys[i]) - out.values.begin();
    out.value_of.push_back(v);
    ++out.counts[v][p.shape().block_of(i)];
  }
  return out;
}

inline std::string elem_list(const Group& g, const std::vector<Elem>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + g.name(xs[i]);
  return out + "}";
}

}  // namespace detail

/// Necessary conditions for equivalence: equal shapes, equivalent division
/// parts, and a bijection lambda between the left cosets of supp D and of
/// supp D' occurring in the tuples that preserves per-block multiplicities.
/// Passing all of them gives Inconclusive, never Equivalent.
inline Verdict equiv_check(const FlagPresentation& p, const FlagPresentation& pp) {
  if (!(p.shape() == pp.shape())) return NotEquivalent{"shape: block shapes differ"};
  auto division = equiv_division(p.division(), pp.division());
  if (!division) return NotEquivalent{"division: D and D' are not equivalent"};

  auto src = detail::profile(p, [&](Elem x) { return coset_representative(x, p.support()); });
  auto dst = detail::profile(pp, [&](Elem x) { return coset_representative(x, pp.support()); });
  if (src.values.size() != dst.values.size()) {
    return NotEquivalent{"cosets: " + std::to_string(src.values.size()) + " distinct cosets vs " +
                         std::to_string(dst.values.size())};
  }
  // Match coset classes with equal per-block count vectors; sorting both
  // sides by vector makes the matching deterministic.
  auto order = [](const detail::ValueProfile& prof) {
    std::vector<std::size_t> idx(prof.values.size());
    for (std::size_t v = 0; v < idx.size(); ++v) idx[v] = v;
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t x, std::size_t y) { return prof.counts[x] < prof.counts[y]; });
    return idx;
  };
  auto so = order(src), to = order(dst);
  std::string lambda;
  for (std::size_t k = 0; k < so.size(); ++k) {
    if (src.counts[so[k]] != dst.counts[to[k]]) {
      return NotEquivalent{"cosets: no bijection of coset classes preserves per-block counts"};
    }
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t k = 0; k < so.size(); ++k) pairs.emplace_back(so[k], to[k]);
  std::sort(pairs.begin(), pairs.end());
  for (auto [s, t] : pairs) {
    if (!lambda.empty()) lambda += ", ";
    lambda += p.group().name(src.values[s]) + "H -> " + pp.group().name(dst.values[t]) + "H'";
  }
  return Inconclusive{"necessary conditions hold (shape, division equivalence, coset classes " +
                      lambda + "); they are not sufficient"};
}

/// Full decision for elementary gradings (trivial division parts).
inline Verdict equiv_elementary(const FlagPresentation& p, const FlagPresentation& pp) {
  if (!p.division().is_trivial() || !pp.division().is_trivial()) {
    throw Error(ErrorCode::kUnsupportedInput,
                "equiv-elementary needs trivial division parts on both sides");
  }
  if (!(p.shape() == pp.shape())) return NotEquivalent{"shape: block shapes differ"};
  const Group& g = p.group();
  const Group& gp = pp.group();
  auto src = detail::profile(p, [](Elem x) { return x; });
  auto dst = detail::profile(pp, [](Elem x) { return x; });
  if (src.values.size() != dst.values.size()) {
    return NotEquivalent{"degree sets differ in size: " + detail::elem_list(g, src.values) + " vs " +
                         detail::elem_list(gp, dst.values)};
  }

  // Admissible pairs as value-index pairs (duplicates removed).
  std::vector<std::pair<std::size_t, std::size_t>> adm;
  for (std::size_t i = 0; i < p.n(); ++i) {
    for (std::size_t j = 0; j < p.n(); ++j) {
      if (p.shape().block_of(i) <= p.shape().block_of(j)) adm.emplace_back(src.value_of[i], src.value_of[j]);
    }
  }
  std::sort(adm.begin(), adm.end());
  adm.erase(std::unique(adm.begin(), adm.end()), adm.end());

  const std::size_t k = src.values.size();
  std::vector<std::size_t> lam(k, k);
  std::vector<char> used(k, 0);

  auto consistent = [&]() {
    for (std::size_t x = 0; x < adm.size(); ++x) {
      auto [a, b] = adm[x];
      if (lam[a] == k || lam[b] == k) continue;
      Elem d = g.mul(src.values[a], g.inv(src.values[b]));
      Elem dp = gp.mul(dst.values[lam[a]], gp.inv(dst.values[lam[b]]));
      for (std::size_t y = x + 1; y < adm.size(); ++y) {
        auto [c, e] = adm[y];
        if (lam[c] == k || lam[e] == k) continue;
        bool same = g.mul(src.values[c], g.inv(src.values[e])) == d;
        bool samep = gp.mul(dst.values[lam[c]], gp.inv(dst.values[lam[e]])) == dp;
        if (same != samep) return false;
      }
    }
    return true;
  };
  auto search = [&](auto&& self, std::size_t v) -> bool {
    if (v == k) return true;
    for (std::size_t t = 0; t < k; ++t) {
      if (used[t] || dst.counts[t] != src.counts[v]) continue;
      lam[v] = t;
      used[t] = 1;
      if (consistent() && self(self, v + 1)) return true;
      used[t] = 0;
      lam[v] = k;
    }
    return false;
  };
  if (!search(search, 0)) {
    return NotEquivalent{"no bijection " + detail::elem_list(g, src.values) + " -> " +
                         detail::elem_list(gp, dst.values) +
                         " preserves block counts and the coincidence condition"};
  }

  EquivWitness w;
  for (std::size_t v = 0; v < k; ++v) w.lambda.emplace_back(src.values[v], dst.values[lam[v]]);
  // g'_{sigma(i)} = lambda(g_i); smallest free index first within a block.
  std::vector<char> taken(p.n(), 0);
  for (std::size_t i = 0; i < p.n(); ++i) {
    Elem want = dst.values[lam[src.value_of[i]]];
    std::size_t b = p.shape().block_of(i);
    for (std::size_t j = pp.shape().block_begin(b); j < pp.shape().block_end(b); ++j) {
      if (!taken[j] && pp.tuple()[j] == want) {
        taken[j] = 1;
        w.sigma.push_back(j);
        break;
      }
    }
  }
  if (w.sigma.size() != p.n()) throw Error(ErrorCode::kInternal, "block permutation not found");

  GradedAlgebra a = realize(p), ap = realize(pp);
  w.map.order = 1;
  for (std::size_t b = 0; b < a.dim(); ++b) {
    const BasisElem& e = a.basis(b);
    w.map.image.push_back(Term{*ap.index_of(w.sigma[e.row], w.sigma[e.col], gp.identity()), 0});
  }
  std::map<Elem, Elem> comp;
  for (std::size_t b = 0; b < a.dim(); ++b) comp.emplace(a.degree(b), ap.degree(w.map.image[b].index));
  w.components.assign(comp.begin(), comp.end());
  WitnessReport report = verify_equivalence(a, ap, w.map);
  if (!report.ok()) {
    throw Error(ErrorCode::kInternal, "equivalence witness failed verification: " + report.failures.front());
  }
  return Equivalent{std::move(w)};
}

}  // namespace flagiso

#endif  // FLAGISO_EQUIV_HPP
