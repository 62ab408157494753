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

// Witnesses for isomorphisms and equivalences between realized algebras.
//
// A witness is a monomial map (each basis element goes to a root of unity
// times a basis element). It is checked exactly against the structure
// constants of both algebras and never trusted on the strength of the data
// that produced it.

#ifndef FLAGISO_WITNESS_HPP
#define FLAGISO_WITNESS_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "flagiso/algebra.hpp"
#include "flagiso/cocycle.hpp"
#include "flagiso/division.hpp"
#include "flagiso/error.hpp"
#include "flagiso/group.hpp"
#include "flagiso/presentation.hpp"

namespace flagiso {

/// image[b] = w^exp times basis element `index` of the target algebra, with
/// w a primitive root of unity of the given order.
struct MonomialMap {
  std::int64_t order = 1;
  std::vector<Term> image;

  friend bool operator==(const MonomialMap&, const MonomialMap&) = default;
};

struct WitnessReport {
  std::vector<std::string> failures;  // first few, in words
  std::size_t failure_count = 0;
  std::size_t pairs_checked = 0;

  bool ok() const { return failure_count == 0; }

  void fail(std::string what) {
    if (failures.size() < kMaxListed) failures.push_back(std::move(what));
    ++failure_count;
  }

  static constexpr std::size_t kMaxListed = 16;
};

namespace detail {

inline std::string basis_label(const GradedAlgebra& a, std::size_t b) {
  const BasisElem& e = a.basis(b);
  return "(" + std::to_string(e.row + 1) + "," + std::to_string(e.col + 1) + "," +
         a.group().name(e.h) + ")";
}

/// Bijectivity and multiplicativity of `map`, shared by both verifiers.
inline void check_algebra_map(const GradedAlgebra& a, const GradedAlgebra& ap,
                              const MonomialMap& map, WitnessReport& report) {
  if (map.order < 1) {
    report.fail("scalar order must be positive");
    return;
  }
  if (map.image.size() != a.dim() || a.dim() != ap.dim()) {
    report.fail("map covers " + std::to_string(map.image.size()) + " of " +
                std::to_string(a.dim()) + " basis elements; target has dimension " +
                std::to_string(ap.dim()));
    return;
  }
  std::vector<char> hit(ap.dim(), 0);
  for (std::size_t b = 0; b < a.dim(); ++b) {
    std::size_t t = map.image[b].index;
    if (t >= ap.dim()) {
      report.fail("image of " + basis_label(a, b) + " is out of range");
      return;
    }
    if (hit[t]++) report.fail("not injective: " + basis_label(ap, t) + " hit twice");
  }
  if (!report.ok()) return;

  const std::int64_t l = std::lcm(std::lcm(map.order, a.order()), ap.order());
  const std::int64_t fm = l / map.order, fa = l / a.order(), fp = l / ap.order();
  for (std::size_t x = 0; x < a.dim(); ++x) {
    const Term& wx = map.image[x];
    for (std::size_t y = 0; y < a.dim(); ++y) {
      const Term& wy = map.image[y];
      ++report.pairs_checked;
      auto xy = a.product(x, y);
      auto images = ap.product(wx.index, wy.index);
      if (!xy && !images) continue;
      if (!xy || !images) {
        report.fail("psi(" + basis_label(a, x) + ") psi(" + basis_label(a, y) + ") is " +
                    (xy ? "zero" : "nonzero") + " but the product in the source is " +
                    (xy ? "nonzero" : "zero"));
        continue;
      }
      const Term& wxy = map.image[xy->index];
      std::int64_t lhs = (wx.exp + wy.exp) * fm + images->exp * fp;
      std::int64_t rhs = xy->exp * fa + wxy.exp * fm;
      if (images->index != wxy.index || mod(lhs - rhs, l) != 0) {
        report.fail("psi(" + basis_label(a, x) + " " + basis_label(a, y) +
                    ") != psi(" + basis_label(a, x) + ") psi(" + basis_label(a, y) + ")");
      }
    }
  }
}

}  // namespace detail

/// Passes iff `map` is a bijective, degree-preserving algebra homomorphism
/// A -> A' on every pair of basis elements, with exact root-of-unity
/// arithmetic.
inline WitnessReport verify_witness(const GradedAlgebra& a, const GradedAlgebra& ap,
                                    const MonomialMap& map) {
  WitnessReport report;
  if (!(a.group() == ap.group())) {
    report.fail("algebras are graded by different groups");
    return report;
  }
  detail::check_algebra_map(a, ap, map, report);
  if (map.image.size() != a.dim() || a.dim() != ap.dim()) return report;
  for (std::size_t b = 0; b < a.dim(); ++b) {
    std::size_t t = map.image[b].index;
    if (t < ap.dim() && ap.degree(t) != a.degree(b)) {
      report.fail("degree of " + detail::basis_label(a, b) + " is " + a.group().name(a.degree(b)) +
                  " but its image " + detail::basis_label(ap, t) + " has degree " +
                  a.group().name(ap.degree(t)));
    }
  }
  return report;
}

/// Passes iff `map` is an algebra isomorphism sending every homogeneous
/// component of A onto a homogeneous component of A' (groups may differ).
inline WitnessReport verify_equivalence(const GradedAlgebra& a, const GradedAlgebra& ap,
                                        const MonomialMap& map) {
  WitnessReport report;
  detail::check_algebra_map(a, ap, map, report);
  if (!report.ok()) return report;
  const Group& g = a.group();
  const Group& gp = ap.group();
  std::map<Elem, Elem> component;
  std::map<Elem, std::size_t> source_dim, target_dim;
  for (std::size_t b = 0; b < a.dim(); ++b) {
    Elem u = a.degree(b);
    Elem up = ap.degree(map.image[b].index);
    ++source_dim[u];
    auto [it, inserted] = component.emplace(u, up);
    if (!inserted && it->second != up) {
      report.fail("component A_" + g.name(u) + " is split between degrees " +
                  gp.name(it->second) + " and " + gp.name(up));
    }
  }
  for (std::size_t b = 0; b < ap.dim(); ++b) ++target_dim[ap.degree(b)];
  std::map<Elem, Elem> seen;
  for (auto [u, up] : component) {
    if (auto [it, inserted] = seen.emplace(up, u); !inserted) {
      report.fail("components A_" + g.name(it->second) + " and A_" + g.name(u) +
                  " both land in A'_" + gp.name(up));
    }
    if (source_dim[u] != target_dim[up]) {
      report.fail("A_" + g.name(u) + " (dim " + std::to_string(source_dim[u]) +
                  ") is not onto A'_" + gp.name(up) + " (dim " + std::to_string(target_dim[up]) +
                  ")");
    }
  }
  return report;
}

/// An isomorphism of pairs from ([g^-1]D[g], F^[g]) to (D', F'), written in
/// the canonical bases:
///   psi1(v_i) = w^{kappa_i} v'_{target_i} x'_{coeff_i},
///   psi0(x_h) = w^{mu(h)} x'_{g^-1 h g},
/// with mu indexed by positions in supp D and kappa, mu both over w of
/// order mu.order.
struct PairIsomorphism {
  Elem shift;
  std::vector<std::size_t> target;
  std::vector<Elem> coeff;
  std::vector<std::int64_t> kappa;
  Corrector mu;
};

/// The unique algebra isomorphism psi with psi1(r v) = psi(r) psi1(v).
///
/// For r = E_ij r_{x_h}: psi(r) sends psi1(v_j) to psi1(v_i) psi0(x_h), so
/// psi(r) = w^{kappa_i - kappa_j + mu(h)} E'_{t_i t_j} r'_{c_i y c_j^-1}
/// with y = x'_{g^-1 h g} and the product c_i y c_j^-1 taken in D'.
inline MonomialMap induced_algebra_map(const GradedAlgebra& a, const GradedAlgebra& ap,
                                       const PairIsomorphism& pair) {
  const Group& g = a.group();
  const Cocycle& tau = ap.presentation().division().cocycle();
  const Subgroup& hp = ap.support();
  const std::int64_t l = std::lcm(tau.order(), pair.mu.order);
  const std::int64_t ft = l / tau.order(), fm = l / pair.mu.order;
  const std::size_t n = a.shape().n();
  if (pair.target.size() != n || pair.coeff.size() != n || pair.kappa.size() != n) {
    throw Error(ErrorCode::kInvalidWitnessData, "pair isomorphism has the wrong length");
  }
  auto tau_exp = [&](Elem x, Elem y) { return tau.exp_at(hp.position(x), hp.position(y)) * ft; };

  MonomialMap map{l, {}};
  map.image.reserve(a.dim());
  for (std::size_t b = 0; b < a.dim(); ++b) {
    const BasisElem& e = a.basis(b);
    Elem ci = pair.coeff[e.row], cj = pair.coeff[e.col];
    Elem y = g.conj(e.h, pair.shift);
    Elem cj_inv = g.inv(cj);
    // x'_c^-1 = tau(c, c^-1)^-1 x'_{c^-1}
    std::int64_t exp = (pair.kappa[e.row] - pair.kappa[e.col]) * fm +
                       pair.mu.exps[a.support().position(e.h)] * fm + tau_exp(ci, y) +
                       tau_exp(g.mul(ci, y), cj_inv) - tau_exp(cj, cj_inv);
    Elem hprime = g.mul(g.mul(ci, y), cj_inv);
    auto t = ap.index_of(pair.target[e.row], pair.target[e.col], hprime);
    if (!t) throw Error(ErrorCode::kInvalidWitnessData, "image of a basis element is outside A'");
    map.image.push_back(Term{*t, detail::mod(exp, l)});
  }
  return map;
}

/// Data of an isomorphism A(D,m,g) -> A(D',m,g'):
///   g'_i = g_{sigma(i)} h_{sigma(i)} shift   for all i,
///   [shift^-1]D[shift] -> D',  x_h -> w^{mu(h)} x'_{shift^-1 h shift}.
/// sigma is 0-based and block preserving; h and mu are indexed by the
/// source (h by tuple index, mu by position in supp D).
struct IsoData {
  Elem shift;
  std::vector<std::size_t> sigma;
  std::vector<Elem> h;
  Corrector mu;

  friend bool operator==(const IsoData&, const IsoData&) = default;
};

struct IsoWitness {
  IsoData data;
  MonomialMap map;
};

/// mu re-indexed over supp [g^-1]D[g] (= supp D').
inline Corrector shifted_corrector(const GradedDivisionAlgebra& d, Elem shift, const Corrector& mu) {
  const Group& g = d.group();
  GradedDivisionAlgebra shifted = shift_conjugate(d, shift);
  Corrector out{mu.order, std::vector<std::int64_t>(mu.exps.size(), 0)};
  for (std::size_t p = 0; p < d.support().size(); ++p) {
    out.exps[shifted.support().position(g.conj(d.support().at(p), shift))] = mu.exps[p];
  }
  return out;
}

/// Checks the data against both presentations and derives the monomial map
/// (psi1(v_i) = v'_{sigma^-1(i)} x'_{shift^-1 h_i^-1 shift}). Throws
/// kInvalidWitnessData when any relation fails.
inline IsoWitness build_witness(const GradedAlgebra& a, const GradedAlgebra& ap, IsoData data) {
  const FlagPresentation& p = a.presentation();
  const FlagPresentation& pp = ap.presentation();
  const Group& g = p.group();
  auto bad = [](const std::string& why) { return Error(ErrorCode::kInvalidWitnessData, why); };
  if (!(g == pp.group())) throw Error(ErrorCode::kGroupMismatch, "presentations use different groups");
  if (!(p.shape() == pp.shape())) throw bad("block shapes differ");
  const std::size_t n = p.n();
  if (!g.contains(data.shift)) throw bad("shift is not a group element");
  if (data.sigma.size() != n || data.h.size() != n) throw bad("sigma and h need one entry per index");
  if (data.mu.exps.size() != p.support().size()) throw bad("mu needs one entry per support element");

  std::vector<std::size_t> inverse(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t s = data.sigma[i];
    if (s >= n || inverse[s] != n) throw bad("sigma is not a permutation");
    if (p.shape().block_of(s) != p.shape().block_of(i)) throw bad("sigma does not preserve blocks");
    inverse[s] = i;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!p.support().contains(data.h[i])) throw bad("h_" + std::to_string(i + 1) + " is not in supp D");
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t s = data.sigma[i];
    Elem expected = g.mul(g.mul(p.tuple()[s], data.h[s]), data.shift);
    if (pp.tuple()[i] != expected) {
      throw bad("g'_" + std::to_string(i + 1) + " = " + g.name(pp.tuple()[i]) +
                " but g_sigma(i) h_sigma(i) g = " + g.name(expected));
    }
  }
  GradedDivisionAlgebra shifted = shift_conjugate(p.division(), data.shift);
  if (!(shifted.support() == pp.support())) throw bad("shifted support differs from supp D'");
  if (!corrector_satisfies(shifted.cocycle(), pp.division().cocycle(),
                           shifted_corrector(p.division(), data.shift, data.mu))) {
    throw bad("mu is not an isomorphism of the division algebras");
  }

  PairIsomorphism pair{data.shift, {}, {}, std::vector<std::int64_t>(n, 0), data.mu};
  for (std::size_t i = 0; i < n; ++i) {
    pair.target.push_back(inverse[i]);
    pair.coeff.push_back(g.conj(g.inv(data.h[i]), data.shift));
  }
  MonomialMap map = induced_algebra_map(a, ap, pair);
  return IsoWitness{std::move(data), std::move(map)};
}

/// Data for the reverse direction A' -> A:
/// (shift^-1, sigma^-1, h'_{sigma^-1(i)} = shift^-1 h_i^-1 shift, mu'(k) = -mu(shift k shift^-1)).
inline IsoData invert_iso_data(const FlagPresentation& p, const FlagPresentation& pp,
                               const IsoData& d) {
  const Group& g = p.group();
  const std::size_t n = d.sigma.size();
  IsoData out{g.inv(d.shift), std::vector<std::size_t>(n), std::vector<Elem>(n),
              Corrector{d.mu.order, std::vector<std::int64_t>(pp.support().size(), 0)}};
  for (std::size_t j = 0; j < n; ++j) out.sigma[d.sigma[j]] = j;
  for (std::size_t i = 0; i < n; ++i) out.h[out.sigma[i]] = g.conj(g.inv(d.h[i]), d.shift);
  for (std::size_t q = 0; q < pp.support().size(); ++q) {
    Elem k = pp.support().at(q);
    Elem back = g.conj(k, g.inv(d.shift));
    out.mu.exps[q] = detail::mod(-d.mu.exps[p.support().position(back)], d.mu.order);
  }
  return out;
}

/// Data of the composite A -> A' -> A'' given the data of both steps.
inline IsoData compose_iso_data(const FlagPresentation& p, const FlagPresentation& pp,
                                const IsoData& first, const IsoData& second) {
  const Group& g = p.group();
  const std::size_t n = first.sigma.size();
  const std::int64_t l = std::lcm(first.mu.order, second.mu.order);
  IsoData out{g.mul(first.shift, second.shift), std::vector<std::size_t>(n), std::vector<Elem>(n),
              Corrector{l, std::vector<std::int64_t>(p.support().size(), 0)}};
  const Elem back = g.inv(first.shift);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t mid = second.sigma[i];
    std::size_t s = first.sigma[mid];
    out.sigma[i] = s;
    out.h[s] = g.mul(first.h[s], g.conj(second.h[mid], back));
  }
  for (std::size_t q = 0; q < p.support().size(); ++q) {
    Elem h = p.support().at(q);
    Elem moved = g.conj(h, first.shift);
    out.mu.exps[q] = detail::mod(first.mu.exps[q] * (l / first.mu.order) +
                                     second.mu.exps[pp.support().position(moved)] *
                                         (l / second.mu.order),
                                 l);
  }
  return out;
}

/// Equivalence witness between elementary gradings (groups may differ).
/// lambda pairs the distinct tuple values; sigma satisfies
/// g'_{sigma(i)} = lambda(g_i); components pairs each degree of A with the
/// degree of A' its component lands in.
struct EquivWitness {
  std::vector<std::pair<Elem, Elem>> lambda;
  std::vector<std::size_t> sigma;
  std::vector<std::pair<Elem, Elem>> components;
  MonomialMap map;
};

}  // namespace flagiso

#endif  // FLAGISO_WITNESS_HPP
