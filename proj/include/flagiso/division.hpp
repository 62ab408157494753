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

// Graded division algebras in twisted group algebra form K^sigma[H]: one
// basis vector x_h per element of the support H, x_a x_b = sigma(a,b) x_ab.

#ifndef FLAGISO_DIVISION_HPP
#define FLAGISO_DIVISION_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flagiso/cocycle.hpp"
#include "flagiso/error.hpp"
#include "flagiso/group.hpp"

namespace flagiso {

class GradedDivisionAlgebra {
 public:
  explicit GradedDivisionAlgebra(Cocycle cocycle) : cocycle_(std::move(cocycle)) {}

  const Group& group() const { return cocycle_.group(); }
  const Subgroup& support() const { return cocycle_.support(); }
  const Cocycle& cocycle() const { return cocycle_; }
  std::size_t dim() const { return support().size(); }
  bool is_trivial() const { return support().size() == 1; }

  /// x_a x_b as (scalar, degree).
  std::pair<RootScalar, Elem> multiply(Elem a, Elem b) const {
    return {cocycle_.value(a, b), group().mul(a, b)};
  }

  friend bool operator==(const GradedDivisionAlgebra& x, const GradedDivisionAlgebra& y) {
    return x.cocycle_ == y.cocycle_;
  }

 private:
  Cocycle cocycle_;
};

/// The base field itself, concentrated in degree e.
inline GradedDivisionAlgebra trivial_division(const Group& g) {
  return GradedDivisionAlgebra(Cocycle::trivial(Subgroup::trivial(g)));
}

/// Clock-and-shift grading on M_t: support {u^i v^j}, with
/// x_{u^i1 v^j1} x_{u^i2 v^j2} = w^{j1 i2} x_{u^(i1+i2) v^(j1+j2)}.
/// (u, v) must generate a copy of Z_t x Z_t inside G.
inline GradedDivisionAlgebra pauli(int t, const Group& g, Elem u, Elem v) {
  if (t < 2) throw Error(ErrorCode::kInvalidInput, "pauli grading needs t >= 2");
  g.check(u);
  g.check(v);
  if (g.order(u) != t || g.order(v) != t) {
    throw Error(ErrorCode::kInvalidEmbedding, "generator images must both have order " +
                                                  std::to_string(t));
  }
  if (g.mul(u, v) != g.mul(v, u)) {
    throw Error(ErrorCode::kInvalidEmbedding, "generator images do not commute");
  }
  std::vector<Elem> members;
  std::vector<std::pair<int, int>> coords(g.size(), {-1, -1});
  for (int i = 0; i < t; ++i) {
    for (int j = 0; j < t; ++j) {
      Elem x = g.mul(g.pow(u, i), g.pow(v, j));
      if (coords[x.index].first != -1) {
        throw Error(ErrorCode::kInvalidEmbedding,
                    "(i,j) -> u^i v^j is not injective; subgroup too small");
      }
      coords[x.index] = {i, j};
      members.push_back(x);
    }
  }
  Subgroup h(g, members);
  const std::size_t k = h.size();
  std::vector<std::int64_t> values(k * k);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      auto [i1, j1] = coords[h.at(a).index];
      auto [i2, j2] = coords[h.at(b).index];
      values[a * k + b] = static_cast<std::int64_t>(j1) * i2 % t;
    }
  }
  return GradedDivisionAlgebra(Cocycle(std::move(h), t, std::move(values)));
}

/// Conjugation h -> g^-1 h g as an isomorphism from H onto g^-1 H g.
inline SubgroupIso conjugation_iso(const Subgroup& h, Elem g) {
  const Group& grp = h.group();
  std::vector<Elem> image, target;
  for (Elem x : h.members()) {
    image.push_back(grp.conj(x, g));
    target.push_back(image.back());
  }
  return SubgroupIso{h, Subgroup(grp, std::move(target)), std::move(image)};
}

/// The algebra D regraded with deg' x_h = g^-1 h g.
inline GradedDivisionAlgebra shift_conjugate(const GradedDivisionAlgebra& d, Elem g) {
  d.group().check(g);
  return GradedDivisionAlgebra(transport(d.cocycle(), conjugation_iso(d.support(), g)));
}

/// Degree-preserving isomorphism D -> D' (x_h -> mu(h) x'_h), if any.
inline std::optional<Corrector> iso_division(const GradedDivisionAlgebra& d,
                                             const GradedDivisionAlgebra& dp) {
  if (!(d.group() == dp.group())) {
    throw Error(ErrorCode::kGroupMismatch, "division algebras graded by different groups");
  }
  if (!(d.support() == dp.support())) return std::nullopt;
  return cohomologous(d.cocycle(), dp.cocycle());
}

struct DivisionEquivalence {
  SubgroupIso alpha;
  Corrector mu;  // indexed by positions of alpha.target
};

/// Equivalence D -> D': a relabeling alpha of the supports (necessarily a
/// group isomorphism) with transport(sigma, alpha) cohomologous to sigma'.
/// Candidates are tried in the order returned by find_isomorphisms().
inline std::optional<DivisionEquivalence> equiv_division(const GradedDivisionAlgebra& d,
                                                         const GradedDivisionAlgebra& dp) {
  if (d.support().size() != dp.support().size()) return std::nullopt;
  Group hs = d.support().as_group();
  Group ht = dp.support().as_group();
  for (const Bijection& f : find_isomorphisms(hs, ht)) {
    std::vector<Elem> image;
    for (Elem x : f) image.push_back(dp.support().at(x.index));
    SubgroupIso alpha{d.support(), dp.support(), std::move(image)};
    if (auto mu = cohomologous(transport(d.cocycle(), alpha), dp.cocycle())) {
      return DivisionEquivalence{std::move(alpha), std::move(*mu)};
    }
  }
  return std::nullopt;
}

}  // namespace flagiso

#endif  // FLAGISO_DIVISION_HPP
