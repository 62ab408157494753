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

// Roots of unity as exponents and normalized 2-cocycles with values in them.
//
// A nonzero scalar w^k (w a primitive m-th root of unity) is stored as the
// pair (k mod m, m). A cocycle on a subgroup H stores sigma(h, h') as an
// exponent for every ordered pair, rows and columns in the order of
// H.members().

#ifndef FLAGISO_COCYCLE_HPP
#define FLAGISO_COCYCLE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flagiso/detail/zmod.hpp"
#include "flagiso/error.hpp"
#include "flagiso/group.hpp"

namespace flagiso {

struct RootScalar {
  std::int64_t exp = 0;
  std::int64_t order = 1;

  static RootScalar make(std::int64_t exp, std::int64_t order) {
    if (order < 1) throw Error(ErrorCode::kInvalidInput, "root order must be positive");
    return RootScalar{detail::mod(exp, order), order};
  }
  static RootScalar one() { return RootScalar{0, 1}; }

  /// Same scalar written over a multiple of the current order.
  RootScalar lifted(std::int64_t new_order) const {
    if (new_order % order != 0) {
      throw Error(ErrorCode::kInternal, "cannot lift root of order " + std::to_string(order) +
                                            " to order " + std::to_string(new_order));
    }
    return RootScalar{exp * (new_order / order), new_order};
  }

  RootScalar inverse() const { return RootScalar{detail::mod(-exp, order), order}; }

  friend RootScalar operator*(RootScalar a, RootScalar b) {
    std::int64_t l = detail::lcm(a.order, b.order);
    a = a.lifted(l);
    b = b.lifted(l);
    return RootScalar{detail::mod(a.exp + b.exp, l), l};
  }

  /// Compares the scalars themselves, not their representation.
  friend bool operator==(RootScalar a, RootScalar b) {
    std::int64_t l = detail::lcm(a.order, b.order);
    return a.lifted(l).exp == b.lifted(l).exp;
  }
};

/// Values of mu on a support subgroup: x_h is sent to w^{exps[pos(h)]}.
struct Corrector {
  std::int64_t order = 1;
  std::vector<std::int64_t> exps;

  RootScalar at(std::size_t pos) const { return RootScalar{exps.at(pos), order}; }
  friend bool operator==(const Corrector&, const Corrector&) = default;
};

class Cocycle {
 public:
  /// Checks shape, normalization and the cocycle identity
  ///   sigma(a,b) sigma(ab,c) = sigma(b,c) sigma(a,bc)
  /// on all |H|^3 triples; the first failing triple is reported.
  Cocycle(Subgroup support, std::int64_t order, std::vector<std::int64_t> values)
      : support_(std::move(support)), order_(order), values_(std::move(values)) {
    const std::size_t k = support_.size();
    if (order_ < 1) throw Error(ErrorCode::kInvalidCocycle, "root order must be >= 1");
    if (values_.size() != k * k) {
      throw Error(ErrorCode::kInvalidCocycle, "expected " + std::to_string(k * k) +
                                                  " values, got " + std::to_string(values_.size()));
    }
    for (auto& v : values_) v = detail::mod(v, order_);
    const Group& g = support_.group();
    const std::size_t e = support_.position(g.identity());
    for (std::size_t a = 0; a < k; ++a) {
      if (values_[e * k + a] != 0 || values_[a * k + e] != 0) {
        throw Error(ErrorCode::kInvalidCocycle,
                    "not normalized at " + g.name(support_.at(a)) + " (sigma(e,h) and "
                    "sigma(h,e) must have exponent 0)");
      }
    }
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) {
        std::size_t ab = product_pos(a, b);
        for (std::size_t c = 0; c < k; ++c) {
          std::size_t bc = product_pos(b, c);
          std::int64_t lhs = values_[a * k + b] + values_[ab * k + c];
          std::int64_t rhs = values_[b * k + c] + values_[a * k + bc];
          if (detail::mod(lhs - rhs, order_) != 0) {
            throw Error(ErrorCode::kInvalidCocycle,
                        "cocycle identity fails at (" + g.name(support_.at(a)) + ", " +
                            g.name(support_.at(b)) + ", " + g.name(support_.at(c)) + ")");
          }
        }
      }
    }
  }

  /// The trivial cocycle (all exponents 0, order 1).
  static Cocycle trivial(Subgroup support) {
    const std::size_t k = support.size();
    return Cocycle(std::move(support), 1, std::vector<std::int64_t>(k * k, 0));
  }

  const Subgroup& support() const { return support_; }
  const Group& group() const { return support_.group(); }
  std::int64_t order() const { return order_; }
  const std::vector<std::int64_t>& values() const { return values_; }

  std::int64_t exp_at(std::size_t a, std::size_t b) const {
    return values_[a * support_.size() + b];
  }
  RootScalar value(Elem a, Elem b) const {
    return RootScalar{exp_at(support_.position(a), support_.position(b)), order_};
  }
  std::size_t product_pos(std::size_t a, std::size_t b) const {
    return support_.position(support_.group().mul(support_.at(a), support_.at(b)));
  }

  /// Same cocycle written over a multiple of its order.
  Cocycle lifted(std::int64_t new_order) const {
    if (new_order % order_ != 0) {
      throw Error(ErrorCode::kInternal, "cannot lift cocycle to order " + std::to_string(new_order));
    }
    std::vector<std::int64_t> v(values_);
    for (auto& x : v) x *= new_order / order_;
    return Cocycle(support_, new_order, std::move(v));
  }

  /// Structural equality: same support and same scalars (orders may differ).
  friend bool operator==(const Cocycle& x, const Cocycle& y) {
    if (!(x.support_ == y.support_)) return false;
    std::int64_t l = detail::lcm(x.order_, y.order_);
    for (std::size_t i = 0; i < x.values_.size(); ++i) {
      if (x.values_[i] * (l / x.order_) != y.values_[i] * (l / y.order_)) return false;
    }
    return true;
  }

 private:
  Subgroup support_;
  std::int64_t order_;
  std::vector<std::int64_t> values_;
};

/// Twist by a coboundary: the cocycle tau of the algebra with basis
/// y_h = mu(h)^{-1} x_h, i.e. tau(a,b) = sigma(a,b) - mu(a) - mu(b) + mu(ab).
/// The map x_h -> mu(h) y_h is then an isomorphism K^sigma[H] -> K^tau[H].
inline Cocycle coboundary_twist(const Cocycle& sigma, const Corrector& mu) {
  const std::size_t k = sigma.support().size();
  if (mu.exps.size() != k) throw Error(ErrorCode::kInvalidInput, "corrector size mismatch");
  std::int64_t l = detail::lcm(sigma.order(), mu.order);
  std::int64_t fs = l / sigma.order(), fm = l / mu.order;
  std::vector<std::int64_t> v(k * k);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      std::size_t ab = sigma.product_pos(a, b);
      v[a * k + b] = sigma.exp_at(a, b) * fs - (mu.exps[a] + mu.exps[b] - mu.exps[ab]) * fm;
    }
  }
  return Cocycle(sigma.support(), l, std::move(v));
}

/// True iff x_h -> mu(h) x'_h is multiplicative from K^sigma[H] to K^tau[H]:
///   sigma(a,b) mu(ab) = mu(a) mu(b) tau(a,b)   for all a, b in H.
inline bool corrector_satisfies(const Cocycle& sigma, const Cocycle& tau, const Corrector& mu) {
  if (!(sigma.support() == tau.support())) return false;
  const std::size_t k = sigma.support().size();
  if (mu.exps.size() != k) return false;
  if (mu.exps[sigma.support().position(sigma.group().identity())] % mu.order != 0) return false;
  std::int64_t l = detail::lcm(detail::lcm(sigma.order(), tau.order()), mu.order);
  std::int64_t fs = l / sigma.order(), ft = l / tau.order(), fm = l / mu.order;
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      std::size_t ab = sigma.product_pos(a, b);
      std::int64_t lhs = sigma.exp_at(a, b) * fs + mu.exps[ab] * fm;
      std::int64_t rhs = (mu.exps[a] + mu.exps[b]) * fm + tau.exp_at(a, b) * ft;
      if (detail::mod(lhs - rhs, l) != 0) return false;
    }
  }
  return true;
}

/// Decides whether sigma and tau differ by a coboundary, returning a
/// corrector mu (mu(e) = 1) with sigma(a,b) mu(ab) = mu(a) mu(b) tau(a,b).
///
/// Writes u = log mu and solves u(a) + u(b) - u(ab) = s(a,b) - t(a,b) over
/// Z/lZ, l = lcm of the two orders, with u(e) = 0.
inline std::optional<Corrector> cohomologous(const Cocycle& sigma, const Cocycle& tau) {
  if (!(sigma.support() == tau.support())) {
    throw Error(ErrorCode::kSupportMismatch, "cocycles live on different subgroups");
  }
  const Subgroup& h = sigma.support();
  const std::size_t k = h.size();
  const std::int64_t l = detail::lcm(sigma.order(), tau.order());
  const std::int64_t fs = l / sigma.order(), ft = l / tau.order();
  const std::size_t e = h.position(h.group().identity());

  // Unknowns: u at every non-identity position.
  std::vector<std::size_t> column(k, k);
  std::size_t unknowns = 0;
  for (std::size_t p = 0; p < k; ++p) {
    if (p != e) column[p] = unknowns++;
  }
  detail::ZmodMatrix a(k * k, unknowns);
  std::vector<std::int64_t> rhs(k * k);
  for (std::size_t x = 0; x < k; ++x) {
    for (std::size_t y = 0; y < k; ++y) {
      std::size_t row = x * k + y;
      std::size_t xy = sigma.product_pos(x, y);
      if (x != e) a(row, column[x]) += 1;
      if (y != e) a(row, column[y]) += 1;
      if (xy != e) a(row, column[xy]) -= 1;
      rhs[row] = sigma.exp_at(x, y) * fs - tau.exp_at(x, y) * ft;
    }
  }
  auto solution = detail::solve_mod(std::move(a), std::move(rhs), l);
  if (!solution) return std::nullopt;
  Corrector mu{l, std::vector<std::int64_t>(k, 0)};
  for (std::size_t p = 0; p < k; ++p) {
    if (p != e) mu.exps[p] = (*solution)[column[p]];
  }
  if (!corrector_satisfies(sigma, tau, mu)) {
    throw Error(ErrorCode::kInternal, "linear solve returned a corrector that fails the relation");
  }
  return mu;
}

/// An isomorphism between two subgroups (possibly of different groups),
/// given as the image of each member of `source`, in member order.
struct SubgroupIso {
  Subgroup source;
  Subgroup target;
  std::vector<Elem> image;

  /// Throws kNotIsomorphism unless the map is a bijective homomorphism.
  void validate() const {
    const Group& gs = source.group();
    const Group& gt = target.group();
    if (image.size() != source.size() || source.size() != target.size()) {
      throw Error(ErrorCode::kNotIsomorphism, "size mismatch");
    }
    std::vector<char> hit(target.size(), 0);
    for (Elem y : image) {
      if (!target.contains(y)) throw Error(ErrorCode::kNotIsomorphism, "image outside target");
      if (hit[target.position(y)]++) throw Error(ErrorCode::kNotIsomorphism, "not injective");
    }
    for (std::size_t a = 0; a < source.size(); ++a) {
      for (std::size_t b = 0; b < source.size(); ++b) {
        Elem ab = gs.mul(source.at(a), source.at(b));
        if (image[source.position(ab)] != gt.mul(image[a], image[b])) {
          throw Error(ErrorCode::kNotIsomorphism, "not a homomorphism at (" +
                                                      gs.name(source.at(a)) + ", " +
                                                      gs.name(source.at(b)) + ")");
        }
      }
    }
  }

  static SubgroupIso identity(const Subgroup& h) {
    return SubgroupIso{h, h, std::vector<Elem>(h.members().begin(), h.members().end())};
  }

  Elem operator()(Elem a) const { return image[source.position(a)]; }
};

/// sigma'(alpha(a), alpha(b)) := sigma(a, b).
inline Cocycle transport(const Cocycle& sigma, const SubgroupIso& alpha) {
  if (!(alpha.source == sigma.support())) {
    throw Error(ErrorCode::kSupportMismatch, "isomorphism source is not the cocycle support");
  }
  alpha.validate();
  const std::size_t k = sigma.support().size();
  std::vector<std::int64_t> v(k * k);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      std::size_t ta = alpha.target.position(alpha.image[a]);
      std::size_t tb = alpha.target.position(alpha.image[b]);
      v[ta * k + tb] = sigma.exp_at(a, b);
    }
  }
  return Cocycle(alpha.target, sigma.order(), std::move(v));
}

}  // namespace flagiso

#endif  // FLAGISO_COCYCLE_HPP
