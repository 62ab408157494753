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

// Finite groups given by an explicit Cayley table, their subgroups and
// cosets, and a small isomorphism search. Every degree computation in the
// library goes through this header.

#ifndef FLAGISO_GROUP_HPP
#define FLAGISO_GROUP_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "flagiso/error.hpp"

namespace flagiso {

/// Largest group accepted by all_subgroups().
inline constexpr std::size_t kSubgroupEnumerationCap = 24;
/// Largest group order accepted by find_isomorphisms().
inline constexpr std::size_t kIsomorphismSearchCap = 16;

/// An element of a Group, identified by its row in the Cayley table.
struct Elem {
  std::uint32_t index = 0;

  friend auto operator<=>(const Elem&, const Elem&) = default;
};

class Group {
 public:
  /// Direct product Z_{f1} x ... x Z_{fk}. Element (x1,...,xk) has index
  /// x1*f2*...*fk + ... + xk and is named "(x1,...,xk)".
  static Group abelian(std::span<const int> factors) {
    if (factors.empty()) {
      throw Error(ErrorCode::kInvalidInput, "abelian group needs at least one factor");
    }
    std::size_t n = 1;
    for (int f : factors) {
      if (f < 2) {
        throw Error(ErrorCode::kInvalidInput,
                    "abelian factor " + std::to_string(f) + " is smaller than 2");
      }
      n *= static_cast<std::size_t>(f);
      if (n > (1u << 20)) throw Error(ErrorCode::kSizeCapExceeded, "abelian group too large");
    }
    auto digits = [&](std::size_t idx) {
      std::vector<int> d(factors.size());
      for (std::size_t k = factors.size(); k-- > 0;) {
        d[k] = static_cast<int>(idx % static_cast<std::size_t>(factors[k]));
        idx /= static_cast<std::size_t>(factors[k]);
      }
      return d;
    };
    auto index_of = [&](const std::vector<int>& d) {
      std::size_t idx = 0;
      for (std::size_t k = 0; k < factors.size(); ++k) {
        idx = idx * static_cast<std::size_t>(factors[k]) + static_cast<std::size_t>(d[k]);
      }
      return idx;
    };

    Data data;
    data.n = n;
    data.table.resize(n * n);
    data.names.resize(n);
    for (std::size_t a = 0; a < n; ++a) {
      auto da = digits(a);
      std::string name = "(";
      for (std::size_t k = 0; k < da.size(); ++k) {
        if (k) name += ",";
        name += std::to_string(da[k]);
      }
      data.names[a] = name + ")";
      for (std::size_t b = 0; b < n; ++b) {
        auto db = digits(b);
        std::vector<int> sum(factors.size());
        for (std::size_t k = 0; k < factors.size(); ++k) sum[k] = (da[k] + db[k]) % factors[k];
        data.table[a * n + b] = static_cast<std::uint32_t>(index_of(sum));
      }
    }
    data.descriptor = "Z" + std::to_string(factors[0]);
    for (std::size_t k = 1; k < factors.size(); ++k) data.descriptor += "xZ" + std::to_string(factors[k]);
    return finish(std::move(data));
  }

  static Group abelian(std::initializer_list<int> factors) {
    std::vector<int> f(factors);
    return abelian(std::span<const int>(f));
  }

  /// Validates a Cayley table: square, entries in range, Latin, two-sided
  /// identity, inverses, associativity (checked on all triples, first failure
  /// reported). Missing names default to "g0", "g1", ...
  static Group from_table(const std::vector<std::vector<int>>& table,
                          std::vector<std::string> names = {}) {
    const std::size_t n = table.size();
    if (n == 0) throw Error(ErrorCode::kInvalidInput, "empty Cayley table");
    if (n > (1u << 12)) throw Error(ErrorCode::kSizeCapExceeded, "Cayley table too large");
    Data data;
    data.n = n;
    data.table.resize(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      if (table[a].size() != n) {
        throw Error(ErrorCode::kInvalidInput,
                    "row " + std::to_string(a) + " has " + std::to_string(table[a].size()) +
                        " entries, expected " + std::to_string(n));
      }
      for (std::size_t b = 0; b < n; ++b) {
        int v = table[a][b];
        if (v < 0 || static_cast<std::size_t>(v) >= n) {
          throw Error(ErrorCode::kInvalidInput, "entry [" + std::to_string(a) + "][" +
                                                    std::to_string(b) + "] out of range");
        }
        data.table[a * n + b] = static_cast<std::uint32_t>(v);
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      std::vector<char> row_seen(n, 0), col_seen(n, 0);
      for (std::size_t b = 0; b < n; ++b) {
        auto r = data.table[a * n + b];
        auto c = data.table[b * n + a];
        if (row_seen[r]++) {
          throw Error(ErrorCode::kNonLatin, "row " + std::to_string(a) + " repeats entry " +
                                                std::to_string(r));
        }
        if (col_seen[c]++) {
          throw Error(ErrorCode::kNonLatin, "column " + std::to_string(a) + " repeats entry " +
                                                std::to_string(c));
        }
      }
    }
    std::optional<std::size_t> identity;
    for (std::size_t e = 0; e < n && !identity; ++e) {
      bool ok = true;
      for (std::size_t a = 0; a < n && ok; ++a) {
        ok = data.table[e * n + a] == a && data.table[a * n + e] == a;
      }
      if (ok) identity = e;
    }
    if (!identity) throw Error(ErrorCode::kNoIdentity, "no two-sided neutral element");
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        auto ab = data.table[a * n + b];
        for (std::size_t c = 0; c < n; ++c) {
          auto bc = data.table[b * n + c];
          if (data.table[ab * n + c] != data.table[a * n + bc]) {
            auto label = [&](std::size_t x) {
              return names.size() == n ? names[x] : std::to_string(x);
            };
            throw Error(ErrorCode::kNonAssociative,
                        "(ab)c != a(bc) for (a,b,c) = (" + label(a) + "," + label(b) + "," +
                            label(c) + ")");
          }
        }
      }
    }
    if (names.empty()) {
      for (std::size_t a = 0; a < n; ++a) names.push_back("g" + std::to_string(a));
    }
    if (names.size() != n) {
      throw Error(ErrorCode::kInvalidInput, "expected " + std::to_string(n) + " names, got " +
                                                std::to_string(names.size()));
    }
    data.names = std::move(names);
    data.descriptor = "table[" + std::to_string(n) + "]";
    return finish(std::move(data), identity);
  }

  std::size_t size() const { return data_->n; }
  Elem identity() const { return Elem{data_->identity}; }
  bool is_abelian() const { return data_->abelian; }
  const std::string& descriptor() const { return data_->descriptor; }

  Elem mul(Elem a, Elem b) const {
    check(a);
    check(b);
    return Elem{data_->table[a.index * data_->n + b.index]};
  }
  Elem inv(Elem a) const {
    check(a);
    return Elem{data_->inverse[a.index]};
  }
  /// g^-1 a g.
  Elem conj(Elem a, Elem g) const { return mul(mul(inv(g), a), g); }

  Elem pow(Elem a, long long k) const {
    if (k < 0) {
      a = inv(a);
      k = -k;
    }
    Elem r = identity();
    for (long long i = 0; i < k; ++i) r = mul(r, a);
    return r;
  }

  int order(Elem a) const {
    check(a);
    int k = 1;
    for (Elem x = a; x != identity(); x = mul(x, a)) ++k;
    return k;
  }

  const std::string& name(Elem a) const {
    check(a);
    return data_->names[a.index];
  }
  std::span<const std::string> names() const { return data_->names; }

  /// Same group with new display names (one per element, distinct).
  Group with_names(std::vector<std::string> names) const {
    if (names.size() != size()) {
      throw Error(ErrorCode::kInvalidInput, "expected " + std::to_string(size()) + " names, got " +
                                                std::to_string(names.size()));
    }
    Data data = *data_;
    data.names = std::move(names);
    data.by_name.clear();
    return finish(std::move(data), data_->identity);
  }

  /// Case-sensitive lookup by display name.
  std::optional<Elem> find(std::string_view name) const {
    auto it = data_->by_name.find(std::string(name));
    if (it == data_->by_name.end()) return std::nullopt;
    return Elem{it->second};
  }
  Elem element_named(std::string_view name) const {
    if (auto e = find(name)) return *e;
    throw Error(ErrorCode::kForeignElement, "no element named \"" + std::string(name) + "\"");
  }

  Elem at(std::size_t index) const {
    if (index >= size()) {
      throw Error(ErrorCode::kForeignElement, "element index " + std::to_string(index) +
                                                  " not in group of order " +
                                                  std::to_string(size()));
    }
    return Elem{static_cast<std::uint32_t>(index)};
  }

  std::vector<Elem> elements() const {
    std::vector<Elem> out(size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = Elem{static_cast<std::uint32_t>(i)};
    return out;
  }

  bool contains(Elem a) const { return a.index < data_->n; }

  /// Throws kForeignElement unless `a` indexes this group.
  void check(Elem a) const {
    if (a.index >= data_->n) {
      throw Error(ErrorCode::kForeignElement, "element index " + std::to_string(a.index) +
                                                  " not in group of order " +
                                                  std::to_string(data_->n));
    }
  }

  /// Structural equality: same order, same identity, same table. Names are
  /// display-only and do not participate.
  friend bool operator==(const Group& x, const Group& y) {
    if (x.data_ == y.data_) return true;
    return x.data_->n == y.data_->n && x.data_->identity == y.data_->identity &&
           x.data_->table == y.data_->table;
  }

 private:
  struct Data {
    std::size_t n = 0;
    std::vector<std::uint32_t> table;
    std::vector<std::uint32_t> inverse;
    std::uint32_t identity = 0;
    bool abelian = true;
    std::vector<std::string> names;
    std::unordered_map<std::string, std::uint32_t> by_name;
    std::string descriptor;
  };

  static Group finish(Data data, std::optional<std::size_t> identity = std::nullopt) {
    const std::size_t n = data.n;
    if (!identity) {
      for (std::size_t e = 0; e < n && !identity; ++e) {
        bool ok = true;
        for (std::size_t a = 0; a < n && ok; ++a) ok = data.table[e * n + a] == a;
        if (ok) identity = e;
      }
    }
    data.identity = static_cast<std::uint32_t>(*identity);
    data.inverse.assign(n, 0);
    for (std::size_t a = 0; a < n; ++a) {
      bool found = false;
      for (std::size_t b = 0; b < n && !found; ++b) {
        if (data.table[a * n + b] == data.identity && data.table[b * n + a] == data.identity) {
          data.inverse[a] = static_cast<std::uint32_t>(b);
          found = true;
        }
      }
      if (!found) throw Error(ErrorCode::kNoInverse, "element " + std::to_string(a) + " has no inverse");
      for (std::size_t b = 0; b < n; ++b) {
        if (data.table[a * n + b] != data.table[b * n + a]) data.abelian = false;
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      if (!data.by_name.emplace(data.names[a], static_cast<std::uint32_t>(a)).second) {
        throw Error(ErrorCode::kInvalidInput, "duplicate element name \"" + data.names[a] + "\"");
      }
    }
    Group g;
    g.data_ = std::make_shared<const Data>(std::move(data));
    return g;
  }

  Group() = default;
  std::shared_ptr<const Data> data_;
};

/// A subgroup, stored as the sorted list of its members.
class Subgroup {
 public:
  /// Validates closure under products and inverses.
  Subgroup(Group parent, std::vector<Elem> members)
      : parent_(std::move(parent)), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    position_.assign(parent_.size(), kAbsent);
    for (std::size_t p = 0; p < members_.size(); ++p) {
      parent_.check(members_[p]);
      position_[members_[p].index] = static_cast<std::uint32_t>(p);
    }
    if (members_.empty() || !contains(parent_.identity())) {
      throw Error(ErrorCode::kInvalidInput, "subgroup must contain the identity");
    }
    for (Elem a : members_) {
      if (!contains(parent_.inv(a))) {
        throw Error(ErrorCode::kInvalidInput, "subset not closed under inverses");
      }
      for (Elem b : members_) {
        if (!contains(parent_.mul(a, b))) {
          throw Error(ErrorCode::kInvalidInput, "subset not closed under products (" +
                                                    parent_.name(a) + "*" + parent_.name(b) +
                                                    ")");
        }
      }
    }
  }

  /// The trivial subgroup {e}.
  static Subgroup trivial(const Group& g) { return Subgroup(g, {g.identity()}); }

  const Group& group() const { return parent_; }
  std::span<const Elem> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  Elem at(std::size_t pos) const { return members_.at(pos); }

  bool contains(Elem a) const { return a.index < position_.size() && position_[a.index] != kAbsent; }

  /// Position of `a` in members(); throws kForeignElement when absent.
  std::size_t position(Elem a) const {
    if (!contains(a)) {
      throw Error(ErrorCode::kForeignElement,
                  "element " + (parent_.contains(a) ? parent_.name(a) : std::to_string(a.index)) +
                      " not in subgroup");
    }
    return position_[a.index];
  }

  /// The subgroup as a group in its own right: element i is members()[i],
  /// names are inherited.
  Group as_group() const {
    const std::size_t k = members_.size();
    std::vector<std::vector<int>> table(k, std::vector<int>(k));
    std::vector<std::string> names;
    for (std::size_t a = 0; a < k; ++a) {
      names.push_back(parent_.name(members_[a]));
      for (std::size_t b = 0; b < k; ++b) {
        table[a][b] = static_cast<int>(position(parent_.mul(members_[a], members_[b])));
      }
    }
    return Group::from_table(table, std::move(names));
  }

  friend bool operator==(const Subgroup& x, const Subgroup& y) {
    return x.parent_ == y.parent_ && x.members_ == y.members_;
  }

 private:
  static constexpr std::uint32_t kAbsent = std::numeric_limits<std::uint32_t>::max();

  Group parent_;
  std::vector<Elem> members_;
  std::vector<std::uint32_t> position_;
};

/// Smallest subgroup containing `seed`.
inline Subgroup subgroup_closure(const Group& g, std::span<const Elem> seed) {
  std::vector<char> in(g.size(), 0);
  std::vector<Elem> members{g.identity()};
  in[g.identity().index] = 1;
  for (Elem s : seed) {
    g.check(s);
    if (!in[s.index]) {
      in[s.index] = 1;
      members.push_back(s);
    }
  }
  // Finite group: closure under products suffices.
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      for (Elem p : {g.mul(members[i], members[j]), g.mul(members[j], members[i])}) {
        if (!in[p.index]) {
          in[p.index] = 1;
          members.push_back(p);
        }
      }
    }
  }
  return Subgroup(g, std::move(members));
}

inline Subgroup subgroup_closure(const Group& g, std::initializer_list<Elem> seed) {
  std::vector<Elem> s(seed);
  return subgroup_closure(g, std::span<const Elem>(s));
}

/// The left coset g*H as a sorted set.
inline std::vector<Elem> left_coset(Elem g, const Subgroup& h) {
  const Group& grp = h.group();
  std::vector<Elem> out;
  out.reserve(h.size());
  for (Elem x : h.members()) out.push_back(grp.mul(g, x));
  std::sort(out.begin(), out.end());
  return out;
}

/// Canonical representative of g*H: its member with the smallest index.
inline Elem coset_representative(Elem g, const Subgroup& h) {
  const Group& grp = h.group();
  Elem best = grp.mul(g, h.at(0));
  for (Elem x : h.members()) best = std::min(best, grp.mul(g, x));
  return best;
}

/// Every subgroup of `g`, ordered by size and then by member list.
inline std::vector<Subgroup> all_subgroups(const Group& g) {
  if (g.size() > kSubgroupEnumerationCap) {
    throw Error(ErrorCode::kSizeCapExceeded,
                "subgroup enumeration is limited to groups of order <= " +
                    std::to_string(kSubgroupEnumerationCap));
  }
  using Mask = std::uint32_t;
  auto mask_of = [](const Subgroup& s) {
    Mask m = 0;
    for (Elem e : s.members()) m |= Mask{1} << e.index;
    return m;
  };
  std::vector<Subgroup> found{Subgroup::trivial(g)};
  std::vector<Mask> masks{mask_of(found[0])};
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (Elem x : g.elements()) {
      if (found[i].contains(x)) continue;
      std::vector<Elem> seed(found[i].members().begin(), found[i].members().end());
      seed.push_back(x);
      Subgroup s = subgroup_closure(g, std::span<const Elem>(seed));
      Mask m = mask_of(s);
      if (std::find(masks.begin(), masks.end(), m) == masks.end()) {
        masks.push_back(m);
        found.push_back(std::move(s));
      }
    }
  }
  std::sort(found.begin(), found.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.members().begin(), a.members().end(),
                                        b.members().begin(), b.members().end());
  });
  return found;
}

/// A map between two groups given as the image of each source element.
using Bijection = std::vector<Elem>;

/// True iff `f` is a bijective homomorphism from `source` onto `target`.
inline bool is_isomorphism(const Group& source, const Group& target, const Bijection& f) {
  if (f.size() != source.size() || source.size() != target.size()) return false;
  std::vector<char> hit(target.size(), 0);
  for (Elem y : f) {
    if (!target.contains(y) || hit[y.index]++) return false;
  }
  for (Elem a : source.elements()) {
    for (Elem b : source.elements()) {
      if (f[source.mul(a, b).index] != target.mul(f[a.index], f[b.index])) return false;
    }
  }
  return true;
}

/// Group isomorphisms source -> target, found by backtracking over images
/// of a small generating set. Stops after `limit` results.
inline std::vector<Bijection> find_isomorphisms(
    const Group& source, const Group& target,
    std::size_t limit = std::numeric_limits<std::size_t>::max()) {
  if (source.size() > kIsomorphismSearchCap || target.size() > kIsomorphismSearchCap) {
    throw Error(ErrorCode::kSizeCapExceeded, "isomorphism search is limited to order <= " +
                                                 std::to_string(kIsomorphismSearchCap));
  }
  std::vector<Bijection> out;
  if (source.size() != target.size() || limit == 0) return out;

  // Generators: greedily take elements of largest order not yet generated.
  std::vector<Elem> by_order = source.elements();
  std::stable_sort(by_order.begin(), by_order.end(), [&](Elem a, Elem b) {
    return source.order(a) > source.order(b);
  });
  std::vector<Elem> gens;
  std::size_t generated = 1;
  for (Elem x : by_order) {
    if (generated == source.size()) break;
    if (!gens.empty() && subgroup_closure(source, std::span<const Elem>(gens)).contains(x)) {
      continue;
    }
    gens.push_back(x);
    generated = subgroup_closure(source, std::span<const Elem>(gens)).size();
  }

  std::vector<std::vector<Elem>> candidates;
  for (Elem s : gens) {
    std::vector<Elem> c;
    for (Elem y : target.elements()) {
      if (target.order(y) == source.order(s)) c.push_back(y);
    }
    candidates.push_back(std::move(c));
  }

  std::vector<Elem> images(gens.size());
  const std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();
  auto extend = [&]() -> std::optional<Bijection> {
    Bijection f(source.size(), Elem{kUnset});
    f[source.identity().index] = target.identity();
    std::vector<Elem> queue{source.identity()};
    for (std::size_t q = 0; q < queue.size(); ++q) {
      Elem x = queue[q];
      for (std::size_t k = 0; k < gens.size(); ++k) {
        Elem y = source.mul(x, gens[k]);
        Elem fy = target.mul(f[x.index], images[k]);
        if (f[y.index].index == kUnset) {
          f[y.index] = fy;
          queue.push_back(y);
        } else if (f[y.index] != fy) {
          return std::nullopt;
        }
      }
    }
    if (!is_isomorphism(source, target, f)) return std::nullopt;
    return f;
  };

  auto recurse = [&](auto&& self, std::size_t k) -> void {
    if (out.size() >= limit) return;
    if (k == gens.size()) {
      if (auto f = extend()) out.push_back(std::move(*f));
      return;
    }
    for (Elem y : candidates[k]) {
      images[k] = y;
      self(self, k + 1);
      if (out.size() >= limit) return;
    }
  };
  recurse(recurse, 0);
  return out;
}

}  // namespace flagiso

#endif  // FLAGISO_GROUP_HPP
