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

// Isomorphism decisions for graded pairs and for the algebras A(D,m,g).
//
// A(D,m,g) and A(D',m',g') over the same group are isomorphic iff m = m'
// and some g in G has [g^-1]D[g] isomorphic to D' and, block by block,
// {g_i supp D} and {g'_i g^-1 supp D} agree as multisets of left cosets.
// The search runs over g in index order and stops at the first success.

#ifndef FLAGISO_ISO_HPP
#define FLAGISO_ISO_HPP

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
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

struct SearchOptions {
  unsigned threads = 1;
};

namespace detail {

inline std::string shape_text(const BlockShape& s) {
  std::string out = "(";
  for (std::size_t b = 0; b < s.num_blocks(); ++b) {
    if (b) out += ",";
    out += std::to_string(s.block_size(b));
  }
  return out + ")";
}

/// Pairs (rep, index) for indices [begin, end), rep the coset
/// representative of value(index) modulo h, sorted.
template <class F>
std::vector<std::pair<Elem, std::size_t>> coset_keys(std::size_t begin, std::size_t end,
                                                     const Subgroup& h, F value) {
  std::vector<std::pair<Elem, std::size_t>> keys;
  for (std::size_t i = begin; i < end; ++i) keys.emplace_back(coset_representative(value(i), h), i);
  std::sort(keys.begin(), keys.end());
  return keys;
}

struct ShiftOutcome {
  bool division_ok = false;
  std::size_t blocks_compared = 0;
  std::optional<IsoData> data;
};

/// Tests one candidate shift g and, on success, assembles the data.
inline ShiftOutcome try_shift(const FlagPresentation& p, const FlagPresentation& pp, Elem g) {
  ShiftOutcome out;
  const Group& grp = p.group();
  GradedDivisionAlgebra shifted = shift_conjugate(p.division(), g);
  auto mu_shifted = iso_division(shifted, pp.division());
  if (!mu_shifted) return out;
  out.division_ok = true;

  const Subgroup& h = p.support();
  const BlockShape& shape = p.shape();
  const Elem g_inv = grp.inv(g);
  std::vector<std::size_t> sigma(p.n());
  std::vector<Elem> hs(p.n());
  for (std::size_t b = 0; b < shape.num_blocks(); ++b) {
    ++out.blocks_compared;
    auto src = coset_keys(shape.block_begin(b), shape.block_end(b), h,
                          [&](std::size_t j) { return p.tuple()[j]; });
    auto dst = coset_keys(shape.block_begin(b), shape.block_end(b), h,
                          [&](std::size_t i) { return grp.mul(pp.tuple()[i], g_inv); });
    for (std::size_t k = 0; k < src.size(); ++k) {
      if (src[k].first != dst[k].first) return out;
    }
    for (std::size_t k = 0; k < src.size(); ++k) {
      std::size_t s = src[k].second, i = dst[k].second;
      sigma[i] = s;
      hs[s] = grp.mul(grp.mul(grp.inv(p.tuple()[s]), pp.tuple()[i]), g_inv);
    }
  }

  Corrector mu{mu_shifted->order, std::vector<std::int64_t>(h.size(), 0)};
  for (std::size_t q = 0; q < h.size(); ++q) {
    mu.exps[q] = mu_shifted->exps[shifted.support().position(grp.conj(h.at(q), g))];
  }
  out.data = IsoData{g, std::move(sigma), std::move(hs), std::move(mu)};
  return out;
}

/// Runs try_shift over every g and returns the smallest successful index
/// (or the group order), filling per-shift outcomes for stats.
inline std::size_t first_successful_shift(const FlagPresentation& p, const FlagPresentation& pp,
                                          unsigned threads, std::vector<ShiftOutcome>& outcomes) {
  const Group& grp = p.group();
  const std::size_t n = grp.size();
  outcomes.assign(n, ShiftOutcome{});
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
  std::atomic<std::size_t> best{n};
  if (threads == 1) {
    for (std::size_t idx = 0; idx < n; ++idx) {
      outcomes[idx] = try_shift(p, pp, grp.at(idx));
      if (outcomes[idx].data) return idx;
    }
    return n;
  }
  std::exception_ptr failure;
  std::mutex failure_lock;
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::size_t idx = t; idx < n && idx < best.load(); idx += threads) {
          outcomes[idx] = try_shift(p, pp, grp.at(idx));
          if (outcomes[idx].data) {
            std::size_t cur = best.load();
            while (idx < cur && !best.compare_exchange_weak(cur, idx)) {
            }
            return;
          }
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_lock);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return best.load();
}

inline void require_same_group(const FlagPresentation& p, const FlagPresentation& pp) {
  if (!(p.group() == pp.group())) {
    throw Error(ErrorCode::kGroupMismatch, "isomorphism needs both gradings over the same group (" +
                                               p.group().descriptor() + " vs " +
                                               pp.group().descriptor() + ")");
  }
}

}  // namespace detail

/// Isomorphism of graded pairs (D, V) -> (D', V') with V = (+) [g_i]D, no
/// flag and no shift. Block structure in the inputs is ignored: V and V'
/// are compared as single blocks.
inline Verdict iso_pairs(const FlagPresentation& p, const FlagPresentation& pp) {
  detail::require_same_group(p, pp);
  if (p.n() != pp.n()) {
    return NotIsomorphic{CertificateKind::kShape,
                         "ranks differ: " + std::to_string(p.n()) + " vs " + std::to_string(pp.n()),
                         {}};
  }
  FlagPresentation flat(p.division(), BlockShape({static_cast<int>(p.n())}), p.tuple());
  FlagPresentation flatp(pp.division(), BlockShape({static_cast<int>(pp.n())}), pp.tuple());
  SearchStats stats{1, 0, 0};
  if (!iso_division(p.division(), pp.division())) {
    return NotIsomorphic{CertificateKind::kDivision, "D and D' are not isomorphic as graded algebras",
                         stats};
  }
  auto outcome = detail::try_shift(flat, flatp, p.group().identity());
  stats.shifts_division_ok = 1;
  stats.blocks_compared = outcome.blocks_compared;
  if (!outcome.data) {
    return NotIsomorphic{CertificateKind::kCosets, "multisets of left cosets g_i supp D differ", stats};
  }
  GradedAlgebra a = realize(flat), ap = realize(flatp);
  IsoWitness w = build_witness(a, ap, std::move(*outcome.data));
  if (!verify_witness(a, ap, w.map).ok()) {
    throw Error(ErrorCode::kInternal, "pair witness failed verification");
  }
  return Isomorphic{std::move(w)};
}

/// Decides A(P) ~ A(P') as G-graded algebras. On success the witness is
/// verified before it is returned.
inline Verdict iso_algebras(const GradedAlgebra& a, const GradedAlgebra& ap,
                            const SearchOptions& options = {}) {
  const FlagPresentation& p = a.presentation();
  const FlagPresentation& pp = ap.presentation();
  detail::require_same_group(p, pp);
  if (!(p.shape() == pp.shape())) {
    return NotIsomorphic{CertificateKind::kShape,
                         "block shapes differ: " + detail::shape_text(p.shape()) + " vs " +
                             detail::shape_text(pp.shape()),
                         {}};
  }
  std::vector<detail::ShiftOutcome> outcomes;
  std::size_t found = detail::first_successful_shift(p, pp, options.threads, outcomes);
  if (found < p.group().size()) {
    IsoWitness w = build_witness(a, ap, std::move(*outcomes[found].data));
    WitnessReport report = verify_witness(a, ap, w.map);
    if (!report.ok()) {
      throw Error(ErrorCode::kInternal, "constructed witness failed verification: " +
                                            report.failures.front());
    }
    return Isomorphic{std::move(w)};
  }

  SearchStats stats;
  for (const auto& o : outcomes) {
    ++stats.shifts_tried;
    stats.shifts_division_ok += o.division_ok;
    stats.blocks_compared += o.blocks_compared;
  }
  std::string searched = "criterion exhausted over " + std::to_string(stats.shifts_tried) +
                         " shifts (" + std::to_string(stats.shifts_division_ok) +
                         " with isomorphic division part)";
  if (auto why = describe_invariant_mismatch(invariants(a), invariants(ap), p.group())) {
    return NotIsomorphic{CertificateKind::kInvariantMismatch, *why + "; " + searched, stats};
  }
  return NotIsomorphic{CertificateKind::kSearchExhausted, searched, stats};
}

inline Verdict iso_algebras(const FlagPresentation& p, const FlagPresentation& pp,
                            const SearchOptions& options = {}) {
  detail::require_same_group(p, pp);
  if (!(p.shape() == pp.shape())) {
    return NotIsomorphic{CertificateKind::kShape,
                         "block shapes differ: " + detail::shape_text(p.shape()) + " vs " +
                             detail::shape_text(pp.shape()),
                         {}};
  }
  return iso_algebras(realize(p), realize(pp), options);
}

}  // namespace flagiso

#endif  // FLAGISO_ISO_HPP
