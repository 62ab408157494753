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

#ifndef FLAGISO_VERDICT_HPP
#define FLAGISO_VERDICT_HPP

#include <cstddef>
#include <string>
#include <variant>

#include "flagiso/witness.hpp"

namespace flagiso {

/// Size of the space a negative answer was obtained from.
struct SearchStats {
  std::size_t shifts_tried = 0;
  std::size_t shifts_division_ok = 0;  // shifts with [g^-1]D[g] isomorphic to D'
  std::size_t blocks_compared = 0;     // per-block coset multiset comparisons
};

enum class CertificateKind {
  kShape,              // block shapes differ
  kDivision,           // division parts are not isomorphic
  kCosets,             // coset multisets differ
  kInvariantMismatch,  // graded invariants differ (search also exhausted)
  kSearchExhausted,    // every candidate shift failed, invariants agree
};

inline const char* certificate_name(CertificateKind k) {
  switch (k) {
    case CertificateKind::kShape: return "shape";
    case CertificateKind::kDivision: return "division";
    case CertificateKind::kCosets: return "cosets";
    case CertificateKind::kInvariantMismatch: return "invariant-mismatch";
    case CertificateKind::kSearchExhausted: return "search-exhausted";
  }
  return "unknown";
}

struct Isomorphic {
  IsoWitness witness;
};

struct NotIsomorphic {
  CertificateKind kind = CertificateKind::kSearchExhausted;
  std::string detail;
  SearchStats stats;
};

struct Equivalent {
  EquivWitness witness;
};

struct NotEquivalent {
  std::string reason;
};

struct Inconclusive {
  std::string detail;
};

using Verdict = std::variant<Isomorphic, NotIsomorphic, Equivalent, NotEquivalent, Inconclusive>;

/// The stable first-line token printed by the CLI.
inline const char* verdict_token(const Verdict& v) {
  struct Visitor {
    const char* operator()(const Isomorphic&) const { return "ISOMORPHIC"; }
    const char* operator()(const NotIsomorphic&) const { return "NOT_ISOMORPHIC"; }
    const char* operator()(const Equivalent&) const { return "EQUIVALENT"; }
    const char* operator()(const NotEquivalent&) const { return "NOT_EQUIVALENT"; }
    const char* operator()(const Inconclusive&) const { return "INCONCLUSIVE"; }
  };
  return std::visit(Visitor{}, v);
}

}  // namespace flagiso

#endif  // FLAGISO_VERDICT_HPP
