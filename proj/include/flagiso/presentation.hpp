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

// A flag presentation (D, m, g) describes the graded flag
//   0 = V_0 < V_1 < ... < V_s = V,   V_i = (+)_{j <= n_i} [g_j]D,
// with n_i = m_1 + ... + m_i, together with its endomorphism algebra.

#ifndef FLAGISO_PRESENTATION_HPP
#define FLAGISO_PRESENTATION_HPP

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "flagiso/division.hpp"
#include "flagiso/error.hpp"
#include "flagiso/group.hpp"

namespace flagiso {

class BlockShape {
 public:
  explicit BlockShape(std::vector<int> blocks) : blocks_(std::move(blocks)) {
    if (blocks_.empty()) throw Error(ErrorCode::kInvalidInput, "block shape needs at least one block");
    for (int m : blocks_) {
      if (m < 1) throw Error(ErrorCode::kInvalidInput, "block sizes must be >= 1");
    }
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      for (int k = 0; k < blocks_[b]; ++k) block_of_.push_back(b);
    }
  }

  std::size_t num_blocks() const { return blocks_.size(); }
  std::size_t n() const { return block_of_.size(); }
  const std::vector<int>& blocks() const { return blocks_; }
  int block_size(std::size_t b) const { return blocks_.at(b); }

  /// Block containing 0-based index i.
  std::size_t block_of(std::size_t i) const { return block_of_.at(i); }
  /// First 0-based index of block b.
  std::size_t block_begin(std::size_t b) const {
    return static_cast<std::size_t>(std::accumulate(blocks_.begin(), blocks_.begin() + b, 0));
  }
  std::size_t block_end(std::size_t b) const { return block_begin(b) + blocks_.at(b); }

  /// Number of admissible (i, j) pairs, i.e. sum over k <= l of m_k m_l.
  std::size_t num_entries() const {
    std::size_t total = 0;
    for (std::size_t k = 0; k < blocks_.size(); ++k) {
      for (std::size_t l = k; l < blocks_.size(); ++l) total += std::size_t(blocks_[k]) * blocks_[l];
    }
    return total;
  }

  friend bool operator==(const BlockShape& a, const BlockShape& b) { return a.blocks_ == b.blocks_; }

 private:
  std::vector<int> blocks_;
  std::vector<std::size_t> block_of_;
};

class FlagPresentation {
 public:
  FlagPresentation(GradedDivisionAlgebra division, BlockShape shape, std::vector<Elem> tuple)
      : division_(std::move(division)), shape_(std::move(shape)), tuple_(std::move(tuple)) {
    if (tuple_.size() != shape_.n()) {
      throw Error(ErrorCode::kLengthMismatch, "tuple has " + std::to_string(tuple_.size()) +
                                                  " entries but the blocks sum to " +
                                                  std::to_string(shape_.n()));
    }
    for (Elem x : tuple_) group().check(x);
  }

  const GradedDivisionAlgebra& division() const { return division_; }
  const Group& group() const { return division_.group(); }
  const Subgroup& support() const { return division_.support(); }
  const BlockShape& shape() const { return shape_; }
  const std::vector<Elem>& tuple() const { return tuple_; }
  std::size_t n() const { return shape_.n(); }
  /// Flag length r = number of blocks.
  std::size_t length() const { return shape_.num_blocks(); }

  friend bool operator==(const FlagPresentation& a, const FlagPresentation& b) {
    return a.division_ == b.division_ && a.shape_ == b.shape_ && a.tuple_ == b.tuple_;
  }

 private:
  GradedDivisionAlgebra division_;
  BlockShape shape_;
  std::vector<Elem> tuple_;
};

inline FlagPresentation make_presentation(GradedDivisionAlgebra d, std::vector<int> blocks,
                                          std::vector<Elem> tuple) {
  return FlagPresentation(std::move(d), BlockShape(std::move(blocks)), std::move(tuple));
}

/// F(D,m,g)^[g] = F([g^-1]D[g], m, (g_1 g, ..., g_n g)).
inline FlagPresentation shift_presentation(const FlagPresentation& p, Elem g) {
  std::vector<Elem> tuple;
  for (Elem x : p.tuple()) tuple.push_back(p.group().mul(x, g));
  return FlagPresentation(shift_conjugate(p.division(), g), p.shape(), std::move(tuple));
}

/// Per block, the sorted multiset of canonical representatives of the left
/// cosets g_i H, H = supp D.
using CosetSignature = std::vector<std::vector<Elem>>;

inline CosetSignature coset_signature(const FlagPresentation& p) {
  CosetSignature sig(p.shape().num_blocks());
  for (std::size_t i = 0; i < p.n(); ++i) {
    sig[p.shape().block_of(i)].push_back(coset_representative(p.tuple()[i], p.support()));
  }
  for (auto& block : sig) std::sort(block.begin(), block.end());
  return sig;
}

}  // namespace flagiso

#endif  // FLAGISO_PRESENTATION_HPP
