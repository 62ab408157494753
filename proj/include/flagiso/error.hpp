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

#ifndef FLAGISO_ERROR_HPP
#define FLAGISO_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace flagiso {

enum class ErrorCode {
  kInvalidInput,
  kNonLatin,
  kNonAssociative,
  kNoIdentity,
  kNoInverse,
  kForeignElement,
  kGroupMismatch,
  kSizeCapExceeded,
  kInvalidCocycle,
  kSupportMismatch,
  kInvalidEmbedding,
  kNotIsomorphism,
  kLengthMismatch,
  kInvalidWitnessData,
  kUnsupportedInput,
  kBudgetExceeded,
  kParse,
  kInternal,
};

inline std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidInput: return "invalid input";
    case ErrorCode::kNonLatin: return "non-latin table";
    case ErrorCode::kNonAssociative: return "non-associative table";
    case ErrorCode::kNoIdentity: return "no identity";
    case ErrorCode::kNoInverse: return "no inverse";
    case ErrorCode::kForeignElement: return "foreign element";
    case ErrorCode::kGroupMismatch: return "group mismatch";
    case ErrorCode::kSizeCapExceeded: return "size cap exceeded";
    case ErrorCode::kInvalidCocycle: return "invalid cocycle";
    case ErrorCode::kSupportMismatch: return "support mismatch";
    case ErrorCode::kInvalidEmbedding: return "invalid embedding";
    case ErrorCode::kNotIsomorphism: return "not an isomorphism";
    case ErrorCode::kLengthMismatch: return "length mismatch";
    case ErrorCode::kInvalidWitnessData: return "invalid witness data";
    case ErrorCode::kUnsupportedInput: return "unsupported input";
    case ErrorCode::kBudgetExceeded: return "budget exceeded";
    case ErrorCode::kParse: return "parse error";
    case ErrorCode::kInternal: return "internal error";
  }
  return "unknown";
}

/// Every failure raised by the library carries one of the codes above. The
/// message always starts with the code's name so callers can grep for it.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string_view detail)
      : std::runtime_error(compose(code, detail)), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  /// Input problems (as opposed to broken invariants inside the library).
  bool is_input_error() const noexcept { return code_ != ErrorCode::kInternal; }

 private:
  static std::string compose(ErrorCode code, std::string_view detail) {
    std::string out(error_code_name(code));
    if (!detail.empty()) {
      out += ": ";
      out += detail;
    }
    return out;
  }

  ErrorCode code_;
};

}  // namespace flagiso

#endif  // FLAGISO_ERROR_HPP
