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

// JSON files: presentations, groups, division algebras and isomorphism
// witnesses. All scalars are integer exponents. Element references are
// display names, matched case-sensitively.
//
// Presentation:
//   {"v":1, "group":G, "division":D, "blocks":[m_1,...], "tuple":["name",...]}
// Group:
//   {"kind":"abelian", "factors":[...], "names":[...]?}
//   {"kind":"table", "table":[[...]], "names":[...]?}
// Division:
//   {"kind":"trivial"}
//   {"kind":"pauli", "t":t, "images":["u","v"]}
//   {"kind":"twisted", "support":[...], "root_order":m, "values":[[...]]}
// Witness:
//   {"v":1, "g":"name", "sigma":[1-based], "h":["name",...],
//    "mu":{"name":exp,...}, "root_order":m, "scalar_order":l,
//    "map":[{"from":[i,j,"h"], "to":[i,j,"h"], "scalar_exp":k}, ...]}

#ifndef FLAGISO_JSON_IO_HPP
#define FLAGISO_JSON_IO_HPP

#include <cstddef>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "flagiso/algebra.hpp"
#include "flagiso/cocycle.hpp"
#include "flagiso/division.hpp"
#include "flagiso/error.hpp"
#include "flagiso/group.hpp"
#include "flagiso/presentation.hpp"
#include "flagiso/witness.hpp"

namespace flagiso::io {

using json = nlohmann::json;

inline constexpr int kFormatVersion = 1;

/// Failure to read an input file. what() starts with "file error:",
/// "parse error:" or "validation error:".
class LoadError : public std::runtime_error {
 public:
  enum class Stage { kFile, kParse, kValidation };

  LoadError(Stage stage, const std::string& message)
      : std::runtime_error(prefix(stage) + message), stage_(stage) {}

  Stage stage() const noexcept { return stage_; }

 private:
  static std::string prefix(Stage s) {
    switch (s) {
      case Stage::kFile: return "file error: ";
      case Stage::kParse: return "parse error: ";
      case Stage::kValidation: return "validation error: ";
    }
    return "";
  }

  Stage stage_;
};

/// Text of a loaded file plus enough to anchor messages to lines.
class Source {
 public:
  Source(std::string name, std::string text) : name_(std::move(name)), text_(std::move(text)) {}

  static Source read(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw LoadError(LoadError::Stage::kFile, path + ": cannot open");
    std::stringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw LoadError(LoadError::Stage::kFile, path + ": read failed");
    return Source(path, buf.str());
  }

  const std::string& name() const { return name_; }
  const std::string& text() const { return text_; }

  json parse() const {
    try {
      return json::parse(text_);
    } catch (const json::parse_error& e) {
      auto [line, col] = line_col(e.byte > 0 ? e.byte - 1 : 0);
      throw LoadError(LoadError::Stage::kParse, name_ + ":" + std::to_string(line) + ":" +
                                                    std::to_string(col) + ": " + e.what());
    }
  }

  /// 1-based line of the first occurrence of "key" (1 if absent).
  std::size_t line_of(const std::string& key) const {
    auto pos = text_.find("\"" + key + "\"");
    return pos == std::string::npos ? 1 : line_col(pos).first;
  }

  [[noreturn]] void fail(const std::string& key, const std::string& detail) const {
    throw LoadError(LoadError::Stage::kValidation,
                    name_ + ":" + std::to_string(line_of(key)) + ": " + key + ": " + detail);
  }

 private:
  std::pair<std::size_t, std::size_t> line_col(std::size_t offset) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < offset && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    return {line, col};
  }

  std::string name_;
  std::string text_;
};

namespace detail {

inline const json& field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw Error(ErrorCode::kInvalidInput, std::string("missing field \"") + key + "\"");
  }
  return obj.at(key);
}

inline std::int64_t as_int(const json& v, const char* what) {
  if (!v.is_number_integer()) throw Error(ErrorCode::kInvalidInput, std::string(what) + " must be an integer");
  return v.get<std::int64_t>();
}

inline std::string as_string(const json& v, const char* what) {
  if (!v.is_string()) throw Error(ErrorCode::kInvalidInput, std::string(what) + " must be a string");
  return v.get<std::string>();
}

inline std::vector<std::string> as_strings(const json& v, const char* what) {
  if (!v.is_array()) throw Error(ErrorCode::kInvalidInput, std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(as_string(x, what));
  return out;
}

inline std::vector<Elem> elements(const Group& g, const json& v, const char* what) {
  std::vector<Elem> out;
  for (const auto& name : as_strings(v, what)) out.push_back(g.element_named(name));
  return out;
}

inline void check_kind(const json& obj, const char* what) {
  if (!obj.is_object()) throw Error(ErrorCode::kInvalidInput, std::string(what) + " must be an object");
}

}  // namespace detail

inline Group group_from_json(const json& j) {
  detail::check_kind(j, "group");
  std::string kind = detail::as_string(detail::field(j, "kind"), "group kind");
  std::optional<std::vector<std::string>> names;
  if (j.contains("names")) names = detail::as_strings(j.at("names"), "names");
  if (kind == "abelian") {
    const json& f = detail::field(j, "factors");
    if (!f.is_array()) throw Error(ErrorCode::kInvalidInput, "factors must be an array");
    std::vector<int> factors;
    for (const auto& x : f) factors.push_back(static_cast<int>(detail::as_int(x, "factor")));
    Group g = Group::abelian(std::span<const int>(factors));
    return names ? g.with_names(std::move(*names)) : g;
  }
  if (kind == "table") {
    const json& t = detail::field(j, "table");
    if (!t.is_array()) throw Error(ErrorCode::kInvalidInput, "table must be an array of rows");
    std::vector<std::vector<int>> table;
    for (const auto& row : t) {
      if (!row.is_array()) throw Error(ErrorCode::kInvalidInput, "table rows must be arrays");
      std::vector<int> r;
      for (const auto& x : row) r.push_back(static_cast<int>(detail::as_int(x, "table entry")));
      table.push_back(std::move(r));
    }
    return Group::from_table(table, names.value_or(std::vector<std::string>{}));
  }
  throw Error(ErrorCode::kInvalidInput, "unknown group kind \"" + kind + "\"");
}

inline json group_to_json(const Group& g) {
  json t = json::array();
  for (Elem a : g.elements()) {
    json row = json::array();
    for (Elem b : g.elements()) row.push_back(g.mul(a, b).index);
    t.push_back(row);
  }
  json names = json::array();
  for (const auto& n : g.names()) names.push_back(n);
  return json{{"kind", "table"}, {"names", names}, {"table", t}};
}

inline GradedDivisionAlgebra division_from_json(const json& j, const Group& g) {
  detail::check_kind(j, "division");
  std::string kind = detail::as_string(detail::field(j, "kind"), "division kind");
  if (kind == "trivial") return trivial_division(g);
  if (kind == "pauli") {
    int t = static_cast<int>(detail::as_int(detail::field(j, "t"), "t"));
    auto images = detail::elements(g, detail::field(j, "images"), "images");
    if (images.size() != 2) throw Error(ErrorCode::kInvalidInput, "pauli needs exactly two images");
    return pauli(t, g, images[0], images[1]);
  }
  if (kind == "twisted") {
    auto listed = detail::elements(g, detail::field(j, "support"), "support");
    std::int64_t m = detail::as_int(detail::field(j, "root_order"), "root_order");
    if (m < 1) throw Error(ErrorCode::kInvalidCocycle, "root_order must be >= 1");
    const std::size_t k = listed.size();
    Subgroup h(g, listed);
    if (h.size() != k) throw Error(ErrorCode::kInvalidInput, "support lists an element twice");
    const json& rows = detail::field(j, "values");
    if (!rows.is_array() || rows.size() != k) {
      throw Error(ErrorCode::kInvalidCocycle, "values must have one row per support element");
    }
    std::vector<std::int64_t> values(k * k);
    for (std::size_t a = 0; a < k; ++a) {
      if (!rows[a].is_array() || rows[a].size() != k) {
        throw Error(ErrorCode::kInvalidCocycle, "row " + std::to_string(a) + " needs " +
                                                    std::to_string(k) + " exponents");
      }
      for (std::size_t b = 0; b < k; ++b) {
        values[h.position(listed[a]) * k + h.position(listed[b])] =
            detail::as_int(rows[a][b], "cocycle exponent");
      }
    }
    return GradedDivisionAlgebra(Cocycle(std::move(h), m, std::move(values)));
  }
  throw Error(ErrorCode::kInvalidInput, "unknown division kind \"" + kind + "\"");
}

/// Always written as "twisted" (or "trivial"), rows in support order.
inline json division_to_json(const GradedDivisionAlgebra& d) {
  if (d.is_trivial()) return json{{"kind", "trivial"}};
  const Group& g = d.group();
  const Cocycle& c = d.cocycle();
  json support = json::array(), rows = json::array();
  for (std::size_t a = 0; a < d.support().size(); ++a) {
    support.push_back(g.name(d.support().at(a)));
    json row = json::array();
    for (std::size_t b = 0; b < d.support().size(); ++b) row.push_back(c.exp_at(a, b));
    rows.push_back(row);
  }
  return json{{"kind", "twisted"}, {"support", support}, {"root_order", c.order()}, {"values", rows}};
}

/// Turns library errors raised while reading `key` into validation errors
/// anchored at that key.
template <class F>
auto anchored(const Source& src, const std::string& key, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kInternal) throw;
    src.fail(key, e.what());
  } catch (const json::exception& e) {
    src.fail(key, e.what());
  }
}

inline void check_version(const Source& src, const json& j) {
  if (!j.is_object()) src.fail("v", "top level must be a JSON object");
  if (!j.contains("v")) src.fail("v", "missing format version (expected \"v\":1)");
  if (!j.at("v").is_number_integer() || j.at("v").get<std::int64_t>() != kFormatVersion) {
    src.fail("v", "unsupported format version " + j.at("v").dump());
  }
}

inline FlagPresentation presentation_from_json(const Source& src, const json& j) {
  check_version(src, j);
  for (const auto& [key, value] : j.items()) {
    if (key != "v" && key != "group" && key != "division" && key != "blocks" && key != "tuple") {
      src.fail(key, "unknown field");
    }
  }
  for (const char* key : {"group", "division", "blocks", "tuple"}) {
    if (!j.contains(key)) src.fail(key, "missing field");
  }
  Group g = anchored(src, "group", [&] { return group_from_json(j.at("group")); });
  GradedDivisionAlgebra d = anchored(src, "division", [&] { return division_from_json(j.at("division"), g); });
  BlockShape shape = anchored(src, "blocks", [&] {
    const json& b = j.at("blocks");
    if (!b.is_array()) throw Error(ErrorCode::kInvalidInput, "blocks must be an array");
    std::vector<int> blocks;
    for (const auto& x : b) blocks.push_back(static_cast<int>(detail::as_int(x, "block size")));
    return BlockShape(std::move(blocks));
  });
  return anchored(src, "tuple", [&] {
    return FlagPresentation(d, shape, detail::elements(g, j.at("tuple"), "tuple"));
  });
}

inline FlagPresentation load_presentation(const std::string& path) {
  Source src = Source::read(path);
  return presentation_from_json(src, src.parse());
}

inline FlagPresentation parse_presentation(const std::string& text, const std::string& name = "<string>") {
  Source src(name, text);
  return presentation_from_json(src, src.parse());
}

inline json presentation_to_json(const FlagPresentation& p) {
  json tuple = json::array();
  for (Elem x : p.tuple()) tuple.push_back(p.group().name(x));
  return json{{"v", kFormatVersion},
              {"group", group_to_json(p.group())},
              {"division", division_to_json(p.division())},
              {"blocks", p.shape().blocks()},
              {"tuple", tuple}};
}

inline json basis_to_json(const GradedAlgebra& a, std::size_t b) {
  const BasisElem& e = a.basis(b);
  return json::array({e.row + 1, e.col + 1, a.group().name(e.h)});
}

inline json witness_to_json(const GradedAlgebra& a, const GradedAlgebra& ap, const IsoWitness& w) {
  const Group& g = a.group();
  json sigma = json::array(), h = json::array(), mu = json::object(), map = json::array();
  for (std::size_t s : w.data.sigma) sigma.push_back(s + 1);
  for (Elem x : w.data.h) h.push_back(g.name(x));
  for (std::size_t q = 0; q < a.support().size(); ++q) mu[g.name(a.support().at(q))] = w.data.mu.exps[q];
  for (std::size_t b = 0; b < w.map.image.size(); ++b) {
    map.push_back(json{{"from", basis_to_json(a, b)},
                       {"to", basis_to_json(ap, w.map.image[b].index)},
                       {"scalar_exp", w.map.image[b].exp}});
  }
  return json{{"v", kFormatVersion}, {"g", g.name(w.data.shift)}, {"sigma", sigma},
              {"h", h}, {"mu", mu}, {"root_order", w.data.mu.order},
              {"scalar_order", w.map.order}, {"map", map}};
}

namespace detail {

inline std::size_t basis_from_json(const GradedAlgebra& a, const json& v, const char* side) {
  if (!v.is_array() || v.size() != 3) {
    throw Error(ErrorCode::kInvalidInput, std::string(side) + " must be [i, j, \"h\"]");
  }
  std::int64_t i = as_int(v[0], "row"), j = as_int(v[1], "column");
  Elem h = a.group().element_named(as_string(v[2], "degree name"));
  if (i < 1 || j < 1) throw Error(ErrorCode::kInvalidInput, "rows and columns are 1-based");
  auto idx = a.index_of(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1), h);
  if (!idx) throw Error(ErrorCode::kInvalidInput, std::string(side) + " " + v.dump() + " is not a basis element");
  return *idx;
}

}  // namespace detail

/// Reads a witness against the two realized algebras it claims to relate.
inline IsoWitness witness_from_json(const Source& src, const json& j, const GradedAlgebra& a,
                                    const GradedAlgebra& ap) {
  check_version(src, j);
  for (const char* key : {"g", "sigma", "h", "mu", "root_order", "scalar_order", "map"}) {
    if (!j.contains(key)) src.fail(key, "missing field");
  }
  const Group& g = a.group();
  IsoWitness w;
  w.data.shift = anchored(src, "g", [&] { return g.element_named(detail::as_string(j.at("g"), "g")); });
  anchored(src, "sigma", [&] {
    if (!j.at("sigma").is_array()) throw Error(ErrorCode::kInvalidInput, "sigma must be an array");
    for (const auto& x : j.at("sigma")) {
      std::int64_t s = detail::as_int(x, "sigma entry");
      if (s < 1) throw Error(ErrorCode::kInvalidInput, "sigma is 1-based");
      w.data.sigma.push_back(static_cast<std::size_t>(s - 1));
    }
    return 0;
  });
  w.data.h = anchored(src, "h", [&] { return detail::elements(g, j.at("h"), "h"); });
  w.data.mu.order = anchored(src, "root_order", [&] {
    std::int64_t m = detail::as_int(j.at("root_order"), "root_order");
    if (m < 1) throw Error(ErrorCode::kInvalidInput, "root_order must be >= 1");
    return m;
  });
  anchored(src, "mu", [&] {
    const json& mu = j.at("mu");
    if (!mu.is_object()) throw Error(ErrorCode::kInvalidInput, "mu must map support names to exponents");
    w.data.mu.exps.assign(a.support().size(), 0);
    std::vector<char> seen(a.support().size(), 0);
    for (const auto& [name, exp] : mu.items()) {
      Elem h = g.element_named(name);
      if (!a.support().contains(h)) throw Error(ErrorCode::kInvalidInput, name + " is not in supp D");
      std::size_t q = a.support().position(h);
      seen[q] = 1;
      w.data.mu.exps[q] = flagiso::detail::mod(detail::as_int(exp, "mu exponent"), w.data.mu.order);
    }
    for (std::size_t q = 0; q < seen.size(); ++q) {
      if (!seen[q]) throw Error(ErrorCode::kInvalidInput, "mu has no value for " + g.name(a.support().at(q)));
    }
    return 0;
  });
  w.map.order = anchored(src, "scalar_order", [&] {
    std::int64_t l = detail::as_int(j.at("scalar_order"), "scalar_order");
    if (l < 1) throw Error(ErrorCode::kInvalidInput, "scalar_order must be >= 1");
    return l;
  });
  anchored(src, "map", [&] {
    const json& m = j.at("map");
    if (!m.is_array()) throw Error(ErrorCode::kInvalidInput, "map must be an array");
    std::vector<std::optional<Term>> image(a.dim());
    for (const auto& entry : m) {
      std::size_t from = detail::basis_from_json(a, detail::field(entry, "from"), "from");
      std::size_t to = detail::basis_from_json(ap, detail::field(entry, "to"), "to");
      std::int64_t exp = detail::as_int(detail::field(entry, "scalar_exp"), "scalar_exp");
      if (image[from]) throw Error(ErrorCode::kInvalidInput, "basis element listed twice in map");
      image[from] = Term{to, flagiso::detail::mod(exp, w.map.order)};
    }
    for (std::size_t b = 0; b < image.size(); ++b) {
      if (!image[b]) {
        throw Error(ErrorCode::kInvalidInput, "map has no entry for " + basis_to_json(a, b).dump());
      }
      w.map.image.push_back(*image[b]);
    }
    return 0;
  });
  return w;
}

inline IsoWitness load_witness(const std::string& path, const GradedAlgebra& a, const GradedAlgebra& ap) {
  Source src = Source::read(path);
  return witness_from_json(src, src.parse(), a, ap);
}

}  // namespace flagiso::io

#endif  // FLAGISO_JSON_IO_HPP
