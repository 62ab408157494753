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

// The subcommands behind the flagiso executable, as plain functions writing
// to streams so they can be tested without a process.
//
// Exit codes: 0 when a decision (or requested output) was produced, 1 for
// internal errors, 2 for invalid input. The first stdout line of a decision
// is a single token; detail follows on later lines.

#ifndef FLAGISO_COMMANDS_HPP
#define FLAGISO_COMMANDS_HPP

#include <cstdint>
#include <exception>
#include <fstream>
#include <functional>
#include <numeric>
#include <optional>
#include <ostream>
#include <regex>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "flagiso/algebra.hpp"
#include "flagiso/classify.hpp"
#include "flagiso/equiv.hpp"
#include "flagiso/error.hpp"
#include "flagiso/iso.hpp"
#include "flagiso/json_io.hpp"
#include "flagiso/verdict.hpp"
#include "flagiso/witness.hpp"

namespace flagiso::cli {

inline constexpr int kExitDecision = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitInput = 2;

/// Runs `body`, mapping every failure onto the exit-code contract.
inline int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const io::LoadError& e) {
    err << e.what() << "\n";
    return kExitInput;
  } catch (const Error& e) {
    if (e.is_input_error()) {
      err << "validation error: " << e.what() << "\n";
      return kExitInput;
    }
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (...) {
    err << "internal error: unknown exception\n";
    return kExitInternal;
  }
}

namespace detail {

inline std::string tuple_text(const Group& g, const std::vector<Elem>& t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) out += (i ? "," : "") + g.name(t[i]);
  return out + ")";
}

inline std::string index_list(const std::vector<std::size_t>& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i] + 1);
  return out + "]";
}

inline void print_verdict(std::ostream& out, const Verdict& v, const Group& g, const Group& gp) {
  out << verdict_token(v) << "\n";
  if (const auto* iso = std::get_if<Isomorphic>(&v)) {
    const IsoData& d = iso->witness.data;
    out << "shift: " << g.name(d.shift) << "\n";
    out << "sigma: " << index_list(d.sigma) << "\n";
    out << "h: " << tuple_text(g, d.h) << "\n";
    out << "witness: monomial map on " << iso->witness.map.image.size()
        << " basis elements, verified\n";
  } else if (const auto* no = std::get_if<NotIsomorphic>(&v)) {
    out << "certificate: " << certificate_name(no->kind) << "\n";
    out << "detail: " << no->detail << "\n";
    out << "searched: shifts=" << no->stats.shifts_tried
        << " division_ok=" << no->stats.shifts_division_ok
        << " blocks_compared=" << no->stats.blocks_compared << "\n";
  } else if (const auto* eq = std::get_if<Equivalent>(&v)) {
    out << "lambda:";
    for (auto [x, y] : eq->witness.lambda) out << " " << g.name(x) << "->" << gp.name(y);
    out << "\nsigma: " << index_list(eq->witness.sigma) << "\n";
    out << "components:";
    for (auto [x, y] : eq->witness.components) out << " " << g.name(x) << "->" << gp.name(y);
    out << "\nwitness: component map verified\n";
  } else if (const auto* ne = std::get_if<NotEquivalent>(&v)) {
    out << "reason: " << ne->reason << "\n";
  } else if (const auto* inc = std::get_if<Inconclusive>(&v)) {
    out << "detail: " << inc->detail << "\n";
  }
}

}  // namespace detail

inline int cmd_validate(const std::string& path, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    FlagPresentation p = io::load_presentation(path);
    GradedAlgebra a = realize(p);
    out << "VALID\n";
    out << "group: " << p.group().descriptor() << " (order " << p.group().size() << ")\n";
    out << "division: " << division_descriptor(p.division()) << "\n";
    out << "blocks: " << flagiso::detail::shape_text(p.shape()) << "\n";
    out << "tuple: " << detail::tuple_text(p.group(), p.tuple()) << "\n";
    out << "dim: " << a.dim() << "\n";
    return kExitDecision;
  });
}

/// One line "name: dim" per group element in index order; with `radical`,
/// the same table for every power J^c of the radical.
inline int cmd_dims(const std::string& path, bool radical, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    FlagPresentation p = io::load_presentation(path);
    GradedInvariants inv = invariants(realize(p));
    const Group& g = p.group();
    for (Elem u : g.elements()) out << g.name(u) << ": " << inv.dim_by_degree[u.index] << "\n";
    if (radical) {
      for (std::size_t c = 0; c < inv.radical_dims.size(); ++c) {
        out << "J^" << c + 1 << "\n";
        for (Elem u : g.elements()) out << "  " << g.name(u) << ": " << inv.radical_dims[c][u.index] << "\n";
      }
    }
    return kExitDecision;
  });
}

inline int cmd_iso(const std::string& a_path, const std::string& b_path,
                   const std::optional<std::string>& witness_out, unsigned threads,
                   std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    FlagPresentation p = io::load_presentation(a_path);
    FlagPresentation pp = io::load_presentation(b_path);
    GradedAlgebra a = realize(p), ap = realize(pp);
    Verdict v = iso_algebras(a, ap, SearchOptions{threads});
    if (witness_out) {
      if (const auto* iso = std::get_if<Isomorphic>(&v)) {
        std::ofstream f(*witness_out);
        if (!f) throw io::LoadError(io::LoadError::Stage::kFile, *witness_out + ": cannot write");
        f << io::witness_to_json(a, ap, iso->witness).dump(2) << "\n";
        if (!f) throw io::LoadError(io::LoadError::Stage::kFile, *witness_out + ": write failed");
      }
    }
    detail::print_verdict(out, v, p.group(), pp.group());
    if (witness_out && std::holds_alternative<Isomorphic>(v)) out << "witness file: " << *witness_out << "\n";
    return kExitDecision;
  });
}

inline int cmd_equiv_check(const std::string& a_path, const std::string& b_path, std::ostream& out,
                           std::ostream& err) {
  return guarded(err, [&] {
    FlagPresentation p = io::load_presentation(a_path);
    FlagPresentation pp = io::load_presentation(b_path);
    detail::print_verdict(out, equiv_check(p, pp), p.group(), pp.group());
    return kExitDecision;
  });
}

inline int cmd_equiv_elementary(const std::string& a_path, const std::string& b_path,
                                std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    FlagPresentation p = io::load_presentation(a_path);
    FlagPresentation pp = io::load_presentation(b_path);
    detail::print_verdict(out, equiv_elementary(p, pp), p.group(), pp.group());
    return kExitDecision;
  });
}

/// WITNESS_OK when the map is a graded isomorphism and the data (g, sigma,
/// h, mu) satisfies the relations and induces exactly that map.
inline int cmd_verify_witness(const std::string& a_path, const std::string& b_path,
                              const std::string& witness_path, std::ostream& out,
                              std::ostream& err) {
  return guarded(err, [&] {
    FlagPresentation p = io::load_presentation(a_path);
    FlagPresentation pp = io::load_presentation(b_path);
    if (!(p.group() == pp.group())) {
      throw Error(ErrorCode::kGroupMismatch, "presentations use different groups");
    }
    GradedAlgebra a = realize(p), ap = realize(pp);
    IsoWitness w = io::load_witness(witness_path, a, ap);
    WitnessReport report = verify_witness(a, ap, w.map);
    std::vector<std::string> problems = report.failures;
    if (report.failure_count > report.failures.size()) {
      problems.push_back("... " + std::to_string(report.failure_count - report.failures.size()) +
                         " more");
    }
    try {
      IsoWitness rebuilt = build_witness(a, ap, w.data);
      const std::int64_t l = std::lcm(rebuilt.map.order, w.map.order);
      for (std::size_t b = 0; b < a.dim(); ++b) {
        const Term& x = rebuilt.map.image[b];
        const Term& y = w.map.image[b];
        if (x.index != y.index ||
            flagiso::detail::mod(x.exp * (l / rebuilt.map.order) - y.exp * (l / w.map.order), l) != 0) {
          problems.push_back("map differs from the one induced by (g, sigma, h, mu) at " +
                             io::basis_to_json(a, b).dump());
          break;
        }
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kInvalidWitnessData) throw;
      problems.push_back(e.what());
    }
    out << (problems.empty() ? "WITNESS_OK" : "WITNESS_INVALID") << "\n";
    out << "checked: " << report.pairs_checked << " basis pairs\n";
    for (const auto& s : problems) out << "failure: " << s << "\n";
    return kExitDecision;
  });
}

/// "Z4", "Z2xZ2", ... or a path to a group JSON file.
inline Group parse_group_spec(const std::string& spec) {
  static const std::regex abelian(R"(Z(\d+)(xZ\d+)*)");
  if (std::regex_match(spec, abelian)) {
    std::vector<int> factors;
    static const std::regex factor(R"(\d+)");
    for (auto it = std::sregex_iterator(spec.begin(), spec.end(), factor); it != std::sregex_iterator(); ++it) {
      factors.push_back(std::stoi(it->str()));
    }
    return Group::abelian(std::span<const int>(factors));
  }
  io::Source src = io::Source::read(spec);
  nlohmann::json j = src.parse();
  if (j.is_object() && j.contains("group") && j.contains("v")) j = j.at("group");
  return io::anchored(src, "kind", [&] { return io::group_from_json(j); });
}

/// "trivial", inline JSON starting with '{', or a path to a JSON file.
inline GradedDivisionAlgebra parse_division_spec(const std::string& spec, const Group& g) {
  if (spec.empty() || spec == "trivial") return trivial_division(g);
  io::Source src = spec.front() == '{' ? io::Source("--division", spec) : io::Source::read(spec);
  nlohmann::json j = src.parse();
  return io::anchored(src, "kind", [&] { return io::division_from_json(j, g); });
}

inline std::vector<int> parse_blocks(const std::string& spec) {
  std::vector<int> blocks;
  static const std::regex form(R"(\d+(,\d+)*)");
  if (!std::regex_match(spec, form)) {
    throw Error(ErrorCode::kInvalidInput, "--blocks expects comma-separated sizes like 1,1");
  }
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    std::size_t comma = spec.find(',', pos);
    if (comma == std::string::npos) comma = spec.size();
    blocks.push_back(std::stoi(spec.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  return blocks;
}

struct ClassifyArgs {
  std::string group;
  std::string blocks;
  std::string division = "trivial";
  std::optional<std::uint64_t> budget;
  unsigned threads = 1;
};

inline void print_class_table(std::ostream& out, const Group& g, const ClassTable& t) {
  out << "group: " << t.group << "  blocks: " << flagiso::detail::shape_text(BlockShape(t.blocks))
      << "  division: " << t.division << "\n";
  out << "tuples: " << t.tuples << "  classes: " << t.count()
      << "  cross-checked: " << (t.cross_checked ? "yes" : "no") << "\n";
  for (std::size_t c = 0; c < t.count(); ++c) {
    out << "  " << c + 1 << "  " << detail::tuple_text(g, t.representatives[c]) << "  orbit "
        << t.orbit_sizes[c] << "\n";
  }
  for (std::size_t c = 0; c < t.count(); ++c) {
    nlohmann::json rep = nlohmann::json::array();
    for (Elem x : t.representatives[c]) rep.push_back(g.name(x));
    nlohmann::json line{{"class", c + 1},     {"group", t.group},
                        {"blocks", t.blocks}, {"division", t.division},
                        {"representative", rep}, {"orbit_size", t.orbit_sizes[c]}};
    out << line.dump() << "\n";
  }
}

inline int cmd_classify(const ClassifyArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    Group g = parse_group_spec(args.group);
    GradedDivisionAlgebra d = parse_division_spec(args.division, g);
    EnumerateOptions options;
    options.budget = args.budget ? *args.budget : budget_from_env(kDefaultTupleBudget);
    options.threads = args.threads;
    ClassTable table = enumerate(g, parse_blocks(args.blocks), d, options);
    print_class_table(out, g, table);
    return kExitDecision;
  });
}

}  // namespace flagiso::cli

#endif  // FLAGISO_COMMANDS_HPP
