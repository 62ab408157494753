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

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "flagiso/commands.hpp"

int main(int argc, char** argv) {
  namespace cli = flagiso::cli;
  CLI::App app{"Graded upper block triangular algebras: realize, compare, classify."};
  app.require_subcommand(1);

  std::string a, b, w, witness_out;
  bool radical = false;
  unsigned threads = 1;
  cli::ClassifyArgs classify;
  std::uint64_t budget = 0;

  auto* validate = app.add_subcommand("validate", "Check a presentation file");
  validate->add_option("file", a, "presentation JSON")->required();

  auto* dims = app.add_subcommand("dims", "Dimension of each homogeneous component");
  dims->add_option("file", a, "presentation JSON")->required();
  dims->add_flag("--radical", radical, "also print dimensions of the radical powers");

  auto* iso = app.add_subcommand("iso", "Decide graded isomorphism of two presentations");
  iso->add_option("a", a, "first presentation")->required();
  iso->add_option("b", b, "second presentation")->required();
  iso->add_option("--witness", witness_out, "write the isomorphism witness here");
  iso->add_option("--threads", threads, "parallel shift search")->check(CLI::Range(1u, 256u));

  auto* equiv_check = app.add_subcommand("equiv-check", "Necessary conditions for equivalence");
  equiv_check->add_option("a", a, "first presentation")->required();
  equiv_check->add_option("b", b, "second presentation")->required();

  auto* equiv_elem = app.add_subcommand("equiv-elementary", "Decide equivalence of elementary gradings");
  equiv_elem->add_option("a", a, "first presentation")->required();
  equiv_elem->add_option("b", b, "second presentation")->required();

  auto* cls = app.add_subcommand("classify", "Isomorphism classes of degree tuples");
  cls->add_option("--group", classify.group, "Z4, Z2xZ2, ... or a group JSON file")->required();
  cls->add_option("--blocks", classify.blocks, "block sizes, e.g. 1,1")->required();
  cls->add_option("--division", classify.division, "trivial, inline JSON or a JSON file");
  auto* budget_opt = cls->add_option("--budget", budget, "maximum number of tuples")->check(CLI::PositiveNumber);
  cls->add_option("--threads", classify.threads, "worker threads")->check(CLI::Range(1u, 64u));

  auto* verify = app.add_subcommand("verify-witness", "Re-check an isomorphism witness file");
  verify->add_option("a", a, "source presentation")->required();
  verify->add_option("b", b, "target presentation")->required();
  verify->add_option("witness", w, "witness JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kExitInput;
  }

  if (*validate) return cli::cmd_validate(a, std::cout, std::cerr);
  if (*dims) return cli::cmd_dims(a, radical, std::cout, std::cerr);
  if (*iso) {
    std::optional<std::string> out;
    if (!witness_out.empty()) out = witness_out;
    return cli::cmd_iso(a, b, out, threads, std::cout, std::cerr);
  }
  if (*equiv_check) return cli::cmd_equiv_check(a, b, std::cout, std::cerr);
  if (*equiv_elem) return cli::cmd_equiv_elementary(a, b, std::cout, std::cerr);
  if (*cls) {
    if (budget_opt->count() > 0) classify.budget = budget;
    return cli::cmd_classify(classify, std::cout, std::cerr);
  }
  if (*verify) return cli::cmd_verify_witness(a, b, w, std::cout, std::cerr);
  return cli::kExitInput;
}
