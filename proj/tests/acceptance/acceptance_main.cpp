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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "flagiso/flagiso.hpp"
#include "test_support.hpp"

namespace {

using namespace flagiso;
using testing::Rng;

struct Result {
  bool ok = true;
  std::string note;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  }
};

std::size_t entries(const std::vector<int>& blocks) {
  std::size_t total = 0;
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    for (std::size_t l = k; l < blocks.size(); ++l) total += static_cast<std::size_t>(blocks[k] * blocks[l]);
  }
  return total;
}

std::string describe(const FlagPresentation& p) {
  std::string out = p.group().descriptor() + " (";
  for (std::size_t i = 0; i < p.n(); ++i) out += (i ? "," : "") + p.group().name(p.tuple()[i]);
  return out + ")";
}

std::vector<Group> tiny_groups() {
  return {Group::abelian({2}), Group::abelian({3}), Group::abelian({4}), Group::abelian({2, 2})};
}

// 1. Grading law and dimension identity on random presentations.
Result grading_law() {
  Result r;
  Rng rng(1001);
  auto groups = testing::small_groups();
  std::size_t twisted = 0, pauli_count = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const Group& g = groups[static_cast<std::size_t>(trial) % groups.size()];
    auto p = testing::random_presentation(g, rng, 5);
    twisted += !p.division().is_trivial();
    pauli_count += p.division().dim() == 4 && p.division().cocycle().order() == 2 &&
                   !cohomologous(p.division().cocycle(), Cocycle::trivial(p.support()));
    GradedAlgebra a = realize(p);
    r.require(check_grading(a).ok(), "grading law fails for " + describe(p));
    std::size_t sum = 0;
    for (std::size_t d : invariants(a).dim_by_degree) sum += d;
    r.require(sum == p.support().size() * entries(p.shape().blocks()), "dimension identity fails for " + describe(p));
    r.require(sum == a.dim(), "component dimensions do not add up for " + describe(p));
  }
  r.require(twisted > 0 && pauli_count > 0, "sample contained no twisted or no Pauli division parts");
  if (r.ok) r.note = "200 presentations, " + std::to_string(twisted) + " with nontrivial D";
  return r;
}

// 2. Random transformations are always recognized, witnesses verify.
Result soundness() {
  Result r;
  Rng rng(2002);
  auto groups = testing::small_groups();
  std::size_t pairs_checked = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const Group& g = groups[static_cast<std::size_t>(trial) % groups.size()];
    auto p = testing::random_presentation(g, rng, 5);
    auto q = testing::apply(p, testing::random_transformation(p, rng));
    GradedAlgebra a = realize(p), b = realize(q);
    Verdict v = iso_algebras(a, b);
    const auto* iso = std::get_if<Isomorphic>(&v);
    r.require(iso != nullptr, "no isomorphism found for " + describe(p) + " -> " + describe(q));
    if (!iso) continue;
    WitnessReport report = verify_witness(a, b, iso->witness.map);
    pairs_checked += report.pairs_checked;
    r.require(report.ok(), "witness fails for " + describe(p));
  }
  if (r.ok) r.note = "500 pairs, " + std::to_string(pairs_checked) + " basis pairs verified";
  return r;
}

// 3. Isomorphic verdicts never contradict the invariants.
Result invariants_respected() {
  Result r;
  std::size_t pairs = 0, iso_pairs = 0;
  for (const Group& g : tiny_groups()) {
    for (const std::vector<int>& blocks : std::vector<std::vector<int>>{{1, 1}, {2}}) {
      auto family = testing::elementary_family(g, blocks);
      std::vector<GradedAlgebra> alg;
      std::vector<GradedInvariants> inv;
      for (const auto& p : family) {
        alg.push_back(realize(p));
        inv.push_back(invariants(alg.back()));
      }
      for (std::size_t x = 0; x < family.size(); ++x) {
        auto orbit = testing::brute_orbit(family[x]);
        for (std::size_t y = 0; y < family.size(); ++y) {
          ++pairs;
          bool iso = std::holds_alternative<Isomorphic>(iso_algebras(alg[x], alg[y]));
          iso_pairs += iso;
          r.require(!iso || inv[x] == inv[y],
                    "Isomorphic with different invariants: " + describe(family[x]) + " vs " + describe(family[y]));
          r.require(iso == (orbit.count(family[y].tuple()) > 0),
                    "verdict disagrees with orbit enumeration: " + describe(family[x]) + " vs " + describe(family[y]));
        }
      }
    }
  }
  if (r.ok) r.note = std::to_string(pairs) + " ordered pairs, " + std::to_string(iso_pairs) + " isomorphic";
  return r;
}

// 4. Symmetry and transitivity through inverse and composite witnesses.
Result relation_laws() {
  Result r;
  Rng rng(4004);
  auto groups = tiny_groups();
  std::size_t symmetric = 0, transitive = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const Group& g = groups[rng() % groups.size()];
    std::vector<int> blocks = rng() % 2 ? std::vector<int>{1, 1} : std::vector<int>{2};
    auto family = testing::elementary_family(g, blocks);
    const auto& p = family[rng() % family.size()];
    const auto& q = family[rng() % family.size()];
    const auto& s = family[rng() % family.size()];
    GradedAlgebra a = realize(p), b = realize(q), c = realize(s);
    Verdict ab = iso_algebras(a, b), ba = iso_algebras(b, a), bc = iso_algebras(b, c), ac = iso_algebras(a, c);
    bool iab = std::holds_alternative<Isomorphic>(ab), iba = std::holds_alternative<Isomorphic>(ba);
    bool ibc = std::holds_alternative<Isomorphic>(bc), iac = std::holds_alternative<Isomorphic>(ac);
    r.require(iab == iba, "symmetry fails for " + describe(p) + ", " + describe(q));
    if (iab) {
      ++symmetric;
      IsoData inv = invert_iso_data(p, q, std::get<Isomorphic>(ab).witness.data);
      IsoWitness w = build_witness(b, a, inv);
      r.require(verify_witness(b, a, w.map).ok(), "inverse witness fails for " + describe(p));
    }
    if (iab && ibc) {
      ++transitive;
      r.require(iac, "transitivity fails for " + describe(p) + ", " + describe(q) + ", " + describe(s));
      IsoData comp = compose_iso_data(p, q, std::get<Isomorphic>(ab).witness.data, std::get<Isomorphic>(bc).witness.data);
      IsoWitness w = build_witness(a, c, comp);
      r.require(verify_witness(a, c, w.map).ok(), "composite witness fails for " + describe(p));
    }
  }
  r.require(symmetric > 0 && transitive > 0, "no isomorphic pairs sampled");
  if (r.ok) {
    r.note = "100 triples, " + std::to_string(symmetric) + " inverses and " + std::to_string(transitive) +
             " composites verified";
  }
  return r;
}

// 5. Golden class counts; canonical forms agree with pairwise union-find.
Result classification() {
  Result r;
  Group z2 = Group::abelian({2}), z3 = Group::abelian({3});
  struct Golden {
    Group g;
    std::vector<int> blocks;
    std::size_t expected;
  };
  for (const Golden& c : {Golden{z2, {1, 1}, 2}, Golden{z3, {1, 1}, 3}, Golden{z2, {2}, 2}}) {
    GradedDivisionAlgebra d = trivial_division(c.g);
    std::size_t canonical = enumerate(c.g, c.blocks, d).count();
    r.require(canonical == c.expected, c.g.descriptor() + " count " + std::to_string(canonical));
    r.require(testing::brute_class_count(c.g, c.blocks, d) == c.expected, "orbit oracle disagrees on " + c.g.descriptor());
  }
  std::size_t cases = 0;
  Group k = Group::abelian({2, 2});
  Group z4 = Group::abelian({4});
  std::vector<std::pair<std::vector<int>, GradedDivisionAlgebra>> extra{
      {{1, 1}, pauli(2, k, k.at(2), k.at(1))},
      {{2}, pauli(2, k, k.at(2), k.at(1))},
  };
  for (const Group& g : tiny_groups()) {
    for (const std::vector<int>& blocks : std::vector<std::vector<int>>{{1}, {1, 1}, {2}, {1, 1, 1}, {2, 1}, {1, 2}, {3}}) {
      GradedDivisionAlgebra d = trivial_division(g);
      std::size_t canonical = enumerate(g, blocks, d).count();
      std::size_t pairwise = count_classes_pairwise(g, blocks, d, 1'000'000);
      r.require(canonical == pairwise, "canonical vs pairwise on " + g.descriptor());
      ++cases;
    }
  }
  for (const auto& [blocks, d] : extra) {
    r.require(enumerate(d.group(), blocks, d).count() == count_classes_pairwise(d.group(), blocks, d, 1'000'000),
              "canonical vs pairwise on twisted " + d.group().descriptor());
    ++cases;
  }
  GradedDivisionAlgebra half(Cocycle::trivial(subgroup_closure(z4, {z4.at(2)})));
  r.require(enumerate(z4, {1, 1, 1}, half).count() == count_classes_pairwise(z4, {1, 1, 1}, half, 1'000'000),
            "canonical vs pairwise on Z4 with support {e,b^2}");
  ++cases;
  if (r.ok) r.note = "2 / 3 / 2 classes; " + std::to_string(cases) + " enumerations agree with union-find";
  return r;
}

// 6. Pauli(2) facts with brute force as the oracle.
Result division_facts() {
  Result r;
  Group k = Group::abelian({2, 2});
  GradedDivisionAlgebra d = pauli(2, k, k.at(2), k.at(1));
  GradedAlgebra a = realize(make_presentation(d, {1}, {k.identity()}));
  r.require(invariants(a).dim_by_degree[k.identity().index] == 1, "dim D_e != 1");
  r.require(is_graded_division(a), "Pauli(2) realization is not a graded division algebra");
  Cocycle trivial = Cocycle::trivial(d.support());
  GradedDivisionAlgebra flat(trivial);
  r.require(!iso_division(d, flat).has_value(), "iso_division found an isomorphism");
  r.require(!testing::brute_cohomologous(d.cocycle(), trivial).has_value(), "oracle found a corrector");
  r.require(!equiv_division(d, flat).has_value(), "equiv_division found an equivalence");
  for (const Bijection& f : find_isomorphisms(k, k)) {
    SubgroupIso alpha{d.support(), d.support(), f};
    r.require(!testing::brute_cohomologous(transport(d.cocycle(), alpha), trivial).has_value(),
              "oracle found an equivalence");
  }
  if (r.ok) r.note = "dim D_e = 1, graded division; no iso, no equivalence (6 relabelings searched)";
  return r;
}

// 7. Equivalence decisions on the Z2 / Z4 pair.
Result equivalence() {
  Result r;
  Group z2 = Group::abelian({2}).with_names({"e", "a"});
  Group z4 = Group::abelian({4}).with_names({"e", "b", "b^2", "b^3"});
  auto p = make_presentation(trivial_division(z2), {1, 1}, {z2.at(0), z2.at(1)});
  auto q = make_presentation(trivial_division(z4), {1, 1}, {z4.at(0), z4.at(1)});
  Verdict v = equiv_elementary(p, q);
  const auto* eq = std::get_if<Equivalent>(&v);
  r.require(eq != nullptr, "equiv_elementary did not return Equivalent");
  if (eq) r.require(verify_equivalence(realize(p), realize(q), eq->witness.map).ok(), "component map fails");
  auto flat = make_presentation(trivial_division(z4), {2}, {z4.at(0), z4.at(1)});
  r.require(std::holds_alternative<NotEquivalent>(equiv_check(p, flat)), "shape mismatch not rejected");
  r.require(std::holds_alternative<Inconclusive>(equiv_check(p, q)), "equiv_check did not return Inconclusive");
  if (r.ok) r.note = "Equivalent (verified), NotEquivalent on shape, Inconclusive";
  return r;
}

// 8. Linear cohomology solver against exhaustive corrector search.
Result cocycle_oracle() {
  Result r;
  std::size_t pairs = 0;
  for (const Group& g : {Group::from_table({{0}}), Group::abelian({2}), Group::abelian({3}), Group::abelian({4}),
                         Group::abelian({2, 2})}) {
    Subgroup h = subgroup_closure(g, g.elements());
    auto all = testing::all_cocycles(h, 2);
    for (const Cocycle& s : all) {
      for (const Cocycle& t : all) {
        ++pairs;
        auto fast = cohomologous(s, t);
        auto slow = testing::brute_cohomologous(s, t);
        r.require(fast.has_value() == slow.has_value(), "disagreement on " + g.descriptor());
        if (fast) r.require(corrector_satisfies(s, t, *fast), "returned corrector fails on " + g.descriptor());
      }
    }
  }
  if (r.ok) r.note = std::to_string(pairs) + " cocycle pairs";
  return r;
}

struct Shell {
  int code;
  std::string out;
};

Shell run_cli(const std::string& args, const std::filesystem::path& dir) {
  std::filesystem::path out = dir / "stdout.txt";
  std::string cmd = std::string("\"") + FLAGISO_CLI_PATH + "\" " + args + " > \"" + out.string() + "\" 2>&1";
  int status = std::system(cmd.c_str());
  std::ifstream in(out);
  std::stringstream buf;
  buf << in.rdbuf();
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return Shell{code, buf.str()};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

// 9. CLI end-to-end on the sample files.
Result cli() {
  Result r;
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / ("flagiso_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  auto sample = [](const std::string& name) { return std::string("\"") + FLAGISO_SAMPLES_DIR + "/" + name + "\""; };
  std::string witness = (dir / "witness.json").string();

  Shell iso = run_cli("iso " + sample("z2_e_a.json") + " " + sample("z2_a_e.json") + " --witness \"" + witness + "\"", dir);
  r.require(iso.code == 0 && first_line(iso.out) == "ISOMORPHIC", "iso: exit " + std::to_string(iso.code) + ", " + first_line(iso.out));
  Shell check = run_cli("verify-witness " + sample("z2_e_a.json") + " " + sample("z2_a_e.json") + " \"" + witness + "\"", dir);
  r.require(check.code == 0 && first_line(check.out) == "WITNESS_OK", "verify-witness: " + first_line(check.out));

  Shell no = run_cli("iso " + sample("z3_e_a.json") + " " + sample("z3_e_a2.json"), dir);
  r.require(no.code == 0 && first_line(no.out) == "NOT_ISOMORPHIC", "iso Z3: exit " + std::to_string(no.code) + ", " + first_line(no.out));

  Shell eq = run_cli("equiv-elementary " + sample("z2_e_a.json") + " " + sample("z4_e_b.json"), dir);
  r.require(eq.code == 0 && first_line(eq.out) == "EQUIVALENT", "equiv-elementary: exit " + std::to_string(eq.code) + ", " + first_line(eq.out));

  Shell bad = run_cli("validate " + sample("bad_length.json"), dir);
  r.require(bad.code == 2, "invalid input did not exit 2");
  fs::remove_all(dir);
  if (r.ok) r.note = "ISOMORPHIC / NOT_ISOMORPHIC / EQUIVALENT, witness round-trip OK";
  return r;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Result()> run;
  };
  const Criterion criteria[] = {
      {"1 grading law", grading_law},
      {"2 criterion soundness", soundness},
      {"3 criterion vs invariants", invariants_respected},
      {"4 equivalence-relation laws", relation_laws},
      {"5 classification golden values", classification},
      {"6 division-algebra facts", division_facts},
      {"7 equivalence decisions", equivalence},
      {"8 cocycle solver oracle", cocycle_oracle},
      {"9 CLI end-to-end", cli},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Result r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r.ok = false;
      r.note = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (r.ok ? "PASS" : "FAIL") << "  criterion " << c.name << "  (" << r.note << "; "
              << static_cast<int>(secs * 1000) << " ms)" << std::endl;
    failed += !r.ok;
  }
  return failed == 0 ? 0 : 1;
}
