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

#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <numeric>

#include "flagiso/classify.hpp"
#include "test_support.hpp"

namespace flagiso {
namespace {

using testing::Rng;

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInternal;
}

class ScopedEnv {
 public:
  ScopedEnv(const char* name, const char* value) : name_(name) {
    if (const char* old = std::getenv(name)) old_ = old;
    if (value) {
      ::setenv(name, value, 1);
    } else {
      ::unsetenv(name);
    }
  }
  ~ScopedEnv() {
    if (old_) {
      ::setenv(name_, old_->c_str(), 1);
    } else {
      ::unsetenv(name_);
    }
  }

 private:
  const char* name_;
  std::optional<std::string> old_;
};

TEST(ClassifyTest, GoldenCounts) {
  Group z2 = Group::abelian({2}), z3 = Group::abelian({3});
  EXPECT_EQ(enumerate(z2, {1, 1}, trivial_division(z2)).count(), 2u);
  EXPECT_EQ(enumerate(z3, {1, 1}, trivial_division(z3)).count(), 3u);
  EXPECT_EQ(enumerate(z2, {2}, trivial_division(z2)).count(), 2u);
  Group k = Group::abelian({2, 2});
  ClassTable t = enumerate(k, {1}, pauli(2, k, k.at(2), k.at(1)));
  EXPECT_EQ(t.count(), 1u);
  EXPECT_TRUE(t.cross_checked);
  EXPECT_EQ(t.division, "twisted[support={(0,0),(0,1),(1,0),(1,1)},m=2]");
}

TEST(ClassifyTest, TableContents) {
  Group z2 = Group::abelian({2});
  ClassTable t = enumerate(z2, {1, 1}, trivial_division(z2));
  EXPECT_EQ(t.group, "Z2");
  EXPECT_EQ(t.tuples, 4u);
  EXPECT_EQ(t.division, "trivial");
  ASSERT_EQ(t.count(), 2u);
  EXPECT_EQ(t.representatives[0], (std::vector<Elem>{z2.at(0), z2.at(0)}));
  EXPECT_EQ(t.representatives[1], (std::vector<Elem>{z2.at(0), z2.at(1)}));
  EXPECT_EQ(t.orbit_sizes, (std::vector<std::uint64_t>{2, 2}));
  EXPECT_TRUE(t.cross_checked);
}

struct Case {
  Group g;
  std::vector<int> blocks;
  GradedDivisionAlgebra d;
};

std::vector<Case> cases() {
  Group z4 = Group::abelian({4});
  Group k = Group::abelian({2, 2});
  Group s = testing::s3();
  Group z6 = Group::abelian({6});
  std::vector<Case> out;
  for (const Group& g : {Group::abelian({2}), Group::abelian({3}), z4, k, s}) {
    for (const std::vector<int>& b : std::vector<std::vector<int>>{{1, 1}, {2}, {1, 1, 1}, {2, 1}, {1, 2}}) {
      out.push_back({g, b, trivial_division(g)});
    }
  }
  out.push_back({z4, {1, 1, 1}, GradedDivisionAlgebra(Cocycle::trivial(subgroup_closure(z4, {z4.at(2)})))});
  out.push_back({k, {1, 1}, pauli(2, k, k.at(2), k.at(1))});
  out.push_back({k, {2, 1}, pauli(2, k, k.at(2), k.at(1))});
  out.push_back({s, {1, 1}, GradedDivisionAlgebra(Cocycle::trivial(subgroup_closure(s, {s.element_named("(12)")})))});
  out.push_back({s, {1, 1, 1}, GradedDivisionAlgebra(Cocycle::trivial(subgroup_closure(s, {s.element_named("(123)")})))});
  out.push_back({z6, {1, 1}, GradedDivisionAlgebra(Cocycle(subgroup_closure(z6, {z6.at(3)}), 2, {0, 0, 0, 1}))});
  return out;
}

TEST(ClassifyTest, CanonicalCountMatchesOrbitOracle) {
  for (const Case& c : cases()) {
    ClassTable t = enumerate(c.g, c.blocks, c.d, {kDefaultTupleBudget, 0, 1});
    EXPECT_EQ(t.count(), testing::brute_class_count(c.g, c.blocks, c.d))
        << c.g.descriptor() << " " << c.blocks.size() << " " << division_descriptor(c.d);
    EXPECT_EQ(std::accumulate(t.orbit_sizes.begin(), t.orbit_sizes.end(), std::uint64_t{0}), t.tuples);
  }
}

TEST(ClassifyTest, CanonicalCountMatchesPairwiseCount) {
  for (const Case& c : cases()) {
    std::size_t n = static_cast<std::size_t>(std::accumulate(c.blocks.begin(), c.blocks.end(), 0));
    if (std::pow(c.g.size(), n) > 64) continue;
    EXPECT_EQ(enumerate(c.g, c.blocks, c.d).count(), count_classes_pairwise(c.g, c.blocks, c.d, 1'000'000))
        << c.g.descriptor();
  }
}

TEST(ClassifyTest, OrbitSizesMatchOracle) {
  for (const Case& c : cases()) {
    if (c.g.size() > 4) continue;
    ClassTable t = enumerate(c.g, c.blocks, c.d);
    for (std::size_t r = 0; r < t.count(); ++r) {
      FlagPresentation p(c.d, BlockShape(c.blocks), t.representatives[r]);
      EXPECT_EQ(testing::brute_orbit(p).size(), t.orbit_sizes[r]);
    }
  }
}

TEST(ClassifyTest, CanonicalFormIsAnInvariant) {
  Rng rng(211);
  for (const Group& g : testing::small_groups()) {
    for (int trial = 0; trial < 20; ++trial) {
      auto p = testing::random_presentation(g, rng, 4);
      Canonicalizer canon(p.division(), p.shape());
      auto t = testing::random_transformation(p, rng);
      const auto& shifts = canon.admissible_shifts();
      t.shift = shifts[rng() % shifts.size()];
      auto q = testing::apply(p, t);
      EXPECT_EQ(canon.canonical(q.tuple()), canon.canonical(p.tuple())) << g.descriptor();
      EXPECT_EQ(canonical_form(p), canon.canonical(p.tuple()));
    }
  }
}

TEST(ClassifyTest, AdmissibleShifts) {
  Group s = testing::s3();
  Canonicalizer all(trivial_division(s), BlockShape({1}));
  EXPECT_EQ(all.admissible_shifts().size(), 6u);
  // Only the normalizer of <(12)> keeps the support in place.
  Canonicalizer c2(GradedDivisionAlgebra(Cocycle::trivial(subgroup_closure(s, {s.element_named("(12)")}))),
                   BlockShape({1}));
  EXPECT_EQ(c2.admissible_shifts().size(), 2u);
  EXPECT_EQ(code_of([&] { c2.canonical({s.at(0), s.at(1)}); }), ErrorCode::kLengthMismatch);
}

TEST(ClassifyTest, ThreadsGiveTheSameTable) {
  Group g = testing::d4();
  ClassTable one = enumerate(g, {1, 2, 1}, trivial_division(g), {kDefaultTupleBudget, 0, 1});
  for (unsigned threads : {2u, 5u, 16u}) {
    ClassTable many = enumerate(g, {1, 2, 1}, trivial_division(g), {kDefaultTupleBudget, 0, threads});
    EXPECT_EQ(many.representatives, one.representatives);
    EXPECT_EQ(many.orbit_sizes, one.orbit_sizes);
  }
}

TEST(ClassifyTest, Budget) {
  Group g = Group::abelian({4});
  EXPECT_EQ(code_of([&] { enumerate(g, {1, 1, 1}, trivial_division(g), {63, 0, 1}); }),
            ErrorCode::kBudgetExceeded);
  EXPECT_NO_THROW(enumerate(g, {1, 1, 1}, trivial_division(g), {64, 0, 1}));
  Group big = Group::abelian({2, 2, 2, 2});
  EXPECT_EQ(code_of([&] { enumerate(big, {1, 1, 1, 1, 1, 1}, trivial_division(big)); }),
            ErrorCode::kBudgetExceeded);
  EXPECT_EQ(code_of([&] { count_classes_pairwise(g, {1, 1, 1}, trivial_division(g), 100); }),
            ErrorCode::kBudgetExceeded);
}

TEST(ClassifyTest, CrossCheckBudget) {
  Group g = Group::abelian({3});
  EXPECT_TRUE(enumerate(g, {1, 1}, trivial_division(g)).cross_checked);
  EXPECT_FALSE(enumerate(g, {1, 1}, trivial_division(g), {kDefaultTupleBudget, 5, 1}).cross_checked);
}

TEST(ClassifyTest, BudgetFromEnvironment) {
  {
    ScopedEnv env("FLAGISO_BUDGET", nullptr);
    EXPECT_EQ(budget_from_env(17), 17u);
  }
  {
    ScopedEnv env("FLAGISO_BUDGET", "250");
    EXPECT_EQ(budget_from_env(17), 250u);
  }
  for (const char* bad : {"abc", "-5", "0", "12x"}) {
    ScopedEnv env("FLAGISO_BUDGET", bad);
    EXPECT_EQ(code_of([] { budget_from_env(17); }), ErrorCode::kInvalidInput) << bad;
  }
}

TEST(ClassifyTest, GroupMismatch) {
  Group a = Group::abelian({2}), b = Group::abelian({3});
  EXPECT_EQ(code_of([&] { enumerate(a, {1}, trivial_division(b)); }), ErrorCode::kGroupMismatch);
}

}  // namespace
}  // namespace flagiso
