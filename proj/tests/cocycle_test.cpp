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

#include <random>

#include "flagiso/cocycle.hpp"
#include "flagiso/detail/zmod.hpp"
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

TEST(ZmodTest, ModIsNonNegative) {
  EXPECT_EQ(detail::mod(-1, 4), 3);
  EXPECT_EQ(detail::mod(-8, 4), 0);
  EXPECT_EQ(detail::mod(9, 4), 1);
}

TEST(ZmodTest, ExtendedGcd) {
  for (std::int64_t a = 0; a < 30; ++a) {
    for (std::int64_t b = 0; b < 30; ++b) {
      auto [g, s, t] = detail::ext_gcd(a, b);
      EXPECT_EQ(g, std::gcd(a, b));
      EXPECT_EQ(s * a + t * b, g);
      auto [g2, s2, t2] = detail::bezout(a, b);
      EXPECT_EQ(g2, std::gcd(a, b));
      EXPECT_EQ(s2 * a + t2 * b, g2);
    }
  }
}

/// Exhaustive solver for tiny systems.
bool brute_solvable(const detail::ZmodMatrix& a, const std::vector<std::int64_t>& b, std::int64_t m) {
  std::int64_t total = 1;
  for (std::size_t c = 0; c < a.cols; ++c) total *= m;
  std::vector<std::int64_t> x(a.cols);
  for (std::int64_t code = 0; code < total; ++code) {
    std::int64_t rest = code;
    for (auto& v : x) {
      v = rest % m;
      rest /= m;
    }
    bool ok = true;
    for (std::size_t r = 0; r < a.rows && ok; ++r) {
      std::int64_t s = 0;
      for (std::size_t c = 0; c < a.cols; ++c) s += a(r, c) * x[c];
      ok = detail::mod(s - b[r], m) == 0;
    }
    if (ok) return true;
  }
  return false;
}

TEST(ZmodTest, SolveAgreesWithExhaustiveSearch) {
  Rng rng(11);
  int solvable = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    std::int64_t m = std::uniform_int_distribution<std::int64_t>(1, 12)(rng);
    std::size_t rows = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
    std::size_t cols = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    detail::ZmodMatrix a(rows, cols);
    std::vector<std::int64_t> b(rows);
    std::uniform_int_distribution<std::int64_t> entry(-m, 2 * m);
    for (auto& v : a.data) v = entry(rng);
    for (auto& v : b) v = entry(rng);
    auto x = detail::solve_mod(a, b, m);
    ASSERT_EQ(x.has_value(), brute_solvable(a, b, m)) << "trial " << trial;
    if (!x) continue;
    ++solvable;
    for (std::size_t r = 0; r < rows; ++r) {
      std::int64_t s = 0;
      for (std::size_t c = 0; c < cols; ++c) s += a(r, c) * (*x)[c];
      EXPECT_EQ(detail::mod(s - b[r], m), 0);
    }
  }
  EXPECT_GT(solvable, 100);
}

TEST(RootScalarTest, Arithmetic) {
  RootScalar i = RootScalar::make(1, 4);
  RootScalar minus = RootScalar::make(1, 2);
  EXPECT_EQ(i * i, minus);
  EXPECT_EQ(minus * minus, RootScalar::one());
  EXPECT_EQ(i * i.inverse(), RootScalar::one());
  EXPECT_EQ(RootScalar::make(-1, 3), RootScalar::make(2, 3));
  EXPECT_EQ((RootScalar::make(1, 2) * RootScalar::make(1, 3)).order, 6);
  EXPECT_FALSE(RootScalar::make(1, 3) == RootScalar::make(1, 6));
  EXPECT_EQ(code_of([] { RootScalar::make(0, 0); }), ErrorCode::kInvalidInput);
}

TEST(CocycleTest, TrivialAndLifted) {
  Group g = Group::abelian({2, 2});
  Subgroup h = subgroup_closure(g, {g.at(1), g.at(2)});
  Cocycle t = Cocycle::trivial(h);
  EXPECT_EQ(t.order(), 1);
  EXPECT_EQ(t, t.lifted(6));
  EXPECT_EQ(code_of([&] { t.lifted(6).lifted(4); }), ErrorCode::kInternal);
}

TEST(CocycleTest, Validation) {
  Group g = Group::abelian({2});
  Subgroup h = subgroup_closure(g, {g.at(1)});
  EXPECT_NO_THROW(Cocycle(h, 2, {0, 0, 0, 1}));
  EXPECT_EQ(code_of([&] { Cocycle(h, 2, {0, 1, 0, 0}); }), ErrorCode::kInvalidCocycle);
  EXPECT_EQ(code_of([&] { Cocycle(h, 2, {0, 0, 0}); }), ErrorCode::kInvalidCocycle);
  EXPECT_EQ(code_of([&] { Cocycle(h, 0, {0, 0, 0, 0}); }), ErrorCode::kInvalidCocycle);
  // On Z3, sigma(a,a) = 1 alone breaks the identity at (a, a, a^2).
  Group z3 = Group::abelian({3});
  Subgroup all = subgroup_closure(z3, {z3.at(1)});
  EXPECT_EQ(code_of([&] { Cocycle(all, 3, {0, 0, 0, 0, 1, 0, 0, 0, 0}); }), ErrorCode::kInvalidCocycle);
}

TEST(CocycleTest, ConstructorAgreesWithIndependentCheck) {
  Rng rng(3);
  Group g = Group::abelian({2, 2});
  Subgroup h = subgroup_closure(g, {g.at(1), g.at(2)});
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<std::int64_t> v(16);
    for (std::size_t a = 1; a < 4; ++a) {
      for (std::size_t b = 1; b < 4; ++b) v[a * 4 + b] = static_cast<std::int64_t>(rng() % 2);
    }
    bool expect = testing::is_normalized_cocycle(h, 2, v);
    bool built = true;
    try {
      Cocycle(h, 2, v);
    } catch (const Error&) {
      built = false;
    }
    EXPECT_EQ(built, expect);
  }
}

TEST(CocycleTest, CoboundaryTwistIsCohomologous) {
  Rng rng(5);
  for (const Group& g : testing::small_groups()) {
    for (const Subgroup& h : all_subgroups(g)) {
      for (std::int64_t m : {2, 3, 4, 6}) {
        Corrector mu = testing::random_corrector(h, m, rng);
        Cocycle base = Cocycle::trivial(h);
        Cocycle tw = coboundary_twist(base, mu);
        EXPECT_TRUE(corrector_satisfies(base, tw, mu));
        auto found = cohomologous(base, tw);
        ASSERT_TRUE(found.has_value());
        EXPECT_TRUE(corrector_satisfies(base, tw, *found));
      }
    }
  }
}

TEST(CocycleTest, CoboundariesOfHomomorphismsVanish) {
  // A character is multiplicative, so its coboundary is trivial.
  Group g = Group::abelian({4});
  Subgroup h = subgroup_closure(g, {g.at(1)});
  Corrector chi{4, {0, 1, 2, 3}};
  EXPECT_EQ(coboundary_twist(Cocycle::trivial(h), chi), Cocycle::trivial(h));
}

TEST(CocycleTest, KleinCommutatorClassIsNontrivial) {
  // x_u x_v = -x_v x_u: sigma(u,v) = 0, sigma(v,u) = 1 with u = index 2, v = index 1.
  Group g = Group::abelian({2, 2});
  Subgroup h = subgroup_closure(g, {g.at(1), g.at(2)});
  std::vector<std::int64_t> v(16, 0);
  v[1 * 4 + 2] = 1;  // sigma(v, u)
  v[1 * 4 + 3] = 1;  // sigma(v, uv)
  v[3 * 4 + 2] = 1;  // sigma(uv, u)
  v[3 * 4 + 3] = 1;  // sigma(uv, uv)
  ASSERT_TRUE(testing::is_normalized_cocycle(h, 2, v));
  Cocycle s(h, 2, v);
  EXPECT_FALSE(cohomologous(s, Cocycle::trivial(h)).has_value());
  EXPECT_FALSE(testing::brute_cohomologous(s, Cocycle::trivial(h)).has_value());
}

TEST(CocycleTest, SupportMismatchIsReported) {
  Group g = Group::abelian({4});
  Subgroup a = subgroup_closure(g, {g.at(1)});
  Subgroup b = subgroup_closure(g, {g.at(2)});
  EXPECT_EQ(code_of([&] { cohomologous(Cocycle::trivial(a), Cocycle::trivial(b)); }),
            ErrorCode::kSupportMismatch);
}

class CohomologyExhaustive : public ::testing::TestWithParam<std::int64_t> {};

TEST_P(CohomologyExhaustive, AgreesWithCorrectorSearch) {
  const std::int64_t m = GetParam();
  for (const Group& g : {Group::abelian({2}), Group::abelian({3}), Group::abelian({4}),
                         Group::abelian({2, 2})}) {
    Subgroup h = subgroup_closure(g, g.elements());
    auto all = testing::all_cocycles(h, m);
    ASSERT_FALSE(all.empty());
    for (const Cocycle& s : all) {
      for (const Cocycle& t : all) {
        auto fast = cohomologous(s, t);
        auto slow = testing::brute_cohomologous(s, t);
        ASSERT_EQ(fast.has_value(), slow.has_value()) << g.descriptor() << " m=" << m;
        if (fast) {
          EXPECT_TRUE(corrector_satisfies(s, t, *fast));
        }
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Orders, CohomologyExhaustive, ::testing::Values(2, 3, 4));

TEST(CocycleTest, MixedOrders) {
  // A cocycle of order 2 against its lift to order 4 and a twist of it.
  Rng rng(9);
  Group g = Group::abelian({2, 2});
  Subgroup h = subgroup_closure(g, g.elements());
  for (const Cocycle& s : testing::all_cocycles(h, 2)) {
    Cocycle t = coboundary_twist(s.lifted(4), testing::random_corrector(h, 4, rng));
    auto mu = cohomologous(s, t);
    ASSERT_TRUE(mu.has_value());
    EXPECT_TRUE(corrector_satisfies(s, t, *mu));
    EXPECT_TRUE(testing::brute_cohomologous(s, t).has_value());
  }
}

TEST(TransportTest, IdentityTransportIsIdentity) {
  Group g = Group::abelian({4});
  Subgroup h = subgroup_closure(g, g.elements());
  for (const Cocycle& s : testing::all_cocycles(h, 2)) {
    EXPECT_EQ(transport(s, SubgroupIso::identity(h)), s);
  }
}

TEST(TransportTest, PreservesCohomology) {
  Group g = Group::abelian({2, 2});
  Subgroup h = subgroup_closure(g, g.elements());
  auto all = testing::all_cocycles(h, 2);
  for (const Bijection& f : find_isomorphisms(g, g)) {
    SubgroupIso alpha{h, h, f};
    for (const Cocycle& s : all) {
      for (const Cocycle& t : all) {
        EXPECT_EQ(cohomologous(s, t).has_value(),
                  cohomologous(transport(s, alpha), transport(t, alpha)).has_value());
      }
    }
  }
}

TEST(TransportTest, RejectsNonHomomorphism) {
  Group g = Group::abelian({4});
  Subgroup h = subgroup_closure(g, g.elements());
  SubgroupIso bad{h, h, {g.at(0), g.at(2), g.at(1), g.at(3)}};
  EXPECT_EQ(code_of([&] { transport(Cocycle::trivial(h), bad); }), ErrorCode::kNotIsomorphism);
}

}  // namespace
}  // namespace flagiso
