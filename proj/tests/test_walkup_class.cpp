#include <gtest/gtest.h>

#include "support/oracles.hpp"

using namespace walkup;

namespace {

Errc code_of(const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return Errc::ParseError;
}

std::int64_t choose(std::int64_t n, std::int64_t k) {
  // Pascal's triangle, independent of the library's binomial.
  std::vector<std::vector<std::int64_t>> t(static_cast<std::size_t>(n) + 1);
  for (std::int64_t i = 0; i <= n; ++i) {
    t[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(i) + 1, 1);
    for (std::int64_t j = 1; j < i; ++j)
      t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          t[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] +
          t[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
  }
  return (k < 0 || k > n) ? 0 : t[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

}  // namespace

TEST(Binomial, MatchesPascal) {
  for (int n = 0; n <= 30; ++n)
    for (int k = -1; k <= n + 1; ++k) EXPECT_EQ(binomial(n, k), choose(n, k)) << n << " " << k;
}

TEST(WalkupClass, Membership) {
  EXPECT_TRUE(in_walkup_class(build_m4_15()));
  for (int d = 1; d <= 5; ++d) EXPECT_TRUE(in_walkup_class(standard_sphere(d)));
  EXPECT_TRUE(in_walkup_class(oracle::torus7()));  // every closed surface
  EXPECT_TRUE(in_walkup_class(oracle::rp2_6()));
  EXPECT_FALSE(in_walkup_class(oracle::suspension(oracle::cyclic_polytope_boundary(4, 7))));
  EXPECT_FALSE(in_walkup_class(oracle::cyclic_polytope_boundary(5, 8)));
  EXPECT_FALSE(in_walkup_class(build_b5_30()));
  EXPECT_TRUE(in_walkup_class(build_s4_30()));
}

TEST(StackedFVector, Formula) {
  EXPECT_EQ(stacked_sphere_fvector(4, 30), (FVector{30, 135, 260, 255, 102}));
  EXPECT_EQ(stacked_sphere_fvector(3, 10), (FVector{10, 30, 40, 20}));
  for (int d = 1; d <= 6; ++d) {
    FVector simplex;
    for (int j = 0; j <= d; ++j) simplex.push_back(choose(d + 2, j + 1));
    EXPECT_EQ(stacked_sphere_fvector(d, d + 2), simplex);
  }
  EXPECT_EQ(code_of([] { stacked_sphere_fvector(4, 5); }), Errc::InvalidParameters);
  EXPECT_EQ(code_of([] { stacked_sphere_fvector(0, 5); }), Errc::InvalidParameters);
  EXPECT_EQ(f_vector(random_stacked_sphere(3, 10, 77)), stacked_sphere_fvector(3, 10));
}

TEST(WalkupFVector, EvenDimension) {
  EXPECT_EQ(walkup_fvector_even(4, 15, -4), (FVector{15, 105, 230, 240, 96}));
  EXPECT_EQ(walkup_fvector_even(4, 11, 0), (FVector{11, 55, 110, 110, 44}));
  for (std::int64_t n = 6; n < 40; ++n) EXPECT_EQ(walkup_fvector_even(4, n, 2), stacked_sphere_fvector(4, n));
  EXPECT_EQ(code_of([] { walkup_fvector_even(3, 10, 0); }), Errc::OddDimension);
  EXPECT_EQ(code_of([] { walkup_fvector_even(0, 10, 0); }), Errc::InvalidParameters);
}

TEST(FromF0F1, Cases) {
  EXPECT_EQ(fvector_from_f0_f1(4, 15, 105), (FVector{15, 105, 230, 240, 96}));
  for (std::int64_t f0 = 5; f0 < 20; ++f0)
    for (std::int64_t f1 = f0; f1 < 3 * f0; ++f1) {
      auto f = fvector_from_f0_f1(3, f0, f1);
      EXPECT_EQ(f[3], f1 - f0);
      EXPECT_EQ(f[2], 2 * (f1 - f0));
      EXPECT_EQ(f[0] - f[1] + f[2] - f[3], 0);
    }
  EXPECT_EQ(code_of([] { fvector_from_f0_f1(4, 15, 104); }), Errc::NonIntegralResult);
  EXPECT_EQ(code_of([] { fvector_from_f0_f1(1, 4, 4); }), Errc::InvalidParameters);
}

TEST(FromF0F1, AgreesWithEvenFormula) {
  for (std::int64_t f0 = 6; f0 < 30; ++f0)
    for (std::int64_t chi = -10; chi <= 2; chi += 2) {
      FVector even;
      try {
        even = walkup_fvector_even(4, f0, chi);
      } catch (const Error&) {
        continue;
      }
      EXPECT_EQ(fvector_from_f0_f1(4, f0, even[1]), even);
    }
}

TEST(DehnSommerville, Cases) {
  EXPECT_EQ(dehn_sommerville_4(15, 105, -4), (FVector{15, 105, 230, 240, 96}));
  EXPECT_EQ(dehn_sommerville_4(6, 15, 2), (FVector{6, 15, 20, 15, 6}));
  std::mt19937_64 rng(4);
  std::vector<SimplicialComplex> corpus{build_m4_15(), build_s4_30(),
                                        oracle::cyclic_polytope_boundary(5, 9)};
  for (int i = 0; i < 5; ++i) corpus.push_back(random_stacked_sphere(4, 7 + 3 * i, rng()));
  for (const auto& x : corpus) {
    auto f = f_vector(x);
    EXPECT_EQ(dehn_sommerville_4(f[0], f[1], euler_characteristic(x)), f);
  }
}

TEST(Bounds, M4_15IsTight) {
  auto r = check_bounds_4manifold(build_m4_15());
  EXPECT_EQ(r.chi, -4);
  ASSERT_EQ(r.instances.size(), 5u);
  for (const auto& i : r.instances) {
    EXPECT_TRUE(i.tight) << i.name;
    EXPECT_EQ(i.lhs, i.rhs) << i.name;
  }
  EXPECT_EQ(r.instances[0].lhs, 210);
  EXPECT_EQ(r.instances.back().lhs, 60);
  EXPECT_TRUE(r.walkup_equality);
  EXPECT_TRUE(r.neighborly_equality);
  EXPECT_TRUE(r.overall_equality);
}

TEST(Bounds, StandardSphereAndStacked) {
  auto r = check_bounds_4manifold(standard_sphere(4));
  EXPECT_EQ(r.instances.back().lhs, -30);
  EXPECT_EQ(r.instances.back().rhs, -30);
  EXPECT_TRUE(r.overall_equality);

  auto s = check_bounds_4manifold(random_stacked_sphere(4, 16, 5));
  EXPECT_TRUE(s.walkup_equality);
  EXPECT_FALSE(s.neighborly_equality);
  EXPECT_GT(s.instances.back().lhs, s.instances.back().rhs);
}

TEST(Bounds, NonWalkupIsStrict) {
  auto c = check_bounds_4manifold(oracle::cyclic_polytope_boundary(5, 8));
  EXPECT_FALSE(c.walkup_equality);
  for (const auto& i : c.instances) EXPECT_GE(i.lhs, i.rhs) << i.name;
}

TEST(Bounds, Preconditions) {
  EXPECT_EQ(code_of([] { check_bounds_4manifold(standard_sphere(3)); }),
            Errc::NotClosedConnected4Manifold);
  EXPECT_EQ(code_of([] { check_bounds_4manifold(build_b5_30()); }), Errc::NotClosedConnected4Manifold);
  auto two = disjoint_union(standard_sphere(4), relabel(standard_sphere(4), {{"1", "x1"}, {"2", "x2"},
                                                                             {"3", "x3"}, {"4", "x4"},
                                                                             {"5", "x5"}, {"6", "x6"}}));
  EXPECT_EQ(code_of([&] { check_bounds_4manifold(two); }), Errc::NotClosedConnected4Manifold);
}

TEST(TwoNeighborly, Cases) {
  EXPECT_TRUE(is_two_neighborly(build_m4_15()));
  for (int d = 1; d <= 5; ++d) EXPECT_TRUE(is_two_neighborly(standard_sphere(d)));
  EXPECT_TRUE(is_two_neighborly(oracle::torus7()));
  for (std::size_t n = 7; n < 20; ++n) EXPECT_FALSE(is_two_neighborly(random_stacked_sphere(4, n, n)));
}

TEST(Properties, EvenWalkupMembersMatchFormulas) {
  std::mt19937_64 rng(8);
  std::vector<SimplicialComplex> corpus{build_m4_15(), oracle::torus7(), oracle::rp2_6()};
  for (int i = 0; i < 10; ++i) corpus.push_back(random_stacked_sphere(2 + 2 * (i % 2), 8 + i, rng()));
  for (const auto& x : corpus) {
    ASSERT_TRUE(in_walkup_class(x));
    const auto f = f_vector(x);
    const auto chi = euler_characteristic(x);
    EXPECT_EQ(walkup_fvector_even(x.dimension(), f[0], chi), f);
    EXPECT_EQ(fvector_from_f0_f1(x.dimension(), f[0], f[1]), f);
    // Equality in the f1 bound iff 2-neighborly (checked through the f1 formula).
    const std::int64_t lhs = 2 * (f[0] * (f[0] - 1) / 2 - f[1]);
    EXPECT_EQ(lhs == 0, is_two_neighborly(x));
    if (x.dimension() == 4) {
      auto r = check_bounds_4manifold(x);
      EXPECT_TRUE(r.walkup_equality);
      EXPECT_EQ(r.neighborly_equality, is_two_neighborly(x));
    }
  }
}
