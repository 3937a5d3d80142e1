#include <ade/descent.hpp>

#include <gtest/gtest.h>

using namespace ade;

namespace {

CurveSet curves(DynkinSpec s) { return enumerate_curves(build_lattice(s)); }

RepAction action(DynkinSpec s)
{
  auto L = build_lattice(s);
  return build_action(enumerate_curves(L), compute_structure_constants(enumerate_roots(L)));
}

long binom(int n, int k)
{
  if (k < 0 || k > n)
    return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i)
    r = r * (n - k + i) / i;
  return r;
}

} // namespace

TEST(Descent, SplittingTypesVerbatim)
{
  for (int n = 1; n <= 8; ++n) {
    auto I = curves({'A', n, 1});
    for (int i = 1; i <= n; ++i) {
      auto st = splitting_type(I, i);
      EXPECT_EQ(st.zeros(), n - 1);
      EXPECT_EQ(st.pairs.size(), 1u);
    }
  }
  for (int n = 4; n <= 8; ++n) {
    auto I = curves({'D', n, 1});
    auto S = curves({'D', n, n});
    for (int i = 1; i <= n; ++i) {
      auto st = splitting_type(I, i);
      EXPECT_EQ(st.zeros(), 2 * n - 4);
      EXPECT_EQ(st.pairs.size(), 2u);
      auto sp = splitting_type(S, i);
      EXPECT_EQ(sp.zeros(), 1 << (n - 2));
      EXPECT_EQ(sp.pairs.size(), static_cast<std::size_t>(1 << (n - 3)));
    }
  }
  auto E6 = curves({'E', 6, 1});
  auto E7 = curves({'E', 7, 1});
  for (int i = 1; i <= 6; ++i) {
    EXPECT_EQ(splitting_type(E6, i).zeros(), 15);
    EXPECT_EQ(splitting_type(E6, i).pairs.size(), 6u);
  }
  for (int i = 1; i <= 7; ++i) {
    EXPECT_EQ(splitting_type(E7, i).zeros(), 32);
    EXPECT_EQ(splitting_type(E7, i).pairs.size(), 12u);
  }
}

TEST(Descent, DnPairsAtCn)
{
  for (int n = 4; n <= 8; ++n) {
    auto st = splitting_type(curves({'D', n, 1}), n);
    std::vector<std::pair<int, int>> expect{{n - 2, n}, {n - 1, n + 1}};
    EXPECT_EQ(st.pairs, expect);
    EXPECT_EQ(st.degrees.at(1), 2);
    EXPECT_EQ(st.degrees.at(-1), 2);
  }
}

TEST(Descent, CountsAddUp)
{
  for (const auto& s : desk_specs()) {
    auto I = curves(s);
    for (int i = 1; i <= s.rank; ++i) {
      auto st = splitting_type(I, i);
      if (s.adjoint()) {
        EXPECT_EQ(st.zeros() + 2 * static_cast<int>(st.pairs.size()) + static_cast<int>(st.twos.size()), I.size());
        for (const auto& [d, m] : st.degrees)
          EXPECT_LE(std::labs(d), 2);
      } else {
        EXPECT_EQ(st.zeros() + 2 * static_cast<int>(st.pairs.size()), I.size());
        EXPECT_TRUE(st.twos.empty());
        for (const auto& [d, m] : st.degrees)
          EXPECT_LE(std::labs(d), 1);
      }
    }
  }
}

TEST(Descent, E8HasDegreeTwo)
{
  auto I = curves({'E', 8, 1});
  for (int i = 1; i <= 8; ++i) {
    auto st = splitting_type(I, i);
    EXPECT_EQ(st.twos.size(), 2u);
  }
}

// pairs at C_i in wedge^k: k-subsets of standard curves with total degree
// +1 on C_i
TEST(Descent, WedgePairsMatchSubsetOracle)
{
  for (int n = 2; n <= 8; ++n) {
    auto std_curves = curves({'A', n, 1});
    for (int k = 1; k <= n; ++k) {
      auto I = curves({'A', n, k});
      for (int i = 1; i <= n; ++i) {
        std::vector<long> deg;
        for (int l = 0; l < std_curves.size(); ++l)
          deg.push_back(std_curves.pair_basis(l, i));
        int plus = static_cast<int>(std::count(deg.begin(), deg.end(), 1));
        int zero = static_cast<int>(std::count(deg.begin(), deg.end(), 0));
        // choose the +1 curve and k-1 degree-0 curves
        long oracle = binom(zero, k - 1) * plus;
        EXPECT_EQ(static_cast<long>(splitting_type(I, i).pairs.size()), oracle) << n << " " << k << " " << i;
      }
    }
  }
}

TEST(Descent, ReportEntries)
{
  for (int n = 1; n <= 8; ++n) {
    auto A = action({'A', n, 1});
    auto rep = descent_report(A.curves(), eta_from_rep(A));
    EXPECT_TRUE(rep.ok);
    for (int i = 1; i <= n; ++i) {
      const auto& e = rep.data["components"][i - 1]["entries"];
      ASSERT_EQ(e.size(), 1u);
      EXPECT_EQ(e[0][0], n + 1 - i);
      EXPECT_EQ(e[0][1], n + 2 - i);
    }
  }
  for (int n = 4; n <= 8; ++n) {
    auto A = action({'D', n, 1});
    auto rep = descent_report(A.curves(), eta_from_rep(A));
    const auto& e = rep.data["components"][n - 1]["entries"];
    ASSERT_EQ(e.size(), 2u);
    EXPECT_EQ(e[0][0], n - 1);
    EXPECT_EQ(e[0][1], n + 1);
    EXPECT_EQ(e[1][0], n);
    EXPECT_EQ(e[1][1], n + 2);
  }
  auto A = action({'E', 6, 1});
  auto rep = descent_report(A.curves(), eta_from_rep(A));
  EXPECT_TRUE(rep.ok);
  for (const auto& x : rep.data["components"][5]["entries"])
    EXPECT_EQ(std::abs(x[2].get<int>()), 1);
}

TEST(Descent, TwistExamples)
{
  for (int n = 4; n <= 8; ++n) {
    auto t = descent_twist({'D', n, 1});
    EXPECT_EQ(t.k, 2);
    EXPECT_EQ(t.B, special_divisor({'D', n, 1}, "F"));
  }
  auto e6 = descent_twist({'E', 6, 1});
  EXPECT_EQ(e6.k, 3);
  EXPECT_EQ(e6.B, DivisorClass::from_ints({3, 4, 5, 6, 4, 2, 3}));
  auto e7 = descent_twist({'E', 7, 1});
  EXPECT_EQ(e7.k, 2);
  EXPECT_EQ(e7.B, DivisorClass::from_ints({2, 3, 4, 5, 6, 4, 2, 3}));
  auto d4 = descent_twist({'D', 4, 4});
  EXPECT_EQ(d4.B, DivisorClass::from_ints({4, 2, 4, 2, 4}));
  for (int n = 1; n <= 8; ++n) {
    auto a = descent_twist({'A', n, 1});
    EXPECT_EQ(a.k, n + 1);
    for (int i = 1; i <= n; ++i)
      EXPECT_EQ(a.B[i], n + 1 - i);
  }
  EXPECT_THROW(descent_twist({'E', 8, 1}), SpecError);
  EXPECT_THROW(descent_twist({'D', 5, 2}), SpecError);
}

TEST(Descent, TwistOrthogonalEverywhere)
{
  for (const auto& s : desk_specs()) {
    if (s.adjoint())
      continue;
    auto L = build_lattice(s);
    auto rep = twist_check(L, descent_twist(s));
    EXPECT_TRUE(rep.ok) << s.name() << " " << s.node << " " << rep.to_json().dump();
  }
}

TEST(Descent, TwistCheckDetectsBadDivisor)
{
  auto L = build_lattice({'E', 6, 1});
  auto t = descent_twist({'E', 6, 1});
  t.B[2] += 1;
  EXPECT_FALSE(twist_check(L, t).ok);
}

TEST(Descent, Chern)
{
  for (const auto& s : desk_specs()) {
    auto R = enumerate_roots(build_lattice(s));
    auto rep = chern_report(R);
    EXPECT_TRUE(rep.ok) << s.name();
    auto c = chern_adjoint(R);
    EXPECT_TRUE(c.c1.is_zero());
    EXPECT_EQ(c.c2, c.dim - c.rank);
  }
  EXPECT_EQ(chern_adjoint(enumerate_roots(build_lattice({'E', 8, 1}))).c2, 240);
  EXPECT_EQ(chern_adjoint(enumerate_roots(build_lattice({'A', 2, 1}))).c2, 6);
}

TEST(Descent, FirstChernOfCurveBundle)
{
  auto I = curves({'A', 1, 1});
  // C0 + (C0 + C1)
  EXPECT_EQ(chern_c1(I), DivisorClass::from_ints({2, 1}));
  auto E6 = curves({'E', 6, 1});
  EXPECT_EQ(chern_c1(E6).c0(), 27);
}
