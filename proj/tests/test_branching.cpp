#include <ade/branching.hpp>

#include <gtest/gtest.h>

using namespace ade;

namespace {

CurveSet curves(DynkinSpec s) { return enumerate_curves(build_lattice(s)); }

long binom(int n, int k)
{
  long r = 1;
  for (int i = 1; i <= k; ++i)
    r = r * (n - k + i) / i;
  return r;
}

// curves of the A_{m} lattice on the chain, embedded in the ambient
// lattice by relabelling C_j -> C_{chain[j-1]}
std::set<std::vector<int>> embedded_chain_curves(int rank, const std::vector<int>& chain)
{
  int m = static_cast<int>(chain.size());
  std::set<std::vector<int>> out;
  auto sub = curves({'A', m, 1});
  for (int i = 0; i < sub.size(); ++i) {
    std::vector<int> v(rank + 1, 0);
    v[0] = sub.coeffs(i)[0];
    for (int j = 1; j <= m; ++j)
      v[chain[j - 1]] = sub.coeffs(i)[j];
    out.insert(v);
  }
  return out;
}

std::set<std::vector<int>> members(const CurveSet& I, const Summand& s)
{
  std::set<std::vector<int>> out;
  for (int i : s.members)
    out.insert(I.coeffs(i));
  return out;
}

} // namespace

TEST(Branching, DnStandard)
{
  for (int n = 4; n <= 8; ++n) {
    auto I = curves({'D', n, 1});
    auto b = branch_dn_std(I);
    EXPECT_TRUE(b.check.ok) << b.to_json().dump();
    EXPECT_EQ(b.sizes(), (std::vector<int>{n, n}));
    auto F = I.special().at("F");
    for (int i : b.summands[1].members)
      EXPECT_GE(I.find(F - I.curve(i)), 0);
    // I1 is the A_{n-1} curve set on C1..C_{n-1}
    std::vector<int> chain;
    for (int i = 1; i < n; ++i)
      chain.push_back(i);
    EXPECT_EQ(members(I, b.summands[0]), embedded_chain_curves(n, chain));
  }
}

TEST(Branching, AnWedge)
{
  for (int n = 1; n <= 8; ++n)
    for (int k = 1; k <= n; ++k) {
      auto I = curves({'A', n, k});
      auto b = branch_an_wedge(I);
      EXPECT_TRUE(b.check.ok) << n << " " << k << " " << b.to_json().dump();
      EXPECT_EQ(b.total(), binom(n + 1, k));
      EXPECT_EQ(b.total(), I.size());
    }
  auto I = curves({'A', 3, 1});
  auto b = branch_an_wedge(I);
  std::vector<int> all{0, 1, 2, 3};
  EXPECT_EQ(b.summands[0].members, all);
}

TEST(Branching, DnSpinor)
{
  for (int n = 4; n <= 8; ++n) {
    auto I = curves({'D', n, n});
    auto b = branch_dn_spinor(I);
    EXPECT_TRUE(b.check.ok) << n << " " << b.to_json().dump();
    EXPECT_EQ(b.total(), 1 << (n - 1));
    for (std::size_t m = 0; m < b.summands.size(); ++m)
      EXPECT_EQ(b.summands[m].size, binom(n, 2 * static_cast<int>(m)));
    // m = 0 is C0 itself
    ASSERT_EQ(b.summands[0].members.size(), 1u);
    EXPECT_EQ(I.curve(b.summands[0].members[0]), DivisorClass::basis(n, 0));
  }
  EXPECT_EQ(branch_dn_spinor(curves({'D', 4, 4})).sizes(), (std::vector<int>{1, 6, 1}));
  EXPECT_EQ(branch_dn_spinor(curves({'D', 5, 5})).sizes(), (std::vector<int>{1, 10, 5}));
}

TEST(Branching, E6)
{
  for (int node : {1, 5}) {
    auto I = curves({'E', 6, node});
    auto b = branch_exceptional(I);
    EXPECT_TRUE(b.check.ok) << b.to_json().dump();
    EXPECT_EQ(b.sizes(), (std::vector<int>{6, 15, 6}));
  }
  auto I = curves({'E', 6, 1});
  auto b = branch_exceptional(I);
  EXPECT_EQ(members(I, b.summands[0]), embedded_chain_curves(6, {1, 2, 3, 4, 5}));
}

TEST(Branching, E7)
{
  auto I = curves({'E', 7, 1});
  auto b = branch_exceptional(I);
  EXPECT_TRUE(b.check.ok) << b.to_json().dump();
  EXPECT_EQ(b.sizes(), (std::vector<int>{7, 21, 21, 7}));
  EXPECT_EQ(members(I, b.summands[0]), embedded_chain_curves(7, {1, 2, 3, 4, 5, 6}));
  // the literal 3H - (six of the l's) family contains no curve
  auto H = I.special().at("H");
  DivisorClass sum(7);
  std::vector<DivisorClass> l;
  for (int i : b.summands[0].members)
    l.push_back(I.curve(i));
  for (const auto& x : l)
    sum += x;
  for (const auto& x : l)
    EXPECT_LT(I.find(Integer(3) * H - sum + x), 0);
}

TEST(Branching, E8Gradings)
{
  auto R = enumerate_roots(build_lattice({'E', 8, 1}));
  auto a7 = branch_e8(R, 8);
  EXPECT_TRUE(a7.check.ok);
  EXPECT_EQ(a7.sizes(), (std::vector<int>{8, 28, 56, 64, 56, 28, 8}));
  auto d7 = branch_e8(R, 7);
  EXPECT_TRUE(d7.check.ok);
  EXPECT_EQ(d7.sizes(), (std::vector<int>{14, 64, 1, 91, 64, 14}));
  EXPECT_EQ(a7.total(), 248);
  EXPECT_EQ(d7.total(), 248);
  EXPECT_EQ(a7.check.data["grade_sum"], 0);
  EXPECT_THROW(branch_e8(R, 3), SpecError);
}

TEST(Branching, DetectsWrongFormula)
{
  // the spinor m = 1 family with the F twist left out fails
  auto I = curves({'D', 5, 5});
  detail::Partitioner p(I, 0);
  auto lam = detail::chain_parts(5, detail::residual_chain(I.spec()));
  std::vector<DivisorClass> bad;
  for (const auto& sub : detail::subsets(5, 2))
    bad.push_back(DivisorClass::basis(5, 0) - lam[sub[0]] - lam[sub[1]]);
  p.add("bad", 0, bad);
  auto r = p.finish();
  EXPECT_FALSE(r.check.ok);
}

TEST(Branching, RejectsWrongSpec)
{
  EXPECT_THROW(branch_dn_std(curves({'A', 3, 1})), SpecError);
  EXPECT_THROW(branch_dn_spinor(curves({'D', 5, 1})), SpecError);
  EXPECT_THROW(branch_exceptional(curves({'D', 5, 1})), SpecError);
}
