#include <ade/rootsys.hpp>

#include <gtest/gtest.h>

#include <set>

using namespace ade;

namespace {

// every vector in [lo, hi]^n (C0 coefficient 0) of square -2
std::set<std::vector<int>> box_roots(const IntersectionLattice& L, int lo, int hi)
{
  int n = L.rank();
  std::set<std::vector<int>> out;
  std::vector<int> v(n + 1, lo);
  v[0] = 0;
  while (true) {
    if (L.pair(v, v) == -2)
      out.insert(v);
    int i = 1;
    while (i <= n && v[i] == hi)
      v[i++] = lo;
    if (i > n)
      break;
    ++v[i];
  }
  return out;
}

std::set<std::vector<int>> as_set(const RootSystem& R)
{
  std::set<std::vector<int>> s;
  for (int r = 0; r < R.size(); ++r)
    s.insert(R.coeffs(r));
  return s;
}

} // namespace

TEST(Roots, A2Count)
{
  auto R = enumerate_roots(build_lattice({'A', 2, 1}));
  EXPECT_EQ(R.size(), 6);
  EXPECT_EQ(as_set(R), box_roots(R.lattice(), -3, 3));
}

TEST(Roots, CountsAndBoxOracle)
{
  for (const auto& s : desk_specs()) {
    if (s.node != 1)
      continue;
    auto R = enumerate_roots(build_lattice(s));
    EXPECT_EQ(R.size(), dynkin_root_count(s.family, s.rank)) << s.name();
    EXPECT_EQ(R.size(), 2 * R.positive_count());
    // positive half from the [0,7] box, negatives by symmetry
    auto box = box_roots(R.lattice(), 0, 7);
    std::set<std::vector<int>> pos;
    for (int r = 0; r < R.positive_count(); ++r)
      pos.insert(R.coeffs(r));
    EXPECT_EQ(pos, box) << s.name();
  }
}

TEST(Roots, SmallBoxFullCheck)
{
  for (auto s : {DynkinSpec{'A', 3, 1}, DynkinSpec{'D', 4, 1}}) {
    auto R = enumerate_roots(build_lattice(s));
    EXPECT_EQ(as_set(R), box_roots(R.lattice(), -3, 3));
  }
}

TEST(Roots, Structure)
{
  for (const auto& s : desk_specs()) {
    if (s.node != 1)
      continue;
    auto R = enumerate_roots(build_lattice(s));
    const auto& L = R.lattice();
    int P = R.positive_count();
    for (int r = 0; r < R.size(); ++r) {
      EXPECT_EQ(L.pair(R.coeffs(r), R.coeffs(r)), -2);
      EXPECT_EQ(R.coeffs(r)[0], 0);
      EXPECT_EQ(R.negate(R.negate(r)), r);
      bool nonneg = true;
      for (int x : R.coeffs(r))
        nonneg = nonneg && x >= 0;
      EXPECT_EQ(nonneg, R.positive(r));
    }
    for (int r = 1; r < P; ++r)
      EXPECT_LE(R.height(r - 1), R.height(r));
    // every non-simple positive root steps down by a simple root
    for (int r = 0; r < P; ++r) {
      if (R.height(r) < 2)
        continue;
      bool found = false;
      for (int i = 1; i <= s.rank && !found; ++i) {
        if (L.pair_basis(R.coeffs(r), i) != -1)
          continue;
        auto d = R.coeffs(r);
        --d[i];
        int k = R.index_of(d);
        found = k >= 0 && R.positive(k);
      }
      EXPECT_TRUE(found) << s.name() << " " << R.root(r).to_string();
    }
  }
}

TEST(Roots, Heights)
{
  auto R = enumerate_roots(build_lattice({'A', 2, 1}));
  EXPECT_EQ(height(R, DivisorClass::from_ints({0, 1, 0})), 1);
  EXPECT_EQ(height(R, DivisorClass::from_ints({0, 1, 1})), 2);
  EXPECT_THROW(height(R, DivisorClass::from_ints({0, -1, 0})), std::invalid_argument);
  EXPECT_THROW(height(R, DivisorClass::from_ints({0, 1, 2})), std::invalid_argument);
  auto E8 = enumerate_roots(build_lattice({'E', 8, 1}));
  EXPECT_EQ(E8.height(E8.highest()), 29);
  EXPECT_EQ(E8.root(E8.highest()), DivisorClass::from_ints({0, 2, 3, 4, 5, 6, 4, 2, 3}));
}

TEST(Roots, AlphaStrings)
{
  auto A2 = enumerate_roots(build_lattice({'A', 2, 1}));
  auto C = [](std::vector<int> v) { return DivisorClass::from_ints(v); };
  EXPECT_EQ(alpha_string(A2, C({0, 1, 0}), C({0, 0, 1})), std::make_pair(0, 1));
  auto A3 = enumerate_roots(build_lattice({'A', 3, 1}));
  EXPECT_EQ(alpha_string(A3, C({0, 1, 0, 0}), C({0, 0, 0, 1})), std::make_pair(0, 0));
  EXPECT_THROW(alpha_string(A2, C({0, 1, 0}), C({0, 1, 0})), std::invalid_argument);
  EXPECT_THROW(alpha_string(A2, C({0, 1, 0}), C({0, -1, 0})), std::invalid_argument);
  auto E7 = enumerate_roots(build_lattice({'E', 7, 1}));
  for (int a = 0; a < E7.size(); a += 5)
    for (int b = 0; b < E7.size(); ++b) {
      if (a == b || b == E7.negate(a))
        continue;
      auto [r, q] = alpha_string(E7, E7.root(b), E7.root(a));
      EXPECT_LE(r + q, 1);
    }
}

TEST(Roots, SumTable)
{
  auto R = enumerate_roots(build_lattice({'D', 5, 1}));
  for (int a = 0; a < R.size(); ++a)
    for (int b = 0; b < R.size(); ++b) {
      int s = R.sum(a, b);
      // a + b is a root iff a.b = 1
      EXPECT_EQ(s >= 0, R.pair(a, b) == 1);
    }
}
