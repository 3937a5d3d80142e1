#include <ade/minrep.hpp>

#include <gtest/gtest.h>

using namespace ade;

namespace {

RepAction action(DynkinSpec s)
{
  auto L = build_lattice(s);
  return build_action(enumerate_curves(L), compute_structure_constants(enumerate_roots(L)));
}

std::vector<DynkinSpec> minuscule_specs()
{
  std::vector<DynkinSpec> out;
  for (const auto& s : desk_specs())
    if (!s.adjoint())
      out.push_back(s);
  return out;
}

} // namespace

TEST(MinRep, A1Standard)
{
  auto A = action({'A', 1, 1});
  EXPECT_EQ(A.dim(), 2);
  EXPECT_TRUE(verify_module(A).ok);
}

TEST(MinRep, AllDeskSpecsAreModules)
{
  for (const auto& s : minuscule_specs()) {
    auto A = action(s);
    auto rep = verify_module(A);
    EXPECT_TRUE(rep.ok) << s.name() << " node " << s.node << " " << rep.to_json().dump();
    EXPECT_EQ(A.dim(), A.curves().size());
    EXPECT_TRUE(rep.data["lowest_weight_annihilated"].get<bool>());
  }
}

TEST(MinRep, LowestWeightAndCartan)
{
  auto A = action({'E', 6, 1});
  const auto& R = A.roots();
  int N = A.dim();
  for (int i = 1; i <= 6; ++i) {
    EXPECT_LT(A.x(R.negate(R.simple(i))).to[N - 1], 0);
    // h_i on v_{C0}: -(C0 . C_i)
    EXPECT_EQ(A.h(i, N - 1), i == 1 ? -1 : 0);
  }
}

TEST(MinRep, CompositeGeneratorMatchesComposition)
{
  auto A = action({'A', 2, 1});
  const auto& R = A.roots();
  const auto& SC = A.constants();
  int c1 = R.simple(1), c2 = R.simple(2), c12 = R.sum(c1, c2);
  int N = A.dim();
  // x_{C1+C2} v_{C0} = n(C1,C2) (x_{C1} x_{C2} - x_{C2} x_{C1}) v_{C0}
  Term v{N - 1, 1};
  Term direct = A.apply(A.rank() + c12, v);
  Term a = A.apply(A.rank() + c1, A.apply(A.rank() + c2, v));
  Term b = A.apply(A.rank() + c2, A.apply(A.rank() + c1, v));
  ASSERT_FALSE(direct.zero());
  EXPECT_EQ(direct.index, 0); // C0 + C1 + C2 is l_1
  long composed = 0;
  if (!a.zero())
    composed += a.coef;
  if (!b.zero())
    composed -= b.coef;
  EXPECT_EQ(direct.coef, SC(c1, c2) * composed);
}

TEST(MinRep, MutationCaught)
{
  auto A = action({'E', 6, 1});
  const auto& R = A.roots();
  int r = R.simple(3);
  int l = 0;
  while (A.x(r).to[l] < 0)
    ++l;
  auto rep = verify_module(A.flipped(r, l));
  EXPECT_FALSE(rep.ok);
  EXPECT_FALSE(rep.witnesses.empty());
}

TEST(MinRep, Weyl)
{
  auto D4 = weyl_transitivity(action({'D', 4, 4}));
  EXPECT_TRUE(D4.ok);
  EXPECT_EQ(D4.data["orbit_size"], 8u);
  auto E6 = weyl_transitivity(action({'E', 6, 1}));
  EXPECT_EQ(E6.data["orbit_size"], 27u);
  auto E8 = weyl_transitivity(enumerate_curves(build_lattice({'E', 8, 1})));
  EXPECT_FALSE(E8.ok);
  EXPECT_EQ(E8.data["orbit_size"], 240u);
  EXPECT_TRUE(E8.data["transitive_on_nonzero_weights"].get<bool>());
  EXPECT_FALSE(E8.data["minuscule"].get<bool>());
  for (const auto& s : minuscule_specs())
    EXPECT_TRUE(weyl_transitivity(enumerate_curves(build_lattice(s))).ok) << s.name();
}

TEST(MinRep, E8Rejected)
{
  auto L = build_lattice({'E', 8, 1});
  EXPECT_THROW(build_action(enumerate_curves(L), compute_structure_constants(enumerate_roots(L))), SpecError);
}

TEST(MinRep, GeneratorsSquareToZero)
{
  for (auto s : {DynkinSpec{'E', 7, 1}, DynkinSpec{'D', 6, 6}, DynkinSpec{'A', 5, 3}}) {
    auto A = action(s);
    for (int r = 0; r < A.roots().size(); ++r)
      for (int l = 0; l < A.dim(); ++l) {
        int t = A.x(r).to[l];
        if (t >= 0) {
          ASSERT_LT(A.x(r).to[t], 0);
        }
      }
  }
}

TEST(MinRep, Faithful)
{
  for (auto s : {DynkinSpec{'A', 3, 1}, DynkinSpec{'A', 4, 2}, DynkinSpec{'D', 5, 1}, DynkinSpec{'D', 5, 5},
                 DynkinSpec{'E', 6, 1}, DynkinSpec{'E', 7, 1}}) {
    auto rep = faithfulness(action(s));
    EXPECT_TRUE(rep.ok) << s.name() << rep.to_json().dump();
  }
}

TEST(MinRep, RegaugeKeepsModule)
{
  auto A = action({'D', 5, 5});
  std::vector<int> s(A.dim(), 1);
  for (int i = 0; i < A.dim(); i += 3)
    s[i] = -1;
  EXPECT_TRUE(verify_module(A.regauged(s)).ok);
}
