#pragma once

#include "curves.hpp"
#include "report.hpp"

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace ade {

struct Summand {
  std::string description;
  int size = 0;
  int grade = 0;             // coefficient of the removed node
  std::vector<int> members;  // curve indices, empty for root gradings
};

struct BranchReport {
  std::string ambient;
  int removed = 0;
  std::vector<Summand> summands;
  Report check{"branch"};

  int total() const
  {
    int s = 0;
    for (const auto& m : summands)
      s += m.size;
    return s;
  }

  std::vector<int> sizes() const
  {
    std::vector<int> s;
    for (const auto& m : summands)
      s.push_back(m.size);
    return s;
  }

  json to_json() const
  {
    json list = json::array();
    for (const auto& m : summands) {
      json e = {{"description", m.description}, {"size", m.size}, {"grade", m.grade}};
      if (!m.members.empty()) {
        std::vector<int> one;
        for (int i : m.members)
          one.push_back(i + 1);
        e["members"] = one;
      }
      list.push_back(e);
    }
    return {{"ambient", ambient}, {"removed", removed}, {"total", total()}, {"summands", list}, {"check", check.to_json()}};
  }
};

namespace detail {

// C-parts of the standard curves of the A chain c[0] - c[1] - ... with
// the (-1)-curve attached at c[0]: lambda_j = C_{c[0]} + ... + C_{c[j-1]}
inline std::vector<DivisorClass> chain_parts(int rank, const std::vector<int>& chain)
{
  std::vector<DivisorClass> out{DivisorClass(rank)};
  for (int c : chain)
    out.push_back(out.back() + DivisorClass::basis(rank, c));
  return out;
}

inline std::vector<std::vector<int>> subsets(int n, int k)
{
  std::vector<std::vector<int>> out;
  std::vector<int> s;
  std::function<void(int)> rec = [&](int from) {
    if (static_cast<int>(s.size()) == k) {
      out.push_back(s);
      return;
    }
    for (int i = from; i < n; ++i) {
      s.push_back(i);
      rec(i + 1);
      s.pop_back();
    }
  };
  rec(0);
  return out;
}

// Locate every class in I and check that the summands partition I and
// that each summand sits in a single grade.
struct Partitioner {
  const CurveSet& I;
  int removed;
  BranchReport rep;
  std::vector<int> owner;

  Partitioner(const CurveSet& I_, int removed_) : I(I_), removed(removed_), owner(I_.size(), -1)
  {
    rep.ambient = I.spec().name() + " node " + std::to_string(I.spec().node);
    rep.removed = removed;
  }

  void add(const std::string& description, int grade, const std::vector<DivisorClass>& classes)
  {
    Summand s;
    s.description = description;
    s.grade = grade;
    int id = static_cast<int>(rep.summands.size());
    for (const auto& c : classes) {
      int i = I.find(c);
      if (i < 0) {
        rep.check.fail({{"summand", description}, {"class", c.to_json()}, {"reason", "not a curve"}});
        continue;
      }
      if (owner[i] >= 0) {
        rep.check.fail({{"summand", description}, {"curve", i + 1}, {"reason", "already assigned"}});
        continue;
      }
      if (removed > 0 && I.coeffs(i)[removed] != grade)
        rep.check.fail({{"summand", description}, {"curve", i + 1}, {"reason", "grade mismatch"}});
      owner[i] = id;
      s.members.push_back(i);
    }
    std::sort(s.members.begin(), s.members.end());
    s.size = static_cast<int>(s.members.size());
    rep.summands.push_back(s);
  }

  BranchReport finish()
  {
    for (int i = 0; i < I.size(); ++i)
      if (owner[i] < 0)
        rep.check.fail({{"curve", i + 1}, {"reason", "not covered"}});
    rep.check.data["sizes"] = rep.sizes();
    rep.check.data["total"] = rep.total();
    return rep;
  }
};

// the A chain left after deleting the removed node, starting at the node
// carrying C0
inline std::vector<int> residual_chain(const DynkinSpec& s)
{
  std::vector<int> c;
  if (s.family == 'D')
    for (int i = 1; i < s.rank; ++i)
      c.push_back(i);
  else if (s.family == 'E' && s.node == 1)
    for (int i = 1; i <= s.rank - 1; ++i)
      c.push_back(i);
  else if (s.family == 'E' && s.rank == 6 && s.node == 5)
    for (int i = 5; i >= 1; --i)
      c.push_back(i);
  else
    throw SpecError("no residual chain for " + s.name() + " node " + std::to_string(s.node));
  return c;
}

inline DivisorClass c0(int rank) { return DivisorClass::basis(rank, 0); }

} // namespace detail

// D_n standard: I1 = the A_{n-1} standard curves, I2 = F - I1
inline BranchReport branch_dn_std(const CurveSet& I)
{
  const auto& s = I.spec();
  if (s.family != 'D' || s.node != 1)
    throw SpecError("branch_dn_std needs the D_n standard curve set");
  int n = s.rank;
  auto F = I.special().at("F");
  std::vector<DivisorClass> I1, I2;
  for (const auto& lam : detail::chain_parts(n, detail::residual_chain(s))) {
    I1.push_back(detail::c0(n) + lam);
    I2.push_back(F - I1.back());
  }
  detail::Partitioner p(I, n);
  p.add("A" + std::to_string(n - 1) + " standard", 0, I1);
  p.add("F - standard", 1, I2);
  return p.finish();
}

// A_n wedge^k: l_{i1} + ... + l_{ik} + C0 - (l_{n+1} + ... + l_{n+2-k}),
// the subtracted curves being the k lowest standard curves
inline BranchReport branch_an_wedge(const CurveSet& I)
{
  const auto& s = I.spec();
  if (s.family != 'A')
    throw SpecError("branch_an_wedge needs an A_n curve set");
  int n = s.rank, k = s.node;
  std::vector<int> chain;
  for (int i = 1; i <= n; ++i)
    chain.push_back(i);
  auto lam = detail::chain_parts(n, chain);
  DivisorClass low(n);
  for (int j = 0; j < k; ++j)
    low += lam[j];
  std::vector<DivisorClass> classes;
  for (const auto& sub : detail::subsets(n + 1, k)) {
    DivisorClass c = detail::c0(n) - low;
    for (int j : sub)
      c += lam[j];
    classes.push_back(c);
  }
  detail::Partitioner p(I, 0);
  p.add("wedge " + std::to_string(k) + " of the standard curves", 0, classes);
  return p.finish();
}

// D_n spinor (node n): -(l_{i1} + ... + l_{i2m}) + mF + C0 over even
// subsets of the A_{n-1} standard curves, one summand per m
inline BranchReport branch_dn_spinor(const CurveSet& I)
{
  const auto& s = I.spec();
  if (s.family != 'D' || s.node != s.rank)
    throw SpecError("branch_dn_spinor needs the D_n node n curve set");
  int n = s.rank;
  auto lam = detail::chain_parts(n, detail::residual_chain(s));
  std::vector<int> f(n + 1, 2);
  f[0] = 0;
  f[n - 1] = f[n] = 1;
  auto Fpart = DivisorClass::from_ints(f);
  detail::Partitioner p(I, 0);
  for (int m = 0; 2 * m <= n; ++m) {
    std::vector<DivisorClass> classes;
    for (const auto& sub : detail::subsets(n, 2 * m)) {
      DivisorClass c = detail::c0(n) + Integer(m) * Fpart;
      for (int j : sub)
        c -= lam[j];
      classes.push_back(c);
    }
    p.add("wedge " + std::to_string(2 * m) + " twisted by " + std::to_string(m) + "F", 0, classes);
  }
  return p.finish();
}

// E6: {l_i}, {H - l_i - l_j}, {2H - sum + l_i}; E7 adds {K' - l_i} and
// uses {2H - five of the l's}
inline BranchReport branch_exceptional(const CurveSet& I)
{
  const auto& s = I.spec();
  if (s.family != 'E' || s.rank == 8)
    throw SpecError("branch_exceptional needs the E6 or E7 curve set");
  int n = s.rank;
  int removed = n;
  auto H = I.special().at("H");
  auto K = I.special().at("K'");
  std::vector<DivisorClass> l;
  for (const auto& lam : detail::chain_parts(n, detail::residual_chain(s)))
    l.push_back(detail::c0(n) + lam);
  int m = static_cast<int>(l.size());
  DivisorClass sum(n);
  for (const auto& x : l)
    sum += x;
  detail::Partitioner p(I, removed);
  p.add("A" + std::to_string(m - 1) + " standard", 0, l);
  std::vector<DivisorClass> two;
  for (const auto& sub : detail::subsets(m, 2))
    two.push_back(H - l[sub[0]] - l[sub[1]]);
  p.add("H - l_i - l_j", 1, two);
  std::vector<DivisorClass> third;
  if (n == 6) {
    for (int i = 0; i < m; ++i)
      third.push_back(Integer(2) * H - sum + l[i]);
    p.add("2H - sum + l_i", 2, third);
  } else {
    for (const auto& sub : detail::subsets(m, 5)) {
      DivisorClass c = Integer(2) * H;
      for (int j : sub)
        c -= l[j];
      third.push_back(c);
    }
    p.add("2H - five l's", 2, third);
    std::vector<DivisorClass> fourth;
    for (int i = 0; i < m; ++i)
      fourth.push_back(K - l[i]);
    p.add("K' - l_i", 3, fourth);
  }
  return p.finish();
}

// E8 roots graded by the coefficient of the removed node (C8 -> A7,
// C7 -> D7), with the Cartan subalgebra in grade 0
inline BranchReport branch_e8(const RootSystem& R, int removed)
{
  const auto& spec = R.lattice().spec();
  if (spec.family != 'E' || spec.rank != 8)
    throw SpecError("branch_e8 needs the E8 root system");
  if (removed != 8 && removed != 7)
    throw SpecError("branch_e8 removes C8 or C7");
  std::map<int, int> grade;
  long grade_sum = 0;
  for (int r = 0; r < R.size(); ++r) {
    int g = R.coeffs(r)[removed];
    ++grade[g];
    grade_sum += g;
  }
  BranchReport rep;
  rep.ambient = "E8 adjoint";
  rep.removed = removed;
  auto add = [&](const std::string& d, int g, int size) { rep.summands.push_back({d, size, g, {}}); };
  for (const auto& [g, c] : grade) {
    if (g != 0) {
      add("grade " + std::to_string(g), g, c);
      continue;
    }
    if (removed == 8) {
      add("grade 0 with Cartan", 0, c + 8);
    } else {
      add("centre", 0, 1);
      add("D7", 0, c + 7);
    }
  }
  rep.check.data["grade_sum"] = grade_sum;
  if (grade_sum != 0)
    rep.check.fail({{"reason", "grades do not sum to zero"}});
  rep.check.data["sizes"] = rep.sizes();
  rep.check.data["total"] = rep.total();
  if (rep.total() != R.rank() + R.size())
    rep.check.fail({{"reason", "sizes do not total the dimension"}});
  return rep;
}

} // namespace ade
