#pragma once

#include "dbar.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace ade {

// Restriction of the curve bundle to C_i: degrees l.C_i, the (+1, -1)
// pairs (l, l + C_i) and, for the E8 adjoint orbit, the degree +-2 curves.
struct SplittingType {
  int component = 0;
  std::map<long, int> degrees;          // degree -> multiplicity
  std::vector<std::pair<int, int>> pairs; // (index of l + C_i, index of l)
  std::vector<int> twos;                // curves with |l.C_i| = 2

  int zeros() const
  {
    auto it = degrees.find(0);
    return it == degrees.end() ? 0 : it->second;
  }

  json to_json() const
  {
    json p = json::array();
    for (auto [u, w] : pairs)
      p.push_back({u + 1, w + 1});
    json t = json::array();
    for (int i : twos)
      t.push_back(i + 1);
    return {{"component", component}, {"zeros", zeros()}, {"pairs", p}, {"twos", t}};
  }
};

inline SplittingType splitting_type(const CurveSet& I, int k)
{
  if (k < 1 || k > I.rank())
    throw SpecError("no component C" + std::to_string(k));
  SplittingType st;
  st.component = k;
  auto ck = DivisorClass::basis(I.rank(), k);
  int plus = 0, minus = 0;
  for (int l = 0; l < I.size(); ++l) {
    long d = I.pair_basis(l, k);
    ++st.degrees[d];
    if (d == 2 || d == -2)
      st.twos.push_back(l);
    if (d == -1)
      ++minus;
    if (d != 1)
      continue;
    ++plus;
    int u = I.find(I.curve(l) + ck);
    if (u < 0 || I.pair_basis(u, k) != -1)
      throw std::logic_error("curve " + std::to_string(l + 1) + " has degree 1 on C" + std::to_string(k) +
                             " but l + C" + std::to_string(k) + " is not a degree -1 curve");
    st.pairs.emplace_back(u, l);
  }
  if (plus != minus)
    throw std::logic_error("unbalanced +1/-1 degrees on C" + std::to_string(k));
  std::sort(st.pairs.begin(), st.pairs.end());
  return st;
}

// For each C_k, the eta entries carrying phi_{C_k}. Each must have a
// nonzero coefficient; whether [phi_{C_k}|_{C_k}] != 0 is an analytic
// hypothesis and is reported, not evaluated.
inline Report descent_report(const CurveSet& I, const EtaMatrix& eta)
{
  Report rep("descent");
  json comps = json::array();
  for (int k = 1; k <= I.rank(); ++k) {
    auto ck = DivisorClass::basis(I.rank(), k);
    json list = json::array();
    for (const auto& [ij, e] : eta.entries) {
      if (I.curve(ij.first) - I.curve(ij.second) != ck)
        continue;
      list.push_back({ij.first + 1, ij.second + 1, e.sign});
      if (e.sign == 0)
        rep.fail({{"component", k}, {"i", ij.first + 1}, {"j", ij.second + 1}});
    }
    if (list.empty())
      rep.fail({{"component", k}, {"reason", "no entry carries phi_C" + std::to_string(k)}});
    comps.push_back({{"component", k}, {"entries", list}});
  }
  rep.data["components"] = comps;
  rep.data["hypothesis"] = "[phi_Ck|_Ck] != 0 for every k";
  rep.data["verdict"] = "descends to X iff the hypothesis holds";
  return rep;
}

struct Twist {
  DivisorClass B;
  int k = 0;
};

// B with O(B) of degree 0 on every C_i, and k its C0 coefficient. A_n
// wedge^k uses b_i = i(n+1-k) for i <= k and k(n+1-i) for i >= k.
inline Twist descent_twist(const DynkinSpec& spec)
{
  spec.validate();
  int n = spec.rank;
  int k = spec.node;
  std::vector<int> b(n + 1, 0);
  switch (spec.family) {
  case 'A':
    b[0] = n + 1;
    for (int i = 1; i <= n; ++i)
      b[i] = i <= k ? i * (n + 1 - k) : k * (n + 1 - i);
    break;
  case 'D':
    if (k == 1) {
      b = special_divisor(spec, "F").to_ints();
    } else if (k == n || k == n - 1) {
      // the node n - 1 spinor is the mirror image under C_{n-1} <-> C_n
      b[0] = 4;
      for (int i = 1; i <= n - 2; ++i)
        b[i] = 2 * i;
      b[n - 1] = k == n ? n - 2 : n;
      b[n] = k == n ? n : n - 2;
    } else {
      throw SpecError("no twist divisor for D" + std::to_string(n) + " node " + std::to_string(k));
    }
    break;
  case 'E':
    if (n == 8)
      throw SpecError("no twist divisor for the E8 adjoint case");
    b = special_divisor(spec, "K'").to_ints();
    break;
  default:
    throw SpecError("unknown family");
  }
  Twist t;
  t.B = DivisorClass::from_ints(b);
  t.k = b[0];
  return t;
}

inline Report twist_check(const IntersectionLattice& L, const Twist& t)
{
  Report rep("twist");
  json pairings = json::array();
  for (int i = 1; i <= L.rank(); ++i) {
    Integer p = L.pair(t.B, DivisorClass::basis(L.rank(), i));
    pairings.push_back(to_json_value(p));
    if (p != 0)
      rep.fail({{"component", i}, {"pairing", to_json_value(p)}});
  }
  if (t.k == 0 || Integer(t.k) != t.B.c0())
    rep.fail({{"reason", "k must be the nonzero C0 coefficient"}, {"k", t.k}});
  rep.data["B"] = t.B.to_json();
  rep.data["B_string"] = t.B.to_string();
  rep.data["k"] = t.k;
  rep.data["pairings"] = pairings;
  rep.data["B_dot_C0"] = to_json_value(L.pair(t.B, DivisorClass::basis(L.rank(), 0)));
  return rep;
}

// c1 of the curve bundle: sum of the classes of its curves
inline DivisorClass chern_c1(const CurveSet& I)
{
  DivisorClass s(I.rank());
  for (int i = 0; i < I.size(); ++i)
    s += I.curve(i);
  return s;
}

struct AdjointChern {
  DivisorClass c1;
  Integer c2 = 0;
  int dim = 0;
  int rank = 0;
};

// c1 = sum of all roots, c2 = sum over positive roots of
// c1(O(alpha)) c1(O(-alpha)) = -alpha.alpha
inline AdjointChern chern_adjoint(const RootSystem& R)
{
  AdjointChern c;
  c.c1 = DivisorClass(R.rank());
  for (int r = 0; r < R.size(); ++r)
    c.c1 += R.root(r);
  for (int r = 0; r < R.positive_count(); ++r)
    c.c2 -= R.lattice().pair(R.root(r), R.root(r));
  c.rank = R.rank();
  c.dim = R.rank() + R.size();
  return c;
}

inline Report chern_report(const RootSystem& R)
{
  auto c = chern_adjoint(R);
  Report rep("chern");
  rep.data["c1"] = c.c1.to_json();
  rep.data["c2"] = to_json_value(c.c2);
  rep.data["dim_minus_rank"] = c.dim - c.rank;
  rep.data["two_positive_roots"] = 2 * R.positive_count();
  if (!c.c1.is_zero())
    rep.fail({{"reason", "c1 of the adjoint bundle is nonzero"}});
  if (c.c2 != c.dim - c.rank || c.c2 != 2 * R.positive_count())
    rep.fail({{"reason", "c2 differs from dim - rank"}});
  return rep;
}

} // namespace ade
