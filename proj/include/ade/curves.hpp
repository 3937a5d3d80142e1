#pragma once

#include "rootsys.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace ade {

namespace detail {

// injective 64-bit key for coefficient vectors of length <= 9 with
// entries in [-64, 63]; returns false when out of range
inline bool pack(const std::vector<int>& v, std::uint64_t& key)
{
  if (v.size() > 9)
    return false;
  key = v.size();
  for (int x : v) {
    if (x < -64 || x > 63)
      return false;
    key = (key << 7) | static_cast<std::uint64_t>(x + 64);
  }
  return true;
}

inline DivisorClass ints(std::vector<int> v) { return DivisorClass::from_ints(v); }

// swap of the E6 diagram automorphism 1<->5, 2<->4
inline DivisorClass e6_flip(const DivisorClass& d)
{
  DivisorClass out = d;
  out[1] = d[5];
  out[5] = d[1];
  out[2] = d[4];
  out[4] = d[2];
  return out;
}

} // namespace detail

// F (D_n, node 1), H and K' (E_n) in the lattice's own basis. E6 node 5
// uses the diagram automorphism image of the node-1 classes.
inline std::map<std::string, DivisorClass> special_divisors(const DynkinSpec& spec)
{
  spec.validate();
  std::map<std::string, DivisorClass> m;
  int n = spec.rank;
  if (spec.family == 'D' && spec.node == 1) {
    std::vector<int> f(n + 1, 2);
    f[n - 1] = f[n] = 1;
    m.emplace("F", detail::ints(f));
  } else if (spec.family == 'E') {
    using detail::ints;
    if (n == 6) {
      auto H = ints({3, 3, 3, 3, 2, 1, 1});
      auto K = ints({3, 4, 5, 6, 4, 2, 3});
      if (spec.node == 5) {
        H = detail::e6_flip(H);
        K = detail::e6_flip(K);
      }
      m.emplace("H", H);
      m.emplace("K'", K);
    } else if (n == 7) {
      m.emplace("H", ints({3, 3, 3, 3, 3, 2, 1, 1}));
      m.emplace("K'", ints({2, 3, 4, 5, 6, 4, 2, 3}));
    } else {
      m.emplace("H", ints({3, 3, 3, 3, 3, 3, 2, 1, 1}));
      m.emplace("K'", ints({1, 2, 3, 4, 5, 6, 4, 2, 3}));
    }
  }
  if (m.empty())
    throw SpecError("no distinguished divisors (F, H, K') for " + spec.name() + " node " + std::to_string(spec.node));
  return m;
}

inline DivisorClass special_divisor(const DynkinSpec& spec, const std::string& name)
{
  auto m = special_divisors(spec);
  auto it = m.find(name);
  if (it == m.end())
    throw SpecError(name + " is not defined for " + spec.name() + " node " + std::to_string(spec.node));
  return it->second;
}

// The (-1)-curves l = C0 + lambda, ordered by decreasing height; inside a
// height layer by decreasing lexicographic order read from C_n down to C1.
class CurveSet {
public:
  CurveSet() = default;

  CurveSet(IntersectionLattice L, std::vector<std::vector<int>> curves) : lat_(std::move(L)), c_(std::move(curves))
  {
    std::sort(c_.begin(), c_.end(), [](const auto& a, const auto& b) {
      int ha = ht(a), hb = ht(b);
      if (ha != hb)
        return ha > hb;
      return std::lexicographical_compare(b.rbegin(), b.rend(), a.rbegin(), a.rend());
    });
    for (int i = 0; i < size(); ++i) {
      std::uint64_t k;
      if (!detail::pack(c_[i], k))
        throw std::overflow_error("curve coefficients out of the supported range");
      index_[k] = i;
    }
    try {
      special_ = special_divisors(lat_.spec());
    } catch (const SpecError&) {
    }
  }

  const IntersectionLattice& lattice() const { return lat_; }
  const DynkinSpec& spec() const { return lat_.spec(); }
  int rank() const { return lat_.rank(); }
  int size() const { return static_cast<int>(c_.size()); }

  const std::vector<int>& coeffs(int i) const { return c_.at(i); }
  DivisorClass curve(int i) const { return DivisorClass::from_ints(c_.at(i)); }
  int height(int i) const { return ht(c_.at(i)); }
  long pair(int i, int j) const { return lat_.pair(c_[i], c_[j]); }
  long pair_basis(int i, int k) const { return lat_.pair_basis(c_[i], k); }

  int index_of(const std::vector<int>& v) const
  {
    std::uint64_t k;
    if (!detail::pack(v, k))
      return -1;
    auto it = index_.find(k);
    return it == index_.end() ? -1 : it->second;
  }
  int find(const DivisorClass& d) const
  {
    if (d.rank() != rank())
      return -1;
    for (const auto& z : d.coeffs())
      if (!z.fits_sint_p())
        return -1;
    return index_of(d.to_ints());
  }

  const std::map<std::string, DivisorClass>& special() const { return special_; }

  json to_json() const
  {
    json j;
    j["type"] = spec().name();
    j["node"] = spec().node;
    j["count"] = size();
    j["order"] = "height descending; ties descending lexicographic on (a_n, ..., a_1)";
    json list = json::array();
    for (int i = 0; i < size(); ++i) {
      json e;
      e["l"] = i + 1;
      e["class"] = curve(i).to_json();
      e["height"] = height(i);
      list.push_back(e);
    }
    j["curves"] = list;
    if (!special_.empty()) {
      json s = json::object();
      for (const auto& [k, v] : special_)
        s[k] = v.to_json();
      j["special"] = s;
    }
    return j;
  }

private:
  static int ht(const std::vector<int>& v)
  {
    int s = 0;
    for (std::size_t i = 1; i < v.size(); ++i)
      s += v[i];
    return s;
  }

  IntersectionLattice lat_;
  std::vector<std::vector<int>> c_;
  std::unordered_map<std::uint64_t, int> index_;
  std::map<std::string, DivisorClass> special_;
};

// Breadth-first search from C0 by simple reflections: if l.C_i = d > 0
// then s_i(l) = l + d C_i is again a (-1)-curve of larger height. In the
// minuscule cases d is always 1; the E8 adjoint orbit needs d = 2 steps.
inline CurveSet enumerate_curves(const IntersectionLattice& L)
{
  int n = L.rank();
  auto R = enumerate_roots(L);
  const auto& theta = R.coeffs(R.highest());
  std::vector<int> cap(n + 1);
  DivisorClass K;
  bool haveK = false;
  try {
    K = special_divisor(L.spec(), "K'");
    haveK = true;
  } catch (const SpecError&) {
  }
  for (int i = 1; i <= n; ++i)
    cap[i] = haveK ? theta[i] + to_int(K[i]) : n * theta[i] + 1;

  std::vector<int> start(n + 1, 0);
  start[0] = 1;
  std::set<std::vector<int>> seen{start};
  std::deque<std::vector<int>> queue{start};
  while (!queue.empty()) {
    auto l = queue.front();
    queue.pop_front();
    for (int i = 1; i <= n; ++i) {
      long d = L.pair_basis(l, i);
      if (d <= 0)
        continue;
      auto m = l;
      m[i] += static_cast<int>(d);
      if (m[i] > cap[i])
        throw std::overflow_error("curve enumeration exceeded the coefficient cap at C" + std::to_string(i));
      if (seen.insert(m).second)
        queue.push_back(m);
    }
  }
  return CurveSet(L, std::vector<std::vector<int>>(seen.begin(), seen.end()));
}

struct Filtration {
  int m = 0;                            // maximal height
  std::vector<std::vector<int>> levels; // levels[i] = indices with ht <= m - i
};

inline Filtration order_and_filter(const CurveSet& I)
{
  Filtration f;
  for (int i = 0; i < I.size(); ++i)
    f.m = std::max(f.m, I.height(i));
  for (int lvl = 0; lvl <= f.m; ++lvl) {
    std::vector<int> members;
    for (int i = 0; i < I.size(); ++i)
      if (I.height(i) <= f.m - lvl)
        members.push_back(i);
    f.levels.push_back(members);
  }
  return f;
}

// for each curve, value -> number of other curves with that pairing
inline std::vector<std::map<long, int>> intersection_profile(const CurveSet& I)
{
  std::vector<std::map<long, int>> out(I.size());
  for (int i = 0; i < I.size(); ++i)
    for (int j = 0; j < I.size(); ++j)
      if (i != j)
        ++out[i][I.pair(i, j)];
  return out;
}

// all multisets {i1 <= ... <= ir} of curve indices whose classes sum to
// the target
inline std::vector<std::vector<int>> tuples_summing_to(const CurveSet& I, int r, const DivisorClass& target)
{
  std::vector<std::vector<int>> out;
  if (r < 1)
    return out;
  auto t = target.to_ints();
  std::vector<int> idx(r - 1, 0);
  std::vector<int> rest(t.size());
  // iterate over non-decreasing (r-1)-tuples, solve for the last member
  std::function<void(int, int)> rec = [&](int depth, int from) {
    if (depth == r - 1) {
      for (std::size_t c = 0; c < t.size(); ++c) {
        int s = t[c];
        for (int i : idx)
          s -= I.coeffs(i)[c];
        rest[c] = s;
      }
      int last = I.index_of(rest);
      if (last >= 0 && (r == 1 || last >= idx.back())) {
        auto tuple = idx;
        tuple.push_back(last);
        out.push_back(tuple);
      }
      return;
    }
    for (int i = from; i < I.size(); ++i) {
      idx[depth] = i;
      rec(depth + 1, i);
    }
  };
  rec(0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::vector<int>> triangles(const CurveSet& I)
{
  if (I.spec().family != 'E' || I.spec().rank != 6)
    throw SpecError("triangles are defined on the E6 curve set");
  return tuples_summing_to(I, 3, I.special().at("K'"));
}

inline std::vector<std::vector<int>> quadrangles(const CurveSet& I)
{
  if (I.spec().family != 'E' || I.spec().rank != 7)
    throw SpecError("quadrangles are defined on the E7 curve set");
  auto K = I.special().at("K'");
  return tuples_summing_to(I, 4, Integer(2) * K);
}

// curves as nodes, nonzero pairings as labelled edges
inline std::string curves_dot(const CurveSet& I)
{
  std::ostringstream os;
  os << "graph curves_" << I.spec().name() << "_" << I.spec().node << " {\n";
  for (int i = 0; i < I.size(); ++i)
    os << "  " << i + 1 << " [label=\"" << I.curve(i).to_string() << "\"];\n";
  for (int i = 0; i < I.size(); ++i)
    for (int j = i + 1; j < I.size(); ++j)
      if (long p = I.pair(i, j); p != 0)
        os << "  " << i + 1 << " -- " << j + 1 << " [label=\"" << p << "\"];\n";
  os << "}\n";
  return os.str();
}

inline std::string dynkin_dot(const IntersectionLattice& L)
{
  std::ostringstream os;
  os << "graph dynkin_" << L.spec().name() << " {\n";
  os << "  C0 [shape=box];\n";
  for (int i = 1; i <= L.rank(); ++i)
    os << "  C" << i << ";\n";
  for (auto [a, b] : L.edges())
    os << "  C" << a << " -- C" << b << " [label=\"1\"];\n";
  for (int i = 1; i <= L.rank(); ++i)
    if (L.gram(0, i) != 0)
      os << "  C0 -- C" << i << " [label=\"" << L.gram(0, i) << "\"];\n";
  os << "}\n";
  return os.str();
}

} // namespace ade
