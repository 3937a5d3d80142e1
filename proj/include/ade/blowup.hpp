#pragma once

#include "curves.hpp"
#include "report.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace ade {

// A lattice that grows by one orthogonal (-1) generator per blowup, with
// the canonical class and a list of tracked curve classes.
class BlowupSurface {
public:
  struct Curve {
    std::string name;
    std::vector<long> cls;
  };

  // the plane: basis h, K = -3h, tracked line "C" with C^2 = 1
  static BlowupSurface plane()
  {
    BlowupSurface S;
    S.start_ = "P2";
    S.gram_ = {{1}};
    S.K_ = {-3};
    S.curves_.push_back({"C", {1}});
    return S;
  }

  // P1 x P1: basis f1, f2, K = -2f1 - 2f2, tracked ruling "D" with D^2 = 0
  static BlowupSurface quadric()
  {
    BlowupSurface S;
    S.start_ = "F0";
    S.gram_ = {{0, 1}, {1, 0}};
    S.K_ = {-2, -2};
    S.curves_.push_back({"D", {1, 0}});
    return S;
  }

  static BlowupSurface start(const std::string& name)
  {
    if (name == "P2")
      return plane();
    if (name == "F0")
      return quadric();
    throw std::invalid_argument("unknown starting surface " + name);
  }

  int dim() const { return static_cast<int>(gram_.size()); }
  int size() const { return static_cast<int>(curves_.size()); }
  const Curve& curve(int i) const { return curves_.at(i); }
  const std::vector<long>& canonical() const { return K_; }

  int find(const std::string& name) const
  {
    for (int i = 0; i < size(); ++i)
      if (curves_[i].name == name)
        return i;
    return -1;
  }

  long dot(const std::vector<long>& a, const std::vector<long>& b) const
  {
    long s = 0;
    for (int i = 0; i < dim(); ++i)
      for (int j = 0; j < dim(); ++j)
        s += a[i] * gram_[i][j] * b[j];
    return s;
  }
  long pair(int i, int j) const { return dot(curves_[i].cls, curves_[j].cls); }
  long self(int i) const { return pair(i, i); }
  long k_degree(int i) const { return dot(K_, curves_[i].cls); }

  // blow up a point lying on the listed curves; every listed class loses
  // the new exceptional class e, K gains e. Returns the id of e.
  int blowup(const std::vector<int>& on, std::string name = {})
  {
    for (std::size_t a = 0; a < on.size(); ++a)
      for (std::size_t b = a + 1; b < on.size(); ++b)
        if (on[a] == on[b])
          throw std::invalid_argument("blowup point listed on the same curve twice");
    int d = dim();
    for (auto& row : gram_)
      row.push_back(0);
    gram_.push_back(std::vector<long>(d + 1, 0));
    gram_[d][d] = -1;
    K_.push_back(1);
    for (auto& c : curves_)
      c.cls.push_back(0);
    for (int i : on)
      curves_.at(i).cls[d] = -1;
    if (name.empty())
      name = "E" + std::to_string(++exceptional_);
    else
      ++exceptional_;
    std::vector<long> e(d + 1, 0);
    e[d] = 1;
    curves_.push_back({name, e});
    json step = json::object();
    json names = json::array();
    for (int i : on)
      names.push_back(curves_[i].name);
    step["on"] = names;
    step["new"] = name;
    steps_.push_back(step);
    return size() - 1;
  }

  json script() const { return {{"start", start_}, {"steps", steps_}}; }

  json to_json() const
  {
    json list = json::array();
    for (int i = 0; i < size(); ++i)
      list.push_back({{"name", curves_[i].name}, {"class", curves_[i].cls}, {"self", self(i)}, {"K", k_degree(i)}});
    return {{"start", start_}, {"rank", dim()}, {"canonical", K_}, {"curves", list}};
  }

private:
  std::string start_;
  std::vector<std::vector<long>> gram_;
  std::vector<long> K_;
  std::vector<Curve> curves_;
  json steps_ = json::array();
  int exceptional_ = 0;
};

// A built surface with the (-1)-class that plays the role of C0.
struct Configuration {
  BlowupSurface S;
  int designated = -1;
};

// iterated blowups: each step blows up a point on the latest exceptional
// curve only; returns the ids of the curves that became (-2) and the
// final (-1) curve
inline std::pair<std::vector<int>, int> iterate_arm(BlowupSurface& S, int first, int m)
{
  std::vector<int> arm;
  int last = first;
  for (int i = 0; i < m; ++i) {
    arm.push_back(last);
    last = S.blowup({last});
  }
  return {arm, last};
}

// n + 1 blowups starting from a point of the plane: a chain of n (-2)
// curves with a (-1) curve on the last one
inline Configuration construct_chain(int n)
{
  if (n < 1)
    throw std::invalid_argument("chain length must be positive");
  Configuration c{BlowupSurface::plane(), -1};
  int e = c.S.blowup({});
  c.designated = iterate_arm(c.S, e, n).second;
  return c;
}

// Three points on a line C (C^2 = 1), then m_i iterated blowups on each
// exceptional curve. The designated (-1)-class is the end of arm `arm`
// (1-based).
inline Configuration construct_three_arm(int m1, int m2, int m3, int arm)
{
  if (m1 < 0 || m2 < 0 || m3 < 0 || arm < 1 || arm > 3)
    throw std::invalid_argument("three-arm construction needs m_i >= 0 and arm in 1..3");
  Configuration c{BlowupSurface::plane(), -1};
  int C = c.S.find("C");
  int m[3] = {m1, m2, m3};
  int first[3];
  for (int i = 0; i < 3; ++i)
    first[i] = c.S.blowup({C});
  for (int i = 0; i < 3; ++i) {
    int end = iterate_arm(c.S, first[i], m[i]).second;
    if (i + 1 == arm)
      c.designated = end;
  }
  return c;
}

// D with D^2 = 0: blow up a point on D, then the intersection point of the
// two (-1) curves, then n - 2 iterated blowups on the newest curve
inline Configuration construct_ruling(int n)
{
  if (n < 4)
    throw std::invalid_argument("the ruling recipe needs n >= 4");
  Configuration c{BlowupSurface::quadric(), -1};
  int D = c.S.find("D");
  int e1 = c.S.blowup({D});
  int e2 = c.S.blowup({D, e1});
  c.designated = iterate_arm(c.S, e2, n - 2).second;
  return c;
}

// Appendix table: (m1, m2, m3) and the arm carrying C0
struct TableRow {
  int m1, m2, m3, arm;
};

inline TableRow table_row(const DynkinSpec& spec)
{
  spec.validate();
  int n = spec.rank, k = spec.node;
  switch (spec.family) {
  case 'A':
    return {k - 1, 0, n - k, 2};
  case 'D':
    if (k == 1)
      return {n - 3, 1, 1, 1};
    if (k == n)
      return {n - 3, 1, 1, 3};
    if (k == n - 1)
      return {n - 3, 1, 1, 2};
    break;
  case 'E':
    if (n == 6)
      return {2, 1, 2, k == 1 ? 1 : 3};
    if (n == 7)
      return {3, 1, 2, 1};
    break;
  }
  throw SpecError("no table row for " + spec.name() + " node " + std::to_string(k));
}

inline Configuration construct_from_table(const DynkinSpec& spec)
{
  auto r = table_row(spec);
  return construct_three_arm(r.m1, r.m2, r.m3, r.arm);
}

// |I| for the minuscule (or E8 adjoint) curve set, from the classical
// dimension formulas
inline long expected_curve_count(const DynkinSpec& spec)
{
  int n = spec.rank, k = spec.node;
  auto binom = [](int a, int b) {
    long r = 1;
    for (int i = 1; i <= b; ++i)
      r = r * (a - b + i) / i;
    return r;
  };
  switch (spec.family) {
  case 'A':
    return binom(n + 1, k);
  case 'D':
    return k == 1 ? 2 * n : 1L << (n - 1);
  default:
    return n == 6 ? 27 : n == 7 ? 56 : 240;
  }
}

// (i) the (-2)-curves form the Dynkin diagram of spec, (ii) the designated
// (-1)-curve meets exactly one of them, matched to the requested node, and
// (iii) the curve enumeration inside the resulting lattice finds the
// expected number of (-1)-classes, each of which is a (-1)-class with
// K-degree -1 in the blown-up surface.
inline Report verify_configuration(const Configuration& c, const DynkinSpec& spec)
{
  spec.validate();
  const auto& S = c.S;
  Report rep("configuration");
  int n = spec.rank;
  std::vector<int> nodes;
  for (int i = 0; i < S.size(); ++i)
    if (S.self(i) == -2) {
      nodes.push_back(i);
      if (S.k_degree(i) != 0)
        rep.fail({{"curve", S.curve(i).name}, {"reason", "(-2)-curve with nonzero K-degree"}});
    }
  rep.data["minus_two"] = nodes.size();
  if (c.designated < 0 || S.self(c.designated) != -1 || S.k_degree(c.designated) != -1) {
    rep.fail({{"reason", "designated curve is not a (-1)-curve"}});
    return rep;
  }
  if (static_cast<int>(nodes.size()) != n) {
    rep.fail({{"reason", "number of (-2)-curves differs from the rank"}, {"found", nodes.size()}});
    return rep;
  }
  std::vector<int> touching;
  for (int v : nodes) {
    long p = S.pair(c.designated, v);
    if (p != 0 && p != 1)
      rep.fail({{"curve", S.curve(v).name}, {"reason", "designated curve meets a node with multiplicity"}});
    if (p == 1)
      touching.push_back(v);
  }
  if (touching.size() != 1) {
    rep.fail({{"reason", "designated curve must meet exactly one (-2)-curve"}, {"count", touching.size()}});
    return rep;
  }

  // isomorphism C_i -> nodes by backtracking, with C_node -> touching[0]
  auto target = build_lattice(spec);
  std::vector<int> image(n + 1, -1);
  std::vector<bool> used(nodes.size(), false);
  std::function<bool(int)> rec = [&](int i) {
    if (i > n)
      return true;
    for (std::size_t a = 0; a < nodes.size(); ++a) {
      if (used[a])
        continue;
      int v = nodes[a];
      if ((i == spec.node) != (v == touching[0]))
        continue;
      bool ok = true;
      for (int j = 1; j < i && ok; ++j)
        ok = S.pair(v, image[j]) == target.gram(i, j);
      if (!ok)
        continue;
      used[a] = true;
      image[i] = v;
      if (rec(i + 1))
        return true;
      used[a] = false;
      image[i] = -1;
    }
    return false;
  };
  if (!rec(1)) {
    rep.fail({{"reason", "(-2)-curves do not form the Dynkin diagram with the designated node"}});
    return rep;
  }
  image[0] = c.designated;
  json ident = json::object();
  ident["C0"] = S.curve(c.designated).name;
  for (int i = 1; i <= n; ++i)
    ident["C" + std::to_string(i)] = S.curve(image[i]).name;
  rep.data["identification"] = ident;

  std::vector<std::vector<int>> gram(n + 1, std::vector<int>(n + 1));
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      gram[i][j] = static_cast<int>(S.pair(image[i], image[j]));
  if (gram != target.gram())
    rep.fail({{"reason", "gram matrix differs from the resolution lattice"}});
  IntersectionLattice L(spec, gram);
  auto I = enumerate_curves(L);
  long expect = expected_curve_count(spec);
  rep.data["curves_found"] = I.size();
  rep.data["curves_expected"] = expect;
  if (I.size() != expect)
    rep.fail({{"reason", "curve count mismatch"}, {"found", I.size()}, {"expected", expect}});
  for (int l = 0; l < I.size(); ++l) {
    std::vector<long> cls(S.dim(), 0);
    for (int i = 0; i <= n; ++i)
      for (int d = 0; d < S.dim(); ++d)
        cls[d] += static_cast<long>(I.coeffs(l)[i]) * S.curve(image[i]).cls[d];
    if (S.dot(cls, cls) != -1 || S.dot(S.canonical(), cls) != -1)
      rep.fail({{"curve", l + 1}, {"reason", "not a (-1)-class of K-degree -1 on the surface"}});
  }
  return rep;
}

// replay a JSON script {start, steps: [{on: [names], new: name}],
// designated}
inline Configuration run_script(const json& script)
{
  Configuration c{BlowupSurface::start(script.at("start").get<std::string>()), -1};
  for (const auto& step : script.at("steps")) {
    std::vector<int> on;
    for (const auto& name : step.at("on")) {
      int i = c.S.find(name.get<std::string>());
      if (i < 0)
        throw std::invalid_argument("script refers to unknown curve " + name.get<std::string>());
      on.push_back(i);
    }
    c.S.blowup(on, step.value("new", std::string{}));
  }
  if (script.contains("designated")) {
    c.designated = c.S.find(script.at("designated").get<std::string>());
    if (c.designated < 0)
      throw std::invalid_argument("designated curve not found");
  }
  return c;
}

inline json configuration_script(const Configuration& c)
{
  json j = c.S.script();
  j["designated"] = c.S.curve(c.designated).name;
  return j;
}

} // namespace ade
