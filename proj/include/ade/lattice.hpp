#pragma once

#include "numeric.hpp"

#include <algorithm>
#include <cctype>
#include <compare>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ade {

class SpecError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Dynkin type plus the node C_k met by the strict transform C0.
struct DynkinSpec {
  char family = 'A';
  int rank = 1;
  int node = 1;

  std::string name() const { return std::string(1, family) + std::to_string(rank); }

  // E8 is only available through its adjoint (quasi-minuscule) curve set
  bool adjoint() const { return family == 'E' && rank == 8; }

  friend bool operator==(const DynkinSpec&, const DynkinSpec&) = default;

  // reason string, empty when the Dynkin type and node are admissible
  std::string problem() const
  {
    switch (family) {
    case 'A':
      if (rank < 1)
        return "A_n needs n >= 1";
      if (node < 1 || node > rank)
        return "A_n node must lie in 1..n";
      return {};
    case 'D':
      if (rank < 4)
        return "D_n needs n >= 4";
      if (node != 1 && node != rank - 1 && node != rank)
        return "D_n minuscule nodes are 1, n-1, n";
      return {};
    case 'E':
      if (rank < 6 || rank > 8)
        return "E_n exists only for n = 6, 7, 8";
      if (rank == 6 && node != 1 && node != 5)
        return "E6 minuscule nodes are 1 and 5";
      if (rank >= 7 && node != 1)
        return name() + " admits node 1 only";
      return {};
    default:
      return std::string("unknown family '") + family + "'";
    }
  }

  void validate() const
  {
    if (auto p = problem(); !p.empty())
      throw SpecError(p);
  }

  // "E6", "d5", "A3" ...; node defaults to 1
  static DynkinSpec parse(const std::string& type, int node = 1)
  {
    if (type.size() < 2)
      throw SpecError("bad type '" + type + "'");
    DynkinSpec s;
    s.family = static_cast<char>(std::toupper(static_cast<unsigned char>(type[0])));
    try {
      std::size_t used = 0;
      s.rank = std::stoi(type.substr(1), &used);
      if (used != type.size() - 1)
        throw SpecError("bad type '" + type + "'");
    } catch (const std::logic_error&) {
      throw SpecError("bad type '" + type + "'");
    }
    s.node = node;
    s.validate();
    return s;
  }
};

// Integer combination c0*C0 + sum a_i C_i; coefficient i is stored at
// position i (position 0 is C0).
class DivisorClass {
public:
  DivisorClass() = default;
  explicit DivisorClass(int rank) : c_(rank + 1) {}
  explicit DivisorClass(std::vector<Integer> coeffs) : c_(std::move(coeffs)) {}

  static DivisorClass from_ints(const std::vector<int>& coeffs)
  {
    DivisorClass d;
    d.c_.reserve(coeffs.size());
    for (int v : coeffs)
      d.c_.emplace_back(v);
    return d;
  }

  static DivisorClass basis(int rank, int i)
  {
    DivisorClass d(rank);
    d.c_.at(i) = 1;
    return d;
  }

  int rank() const { return static_cast<int>(c_.size()) - 1; }
  const Integer& c0() const { return c_[0]; }
  const Integer& operator[](int i) const { return c_.at(i); }
  Integer& operator[](int i) { return c_.at(i); }
  const std::vector<Integer>& coeffs() const { return c_; }

  Integer height() const
  {
    Integer h = 0;
    for (std::size_t i = 1; i < c_.size(); ++i)
      h += c_[i];
    return h;
  }

  bool is_zero() const
  {
    return std::all_of(c_.begin(), c_.end(), [](const Integer& z) { return z == 0; });
  }

  std::vector<int> to_ints() const
  {
    std::vector<int> v;
    v.reserve(c_.size());
    for (const auto& z : c_)
      v.push_back(to_int(z));
    return v;
  }

  DivisorClass& operator+=(const DivisorClass& o)
  {
    check(o);
    for (std::size_t i = 0; i < c_.size(); ++i)
      c_[i] += o.c_[i];
    return *this;
  }
  DivisorClass& operator-=(const DivisorClass& o)
  {
    check(o);
    for (std::size_t i = 0; i < c_.size(); ++i)
      c_[i] -= o.c_[i];
    return *this;
  }
  friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
  friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
  friend DivisorClass operator-(DivisorClass a)
  {
    for (auto& z : a.c_)
      z = -z;
    return a;
  }
  friend DivisorClass operator*(const Integer& s, DivisorClass a)
  {
    for (auto& z : a.c_)
      z *= s;
    return a;
  }

  friend bool operator==(const DivisorClass& a, const DivisorClass& b) { return a.c_ == b.c_; }
  friend bool operator<(const DivisorClass& a, const DivisorClass& b) { return a.c_ < b.c_; }

  json to_json() const
  {
    json j = json::array();
    for (const auto& z : c_)
      j.push_back(to_json_value(z));
    return j;
  }

  std::string to_string() const
  {
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0)
        continue;
      Integer v = c_[i];
      if (!s.empty())
        s += v < 0 ? " - " : " + ";
      else if (v < 0)
        s += "-";
      v = abs(v);
      if (v != 1)
        s += v.get_str();
      s += "C" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
  }

private:
  void check(const DivisorClass& o) const
  {
    if (o.c_.size() != c_.size())
      throw std::invalid_argument("divisor classes of different rank");
  }

  std::vector<Integer> c_;
};

// Geometric intersection form on (C0, C1..Cn) for a resolved ADE
// singularity together with the strict transform C0 of a (-1)-curve.
class IntersectionLattice {
public:
  IntersectionLattice() = default;

  // custom Gram matrix (used by blowup and branching); must have the
  // shape of an ADE resolution lattice but is not compared to a family
  IntersectionLattice(DynkinSpec spec, std::vector<std::vector<int>> gram)
      : spec_(spec), gram_(std::move(gram))
  {
    int n = static_cast<int>(gram_.size()) - 1;
    if (n < 1)
      throw SpecError("gram matrix too small");
    for (const auto& row : gram_)
      if (static_cast<int>(row.size()) != n + 1)
        throw SpecError("gram matrix not square");
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j)
        if (gram_[i][j] != gram_[j][i])
          throw SpecError("gram matrix not symmetric");
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        if (gram_[i][j] == 1)
          edges_.emplace_back(i, j);
  }

  const DynkinSpec& spec() const { return spec_; }
  int rank() const { return static_cast<int>(gram_.size()) - 1; }
  const std::vector<std::vector<int>>& gram() const { return gram_; }
  int gram(int i, int j) const { return gram_[i][j]; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  Integer pair(const DivisorClass& a, const DivisorClass& b) const
  {
    if (a.rank() != rank() || b.rank() != rank())
      throw std::invalid_argument("divisor class rank does not match lattice");
    Integer s = 0;
    for (int i = 0; i <= rank(); ++i) {
      if (a[i] == 0)
        continue;
      Integer row = 0;
      for (int j = 0; j <= rank(); ++j)
        if (gram_[i][j] != 0 && b[j] != 0)
          row += gram_[i][j] * b[j];
      s += a[i] * row;
    }
    return s;
  }

  // machine-integer pairing for the bounded coefficient vectors used by
  // the enumerations
  long pair(const std::vector<int>& a, const std::vector<int>& b) const
  {
    long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0)
        continue;
      long row = 0;
      for (std::size_t j = 0; j < b.size(); ++j)
        row += static_cast<long>(gram_[i][j]) * b[j];
      s += a[i] * row;
    }
    return s;
  }

  // a . C_i
  long pair_basis(const std::vector<int>& a, int i) const
  {
    long s = 0;
    for (std::size_t j = 0; j < a.size(); ++j)
      s += static_cast<long>(gram_[i][j]) * a[j];
    return s;
  }

  // Cartan pairing <a, C_i> = -(a . C_i), so that <C_i, C_i> = 2
  long cartan_pair(const std::vector<int>& a, int i) const { return -pair_basis(a, i); }
  Integer cartan_pair(const DivisorClass& a, int i) const
  {
    return -pair(a, DivisorClass::basis(rank(), i));
  }

  DivisorClass simple(int i) const { return DivisorClass::basis(rank(), i); }

  std::vector<std::vector<int>> cartan_matrix() const
  {
    int n = rank();
    std::vector<std::vector<int>> m(n, std::vector<int>(n));
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        m[i - 1][j - 1] = -gram_[i][j];
    return m;
  }

  // leading principal minors of the Gram matrix restricted to C1..Cn
  // (or of the full matrix including C0), by exact Bareiss elimination;
  // the k-th minor has sign (-1)^k for a negative definite form
  std::vector<Integer> leading_minors(bool with_c0 = false) const
  {
    int off = with_c0 ? 0 : 1;
    int n = rank() + 1 - off;
    std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        m[i][j] = gram_[i + off][j + off];
    std::vector<Integer> minors;
    Integer prev = 1;
    for (int k = 0; k < n; ++k) {
      if (m[k][k] == 0)
        throw std::runtime_error("zero pivot in Bareiss elimination");
      minors.push_back(m[k][k]);
      for (int i = k + 1; i < n; ++i)
        for (int j = k + 1; j < n; ++j)
          m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      prev = m[k][k];
    }
    return minors;
  }

  // negative definiteness of the exceptional lattice span(C1..Cn); with
  // C0 adjoined the form is definite only when the dual weight of C_k
  // has norm < 1 (A_n node 1 for instance); it fails for D_n node 1 (F.F = 0),
  // E6-E8 and middle A_n nodes
  bool negative_definite(bool with_c0 = false) const
  {
    try {
      auto minors = leading_minors(with_c0);
      for (std::size_t k = 0; k < minors.size(); ++k)
        if ((k % 2 == 0) ? minors[k] >= 0 : minors[k] <= 0)
          return false;
      return true;
    } catch (const std::runtime_error&) {
      return false;
    }
  }

  json to_json() const
  {
    json j;
    j["family"] = std::string(1, spec_.family);
    j["rank"] = spec_.rank;
    j["node"] = spec_.node;
    j["gram"] = gram_;
    return j;
  }

private:
  DynkinSpec spec_;
  std::vector<std::vector<int>> gram_;
  std::vector<std::pair<int, int>> edges_;
};

// Edges of the Dynkin diagram in the node labeling used throughout:
// A_n chain; D_n chain C1..C_{n-1} with C_n on C_{n-2};
// E_n chain C1..C_{n-1} with C_n on C_{n-3}.
inline std::vector<std::pair<int, int>> dynkin_edges(char family, int n)
{
  std::vector<std::pair<int, int>> e;
  int chain = family == 'A' ? n : n - 1;
  for (int i = 1; i < chain; ++i)
    e.emplace_back(i, i + 1);
  if (family == 'D')
    e.emplace_back(n - 2, n);
  else if (family == 'E')
    e.emplace_back(n - 3, n);
  return e;
}

inline IntersectionLattice build_lattice(const DynkinSpec& spec)
{
  spec.validate();
  int n = spec.rank;
  std::vector<std::vector<int>> g(n + 1, std::vector<int>(n + 1, 0));
  g[0][0] = -1;
  for (int i = 1; i <= n; ++i)
    g[i][i] = -2;
  for (auto [a, b] : dynkin_edges(spec.family, n))
    g[a][b] = g[b][a] = 1;
  g[0][spec.node] = g[spec.node][0] = 1;
  return IntersectionLattice(spec, std::move(g));
}

// K . D with K.C_i = 0 and K.C0 = -1
inline Integer k_degree(const DivisorClass& d) { return -d.c0(); }

inline Integer pair(const IntersectionLattice& L, const DivisorClass& a, const DivisorClass& b)
{
  return L.pair(a, b);
}

// every admissible spec at desk scale: A1-A8 (all nodes), D4-D8 (nodes
// 1, n-1, n), E6 (1, 5), E7, E8
inline std::vector<DynkinSpec> desk_specs()
{
  std::vector<DynkinSpec> out;
  for (int n = 1; n <= 8; ++n)
    for (int k = 1; k <= n; ++k)
      out.push_back({'A', n, k});
  for (int n = 4; n <= 8; ++n)
    for (int k : {1, n - 1, n})
      out.push_back({'D', n, k});
  out.push_back({'E', 6, 1});
  out.push_back({'E', 6, 5});
  out.push_back({'E', 7, 1});
  out.push_back({'E', 8, 1});
  return out;
}

} // namespace ade
