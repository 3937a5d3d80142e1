#pragma once

#include "linalg.hpp"
#include "minrep.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace ade {

// Symmetric r-linear form on V0, stored on sorted index multisets.
struct FormTensor {
  int degree = 0;
  DivisorClass target;
  std::map<std::vector<int>, Rational> coeff;

  Rational at(std::vector<int> t) const
  {
    std::sort(t.begin(), t.end());
    auto it = coeff.find(t);
    return it == coeff.end() ? Rational(0) : it->second;
  }

  std::vector<std::vector<int>> support() const
  {
    std::vector<std::vector<int>> s;
    for (const auto& [t, c] : coeff)
      if (c != 0)
        s.push_back(t);
    return s;
  }

  FormTensor flipped(std::vector<int> t) const
  {
    std::sort(t.begin(), t.end());
    FormTensor f = *this;
    f.coeff.at(t) = -f.coeff.at(t);
    return f;
  }

  // value of the form in the basis s_l v_l
  FormTensor regauged(const std::vector<int>& s) const
  {
    FormTensor f = *this;
    for (auto& [t, c] : f.coeff) {
      int sign = 1;
      for (int i : t)
        sign *= s[i];
      c *= sign;
    }
    return f;
  }

  json to_json() const
  {
    json j;
    j["degree"] = degree;
    j["target"] = target.to_json();
    json entries = json::array();
    for (const auto& [t, c] : coeff) {
      if (c == 0)
        continue;
      std::vector<int> one;
      for (int i : t)
        one.push_back(i + 1);
      entries.push_back({{"tuple", one}, {"sign", to_json_value(c)}});
    }
    j["entries"] = entries;
    return j;
  }
};

// q(v_i, v_j) = l_i . l_j on the partner pairs l_i + l_j = F of D_n
inline FormTensor quadratic_q(const CurveSet& I)
{
  if (I.spec().family != 'D' || I.spec().node != 1)
    throw SpecError("the quadric q lives on the D_n standard curve set");
  FormTensor f;
  f.degree = 2;
  f.target = I.special().at("F");
  for (const auto& t : tuples_summing_to(I, 2, f.target))
    f.coeff[t] = Rational(I.pair(t[0], t[1]));
  return f;
}

namespace detail {

inline std::vector<int> replaced(std::vector<int> t, std::size_t slot, int a)
{
  t[slot] = a;
  std::sort(t.begin(), t.end());
  return t;
}

inline DivisorClass minus_root(const DivisorClass& target, const RootSystem& R, int r)
{
  return target - R.root(r);
}

} // namespace detail

// Solve sum_slots f(..., x v, ...) = 0 for every root vector x and every
// tuple, with unknowns on the multisets summing to the target; the
// solution space must be one-dimensional. The lexicographically least
// support tuple is normalized to +1.
inline FormTensor solve_invariant_form(const RepAction& A, int r, const DivisorClass& target)
{
  const auto& I = A.curves();
  const auto& R = A.roots();
  auto unknowns = tuples_summing_to(I, r, target);
  if (unknowns.empty())
    throw std::logic_error("no tuples sum to the target class");
  std::map<std::vector<int>, int> col;
  for (std::size_t i = 0; i < unknowns.size(); ++i)
    col[unknowns[i]] = static_cast<int>(i);

  SparseEchelon E;
  // h-invariance: the target has to be orthogonal to every C_i
  for (int i = 1; i <= I.rank(); ++i)
    if (I.lattice().pair(target, DivisorClass::basis(I.rank(), i)) != 0)
      for (std::size_t u = 0; u < unknowns.size(); ++u)
        E.insert({{static_cast<int>(u), Rational(1)}});

  for (int x = 0; x < R.size(); ++x) {
    for (const auto& t : tuples_summing_to(I, r, detail::minus_root(target, R, x))) {
      SparseEchelon::Row row;
      for (std::size_t s = 0; s < t.size(); ++s) {
        int a = A.x(x).to[t[s]];
        if (a < 0)
          continue;
        auto u = detail::replaced(t, s, a);
        row[col.at(u)] += A.x(x).sign[t[s]];
      }
      E.insert(row);
    }
  }
  std::vector<int> cols(unknowns.size());
  for (std::size_t i = 0; i < cols.size(); ++i)
    cols[i] = static_cast<int>(i);
  auto kernel = E.nullspace(cols);
  if (kernel.size() != 1)
    throw std::logic_error("invariant form solution space has dimension " + std::to_string(kernel.size()) +
                           ", expected 1");
  auto& v = kernel.front();
  Rational lead = 0;
  for (std::size_t i = 0; i < unknowns.size() && lead == 0; ++i)
    if (auto it = v.find(static_cast<int>(i)); it != v.end())
      lead = it->second;
  FormTensor f;
  f.degree = r;
  f.target = target;
  for (std::size_t i = 0; i < unknowns.size(); ++i) {
    auto it = v.find(static_cast<int>(i));
    f.coeff[unknowns[i]] = it == v.end() ? Rational(0) : it->second / lead;
  }
  return f;
}

// Exhaustive invariance check for every root vector and every tuple
// whose weight could reach the support, plus the sum condition on the
// support.
inline Report verify_aut(const RepAction& A, const FormTensor& f)
{
  const auto& I = A.curves();
  const auto& R = A.roots();
  Report rep("aut");
  std::size_t checked = 0;
  for (int x = 0; x < R.size(); ++x) {
    for (const auto& t : tuples_summing_to(I, f.degree, detail::minus_root(f.target, R, x))) {
      ++checked;
      Rational sum = 0;
      for (std::size_t s = 0; s < t.size(); ++s) {
        int a = A.x(x).to[t[s]];
        if (a >= 0)
          sum += A.x(x).sign[t[s]] * f.at(detail::replaced(t, s, a));
      }
      if (sum != 0) {
        std::vector<int> one;
        for (int i : t)
          one.push_back(i + 1);
        rep.fail({{"root", R.root(x).to_json()}, {"tuple", one}, {"value", to_json_value(sum)}});
      }
    }
  }
  for (const auto& [t, c] : f.coeff) {
    DivisorClass s(I.rank());
    for (int i : t)
      s += I.curve(i);
    if (c != 0 && s != f.target) {
      std::vector<int> one;
      for (int i : t)
        one.push_back(i + 1);
      rep.fail({{"support_tuple", one}, {"coefficient", to_json_value(c)}});
    }
  }
  rep.data["degree"] = f.degree;
  rep.data["support"] = f.support().size();
  rep.data["tuples_checked"] = checked;
  return rep;
}

// Support coefficients all in {+1, -1}; the offending tuples grouped by
// coefficient otherwise.
inline Report unit_coefficients(const FormTensor& f)
{
  Report rep("unit_coefficients");
  std::map<Rational, std::size_t> hist;
  for (const auto& [t, c] : f.coeff) {
    if (c == 0)
      continue;
    ++hist[c];
    if (c != 1 && c != -1) {
      std::vector<int> one;
      for (int i : t)
        one.push_back(i + 1);
      rep.fail({{"tuple", one}, {"coefficient", to_json_value(c)}});
    }
  }
  json h = json::array();
  for (const auto& [c, k] : hist)
    h.push_back({{"coefficient", to_json_value(c)}, {"count", k}});
  rep.data["histogram"] = h;
  return rep;
}

// dim { M in End(V0) : f(Mv, v, ...) + ... + f(v, ..., Mv) = 0 }, with
// trace zero imposed when requested. Without a form (nullptr) this is
// gl(V0) or sl(V0). The system splits by the weight shift
// delta = l_a - l_b of the unknown M_{a,b}.
inline int aut_dimension(const CurveSet& I, const FormTensor* f, bool traceless)
{
  int N = I.size();
  if (!f)
    return N * N - (traceless ? 1 : 0);
  std::map<std::vector<int>, std::vector<std::pair<int, int>>> blocks;
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) {
      auto d = I.coeffs(a);
      for (std::size_t c = 0; c < d.size(); ++c)
        d[c] -= I.coeffs(b)[c];
      blocks[d].emplace_back(a, b);
    }
  int dim = 0;
  for (const auto& [delta, unknowns] : blocks) {
    std::map<std::pair<int, int>, int> col;
    // by source index b: list of (a, column)
    std::unordered_map<int, std::vector<std::pair<int, int>>> from;
    for (std::size_t u = 0; u < unknowns.size(); ++u) {
      col[unknowns[u]] = static_cast<int>(u);
      from[unknowns[u].second].emplace_back(unknowns[u].first, static_cast<int>(u));
    }
    SparseEchelon E;
    bool zero_shift = std::all_of(delta.begin(), delta.end(), [](int v) { return v == 0; });
    if (zero_shift && traceless) {
      SparseEchelon::Row tr;
      for (int a = 0; a < N; ++a)
        tr[col.at({a, a})] = 1;
      E.insert(tr);
    }
    DivisorClass shifted = f->target - DivisorClass::from_ints(delta);
    for (const auto& t : tuples_summing_to(I, f->degree, shifted)) {
      SparseEchelon::Row row;
      for (std::size_t s = 0; s < t.size(); ++s) {
        auto it = from.find(t[s]);
        if (it == from.end())
          continue;
        for (auto [a, c] : it->second) {
          Rational v = f->at(detail::replaced(t, s, a));
          if (v != 0)
            row[c] += v;
        }
      }
      E.insert(row);
    }
    dim += static_cast<int>(unknowns.size() - E.rank());
  }
  return dim;
}

// Signs s_l making every support coefficient of f equal to +1 in the
// basis s_l v_l, if such a choice exists (a GF(2) system with one
// equation per support tuple).
inline std::optional<std::vector<int>> positive_gauge(int N, const FormTensor& f)
{
  Gf2System sys(N);
  for (const auto& [t, c] : f.coeff) {
    if (c == 0)
      continue;
    std::map<int, int> mult;
    for (int i : t)
      ++mult[i];
    std::vector<int> vars;
    for (auto [i, m] : mult)
      if (m % 2 == 1)
        vars.push_back(i);
    sys.add(vars, c < 0);
  }
  auto sol = sys.solve();
  if (!sol)
    return std::nullopt;
  std::vector<int> s(N);
  for (int i = 0; i < N; ++i)
    s[i] = (*sol)[i] ? -1 : 1;
  return s;
}

} // namespace ade
