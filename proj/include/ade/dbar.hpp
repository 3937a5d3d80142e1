#pragma once

#include "forms.hpp"
#include "parallel.hpp"

#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ade {

// phi_{a1} ^ ... ^ phi_{ad}: positive-root indices in ascending order
using Monomial = std::vector<int>;

// Sort m in place and return the sign of the sorting permutation, or 0
// when a symbol repeats (phi ^ phi = 0).
inline int canonicalize(Monomial& m)
{
  int sign = 1;
  for (std::size_t i = 1; i < m.size(); ++i)
    for (std::size_t j = i; j > 0 && m[j - 1] >= m[j]; --j) {
      if (m[j - 1] == m[j])
        return 0;
      std::swap(m[j - 1], m[j]);
      sign = -sign;
    }
  return sign;
}

// Sparse integer matrix; entry (row, col).
struct IntMatrix {
  std::map<std::pair<int, int>, long> e;

  bool is_zero() const { return e.empty(); }

  IntMatrix& operator+=(const IntMatrix& o)
  {
    for (const auto& [k, v] : o.e) {
      auto& d = e[k];
      d += v;
      if (d == 0)
        e.erase(k);
    }
    return *this;
  }

  IntMatrix operator*(long s) const
  {
    IntMatrix out;
    if (s != 0)
      for (const auto& [k, v] : e)
        out.e[k] = v * s;
    return out;
  }

  IntMatrix operator*(const IntMatrix& o) const
  {
    std::map<int, std::vector<std::pair<int, long>>> rows;
    for (const auto& [k, v] : o.e)
      rows[k.first].emplace_back(k.second, v);
    IntMatrix out;
    for (const auto& [k, v] : e) {
      auto it = rows.find(k.second);
      if (it == rows.end())
        continue;
      for (auto [c, w] : it->second) {
        auto& d = out.e[{k.first, c}];
        d += v * w;
        if (d == 0)
          out.e.erase({k.first, c});
      }
    }
    return out;
  }

  long norm() const
  {
    long s = 0;
    for (const auto& [k, v] : e)
      s += std::labs(v);
    return s;
  }

  bool operator==(const IntMatrix& o) const { return e == o.e; }
};

inline bool coef_zero(long v) { return v == 0; }
inline bool coef_zero(const IntMatrix& m) { return m.is_zero(); }
inline long coef_norm(long v) { return std::labs(v); }
inline long coef_norm(const IntMatrix& m) { return m.norm(); }

// Sum of monomials with coefficients in C (long or IntMatrix), kept in
// canonical order with zero terms removed.
template <class C>
class FormalPolyForm {
public:
  const std::map<Monomial, C>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }

  void add(Monomial m, const C& c)
  {
    int s = canonicalize(m);
    if (s == 0 || coef_zero(c))
      return;
    auto it = t_.find(m);
    if (it == t_.end()) {
      t_.emplace(std::move(m), c * s);
      return;
    }
    it->second += c * s;
    if (coef_zero(it->second))
      t_.erase(it);
  }

  FormalPolyForm& operator+=(const FormalPolyForm& o)
  {
    for (const auto& [m, c] : o.t_)
      add(m, c);
    return *this;
  }

  json to_json(const RootSystem& R) const
  {
    json list = json::array();
    for (const auto& [m, c] : t_) {
      json roots = json::array();
      for (int a : m)
        roots.push_back(R.root(a).to_json());
      list.push_back({{"phi", roots}, {"norm", coef_norm(c)}});
    }
    return list;
  }

private:
  std::map<Monomial, C> t_;
};

// (sum a_m phi_m) ^ (sum b_n phi_n) with coefficient product a_m * b_n
template <class C>
FormalPolyForm<C> wedge(const FormalPolyForm<C>& a, const FormalPolyForm<C>& b)
{
  FormalPolyForm<C> out;
  for (const auto& [m, c] : a.terms())
    for (const auto& [n, d] : b.terms()) {
      Monomial mn = m;
      mn.insert(mn.end(), n.begin(), n.end());
      out.add(mn, c * d);
    }
  return out;
}

// dbar phi_alpha = -sum over unordered {beta, gamma} with beta + gamma =
// alpha of n_{beta,gamma} phi_beta ^ phi_gamma
inline FormalPolyForm<long> d_generator(int alpha, const StructureConstants& SC)
{
  const auto& R = SC.roots();
  if (!R.positive(alpha))
    throw std::invalid_argument("d_generator takes a positive root");
  FormalPolyForm<long> out;
  for (int b = 0; b < R.positive_count(); ++b) {
    int g = R.sum(R.negate(b), alpha);
    if (g < 0 || !R.positive(g) || g <= b)
      continue;
    out.add({b, g}, -static_cast<long>(SC(b, g)));
  }
  return out;
}

// extension of d_generator as an antiderivation on scalar forms
inline FormalPolyForm<long> d_form(const FormalPolyForm<long>& f, const StructureConstants& SC)
{
  FormalPolyForm<long> out;
  for (const auto& [m, c] : f.terms())
    for (std::size_t k = 0; k < m.size(); ++k) {
      long sign = (k % 2 == 0) ? c : -c;
      auto dk = d_generator(m[k], SC);
      for (const auto& [pair, v] : dk.terms()) {
        Monomial mm(m.begin(), m.begin() + k);
        mm.insert(mm.end(), pair.begin(), pair.end());
        mm.insert(mm.end(), m.begin() + k + 1, m.end());
        out.add(mm, v * sign);
      }
    }
  return out;
}

struct EtaEntry {
  int root = -1;
  int sign = 0;
};

// eta_{i,j} = sign * phi_root on the module basis; only j > i occurs.
struct EtaMatrix {
  int size = 0;
  std::map<std::pair<int, int>, EtaEntry> entries;

  const EtaEntry* at(int i, int j) const
  {
    auto it = entries.find({i, j});
    return it == entries.end() ? nullptr : &it->second;
  }

  json to_json(const RootSystem& R) const
  {
    json list = json::array();
    for (const auto& [ij, e] : entries)
      list.push_back({{"i", ij.first + 1}, {"j", ij.second + 1}, {"root", R.root(e.root).to_json()}, {"sign", e.sign}});
    return {{"size", size}, {"entries", list}};
  }
};

// eta_{i,j} = n_{alpha, w_j} phi_alpha whenever x_alpha v_j = +-v_i for a
// positive root alpha
inline EtaMatrix eta_from_rep(const RepAction& A)
{
  const auto& R = A.roots();
  EtaMatrix eta;
  eta.size = A.dim();
  for (int a = 0; a < R.positive_count(); ++a)
    for (int j = 0; j < A.dim(); ++j) {
      int i = A.x(a).to[j];
      if (i < 0)
        continue;
      if (i >= j)
        throw std::logic_error("module ordering violated: l_" + std::to_string(i + 1) + " - l_" + std::to_string(j + 1) +
                               " is a positive root");
      eta.entries[{i, j}] = {a, A.x(a).sign[j]};
    }
  return eta;
}

inline Report upper_triangular(const EtaMatrix& eta)
{
  Report rep("upper_triangular");
  for (const auto& [ij, e] : eta.entries)
    if (ij.second <= ij.first)
      rep.fail({{"i", ij.first + 1}, {"j", ij.second + 1}});
  rep.data["entries"] = eta.entries.size();
  return rep;
}

namespace detail {

// ad(x_alpha) on the basis h_1..h_n, x_r (index n + r)
inline IntMatrix adjoint_matrix(const StructureConstants& SC, int alpha)
{
  const auto& R = SC.roots();
  int n = R.rank();
  auto xa = LieElement::root(n, alpha);
  IntMatrix M;
  for (int b = 0; b < n + R.size(); ++b) {
    auto v = b < n ? LieElement::cartan(n, b + 1) : LieElement::root(n, b - n);
    auto w = bracket(SC, xa, v);
    for (int i = 0; i < n; ++i)
      if (w.h[i] != 0)
        M.e[{i, b}] = to_int(Integer(w.h[i]));
    for (const auto& [r, q] : w.x)
      M.e[{n + r, b}] = to_int(Integer(q));
  }
  return M;
}

inline Report nilpotence(const std::string& target, const StructureConstants& SC, const std::vector<IntMatrix>& M,
                         int dim, int workers)
{
  const auto& R = SC.roots();
  int P = R.positive_count();
  FormalPolyForm<IntMatrix> total;
  // dbar A = sum_alpha d(phi_alpha) M_alpha
  for (int a = 0; a < P; ++a) {
    auto da = d_generator(a, SC);
    for (const auto& [m, c] : da.terms())
      total.add(m, M[a] * c);
  }
  // A ^ A, one chunk of first factors at a time
  auto parts = parallel_chunks(static_cast<std::size_t>(P), workers, 4, [&](std::size_t lo, std::size_t hi) {
    FormalPolyForm<IntMatrix> acc;
    for (std::size_t a = lo; a < hi; ++a)
      for (int b = 0; b < P; ++b)
        if (static_cast<int>(a) != b && !M[a].is_zero() && !M[b].is_zero())
          acc.add({static_cast<int>(a), b}, M[a] * M[b]);
    return acc;
  });
  for (const auto& p : parts)
    total += p;

  Report rep("nilpotence_" + target);
  rep.data["target"] = target;
  rep.data["dim"] = dim;
  rep.data["generators"] = P;
  rep.data["residue_monomials"] = total.terms().size();
  for (const auto& [m, c] : total.terms())
    rep.fail({{"phi", {R.root(m[0]).to_json(), R.root(m[1]).to_json()}}, {"norm", c.norm()}});
  return rep;
}

} // namespace detail

// (dbar + A)^2 = dbar A + A ^ A with A = sum phi_alpha ad(x_alpha)
inline Report nilpotence_adjoint(const StructureConstants& SC, int workers = 0)
{
  const auto& R = SC.roots();
  std::vector<IntMatrix> M;
  for (int a = 0; a < R.positive_count(); ++a)
    M.push_back(detail::adjoint_matrix(SC, a));
  return detail::nilpotence("adjoint", SC, M, R.rank() + R.size(), workers);
}

// same with A = (eta_{i,j}) from the representation
inline Report nilpotence_rep(const EtaMatrix& eta, const StructureConstants& SC, int workers = 0)
{
  std::vector<IntMatrix> M(SC.roots().positive_count());
  for (const auto& [ij, e] : eta.entries)
    M[e.root].e[ij] = e.sign;
  return detail::nilpotence("rep", SC, M, eta.size, workers);
}

// dbar_eta f = 0: for every positive root alpha and every tuple t whose
// weight is target - alpha, sum over slots of f(..., eta v, ...) has zero
// phi_alpha coefficient.
inline Report form_compatibility_check(const CurveSet& I, const EtaMatrix& eta, const FormTensor& f)
{
  std::map<int, std::vector<std::pair<int, int>>> by_root; // root -> (j, i, sign) as (j, i)
  std::map<std::pair<int, int>, int> sign;
  for (const auto& [ij, e] : eta.entries) {
    by_root[e.root].emplace_back(ij.second, ij.first);
    sign[{e.root, ij.second}] = e.sign;
  }
  Report rep("form_compatibility");
  std::size_t checked = 0;
  for (const auto& [root, moves] : by_root) {
    std::map<int, int> to;
    for (auto [j, i] : moves)
      to[j] = i;
    DivisorClass alpha = I.curve(moves.front().second) - I.curve(moves.front().first);
    for (const auto& t : tuples_summing_to(I, f.degree, f.target - alpha)) {
      ++checked;
      Rational sum = 0;
      for (std::size_t s = 0; s < t.size(); ++s) {
        auto it = to.find(t[s]);
        if (it != to.end())
          sum += sign.at({root, t[s]}) * f.at(detail::replaced(t, s, it->second));
      }
      if (sum != 0) {
        std::vector<int> one;
        for (int i : t)
          one.push_back(i + 1);
        rep.fail({{"root", alpha.to_json()}, {"tuple", one}, {"value", to_json_value(sum)}});
      }
    }
  }
  rep.data["tuples_checked"] = checked;
  return rep;
}

// per positive root: number of eta entries with sign +1 and -1
inline std::map<int, std::pair<int, int>> root_sign_pattern(const EtaMatrix& eta)
{
  std::map<int, std::pair<int, int>> out;
  for (const auto& [ij, e] : eta.entries)
    (e.sign > 0 ? out[e.root].first : out[e.root].second)++;
  return out;
}

// every positive root carries the same number of entries, half of each
// sign; expected entries per root given by the caller (6 for E6, 12 for E7)
inline Report balanced_pattern_check(const EtaMatrix& eta, const RootSystem& R, int per_root)
{
  Report rep("balanced_pattern");
  auto pat = root_sign_pattern(eta);
  for (int a = 0; a < R.positive_count(); ++a) {
    auto it = pat.find(a);
    auto [p, m] = it == pat.end() ? std::pair<int, int>{0, 0} : it->second;
    if (p + m != per_root || p != m)
      rep.fail({{"root", R.root(a).to_json()}, {"plus", p}, {"minus", m}});
  }
  rep.data["per_root"] = per_root;
  rep.data["roots"] = R.positive_count();
  return rep;
}

// Basis signs s_l after which every positive root's eta entries are
// balanced (as many +1 as -1). Depth-first over curves in module order
// with s_0 = +1; a root is tested as soon as all its curves have signs.
inline std::optional<std::vector<int>> balanced_gauge(const RepAction& A)
{
  const auto& R = A.roots();
  int N = A.dim();
  int P = R.positive_count();
  struct Move {
    int from, to, sign;
  };
  std::vector<std::vector<Move>> moves(P);
  std::vector<std::vector<int>> ready(N);
  for (int a = 0; a < P; ++a) {
    int last = 0;
    for (int l = 0; l < N; ++l)
      if (int t = A.x(a).to[l]; t >= 0) {
        moves[a].push_back({l, t, A.x(a).sign[l]});
        last = std::max({last, l, t});
      }
    if (!moves[a].empty())
      ready[last].push_back(a);
  }
  std::vector<int> s(N, 0);
  std::function<bool(int)> rec = [&](int k) {
    if (k == N)
      return true;
    for (int v : {1, -1}) {
      if (k == 0 && v < 0)
        break;
      s[k] = v;
      bool ok = true;
      for (int a : ready[k]) {
        int sum = 0;
        for (const auto& m : moves[a])
          sum += m.sign * s[m.from] * s[m.to];
        if (sum != 0) {
          ok = false;
          break;
        }
      }
      if (ok && rec(k + 1))
        return true;
    }
    s[k] = 0;
    return false;
  };
  if (!rec(0))
    return std::nullopt;
  return s;
}

// D_n standard: eta_{i,j} = -eta_{2n+1-j, 2n+1-i} (1-based) for all j > i,
// and eta_{n,n+1} = 0
inline Report partner_check(const CurveSet& I, const EtaMatrix& eta)
{
  if (I.spec().family != 'D' || I.spec().node != 1)
    throw SpecError("the partner relation lives on the D_n standard curve set");
  int n = I.rank();
  int N = 2 * n;
  Report rep("partner");
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j) {
      const auto* a = eta.at(i, j);
      const auto* b = eta.at(N - 1 - j, N - 1 - i);
      bool ok = (!a && !b) || (a && b && a->root == b->root && a->sign == -b->sign);
      if (!ok)
        rep.fail({{"i", i + 1}, {"j", j + 1}});
    }
  bool middle = eta.at(n - 1, n) == nullptr;
  if (!middle)
    rep.fail({{"i", n}, {"j", n + 1}, {"reason", "eta_{n,n+1} is nonzero"}});
  rep.data["middle_vanishes"] = middle;
  return rep;
}

// every entry sits on an orthogonal pair: l_i . l_j = 0
inline Report orthogonal_entries(const CurveSet& I, const EtaMatrix& eta)
{
  Report rep("orthogonal_entries");
  for (const auto& [ij, e] : eta.entries)
    if (I.pair(ij.first, ij.second) != 0)
      rep.fail({{"i", ij.first + 1}, {"j", ij.second + 1}, {"pairing", I.pair(ij.first, ij.second)}});
  return rep;
}

// Curves paired across C_k: (u_p, w_p) with l_{u_p} = l_{w_p} + C_k,
// sorted by u. Each diagonal entry eta_{u_p, w_p} must carry C_k, and the
// block eta_{u_p, w_q} must vanish below the diagonal (q < p).
inline Report block_shape_check(const CurveSet& I, const EtaMatrix& eta, int k)
{
  const auto& L = I.lattice();
  if (k < 1 || k > I.rank())
    throw SpecError("no component C" + std::to_string(k));
  std::vector<std::pair<int, int>> pairs;
  for (int w = 0; w < I.size(); ++w) {
    if (I.pair_basis(w, k) != 1)
      continue;
    int u = I.find(I.curve(w) + DivisorClass::basis(L.rank(), k));
    if (u >= 0)
      pairs.emplace_back(u, w);
  }
  std::sort(pairs.begin(), pairs.end());
  Report rep("block_shape");
  auto ck = DivisorClass::basis(L.rank(), k);
  std::size_t ck_entries = 0;
  for (const auto& [ij, e] : eta.entries)
    if (I.curve(ij.first) - I.curve(ij.second) == ck)
      ++ck_entries;
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    auto [u, w] = pairs[p];
    const auto* e = eta.at(u, w);
    if (!e)
      rep.fail({{"i", u + 1}, {"j", w + 1}, {"reason", "diagonal entry missing"}});
    for (std::size_t q = 0; q < p; ++q)
      if (eta.at(u, pairs[q].second))
        rep.fail({{"i", u + 1}, {"j", pairs[q].second + 1}, {"reason", "below-diagonal entry"}});
  }
  json pj = json::array();
  for (auto [u, w] : pairs)
    pj.push_back({u + 1, w + 1});
  rep.data["component"] = k;
  rep.data["pairs"] = pj;
  rep.data["ck_entries"] = ck_entries;
  return rep;
}

} // namespace ade
