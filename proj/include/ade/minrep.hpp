#pragma once

#include "chevalley.hpp"
#include "curves.hpp"
#include "linalg.hpp"
#include "parallel.hpp"
#include "report.hpp"

#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace ade {

// Signed partial permutation of curve indices: v_j -> sign[j] v_{to[j]},
// or 0 when to[j] < 0.
struct SignedMap {
  std::vector<int> to;
  std::vector<std::int8_t> sign;

  explicit SignedMap(int n = 0) : to(n, -1), sign(n, 0) {}

  int nonzeros() const
  {
    int c = 0;
    for (int t : to)
      c += t >= 0;
    return c;
  }
};

// One term c * v_index (index < 0 means the zero vector).
struct Term {
  int index = -1;
  long coef = 0;

  bool zero() const { return index < 0 || coef == 0; }
  friend bool operator==(const Term& a, const Term& b)
  {
    if (a.zero() || b.zero())
      return a.zero() && b.zero();
    return a.index == b.index && a.coef == b.coef;
  }
};

// Action of g on V0 = span{v_l : l in I}. Basis elements of g are
// numbered h_1..h_n (0..n-1) followed by x_r for every root index r.
class RepAction {
public:
  RepAction() = default;
  RepAction(CurveSet I, StructureConstants SC, std::vector<SignedMap> x)
      : I_(std::move(I)), SC_(std::move(SC)), x_(std::move(x))
  {
    int n = I_.rank();
    h_.assign(n, std::vector<int>(I_.size()));
    for (int i = 1; i <= n; ++i)
      for (int l = 0; l < I_.size(); ++l)
        h_[i - 1][l] = static_cast<int>(I_.lattice().cartan_pair(I_.coeffs(l), i));
  }

  const CurveSet& curves() const { return I_; }
  const StructureConstants& constants() const { return SC_; }
  const RootSystem& roots() const { return SC_.roots(); }
  int dim() const { return I_.size(); }
  int rank() const { return I_.rank(); }
  int basis_size() const { return rank() + roots().size(); }

  const SignedMap& x(int root) const { return x_.at(root); }
  // eigenvalue of h_i on v_l: the Cartan pairing <l, C_i>
  int h(int i, int l) const { return h_[i - 1][l]; }

  // n_{a,w}: the sign in x_a v_l = n v_{l+a}, 0 if l + a is not a curve
  int sign(int root, int l) const { return x_[root].to[l] < 0 ? 0 : x_[root].sign[l]; }

  Term apply(int b, const Term& v) const
  {
    if (v.zero())
      return {};
    if (b < rank())
      return {v.index, v.coef * h(b + 1, v.index)};
    const auto& m = x_[b - rank()];
    int t = m.to[v.index];
    if (t < 0)
      return {};
    return {t, v.coef * m.sign[v.index]};
  }

  // replace v_l by s_l v_l (s_l = +-1)
  RepAction regauged(const std::vector<int>& s) const
  {
    RepAction out = *this;
    for (auto& m : out.x_)
      for (std::size_t j = 0; j < m.to.size(); ++j)
        if (m.to[j] >= 0)
          m.sign[j] = static_cast<std::int8_t>(m.sign[j] * s[j] * s[m.to[j]]);
    return out;
  }

  // copy with one sign negated (used to exercise the checkers)
  RepAction flipped(int root, int l) const
  {
    RepAction out = *this;
    out.x_.at(root).sign.at(l) = static_cast<std::int8_t>(-out.x_.at(root).sign.at(l));
    return out;
  }

  json sign_table() const
  {
    json list = json::array();
    const auto& R = roots();
    for (int r = 0; r < R.size(); ++r)
      for (int l = 0; l < dim(); ++l)
        if (x_[r].to[l] >= 0) {
          json e;
          e["alpha"] = R.root(r).to_json();
          e["curve"] = l + 1;
          e["sign"] = static_cast<int>(x_[r].sign[l]);
          list.push_back(e);
        }
    return list;
  }

  // sparse triplets (row, col, value) of rho(x_r), 1-based curve indices
  json matrix_triplets(int r) const
  {
    json list = json::array();
    for (int l = 0; l < dim(); ++l)
      if (x_[r].to[l] >= 0)
        list.push_back({x_[r].to[l] + 1, l + 1, static_cast<int>(x_[r].sign[l])});
    return list;
  }

private:
  CurveSet I_;
  StructureConstants SC_;
  std::vector<SignedMap> x_;
  std::vector<std::vector<int>> h_;
};

namespace detail {

// [A, B] = AB - BA on signed partial permutations; each basis vector has
// at most one image on each side, and in the minuscule case at most one
// of the two paths survives
inline SignedMap commutator(const SignedMap& A, const SignedMap& B, int scale)
{
  int N = static_cast<int>(A.to.size());
  SignedMap out(N);
  for (int j = 0; j < N; ++j) {
    int t1 = -1, s1 = 0, t2 = -1, s2 = 0;
    if (int b = B.to[j]; b >= 0 && A.to[b] >= 0) {
      t1 = A.to[b];
      s1 = A.sign[b] * B.sign[j];
    }
    if (int a = A.to[j]; a >= 0 && B.to[a] >= 0) {
      t2 = B.to[a];
      s2 = -B.sign[a] * A.sign[j];
    }
    int t = t1, s = s1;
    if (t1 >= 0 && t2 >= 0) {
      if (t1 != t2)
        throw std::logic_error("commutator paths end at different curves");
      s = s1 + s2;
    } else if (t2 >= 0) {
      t = t2;
      s = s2;
    }
    s *= scale;
    if (t >= 0 && s != 0) {
      if (s != 1 && s != -1)
        throw std::logic_error("commutator entry is not +-1; not a minuscule weight system");
      out.to[j] = t;
      out.sign[j] = static_cast<std::int8_t>(s);
    }
  }
  return out;
}

} // namespace detail

// Simple-generator signs come from a GF(2) system: for orthogonal C_i,
// C_j every square m, m+C_i, m+C_j, m+C_i+C_j must have sign product +1
// (this is [x_i, x_j] = [x_i, x_-j] = 0). Edges of a breadth-first
// spanning tree from C0 are listed last so they stay +1 in the returned
// solution. x_{-C_i} is the transpose of x_{C_i}, which gives
// [x_i, x_-i] = h_i. Every other root vector is an iterated bracket
// x_{b + C_i} = n_{b,C_i} [x_b, x_{C_i}].
inline RepAction build_action(const CurveSet& I, const StructureConstants& SC)
{
  if (I.spec().adjoint())
    throw SpecError(I.spec().name() + " curves carry the adjoint weights; there is no minuscule action to build");
  const auto& R = SC.roots();
  int n = I.rank(), N = I.size();

  // edges (i, j): v_j -> v_{j'} with l_{j'} = l_j + C_i
  struct Edge {
    int i, from, to;
  };
  std::vector<Edge> edges;
  std::vector<std::vector<int>> edge_id(n + 1, std::vector<int>(N, -1));
  for (int i = 1; i <= n; ++i)
    for (int j = 0; j < N; ++j) {
      auto m = I.coeffs(j);
      ++m[i];
      int t = I.index_of(m);
      if (t >= 0) {
        edge_id[i][j] = static_cast<int>(edges.size());
        edges.push_back({i, j, t});
      }
    }

  // spanning tree from C0 (the last curve)
  std::vector<bool> tree(edges.size(), false), seen(N, false);
  std::deque<int> queue{N - 1};
  seen[N - 1] = true;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (std::size_t e = 0; e < edges.size(); ++e) {
      int w = edges[e].from == v ? edges[e].to : edges[e].to == v ? edges[e].from : -1;
      if (w >= 0 && !seen[w]) {
        seen[w] = true;
        tree[e] = true;
        queue.push_back(w);
      }
    }
  }
  for (int v = 0; v < N; ++v)
    if (!seen[v])
      throw std::logic_error("weight graph is disconnected");

  // variable order: non-tree edges first
  std::vector<int> var(edges.size());
  int next = 0;
  for (std::size_t e = 0; e < edges.size(); ++e)
    if (!tree[e])
      var[e] = next++;
  for (std::size_t e = 0; e < edges.size(); ++e)
    if (tree[e])
      var[e] = next++;

  Gf2System sys(static_cast<int>(edges.size()));
  const auto& L = I.lattice();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      if (L.gram(i, j) != 0)
        continue;
      for (int a = 0; a < N; ++a) {
        int e1 = edge_id[i][a], e2 = edge_id[j][a];
        if (e1 < 0 || e2 < 0)
          continue;
        int e3 = edge_id[j][edges[e1].to], e4 = edge_id[i][edges[e2].to];
        if (e3 < 0 || e4 < 0)
          throw std::logic_error("incomplete weight square");
        sys.add({var[e1], var[e2], var[e3], var[e4]}, false);
      }
    }
  auto sol = sys.solve();
  if (!sol)
    throw std::logic_error("simple-generator sign system is unsatisfiable");

  std::vector<SignedMap> x(R.size(), SignedMap(N));
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto& E = edges[e];
    std::int8_t s = (*sol)[var[e]] ? -1 : 1;
    int pos = R.simple(E.i), neg = R.negate(pos);
    x[pos].to[E.from] = E.to;
    x[pos].sign[E.from] = s;
    x[neg].to[E.to] = E.from;
    x[neg].sign[E.to] = s;
  }
  for (int a = 0; a < R.positive_count(); ++a) {
    if (R.height(a) < 2)
      continue;
    for (int i = 1; i <= n; ++i) {
      auto b = R.coeffs(a);
      --b[i];
      int br = R.index_of(b);
      if (br < 0 || !R.positive(br))
        continue;
      int ci = R.simple(i);
      x[a] = detail::commutator(x[br], x[ci], SC(br, ci));
      int nb = R.negate(br), nc = R.negate(ci);
      x[R.negate(a)] = detail::commutator(x[nb], x[nc], SC(nb, nc));
      break;
    }
  }
  return RepAction(I, SC, std::move(x));
}

namespace detail {

// [b1, b2] applied to v, with b1, b2 basis elements of g
inline Term bracket_apply(const RepAction& A, int b1, int b2, int v)
{
  int n = A.rank();
  const auto& R = A.roots();
  const auto& L = R.lattice();
  Term t{v, 1};
  if (b1 < n && b2 < n)
    return {};
  if (b1 < n || b2 < n) {
    int hi = b1 < n ? b1 + 1 : b2 + 1;
    int r = b1 < n ? b2 - n : b1 - n;
    long c = L.cartan_pair(R.coeffs(r), hi) * (b1 < n ? 1 : -1);
    Term out = A.apply(r + n, t);
    out.coef *= c;
    return out;
  }
  int a = b1 - n, b = b2 - n;
  if (b == R.negate(a)) {
    // h_a = sum a_i h_i acts by <l, a>
    long w = 0;
    const auto& c = R.coeffs(a);
    for (int i = 1; i <= n; ++i)
      w += c[i] * A.h(i, v);
    return {v, w};
  }
  int s = R.sum(a, b);
  if (s < 0)
    return {};
  Term out = A.apply(s + n, t);
  out.coef *= A.constants()(a, b);
  return out;
}

inline void add_term(std::map<int, long>& acc, const Term& t, long scale)
{
  if (t.zero())
    return;
  acc[t.index] += scale * t.coef;
}

} // namespace detail

// Exhaustive check of rho([x, y]) v = rho(x) rho(y) v - rho(y) rho(x) v
// over all pairs of basis elements of g and all basis vectors v_l.
inline Report verify_module(const RepAction& A, int workers = 0)
{
  int B = A.basis_size(), N = A.dim();
  auto chunks = parallel_chunks(B, workers, 8, [&](std::size_t lo, std::size_t hi) {
    Report r;
    std::size_t checks = 0;
    for (int b1 = static_cast<int>(lo); b1 < static_cast<int>(hi); ++b1)
      for (int b2 = 0; b2 < B; ++b2)
        for (int v = 0; v < N; ++v) {
          ++checks;
          std::map<int, long> lhs, rhs;
          detail::add_term(lhs, detail::bracket_apply(A, b1, b2, v), 1);
          detail::add_term(rhs, A.apply(b1, A.apply(b2, {v, 1})), 1);
          detail::add_term(rhs, A.apply(b2, A.apply(b1, {v, 1})), -1);
          for (auto* m : {&lhs, &rhs})
            for (auto it = m->begin(); it != m->end();)
              it = it->second == 0 ? m->erase(it) : std::next(it);
          if (lhs != rhs) {
            json w;
            w["x"] = b1;
            w["y"] = b2;
            w["curve"] = v + 1;
            r.fail(w);
          }
        }
    r.data["checks"] = checks;
    return r;
  });
  Report rep("module");
  std::size_t checks = 0;
  for (const auto& c : chunks) {
    rep.absorb(c);
    checks += c.data["checks"].get<std::size_t>();
  }
  const auto& R = A.roots();
  // entries of the generators: +-1, at most one per row and column, and
  // only along l -> l + a
  Report shape;
  for (int r = 0; r < R.size(); ++r) {
    std::vector<int> hits(N, 0);
    for (int l = 0; l < N; ++l) {
      int t = A.x(r).to[l];
      if (t < 0)
        continue;
      ++hits[t];
      auto expect = A.curves().coeffs(l);
      for (std::size_t c = 0; c < expect.size(); ++c)
        expect[c] += R.coeffs(r)[c];
      int s = A.x(r).sign[l];
      // x_a twice on one vector vanishes
      bool twice = A.x(r).to[t] >= 0;
      if (A.curves().index_of(expect) != t || (s != 1 && s != -1) || twice)
        shape.fail({{"root", R.root(r).to_json()}, {"curve", l + 1}});
    }
    for (int l = 0; l < N; ++l)
      if (hits[l] > 1)
        shape.fail({{"root", R.root(r).to_json()}, {"row", l + 1}});
  }
  rep.absorb(shape);
  rep.data["type"] = A.curves().spec().name();
  rep.data["node"] = A.curves().spec().node;
  rep.data["dim_g"] = A.basis_size();
  rep.data["dim_V"] = N;
  rep.data["checks"] = checks;
  // lowest weight: every negative simple generator kills v_{C0}
  bool lowest = true;
  for (int i = 1; i <= A.rank(); ++i)
    lowest = lowest && A.x(R.negate(R.simple(i))).to[N - 1] < 0;
  rep.data["lowest_weight_annihilated"] = lowest;
  if (!lowest)
    rep.fail({{"lowest_weight", N}});
  return rep;
}

// Weyl orbit of the lowest weight under simple reflections, in the
// coordinates w_i = <l, C_i>; s_i(w) = w - w_i * (column i of Cartan).
inline Report weyl_transitivity(const CurveSet& I)
{
  const auto& L = I.lattice();
  int n = I.rank(), N = I.size();
  auto C = L.cartan_matrix();
  auto weight = [&](int l) {
    std::vector<long> w(n);
    for (int i = 1; i <= n; ++i)
      w[i - 1] = L.cartan_pair(I.coeffs(l), i);
    return w;
  };
  std::set<std::vector<long>> weights;
  for (int l = 0; l < N; ++l)
    weights.insert(weight(l));
  std::set<std::vector<long>> orbit{weight(N - 1)};
  std::deque<std::vector<long>> queue{weight(N - 1)};
  while (!queue.empty()) {
    auto w = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      if (w[i] == 0)
        continue;
      auto s = w;
      for (int j = 0; j < n; ++j)
        s[j] -= w[i] * C[i][j];
      if (orbit.insert(s).second)
        queue.push_back(s);
    }
  }
  Report rep("weyl_transitivity");
  bool covers = orbit == weights;
  // the representation dimension exceeds the number of curves exactly
  // when there are zero weights (E8 adjoint: 240 roots + 8 zero weights)
  int zero_weights = I.spec().adjoint() ? n : 0;
  rep.data["type"] = I.spec().name();
  rep.data["node"] = I.spec().node;
  rep.data["orbit_size"] = orbit.size();
  rep.data["distinct_weights"] = weights.size();
  rep.data["curves"] = N;
  rep.data["zero_weights"] = zero_weights;
  rep.data["transitive_on_nonzero_weights"] = covers;
  rep.data["minuscule"] = covers && zero_weights == 0;
  if (!covers)
    rep.fail({{"orbit_size", orbit.size()}, {"weights", weights.size()}});
  if (zero_weights != 0)
    rep.fail({{"zero_weight", "not in the orbit"}, {"multiplicity", zero_weights}});
  return rep;
}

inline Report weyl_transitivity(const RepAction& A) { return weyl_transitivity(A.curves()); }

// rank of the span of rho(b) over all basis elements b of g, compared
// with dim g
inline Report faithfulness(const RepAction& A)
{
  int N = A.dim();
  SparseEchelon E;
  for (int b = 0; b < A.basis_size(); ++b) {
    SparseEchelon::Row row;
    for (int l = 0; l < N; ++l) {
      Term t = A.apply(b, {l, 1});
      if (!t.zero())
        row[t.index * N + l] += Rational(t.coef);
    }
    E.insert(row);
  }
  Report rep("faithful");
  rep.data["rank"] = E.rank();
  rep.data["dim_g"] = A.basis_size();
  if (static_cast<int>(E.rank()) != A.basis_size())
    rep.fail({{"kernel_dimension", A.basis_size() - static_cast<int>(E.rank())}});
  return rep;
}

} // namespace ade
