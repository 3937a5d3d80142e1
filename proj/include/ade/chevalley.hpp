#pragma once

#include "parallel.hpp"
#include "report.hpp"
#include "rootsys.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace ade {

// n_{a,b} in [x_a, x_b] = n_{a,b} x_{a+b} for the Chevalley basis.
class StructureConstants {
public:
  StructureConstants() = default;
  StructureConstants(RootSystem R, std::vector<std::int8_t> table) : R_(std::move(R)), n_(std::move(table)) {}

  const RootSystem& roots() const { return R_; }
  int operator()(int a, int b) const { return n_[static_cast<std::size_t>(a) * R_.size() + b]; }

  // copy with n_{a,b} (and n_{b,a}) negated; used to exercise the checkers
  StructureConstants flipped(int a, int b) const
  {
    StructureConstants c = *this;
    std::size_t R = R_.size();
    c.n_[a * R + b] = static_cast<std::int8_t>(-c.n_[a * R + b]);
    if (a != b)
      c.n_[b * R + a] = static_cast<std::int8_t>(-c.n_[b * R + a]);
    return c;
  }

  json to_json() const
  {
    json list = json::array();
    int R = R_.size();
    for (int a = 0; a < R; ++a)
      for (int b = 0; b < R; ++b)
        if ((*this)(a, b) != 0) {
          json e;
          e["alpha"] = R_.root(a).to_json();
          e["beta"] = R_.root(b).to_json();
          e["sign"] = (*this)(a, b);
          list.push_back(e);
        }
    return list;
  }

private:
  RootSystem R_;
  std::vector<std::int8_t> n_;
};

namespace detail {

class ConstantBuilder {
public:
  explicit ConstantBuilder(const RootSystem& R) : R_(R), n_(R.size() * static_cast<std::size_t>(R.size()), unknown) {}

  void set(int a, int b, int v)
  {
    at(a, b) = static_cast<std::int8_t>(v);
    at(b, a) = static_cast<std::int8_t>(-v);
  }

  // reduce to a pair of positive roots whose sum has lower height, using
  // n(-a,-b) = -n(a,b) and n(a,b) = n(b,c) = n(c,a) when a + b + c = 0
  int get(int a, int b)
  {
    int s = R_.sum(a, b);
    if (s < 0)
      return 0;
    auto& slot = at(a, b);
    if (slot != unknown)
      return slot;
    bool pa = R_.positive(a), pb = R_.positive(b);
    int v;
    if (pa && pb) {
      std::ostringstream os;
      os << "structure constant for positive pair (" << R_.root(a).to_string() << ", " << R_.root(b).to_string()
         << ") requested before its height layer was fixed";
      throw std::logic_error(os.str());
    } else if (!pa && !pb) {
      v = -get(R_.negate(a), R_.negate(b));
    } else {
      int c = R_.negate(s);
      if (R_.positive(c))
        v = pa ? get(c, a) : get(b, c);
      else
        v = pb ? -get(R_.negate(b), R_.negate(c)) : -get(R_.negate(c), R_.negate(a));
    }
    slot = static_cast<std::int8_t>(v);
    return v;
  }

  std::vector<std::int8_t> take() { return std::move(n_); }

private:
  static constexpr std::int8_t unknown = 7;
  std::int8_t& at(int a, int b) { return n_[static_cast<std::size_t>(a) * R_.size() + b]; }

  const RootSystem& R_;
  std::vector<std::int8_t> n_;
};

} // namespace detail

// Extraspecial-pair completion: positive roots are visited in (height,
// lex) order; the pair (a, b) with a + b = x and a minimal gets +1 and
// every other positive pair (g, d) summing to x follows from the
// four-root identity
//   n(g,d) = n(a,b) [ n(b,-g) n(a,-d) + n(-g,a) n(b,-d) ].
inline StructureConstants compute_structure_constants(const RootSystem& R)
{
  int P = R.positive_count();
  detail::ConstantBuilder B(R);
  std::vector<std::vector<std::pair<int, int>>> pairs(P);
  for (int a = 0; a < P; ++a)
    for (int b = a + 1; b < P; ++b) {
      int s = R.sum(a, b);
      if (s >= 0)
        pairs[s].emplace_back(a, b);
    }
  for (int x = 0; x < P; ++x) {
    if (pairs[x].empty())
      continue;
    auto [a, b] = pairs[x].front();
    B.set(a, b, 1);
    for (std::size_t p = 1; p < pairs[x].size(); ++p) {
      auto [g, d] = pairs[x][p];
      int ng = R.negate(g), nd = R.negate(d);
      int v = B.get(b, ng) * B.get(a, nd) + B.get(ng, a) * B.get(b, nd);
      if (v != 1 && v != -1) {
        std::ostringstream os;
        os << "inconsistent structure constant for (" << R.root(g).to_string() << ", " << R.root(d).to_string()
           << "): value " << v;
        throw std::logic_error(os.str());
      }
      B.set(g, d, v);
    }
  }
  int n = R.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      B.get(a, b);
  auto table = B.take();
  for (auto& v : table)
    if (v != 0 && v != 1 && v != -1)
      v = 0;
  return StructureConstants(R, std::move(table));
}

// Element of g = h + sum g_a with exact rational coefficients.
struct LieElement {
  std::vector<Rational> h;
  std::map<int, Rational> x;

  LieElement() = default;
  explicit LieElement(int rank) : h(rank) {}

  static LieElement cartan(int rank, int i)
  {
    LieElement e(rank);
    e.h.at(i - 1) = 1;
    return e;
  }
  static LieElement root(int rank, int r)
  {
    LieElement e(rank);
    e.x[r] = 1;
    return e;
  }

  bool is_zero() const
  {
    for (const auto& q : h)
      if (q != 0)
        return false;
    for (const auto& [r, q] : x)
      if (q != 0)
        return false;
    return true;
  }

  void prune()
  {
    for (auto it = x.begin(); it != x.end();)
      it = it->second == 0 ? x.erase(it) : std::next(it);
  }

  LieElement& operator+=(const LieElement& o)
  {
    if (h.size() < o.h.size())
      h.resize(o.h.size());
    for (std::size_t i = 0; i < o.h.size(); ++i)
      h[i] += o.h[i];
    for (const auto& [r, q] : o.x)
      x[r] += q;
    prune();
    return *this;
  }
  LieElement& operator*=(const Rational& s)
  {
    for (auto& q : h)
      q *= s;
    for (auto& [r, q] : x)
      q *= s;
    prune();
    return *this;
  }
  friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
  friend LieElement operator-(LieElement a, LieElement b)
  {
    b *= Rational(-1);
    return a += b;
  }
  friend LieElement operator*(const Rational& s, LieElement a) { return a *= s; }

  friend bool operator==(const LieElement& a, const LieElement& b) { return (a - b).is_zero(); }
};

// Bilinear extension of [h_i, x_a] = <a, C_i> x_a, [x_a, x_-a] = h_a,
// [x_a, x_b] = n_{a,b} x_{a+b}.
inline LieElement bracket(const StructureConstants& SC, const LieElement& u, const LieElement& v)
{
  const auto& R = SC.roots();
  const auto& L = R.lattice();
  int n = R.rank();
  LieElement out(n);
  auto ad_h = [&](const std::vector<Rational>& h, const std::map<int, Rational>& x, const Rational& sign) {
    for (const auto& [r, q] : x) {
      Rational w = 0;
      for (int i = 1; i <= n; ++i)
        if (h[i - 1] != 0)
          w += h[i - 1] * static_cast<long>(L.cartan_pair(R.coeffs(r), i));
      if (w != 0)
        out.x[r] += sign * w * q;
    }
  };
  if (!u.h.empty())
    ad_h(u.h, v.x, Rational(1));
  if (!v.h.empty())
    ad_h(v.h, u.x, Rational(-1));
  for (const auto& [a, qa] : u.x)
    for (const auto& [b, qb] : v.x) {
      if (b == R.negate(a)) {
        const auto& c = R.coeffs(a);
        for (int i = 1; i <= n; ++i)
          if (c[i] != 0)
            out.h[i - 1] += qa * qb * c[i];
        continue;
      }
      int s = R.sum(a, b);
      if (s >= 0)
        out.x[s] += qa * qb * SC(a, b);
    }
  out.prune();
  return out;
}

struct JacobiOptions {
  bool exhaustive = false;
  std::size_t samples = 100000;
  std::uint64_t seed = 1;
  int workers = 0;
};

namespace detail {

// n(a,b) n(a+b,c) + n(b,c) n(b+c,a) + n(c,a) n(c+a,b), valid when no two
// of a, b, c are opposite and a + b + c != 0
inline int jacobi_sum(const StructureConstants& SC, int a, int b, int c)
{
  const auto& R = SC.roots();
  int t = 0;
  if (int s = R.sum(a, b); s >= 0)
    t += SC(a, b) * SC(s, c);
  if (int s = R.sum(b, c); s >= 0)
    t += SC(b, c) * SC(s, a);
  if (int s = R.sum(c, a); s >= 0)
    t += SC(c, a) * SC(s, b);
  return t;
}

inline bool jacobi_applicable(const RootSystem& R, int a, int b, int c)
{
  if (b == R.negate(a) || c == R.negate(a) || c == R.negate(b))
    return false;
  const auto& x = R.coeffs(a);
  const auto& y = R.coeffs(b);
  const auto& z = R.coeffs(c);
  for (std::size_t i = 1; i < x.size(); ++i)
    if (x[i] + y[i] + z[i] != 0)
      return true;
  return false;
}

inline json triple_json(const RootSystem& R, int a, int b, int c, int value)
{
  json w;
  w["alpha"] = R.root(a).to_json();
  w["beta"] = R.root(b).to_json();
  w["gamma"] = R.root(c).to_json();
  w["sum"] = value;
  return w;
}

struct JacobiChunk {
  Report rep;
  std::size_t checked = 0;
  std::size_t nonzero = 0;
};

} // namespace detail

// Three-term cocycle identity on root triples. Small systems (and any
// system with exhaustive set) are checked over every ordered triple;
// otherwise every triple having a nonzero term is checked exhaustively
// and a seeded uniform sample covers the rest.
inline Report verify_jacobi(const StructureConstants& SC, const JacobiOptions& opt = {})
{
  const auto& R = SC.roots();
  int n = R.size();
  Report rep("jacobi");
  bool full = opt.exhaustive || n <= 126;

  auto chunks = parallel_chunks(n, opt.workers, 4, [&](std::size_t lo, std::size_t hi) {
    detail::JacobiChunk out;
    for (int a = static_cast<int>(lo); a < static_cast<int>(hi); ++a) {
      if (full) {
        for (int b = 0; b < n; ++b)
          for (int c = 0; c < n; ++c) {
            if (!detail::jacobi_applicable(R, a, b, c))
              continue;
            ++out.checked;
            int t = detail::jacobi_sum(SC, a, b, c);
            int s = R.sum(a, b);
            if (s >= 0 && R.sum(s, c) >= 0)
              ++out.nonzero;
            if (t != 0)
              out.rep.fail(detail::triple_json(R, a, b, c, t));
          }
      } else {
        // every triple with a nonzero term is a rotation of one with
        // a + b and a + b + c both roots; the identity is cyclic
        for (int b = 0; b < n; ++b) {
          int s = R.sum(a, b);
          if (s < 0)
            continue;
          for (int c = 0; c < n; ++c) {
            if (R.sum(s, c) < 0 || !detail::jacobi_applicable(R, a, b, c))
              continue;
            ++out.checked;
            ++out.nonzero;
            int t = detail::jacobi_sum(SC, a, b, c);
            if (t != 0)
              out.rep.fail(detail::triple_json(R, a, b, c, t));
          }
        }
      }
    }
    return out;
  });
  std::size_t checked = 0, nonzero = 0;
  for (const auto& c : chunks) {
    rep.absorb(c.rep);
    checked += c.checked;
    nonzero += c.nonzero;
  }
  rep.data["type"] = R.lattice().spec().name();
  rep.data["mode"] = full ? "exhaustive" : "nonzero-terms+sample";
  rep.data["triples_checked"] = checked;
  rep.data["triples_with_nonzero_term"] = nonzero;

  if (!full) {
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::size_t sampled = 0;
    Report srep;
    for (std::size_t i = 0; i < opt.samples; ++i) {
      int a = pick(rng), b = pick(rng), c = pick(rng);
      if (!detail::jacobi_applicable(R, a, b, c))
        continue;
      ++sampled;
      int t = detail::jacobi_sum(SC, a, b, c);
      if (t != 0)
        srep.fail(detail::triple_json(R, a, b, c, t));
    }
    rep.absorb(srep);
    rep.data["samples_drawn"] = opt.samples;
    rep.data["samples_applicable"] = sampled;
    rep.data["seed"] = opt.seed;
  }

  // table shape: nonzero exactly on root sums, antisymmetric
  Report shape;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int v = SC(a, b);
      bool root_sum = R.sum(a, b) >= 0;
      if ((v != 0) != root_sum || v != -SC(b, a) || (root_sum && v != 1 && v != -1)) {
        json w;
        w["alpha"] = R.root(a).to_json();
        w["beta"] = R.root(b).to_json();
        w["value"] = v;
        shape.fail(w);
      }
    }
  rep.absorb(shape);
  return rep;
}

inline int lie_dimension(const RootSystem& R) { return R.size() + R.rank(); }

} // namespace ade
