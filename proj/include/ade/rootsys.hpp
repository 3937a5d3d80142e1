#pragma once

#include "lattice.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace ade {

// Roots of Lambda = span(C1..Cn): classes of square -2. Positive roots
// occupy indices [0, P) sorted by (height, lexicographic); index P + i
// holds the negative of root i.
class RootSystem {
public:
  RootSystem() = default;

  RootSystem(IntersectionLattice L, std::vector<std::vector<int>> positive) : lat_(std::move(L))
  {
    std::sort(positive.begin(), positive.end(), [](const auto& a, const auto& b) {
      int ha = sum_of(a), hb = sum_of(b);
      if (ha != hb)
        return ha < hb;
      return a < b;
    });
    P_ = static_cast<int>(positive.size());
    roots_ = positive;
    for (const auto& r : positive) {
      auto neg = r;
      for (auto& x : neg)
        x = -x;
      roots_.push_back(neg);
    }
    for (int i = 0; i < size(); ++i)
      index_[roots_[i]] = i;

    int R = size();
    sum_.assign(static_cast<std::size_t>(R) * R, -1);
    std::vector<int> tmp(rank() + 1);
    for (int a = 0; a < R; ++a)
      for (int b = 0; b < R; ++b) {
        for (int i = 0; i <= rank(); ++i)
          tmp[i] = roots_[a][i] + roots_[b][i];
        sum_[static_cast<std::size_t>(a) * R + b] = index_of(tmp);
      }
    simple_.assign(rank() + 1, -1);
    for (int i = 1; i <= rank(); ++i) {
      std::vector<int> e(rank() + 1, 0);
      e[i] = 1;
      simple_[i] = index_of(e);
    }
  }

  const IntersectionLattice& lattice() const { return lat_; }
  int rank() const { return lat_.rank(); }
  int size() const { return static_cast<int>(roots_.size()); }
  int positive_count() const { return P_; }

  // coefficient vector of length n+1, entry 0 (C0) is always 0
  const std::vector<int>& coeffs(int r) const { return roots_.at(r); }
  DivisorClass root(int r) const { return DivisorClass::from_ints(roots_.at(r)); }

  bool positive(int r) const { return r < P_; }
  int negate(int r) const { return r < P_ ? r + P_ : r - P_; }
  int height(int r) const { return sum_of(roots_[r]); }

  // index of a + b if it is a root, else -1
  int sum(int a, int b) const { return sum_[static_cast<std::size_t>(a) * size() + b]; }

  int index_of(const std::vector<int>& c) const
  {
    auto it = index_.find(c);
    return it == index_.end() ? -1 : it->second;
  }

  int find(const DivisorClass& d) const
  {
    if (d.rank() != rank() || d.c0() != 0)
      return -1;
    for (int i = 1; i <= rank(); ++i)
      if (!d[i].fits_sint_p())
        return -1;
    return index_of(d.to_ints());
  }

  int simple(int i) const { return simple_.at(i); }
  int highest() const { return P_ - 1; }

  // the simple root C_i for which r = C_i, or 0
  int simple_label(int r) const
  {
    for (int i = 1; i <= rank(); ++i)
      if (simple_[i] == r)
        return i;
    return 0;
  }

  long pair(int a, int b) const { return lat_.pair(roots_[a], roots_[b]); }

  json to_json() const
  {
    json j;
    j["type"] = lat_.spec().name();
    j["count"] = size();
    j["positive_count"] = P_;
    json list = json::array();
    for (int r = 0; r < P_; ++r)
      list.push_back(std::vector<int>(roots_[r].begin() + 1, roots_[r].end()));
    j["positive"] = list;
    return j;
  }

private:
  static int sum_of(const std::vector<int>& v)
  {
    int s = 0;
    for (std::size_t i = 1; i < v.size(); ++i)
      s += v[i];
    return s;
  }

  IntersectionLattice lat_;
  std::vector<std::vector<int>> roots_;
  std::map<std::vector<int>, int> index_;
  std::vector<int> sum_;
  std::vector<int> simple_;
  int P_ = 0;
};

// Closure from the simple roots: if a is a positive root and a.C_i = 1
// then (a + C_i)^2 = -2, and every positive root arises this way.
inline RootSystem enumerate_roots(const IntersectionLattice& L)
{
  int n = L.rank();
  std::set<std::vector<int>> seen;
  std::deque<std::vector<int>> queue;
  for (int i = 1; i <= n; ++i) {
    std::vector<int> e(n + 1, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    auto a = queue.front();
    queue.pop_front();
    for (int i = 1; i <= n; ++i) {
      if (L.pair_basis(a, i) != 1)
        continue;
      auto b = a;
      ++b[i];
      if (seen.insert(b).second)
        queue.push_back(b);
    }
  }
  return RootSystem(L, std::vector<std::vector<int>>(seen.begin(), seen.end()));
}

inline int height(const RootSystem& R, const DivisorClass& alpha)
{
  int r = R.find(alpha);
  if (r < 0)
    throw std::invalid_argument(alpha.to_string() + " is not a root");
  if (!R.positive(r))
    throw std::invalid_argument(alpha.to_string() + " is not a positive root");
  return R.height(r);
}

// (r, q) maximal with beta - r alpha, ..., beta + q alpha all roots
inline std::pair<int, int> alpha_string(const RootSystem& R, const DivisorClass& beta, const DivisorClass& alpha)
{
  int b = R.find(beta), a = R.find(alpha);
  if (a < 0 || b < 0)
    throw std::invalid_argument("alpha_string needs two roots");
  if (a == b || a == R.negate(b))
    throw std::invalid_argument("alpha_string needs beta != +-alpha");
  int r = 0, q = 0;
  DivisorClass cur = beta;
  while (R.find(cur - alpha) >= 0) {
    cur = cur - alpha;
    ++r;
  }
  cur = beta;
  while (R.find(cur + alpha) >= 0) {
    cur = cur + alpha;
    ++q;
  }
  return {r, q};
}

inline int dynkin_root_count(char family, int n)
{
  switch (family) {
  case 'A':
    return n * (n + 1);
  case 'D':
    return 2 * n * (n - 1);
  default:
    return n == 6 ? 72 : n == 7 ? 126 : 240;
  }
}

} // namespace ade
