#pragma once

#include "numeric.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace ade {

// Sparse rows over Q, reduced incrementally to echelon form. Each stored
// row has a distinct pivot column with coefficient 1.
class SparseEchelon {
public:
  using Row = std::map<int, Rational>;

  // returns true if the row was independent of those already present
  bool insert(Row row)
  {
    reduce(row);
    if (row.empty())
      return false;
    auto it = row.begin();
    Rational lead = it->second;
    for (auto& [c, v] : row)
      v /= lead;
    int p = it->first;
    pivots_.emplace(p, std::move(row));
    return true;
  }

  std::size_t rank() const { return pivots_.size(); }

  // basis of {x : row . x = 0 for all rows} over the given columns;
  // each vector has a single free column set to 1
  std::vector<Row> nullspace(const std::vector<int>& columns) const
  {
    auto rref = pivots_;
    // back substitution, highest pivot first
    for (auto it = rref.rbegin(); it != rref.rend(); ++it) {
      int p = it->first;
      for (auto& [q, row] : rref) {
        if (q == p)
          continue;
        auto f = row.find(p);
        if (f == row.end())
          continue;
        Rational k = f->second;
        for (const auto& [c, v] : it->second) {
          auto& dst = row[c];
          dst -= k * v;
          if (dst == 0)
            row.erase(c);
        }
      }
    }
    std::vector<Row> basis;
    for (int free : columns) {
      if (rref.count(free))
        continue;
      Row v;
      v[free] = 1;
      for (const auto& [p, row] : rref) {
        auto f = row.find(free);
        if (f != row.end())
          v[p] = -f->second;
      }
      basis.push_back(std::move(v));
    }
    return basis;
  }

private:
  void reduce(Row& row) const
  {
    // pivot rows only hold columns >= their pivot, so one ascending sweep
    // suffices
    auto it = row.begin();
    while (it != row.end()) {
      int col = it->first;
      auto piv = pivots_.find(col);
      if (it->second != 0 && piv != pivots_.end()) {
        Rational k = it->second;
        for (const auto& [c, v] : piv->second)
          row[c] -= k * v;
      }
      it = row.upper_bound(col);
    }
    for (auto jt = row.begin(); jt != row.end();)
      jt = jt->second == 0 ? row.erase(jt) : std::next(jt);
  }

  std::map<int, Row> pivots_;
};

// Linear system over GF(2): each equation is a set of variables whose
// sum must equal a given bit.
class Gf2System {
public:
  explicit Gf2System(int vars) : vars_(vars), words_((vars + 64) / 64) {}

  void add(const std::vector<int>& vars, bool rhs)
  {
    std::vector<std::uint64_t> row(words_, 0);
    for (int v : vars)
      row[v / 64] ^= std::uint64_t{1} << (v % 64);
    if (rhs)
      row[vars_ / 64] ^= std::uint64_t{1} << (vars_ % 64);
    rows_.push_back(std::move(row));
  }

  // a solution with every free variable 0, or nothing if inconsistent;
  // pivots are taken in increasing variable order, so variables listed
  // last are the ones left free
  std::optional<std::vector<bool>> solve() const
  {
    auto m = rows_;
    std::vector<int> pivcol;
    std::size_t r = 0;
    for (int c = 0; c < vars_ && r < m.size(); ++c) {
      std::size_t sel = r;
      while (sel < m.size() && !bit(m[sel], c))
        ++sel;
      if (sel == m.size())
        continue;
      std::swap(m[r], m[sel]);
      for (std::size_t i = 0; i < m.size(); ++i)
        if (i != r && bit(m[i], c))
          for (int w = 0; w < words_; ++w)
            m[i][w] ^= m[r][w];
      pivcol.push_back(c);
      ++r;
    }
    for (std::size_t i = r; i < m.size(); ++i)
      if (bit(m[i], vars_))
        return std::nullopt;
    std::vector<bool> x(vars_, false);
    for (std::size_t i = 0; i < r; ++i)
      x[pivcol[i]] = bit(m[i], vars_);
    return x;
  }

private:
  static bool bit(const std::vector<std::uint64_t>& row, int c) { return (row[c / 64] >> (c % 64)) & 1; }

  int vars_;
  int words_;
  std::vector<std::vector<std::uint64_t>> rows_;
};

} // namespace ade
