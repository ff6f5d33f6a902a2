/*
  Partition and tableau combinatorics at desk scale: dominance order,
  standard and semistandard enumerations, the coset permutation d(t) of
  a standard tableau, and semistandard counting for Wedderburn sums.
*/
#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "qschur/weylb.hpp"

namespace qschur {

using Partition = std::vector<int>;               // weakly decreasing positive parts
using Tableau = std::vector<std::vector<int>>;    // filled rows

inline std::vector<Partition> partitions_max_parts(int m, int max_parts) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int rest, int bound) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) == max_parts) return;
    for (int p = std::min(rest, bound); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(m, m);
  return out;
}

/* a dominates b: equal size and all partial sums of a >= those of b */
inline bool dominates(const Partition& a, const Partition& b) {
  int sa = 0, sb = 0, acc_a = 0, acc_b = 0;
  for (int p : a) sa += p;
  for (int p : b) sb += p;
  if (sa != sb) return false;
  size_t rows = std::max(a.size(), b.size());
  for (size_t i = 0; i < rows; ++i) {
    acc_a += i < a.size() ? a[i] : 0;
    acc_b += i < b.size() ? b[i] : 0;
    if (acc_a < acc_b) return false;
  }
  return true;
}

inline Tableau canonical_tableau(const Partition& shape) {
  Tableau t;
  int next = 1;
  for (int row : shape) {
    std::vector<int> r(row);
    std::iota(r.begin(), r.end(), next);
    next += row;
    t.push_back(std::move(r));
  }
  return t;
}

inline std::vector<Tableau> standard_tableaux(const Partition& shape) {
  int d = std::accumulate(shape.begin(), shape.end(), 0);
  std::vector<Tableau> out;
  Tableau cur(shape.size());
  std::function<void(int)> rec = [&](int entry) {
    if (entry > d) {
      out.push_back(cur);
      return;
    }
    for (size_t r = 0; r < shape.size(); ++r) {
      size_t c = cur[r].size();
      if (static_cast<int>(c) >= shape[r]) continue;
      if (r > 0 && cur[r - 1].size() <= c) continue;  // cell above must be filled
      cur[r].push_back(entry);
      rec(entry + 1);
      cur[r].pop_back();
    }
  };
  rec(1);
  return out;
}

/* Semistandard tableaux of the given shape whose content is the
   composition `content` (entry i+1 appears content[i] times): rows
   weakly increase, columns strictly increase. */
inline std::vector<Tableau> semistandard_tableaux(const Partition& shape,
                                                  const std::vector<int>& content) {
  std::vector<Tableau> out;
  Tableau cur(shape.size());
  std::vector<int> used(content.size(), 0);
  // fill cells row-major; entries within a row weakly increase and must
  // exceed the entry directly above
  std::function<void(size_t, size_t)> rec = [&](size_t r, size_t c) {
    if (r == shape.size()) {
      out.push_back(cur);
      return;
    }
    if (static_cast<int>(c) == shape[r]) {
      rec(r + 1, 0);
      return;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, cur[r][c - 1]);
    if (r > 0) lo = std::max(lo, cur[r - 1][c] + 1);
    for (int e = lo; e <= static_cast<int>(content.size()); ++e) {
      if (used[e - 1] >= content[e - 1]) continue;
      ++used[e - 1];
      cur[r].push_back(e);
      rec(r, c + 1);
      cur[r].pop_back();
      --used[e - 1];
    }
  };
  rec(0, 0);
  return out;
}

inline unsigned long long ssyt_count(const Partition& shape, int max_entry) {
  // brute-force enumeration over all contents of the right size
  int d = std::accumulate(shape.begin(), shape.end(), 0);
  unsigned long long total = 0;
  for (const auto& content : compositions_exact(d, max_entry))
    total += semistandard_tableaux(shape, content).size();
  return total;
}

/* The permutation w with t = t^shape . w (w applied to the entries of
   the canonical tableau); for standard t this is the minimal-length
   coset representative d(t). */
inline SignedPerm tableau_perm(const Partition& shape, const Tableau& t) {
  int d = std::accumulate(shape.begin(), shape.end(), 0);
  Tableau canon = canonical_tableau(shape);
  SignedPerm w;
  w.window.resize(d);
  for (size_t r = 0; r < canon.size(); ++r)
    for (size_t c = 0; c < canon[r].size(); ++c) w.window[canon[r][c] - 1] = t[r][c];
  return w;
}

/* Content map: replace each entry e of a standard tableau by the index
   of the block of the composition `mu` containing e. */
inline Tableau content_collapse(const Tableau& t, const std::vector<int>& mu) {
  std::vector<int> block;
  for (size_t i = 0; i < mu.size(); ++i)
    for (int k = 0; k < mu[i]; ++k) block.push_back(static_cast<int>(i) + 1);
  Tableau out = t;
  for (auto& row : out)
    for (auto& e : row) e = block[e - 1];
  return out;
}

}  // namespace qschur
