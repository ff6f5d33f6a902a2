/*
  The quantum matrix bialgebra in one fixed degree: canonical monomials
  in the generators x_{ij}, straightening along the four commutation
  families, comultiplication, the right ideal cutting out the type B
  quotient coalgebra, and the dual algebra structure carried by the
  quotient.
*/
#pragma once

#include <functional>

#include "qschur/linalg.hpp"
#include "qschur/tensor.hpp"

namespace qschur {

/* A degree-d monomial: index pairs (row, col) sorted nondecreasingly
   under the (row, col) lexicographic order. */
using QMonomial = std::vector<std::pair<int, int>>;

template <class K>
using QPoly = std::map<QMonomial, K>;

inline std::string to_string(const QMonomial& m) {
  std::string s = "[";
  for (size_t i = 0; i < m.size(); ++i) {
    s += "(" + std::to_string(m[i].first) + "," + std::to_string(m[i].second) + ")";
    if (i + 1 < m.size()) s += ",";
  }
  return s + "]";
}

template <class K>
void qp_add(QPoly<K>& p, const QMonomial& m, const std::type_identity_t<K>& c) {
  if (is_zero(c)) return;
  auto it = p.find(m);
  if (it == p.end()) {
    p[m] = c;
  } else {
    it->second = it->second + c;
    if (is_zero(it->second)) p.erase(it);
  }
}

template <class K>
class Straightener {
 public:
  Straightener(int n, Params<K> par) : n_(n), par_(std::move(par)) {
    for (int v : index_values(n)) values_.push_back(v);
  }

  int n() const { return n_; }
  const Params<K>& params() const { return par_; }

  /* Normal form of the product x_{w_1} ... x_{w_d}: repeatedly rewrite
     the leftmost descent.  Rows strictly reorder in every emitted term
     of the mixed relation, so the rewriting terminates. */
  QPoly<K> straighten(const std::vector<std::pair<int, int>>& word) const {
    for (const auto& [i, j] : word)
      if (!valid(i) || !valid(j)) throw std::invalid_argument("InvalidIndex");
    QPoly<K> acc;
    qp_add(acc, QMonomial{}, K(1));
    // multiply one factor at a time to keep intermediate words short
    for (const auto& f : word) {
      QPoly<K> next;
      for (const auto& [m, c] : acc) {
        QMonomial ext = m;
        ext.push_back(f);
        for (const auto& [m2, c2] : normal_form(ext)) qp_add(next, m2, c * c2);
      }
      acc = std::move(next);
    }
    return acc;
  }

  QPoly<K> mul(const QPoly<K>& a, const QPoly<K>& b) const {
    QPoly<K> out;
    for (const auto& [m1, c1] : a)
      for (const auto& [m2, c2] : b) {
        QMonomial w = m1;
        w.insert(w.end(), m2.begin(), m2.end());
        for (const auto& [m, c] : normal_form(w)) qp_add(out, m, c1 * c2 * c);
      }
    return out;
  }

  /* Delta(x_{ij}) = sum_k x_{ik} (x) x_{kj}, extended multiplicatively;
     both legs are straightened. */
  std::map<std::pair<QMonomial, QMonomial>, K> comult(const QMonomial& m) const {
    std::map<std::pair<QMonomial, QMonomial>, K> acc;
    acc[{QMonomial{}, QMonomial{}}] = K(1);
    for (const auto& [i, j] : m) {
      std::map<std::pair<QMonomial, QMonomial>, K> next;
      for (const auto& [legs, c] : acc)
        for (int k : values_) {
          QMonomial left = legs.first, right = legs.second;
          left.push_back({i, k});
          right.push_back({k, j});
          for (const auto& [l2, cl] : normal_form(left))
            for (const auto& [r2, cr] : normal_form(right)) {
              K v = c * cl * cr;
              if (is_zero(v)) continue;
              auto key = std::make_pair(l2, r2);
              auto it = next.find(key);
              if (it == next.end()) {
                next[key] = v;
              } else {
                it->second = it->second + v;
                if (is_zero(it->second)) next.erase(it);
              }
            }
        }
      acc = std::move(next);
    }
    return acc;
  }

  /* counit: eps(x_{ij}) = delta_{ij}, extended multiplicatively */
  K counit(const QMonomial& m) const {
    for (const auto& [i, j] : m)
      if (i != j) return K(0);
    return K(1);
  }

 private:
  bool valid(int v) const {
    return std::find(values_.begin(), values_.end(), v) != values_.end();
  }

  QPoly<K> normal_form(const QMonomial& word) const {
    auto it = memo_.find(word);
    if (it != memo_.end()) return it->second;
    QPoly<K> out;
    // find the leftmost adjacent descent
    size_t pos = word.size();
    for (size_t t = 0; t + 1 < word.size(); ++t)
      if (word[t + 1] < word[t]) {
        pos = t;
        break;
      }
    if (pos == word.size()) {
      qp_add(out, word, K(1));
    } else {
      auto [k, i] = word[pos];
      auto [l, j] = word[pos + 1];
      auto emit = [&](std::pair<int, int> a, std::pair<int, int> b, const K& c) {
        QMonomial w = word;
        w[pos] = a;
        w[pos + 1] = b;
        for (const auto& [m, cm] : normal_form(w)) qp_add(out, m, c * cm);
      };
      if (k == l) {
        // same row, i > j: q-commute
        emit({l, j}, {k, i}, par_.qi);
      } else if (i == j) {
        // same column, k > l: q-commute
        emit({l, j}, {k, i}, par_.qi);
      } else if (i < j) {
        // k > l, i < j: plain swap
        emit({l, j}, {k, i}, K(1));
      } else {
        // k > l, i > j: swap plus the (q^{-1}-q) cross term
        emit({l, j}, {k, i}, K(1));
        emit({l, i}, {k, j}, par_.qi - par_.q);
      }
    }
    memo_[word] = out;
    return out;
  }

  int n_;
  Params<K> par_;
  std::vector<int> values_;
  mutable std::map<QMonomial, QPoly<K>> memo_;
};

/* All canonical (sorted) monomials of degree d. */
inline std::vector<QMonomial> canonical_monomials(int n, int d) {
  std::vector<std::pair<int, int>> pairs;
  for (int i : index_values(n))
    for (int j : index_values(n)) pairs.push_back({i, j});
  std::vector<QMonomial> out;
  QMonomial cur;
  std::function<void(size_t, int)> rec = [&](size_t from, int left) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (size_t p = from; p < pairs.size(); ++p) {
      cur.push_back(pairs[p]);
      rec(p, left - 1);
      cur.pop_back();
    }
  };
  rec(0, d);
  return out;
}

/* Degree-one generators of the right ideal: the families
   x_{ij} - x_{-i,-j} (i < 0 < j), x_{ij} - x_{-i,-j} - (Q^{-1}-Q) x_{-i,j}
   (i, j < 0), and for odd n additionally x_{0j} - Q^{-1} x_{0,-j} (j < 0)
   and x_{i0} - Q^{-1} x_{-i,0} (i < 0). */
template <class K>
std::vector<QPoly<K>> jB_generators(int n, const Params<K>& par) {
  if (n < 2) throw std::invalid_argument("InvalidIndex: need n >= 2");
  std::vector<QPoly<K>> out;
  auto vals = index_values(n);
  for (int i : vals)
    for (int j : vals) {
      QPoly<K> g;
      if (i < 0 && j > 0) {
        qp_add(g, QMonomial{{i, j}}, K(1));
        qp_add(g, QMonomial{{-i, -j}}, -K(1));
      } else if (i < 0 && j < 0) {
        qp_add(g, QMonomial{{i, j}}, K(1));
        qp_add(g, QMonomial{{-i, -j}}, -K(1));
        qp_add(g, QMonomial{{-i, j}}, -(par.Qi - par.Q));
      } else if (i == 0 && j < 0) {
        qp_add(g, QMonomial{{0, j}}, K(1));
        qp_add(g, QMonomial{{0, -j}}, -par.Qi);
      } else if (i < 0 && j == 0) {
        qp_add(g, QMonomial{{i, 0}}, K(1));
        qp_add(g, QMonomial{{-i, 0}}, -par.Qi);
      } else {
        continue;
      }
      out.push_back(std::move(g));
    }
  return out;
}

template <class K>
struct QuotientBasis {
  int n = 0, d = 0;
  std::vector<QMonomial> monomials;       // all canonical monomials, fixed order
  std::map<QMonomial, size_t> mono_index;
  std::vector<size_t> basis;              // chosen representatives (indices)
  Mat<K> reducer;                         // full space -> coordinates over basis
  bool degenerate = false;                // dimension off the generic count

  std::vector<K> reduce(const QPoly<K>& p) const {
    std::vector<K> full(monomials.size(), K(0));
    for (const auto& [m, c] : p) full[mono_index.at(m)] = c;
    return reducer.apply(full);
  }
};

inline unsigned long long generic_quotient_dim(int n, int d) {
  unsigned long long r = n / 2;
  mpz_class v;
  if (n % 2 == 0)
    mpz_bin_uiui(v.get_mpz_t(), 2 * r * r + d - 1, d);
  else
    mpz_bin_uiui(v.get_mpz_t(), 2 * r * r + 2 * r + d, d);
  return v.get_ui();
}

/* Quotient of degree d by the right-ideal slice spanned by g * m over
   degree-one generators g and degree-(d-1) monomials m.  Representative
   monomials prefer the index region with negative (or zero, negative)
   leading row. */
template <class K>
QuotientBasis<K> quotient_basis(int n, int d, const Params<K>& par) {
  Straightener<K> S(n, par);
  QuotientBasis<K> Q;
  Q.n = n;
  Q.d = d;
  Q.monomials = canonical_monomials(n, d);
  for (size_t i = 0; i < Q.monomials.size(); ++i) Q.mono_index[Q.monomials[i]] = i;
  size_t N = Q.monomials.size();

  // span of the ideal slice
  SpanBasis<K> ideal(N);
  for (const auto& g : jB_generators(n, par))
    for (const auto& m : canonical_monomials(n, d - 1)) {
      QPoly<K> prod;
      for (const auto& [gm, gc] : g) {
        QMonomial w = gm;
        w.insert(w.end(), m.begin(), m.end());
        for (const auto& [nm, nc] : S.straighten(w)) qp_add(prod, nm, gc * nc);
      }
      std::vector<K> v(N, K(0));
      for (const auto& [nm, nc] : prod) v[Q.mono_index.at(nm)] = nc;
      ideal.insert(v);
    }

  // prefer representatives supported on the shaded index region
  auto preferred = [&](const QMonomial& m) {
    for (const auto& [i, j] : m)
      if (!(i < 0 || (i == 0 && j < 0) || (i == 0 && j == 0 && n % 2 == 1))) return false;
    return true;
  };
  std::vector<size_t> order;
  for (size_t i = 0; i < N; ++i)
    if (preferred(Q.monomials[i])) order.push_back(i);
  for (size_t i = 0; i < N; ++i)
    if (!preferred(Q.monomials[i])) order.push_back(i);

  // extend the ideal span by preferred monomials first; the monomials
  // that enlarge the span become the quotient representatives
  SpanBasis<K> ext(N);
  for (const auto& row : ideal.dense_rows()) ext.insert(row);
  for (size_t i : order) {
    std::vector<K> v(N, K(0));
    v[i] = K(1);
    if (ext.insert(v)) Q.basis.push_back(i);
  }
  std::sort(Q.basis.begin(), Q.basis.end());

  // reducer columns: reduce each monomial modulo the ideal, expressed
  // over the chosen representatives
  Mat<K> ideal_mat(ideal.rank(), N);
  {
    auto rows = ideal.dense_rows();
    for (size_t r = 0; r < rows.size(); ++r)
      for (size_t c = 0; c < N; ++c) ideal_mat(r, c) = rows[r][c];
  }
  // solve [rep columns | ideal rows^T] * coeffs = monomial for each monomial
  Mat<K> sys(N, Q.basis.size() + ideal.rank());
  for (size_t c = 0; c < Q.basis.size(); ++c) sys(Q.basis[c], c) = K(1);
  for (size_t r = 0; r < ideal.rank(); ++r)
    for (size_t i = 0; i < N; ++i) sys(i, Q.basis.size() + r) = ideal_mat(r, i);
  Q.reducer = Mat<K>(Q.basis.size(), N);
  for (size_t i = 0; i < N; ++i) {
    std::vector<K> rhs(N, K(0));
    rhs[i] = K(1);
    auto sol = sys.solve(rhs);
    if (!sol) throw std::logic_error("quotient reduction failed");
    for (size_t c = 0; c < Q.basis.size(); ++c) Q.reducer(c, i) = (*sol)[c];
  }
  Q.degenerate = Q.basis.size() != generic_quotient_dim(n, d);
  return Q;
}

/* Coalgebra structure on the quotient: Delta-bar of each representative
   expressed over basis (x) basis coordinates. */
template <class K>
std::vector<Mat<K>> quotient_comult(const Straightener<K>& S, const QuotientBasis<K>& Q) {
  size_t B = Q.basis.size();
  std::vector<Mat<K>> out;  // one B x B matrix per representative
  for (size_t bi = 0; bi < B; ++bi) {
    Mat<K> M(B, B);
    for (const auto& [legs, c] : S.comult(Q.monomials[Q.basis[bi]])) {
      QPoly<K> lp, rp;
      qp_add(lp, legs.first, K(1));
      qp_add(rp, legs.second, K(1));
      auto lc = Q.reduce(lp), rc = Q.reduce(rp);
      for (size_t a = 0; a < B; ++a)
        for (size_t b = 0; b < B; ++b)
          if (!is_zero(lc[a]) && !is_zero(rc[b])) M(a, b) = M(a, b) + c * lc[a] * rc[b];
    }
    out.push_back(std::move(M));
  }
  return out;
}

/* Dual algebra product over the quotient basis coordinates:
   (f g)(x) = (f (x) g)(Delta-bar x). */
template <class K>
std::vector<K> dual_product(const std::vector<K>& f, const std::vector<K>& g,
                            const std::vector<Mat<K>>& comult_tables) {
  size_t B = comult_tables.size();
  std::vector<K> out(B, K(0));
  for (size_t k = 0; k < B; ++k) {
    K acc(0);
    const Mat<K>& M = comult_tables[k];
    for (size_t a = 0; a < B; ++a) {
      if (is_zero(f[a])) continue;
      for (size_t b = 0; b < B; ++b)
        if (!is_zero(M(a, b)) && !is_zero(g[b])) acc = acc + f[a] * M(a, b) * g[b];
    }
    out[k] = acc;
  }
  return out;
}

/* Unit of the dual algebra: the counit evaluated on representatives. */
template <class K>
std::vector<K> dual_unit(const Straightener<K>& S, const QuotientBasis<K>& Q) {
  std::vector<K> u(Q.basis.size(), K(0));
  // eps factors through the quotient; evaluate on each representative
  for (size_t bi = 0; bi < Q.basis.size(); ++bi)
    u[bi] = S.counit(Q.monomials[Q.basis[bi]]);
  return u;
}

/* The pairing with the tensor space: the matrix of the k-th dual basis
   functional acting on V^{(x)d} through the quotient coaction,
   (E_k)_{nu,mu} = coordinate k of [x_{nu_1 mu_1} ... x_{nu_d mu_d}]. */
template <class K>
std::vector<Mat<K>> dual_action_matrices(const Straightener<K>& S, const QuotientBasis<K>& Q,
                                         const TensorCtx<K>& V) {
  size_t B = Q.basis.size(), N = V.words().size();
  std::vector<Mat<K>> E(B, Mat<K>(N, N));
  for (size_t mu = 0; mu < N; ++mu)
    for (size_t nu = 0; nu < N; ++nu) {
      std::vector<std::pair<int, int>> word;
      for (int t = 0; t < V.d(); ++t) word.push_back({V.words()[nu][t], V.words()[mu][t]});
      auto coords = Q.reduce(S.straighten(word));
      for (size_t k = 0; k < B; ++k) E[k](nu, mu) = coords[k];
    }
  return E;
}

}  // namespace qschur
