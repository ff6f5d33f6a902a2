/*
  The two-parameter Hecke algebra of type B on the T_w basis, over any
  coefficient field K of the toolkit.  Elements are sparse maps from
  window notation to coefficients.  Structural elements: parabolic sums
  x_lambda and double coset sums, Jucys-Murphy elements, the elements
  u^+-_i, v_{a,b} and the idempotents e_{a,b}.
*/
#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "qschur/linalg.hpp"
#include "qschur/scalars.hpp"
#include "qschur/weylb.hpp"

namespace qschur {

template <class K>
struct HeckeElt {
  int d = 0;
  std::map<std::vector<int>, K> terms;  // window -> coefficient

  bool is_zero() const { return terms.empty(); }
  void add(const std::vector<int>& w, const K& c) {
    if (qschur::is_zero(c)) return;
    auto it = terms.find(w);
    if (it == terms.end()) {
      terms[w] = c;
    } else {
      it->second = it->second + c;
      if (qschur::is_zero(it->second)) terms.erase(it);
    }
  }
  friend bool operator==(const HeckeElt& a, const HeckeElt& b) {
    return a.d == b.d && a.terms == b.terms;
  }
  friend bool operator!=(const HeckeElt& a, const HeckeElt& b) { return !(a == b); }
};

template <class K>
class HeckeCtx {
 public:
  HeckeCtx(int d, Params<K> par) : d_(d), par_(std::move(par)), G_(group_cache(d)) {}

  int rank() const { return d_; }
  const Params<K>& params() const { return par_; }
  const GroupCache& group() const { return G_; }

  HeckeElt<K> zero() const { return HeckeElt<K>{d_, {}}; }
  HeckeElt<K> one() const { return basis(sp_identity(d_)); }
  HeckeElt<K> basis(const SignedPerm& w) const {
    HeckeElt<K> h{d_, {}};
    h.terms[w.window] = K(1);
    return h;
  }
  HeckeElt<K> gen(int t) const { return basis(sp_gen(d_, t)); }

  HeckeElt<K> scale(const HeckeElt<K>& h, const K& c) const {
    HeckeElt<K> r{d_, {}};
    if (qschur::is_zero(c)) return r;
    for (const auto& [w, cc] : h.terms) r.add(w, c * cc);
    return r;
  }
  HeckeElt<K> add(const HeckeElt<K>& a, const HeckeElt<K>& b) const {
    HeckeElt<K> r = a;
    for (const auto& [w, c] : b.terms) r.add(w, c);
    return r;
  }
  HeckeElt<K> sub(const HeckeElt<K>& a, const HeckeElt<K>& b) const {
    HeckeElt<K> r = a;
    for (const auto& [w, c] : b.terms) r.add(w, -c);
    return r;
  }

  /* T_w T_t (side == right) or T_t T_w (side == left), extended
     linearly; the quadratic relation contributes (c^{-1} - c) T_w when
     the length drops, with c = Q for t = 0 and c = q otherwise. */
  HeckeElt<K> mul_by_gen(const HeckeElt<K>& h, int t, bool right = true) const {
    if (t < 0 || t >= d_)
      throw std::invalid_argument("BadGenerator: T_" + std::to_string(t));
    const K delta = (t == 0) ? par_.Qi - par_.Q : par_.qi - par_.q;
    HeckeElt<K> r{d_, {}};
    for (const auto& [w, c] : h.terms) {
      size_t id = G_.id_of(SignedPerm{w});
      size_t nid = right ? G_.rmul(id, t) : G_.lmul(id, t);
      r.add(G_.elem(nid).window, c);
      if (G_.len(nid) < G_.len(id)) r.add(w, c * delta);
    }
    return r;
  }

  HeckeElt<K> mul(const HeckeElt<K>& a, const HeckeElt<K>& b) const {
    if (a.d != b.d) throw std::invalid_argument("RankMismatch: Hecke product");
    HeckeElt<K> r{d_, {}};
    for (const auto& [w2, c2] : b.terms) {
      HeckeElt<K> acc = a;
      for (int t : G_.word(G_.id_of(SignedPerm{w2}))) acc = mul_by_gen(acc, t, true);
      for (const auto& [w, c] : acc.terms) r.add(w, c * c2);
    }
    return r;
  }

  HeckeElt<K> mul(std::initializer_list<HeckeElt<K>> fs) const {
    HeckeElt<K> r = one();
    for (const auto& f : fs) r = mul(r, f);
    return r;
  }

  /* The anti-automorphism T_w -> T_{w^{-1}}. */
  HeckeElt<K> star(const HeckeElt<K>& h) const {
    HeckeElt<K> r{d_, {}};
    for (const auto& [w, c] : h.terms) r.add(sp_inverse(SignedPerm{w}).window, c);
    return r;
  }

  std::vector<K> coords(const HeckeElt<K>& h) const {
    std::vector<K> v(G_.size(), K(0));
    for (const auto& [w, c] : h.terms) v[G_.id_of(SignedPerm{w})] = c;
    return v;
  }
  HeckeElt<K> from_coords(const std::vector<K>& v) const {
    HeckeElt<K> h{d_, {}};
    for (size_t i = 0; i < v.size(); ++i)
      if (!qschur::is_zero(v[i])) h.terms[G_.elem(i).window] = v[i];
    return h;
  }

  /* Sum of T_w over an explicit element set. */
  HeckeElt<K> sum_over(const std::vector<size_t>& ids) const {
    HeckeElt<K> h{d_, {}};
    for (size_t id : ids) h.terms[G_.elem(id).window] = K(1);
    return h;
  }

  /* q^{-a(w)} Q^{-b(w)} with b the number of s_0 letters and a the
     rest; the weight making the parabolic sums eigenvectors for right
     multiplication (x T_t = q^{-1} x resp. Q^{-1} x). */
  K letter_weight(size_t id) const {
    K w(1);
    int b = G_.zero_letters(id), a = G_.len(id) - b;
    for (int k = 0; k < a; ++k) w = w * par_.qi;
    for (int k = 0; k < b; ++k) w = w * par_.Qi;
    return w;
  }

  /* Weighted set sum normalized so the element `base` has coefficient
     one: sum_w q^{-(a(w)-a(base))} Q^{-(b(w)-b(base))} T_w. */
  HeckeElt<K> sum_over_weighted(const std::vector<size_t>& ids, size_t base) const {
    K norm = inv(letter_weight(base));
    HeckeElt<K> h{d_, {}};
    for (size_t id : ids) h.terms[G_.elem(id).window] = norm * letter_weight(id);
    return h;
  }

  HeckeElt<K> x_lambda(const CompositionB& lam) const {
    return sum_over_weighted(G_.subgroup(parabolic_of(lam)),
                             G_.id_of(sp_identity(d_)));
  }

  /* T^g_{lambda,mu}: weighted sum over the double coset W_lambda g
     W_mu; g must be the shortest element of its coset. */
  HeckeElt<K> double_coset_sum(const CompositionB& lam, const SignedPerm& g,
                               const CompositionB& mu) const {
    auto gl = parabolic_of(lam), gm = parabolic_of(mu);
    size_t gid = G_.id_of(g);
    auto dc = G_.double_coset(gid, gl, gm);
    for (size_t x : dc)
      if (G_.len(x) < G_.len(gid))
        throw std::invalid_argument("NotMinimalRep: " + g.str());
    return sum_over_weighted(dc, gid);
  }

  /* Jucys-Murphy element L_m = T_{m-1} ... T_1 T_0 T_1 ... T_{m-1}. */
  HeckeElt<K> jm_element(int m) const {
    if (m < 1 || m > d_) throw std::invalid_argument("OutOfRange: L_" + std::to_string(m));
    HeckeElt<K> h = one();
    for (int t = m - 1; t >= 0; --t) h = mul_by_gen(h, t, true);
    for (int t = 1; t <= m - 1; ++t) h = mul_by_gen(h, t, true);
    return h;
  }

  /* u^+_i = prod_{l=0}^{i-1} (L_{l+1} + Q),
     u^-_i = prod_{l=0}^{i-1} (L_{l+1} - Q^{-1}); empty products are 1.
     The factors commute pairwise, so ascending l is a convention. */
  HeckeElt<K> u_pm(int i, int sign) const {
    if (i < 0 || i > d_) throw std::invalid_argument("OutOfRange: u_" + std::to_string(i));
    HeckeElt<K> acc = one();
    for (int l = 0; l < i; ++l) {
      HeckeElt<K> f = jm_element(l + 1);
      HeckeElt<K> c = scale(one(), sign > 0 ? par_.Q : -par_.Qi);
      acc = mul(acc, add(f, c));
    }
    return acc;
  }

  /* The block shuffle w_{a,b} in Sigma_{a+b}: k -> b+k for k <= a,
     a+k -> k for k <= b. */
  SignedPerm w_ab(int a, int b) const {
    if (a + b != d_) throw std::invalid_argument("BadSplit: a+b != d");
    SignedPerm w;
    w.window.resize(d_);
    for (int k = 1; k <= a; ++k) w.window[k - 1] = b + k;
    for (int k = 1; k <= b; ++k) w.window[a + k - 1] = k;
    return w;
  }

  /* v_{a,b} = u_b^- T_{w_{a,b}} u_a^+. */
  HeckeElt<K> v_ab(int a, int b) const {
    if (a + b != d_) throw std::invalid_argument("BadSplit: a+b != d");
    return mul(mul(u_pm(b, -1), basis(w_ab(a, b))), u_pm(a, +1));
  }

  /* Basis of the right ideal h H, as echelon vectors over the T_w
     coordinates. */
  std::vector<HeckeElt<K>> right_ideal_basis(const HeckeElt<K>& h) const {
    SpanBasis<K> sb(G_.size());
    for (size_t w = 0; w < G_.size(); ++w) {
      HeckeElt<K> img = h;
      for (int t : G_.word(w)) img = mul_by_gen(img, t, true);
      sb.insert(coords(img));
    }
    std::vector<HeckeElt<K>> out;
    for (auto& row : sb.dense_rows()) out.push_back(from_coords(row));
    return out;
  }

  /* The idempotent e_{a,b}: the element of v_{a,b} H acting as a left
     identity on that right ideal.  Solved as a linear system; a
     singular system signals that f^B_d vanishes in K. */
  HeckeElt<K> e_ab(int a, int b) const {
    HeckeElt<K> v = v_ab(a, b);
    auto basis_elts = right_ideal_basis(v);
    size_t m = basis_elts.size(), N = G_.size();
    Mat<K> A(m * N, m);
    std::vector<K> rhs(m * N, K(0));
    for (size_t i = 0; i < m; ++i) {
      auto bi = coords(basis_elts[i]);
      for (size_t c = 0; c < N; ++c) rhs[i * N + c] = bi[c];
      for (size_t j = 0; j < m; ++j) {
        auto prod = coords(mul(basis_elts[j], basis_elts[i]));
        for (size_t c = 0; c < N; ++c) A(i * N + c, j) = prod[c];
      }
    }
    auto sol = A.solve(rhs);
    if (!sol) throw std::domain_error("NotInvertible: e_{a,b} needs f^B_d invertible");
    HeckeElt<K> e = zero();
    for (size_t j = 0; j < m; ++j) e = add(e, scale(basis_elts[j], (*sol)[j]));
    return e;
  }

 private:
  int d_;
  Params<K> par_;
  const GroupCache& G_;
};

}  // namespace qschur
