/*
  The tensor space V^{(x)d} over the index alphabet I(n), with the right
  Hecke action, the sign-split subspaces, the w^+-_I bases, coordinate
  projections, and the block isomorphism matrices built from v_{a,b}.
*/
#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <vector>

#include "qschur/hecke.hpp"
#include "qschur/linalg.hpp"

namespace qschur {

using IndexWord = std::vector<int>;

/* I(n) = [-r,r] over Z, with 0 removed when n is even. */
inline std::vector<int> index_values(int n) {
  if (n < 1) throw std::invalid_argument("InvalidIndex: n must be positive");
  std::vector<int> out;
  int r = n / 2;
  for (int v = -r; v <= r; ++v) {
    if (v == 0 && n % 2 == 0) continue;
    out.push_back(v);
  }
  return out;
}

inline std::vector<int> ge0_values(int n) {
  std::vector<int> out;
  for (int v : index_values(n))
    if (v >= 0) out.push_back(v);
  return out;
}
inline std::vector<int> gt0_values(int n) {
  std::vector<int> out;
  for (int v : index_values(n))
    if (v > 0) out.push_back(v);
  return out;
}

inline std::vector<IndexWord> all_words(const std::vector<int>& alphabet, int d) {
  std::vector<IndexWord> out{{}};
  for (int t = 0; t < d; ++t) {
    std::vector<IndexWord> next;
    next.reserve(out.size() * alphabet.size());
    for (const auto& w : out)
      for (int v : alphabet) {
        IndexWord u = w;
        u.push_back(v);
        next.push_back(std::move(u));
      }
    out = std::move(next);
  }
  return out;
}

template <class K>
struct TensorElt {
  std::map<IndexWord, K> terms;

  bool is_zero() const { return terms.empty(); }
  void add(const IndexWord& w, const K& c) {
    if (qschur::is_zero(c)) return;
    auto it = terms.find(w);
    if (it == terms.end()) {
      terms[w] = c;
    } else {
      it->second = it->second + c;
      if (qschur::is_zero(it->second)) terms.erase(it);
    }
  }
  friend bool operator==(const TensorElt& a, const TensorElt& b) {
    return a.terms == b.terms;
  }
  friend bool operator!=(const TensorElt& a, const TensorElt& b) { return !(a == b); }
};

enum class Proj { p_d, p_ab, p_ab_prime };

template <class K>
class TensorCtx {
 public:
  TensorCtx(int n, int d, Params<K> par)
      : n_(n), d_(d), par_(std::move(par)), values_(index_values(n)) {}

  int n() const { return n_; }
  int d() const { return d_; }
  int r() const { return n_ / 2; }
  const Params<K>& params() const { return par_; }
  // the word basis tables are built on first use
  const std::vector<IndexWord>& words() const {
    ensure_words();
    return words_;
  }
  size_t word_index(const IndexWord& w) const {
    ensure_words();
    return index_.at(w);
  }

  TensorElt<K> basis(const IndexWord& w) const {
    check_word(w);
    TensorElt<K> x;
    x.terms[w] = K(1);
    return x;
  }

  TensorElt<K> scale(const TensorElt<K>& x, const K& c) const {
    TensorElt<K> r;
    if (qschur::is_zero(c)) return r;
    for (const auto& [w, cc] : x.terms) r.add(w, c * cc);
    return r;
  }
  TensorElt<K> add(const TensorElt<K>& a, const TensorElt<K>& b) const {
    TensorElt<K> r = a;
    for (const auto& [w, c] : b.terms) r.add(w, c);
    return r;
  }
  TensorElt<K> sub(const TensorElt<K>& a, const TensorElt<K>& b) const {
    TensorElt<K> r = a;
    for (const auto& [w, c] : b.terms) r.add(w, -c);
    return r;
  }

  /* Right action of the generator T_t, the exact case split on
     (mu_t, mu_{t+1}) for t >= 1 and on the sign of mu_1 for t = 0. */
  TensorElt<K> act_gen(const TensorElt<K>& x, int t) const {
    if (t < 0 || t >= d_)
      throw std::invalid_argument("BadGenerator: T_" + std::to_string(t));
    TensorElt<K> r;
    for (const auto& [w, c] : x.terms) {
      if (t == 0) {
        IndexWord sw = w;
        sw[0] = -sw[0];
        if (w[0] > 0) {
          r.add(sw, c);
        } else if (w[0] == 0) {
          r.add(w, c * par_.Qi);
        } else {
          r.add(sw, c);
          r.add(w, c * (par_.Qi - par_.Q));
        }
      } else {
        IndexWord sw = w;
        std::swap(sw[t - 1], sw[t]);
        if (w[t - 1] < w[t]) {
          r.add(sw, c);
        } else if (w[t - 1] == w[t]) {
          r.add(w, c * par_.qi);
        } else {
          r.add(sw, c);
          r.add(w, c * (par_.qi - par_.q));
        }
      }
    }
    return r;
  }

  TensorElt<K> act_word(const TensorElt<K>& x, const std::vector<int>& gens) const {
    TensorElt<K> r = x;
    for (int t : gens) r = act_gen(r, t);
    return r;
  }

  TensorElt<K> act(const TensorElt<K>& x, const HeckeElt<K>& h) const {
    if (h.d != d_) throw std::invalid_argument("RankMismatch: tensor action");
    const GroupCache& G = group_cache(d_);
    TensorElt<K> r;
    for (const auto& [w, c] : h.terms) {
      TensorElt<K> y = act_word(x, G.word(G.id_of(SignedPerm{w})));
      for (const auto& [u, cc] : y.terms) r.add(u, c * cc);
    }
    return r;
  }

  /* Single-site elements w^+-_{i(j)}. */
  TensorElt<K> w_site(int i, int j, int sign) const {
    TensorElt<K> x;
    if (sign > 0) {
      if (i == 0) {
        K c = par_.Qi;
        for (int k = 0; k < 2 * j; ++k) c = c * par_.qi;
        x.add({0}, c + par_.Q);
      } else {
        K c(1);
        for (int k = 0; k < j; ++k) c = c * par_.qi;
        x.add({-i}, c);
        x.add({i}, par_.Q);
      }
    } else {
      if (i == 0) return x;  // w^-_{0(j)} = 0
      K c(1);
      for (int k = 0; k < j; ++k) c = c * par_.qi;
      x.add({-i}, c);
      x.add({i}, -par_.Qi);
    }
    return x;
  }

  /* w^+-_I for arbitrary I: sort I stably by the shortest permutation g,
     build the nondecreasing case site by site (the j-offset counts
     earlier equal entries), then act by T_g. */
  TensorElt<K> w_pm(const IndexWord& I, int sign) const {
    if (static_cast<int>(I.size()) != d_) throw std::invalid_argument("InvalidIndex");
    for (int v : I) {
      // a zero entry is valid for the minus sign but the site element,
      // and hence the whole product, is zero
      bool ok = v >= 0 && v <= r() && (sign < 0 || n_ % 2 == 1 || v >= 1);
      if (!ok) throw std::invalid_argument("InvalidIndex: entry out of range for w^+-");
    }
    IndexWord sorted = I;
    std::sort(sorted.begin(), sorted.end());
    SignedPerm g = sorting_perm(sorted, I);
    TensorElt<K> base;
    base.terms[{}] = K(1);
    std::map<int, int> seen;
    for (int t = 0; t < d_; ++t) {
      TensorElt<K> site = w_site_raw(sorted[t], seen[sorted[t]]++, sign);
      base = tensor_concat(base, site);
    }
    return act_word(base, reduced_word(g));
  }

  bool word_in(const IndexWord& w, Proj kind, int a = 0) const {
    switch (kind) {
      case Proj::p_d:
        for (int v : w)
          if (v > 0) return false;
        return true;
      case Proj::p_ab:
        for (int t = 0; t < d_; ++t)
          if (t < a ? w[t] > 0 : w[t] >= 0) return false;
        return true;
      case Proj::p_ab_prime:
        for (int t = a; t < d_; ++t)
          if (w[t] >= 0) return false;
        return true;
    }
    return false;
  }

  /* Coordinate projection onto the subspace basis named by `kind`:
     p_d kills any word with a positive entry, p_{a,b} keeps words with
     the first a entries <= 0 and the rest < 0, p'_{a,b} constrains only
     the tail. */
  TensorElt<K> project(const TensorElt<K>& x, Proj kind, int a = 0) const {
    if (kind != Proj::p_d && (a < 0 || a > d_)) throw std::invalid_argument("BadSplit");
    TensorElt<K> r;
    for (const auto& [w, c] : x.terms)
      if (word_in(w, kind, a)) r.add(w, c);
    return r;
  }

  std::vector<K> coords(const TensorElt<K>& x) const {
    ensure_words();
    std::vector<K> v(words_.size(), K(0));
    for (const auto& [w, c] : x.terms) v[index_.at(w)] = c;
    return v;
  }
  TensorElt<K> from_coords(const std::vector<K>& v) const {
    ensure_words();
    TensorElt<K> x;
    for (size_t i = 0; i < v.size(); ++i)
      if (!qschur::is_zero(v[i])) x.terms[words_[i]] = v[i];
    return x;
  }

  /* Matrix of v_mu -> v_mu T_t over the word basis. */
  Mat<K> action_matrix(int t) const {
    ensure_words();
    Mat<K> A(words_.size(), words_.size());
    for (size_t j = 0; j < words_.size(); ++j) {
      auto img = coords(act_gen(basis(words_[j]), t));
      for (size_t i = 0; i < words_.size(); ++i) A(i, j) = img[i];
    }
    return A;
  }

  /* Matrix of v_I (x) v_J -> (v_J (x) v_I) v_{a,b}, columns indexed by
     pairs (I, J) with I over the >=0 alphabet to the power a and J over
     the >0 alphabet to the power b (row-major in that order). */
  Mat<K> block_map_matrix(int a, int b, const HeckeElt<K>& vab) const {
    if (a + b != d_) throw std::invalid_argument("BadSplit: a+b != d");
    ensure_words();
    auto Is = all_words(ge0_values(n_), a);
    auto Js = all_words(gt0_values(n_), b);
    Mat<K> M(words_.size(), Is.size() * Js.size());
    size_t col = 0;
    for (const auto& I : Is)
      for (const auto& J : Js) {
        IndexWord ji = J;
        ji.insert(ji.end(), I.begin(), I.end());
        auto img = coords(act(basis(ji), vab));
        for (size_t i = 0; i < words_.size(); ++i) M(i, col) = img[i];
        ++col;
      }
    return M;
  }

  /* tensor concatenation (x (x) y), coefficients multiplied */
  static TensorElt<K> tensor_concat(const TensorElt<K>& x, const TensorElt<K>& y) {
    TensorElt<K> r;
    for (const auto& [w1, c1] : x.terms)
      for (const auto& [w2, c2] : y.terms) {
        IndexWord w = w1;
        w.insert(w.end(), w2.begin(), w2.end());
        r.add(w, c1 * c2);
      }
    return r;
  }

 private:
  void check_word(const IndexWord& w) const {
    if (static_cast<int>(w.size()) != d_) throw std::invalid_argument("InvalidIndex");
    for (int v : w)
      if (!std::binary_search(values_.begin(), values_.end(), v))
        throw std::invalid_argument("InvalidIndex");
  }

  TensorElt<K> w_site_raw(int i, int j, int sign) const { return w_site(i, j, sign); }

  /* The shortest permutation g with sorted . g = target, ties resolved
     stably. */
  static SignedPerm sorting_perm(const IndexWord& sorted, const IndexWord& target) {
    int d = static_cast<int>(target.size());
    SignedPerm g;
    g.window.resize(d);
    std::map<int, int> next;
    for (int t = 0; t < d; ++t) {
      int v = target[t];
      int from = next.count(v) ? next[v] : 0;
      int pos = -1;
      for (int s = from; s < d; ++s)
        if (sorted[s] == v) {
          pos = s;
          break;
        }
      next[v] = pos + 1;
      g.window[t] = pos + 1;
    }
    return g;
  }

  void ensure_words() const {
    if (words_built_) return;
    words_ = all_words(values_, d_);
    for (size_t i = 0; i < words_.size(); ++i) index_[words_[i]] = i;
    words_built_ = true;
  }

  int n_, d_;
  Params<K> par_;
  std::vector<int> values_;
  mutable bool words_built_ = false;
  mutable std::vector<IndexWord> words_;
  mutable std::map<IndexWord, size_t> index_;
};

}  // namespace qschur
