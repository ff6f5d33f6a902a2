/*
  The Schur algebra in its Hom-space realization: endomorphisms of the
  direct sum of permutation modules x_mu H, with the basis of
  double-coset-sum maps phi^g_{lambda,mu} : x_mu -> T^g_{lambda,mu}.

  The same machinery serves type B (weights in Lambda^B(n,d), the whole
  group W^B(d)) and type A (compositions of d into n parts, the
  subgroup Sigma_d), selected by the ambient element set.
*/
#pragma once

#include <functional>
#include <numeric>
#include <optional>
#include <string>

#include "qschur/hecke.hpp"

namespace qschur {

struct HomWeight {
  std::string name;
  std::vector<int> gens;  // parabolic generator indices
};

template <class K>
class HomAlgebra {
 public:
  struct Label {
    size_t lam, mu;  // weight indices
    size_t g;        // group element id of the minimal double coset rep
  };

  HomAlgebra(HeckeCtx<K> ctx, std::vector<HomWeight> weights, std::vector<size_t> ambient)
      : ctx_(std::move(ctx)), weights_(std::move(weights)), ambient_(std::move(ambient)) {
    const auto& G = ctx_.group();
    subgroup_.resize(weights_.size());
    reps_.resize(weights_.size());
    for (size_t m = 0; m < weights_.size(); ++m) {
      subgroup_[m] = G.subgroup(weights_[m].gens);
      reps_[m] = G.coset_reps(weights_[m].gens, &ambient_);
    }
    dcs_.resize(weights_.size());
    for (size_t l = 0; l < weights_.size(); ++l) {
      dcs_[l].resize(weights_.size());
      for (size_t m = 0; m < weights_.size(); ++m) {
        dcs_[l][m] = G.double_coset_reps(weights_[l].gens, weights_[m].gens, &ambient_);
        for (size_t g : dcs_[l][m]) {
          label_index_[key(l, m, g)] = labels_.size();
          labels_.push_back({l, m, g});
        }
      }
    }
    // module coordinates: basis x_mu T_k, k over reps_[mu]
    module_offset_.resize(weights_.size() + 1, 0);
    for (size_t m = 0; m < weights_.size(); ++m)
      module_offset_[m + 1] = module_offset_[m] + reps_[m].size();
    ideal_basis_.resize(weights_.size());
    for (size_t m = 0; m < weights_.size(); ++m) {
      HeckeElt<K> x = x_elt(m);
      for (size_t rep : reps_[m]) {
        HeckeElt<K> xk = x;
        for (int t : G.word(rep)) xk = ctx_.mul_by_gen(xk, t, true);
        ideal_basis_[m].push_back(std::move(xk));
      }
    }
  }

  const HeckeCtx<K>& ctx() const { return ctx_; }
  size_t dim() const { return labels_.size(); }
  size_t weight_count() const { return weights_.size(); }
  const HomWeight& weight(size_t m) const { return weights_[m]; }
  const Label& label(size_t i) const { return labels_[i]; }
  const std::vector<size_t>& coset_rep_ids(size_t m) const { return reps_[m]; }
  const std::vector<size_t>& double_coset_ids(size_t l, size_t m) const { return dcs_[l][m]; }
  size_t module_dim() const { return module_offset_.back(); }

  std::optional<size_t> find_label(size_t lam, size_t mu, size_t g) const {
    auto it = label_index_.find(key(lam, mu, g));
    if (it == label_index_.end()) return std::nullopt;
    return it->second;
  }

  HeckeElt<K> x_elt(size_t m) const {
    return ctx_.sum_over_weighted(subgroup_[m],
                                  ctx_.group().id_of(sp_identity(ctx_.rank())));
  }

  HeckeElt<K> coset_sum(size_t l, size_t m, size_t g) const {
    const auto& G = ctx_.group();
    return ctx_.sum_over_weighted(G.double_coset(g, weights_[l].gens, weights_[m].gens), g);
  }

  /* Expand an element y of x_lam H over the basis {x_lam T_k}; each
     basis vector is supported on one right coset with unit
     coefficients, so coordinates are read off at the minimal reps.
     Returns nullopt when y does not lie in x_lam H. */
  std::optional<std::vector<K>> ideal_coords(size_t lam, const HeckeElt<K>& y) const {
    std::vector<K> c(reps_[lam].size(), K(0));
    auto v = ctx_.coords(y);
    for (size_t p = 0; p < reps_[lam].size(); ++p) c[p] = v[reps_[lam][p]];
    // verify the readback reproduces y exactly
    HeckeElt<K> back = ctx_.zero();
    for (size_t p = 0; p < reps_[lam].size(); ++p)
      if (!qschur::is_zero(c[p])) back = ctx_.add(back, ctx_.scale(ideal_basis_[lam][p], c[p]));
    if (!(back == y)) return std::nullopt;
    return c;
  }

  /* The Hom-map x_nu |-> y as coordinates over the phi basis; nullopt
     when y is not a combination of the double coset sums T^h_{mu,nu}. */
  std::optional<std::vector<K>> expand_hom(size_t mu, size_t nu, const HeckeElt<K>& y) const {
    std::vector<K> out(dim(), K(0));
    auto v = ctx_.coords(y);
    HeckeElt<K> back = ctx_.zero();
    for (size_t h : dcs_[mu][nu]) {
      K c = v[h];
      if (qschur::is_zero(c)) continue;
      out[*find_label(mu, nu, h)] = c;
      back = ctx_.add(back, ctx_.scale(coset_sum(mu, nu, h), c));
    }
    if (!(back == y)) return std::nullopt;
    return out;
  }

  /* Product of two basis maps, applying j first; zero unless the inner
     weights match.  Throws on expansion failure (which would signal a
     bug, not a data condition). */
  const std::vector<K>& mul_basis(size_t i, size_t j) const {
    auto it = mul_cache_.find({i, j});
    if (it != mul_cache_.end()) return it->second;
    const Label &A = labels_[i], &B = labels_[j];
    std::vector<K> out(dim(), K(0));
    if (A.mu == B.lam) {
      HeckeElt<K> y0 = coset_sum(B.lam, B.mu, B.g);
      auto c = ideal_coords(A.mu, y0);
      if (!c) throw std::logic_error("ExpansionFailure: T^g not in x_mu H");
      HeckeElt<K> image = ctx_.zero();
      HeckeElt<K> tg = coset_sum(A.lam, A.mu, A.g);
      for (size_t p = 0; p < c->size(); ++p) {
        if (qschur::is_zero((*c)[p])) continue;
        HeckeElt<K> term = tg;
        for (int t : ctx_.group().word(reps_[A.mu][p])) term = ctx_.mul_by_gen(term, t, true);
        image = ctx_.add(image, ctx_.scale(term, (*c)[p]));
      }
      auto e = expand_hom(A.lam, B.mu, image);
      if (!e) throw std::logic_error("ExpansionFailure: product left the phi span");
      out = *e;
    }
    return mul_cache_.emplace(std::pair<size_t, size_t>{i, j}, std::move(out)).first->second;
  }

  std::vector<K> mul(const std::vector<K>& a, const std::vector<K>& b) const {
    std::vector<K> out(dim(), K(0));
    for (size_t i = 0; i < dim(); ++i) {
      if (qschur::is_zero(a[i])) continue;
      for (size_t j = 0; j < dim(); ++j) {
        if (qschur::is_zero(b[j])) continue;
        const auto& prod = mul_basis(i, j);
        K f = a[i] * b[j];
        for (size_t k = 0; k < dim(); ++k)
          if (!qschur::is_zero(prod[k])) out[k] = out[k] + f * prod[k];
      }
    }
    return out;
  }

  /* The identity sum_mu phi^1_{mu,mu}. */
  std::vector<K> unit() const {
    std::vector<K> out(dim(), K(0));
    const auto& G = ctx_.group();
    size_t e = G.id_of(sp_identity(ctx_.rank()));
    for (size_t m = 0; m < weights_.size(); ++m) out[*find_label(m, m, e)] = K(1);
    return out;
  }

  /* The anti-automorphism phi^g_{lam,mu} -> phi^{g^{-1}}_{mu,lam}. */
  std::vector<K> star(const std::vector<K>& a) const {
    const auto& G = ctx_.group();
    std::vector<K> out(dim(), K(0));
    for (size_t i = 0; i < dim(); ++i) {
      if (qschur::is_zero(a[i])) continue;
      const Label& L = labels_[i];
      size_t gi = G.id_of(sp_inverse(G.elem(L.g)));
      auto j = find_label(L.mu, L.lam, gi);
      if (!j) throw std::logic_error("star: inverse rep missing");
      out[*j] = out[*j] + a[i];
    }
    return out;
  }

  /* Matrix of the map on the module (+)_mu x_mu H over the basis
     {x_mu T_k}. */
  Mat<K> module_matrix(const std::vector<K>& a) const {
    Mat<K> M(module_dim(), module_dim());
    for (size_t i = 0; i < dim(); ++i) {
      if (qschur::is_zero(a[i])) continue;
      const Label& L = labels_[i];
      HeckeElt<K> tg = coset_sum(L.lam, L.mu, L.g);
      for (size_t p = 0; p < reps_[L.mu].size(); ++p) {
        HeckeElt<K> img = tg;
        for (int t : ctx_.group().word(reps_[L.mu][p])) img = ctx_.mul_by_gen(img, t, true);
        auto v = ctx_.coords(img);
        for (size_t p2 = 0; p2 < reps_[L.lam].size(); ++p2) {
          const K& c = v[reps_[L.lam][p2]];
          if (!qschur::is_zero(c))
            M(module_offset_[L.lam] + p2, module_offset_[L.mu] + p) =
                M(module_offset_[L.lam] + p2, module_offset_[L.mu] + p) + a[i] * c;
        }
      }
    }
    return M;
  }

  /* Matrix of right multiplication by T_t on the module. */
  Mat<K> right_mul_matrix(int t) const {
    Mat<K> M(module_dim(), module_dim());
    for (size_t m = 0; m < weights_.size(); ++m)
      for (size_t p = 0; p < reps_[m].size(); ++p) {
        HeckeElt<K> x = ctx_.mul_by_gen(ideal_basis_[m][p], t, true);
        auto c = ideal_coords(m, x);
        if (!c) throw std::logic_error("module is not closed under right multiplication");
        for (size_t p2 = 0; p2 < c->size(); ++p2)
          M(module_offset_[m] + p2, module_offset_[m] + p) = (*c)[p2];
      }
    return M;
  }

 private:
  static uint64_t key(size_t l, size_t m, size_t g) {
    return (static_cast<uint64_t>(l) << 40) | (static_cast<uint64_t>(m) << 20) |
           static_cast<uint64_t>(g);
  }

  HeckeCtx<K> ctx_;
  std::vector<HomWeight> weights_;
  std::vector<size_t> ambient_;
  std::vector<std::vector<size_t>> subgroup_, reps_;
  std::vector<std::vector<HeckeElt<K>>> ideal_basis_;
  std::vector<std::vector<std::vector<size_t>>> dcs_;
  std::vector<Label> labels_;
  std::map<uint64_t, size_t> label_index_;
  std::vector<size_t> module_offset_;
  mutable std::map<std::pair<size_t, size_t>, std::vector<K>> mul_cache_;
};

/* Type B: all weights of Lambda^B(n,d) over the whole group W^B(d). */
template <class K>
HomAlgebra<K> phi_algebra_B(int n, int d, const Params<K>& par) {
  HeckeCtx<K> ctx(d, par);
  const auto& G = ctx.group();
  std::vector<size_t> ambient(G.size());
  std::iota(ambient.begin(), ambient.end(), size_t{0});
  std::vector<HomWeight> ws;
  for (const auto& lam : enumerate_weights(n, d))
    ws.push_back({lam.str(), parabolic_of(lam)});
  return HomAlgebra<K>(std::move(ctx), std::move(ws), std::move(ambient));
}

/* Young-subgroup generator indices of a composition of d. */
inline std::vector<int> young_gens(const std::vector<int>& comp, int d) {
  std::vector<bool> removed(d, false);
  int acc = 0;
  for (size_t i = 0; i + 1 < comp.size(); ++i) {
    acc += comp[i];
    if (acc < d) removed[acc] = true;
  }
  std::vector<int> gens;
  for (int t = 1; t < d; ++t)
    if (!removed[t]) gens.push_back(t);
  return gens;
}

/* Type A: compositions of d into n parts, over Sigma_d inside W^B(d). */
template <class K>
HomAlgebra<K> phi_algebra_A(int n, int d, const Params<K>& par) {
  HeckeCtx<K> ctx(d, par);
  const auto& G = ctx.group();
  std::vector<size_t> ambient;
  for (const auto& w : enumerate_symmetric(d)) ambient.push_back(G.id_of(w));
  std::sort(ambient.begin(), ambient.end());
  std::vector<HomWeight> ws;
  for (const auto& comp : compositions_exact(d, n)) {
    std::string name = "(";
    for (size_t i = 0; i < comp.size(); ++i)
      name += std::to_string(comp[i]) + (i + 1 < comp.size() ? "," : "");
    ws.push_back({name + ")", young_gens(comp, d)});
  }
  return HomAlgebra<K>(std::move(ctx), std::move(ws), std::move(ambient));
}

}  // namespace qschur
