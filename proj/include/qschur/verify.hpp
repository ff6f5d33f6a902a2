/*
  Verification suites: the structural lemmas behind the Morita
  decomposition (central elements, vanishing products, idempotent
  ideals, the w-bases and their projections, the block isomorphisms),
  the block isomorphism theorem report, the Hom-realization vs
  centralizer transport, and the Schur-functor idempotents.
*/
#pragma once

#include "qschur/schur.hpp"

namespace qschur {

namespace detail {

template <class K>
std::string pstr(int d, const std::string& field) {
  return "d=" + std::to_string(d) + " field=" + field;
}

inline bool word_sorted(const IndexWord& w) { return std::is_sorted(w.begin(), w.end()); }

}  // namespace detail

/* Hecke-level structural identities for rank d. */
template <class K>
Report verify_dj_hecke(int d, const Params<K>& par, const std::string& field) {
  Report rep;
  HeckeCtx<K> H(d, par);
  const auto& G = H.group();
  const std::string ps = detail::pstr<K>(d, field);

  // centrality of u^+-_d
  {
    bool ok = true;
    for (int sign : {+1, -1}) {
      auto u = H.u_pm(d, sign);
      for (int t = 0; t < d; ++t) ok &= H.mul(u, H.gen(t)) == H.mul(H.gen(t), u);
    }
    rep.add("dj.central_u", ps, ok);
  }

  // u_b^- T_w u_a^+ = 0 whenever a + b > d
  {
    bool ok = true;
    for (int a = 0; a <= d && ok; ++a)
      for (int b = 0; b <= d && ok; ++b) {
        if (a + b <= d) continue;
        auto um = H.u_pm(b, -1), up = H.u_pm(a, +1);
        for (size_t w = 0; w < G.size() && ok; ++w)
          ok &= H.mul(H.mul(um, H.basis(G.elem(w))), up).is_zero();
      }
    rep.add("dj.cross_vanish", ps, ok);
  }

  // T_0 u^+_d = Q^{-1} u^+_d
  {
    auto u = H.u_pm(d, +1);
    rep.add("dj.t0_u", ps, H.mul(H.gen(0), u) == H.scale(u, par.Qi));
  }

  // e_{a,b}: idempotent, left identity, ideal equality e H = v H
  std::vector<HeckeElt<K>> es(d + 1);
  {
    bool idem = true, ideal = true;
    for (int a = 0; a <= d; ++a) {
      int b = d - a;
      auto v = H.v_ab(a, b);
      auto e = H.e_ab(a, b);
      es[a] = e;
      idem &= H.mul(e, e) == e;
      auto vbasis = H.right_ideal_basis(v);
      for (const auto& x : vbasis) idem &= H.mul(e, x) == x;
      std::vector<std::vector<K>> vspan, espan;
      for (const auto& x : vbasis) vspan.push_back(H.coords(x));
      for (const auto& x : H.right_ideal_basis(e)) espan.push_back(H.coords(x));
      ideal &= same_span(vspan, espan, G.size());
    }
    rep.add("dj.idem", ps, idem);
    rep.add("dj.ideal_eq", ps, ideal);
  }

  // e_{a,b} H e_{a,b} = e_{a,b} H(Sigma_b x Sigma_a), with commutation
  // and matching structure constants on the e T_w basis; the Young
  // subgroup splits after the first b letters, matching the block
  // structure of v_{a,b}
  {
    bool ok = true;
    unsigned long long blocksum = 0, expected = 0;
    for (int a = 0; a <= d; ++a) {
      int b = d - a;
      const auto& e = es[a];
      std::vector<int> abgens;
      for (int t = 1; t < d; ++t)
        if (t != b) abgens.push_back(t);
      auto sub = G.subgroup(abgens);
      for (int t : abgens) ok &= H.mul(e, H.gen(t)) == H.mul(H.gen(t), e);
      std::vector<std::vector<K>> ehe, esub;
      for (size_t w = 0; w < G.size(); ++w)
        ehe.push_back(H.coords(H.mul(H.mul(e, H.basis(G.elem(w))), e)));
      std::vector<HeckeElt<K>> esub_elts;
      for (size_t w : sub) {
        esub_elts.push_back(H.mul(e, H.basis(G.elem(w))));
        esub.push_back(H.coords(esub_elts.back()));
      }
      ok &= same_span(ehe, esub, G.size());
      ok &= span_rank(esub, G.size()) == sub.size();
      // (e T_u)(e T_v) = e T_u T_v on the subgroup
      for (size_t iu = 0; iu < sub.size(); ++iu)
        for (size_t iv = 0; iv < sub.size(); ++iv) {
          auto prod = H.mul(esub_elts[iu], esub_elts[iv]);
          auto direct = H.mul(e, H.mul(H.basis(G.elem(sub[iu])), H.basis(G.elem(sub[iv]))));
          ok &= prod == direct;
        }
      blocksum += span_rank(ehe, G.size());
      unsigned long long fac = 1;
      for (int k = 2; k <= a; ++k) fac *= k;
      for (int k = 2; k <= b; ++k) fac *= k;
      expected += fac;
    }
    rep.add("dj.subalg", ps, ok);
    rep.add("dj.morita_dim", ps, blocksum == expected,
            "sum of block dims = " + std::to_string(blocksum));
  }

  return rep;
}

/* Tensor-space structural identities for one (n, d). */
template <class K>
Report verify_dj_tensor(int n, int d, const Params<K>& par, const std::string& field) {
  Report rep;
  HeckeCtx<K> H(d, par);
  {
    TensorCtx<K> V(n, d, par);
    const std::string psn = detail::pstr<K>(d, field) + " n=" + std::to_string(n);
    size_t N = V.words().size();

    // v_I u^+_d = w^+_I and v_I u^-_d = w^-_I
    {
      bool ok = true;
      auto up = H.u_pm(d, +1), um = H.u_pm(d, -1);
      for (const auto& I : all_words(ge0_values(n), d))
        ok &= V.act(V.basis(I), up) == V.w_pm(I, +1);
      for (const auto& I : all_words(gt0_values(n), d))
        ok &= V.act(V.basis(I), um) == V.w_pm(I, -1);
      rep.add("dj.u_action", psn, ok);
    }

    // span equalities and the T_0 eigenvalue on the images
    {
      bool ok = true;
      for (int sign : {+1, -1}) {
        auto u = H.u_pm(d, sign);
        std::vector<std::vector<K>> whole, sub;
        for (const auto& w : V.words()) {
          auto img = V.act(V.basis(w), u);
          whole.push_back(V.coords(img));
          auto t0img = V.act_gen(img, 0);
          ok &= t0img == V.scale(img, sign > 0 ? par.Qi : -par.Q);
        }
        for (const auto& w : all_words(sign > 0 ? ge0_values(n) : gt0_values(n), d))
          sub.push_back(V.coords(V.act(V.basis(w), u)));
        ok &= same_span(whole, sub, N);
      }
      rep.add("dj.u_span", psn, ok);
    }

    // p_d(w^+-_I): exact multiple of v_{-I} for nondecreasing I,
    // invertible v_{-I} coefficient for every I
    {
      bool ok = true;
      auto run = [&](const IndexWord& I, int sign) {
        auto p = V.project(V.w_pm(I, sign), Proj::p_d);
        IndexWord negI = I;
        for (auto& v : negI) v = -v;
        auto it = p.terms.find(negI);
        if (it == p.terms.end() || qschur::is_zero(it->second)) ok = false;
        if (detail::word_sorted(I) && p.terms.size() != 1) ok = false;
      };
      for (const auto& I : all_words(ge0_values(n), d)) run(I, +1);
      for (const auto& I : all_words(gt0_values(n), d)) run(I, -1);
      rep.add("dj.proj_w", psn, ok);
    }

    // v_I -> w^+-_I: bijective onto its span and Sigma_d-equivariant
    {
      bool ok = true;
      for (int sign : {+1, -1}) {
        auto dom = all_words(sign > 0 ? ge0_values(n) : gt0_values(n), d);
        std::vector<std::vector<K>> images;
        for (const auto& I : dom) images.push_back(V.coords(V.w_pm(I, sign)));
        ok &= span_rank(images, N) == dom.size();
        for (const auto& I : dom)
          for (int t = 1; t < d; ++t) {
            TensorElt<K> lhs;
            for (const auto& [w, c] : V.act_gen(V.basis(I), t).terms)
              lhs = V.add(lhs, V.scale(V.w_pm(w, sign), c));
            ok &= lhs == V.act_gen(V.w_pm(I, sign), t);
          }
      }
      rep.add("dj.module_iso", psn, ok);
    }

    // V^d v_{a,b} = (V_{>0}^b (x) V_{>=0}^a) v_{a,b}
    {
      bool ok = true;
      for (int a = 0; a <= d; ++a) {
        int b = d - a;
        auto vab = H.v_ab(a, b);
        std::vector<std::vector<K>> whole, sub;
        for (const auto& w : V.words()) whole.push_back(V.coords(V.act(V.basis(w), vab)));
        for (const auto& J : all_words(gt0_values(n), b))
          for (const auto& I : all_words(ge0_values(n), a)) {
            IndexWord ji = J;
            ji.insert(ji.end(), I.begin(), I.end());
            sub.push_back(V.coords(V.act(V.basis(ji), vab)));
          }
        ok &= same_span(whole, sub, N);
      }
      rep.add("dj.v_span", psn, ok);
    }

    // projections of the shuffled and split products
    {
      bool ok_shuffle = true, ok_split = true;
      for (int a = 0; a <= d; ++a) {
        int b = d - a;
        auto twab = H.basis(H.w_ab(a, b));
        auto vab = H.v_ab(a, b);
        for (const auto& I : all_words(ge0_values(n), a))
          for (const auto& J : all_words(gt0_values(n), b)) {
            bool srt = detail::word_sorted(I) && detail::word_sorted(J);
            IndexWord negI = I, negJ = J;
            for (auto& v : negI) v = -v;
            for (auto& v : negJ) v = -v;

            TensorElt<K> wJ;
            wJ.terms[IndexWord{}] = K(1);
            if (b > 0) wJ = TensorCtx<K>(n, b, par).w_pm(J, -1);
            TensorElt<K> arg;
            for (const auto& [w, c] : wJ.terms) {
              IndexWord full = w;
              full.insert(full.end(), I.begin(), I.end());
              arg.add(full, c);
            }
            auto proj = V.project(V.act(arg, twab), Proj::p_ab_prime, a);
            IndexWord e1 = I;
            e1.insert(e1.end(), negJ.begin(), negJ.end());
            auto it = proj.terms.find(e1);
            if (it == proj.terms.end() || qschur::is_zero(it->second)) ok_shuffle = false;
            if (srt && proj.terms.size() != 1) ok_shuffle = false;

            IndexWord ji = J;
            ji.insert(ji.end(), I.begin(), I.end());
            auto proj2 = V.project(V.act(V.basis(ji), vab), Proj::p_ab, a);
            IndexWord e2 = negI;
            e2.insert(e2.end(), negJ.begin(), negJ.end());
            auto it2 = proj2.terms.find(e2);
            if (it2 == proj2.terms.end() || qschur::is_zero(it2->second)) ok_split = false;
            if (srt && proj2.terms.size() != 1) ok_split = false;
          }
      }
      rep.add("dj.proj_shuffle", psn, ok_shuffle);
      rep.add("dj.proj_split", psn, ok_split);
    }

    // v_I (x) v_J -> (v_J (x) v_I) v_{a,b}: bijective onto the ideal
    // image and equivariant for the split type A actions
    {
      bool ok = true;
      for (int a = 0; a <= d; ++a) {
        int b = d - a;
        auto vab = H.v_ab(a, b);
        Mat<K> M = V.block_map_matrix(a, b, vab);
        ok &= M.rank() == M.cols();
        std::vector<std::vector<K>> cols, ideal;
        for (size_t j = 0; j < M.cols(); ++j) cols.push_back(M.col(j));
        for (const auto& w : V.words()) ideal.push_back(V.coords(V.act(V.basis(w), vab)));
        ok &= same_span(cols, ideal, N);

        auto A1 = action_matrices(ge0_values(n), a, 'A', par);
        auto A2 = action_matrices(gt0_values(n), b, 'A', par);
        size_t D1 = all_words(ge0_values(n), a).size();
        size_t D2 = all_words(gt0_values(n), b).size();
        for (int t = 1; t < a; ++t)
          ok &= M * Mat<K>::kron(A1[t - 1], Mat<K>::identity(D2)) == V.action_matrix(t) * M;
        for (int s = 1; s < b; ++s)
          ok &= M * Mat<K>::kron(Mat<K>::identity(D1), A2[s - 1]) ==
                V.action_matrix(a + s) * M;
      }
      rep.add("dj.block_iso", psn, ok);
    }
  }
  return rep;
}

/* The full structural suite: Hecke identities plus the tensor
   identities for 2 <= n <= nmax. */
template <class K>
Report verify_dj(int d, int nmax, const Params<K>& par, const std::string& field) {
  Report rep = verify_dj_hecke(d, par, field);
  for (int n = 2; n <= nmax; ++n) {
    auto sub = verify_dj_tensor(n, d, par, field);
    rep.checks.insert(rep.checks.end(), sub.checks.begin(), sub.checks.end());
  }
  return rep;
}

/* The block isomorphism theorem at one (n, d): psi ranks, codomain
   commutation, commutant dimensions, injectivity, dimension
   bookkeeping, multiplicativity. */
template <class K>
Report iso_phi_report(int n, int d, const Params<K>& par, const std::string& field) {
  Report rep;
  std::ostringstream ps;
  ps << "n=" << n << " d=" << d << " field=" << field;
  IsoPhi<K> iso(n, d, par);  // throws if any psi is rank-deficient
  rep.add("iso.psi_rank", ps.str(), true);

  int N1 = (n + 1) / 2, N2 = n / 2;
  bool commute_ok = true, commutant_ok = true;
  std::vector<std::vector<Mat<K>>> images;
  for (const auto& s : iso.cent()) images.push_back(iso.apply(s));
  for (int i = 0; i <= d; ++i) {
    auto gens = iso.domain_generators(i);
    for (const auto& img : images)
      for (const auto& A : gens) commute_ok &= img[i] * A == A * img[i];
    auto comm = commutant(gens, iso.block_dim(i));
    commutant_ok &=
        comm.size() == dim_formula(N1, i, 'A') * dim_formula(N2, d - i, 'A');
  }
  rep.add("iso.block_commute", ps.str(), commute_ok);
  rep.add("iso.commutant_dim", ps.str(), commutant_ok);

  std::vector<std::vector<K>> vecs;
  for (const auto& img : images) vecs.push_back(iso.flatten(img));
  size_t dimB = dim_formula(n, d, 'B');
  bool inj = span_rank(vecs, vecs.empty() ? 1 : vecs[0].size()) == iso.cent().size();
  rep.add("iso.injective", ps.str(), inj && iso.cent().size() == dimB,
          "centralizer dim = " + std::to_string(iso.cent().size()));

  unsigned long long sum = 0;
  for (int i = 0; i <= d; ++i)
    sum += dim_formula(N1, i, 'A') * dim_formula(N2, d - i, 'A');
  rep.add("iso.dim_sum", ps.str(), sum == dimB,
          "sum of block dims = " + std::to_string(sum));

  bool mult_ok = true;
  size_t cap = iso.cent().size();
  for (size_t i = 0; i < cap; ++i)
    for (size_t j = 0; j < cap; ++j) {
      auto prod = iso.apply(iso.cent()[i] * iso.cent()[j]);
      for (int b = 0; b <= d; ++b) mult_ok &= prod[b] == images[i][b] * images[j][b];
    }
  rep.add("iso.mult", ps.str(), mult_ok);
  return rep;
}

/* Transport between the Hom realization and the centralizer: an
   equivariant bijection exists and carries the phi basis onto a basis
   of the commutant with identical structure constants. */
template <class K>
Report phi_transport_report(int n, int d, const Params<K>& par, const std::string& field) {
  Report rep;
  std::ostringstream ps;
  ps << "n=" << n << " d=" << d << " field=" << field;
  auto B = phi_algebra_B(n, d, par);
  TensorCtx<K> V(n, d, par);
  size_t N = V.words().size();

  std::vector<Mat<K>> rside, aside;
  for (int t = 0; t < d; ++t) {
    rside.push_back(B.right_mul_matrix(t));
    aside.push_back(V.action_matrix(t));
  }
  bool dims = B.module_dim() == N;
  auto Y = dims ? equivariant_bijection(rside, aside) : std::nullopt;
  rep.add("phi.identification", ps.str(), Y.has_value());
  if (!Y) return rep;
  Mat<K> Yi = *Y->inverse();

  auto cent = centralizer_basis(n, d, 'B', par);
  Mat<K> centmat(N * N, cent.size());
  for (size_t j = 0; j < cent.size(); ++j) {
    auto v = cent[j].vec();
    for (size_t i = 0; i < v.size(); ++i) centmat(i, j) = v[i];
  }

  bool member = true, bij = true, sc = true;
  std::vector<Mat<K>> X;
  std::vector<std::vector<K>> xvecs;
  for (size_t i = 0; i < B.dim(); ++i) {
    std::vector<K> unit(B.dim(), K(0));
    unit[i] = K(1);
    Mat<K> Xi = (*Y) * B.module_matrix(unit) * Yi;
    member &= centmat.solve(Xi.vec()).has_value();
    xvecs.push_back(Xi.vec());
    X.push_back(std::move(Xi));
  }
  bij = span_rank(xvecs, N * N) == B.dim() && B.dim() == cent.size();
  rep.add("phi.membership", ps.str(), member);
  rep.add("phi.bijective", ps.str(), bij);

  // identical structure constants: X_i X_j expands over X with the
  // mul_basis coefficients
  for (size_t i = 0; i < B.dim() && sc; ++i)
    for (size_t j = 0; j < B.dim() && sc; ++j) {
      const auto& coef = B.mul_basis(i, j);
      Mat<K> expect(N, N);
      for (size_t k = 0; k < B.dim(); ++k)
        if (!is_zero(coef[k])) expect = expect + coef[k] * X[k];
      sc &= X[i] * X[j] == expect;
    }
  rep.add("phi.structure_constants", ps.str(), sc);
  return rep;
}

/* Schur-functor idempotent e^B = phi^1_{omega,omega} and the
   rank-embedding idempotents. */
template <class K>
Report schur_functor_report(int n, int d, const Params<K>& par, const std::string& field) {
  Report rep;
  std::ostringstream ps;
  ps << "n=" << n << " d=" << d << " field=" << field;
  int r = n / 2;
  if (r < d) throw std::invalid_argument("RankTooSmall: omega needs floor(n/2) >= d");

  auto B = phi_algebra_B(n, d, par);
  auto weights = enumerate_weights(n, d);
  CompositionB omega;
  omega.n = n;
  omega.d = d;
  omega.a0 = n % 2 == 1 ? 1 : 0;
  omega.pos.assign(r, 0);
  for (int i = 0; i < d; ++i) omega.pos[i] = 1;
  size_t om = std::find(weights.begin(), weights.end(), omega) - weights.begin();

  const auto& G = B.ctx().group();
  size_t eid = G.id_of(sp_identity(d));
  std::vector<K> e(B.dim(), K(0));
  e[*B.find_label(om, om, eid)] = K(1);
  rep.add("sf.idempotent", ps.str(), B.mul(e, e) == e);

  // e S e is spanned by the (omega, omega, g) labels: |W^B(d)| of them
  bool compress = true;
  size_t count = 0;
  for (size_t i = 0; i < B.dim(); ++i) {
    std::vector<K> unit(B.dim(), K(0));
    unit[i] = K(1);
    auto ese = B.mul(e, B.mul(unit, e));
    const auto& L = B.label(i);
    if (L.lam == om && L.mu == om) {
      compress &= ese == unit;
      ++count;
    } else {
      bool zero = true;
      for (const auto& c : ese) zero &= is_zero(c);
      compress &= zero;
    }
  }
  compress &= count == G.size();
  rep.add("sf.compression", ps.str(), compress,
          "dim eSe = " + std::to_string(count));

  // structure constants of e S e match the Hecke algebra under
  // phi^g <-> T_g
  HeckeCtx<K> H(d, par);
  bool sc = true;
  for (size_t g1 = 0; g1 < G.size() && sc; ++g1)
    for (size_t g2 = 0; g2 < G.size() && sc; ++g2) {
      const auto& prod = B.mul_basis(*B.find_label(om, om, g1), *B.find_label(om, om, g2));
      auto hprod = H.coords(H.mul(H.basis(G.elem(g1)), H.basis(G.elem(g2))));
      for (size_t h = 0; h < G.size() && sc; ++h) {
        auto lab = B.find_label(om, om, h);
        sc &= prod[*lab] == hprod[h];
      }
      for (size_t k = 0; k < B.dim() && sc; ++k) {
        const auto& L = B.label(k);
        if (L.lam != om || L.mu != om) sc &= is_zero(prod[k]);
      }
    }
  rep.add("sf.hecke_match", ps.str(), sc);

  // bimodule dimension: e S has one basis map per (mu, coset), as many
  // as the word basis of the tensor space
  unsigned long long cosets = 0;
  for (size_t m = 0; m < weights.size(); ++m) cosets += B.coset_rep_ids(m).size();
  unsigned long long nd = 1;
  for (int t = 0; t < d; ++t) nd *= n;
  rep.add("sf.bimodule_dim", ps.str(), cosets == nd,
          "module dim = " + std::to_string(cosets));
  return rep;
}

/* e = sum over embedded weights of phi^1_{gamma,gamma} inside
   S^B(n',d); compression reproduces S^B(n,d) label by label. */
template <class K>
Report rank_embed_report(int n, int n_prime, int d, const Params<K>& par,
                         const std::string& field) {
  Report rep;
  std::ostringstream ps;
  ps << "n=" << n << " n'=" << n_prime << " d=" << d << " field=" << field;
  auto Bsmall = phi_algebra_B(n, d, par);
  auto Bbig = phi_algebra_B(n_prime, d, par);
  auto wsmall = enumerate_weights(n, d);
  auto wbig = enumerate_weights(n_prime, d);

  std::vector<size_t> emb(wsmall.size());
  for (size_t i = 0; i < wsmall.size(); ++i) {
    auto target = weight_embed(wsmall[i], n_prime);
    emb[i] = std::find(wbig.begin(), wbig.end(), target) - wbig.begin();
    if (emb[i] == wbig.size()) throw std::logic_error("embedded weight missing");
  }

  const auto& G = Bbig.ctx().group();
  size_t eid = G.id_of(sp_identity(d));
  std::vector<K> e(Bbig.dim(), K(0));
  for (size_t i = 0; i < wsmall.size(); ++i) e[*Bbig.find_label(emb[i], emb[i], eid)] = K(1);
  rep.add("sf.embed_idempotent", ps.str(), Bbig.mul(e, e) == e);

  // label correspondence (lam, mu, g) <-> (emb lam, emb mu, g)
  bool match = true;
  size_t compressed = 0;
  for (size_t i = 0; i < Bbig.dim(); ++i) {
    std::vector<K> unit(Bbig.dim(), K(0));
    unit[i] = K(1);
    auto ese = Bbig.mul(e, Bbig.mul(unit, e));
    const auto& L = Bbig.label(i);
    bool inside = false;
    for (size_t a = 0; a < wsmall.size() && !inside; ++a)
      for (size_t b = 0; b < wsmall.size() && !inside; ++b)
        inside = emb[a] == L.lam && emb[b] == L.mu;
    if (inside) {
      match &= ese == unit;
      ++compressed;
    } else {
      bool zero = true;
      for (const auto& c : ese) zero &= is_zero(c);
      match &= zero;
    }
  }
  match &= compressed == Bsmall.dim();
  rep.add("sf.embed_compression", ps.str(), match,
          "dim eSe = " + std::to_string(compressed));

  // structure constants agree under the correspondence
  bool sc = true;
  auto big_label = [&](size_t i) {
    const auto& L = Bsmall.label(i);
    return *Bbig.find_label(emb[L.lam], emb[L.mu], L.g);
  };
  for (size_t i = 0; i < Bsmall.dim() && sc; ++i)
    for (size_t j = 0; j < Bsmall.dim() && sc; ++j) {
      const auto& small = Bsmall.mul_basis(i, j);
      const auto& big = Bbig.mul_basis(big_label(i), big_label(j));
      std::vector<K> mapped(Bbig.dim(), K(0));
      for (size_t k = 0; k < Bsmall.dim(); ++k) mapped[big_label(k)] = small[k];
      sc &= mapped == big;
    }
  rep.add("sf.embed_structure", ps.str(), sc);
  return rep;
}

}  // namespace qschur
