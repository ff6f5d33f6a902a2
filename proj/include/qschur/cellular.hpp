/*
  Cell datum machinery: the basis/involution/triangularity axioms, Gram
  forms and the quasi-heredity criterion; the semistandard (Murphy)
  datum for the type A Schur algebras in the Hom realization; the
  product datum for the type B algebra assembled blockwise through the
  isomorphism theorem; and the two-dimensional specialization example
  where the Gram form vanishes.
*/
#pragma once

#include "qschur/tableaux.hpp"
#include "qschur/verify.hpp"

namespace qschur {

template <class K>
struct CellDatum {
  // shapes of the poset, with the strict cell order
  std::vector<std::string> shape_names;
  std::vector<std::vector<bool>> less;  // less[i][j]: shape i strictly below j
  std::vector<size_t> msize;
  // C[lam][s * msize[lam] + t] = coordinates in the ambient algebra
  std::vector<std::vector<std::vector<K>>> C;
  size_t alg_dim = 0;
  std::function<std::vector<K>(const std::vector<K>&, const std::vector<K>&)> mul;
  std::function<std::vector<K>(const std::vector<K>&)> star;
};

template <class K>
struct CellReport {
  bool c1 = false, c2 = false, c3 = false, gram_shape = false;
  std::vector<Mat<K>> gram;       // one Gram matrix per shape
  bool quasi_hereditary = false;  // all Gram forms nonzero
  std::string failure;

  bool axioms() const { return c1 && c2 && c3 && gram_shape; }
};

/* Check (C1)-(C3), extract the Gram forms, and decide the
   quasi-heredity criterion (every Gram form nonzero). */
template <class K>
CellReport<K> verify_cell_axioms(const CellDatum<K>& D) {
  CellReport<K> rep;
  size_t L = D.shape_names.size();

  // flatten the cellular basis and index it
  struct Entry {
    size_t lam, s, t;
  };
  std::vector<Entry> entries;
  std::vector<std::vector<K>> flat;
  for (size_t l = 0; l < L; ++l)
    for (size_t s = 0; s < D.msize[l]; ++s)
      for (size_t t = 0; t < D.msize[l]; ++t) {
        entries.push_back({l, s, t});
        flat.push_back(D.C[l][s * D.msize[l] + t]);
      }

  // (C1): the right count and full rank
  if (flat.size() != D.alg_dim) {
    rep.failure = "C1: basis count " + std::to_string(flat.size());
    return rep;
  }
  Mat<K> Bmat(D.alg_dim, D.alg_dim);
  for (size_t j = 0; j < flat.size(); ++j)
    for (size_t i = 0; i < D.alg_dim; ++i) Bmat(i, j) = flat[j][i];
  auto Binv = Bmat.inverse();
  if (!Binv) {
    rep.failure = "C1: cellular basis is not a basis";
    return rep;
  }
  rep.c1 = true;

  // (C2): star swaps the labels
  rep.c2 = true;
  for (size_t l = 0; l < L && rep.c2; ++l)
    for (size_t s = 0; s < D.msize[l] && rep.c2; ++s)
      for (size_t t = 0; t < D.msize[l] && rep.c2; ++t)
        rep.c2 = D.star(D.C[l][s * D.msize[l] + t]) == D.C[l][t * D.msize[l] + s];
  if (!rep.c2) {
    rep.failure = "C2: involution mismatch";
    return rep;
  }

  auto expand = [&](const std::vector<K>& x) { return Binv->apply(x); };

  // (C3): for every ambient basis element a, a C^l_{s,t} lies in
  // span{C^l_{s',t}} + lower cells, with r_a(s',s) independent of t
  rep.c3 = true;
  for (size_t ak = 0; ak < D.alg_dim && rep.c3; ++ak) {
    std::vector<K> a(D.alg_dim, K(0));
    a[ak] = K(1);
    for (size_t l = 0; l < L && rep.c3; ++l) {
      // r[s'][s] extracted at t = 0 and compared across t
      std::vector<std::vector<K>> r(D.msize[l],
                                    std::vector<K>(D.msize[l], K(0)));
      for (size_t t = 0; t < D.msize[l] && rep.c3; ++t)
        for (size_t s = 0; s < D.msize[l] && rep.c3; ++s) {
          auto prod = expand(D.mul(a, D.C[l][s * D.msize[l] + t]));
          for (size_t e = 0; e < entries.size() && rep.c3; ++e) {
            if (is_zero(prod[e])) continue;
            const auto& E = entries[e];
            if (E.lam == l && E.t == t) {
              if (t == 0)
                r[E.s][s] = prod[e];
              else if (!(r[E.s][s] == prod[e]))
                rep.c3 = false;
            } else if (!D.less[E.lam][l]) {
              rep.c3 = false;
            }
          }
        }
    }
  }
  if (!rep.c3) {
    rep.failure = "C3: triangularity fails";
    return rep;
  }

  // Gram forms: C_ss C_tt = phi(s,t) C_st modulo lower cells
  rep.gram_shape = true;
  for (size_t l = 0; l < L; ++l) {
    Mat<K> Gm(D.msize[l], D.msize[l]);
    for (size_t s = 0; s < D.msize[l] && rep.gram_shape; ++s)
      for (size_t t = 0; t < D.msize[l] && rep.gram_shape; ++t) {
        auto prod = expand(
            D.mul(D.C[l][s * D.msize[l] + s], D.C[l][t * D.msize[l] + t]));
        for (size_t e = 0; e < entries.size() && rep.gram_shape; ++e) {
          if (is_zero(prod[e])) continue;
          const auto& E = entries[e];
          if (E.lam == l) {
            if (E.s == s && E.t == t)
              Gm(s, t) = prod[e];
            else
              rep.gram_shape = false;
          } else if (!D.less[E.lam][l]) {
            rep.gram_shape = false;
          }
        }
      }
    rep.gram.push_back(std::move(Gm));
  }
  if (!rep.gram_shape) {
    rep.failure = "Gram: off-diagonal cell terms";
    return rep;
  }
  rep.quasi_hereditary = true;
  for (const auto& Gm : rep.gram) {
    bool nonzero = false;
    for (size_t i = 0; i < Gm.rows(); ++i)
      for (size_t j = 0; j < Gm.cols(); ++j) nonzero |= !is_zero(Gm(i, j));
    rep.quasi_hereditary &= nonzero;
  }
  return rep;
}

/* The Murphy (semistandard) datum for S^A(n,d) over the Hom
   realization.  Shapes are partitions of d with at most n parts; the
   cell order places the more dominant shape lower; M(lambda) collects
   semistandard tableaux over all weights. */
template <class K>
struct MurphyDatum {
  std::shared_ptr<HomAlgebra<K>> alg;
  CellDatum<K> datum;
  std::vector<Partition> shapes;
  // per shape: list of (weight index, semistandard tableau)
  std::vector<std::vector<std::pair<size_t, Tableau>>> labels;
};

template <class K>
MurphyDatum<K> murphy_datum(int n, int d, const Params<K>& par) {
  if (n > 2 || d > 3) throw std::invalid_argument("SizeGuard: murphy_datum needs n <= 2, d <= 3");
  MurphyDatum<K> M;
  M.alg = std::make_shared<HomAlgebra<K>>(phi_algebra_A(n, d, par));
  const auto& A = *M.alg;
  auto comps = compositions_exact(d, n);
  HeckeCtx<K> H(d, par);
  const auto& G = H.group();

  M.shapes = partitions_max_parts(d, n);
  CellDatum<K>& D = M.datum;
  D.alg_dim = A.dim();
  D.mul = [alg = M.alg](const std::vector<K>& x, const std::vector<K>& y) {
    return alg->mul(x, y);
  };
  D.star = [alg = M.alg](const std::vector<K>& x) { return alg->star(x); };

  size_t L = M.shapes.size();
  D.less.assign(L, std::vector<bool>(L, false));
  for (size_t i = 0; i < L; ++i) {
    std::string nm = "(";
    for (size_t k = 0; k < M.shapes[i].size(); ++k)
      nm += std::to_string(M.shapes[i][k]) + (k + 1 < M.shapes[i].size() ? "," : "");
    D.shape_names.push_back(nm + ")");
    for (size_t j = 0; j < L; ++j)
      D.less[i][j] = i != j && dominates(M.shapes[i], M.shapes[j]);
  }

  M.labels.resize(L);
  for (size_t l = 0; l < L; ++l)
    for (size_t m = 0; m < comps.size(); ++m)
      for (const auto& T : semistandard_tableaux(M.shapes[l], comps[m]))
        M.labels[l].push_back({m, T});

  // x_lambda for the shape's Young subgroup
  auto shape_sym = [&](const Partition& shape) {
    std::vector<int> comp(shape.begin(), shape.end());
    return H.sum_over_weighted(G.subgroup(young_gens(comp, d)),
                               G.id_of(sp_identity(d)));
  };

  D.msize.resize(L);
  D.C.resize(L);
  for (size_t l = 0; l < L; ++l) {
    D.msize[l] = M.labels[l].size();
    D.C[l].resize(D.msize[l] * D.msize[l]);
    auto xl = shape_sym(M.shapes[l]);
    auto stds = standard_tableaux(M.shapes[l]);
    for (size_t si = 0; si < D.msize[l]; ++si)
      for (size_t ti = 0; ti < D.msize[l]; ++ti) {
        const auto& [mu, S] = M.labels[l][si];
        const auto& [nu, T] = M.labels[l][ti];
        HeckeElt<K> m = H.zero();
        for (const auto& s : stds) {
          if (content_collapse(s, comps[mu]) != S) continue;
          for (const auto& t : stds) {
            if (content_collapse(t, comps[nu]) != T) continue;
            auto ds = tableau_perm(M.shapes[l], s);
            auto dt = tableau_perm(M.shapes[l], t);
            // the q^{-l} factors keep the pair sum inside the
            // double-coset span, matching the weighted symmetrizers
            K f(1);
            for (int k = 0; k < length(ds) + length(dt); ++k) f = f * par.qi;
            HeckeElt<K> term = H.mul(H.basis(sp_inverse(ds)), xl);
            term = H.mul(term, H.basis(dt));
            m = H.add(m, H.scale(term, f));
          }
        }
        auto coords = A.expand_hom(mu, nu, m);
        if (!coords)
          throw std::logic_error("AxiomFailure: Murphy element outside the phi span");
        D.C[l][si * D.msize[l] + ti] = *coords;
      }
  }
  return M;
}

/* The two-dimensional algebra K[t]/(t^2 = (Q^{-1}-Q) t + 1) with its
   standard cellular structure; the Gram form of the lower cell is
   Q^{-2} + 1, which vanishes exactly when that polynomial does. */
template <class K>
CellDatum<K> two_dim_specialization_datum(const Params<K>& par) {
  CellDatum<K> D;
  D.alg_dim = 2;  // basis {1, t}
  D.shape_names = {"(2)", "(1,1)"};
  D.less = {{false, true}, {false, false}};  // (2) below (1,1)
  D.msize = {1, 1};
  D.C = {{{K(1), par.Qi}}, {{K(1), K(0)}}};  // 1 + Q^{-1} t and 1
  K rel0 = K(1), rel1 = par.Qi - par.Q;      // t^2 = rel1 t + rel0
  D.mul = [rel0, rel1](const std::vector<K>& x, const std::vector<K>& y) {
    // (x0 + x1 t)(y0 + y1 t)
    std::vector<K> out(2, K(0));
    out[0] = x[0] * y[0] + x[1] * y[1] * rel0;
    out[1] = x[0] * y[1] + x[1] * y[0] + x[1] * y[1] * rel1;
    return out;
  };
  D.star = [](const std::vector<K>& x) { return x; };
  return D;
}

/* Equivariant bijection between the Hom-model module of a type A
   algebra and its tensor space, with its inverse.  For d <= 1 there are
   no generators and the identity serves. */
template <class K>
std::pair<Mat<K>, Mat<K>> hom_to_tensor_bijection(const HomAlgebra<K>& A,
                                                  const std::vector<int>& alphabet, int D,
                                                  const Params<K>& par) {
  size_t N = 1;
  for (int t = 0; t < D; ++t) N *= alphabet.size();
  if (A.module_dim() != N)
    throw std::logic_error("module and tensor dimensions disagree");
  if (D <= 1) {
    auto I = Mat<K>::identity(N);
    return {I, I};
  }
  std::vector<Mat<K>> rside;
  auto aside = action_matrices(alphabet, D, 'A', par);
  for (int t = 1; t < D; ++t) rside.push_back(A.right_mul_matrix(t));
  auto Y = equivariant_bijection(rside, aside);
  if (!Y) throw std::logic_error("no equivariant bijection found");
  return {*Y, *Y->inverse()};
}

/* Product datum for S^B(n,d): blockwise tensor products of component
   Murphy data, living on the block coordinates of the isomorphism
   theorem.  The returned transport report ties the block algebra to
   the centralizer realization through the inverse of the block map. */
template <class K>
struct ProductDatum {
  CellDatum<K> datum;
  Report transport;
  // per shape (i, lam1, lam2): component shape indices for Gram
  // factorization checks
  std::vector<std::tuple<int, size_t, size_t>> shape_origin;
  std::vector<Mat<K>> gram1, gram2;  // component Gram matrices, aligned
};

template <class K>
ProductDatum<K> product_datum(int n, int d, const Params<K>& par,
                              const std::string& field) {
  ProductDatum<K> P;
  std::ostringstream ps;
  ps << "n=" << n << " d=" << d << " field=" << field;
  int N1 = (n + 1) / 2, N2 = n / 2;

  // component Murphy data and their block offsets, shared with the
  // returned multiplication/involution closures
  struct Parts {
    std::vector<MurphyDatum<K>> c1, c2;
    std::vector<size_t> off;
  };
  auto parts = std::make_shared<Parts>();
  parts->off.assign(d + 2, 0);
  for (int i = 0; i <= d; ++i) {
    parts->c1.push_back(murphy_datum(N1, i, par));
    parts->c2.push_back(murphy_datum(N2, d - i, par));
    parts->off[i + 1] = parts->off[i] + parts->c1[i].alg->dim() * parts->c2[i].alg->dim();
  }
  const auto& c1 = parts->c1;
  const auto& c2 = parts->c2;
  const auto& block_offset = parts->off;
  size_t dimB = block_offset[d + 1];

  CellDatum<K>& D = P.datum;
  D.alg_dim = dimB;

  // block tensor algebra structure
  auto mul = [parts, d, dimB](const std::vector<K>& x, const std::vector<K>& y) {
    std::vector<K> out(dimB, K(0));
    for (int i = 0; i <= d; ++i) {
      const auto& A1 = *parts->c1[i].alg;
      const auto& A2 = *parts->c2[i].alg;
      size_t D2 = A2.dim(), off = parts->off[i];
      for (size_t a = 0; a < A1.dim(); ++a)
        for (size_t b = 0; b < D2; ++b) {
          const K& xv = x[off + a * D2 + b];
          if (is_zero(xv)) continue;
          for (size_t a2 = 0; a2 < A1.dim(); ++a2)
            for (size_t b2 = 0; b2 < D2; ++b2) {
              const K& yv = y[off + a2 * D2 + b2];
              if (is_zero(yv)) continue;
              const auto& p1 = A1.mul_basis(a, a2);
              const auto& p2 = A2.mul_basis(b, b2);
              for (size_t k1 = 0; k1 < A1.dim(); ++k1) {
                if (is_zero(p1[k1])) continue;
                for (size_t k2 = 0; k2 < D2; ++k2)
                  if (!is_zero(p2[k2]))
                    out[off + k1 * D2 + k2] =
                        out[off + k1 * D2 + k2] + xv * yv * p1[k1] * p2[k2];
              }
            }
        }
    }
    return out;
  };
  D.mul = mul;
  D.star = [parts, d, dimB](const std::vector<K>& x) {
    std::vector<K> out(dimB, K(0));
    for (int i = 0; i <= d; ++i) {
      const auto& A1 = *parts->c1[i].alg;
      const auto& A2 = *parts->c2[i].alg;
      size_t D2 = A2.dim(), off = parts->off[i];
      for (size_t a = 0; a < A1.dim(); ++a) {
        std::vector<K> ua(A1.dim(), K(0));
        ua[a] = K(1);
        auto sa = A1.star(ua);
        for (size_t b = 0; b < D2; ++b) {
          if (is_zero(x[off + a * D2 + b])) continue;
          std::vector<K> ub(D2, K(0));
          ub[b] = K(1);
          auto sb = A2.star(ub);
          for (size_t k1 = 0; k1 < A1.dim(); ++k1)
            for (size_t k2 = 0; k2 < D2; ++k2)
              if (!is_zero(sa[k1]) && !is_zero(sb[k2]))
                out[off + k1 * D2 + k2] =
                    out[off + k1 * D2 + k2] + x[off + a * D2 + b] * sa[k1] * sb[k2];
        }
      }
    }
    return out;
  };

  // shapes: disjoint union over blocks, lexicographic within a block
  for (int i = 0; i <= d; ++i) {
    const auto& D1 = c1[i].datum;
    const auto& D2 = c2[i].datum;
    for (size_t l1 = 0; l1 < D1.shape_names.size(); ++l1)
      for (size_t l2 = 0; l2 < D2.shape_names.size(); ++l2) {
        D.shape_names.push_back("i=" + std::to_string(i) + ":" + D1.shape_names[l1] +
                                "x" + D2.shape_names[l2]);
        P.shape_origin.push_back({i, l1, l2});
      }
  }
  size_t L = D.shape_names.size();
  D.less.assign(L, std::vector<bool>(L, false));
  for (size_t p = 0; p < L; ++p)
    for (size_t q = 0; q < L; ++q) {
      auto [ip, p1, p2] = P.shape_origin[p];
      auto [iq, q1, q2] = P.shape_origin[q];
      if (ip != iq) {
        D.less[p][q] = ip < iq;
      } else {
        const auto& D1 = c1[ip].datum;
        const auto& D2 = c2[ip].datum;
        D.less[p][q] = D1.less[p1][q1] || (p1 == q1 && D2.less[p2][q2]);
      }
    }

  // cellular basis: outer products of the component bases
  D.msize.assign(L, 0);
  D.C.resize(L);
  for (size_t p = 0; p < L; ++p) {
    auto [i, l1, l2] = P.shape_origin[p];
    const auto& D1 = c1[i].datum;
    const auto& D2 = c2[i].datum;
    size_t m1 = D1.msize[l1], m2 = D2.msize[l2];
    D.msize[p] = m1 * m2;
    D.C[p].resize(D.msize[p] * D.msize[p]);
    size_t A2dim = c2[i].alg->dim(), off = block_offset[i];
    for (size_t s1 = 0; s1 < m1; ++s1)
      for (size_t s2 = 0; s2 < m2; ++s2)
        for (size_t t1 = 0; t1 < m1; ++t1)
          for (size_t t2 = 0; t2 < m2; ++t2) {
            std::vector<K> v(dimB, K(0));
            const auto& e1 = D1.C[l1][s1 * m1 + t1];
            const auto& e2 = D2.C[l2][s2 * m2 + t2];
            for (size_t a = 0; a < e1.size(); ++a) {
              if (is_zero(e1[a])) continue;
              for (size_t b = 0; b < e2.size(); ++b)
                if (!is_zero(e2[b])) v[off + a * A2dim + b] = e1[a] * e2[b];
            }
            size_t s = s1 * m2 + s2, t = t1 * m2 + t2;
            D.C[p][s * D.msize[p] + t] = std::move(v);
          }
  }

  // transport to the centralizer realization through the block maps
  {
    IsoPhi<K> iso(n, d, par);
    bool member = true, bij = true, multiplicative = true;
    std::vector<Mat<K>> carried;
    std::vector<std::vector<K>> carried_vecs;
    // transported matrices of every block tensor basis element
    std::vector<std::vector<Mat<K>>> base1(d + 1), base2(d + 1);
    for (int i = 0; i <= d; ++i) {
      auto Y1 = hom_to_tensor_bijection(*c1[i].alg, ge0_values(n), i, par);
      auto Y2 = hom_to_tensor_bijection(*c2[i].alg, gt0_values(n), d - i, par);
      for (size_t a = 0; a < c1[i].alg->dim(); ++a) {
        std::vector<K> u(c1[i].alg->dim(), K(0));
        u[a] = K(1);
        base1[i].push_back(Y1.first * c1[i].alg->module_matrix(u) * Y1.second);
      }
      for (size_t b = 0; b < c2[i].alg->dim(); ++b) {
        std::vector<K> u(c2[i].alg->dim(), K(0));
        u[b] = K(1);
        base2[i].push_back(Y2.first * c2[i].alg->module_matrix(u) * Y2.second);
      }
    }
    auto to_cent = [&](const std::vector<K>& x) -> std::optional<Mat<K>> {
      std::vector<Mat<K>> blocks;
      for (int i = 0; i <= d; ++i) {
        size_t D2 = c2[i].alg->dim(), off = block_offset[i];
        Mat<K> Bi(iso.block_dim(i), iso.block_dim(i));
        for (size_t a = 0; a < c1[i].alg->dim(); ++a)
          for (size_t b = 0; b < D2; ++b) {
            const K& v = x[off + a * D2 + b];
            if (!is_zero(v)) Bi = Bi + v * Mat<K>::kron(base1[i][a], base2[i][b]);
          }
        blocks.push_back(std::move(Bi));
      }
      return iso.invert(blocks);
    };
    for (size_t k = 0; k < dimB; ++k) {
      std::vector<K> unit(dimB, K(0));
      unit[k] = K(1);
      auto s = to_cent(unit);
      member &= s.has_value();
      if (s) {
        carried_vecs.push_back(s->vec());
        carried.push_back(std::move(*s));
      }
    }
    if (member) {
      size_t N = carried[0].rows();
      bij = span_rank(carried_vecs, N * N) == dimB;
      for (size_t a = 0; a < dimB && multiplicative; ++a)
        for (size_t b = 0; b < dimB && multiplicative; ++b) {
          std::vector<K> ua(dimB, K(0)), ub(dimB, K(0));
          ua[a] = K(1);
          ub[b] = K(1);
          auto prod = to_cent(mul(ua, ub));
          multiplicative &= prod.has_value() && *prod == carried[a] * carried[b];
        }
    }
    P.transport.add("cell.transport_member", ps.str(), member);
    P.transport.add("cell.transport_bijective", ps.str(), bij);
    P.transport.add("cell.transport_multiplicative", ps.str(), multiplicative);
  }

  // component Gram matrices, for the factorization property
  std::vector<CellReport<K>> rep1, rep2;
  for (int i = 0; i <= d; ++i) {
    rep1.push_back(verify_cell_axioms(c1[i].datum));
    rep2.push_back(verify_cell_axioms(c2[i].datum));
    if (!rep1.back().axioms() || !rep2.back().axioms())
      throw std::logic_error("AxiomFailure: component datum invalid at block " +
                             std::to_string(i));
  }
  for (size_t p = 0; p < L; ++p) {
    auto [i, l1, l2] = P.shape_origin[p];
    P.gram1.push_back(rep1[i].gram[l1]);
    P.gram2.push_back(rep2[i].gram[l2]);
  }
  return P;
}

}  // namespace qschur
