#include "qschur/tensor.hpp"

#include "doctest.h"

using namespace qschur;

namespace {

using T = TensorElt<Rat>;

Params<Rat> par23() { return make_params(Rat(2), Rat(3)); }

}  // namespace

TEST_CASE("index alphabets") {
  CHECK(index_values(2) == std::vector<int>{-1, 1});
  CHECK(index_values(3) == std::vector<int>{-1, 0, 1});
  CHECK(index_values(4) == std::vector<int>{-2, -1, 1, 2});
  CHECK(ge0_values(4) == std::vector<int>{1, 2});
  CHECK(ge0_values(5) == std::vector<int>{0, 1, 2});
}

TEST_CASE("generator action cases") {
  const Rat q(2), Q(3);

  TensorCtx<Rat> V2(2, 1, par23());
  CHECK(V2.act_gen(V2.basis({1}), 0) == V2.basis({-1}));
  CHECK(V2.act_gen(V2.basis({-1}), 0) ==
        V2.add(V2.basis({1}), V2.scale(V2.basis({-1}), inv(Q) - Q)));

  TensorCtx<Rat> V3(3, 1, par23());
  CHECK(V3.act_gen(V3.basis({0}), 0) == V3.scale(V3.basis({0}), inv(Q)));

  TensorCtx<Rat> V22(2, 2, par23());
  CHECK(V22.act_gen(V22.basis({1, 1}), 1) == V22.scale(V22.basis({1, 1}), inv(q)));
  CHECK(V22.act_gen(V22.basis({-1, 1}), 1) == V22.basis({1, -1}));
  CHECK(V22.act_gen(V22.basis({1, -1}), 1) ==
        V22.add(V22.basis({-1, 1}), V22.scale(V22.basis({1, -1}), inv(q) - q)));
}

TEST_CASE("module axioms: defining relations hold on the tensor space") {
  for (int n = 2; n <= 4; ++n)
    for (int d = 1; d <= 3; ++d) {
      TensorCtx<Rat> V(n, d, par23());
      HeckeCtx<Rat> Hd(d, par23());
      const Rat q(2), Q(3);
      for (const auto& w : V.words()) {
        T v = V.basis(w);
        CHECK(V.act(v, Hd.one()) == v);
        for (int t = 0; t < d; ++t) {
          Rat c = t == 0 ? Q : q;
          T lhs = V.act_gen(V.act_gen(v, t), t);
          T rhs = V.add(v, V.scale(V.act_gen(v, t), inv(c) - c));
          CHECK(lhs == rhs);
        }
        for (int t = 1; t + 1 < d; ++t)
          CHECK(V.act_word(v, {t, t + 1, t}) == V.act_word(v, {t + 1, t, t + 1}));
        if (d >= 2)
          CHECK(V.act_word(v, {0, 1, 0, 1}) == V.act_word(v, {1, 0, 1, 0}));
        for (int t = 0; t < d; ++t)
          for (int s = t + 2; s < d; ++s)
            CHECK(V.act_word(v, {t, s}) == V.act_word(v, {s, t}));
      }
    }
}

TEST_CASE("action respects products (module axiom over random elements)") {
  TensorCtx<Rat> V(3, 2, par23());
  HeckeCtx<Rat> H2(2, par23());
  auto h1 = H2.add(H2.gen(0), H2.scale(H2.gen(1), Rat(2)));
  auto h2 = H2.mul(H2.gen(1), H2.gen(0));
  for (const auto& w : V.words()) {
    T v = V.basis(w);
    CHECK(V.act(v, H2.mul(h1, h2)) == V.act(V.act(v, h1), h2));
  }
}

TEST_CASE("w^+- single site and base cases") {
  const Rat q(2), Q(3);
  TensorCtx<Rat> V2(2, 1, par23());
  CHECK(V2.w_pm({1}, +1) == V2.add(V2.basis({-1}), V2.scale(V2.basis({1}), Q)));
  CHECK(V2.w_pm({1}, -1) ==
        V2.add(V2.basis({-1}), V2.scale(V2.basis({1}), -inv(Q))));

  TensorCtx<Rat> V3(3, 1, par23());
  CHECK(V3.w_pm({0}, -1).is_zero());
  CHECK(V3.w_pm({0}, +1) == V3.scale(V3.basis({0}), inv(Q) + Q));
}

TEST_CASE("w^+_I recursion for the worked 7-letter example shape") {
  // spot-check the j-offsets via the inductive tensor build at n = 8
  TensorCtx<Rat> V(8, 7, par23());
  IndexWord I{0, 1, 1, 2, 3, 3, 3};
  // 0 is not in I(8); shift everything up by one instead
  for (auto& v : I) v += 1;
  T direct = V.w_pm(I, +1);
  T expect = TensorCtx<Rat>::tensor_concat(V.w_site(1, 0, +1), V.w_site(2, 0, +1));
  expect = TensorCtx<Rat>::tensor_concat(expect, V.w_site(2, 1, +1));
  expect = TensorCtx<Rat>::tensor_concat(expect, V.w_site(3, 0, +1));
  expect = TensorCtx<Rat>::tensor_concat(expect, V.w_site(4, 0, +1));
  expect = TensorCtx<Rat>::tensor_concat(expect, V.w_site(4, 1, +1));
  expect = TensorCtx<Rat>::tensor_concat(expect, V.w_site(4, 2, +1));
  CHECK(direct == expect);

  // the general-I rule applies the sorting permutation on the right
  IndexWord J{1, 3, 2, 2, 4, 4, 4};  // I . s_3 s_2 in one-line positions
  CHECK(V.w_pm(J, +1) == V.act_word(direct, {3, 2}));
}

TEST_CASE("v_I u^+_d = w^+_I and v_I u^-_d = w^-_I, n <= 5, d <= 3") {
  for (int n = 2; n <= 5; ++n)
    for (int d = 1; d <= 3; ++d) {
      TensorCtx<Rat> V(n, d, par23());
      HeckeCtx<Rat> Hd(d, par23());
      auto up = Hd.u_pm(d, +1), um = Hd.u_pm(d, -1);
      for (const auto& I : all_words(ge0_values(n), d))
        CHECK(V.act(V.basis(I), up) == V.w_pm(I, +1));
      for (const auto& I : all_words(gt0_values(n), d))
        CHECK(V.act(V.basis(I), um) == V.w_pm(I, -1));
    }
}

TEST_CASE("span equalities W_{>=0} = V_{>=0} u^+ and W_{<0} = V_{>0} u^-") {
  for (int n = 2; n <= 4; ++n)
    for (int d = 1; d <= 3; ++d) {
      TensorCtx<Rat> V(n, d, par23());
      HeckeCtx<Rat> Hd(d, par23());
      for (int sign : {+1, -1}) {
        auto u = Hd.u_pm(d, sign);
        std::vector<std::vector<Rat>> whole, sub;
        for (const auto& w : V.words()) whole.push_back(V.coords(V.act(V.basis(w), u)));
        auto alphabet = sign > 0 ? ge0_values(n) : gt0_values(n);
        for (const auto& w : all_words(alphabet, d))
          sub.push_back(V.coords(V.act(V.basis(w), u)));
        CHECK(same_span(whole, sub, V.words().size()));
      }
    }
}

TEST_CASE("p_d on w^+-_I: exact multiple for nondecreasing I, triangular always") {
  // For nondecreasing I the projection is exactly c_I v_{-I} with c_I
  // invertible.  For out-of-order I the action formula contributes
  // further words -I' with I' a rearrangement of I; the v_{-I}
  // coefficient stays invertible, which is what injectivity needs.
  for (int n = 2; n <= 4; ++n)
    for (int d = 1; d <= 3; ++d) {
      TensorCtx<Rat> V(n, d, par23());
      auto check_proj = [&](const IndexWord& I, int sign) {
        T p = V.project(V.w_pm(I, sign), Proj::p_d);
        IndexWord negI = I;
        for (auto& v : negI) v = -v;
        auto it = p.terms.find(negI);
        REQUIRE(it != p.terms.end());
        CHECK(!is_zero(it->second));
        if (std::is_sorted(I.begin(), I.end())) {
          CHECK(p.terms.size() == 1);
        } else {
          IndexWord sortedI = I;
          std::sort(sortedI.begin(), sortedI.end());
          for (const auto& [w, c] : p.terms) {
            IndexWord back = w;
            for (auto& v : back) v = -v;
            std::sort(back.begin(), back.end());
            CHECK(back == sortedI);
          }
        }
      };
      for (const auto& I : all_words(ge0_values(n), d)) check_proj(I, +1);
      for (const auto& I : all_words(gt0_values(n), d)) check_proj(I, -1);
    }
}

TEST_CASE("frozen counterexample: the exact form needs nondecreasing I") {
  // v_{(1,0)} u^+_2 at n = 3 projects onto two words, not one
  TensorCtx<Rat> V(3, 2, par23());
  HeckeCtx<Rat> H2(2, par23());
  const Rat q(2), Q(3);
  T p = V.project(V.act(V.basis({1, 0}), H2.u_pm(2, +1)), Proj::p_d);
  REQUIRE(p.terms.size() == 2);
  CHECK(p.terms.at({-1, 0}) == inv(Q) + Q);
  CHECK(p.terms.at({0, -1}) == (inv(Q) + Q) * (inv(q) - q));
}

TEST_CASE("p_1 of w^+_(1) drops the Q side") {
  TensorCtx<Rat> V(2, 1, par23());
  T p = V.project(V.w_pm({1}, +1), Proj::p_d);
  CHECK(p == V.basis({-1}));  // c_(1) = 1

  // words already in the target subspace are fixed
  TensorCtx<Rat> V2(2, 2, par23());
  T allneg = V2.basis({-1, -1});
  CHECK(V2.project(allneg, Proj::p_d) == allneg);

  CHECK(V2.project(V2.basis({1, -1}), Proj::p_ab_prime, 1) == V2.basis({1, -1}));
  CHECK(V2.project(V2.basis({1, 1}), Proj::p_ab_prime, 1).is_zero());
}

TEST_CASE("v_I -> w^+-_I is an equivariant bijection onto its span") {
  for (int n = 2; n <= 4; ++n)
    for (int d = 1; d <= 3; ++d) {
      TensorCtx<Rat> V(n, d, par23());
      for (int sign : {+1, -1}) {
        auto alphabet = sign > 0 ? ge0_values(n) : gt0_values(n);
        auto dom = all_words(alphabet, d);
        std::map<IndexWord, size_t> idx;
        for (size_t i = 0; i < dom.size(); ++i) idx[dom[i]] = i;

        std::vector<std::vector<Rat>> images;
        for (const auto& I : dom) images.push_back(V.coords(V.w_pm(I, sign)));
        CHECK(span_rank(images, V.words().size()) == dom.size());

        // equivariance for the type A generators: the image of the acted
        // domain vector equals the acted image
        for (const auto& I : dom)
          for (int t = 1; t < d; ++t) {
            // act inside the domain (type A case split never leaves it)
            T acted_dom = V.act_gen(V.basis(I), t);
            T lhs;
            for (const auto& [w, c] : acted_dom.terms)
              lhs = V.add(lhs, V.scale(V.w_pm(w, sign), c));
            CHECK(lhs == V.act_gen(V.w_pm(I, sign), t));
          }
      }
    }
}

TEST_CASE("V^d v_{a,b} is spanned by (V_{>0}^b x V_{>=0}^a) v_{a,b}") {
  for (int n = 2; n <= 4; ++n)
    for (int d = 1; d <= 3; ++d) {
      TensorCtx<Rat> V(n, d, par23());
      HeckeCtx<Rat> Hd(d, par23());
      for (int a = 0; a <= d; ++a) {
        int b = d - a;
        auto vab = Hd.v_ab(a, b);
        std::vector<std::vector<Rat>> whole, sub;
        for (const auto& w : V.words()) whole.push_back(V.coords(V.act(V.basis(w), vab)));
        for (const auto& J : all_words(gt0_values(n), b))
          for (const auto& I : all_words(ge0_values(n), a)) {
            IndexWord ji = J;
            ji.insert(ji.end(), I.begin(), I.end());
            sub.push_back(V.coords(V.act(V.basis(ji), vab)));
          }
        CHECK(same_span(whole, sub, V.words().size()));
      }
    }
}

TEST_CASE("tail projections of shuffled products") {
  // exact single-term form for nondecreasing (I, J); invertible
  // coefficient at the expected word for every (I, J)
  for (int n = 2; n <= 3; ++n)
    for (int d = 1; d <= 3; ++d) {
      TensorCtx<Rat> V(n, d, par23());
      HeckeCtx<Rat> Hd(d, par23());
      for (int a = 0; a <= d; ++a) {
        int b = d - a;
        auto twab = Hd.basis(Hd.w_ab(a, b));
        auto vab = Hd.v_ab(a, b);
        for (const auto& I : all_words(ge0_values(n), a))
          for (const auto& J : all_words(gt0_values(n), b)) {
            bool srt = std::is_sorted(I.begin(), I.end()) &&
                       std::is_sorted(J.begin(), J.end());
            IndexWord negI = I, negJ = J;
            for (auto& v : negI) v = -v;
            for (auto& v : negJ) v = -v;

            // p'_{a,b}((w^-_J (x) v_I) T_{w_{a,b}}) = c v_I (x) v_{-J}
            T wJ;
            wJ.terms[IndexWord{}] = Rat(1);
            if (b > 0) wJ = TensorCtx<Rat>(n, b, par23()).w_pm(J, -1);
            T arg;
            for (const auto& [w, c] : wJ.terms) {
              IndexWord full = w;
              full.insert(full.end(), I.begin(), I.end());
              arg.add(full, c);
            }
            T proj = V.project(V.act(arg, twab), Proj::p_ab_prime, a);
            IndexWord expect = I;
            expect.insert(expect.end(), negJ.begin(), negJ.end());
            REQUIRE(proj.terms.count(expect) == 1);
            CHECK(!is_zero(proj.terms.at(expect)));
            if (srt) CHECK(proj.terms.size() == 1);

            // p_{a,b}((v_J (x) v_I) v_{a,b}) = c v_{-I} (x) v_{-J}
            IndexWord ji = J;
            ji.insert(ji.end(), I.begin(), I.end());
            T proj2 = V.project(V.act(V.basis(ji), vab), Proj::p_ab, a);
            IndexWord expect2 = negI;
            expect2.insert(expect2.end(), negJ.begin(), negJ.end());
            REQUIRE(proj2.terms.count(expect2) == 1);
            CHECK(!is_zero(proj2.terms.at(expect2)));
            if (srt) CHECK(proj2.terms.size() == 1);
          }
      }
    }
}

TEST_CASE("block map matrices: base cases and ranks") {
  TensorCtx<Rat> V(2, 1, par23());
  HeckeCtx<Rat> H1(1, par23());
  const Rat Q(3);

  // a=1, b=0: v_(1) -> w^+_(1) = v_{-1} + Q v_1
  Mat<Rat> M10 = V.block_map_matrix(1, 0, H1.v_ab(1, 0));
  CHECK(M10.rows() == 2);
  CHECK(M10.cols() == 1);
  CHECK(M10(0, 0) == Rat(1));
  CHECK(M10(1, 0) == Q);

  // a=0, b=1: v_(1) -> w^-_(1) = v_{-1} - Q^{-1} v_1
  Mat<Rat> M01 = V.block_map_matrix(0, 1, H1.v_ab(0, 1));
  CHECK(M01(0, 0) == Rat(1));
  CHECK(M01(1, 0) == -inv(Q));

  // a=b=1, n=2: V_{>=0} = V_{>0} = span(v_1), so the domain is
  // 1-dimensional and the 4x1 matrix has full column rank; the three
  // split blocks together account for dim = 3 at (n,d) = (2,2)
  TensorCtx<Rat> V2(2, 2, par23());
  HeckeCtx<Rat> H2(2, par23());
  Mat<Rat> M11 = V2.block_map_matrix(1, 1, H2.v_ab(1, 1));
  CHECK(M11.rows() == 4);
  CHECK(M11.cols() == 1);
  CHECK(M11.rank() == 1);
}

TEST_CASE("block maps are bijective onto V^d v_{a,b} and equivariant") {
  for (int n = 2; n <= 4; ++n)
    for (int d = 1; d <= 3; ++d) {
      TensorCtx<Rat> V(n, d, par23());
      HeckeCtx<Rat> Hd(d, par23());
      for (int a = 0; a <= d; ++a) {
        int b = d - a;
        auto vab = Hd.v_ab(a, b);
        Mat<Rat> M = V.block_map_matrix(a, b, vab);
        size_t dom_dim = M.cols();
        CHECK(M.rank() == dom_dim);

        // the columns span exactly V^{(x)d} v_{a,b}
        std::vector<std::vector<Rat>> cols, ideal;
        for (size_t j = 0; j < dom_dim; ++j) cols.push_back(M.col(j));
        for (const auto& w : V.words()) ideal.push_back(V.coords(V.act(V.basis(w), vab)));
        CHECK(same_span(cols, ideal, V.words().size()));
      }
    }
}
