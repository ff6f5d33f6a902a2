#include "qschur/verify.hpp"

#include "doctest.h"

using namespace qschur;

namespace {

Params<Rat> par23() { return make_params(Rat(2), Rat(3)); }

// independent binomial for dimension oracles
unsigned long long binom(unsigned long long n, unsigned long long k) {
  if (k > n) return 0;
  unsigned long long r = 1;
  for (unsigned long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("dimension formulas") {
  CHECK(dim_formula(2, 1, 'A') == 4);
  CHECK(dim_formula(2, 1, 'B') == 2);
  CHECK(dim_formula(4, 2, 'B') == 36);
  CHECK(dim_formula(3, 1, 'B') == 5);
  for (int d = 1; d <= 8; ++d) CHECK(dim_formula(2, d, 'B') == 1ull + d);
  CHECK(dim_formula(3, 2, 'B') == 15);
  // against the independent oracle
  for (int n = 1; n <= 6; ++n)
    for (int d = 0; d <= 5; ++d) {
      CHECK(dim_formula(n, d, 'A') == binom(1ull * n * n + d - 1, d));
      unsigned long long r = n / 2;
      CHECK(dim_formula(n, d, 'B') == (n % 2 ? binom(2 * r * r + 2 * r + d, d)
                                             : binom(2 * r * r + d - 1, d)));
    }
}

TEST_CASE("block-sum binomial identity, n <= 8, d <= 8") {
  for (int n = 1; n <= 8; ++n)
    for (int d = 0; d <= 8; ++d) {
      unsigned long long sum = 0;
      for (int i = 0; i <= d; ++i)
        sum += dim_formula((n + 1) / 2, i, 'A') * dim_formula(n / 2, d - i, 'A');
      CHECK(sum == dim_formula(n, d, 'B'));
    }
}

TEST_CASE("centralizer dimensions match the formula at (q,Q)=(2,3)") {
  auto par = par23();
  // d = 1 type A has no constraints: the full endomorphism ring
  CHECK(centralizer_basis(2, 1, 'A', par).size() == 4);
  CHECK(centralizer_basis(2, 1, 'B', par).size() == 2);
  CHECK(centralizer_basis(3, 1, 'B', par).size() == 5);
  for (auto [n, d] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {3, 1}, {3, 2}, {4, 1}}) {
    CHECK(centralizer_basis(n, d, 'B', par).size() == dim_formula(n, d, 'B'));
    CHECK(centralizer_basis(n, d, 'A', par).size() == dim_formula((n + 1) / 2 + n / 2, d, 'A'));
  }
  CHECK_THROWS_AS(centralizer_basis(5, 8, 'B', par), std::invalid_argument);
}

TEST_CASE("centralizer closure under products") {
  auto par = par23();
  for (auto [n, d] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {3, 1}}) {
    auto cent = centralizer_basis(n, d, 'B', par);
    size_t N = cent[0].rows();
    Mat<Rat> basis(N * N, cent.size());
    for (size_t j = 0; j < cent.size(); ++j) {
      auto v = cent[j].vec();
      for (size_t i = 0; i < v.size(); ++i) basis(i, j) = v[i];
    }
    for (const auto& x : cent)
      for (const auto& y : cent) CHECK(basis.solve((x * y).vec()).has_value());
  }
}

TEST_CASE("phi algebra: multiplication rules") {
  auto B = phi_algebra_B(3, 1, par23());
  CHECK(B.dim() == 5);
  const auto& G = B.ctx().group();
  size_t e = G.id_of(sp_identity(1));

  // phi^1_{lam,lam} phi^g_{lam,mu'} = phi^g_{lam,mu'} and
  // phi^g_{lam,mu} phi^1_{mu,mu} = phi^g_{lam,mu}: the diagonal
  // phi^1 act as the block identities (the lam != mu analogue genuinely
  // picks up further double-coset terms in this realization)
  for (size_t lam = 0; lam < B.weight_count(); ++lam) {
    auto one = B.find_label(lam, lam, e);
    REQUIRE(one.has_value());
    for (size_t i = 0; i < B.dim(); ++i) {
      std::vector<Rat> x(B.dim(), Rat(0));
      x[i] = Rat(1);
      if (B.label(i).lam == lam) CHECK(B.mul_basis(*one, i) == x);
      if (B.label(i).mu == lam) CHECK(B.mul_basis(i, *one) == x);
    }
  }

  // orthogonality across mismatched inner weights
  for (size_t i = 0; i < B.dim(); ++i)
    for (size_t j = 0; j < B.dim(); ++j) {
      if (B.label(i).mu == B.label(j).lam) continue;
      const auto& prod = B.mul_basis(i, j);
      for (const auto& c : prod) CHECK(is_zero(c));
    }
}

TEST_CASE("phi algebra: identity collapse on minimal reps") {
  // when g stays minimal for the outer pair the product collapses to a
  // single basis element with unit coefficient
  auto B = phi_algebra_B(2, 2, par23());
  CHECK(B.dim() == 3);
  const auto& G = B.ctx().group();
  size_t e = G.id_of(sp_identity(2));
  auto one = B.find_label(0, 0, e);
  REQUIRE(one.has_value());
  for (size_t g : B.double_coset_ids(0, 0)) {
    const auto& prod = B.mul_basis(*one, *B.find_label(0, 0, g));
    for (size_t k = 0; k < B.dim(); ++k)
      CHECK(prod[k] == (k == *B.find_label(0, 0, g) ? Rat(1) : Rat(0)));
  }
}

TEST_CASE("phi basis size for (4,2) is 36 and unit acts as identity") {
  auto B = phi_algebra_B(4, 2, par23());
  CHECK(B.dim() == 36);
  auto u = B.unit();
  for (size_t i = 0; i < B.dim(); ++i) {
    std::vector<Rat> x(B.dim(), Rat(0));
    x[i] = Rat(1);
    CHECK(B.mul(u, x) == x);
    CHECK(B.mul(x, u) == x);
  }
}

TEST_CASE("phi algebra associativity (3,1)") {
  auto B = phi_algebra_B(3, 1, par23());
  for (size_t i = 0; i < B.dim(); ++i)
    for (size_t j = 0; j < B.dim(); ++j)
      for (size_t k = 0; k < B.dim(); ++k) {
        std::vector<Rat> a(B.dim(), Rat(0)), b = a, c = a;
        a[i] = Rat(1);
        b[j] = Rat(1);
        c[k] = Rat(1);
        CHECK(B.mul(B.mul(a, b), c) == B.mul(a, B.mul(b, c)));
      }
}

TEST_CASE("star is an involutive anti-automorphism of the phi algebra") {
  auto B = phi_algebra_B(3, 1, par23());
  for (size_t i = 0; i < B.dim(); ++i)
    for (size_t j = 0; j < B.dim(); ++j) {
      std::vector<Rat> a(B.dim(), Rat(0)), b(B.dim(), Rat(0));
      a[i] = Rat(1);
      b[j] = Rat(1);
      CHECK(B.star(B.star(a)) == a);
      CHECK(B.star(B.mul(a, b)) == B.mul(B.star(b), B.star(a)));
    }
}

TEST_CASE("transport between phi realization and centralizer") {
  for (auto [n, d] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}}) {
    auto rep = phi_transport_report(n, d, par23(), "q=2,Q=3");
    for (const auto& c : rep.checks) {
      INFO(c.id, " ", c.params);
      CHECK(c.pass);
    }
  }
}

TEST_CASE("simple count and Wedderburn sums") {
  CHECK(simple_count(2, 2) == 3);
  CHECK(wedderburn_check(2, 2));
  CHECK(wedderburn_check(3, 2));
  CHECK(wedderburn_check(4, 2));
  // (2,2): 1 + 1 + 1 = 3 = dim S^B(2,2)
  CHECK(dim_formula(2, 2, 'B') == 3);
}

TEST_CASE("isomorphism report at small sizes") {
  for (auto [n, d] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {3, 1}}) {
    auto rep = iso_phi_report(n, d, par23(), "q=2,Q=3");
    for (const auto& c : rep.checks) {
      INFO(c.id, " ", c.params, " ", c.details);
      CHECK(c.pass);
    }
  }
}

TEST_CASE("structural suite at d = 1, numeric and symbolic") {
  auto rep = verify_dj(1, 3, par23(), "q=2,Q=3");
  for (const auto& c : rep.checks) {
    INFO(c.id, " ", c.params);
    CHECK(c.pass);
  }
  auto reps = verify_dj(1, 2, symbolic_params(), "symbolic");
  for (const auto& c : reps.checks) {
    INFO(c.id, " ", c.params);
    CHECK(c.pass);
  }
}

TEST_CASE("schur functor idempotent and rank embedding, small case") {
  auto rep = schur_functor_report(2, 1, par23(), "q=2,Q=3");
  for (const auto& c : rep.checks) {
    INFO(c.id, " ", c.params, " ", c.details);
    CHECK(c.pass);
  }
  auto rep2 = rank_embed_report(2, 4, 1, par23(), "q=2,Q=3");
  for (const auto& c : rep2.checks) {
    INFO(c.id, " ", c.params, " ", c.details);
    CHECK(c.pass);
  }
}

TEST_CASE("block map degenerates when f^B vanishes") {
  // the plus and minus lines coincide at Q = i, so the joint block map
  // cannot be injective; the per-block ranks survive at d = 1 but the
  // two 1-dimensional images collide
  auto par = make_params(GaussRat(2), GaussRat::i());
  TensorCtx<GaussRat> V(2, 1, par);
  HeckeCtx<GaussRat> H(1, par);
  auto wplus = V.block_map_matrix(1, 0, H.v_ab(1, 0));
  auto wminus = V.block_map_matrix(0, 1, H.v_ab(0, 1));
  std::vector<std::vector<GaussRat>> cols{wplus.col(0), wminus.col(0)};
  CHECK(span_rank(cols, 2) == 1);
}
