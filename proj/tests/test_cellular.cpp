#include "qschur/cellular.hpp"

#include "doctest.h"

using namespace qschur;

namespace {

Params<Rat> par23() { return make_params(Rat(2), Rat(3)); }

}  // namespace

TEST_CASE("two-dimensional specialization datum at generic parameters") {
  auto D = two_dim_specialization_datum(par23());
  auto rep = verify_cell_axioms(D);
  INFO(rep.failure);
  CHECK(rep.axioms());
  const Rat Q(3);
  // phi_(2) = Q^{-2} + 1, phi_(1,1) = 1
  CHECK(rep.gram[0](0, 0) == inv(Q) * inv(Q) + Rat(1));
  CHECK(rep.gram[1](0, 0) == Rat(1));
  CHECK(rep.quasi_hereditary);
}

TEST_CASE("two-dimensional specialization datum at Q = i: Gram vanishes") {
  auto par = make_params(GaussRat(2), GaussRat::i());
  auto D = two_dim_specialization_datum(par);
  auto rep = verify_cell_axioms(D);
  INFO(rep.failure);
  CHECK(rep.axioms());
  CHECK(is_zero(rep.gram[0](0, 0)));
  CHECK(rep.gram[1](0, 0) == GaussRat(1));
  CHECK(!rep.quasi_hereditary);
}

TEST_CASE("trivial Murphy datum for S^A(1,d)") {
  for (int d = 1; d <= 3; ++d) {
    auto M = murphy_datum(1, d, par23());
    CHECK(M.shapes.size() == 1);
    CHECK(M.datum.msize[0] == 1);
    auto rep = verify_cell_axioms(M.datum);
    INFO(rep.failure);
    CHECK(rep.axioms());
    CHECK(rep.quasi_hereditary);
  }
}

TEST_CASE("Murphy datum for S^A(2,2)") {
  auto M = murphy_datum(2, 2, par23());
  REQUIRE(M.shapes.size() == 2);
  // |M((2))| = 3, |M((1,1))| = 1, and 9 + 1 = 10 = dim
  size_t l2 = M.shapes[0] == Partition{2} ? 0 : 1;
  CHECK(M.datum.msize[l2] == 3);
  CHECK(M.datum.msize[1 - l2] == 1);
  CHECK(M.datum.alg_dim == 10);
  size_t sq = 0;
  for (auto m : M.datum.msize) sq += m * m;
  CHECK(sq == 10);

  auto rep = verify_cell_axioms(M.datum);
  INFO(rep.failure);
  CHECK(rep.axioms());
  CHECK(rep.quasi_hereditary);
}

TEST_CASE("Murphy data pass the axioms at all guard sizes") {
  for (int n = 1; n <= 2; ++n)
    for (int d = 1; d <= 3; ++d) {
      auto M = murphy_datum(n, d, par23());
      size_t sq = 0;
      for (auto m : M.datum.msize) sq += m * m;
      CHECK(sq == M.datum.alg_dim);
      auto rep = verify_cell_axioms(M.datum);
      INFO("n=", n, " d=", d, " ", rep.failure);
      CHECK(rep.axioms());
      CHECK(rep.quasi_hereditary);
    }
}

TEST_CASE("product datum for (2,1): two singleton shapes") {
  auto P = product_datum(2, 1, par23(), "q=2,Q=3");
  CHECK(P.datum.shape_names.size() == 2);
  for (const auto& c : P.transport.checks) {
    INFO(c.id);
    CHECK(c.pass);
  }
  auto rep = verify_cell_axioms(P.datum);
  INFO(rep.failure);
  CHECK(rep.axioms());
  CHECK(rep.quasi_hereditary);
}

TEST_CASE("product datum for (3,2): shapes, axioms, Gram factorization") {
  auto P = product_datum(3, 2, par23(), "q=2,Q=3");
  // 1 + 1 + 2 = 4 shapes
  CHECK(P.datum.shape_names.size() == 4);
  size_t sq = 0;
  for (auto m : P.datum.msize) sq += m * m;
  CHECK(sq == 15);
  CHECK(P.datum.alg_dim == 15);

  for (const auto& c : P.transport.checks) {
    INFO(c.id);
    CHECK(c.pass);
  }
  auto rep = verify_cell_axioms(P.datum);
  INFO(rep.failure);
  CHECK(rep.axioms());
  CHECK(rep.quasi_hereditary);

  // Gram forms factor through the component Gram forms
  for (size_t p = 0; p < P.datum.shape_names.size(); ++p) {
    const auto& G1 = P.gram1[p];
    const auto& G2 = P.gram2[p];
    const auto& G = rep.gram[p];
    REQUIRE(G.rows() == G1.rows() * G2.rows());
    for (size_t s1 = 0; s1 < G1.rows(); ++s1)
      for (size_t s2 = 0; s2 < G2.rows(); ++s2)
        for (size_t t1 = 0; t1 < G1.cols(); ++t1)
          for (size_t t2 = 0; t2 < G2.cols(); ++t2)
            CHECK(G(s1 * G2.rows() + s2, t1 * G2.cols() + t2) ==
                  G1(s1, t1) * G2(s2, t2));
  }
}

TEST_CASE("product datum for (2,2)") {
  auto P = product_datum(2, 2, par23(), "q=2,Q=3");
  CHECK(P.datum.shape_names.size() == 3);
  CHECK(P.datum.alg_dim == 3);
  for (const auto& c : P.transport.checks) {
    INFO(c.id);
    CHECK(c.pass);
  }
  auto rep = verify_cell_axioms(P.datum);
  INFO(rep.failure);
  CHECK(rep.axioms());
  CHECK(rep.quasi_hereditary);
}
