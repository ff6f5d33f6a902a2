#include "qschur/scalars.hpp"

#include <random>

#include "doctest.h"

using namespace qschur;

namespace {

// independent convolution oracle for Laurent products
LaurentBi slow_mul(const LaurentBi& a, const LaurentBi& b) {
  std::map<std::pair<int, int>, Rat> acc;
  for (const auto& [e1, c1] : a.coeffs())
    for (const auto& [e2, c2] : b.coeffs())
      acc[{e1.first + e2.first, e1.second + e2.second}] += c1 * c2;
  LaurentBi r;
  for (const auto& [e, c] : acc) r.add_term(e, c);
  return r;
}

std::mt19937 rng(20240811);

Rat rand_rat() {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
  Rat r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

LaurentBi rand_poly() {
  std::uniform_int_distribution<int> nterms(0, 4), expo(-3, 3);
  LaurentBi p;
  int k = nterms(rng);
  for (int i = 0; i < k; ++i) p.add_term({expo(rng), expo(rng)}, rand_rat());
  return p;
}

GaussRat rand_gauss() { return GaussRat(rand_rat(), rand_rat()); }

}  // namespace

TEST_CASE("laurent arithmetic basics") {
  LaurentBi q = LaurentBi::q(), Q = LaurentBi::Q();
  CHECK((q + Q) * (q - Q) == q * q - Q * Q);
  CHECK((rand_poly() * LaurentBi()).is_zero());

  LaurentBi lhs = (LaurentBi::Q(-2) + LaurentBi::q(-2)) * (LaurentBi::Q(-2) + LaurentBi::q(2));
  LaurentBi expect = LaurentBi::Q(-4) + LaurentBi::monomial(Rat(1), 2, -2) +
                     LaurentBi::monomial(Rat(1), -2, -2) + LaurentBi(1);
  CHECK(lhs == expect);
  CHECK(lhs == slow_mul(LaurentBi::Q(-2) + LaurentBi::q(-2), LaurentBi::Q(-2) + LaurentBi::q(2)));
}

TEST_CASE("laurent ring axioms on random triples") {
  for (int trial = 0; trial < 100; ++trial) {
    LaurentBi a = rand_poly(), b = rand_poly(), c = rand_poly();
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a * b == slow_mul(a, b));
  }
}

TEST_CASE("field inversion") {
  CHECK(inv(Rat(2, 3)) == Rat(3, 2));
  CHECK(FracBi::q() * inv(FracBi::q()) == FracBi(1));
  CHECK(inv(FracBi::q()) == FracBi(LaurentBi(1), LaurentBi::q()));
  CHECK(inv(GaussRat::i()) == -GaussRat::i());
  CHECK_THROWS_AS(inv(Rat(0)), std::domain_error);
  CHECK_THROWS_AS(inv(FracBi()), std::domain_error);

  for (int trial = 0; trial < 200; ++trial) {
    Rat r = rand_rat();
    if (!is_zero(r)) CHECK(r * inv(r) == Rat(1));
    GaussRat g = rand_gauss();
    if (!is_zero(g)) CHECK(g * inv(g) == GaussRat(1));
    FracBi f(rand_poly(), LaurentBi(1) + rand_poly() * rand_poly());
    if (!is_zero(f)) {
      CHECK(f * inv(f) == FracBi(1));
      CHECK(inv(f) * f == FracBi(1));
    }
  }
}

TEST_CASE("f_B values") {
  CHECK(f_B(0) == LaurentBi(1));
  CHECK(f_B(1) == LaurentBi::Q(-2) + LaurentBi(1));

  auto par1 = make_params(Rat(1), Rat(1));
  CHECK(specialize(f_B(2), par1) == Rat(8));

  // factor-count oracle: brute-force product of the 2d-1 factors, whose
  // q-exponents run from -2(d-1) to 2(d-1)
  for (int d = 0; d <= 4; ++d) {
    LaurentBi oracle(1);
    int factors = 0, min_fexp = 0, max_fexp = 0;
    for (int i = 1 - d; i <= d - 1; ++i) {
      oracle = slow_mul(oracle, LaurentBi::Q(-2) + LaurentBi::q(2 * i));
      ++factors;
      min_fexp = std::min(min_fexp, 2 * i);
      max_fexp = std::max(max_fexp, 2 * i);
    }
    CHECK(f_B(d) == oracle);
    CHECK(factors == (d == 0 ? 0 : 2 * d - 1));
    if (d >= 1) {
      CHECK(min_fexp == -2 * (d - 1));
      CHECK(max_fexp == 2 * (d - 1));
      // expansion degree: the sum of all positive factor exponents
      auto [lo, hi] = f_B(d).q_degree_range();
      CHECK(lo == -d * (d - 1));
      CHECK(hi == d * (d - 1));
    }
  }
}

TEST_CASE("specialization is a ring homomorphism") {
  auto par3 = make_params(Rat(2), Rat(3));
  CHECK(specialize(f_B(1), par3) == Rat(10, 9));
  CHECK(specialize(LaurentBi::q(), par3) == Rat(2));

  auto pari = make_params(GaussRat(2), GaussRat::i());
  CHECK(is_zero(specialize(f_B(1), pari)));

  for (int trial = 0; trial < 50; ++trial) {
    LaurentBi a = rand_poly(), b = rand_poly();
    CHECK(specialize(a * b, par3) == specialize(a, par3) * specialize(b, par3));
    CHECK(specialize(a + b, par3) == specialize(a, par3) + specialize(b, par3));
    CHECK(specialize(a * b, pari) == specialize(a, pari) * specialize(b, pari));
  }
}

TEST_CASE("symbolic fraction field") {
  FracBi q = FracBi::q(), Q = FracBi::Q();
  FracBi x = (q + Q) / (q - Q);
  CHECK(x * (q - Q) == q + Q);
  CHECK((q * q - Q * Q) / (q - Q) == q + Q);  // exact division path
  CHECK(FracBi(1) + FracBi(-1) == FracBi());
  CHECK(is_zero(x - x));
}

TEST_CASE("text round-trip") {
  CHECK(to_string(Rat(-5, 3)) == "-5/3");
  CHECK(rat_from_string("-5/3") == Rat(-5, 3));
  for (int trial = 0; trial < 100; ++trial) {
    Rat r = rand_rat();
    CHECK(rat_from_string(to_string(r)) == r);
    LaurentBi p = rand_poly();
    CHECK(LaurentBi::parse(p.str()) == p);
  }
}
