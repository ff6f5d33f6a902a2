/*
  Exact coefficient arithmetic for the toolkit: arbitrary-precision
  rationals, the quadratic extension Q(i), bivariate Laurent polynomials
  in (q, Q), and their fraction field.  All values are immutable in
  spirit: operations return fresh values and never mutate shared state.
*/
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qschur {

using Rat = mpq_class;  // canonical: reduced, positive denominator

inline bool is_zero(const Rat& x) { return sgn(x) == 0; }
inline bool is_one(const Rat& x) { return x == 1; }

inline Rat inv(const Rat& x) {
  if (is_zero(x)) throw std::domain_error("ZeroInverse: 1/0 over Q");
  return Rat(1) / x;
}

std::string to_string(const Rat& x);
Rat rat_from_string(const std::string& s);

/* Gaussian rationals re + im*i with i^2 = -1.  The minimal extension in
   which Q^2 = -1 is solvable, used for specializations where f^B
   vanishes. */
struct GaussRat {
  Rat re, im;

  GaussRat() : re(0), im(0) {}
  GaussRat(long v) : re(v), im(0) {}
  GaussRat(const Rat& r) : re(r), im(0) {}
  GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

  static GaussRat i() { return GaussRat(Rat(0), Rat(1)); }

  GaussRat conj() const { return GaussRat(re, -im); }

  friend GaussRat operator+(const GaussRat& a, const GaussRat& b) {
    return GaussRat(a.re + b.re, a.im + b.im);
  }
  friend GaussRat operator-(const GaussRat& a, const GaussRat& b) {
    return GaussRat(a.re - b.re, a.im - b.im);
  }
  friend GaussRat operator-(const GaussRat& a) { return GaussRat(-a.re, -a.im); }
  friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
    return GaussRat(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }
  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }
};

inline bool is_zero(const GaussRat& x) { return is_zero(x.re) && is_zero(x.im); }
inline bool is_one(const GaussRat& x) { return is_one(x.re) && is_zero(x.im); }

inline GaussRat inv(const GaussRat& x) {
  Rat n = x.re * x.re + x.im * x.im;
  if (is_zero(n)) throw std::domain_error("ZeroInverse: 1/0 over Q(i)");
  return GaussRat(x.re / n, -x.im / n);
}
inline GaussRat operator/(const GaussRat& a, const GaussRat& b) { return a * inv(b); }

std::string to_string(const GaussRat& x);

/* Bivariate Laurent polynomials over Q in the parameters q and Q.
   Keys are exponent pairs (a, b) for q^a Q^b, lexicographically ordered;
   no zero coefficient is ever stored. */
class LaurentBi {
 public:
  using Exp = std::pair<int, int>;
  using Map = std::map<Exp, Rat>;

  LaurentBi() = default;
  LaurentBi(long c) { if (c != 0) coeffs_[{0, 0}] = Rat(c); }
  LaurentBi(const Rat& c) { if (!qschur::is_zero(c)) coeffs_[{0, 0}] = c; }

  static LaurentBi monomial(const Rat& c, int a, int b) {
    LaurentBi p;
    if (!qschur::is_zero(c)) p.coeffs_[{a, b}] = c;
    return p;
  }
  static LaurentBi q(int a = 1) { return monomial(Rat(1), a, 0); }
  static LaurentBi Q(int b = 1) { return monomial(Rat(1), 0, b); }

  const Map& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monomial() const { return coeffs_.size() == 1; }
  size_t size() const { return coeffs_.size(); }

  Rat coeff(int a, int b) const {
    auto it = coeffs_.find({a, b});
    return it == coeffs_.end() ? Rat(0) : it->second;
  }

  void add_term(const Exp& e, const Rat& c) {
    if (qschur::is_zero(c)) return;
    auto it = coeffs_.find(e);
    if (it == coeffs_.end()) {
      coeffs_[e] = c;
    } else {
      it->second += c;
      if (qschur::is_zero(it->second)) coeffs_.erase(it);
    }
  }

  friend LaurentBi operator+(const LaurentBi& x, const LaurentBi& y) {
    LaurentBi r = x;
    for (const auto& [e, c] : y.coeffs_) r.add_term(e, c);
    return r;
  }
  friend LaurentBi operator-(const LaurentBi& x, const LaurentBi& y) {
    LaurentBi r = x;
    for (const auto& [e, c] : y.coeffs_) r.add_term(e, -c);
    return r;
  }
  friend LaurentBi operator-(const LaurentBi& x) {
    LaurentBi r;
    for (const auto& [e, c] : x.coeffs_) r.coeffs_[e] = -c;
    return r;
  }
  friend LaurentBi operator*(const LaurentBi& x, const LaurentBi& y) {
    LaurentBi r;
    for (const auto& [e1, c1] : x.coeffs_)
      for (const auto& [e2, c2] : y.coeffs_)
        r.add_term({e1.first + e2.first, e1.second + e2.second}, c1 * c2);
    return r;
  }
  friend bool operator==(const LaurentBi& x, const LaurentBi& y) {
    return x.coeffs_ == y.coeffs_;
  }
  friend bool operator!=(const LaurentBi& x, const LaurentBi& y) { return !(x == y); }

  // units are the nonzero monomials c q^a Q^b
  bool is_unit() const { return coeffs_.size() == 1; }

  LaurentBi unit_inverse() const {
    if (!is_unit()) throw std::domain_error("ZeroInverse: non-unit Laurent polynomial");
    const auto& [e, c] = *coeffs_.begin();
    return monomial(inv(c), -e.first, -e.second);
  }

  // gcd of coefficient numerators over lcm of denominators, sign of the
  // lex-least term
  Rat content() const;

  Exp min_exp() const { return coeffs_.begin()->first; }

  // exact division: returns the quotient iff divisor divides *this exactly
  std::optional<LaurentBi> divide_exact(const LaurentBi& divisor) const;

  // greatest common divisor up to a unit (monomial times rational)
  static LaurentBi gcd(const LaurentBi& a, const LaurentBi& b);

  // degree span in q after expansion
  std::pair<int, int> q_degree_range() const;

  template <class K>
  K evaluate(const K& q0, const K& Q0) const;

  std::string str() const;
  static LaurentBi parse(const std::string& s);

 private:
  Map coeffs_;
};

std::string to_string(const LaurentBi& x);
inline bool is_zero(const LaurentBi& x) { return x.is_zero(); }
inline bool is_one(const LaurentBi& x) { return x == LaurentBi(1); }

/* f^B_d(Q, q) = prod_{i=1-d}^{d-1} (Q^{-2} + q^{2i}); the empty product
   for d = 0 is 1. */
LaurentBi f_B(int d);

/* Fraction field of LaurentBi.  Canonical form: the denominator has its
   lexicographically least exponent shifted to (0,0) with coefficient 1,
   and a common rational content of numerator and denominator is removed.
   Equality testing cross-multiplies, so the form is only cosmetic. */
class FracBi {
 public:
  FracBi() : num_(), den_(1) {}
  FracBi(long c) : num_(c), den_(1) {}
  FracBi(const Rat& c) : num_(c), den_(1) {}
  FracBi(const LaurentBi& p) : num_(p), den_(1) {}
  FracBi(LaurentBi n, LaurentBi d);

  static FracBi q(int a = 1) { return FracBi(LaurentBi::q(a)); }
  static FracBi Q(int b = 1) { return FracBi(LaurentBi::Q(b)); }

  const LaurentBi& num() const { return num_; }
  const LaurentBi& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend FracBi operator+(const FracBi& x, const FracBi& y) {
    return FracBi(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
  }
  friend FracBi operator-(const FracBi& x, const FracBi& y) {
    return FracBi(x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_);
  }
  friend FracBi operator-(const FracBi& x) { return FracBi(-x.num_, x.den_); }
  friend FracBi operator*(const FracBi& x, const FracBi& y) {
    return FracBi(x.num_ * y.num_, x.den_ * y.den_);
  }
  friend FracBi operator/(const FracBi& x, const FracBi& y) {
    if (y.is_zero()) throw std::domain_error("ZeroInverse: division by zero FracBi");
    return FracBi(x.num_ * y.den_, x.den_ * y.num_);
  }
  friend bool operator==(const FracBi& x, const FracBi& y) {
    return x.num_ * y.den_ == y.num_ * x.den_;
  }
  friend bool operator!=(const FracBi& x, const FracBi& y) { return !(x == y); }

  std::string str() const;

 private:
  void normalize();
  LaurentBi num_, den_;
};

inline bool is_zero(const FracBi& x) { return x.is_zero(); }
inline bool is_one(const FracBi& x) { return x == FracBi(1); }
inline FracBi inv(const FracBi& x) {
  if (x.is_zero()) throw std::domain_error("ZeroInverse: 1/0 over Q(q,Q)");
  return FracBi(1) / x;
}
std::string to_string(const FracBi& x);

template <class K>
K LaurentBi::evaluate(const K& q0, const K& Q0) const {
  auto power = [](const K& base, int e) {
    K b = e < 0 ? inv(base) : base;
    int n = e < 0 ? -e : e;
    K acc(1);
    for (int k = 0; k < n; ++k) acc = acc * b;
    return acc;
  };
  K acc(0);
  for (const auto& [e, c] : coeffs_)
    acc = acc + K(c) * power(q0, e.first) * power(Q0, e.second);
  return acc;
}

/* Runtime description of the coefficient field a job runs over. */
struct ScalarField {
  enum class Mode { symbolic, rational, gaussian };
  Mode mode = Mode::rational;
  GaussRat q0{2}, Q0{3};  // ignored in symbolic mode

  static ScalarField symbolic() { return {Mode::symbolic, GaussRat(), GaussRat()}; }
  static ScalarField rational(const Rat& q, const Rat& Q) {
    if (is_zero(q) || is_zero(Q))
      throw std::domain_error("ZeroInverse: field parameters must be invertible");
    return {Mode::rational, GaussRat(q), GaussRat(Q)};
  }
  static ScalarField gaussian(const GaussRat& q, const GaussRat& Q) {
    if (is_zero(q) || is_zero(Q))
      throw std::domain_error("ZeroInverse: field parameters must be invertible");
    return {Mode::gaussian, q, Q};
  }
};

/* The pair (q, Q) with precomputed inverses, in whatever field K the
   surrounding computation is templated over. */
template <class K>
struct Params {
  K q, Q, qi, Qi;
  Params(K q_, K Q_) : q(std::move(q_)), Q(std::move(Q_)), qi(inv(q)), Qi(inv(Q)) {}
};

inline Params<Rat> make_params(const Rat& q0, const Rat& Q0) { return Params<Rat>(q0, Q0); }
inline Params<GaussRat> make_params(const GaussRat& q0, const GaussRat& Q0) {
  return Params<GaussRat>(q0, Q0);
}
inline Params<FracBi> symbolic_params() { return Params<FracBi>(FracBi::q(), FracBi::Q()); }

template <class K>
K specialize(const LaurentBi& x, const Params<K>& par) {
  return x.evaluate(par.q, par.Q);
}

}  // namespace qschur
