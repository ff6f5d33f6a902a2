#include "qschur/scalars.hpp"

#include <sstream>

namespace qschur {

std::string to_string(const Rat& x) {
  std::string s = x.get_num().get_str();
  if (x.get_den() != 1) s += "/" + x.get_den().get_str();
  return s;
}

Rat rat_from_string(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  r.canonicalize();
  return r;
}

std::string to_string(const GaussRat& x) {
  if (is_zero(x.im)) return to_string(x.re);
  std::string s;
  if (!is_zero(x.re)) s += to_string(x.re) + "+";
  s += to_string(x.im) + "i";
  return s;
}

Rat LaurentBi::content() const {
  if (coeffs_.empty()) return Rat(0);
  mpz_class g = 0, l = 1;
  for (const auto& [e, c] : coeffs_) {
    mpz_class gg;
    mpz_gcd(gg.get_mpz_t(), g.get_mpz_t(), c.get_num().get_mpz_t());
    g = gg;
    mpz_class ll;
    mpz_lcm(ll.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    l = ll;
  }
  Rat r(g, l);
  r.canonicalize();
  if (sgn(coeffs_.begin()->second) < 0) r = -r;
  return r;
}

std::pair<int, int> LaurentBi::q_degree_range() const {
  if (coeffs_.empty()) return {0, 0};
  int lo = coeffs_.begin()->first.first, hi = lo;
  for (const auto& [e, c] : coeffs_) {
    (void)c;
    lo = std::min(lo, e.first);
    hi = std::max(hi, e.first);
  }
  return {lo, hi};
}

std::optional<LaurentBi> LaurentBi::divide_exact(const LaurentBi& divisor) const {
  if (divisor.is_zero()) return std::nullopt;
  if (is_zero()) return LaurentBi();
  // shift both to plain polynomials (componentwise minimal exponents to
  // zero) so leading-term division in lex order is valid
  auto comp_min = [](const LaurentBi& p) {
    Exp m = p.coeffs().begin()->first;
    for (const auto& [e, c] : p.coeffs()) {
      (void)c;
      m.first = std::min(m.first, e.first);
      m.second = std::min(m.second, e.second);
    }
    return m;
  };
  Exp sn = comp_min(*this), sd = comp_min(divisor);
  auto shift = [](const LaurentBi& p, int da, int db) {
    LaurentBi r;
    for (const auto& [e, c] : p.coeffs())
      r.add_term({e.first + da, e.second + db}, c);
    return r;
  };
  LaurentBi rem = shift(*this, -sn.first, -sn.second);
  LaurentBi d = shift(divisor, -sd.first, -sd.second);
  Exp ld = d.coeffs_.rbegin()->first;  // lex-leading term of the divisor
  Rat lc = d.coeffs_.rbegin()->second;
  LaurentBi quo;
  while (!rem.is_zero()) {
    Exp lr = rem.coeffs_.rbegin()->first;
    Rat cr = rem.coeffs_.rbegin()->second;
    int da = lr.first - ld.first, db = lr.second - ld.second;
    if (da < 0 || db < 0) return std::nullopt;
    LaurentBi t = monomial(cr / lc, da, db);
    quo = quo + t;
    rem = rem - t * d;
  }
  // undo the shifts: this/divisor = quo * q^(sn-sd) Q^(...)
  return shift(quo, sn.first - sd.first, sn.second - sd.second);
}

namespace {

/* Univariate polynomials over Q, dense by ascending degree, used as
   the coefficient ring for the bivariate gcd. */
using UPoly = std::vector<Rat>;

void utrim(UPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

bool uzero(const UPoly& p) { return p.empty(); }

UPoly umul(const UPoly& a, const UPoly& b) {
  if (uzero(a) || uzero(b)) return {};
  UPoly r(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  utrim(r);
  return r;
}

UPoly usub(UPoly a, const UPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rat(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  utrim(a);
  return a;
}

// exact division; the caller guarantees divisibility
UPoly udiv_exact(UPoly a, const UPoly& b) {
  UPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rat(0));
  while (!uzero(a) && a.size() >= b.size()) {
    Rat c = a.back() / b.back();
    size_t shift = a.size() - b.size();
    q[shift] = c;
    UPoly t(shift, Rat(0));
    t.push_back(c);
    a = usub(std::move(a), umul(t, b));
  }
  utrim(q);
  return q;
}

UPoly umod(UPoly a, const UPoly& b) {
  while (!uzero(a) && a.size() >= b.size()) {
    Rat c = a.back() / b.back();
    size_t shift = a.size() - b.size();
    UPoly t(shift, Rat(0));
    t.push_back(c);
    a = usub(std::move(a), umul(t, b));
  }
  return a;
}

UPoly umonic(UPoly a) {
  if (uzero(a)) return a;
  Rat lead = a.back();
  for (auto& v : a) v /= lead;
  return a;
}

UPoly ugcd(UPoly a, UPoly b) {
  while (!uzero(b)) {
    UPoly r = umod(std::move(a), b);
    a = std::move(b);
    b = std::move(r);
  }
  return umonic(std::move(a));
}

/* Bivariate view: coefficients of q^k as univariate polynomials in Q,
   exponents shifted to be nonnegative. */
using BPoly = std::vector<UPoly>;  // by q-degree

void btrim(BPoly& p) {
  while (!p.empty() && uzero(p.back())) p.pop_back();
}

UPoly bcontent(const BPoly& p) {
  UPoly g;
  for (const auto& c : p)
    if (!uzero(c)) g = ugcd(g, c);
  return g;
}

BPoly bprimitive(const BPoly& p, const UPoly& cont) {
  BPoly r;
  for (const auto& c : p) r.push_back(uzero(c) ? UPoly{} : udiv_exact(c, cont));
  return r;
}

BPoly bscale(const BPoly& a, const UPoly& c) {
  BPoly r;
  for (const auto& v : a) r.push_back(umul(v, c));
  return r;
}

BPoly bsub(BPoly a, const BPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (size_t i = 0; i < b.size(); ++i) a[i] = usub(std::move(a[i]), b[i]);
  btrim(a);
  return a;
}

// pseudo-remainder of a by b in the variable q
BPoly bprem(BPoly a, const BPoly& b) {
  while (!a.empty() && a.size() >= b.size()) {
    size_t shift = a.size() - b.size();
    UPoly lead = a.back();
    // a <- lc(b) a - lc(a) q^shift b
    a = bscale(a, b.back());
    BPoly t(shift);
    for (const auto& c : b) t.push_back(umul(c, lead));
    a = bsub(std::move(a), t);
  }
  return a;
}

BPoly bgcd(BPoly a, BPoly b) {
  btrim(a);
  btrim(b);
  if (a.empty()) return b;
  if (b.empty()) return a;
  UPoly ca = bcontent(a), cb = bcontent(b);
  a = bprimitive(a, ca);
  b = bprimitive(b, cb);
  while (!b.empty()) {
    BPoly r = bprem(std::move(a), b);
    btrim(r);
    a = std::move(b);
    if (r.empty()) {
      b.clear();
    } else {
      b = bprimitive(r, bcontent(r));
    }
  }
  UPoly cg = ugcd(std::move(ca), std::move(cb));
  return bscale(a, cg);
}

BPoly to_bpoly(const LaurentBi& p) {
  auto e = p.min_exp();
  int minb = 0;
  for (const auto& [ex, c] : p.coeffs()) minb = std::min(minb, ex.second);
  BPoly out;
  for (const auto& [ex, c] : p.coeffs()) {
    size_t qa = ex.first - e.first, qb = ex.second - minb;
    if (out.size() <= qa) out.resize(qa + 1);
    if (out[qa].size() <= qb) out[qa].resize(qb + 1, Rat(0));
    out[qa][qb] = c;
  }
  for (auto& c : out) utrim(c);
  return out;
}

LaurentBi from_bpoly(const BPoly& p) {
  LaurentBi out;
  for (size_t a = 0; a < p.size(); ++a)
    for (size_t b = 0; b < p[a].size(); ++b)
      out.add_term({static_cast<int>(a), static_cast<int>(b)}, p[a][b]);
  return out;
}

}  // namespace

LaurentBi LaurentBi::gcd(const LaurentBi& a, const LaurentBi& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  return from_bpoly(bgcd(to_bpoly(a), to_bpoly(b)));
}

std::string LaurentBi::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : coeffs_) {
    if (!first) os << " + ";
    first = false;
    os << to_string(c) << "*q^" << e.first << "*Q^" << e.second;
  }
  return os.str();
}

std::string to_string(const LaurentBi& x) { return x.str(); }

LaurentBi LaurentBi::parse(const std::string& s) {
  LaurentBi r;
  if (s == "0") return r;
  size_t pos = 0;
  while (pos < s.size()) {
    size_t next = s.find(" + ", pos);
    std::string term = s.substr(pos, next == std::string::npos ? next : next - pos);
    size_t m1 = term.find("*q^");
    size_t m2 = term.find("*Q^");
    if (m1 == std::string::npos || m2 == std::string::npos || m2 < m1)
      throw std::invalid_argument("bad Laurent term: " + term);
    Rat c = rat_from_string(term.substr(0, m1));
    int a = std::stoi(term.substr(m1 + 3, m2 - (m1 + 3)));
    int b = std::stoi(term.substr(m2 + 3));
    r.add_term({a, b}, c);
    if (next == std::string::npos) break;
    pos = next + 3;
  }
  return r;
}

LaurentBi f_B(int d) {
  if (d < 0) throw std::invalid_argument("f_B: d must be nonnegative");
  LaurentBi r(1);
  for (int i = 1 - d; i <= d - 1; ++i)
    r = r * (LaurentBi::Q(-2) + LaurentBi::q(2 * i));
  return r;
}

FracBi::FracBi(LaurentBi n, LaurentBi d) : num_(std::move(n)), den_(std::move(d)) {
  if (den_.is_zero()) throw std::domain_error("ZeroInverse: zero denominator");
  normalize();
}

void FracBi::normalize() {
  if (num_.is_zero()) {
    den_ = LaurentBi(1);
    return;
  }
  if (auto q = num_.divide_exact(den_)) {
    num_ = *q;
    den_ = LaurentBi(1);
  } else if (num_.size() > 1 && den_.size() > 1) {
    LaurentBi g = LaurentBi::gcd(num_, den_);
    if (g.size() > 1) {
      auto qn = num_.divide_exact(g), qd = den_.divide_exact(g);
      if (!qn || !qd) throw std::logic_error("gcd does not divide its arguments");
      num_ = *qn;
      den_ = *qd;
    }
  }
  // make the denominator's lex-least term the constant 1
  auto e = den_.min_exp();
  Rat c = den_.coeffs().begin()->second;
  LaurentBi u = LaurentBi::monomial(inv(c), -e.first, -e.second);
  num_ = num_ * u;
  den_ = den_ * u;
  // strip a common rational content
  Rat cn = num_.content(), cd = den_.content();
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), cn.get_num().get_mpz_t(), cd.get_num().get_mpz_t());
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), cn.get_den().get_mpz_t(), cd.get_den().get_mpz_t());
  Rat common(g, l);
  common.canonicalize();
  if (!qschur::is_zero(common) && !qschur::is_one(common)) {
    LaurentBi ci(inv(common));
    num_ = num_ * ci;
    den_ = den_ * ci;
  }
}

std::string FracBi::str() const {
  if (den_ == LaurentBi(1)) return num_.str();
  return "(" + num_.str() + ") / (" + den_.str() + ")";
}

std::string to_string(const FracBi& x) { return x.str(); }

}  // namespace qschur
