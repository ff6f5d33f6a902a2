#include "qschur/reptype.hpp"

namespace qschur {

std::string to_string(RepType t) {
  switch (t) {
    case RepType::semisimple: return "semisimple";
    case RepType::finite_type: return "finite";
    case RepType::tame: return "tame";
    case RepType::wild: return "wild";
  }
  return "?";
}

namespace {

RepType pick(bool ss, bool fin, bool tame) {
  if (ss + fin + tame > 1)
    throw std::logic_error("classification clauses overlap; transcription bug");
  if (ss) return RepType::semisimple;
  if (fin) return RepType::finite_type;
  if (tame) return RepType::tame;
  return RepType::wild;
}

}  // namespace

RepType classify_A(int n, int r, const FieldParams& par) {
  if (n < 1 || r < 0 || !par.valid())
    throw std::invalid_argument("UnsupportedRegime: bad classifier input");
  const bool gen = par.generic;
  const int l = par.l, p = par.p;

  bool ss = n == 1 || gen || r < l ||
            (n == 2 && p == 0 && l == 2 && r % 2 == 1) ||
            (n == 2 && p >= 3 && l == 2 && r % 2 == 1 && r < 2 * p + 1);

  bool fin =
      !gen && l <= r &&
      ((n >= 3 && r < 2 * l) ||
       (n == 2 && p != 0 && l >= 3 && r < l * p) ||
       (n == 2 && p == 0 && (l >= 3 || (l == 2 && r % 2 == 0))) ||
       (n == 2 && p >= 3 && l == 2 &&
        ((r % 2 == 0 && r < 2 * p) || (r % 2 == 1 && 2 * p + 1 <= r && r < 2 * p * p + 1))));

  bool tame = !gen && ((n == 3 && l == 3 && p != 2 && (r == 7 || r == 8)) ||
                       (n == 3 && l == 2 && (r == 4 || r == 5)) ||
                       (n == 4 && l == 2 && r == 5) ||
                       (n == 2 && l >= 3 && (p == 2 || p == 3) && p * l <= r &&
                        r < (p + 1) * l) ||
                       (n == 2 && l == 2 && p == 3 &&
                        (r == 6 || r == 19 || r == 21 || r == 23)));

  return pick(ss, fin, tame);
}

RepType classify_B(int n, int d, const FieldParams& par) {
  if (n < 1 || d < 0 || !par.valid())
    throw std::invalid_argument("UnsupportedRegime: bad classifier input");
  if (!par.generic && par.l < 2)
    throw std::invalid_argument("UnsupportedRegime: type B theorems need q^2 != 1");
  const bool gen = par.generic;
  const int l = par.l, p = par.p;

  bool ss = n == 1 || n == 2 || gen || d < l;

  // the n = 4 finite clauses carry the literal "d >= 4 with d odd"
  // wording; parity takes precedence, so d = 4 itself never qualifies
  bool fin = !gen && l <= d &&
             ((n >= 5 && d < 2 * l) ||
              (n == 3 && p == 0) ||
              (n == 3 && p >= 2 && d < l * p) ||
              (n == 4 && p == 0 && l == 2 && d >= 4 && d % 2 == 1) ||
              (n == 4 && p >= 3 && l == 2 && 4 < d && d <= 2 * p - 1 && d % 2 == 1));

  bool tame = !gen && ((n == 3 && l == 2 && p == 3 && d == 6) ||
                       (n == 3 && l >= 3 && (p == 2 || p == 3) && l * p <= d &&
                        d < l * (p + 1)) ||
                       (n == 4 && l == 2 && p == 3 && d == 7));

  return pick(ss, fin, tame);
}

std::optional<int> mult_order_qsq(const ScalarField& field) {
  if (field.mode == ScalarField::Mode::symbolic)
    throw std::invalid_argument("UnsupportedRegime: order undefined in symbolic mode");
  GaussRat x = field.q0 * field.q0;
  GaussRat acc = x;
  // roots of unity in Q(i) have order dividing 4
  for (int k = 1; k <= 4; ++k) {
    if (is_one(acc)) return k;
    acc = acc * x;
  }
  return std::nullopt;
}

ConditionFlags condition_report(int n, int d, const ScalarField& field) {
  if (field.mode == ScalarField::Mode::symbolic)
    throw std::invalid_argument("UnsupportedRegime: condition_report needs numeric field");
  ConditionFlags f;
  GaussRat val = f_B(d).evaluate(field.q0, field.Q0);
  f.fB_invertible = !is_zero(val);
  f.r_ge_d = n / 2 >= d;
  auto ord = mult_order_qsq(field);
  f.ell_ge_4_or_generic = !ord.has_value() || *ord >= 4;
  return f;
}

}  // namespace qschur
