/*
  Decision procedures for the representation type of the q-Schur
  algebras of types A and B, plus the numeric parameter-condition flags
  used by the cover-theory results.  The classifiers are faithful
  transcriptions of the published case lists; parameter combinations
  matched by no semisimple/finite/tame clause are wild.
*/
#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "qschur/scalars.hpp"

namespace qschur {

enum class RepType { semisimple, finite_type, tame, wild };

std::string to_string(RepType t);

/* p = char(K); l = multiplicative order of q-bar = q^{-2} (equivalently
   of q^2), or generic when q-bar is not a root of unity.  The theorems
   assume q-bar != 1, so l >= 2 whenever it is given. */
struct FieldParams {
  int p = 0;          // 0 or a prime
  bool generic = true;
  int l = 0;          // >= 2 when !generic

  static FieldParams at_root(int l, int p) { return {p, false, l}; }
  static FieldParams generic_q(int p = 0) { return {p, true, 0}; }
  bool valid() const { return generic || l >= 2; }
};

RepType classify_A(int n, int r, const FieldParams& par);
RepType classify_B(int n, int d, const FieldParams& par);

/* Multiplicative order of q0^2 in the field; nullopt when q0^2 is not a
   root of unity.  Over Q the roots of unity are +-1; over Q(i) also
   +-i. */
std::optional<int> mult_order_qsq(const ScalarField& field);

struct ConditionFlags {
  bool fB_invertible = false;
  bool r_ge_d = false;
  bool ell_ge_4_or_generic = false;
  bool all() const { return fB_invertible && r_ge_d && ell_ge_4_or_generic; }
};

ConditionFlags condition_report(int n, int d, const ScalarField& field);

}  // namespace qschur
