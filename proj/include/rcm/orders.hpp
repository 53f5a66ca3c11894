#pragma once
// Closed-form orders of the groups RC_n of regular circulant n x n
// matrices, with per-divisor factor breakdowns for diagnosability.
//
// Over F_{p^t}, write n = m p^r with p not dividing m; then
//   |RC_n(F_{p^t})| = prod over d | m of
//       (p^{t e_d} - 1)^{phi(d)/e_d} * p^{t (p^r - 1) phi(d)},
// where e_d = ord_d(p^t). Over Z/aZ the order is the product over primes
// p | a (with exponent t_p) of p^{n (t_p - 1)} times the t = 1 field-case
// product for that prime.

#include <string>
#include <vector>

#include <gmpxx.h>

#include "rcm/numtheory.hpp"

namespace rcm {

struct OrderTerm {
  u64 p;             // prime this factor belongs to
  u64 d;             // divisor of the prime-free part m; 0 marks the
                     // p^{n(t_p-1)} kernel-lifting factor of the Z/aZ case
  mpz_class factor;  // exact contribution to the product
};

struct GroupOrder {
  enum class Kind { field, zmod } kind;
  u64 p = 0;  // field case: characteristic
  u32 t = 0;  // field case: extension degree over F_p
  u64 a = 0;  // zmod case: modulus
  u32 n = 0;  // matrix size
  mpz_class value;
  std::vector<OrderTerm> breakdown;  // product of factors equals value
};

// |RC_n(F_{p^t})| by the divisor-product formula; rejects t = 0, n = 0 and
// non-prime p.
GroupOrder order_rc_field(u64 p, u32 t, u32 n);

// |RC_n(Z/aZ)| as the product over the prime-power factors of a; rejects
// a < 2 and n = 0.
GroupOrder order_rc_zmod(u64 a, u32 n);

// Order of the determinant-one subgroup: |RC_n(F_{p^t})| / (p^t - 1). The
// division is checked to be exact (it always is; the determinant map onto
// the multiplicative group is surjective on regular circulants).
mpz_class sl_count(u64 p, u32 t, u32 n);

// The set of determinants attained by regular circulants over F_{p^t},
// found by exhaustive scan; equals all of F_{p^t}^* (verified by tests).
// Codes refer to the returned field. Throws BudgetError when (p^t)^n
// exceeds the budget.
struct DetImageResult {
  u64 p;
  u32 t;
  std::vector<u32> dets;  // ascending element codes, all nonzero
};
DetImageResult det_image(u64 p, u32 t, u32 n, u64 budget);

}  // namespace rcm
