#pragma once
// Exact arithmetic in Z/aZ.
//
// ZmodRing is a ring descriptor in the sense used by Matrix<R> and
// Circulant<R> (see matrix.hpp for the full interface contract): a small
// immutable value object providing element arithmetic, unit tests and
// integer lifts. Elements are least non-negative residues stored as u64.

#include <string>
#include <vector>

#include <gmpxx.h>

#include "rcm/numtheory.hpp"

namespace rcm {

class ZmodRing {
 public:
  using Elem = u64;
  static constexpr bool kIsField = false;

  // a >= 2 required.
  explicit ZmodRing(u64 a);

  u64 modulus() const { return a_; }
  const Factorization& factorization() const { return fact_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem add(Elem x, Elem y) const { return (x + y) % a_; }
  Elem sub(Elem x, Elem y) const { return (x + a_ - y) % a_; }
  Elem neg(Elem x) const { return x == 0 ? 0 : a_ - x; }
  Elem mul(Elem x, Elem y) const { return mulmod(x, y, a_); }
  bool is_unit(Elem x) const { return std::gcd(x, a_) == 1; }
  // Inverse of a unit; throws std::domain_error on non-units.
  Elem inv_unit(Elem x) const;

  bool eq(Elem x, Elem y) const { return x == y; }
  bool same(const ZmodRing& o) const { return a_ == o.a_; }

  u64 size() const { return a_; }
  Elem elem_at(u64 i) const { return i % a_; }
  u64 encoding(Elem x) const { return x; }
  Elem from_int(i64 v) const {
    i64 r = v % static_cast<i64>(a_);
    return static_cast<Elem>(r < 0 ? r + static_cast<i64>(a_) : r);
  }
  mpz_class lift(Elem x) const { return mpz_class(static_cast<unsigned long>(x)); }
  Elem reduce_int(const mpz_class& v) const;
  std::string str(Elem x) const { return std::to_string(x); }

 private:
  u64 a_;
  Factorization fact_;
};

// Element wrapper carrying its ring, for ergonomic ring arithmetic in
// callers and tests. Library internals work on raw Elem values instead.
struct ZmodElement {
  const ZmodRing* ring;
  u64 value;

  ZmodElement(const ZmodRing& r, u64 v) : ring(&r), value(v % r.modulus()) {}
};

// Residue arithmetic on wrapped elements; mixed-ring operands are rejected
// with std::invalid_argument.
ZmodElement zmod_add(const ZmodElement& x, const ZmodElement& y);
ZmodElement zmod_mul(const ZmodElement& x, const ZmodElement& y);
ZmodElement zmod_neg(const ZmodElement& x);
bool is_unit(const ZmodElement& x);

inline bool operator==(const ZmodElement& x, const ZmodElement& y) {
  return x.ring->same(*y.ring) && x.value == y.value;
}

// The prime-power factor rings Z/p^e Z of the given ring, ordered by
// ascending prime. The group of regular circulants over Z/aZ is the direct
// product of the groups over these factors, so group orders multiply
// accordingly. The matrix size n does not enter the splitting; it is part
// of the signature because the decomposition statement is about n x n
// circulant groups.
std::vector<ZmodRing> crt_split(u64 n, const ZmodRing& ring);

// The ring Z/p^{t+1}Z above a prime-power ring Z/p^tZ; rejects rings whose
// modulus is not a prime power. Used together with lift_circulant (see
// lifting.hpp).
ZmodRing lifted_modulus_ring(const ZmodRing& ring);

// p^n, the number of circulant matrices in the kernel of the reduction
// GL_n(Z/p^{t+1}Z) -> GL_n(Z/p^tZ).
mpz_class kernel_circulant_count(u64 p, u32 n);

}  // namespace rcm
