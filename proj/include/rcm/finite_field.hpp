#pragma once
// F_{p^s} as F_p[x] modulo a deterministic irreducible polynomial.
//
// Elements are u32 codes: the coefficient vector (c_0, ..., c_{s-1}) of a
// residue polynomial read as the base-p integer sum c_i p^i, constant term
// least significant. Code arithmetic:
//   - the modulus is the monic irreducible of degree s with minimal code,
//   - the generator is the smallest code of multiplicative order p^s - 1,
//   - small fields get exp/log tables (and, for odd p, an addition table),
//     large ones fall back to polynomial arithmetic.
// Subfields are never constructed separately: F_{p^t} lives inside F_{p^s}
// as the fixed points of the relative Frobenius x -> x^{p^t}, so questions
// about compatibility of embeddings never arise.

#include <string>
#include <vector>

#include <gmpxx.h>

#include "rcm/numtheory.hpp"

namespace rcm {

class FiniteField {
 public:
  using Elem = u32;
  static constexpr bool kIsField = true;
  // Fields with at most this many elements get exp/log tables.
  static constexpr u64 kDefaultTableLimit = u64{1} << 20;

  // Requires p prime, s >= 1 and p^s below 2^31 (codes are u32).
  FiniteField(u64 p, u32 s, u64 table_limit = kDefaultTableLimit);

  u64 p() const { return p_; }
  u32 s() const { return s_; }
  u64 q() const { return q_; }  // p^s
  // Monic modulus polynomial, ascending coefficients, length s+1.
  const std::vector<u32>& modulus() const { return modulus_; }
  Elem generator() const { return generator_; }
  bool has_tables() const { return !log_.empty(); }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem add(Elem x, Elem y) const;
  Elem sub(Elem x, Elem y) const { return add(x, neg(y)); }
  Elem neg(Elem x) const;
  Elem mul(Elem x, Elem y) const;
  bool is_unit(Elem x) const { return x != 0; }
  Elem inv_unit(Elem x) const;
  bool eq(Elem x, Elem y) const { return x == y; }
  bool same(const FiniteField& o) const {
    return p_ == o.p_ && s_ == o.s_ && modulus_ == o.modulus_;
  }
  u64 size() const { return q_; }
  Elem elem_at(u64 i) const { return static_cast<Elem>(i % q_); }
  u64 encoding(Elem x) const { return x; }
  // Image of a rational integer: its residue mod p as a constant.
  Elem from_int(i64 v) const {
    i64 r = v % static_cast<i64>(p_);
    return static_cast<Elem>(r < 0 ? r + static_cast<i64>(p_) : r);
  }
  std::string str(Elem x) const;  // "[c0,c1,...]" ascending coefficients

  // x^e with e any integer; negative exponents require x != 0.
  Elem pow(Elem x, i64 e) const;
  // The relative Frobenius x -> x^{p^t}; a field automorphism fixing F_p.
  Elem frobenius(Elem x, u64 t) const;
  // Fixed-point test for the relative Frobenius; requires t | s.
  bool in_subfield(Elem x, u32 t) const;
  // All p^t elements of the subfield F_{p^t}, ascending by code; t | s.
  std::vector<Elem> subfield_elements(u32 t) const;
  // generator^((q-1)/m), of exact multiplicative order m; requires m | q-1.
  Elem primitive_root_of_unity(u64 m) const;
  // Multiplicative order of a nonzero element.
  u64 element_order(Elem x) const;
  // Coefficient vector of a code, ascending, length s.
  std::vector<u32> coeffs(Elem x) const;

 private:
  u64 p_;
  u32 s_;
  u64 q_;
  std::vector<u32> modulus_;  // ascending, length s+1, monic
  Elem generator_ = 0;

  // Polynomial fallback arithmetic (codes in, codes out).
  Elem poly_mul(Elem x, Elem y) const;
  Elem poly_pow(Elem x, u64 e) const;

  // Tables; empty when q_ exceeds the construction-time limit.
  std::vector<u32> exp_;  // exp_[k] = generator^k, k in [0, 2(q-1))
  std::vector<u32> log_;  // log_[x] for x != 0
  std::vector<u32> add_;  // q x q addition table, only for small odd p fields
};

// Element wrapper carrying its field, for ergonomic arithmetic in callers
// and tests. Library internals pass raw codes plus the field.
struct FieldElement {
  const FiniteField* field;
  u32 code;

  FieldElement(const FiniteField& f, u32 c) : field(&f), code(c) {}
};

FieldElement operator+(const FieldElement& x, const FieldElement& y);
FieldElement operator-(const FieldElement& x, const FieldElement& y);
FieldElement operator*(const FieldElement& x, const FieldElement& y);
FieldElement operator/(const FieldElement& x, const FieldElement& y);
bool operator==(const FieldElement& x, const FieldElement& y);

FiniteField make_field(u64 p, u32 s, u64 table_limit = FiniteField::kDefaultTableLimit);

// The least s with t | s and m | p^s - 1, i.e. the degree of the smallest
// extension of F_{p^t} containing the m-th roots of unity. This is
// lcm(t, ord_m(p)); requires gcd(p, m) = 1.
u32 required_extension_degree(u64 p, u32 t, u64 m);

// Deterministic embedding of F_{p^t} (its own minimal-modulus model) into
// an ambient F_{p^s} with t | s: the sub-modulus is evaluated at its
// minimal-code root in the ambient field. The image is exactly the
// Frobenius-fixed subfield. For t = s this is the identity on codes.
class SubfieldEmbedding {
 public:
  SubfieldEmbedding(const FiniteField& sub, const FiniteField& ambient);

  u32 operator()(u32 sub_code) const;  // sub-field code -> ambient code
  const FiniteField& sub() const { return *sub_; }
  const FiniteField& ambient() const { return *ambient_; }
  u32 root() const { return root_; }

 private:
  const FiniteField* sub_;
  const FiniteField* ambient_;
  u32 root_;  // minimal-code root of the sub-modulus in the ambient field
};

}  // namespace rcm
