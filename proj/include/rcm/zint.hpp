#pragma once
// The rational integers as a ring descriptor, mainly for exact big-integer
// sanity checks (e.g. Pascal matrix inversion over Z). Not enumerable.

#include <stdexcept>
#include <string>

#include <gmpxx.h>

#include "rcm/numtheory.hpp"

namespace rcm {

struct ZRing {
  using Elem = mpz_class;
  static constexpr bool kIsField = false;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem add(const Elem& x, const Elem& y) const { return x + y; }
  Elem sub(const Elem& x, const Elem& y) const { return x - y; }
  Elem neg(const Elem& x) const { return -x; }
  Elem mul(const Elem& x, const Elem& y) const { return x * y; }
  bool is_unit(const Elem& x) const { return x == 1 || x == -1; }
  Elem inv_unit(const Elem& x) const {
    if (!is_unit(x)) throw std::domain_error("ZRing: not a unit");
    return x;
  }
  bool eq(const Elem& x, const Elem& y) const { return x == y; }
  bool same(const ZRing&) const { return true; }
  u64 size() const { return 0; }  // infinite
  Elem elem_at(u64) const { throw std::logic_error("ZRing: not enumerable"); }
  u64 encoding(const Elem&) const { throw std::logic_error("ZRing: not enumerable"); }
  Elem from_int(i64 v) const { return mpz_class(static_cast<long>(v)); }
  mpz_class lift(const Elem& x) const { return x; }
  Elem reduce_int(const mpz_class& v) const { return v; }
  std::string str(const Elem& x) const { return x.get_str(); }
};

}  // namespace rcm
