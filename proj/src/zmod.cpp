#include "rcm/zmod.hpp"

#include <stdexcept>

#include "rcm/lifting.hpp"

namespace rcm {

ZmodRing::ZmodRing(u64 a) : a_(a) {
  if (a < 2) throw std::invalid_argument("ZmodRing: modulus must be >= 2");
  fact_ = factorize(a);
}

ZmodRing::Elem ZmodRing::inv_unit(Elem x) const {
  x %= a_;
  // Extended Euclid on (x, a); the Bezout coefficient of x is the inverse.
  i64 old_r = static_cast<i64>(x), r = static_cast<i64>(a_);
  i64 old_s = 1, s = 0;
  while (r != 0) {
    const i64 q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
  }
  if (old_r != 1) throw std::domain_error("ZmodRing: not a unit");
  return from_int(old_s);
}

ZmodRing::Elem ZmodRing::reduce_int(const mpz_class& v) const {
  mpz_class r = v % mpz_class(static_cast<unsigned long>(a_));
  if (r < 0) r += static_cast<unsigned long>(a_);
  return r.get_ui();
}

namespace {
void require_same_ring(const ZmodElement& x, const ZmodElement& y) {
  if (!x.ring->same(*y.ring))
    throw std::invalid_argument("ZmodElement: operands from different rings");
}
}  // namespace

ZmodElement zmod_add(const ZmodElement& x, const ZmodElement& y) {
  require_same_ring(x, y);
  return {*x.ring, x.ring->add(x.value, y.value)};
}

ZmodElement zmod_mul(const ZmodElement& x, const ZmodElement& y) {
  require_same_ring(x, y);
  return {*x.ring, x.ring->mul(x.value, y.value)};
}

ZmodElement zmod_neg(const ZmodElement& x) { return {*x.ring, x.ring->neg(x.value)}; }

bool is_unit(const ZmodElement& x) { return x.ring->is_unit(x.value); }

std::vector<ZmodRing> crt_split(u64 n, const ZmodRing& ring) {
  (void)n;  // the splitting is independent of the matrix size
  std::vector<ZmodRing> parts;
  for (auto [p, e] : ring.factorization().pairs) {
    u64 pe = 1;
    for (u32 i = 0; i < e; ++i) pe *= p;
    parts.emplace_back(pe);
  }
  return parts;
}

ZmodRing lifted_modulus_ring(const ZmodRing& ring) {
  const auto& pairs = ring.factorization().pairs;
  if (pairs.size() != 1)
    throw std::domain_error("lifted_modulus_ring: modulus is not a prime power");
  return ZmodRing(ring.modulus() * pairs[0].first);
}

Circulant<ZmodRing> lift_circulant(const Circulant<ZmodRing>& c,
                                   const ZmodRing& lifted) {
  const auto& pairs = c.ring().factorization().pairs;
  if (pairs.size() != 1)
    throw std::domain_error("lift_circulant: source modulus is not a prime power");
  if (lifted.modulus() != c.ring().modulus() * pairs[0].first)
    throw std::invalid_argument(
        "lift_circulant: target ring must be Z/p^{t+1}Z over the source Z/p^tZ");
  if (!is_regular(c)) throw std::domain_error("lift_circulant: singular circulant");
  // Each residue lifts to its least non-negative representative, which is
  // already a valid residue of the larger modulus.
  Circulant<ZmodRing> out(lifted, c.column);
  return out;
}

mpz_class kernel_circulant_count(u64 p, u32 n) {
  return mpz_pow_u64(p, n);
}

}  // namespace rcm
