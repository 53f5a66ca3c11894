#include "rcm/numtheory.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rcm {

u64 powmod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 r = 1;
  base %= m;
  while (exp) {
    if (exp & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (u64 f = 5; f <= n / f; f += 6) {
    if (n % f == 0 || n % (f + 2) == 0) return false;
  }
  return true;
}

u64 Factorization::value() const {
  u64 v = 1;
  for (auto [p, e] : pairs)
    for (u32 i = 0; i < e; ++i) v *= p;
  return v;
}

std::string Factorization::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i) os << " * ";
    os << pairs[i].first;
    if (pairs[i].second > 1) os << "^" << pairs[i].second;
  }
  return os.str();
}

Factorization factorize(u64 n) {
  if (n < 2) throw std::invalid_argument("factorize: n must be >= 2");
  Factorization f;
  auto strip = [&](u64 p) {
    u32 e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) f.pairs.emplace_back(p, e);
  };
  strip(2);
  strip(3);
  for (u64 p = 5; p <= n / p; p += 6) {
    strip(p);
    strip(p + 2);
  }
  if (n > 1) f.pairs.emplace_back(n, 1);
  return f;
}

std::vector<u64> divisors(u64 n) {
  if (n < 1) throw std::invalid_argument("divisors: n must be >= 1");
  std::vector<u64> ds{1};
  if (n > 1) {
    for (auto [p, e] : factorize(n).pairs) {
      const std::size_t base = ds.size();
      u64 pk = 1;
      for (u32 i = 0; i < e; ++i) {
        pk *= p;
        for (std::size_t j = 0; j < base; ++j) ds.push_back(ds[j] * pk);
      }
    }
    std::sort(ds.begin(), ds.end());
  }
  return ds;
}

u64 euler_phi(u64 n) {
  if (n < 1) throw std::invalid_argument("euler_phi: n must be >= 1");
  if (n == 1) return 1;
  u64 phi = 1;
  for (auto [p, e] : factorize(n).pairs) {
    u64 pk = 1;
    for (u32 i = 0; i + 1 < e; ++i) pk *= p;
    phi *= pk * (p - 1);
  }
  return phi;
}

u64 multiplicative_order(u64 k, u64 d) {
  if (d == 0) throw std::invalid_argument("multiplicative_order: d must be >= 1");
  if (d == 1) return 1;
  k %= d;
  if (std::gcd(k, d) != 1)
    throw std::domain_error("multiplicative_order: k and d are not coprime");
  // The order divides phi(d); strip primes from that exponent while the
  // power stays 1.
  u64 e = euler_phi(d);
  if (e == 1) return 1;
  for (auto [p, _] : factorize(e).pairs) {
    while (e % p == 0 && powmod(k, e / p, d) == 1) e /= p;
  }
  return e;
}

u64 lucas_binomial(u64 a, u64 b, u64 p) {
  if (!is_prime(p)) throw std::domain_error("lucas_binomial: p must be prime");
  u64 r = 1;
  while (a || b) {
    const u64 ad = a % p, bd = b % p;
    if (bd > ad) return 0;
    mpz_class digit;
    mpz_bin_uiui(digit.get_mpz_t(), static_cast<unsigned long>(ad),
                 static_cast<unsigned long>(bd));
    r = mulmod(r, mpz_class(digit % p).get_ui(), p);
    a /= p;
    b /= p;
  }
  return r;
}

std::pair<u64, u32> split_p_power(u64 n, u64 p) {
  u32 r = 0;
  while (n % p == 0) {
    n /= p;
    ++r;
  }
  return {n, r};
}

mpz_class mpz_pow_u64(u64 base, u64 exp) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base),
                static_cast<unsigned long>(exp));
  return r;
}

}  // namespace rcm
