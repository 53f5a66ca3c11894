#pragma once

// Elementary number theory used throughout the library: factorization,
// divisor enumeration, Euler phi, multiplicative orders, and binomial
// coefficients modulo a prime via base-p digits.
//
// Everything here is exact and deterministic. Inputs are desk-scale
// (they fit in 64 bits); results that can overflow 64 bits are returned
// as GMP integers by the callers that assemble them.

#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace rcm {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;

inline u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

u64 powmod(u64 base, u64 exp, u64 m);

/// Deterministic primality by trial division. Intended for desk-scale
/// inputs; cost is O(sqrt(n)).
bool is_prime(u64 n);

/// Prime factorization as sorted (prime, exponent) pairs.
struct Factorization {
  std::vector<std::pair<u64, u32>> pairs;  // primes strictly increasing

  u64 value() const;  // product of prime^exponent
  std::string str() const;
};

/// Factorize n >= 2 by trial division.
Factorization factorize(u64 n);

/// All positive divisors of n >= 1, ascending.
std::vector<u64> divisors(u64 n);

/// Euler's totient, computed from the factorization of n.
u64 euler_phi(u64 n);

/// Smallest e >= 1 with k^e = 1 (mod d). Requires gcd(k, d) = 1;
/// d = 1 yields 1 (trivial unit group).
u64 multiplicative_order(u64 k, u64 d);

/// binomial(a, b) mod p as the product of digit-wise binomials of the
/// base-p expansions of a and b. Zero whenever some digit of b exceeds
/// the corresponding digit of a (in particular for b > a).
u64 lucas_binomial(u64 a, u64 b, u64 p);

/// Split n = m * p^r with p not dividing m; returns (m, r).
std::pair<u64, u32> split_p_power(u64 n, u64 p);

/// p^e as an exact big integer.
mpz_class mpz_pow_u64(u64 base, u64 exp);

}  // namespace rcm
