#pragma once
// Independent oracles for the test suite.
//
// Nothing here calls the code paths under test: totients count gcds,
// orders iterate multiplications, binomials come from GMP, circulant
// matrices are built by row rotation instead of the index formula,
// determinants are cofactor expansions, and brute-force counts over Z/aZ
// use plain integer arithmetic throughout.

#include <numeric>
#include <vector>

#include <gmpxx.h>

#include "rcm/matrix.hpp"
#include "rcm/numtheory.hpp"

namespace oracle {

using rcm::u32;
using rcm::u64;

inline u64 phi(u64 n) {
  u64 count = 0;
  for (u64 k = 1; k <= n; ++k)
    if (std::gcd(k, n) == 1) ++count;
  return count;
}

inline u64 mult_order(u64 k, u64 d) {
  if (d == 1) return 1;
  u64 acc = k % d, e = 1;
  while (acc != 1) {
    acc = acc * k % d;  // d is small in tests; no overflow
    ++e;
  }
  return e;
}

inline std::vector<u64> divisors(u64 n) {
  std::vector<u64> out;
  for (u64 d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

inline mpz_class binomial(u64 a, u64 b) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a),
               static_cast<unsigned long>(b));
  return r;
}

inline u64 binomial_mod(u64 a, u64 b, u64 p) {
  return mpz_fdiv_ui(binomial(a, b).get_mpz_t(), p);
}

// Dense circulant by the rotation definition: the first row is the
// reversed defining vector, every later row is the right rotation of the
// row above it.
template <class R>
rcm::Matrix<R> circulant_dense(const R& ring,
                               const std::vector<typename R::Elem>& v) {
  const u32 n = static_cast<u32>(v.size());
  rcm::Matrix<R> m(ring, n, n);
  for (u32 j = 0; j < n; ++j) m.at(0, j) = v[n - 1 - j];
  for (u32 i = 1; i < n; ++i)
    for (u32 j = 0; j < n; ++j) m.at(i, j) = m.at(i - 1, (j + n - 1) % n);
  return m;
}

// Determinant by cofactor expansion along the first row; exponential, for
// small matrices only.
template <class R>
typename R::Elem det_cofactor(const rcm::Matrix<R>& m) {
  const R& ring = m.ring();
  const u32 n = m.rows();
  if (n == 1) return m.at(0, 0);
  typename R::Elem acc = ring.zero();
  for (u32 j = 0; j < n; ++j) {
    rcm::Matrix<R> minor(ring, n - 1, n - 1);
    for (u32 r = 1; r < n; ++r)
      for (u32 c = 0, cc = 0; c < n; ++c) {
        if (c == j) continue;
        minor.at(r - 1, cc++) = m.at(r, c);
      }
    typename R::Elem term = ring.mul(m.at(0, j), det_cofactor(minor));
    if (j % 2 == 1) term = ring.neg(term);
    acc = ring.add(acc, term);
  }
  return acc;
}

// Integer determinant by cofactor expansion.
inline mpz_class det_int(const std::vector<std::vector<mpz_class>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  mpz_class acc = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<mpz_class>> minor(n - 1,
                                              std::vector<mpz_class>(n - 1));
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c) {
        if (c == j) continue;
        minor[r - 1][cc++] = m[r][c];
      }
    const mpz_class term = m[0][j] * det_int(minor);
    acc += (j % 2 == 1) ? -term : term;
  }
  return acc;
}

// Brute-force count of regular circulants over Z/aZ (or, when det_one,
// of those with determinant 1 mod a), using only integer arithmetic: the
// dense matrix comes from row rotation and the determinant from cofactor
// expansion over Z, tested for being a unit mod a.
inline mpz_class count_regular_zmod(u64 a, u32 n, bool det_one = false) {
  mpz_class count = 0;
  std::vector<u64> v(n, 0);
  const mpz_class total = rcm::mpz_pow_u64(a, n);
  for (mpz_class idx = 0; idx < total; ++idx) {
    std::vector<std::vector<mpz_class>> dense(n, std::vector<mpz_class>(n));
    for (u32 j = 0; j < n; ++j) dense[0][j] = v[n - 1 - j];
    for (u32 i = 1; i < n; ++i)
      for (u32 j = 0; j < n; ++j) dense[i][j] = dense[i - 1][(j + n - 1) % n];
    mpz_class det = det_int(dense) % static_cast<unsigned long>(a);
    if (det < 0) det += static_cast<unsigned long>(a);
    if (det_one ? det == 1 : gcd(det, mpz_class(static_cast<unsigned long>(a))) == 1)
      ++count;
    for (u32 i = n; i-- > 0;) {
      if (++v[i] < a) break;
      v[i] = 0;
    }
  }
  return count;
}

}  // namespace oracle
