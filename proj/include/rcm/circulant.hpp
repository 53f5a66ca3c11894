#pragma once
// Circulant matrices over a ring descriptor, and the exhaustive regularity
// census used as the independent oracle for the closed order formulas.
//
// A circulant is stored as its defining vector v, the LAST column of the
// dense expansion (A^{n-1}v | A^{n-2}v | ... | Av | v), where A is the
// cyclic shift generator. With 1-based indices the dense entries satisfy
// the defining relation a_{i,j+1} = a_{i-1,j} (indices mod n); internally
// everything is 0-based via dense[i][j] = v[(i + n-1-j) mod n].

#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <gmpxx.h>

#include "rcm/matrix.hpp"

namespace rcm {

// Thrown when an exhaustive scan would exceed its candidate budget; the
// message names the budget that would be required.
class BudgetError : public std::runtime_error {
 public:
  BudgetError(const mpz_class& required, u64 given)
      : std::runtime_error("enumeration requires budget " + required.get_str() +
                           " but only " + std::to_string(given) + " was given"),
        required_(required) {}
  const mpz_class& required() const { return required_; }

 private:
  mpz_class required_;
};

template <class R>
class Circulant {
 public:
  using Elem = typename R::Elem;

  Circulant(const R& ring, std::vector<Elem> column)
      : column(std::move(column)), ring_(&ring) {
    if (this->column.empty())
      throw std::invalid_argument("Circulant: defining vector must be non-empty");
  }

  const R& ring() const { return *ring_; }
  u32 n() const { return static_cast<u32>(column.size()); }

  // Defining vector; entry k (0-based) is v_{k+1} of the last dense column.
  std::vector<Elem> column;

 private:
  const R* ring_;
};

// The cyclic shift permutation matrix A with A[i][j] = 1 iff j = i+1 mod n;
// A^n = I and every circulant is a polynomial in A.
template <class R>
Matrix<R> shift_generator(const R& ring, u32 n) {
  if (n < 1) throw std::invalid_argument("shift_generator: n must be >= 1");
  Matrix<R> a(ring, n, n);
  for (u32 i = 0; i < n; ++i) a.at(i, (i + 1) % n) = ring.one();
  return a;
}

template <class R>
Circulant<R> circulant_identity(const R& ring, u32 n) {
  std::vector<typename R::Elem> v(n, ring.zero());
  v[n - 1] = ring.one();
  return Circulant<R>(ring, std::move(v));
}

template <class R>
Matrix<R> to_dense(const Circulant<R>& c) {
  const u32 n = c.n();
  Matrix<R> m(c.ring(), n, n);
  for (u32 i = 0; i < n; ++i)
    for (u32 j = 0; j < n; ++j) m.at(i, j) = c.column[(i + n - 1 - j) % n];
  return m;
}

// True iff the dense matrix satisfies the circulant defining relation.
template <class R>
bool is_circulant_dense(const Matrix<R>& m) {
  if (m.rows() != m.cols()) return false;
  const R& ring = m.ring();
  const u32 n = m.rows();
  for (u32 i = 0; i < n; ++i)
    for (u32 j = 0; j < n; ++j)
      if (!ring.eq(m.at(i, (j + 1) % n), m.at((i + n - 1) % n, j))) return false;
  return true;
}

// Inverse of to_dense; rejects matrices that are not circulant.
template <class R>
Circulant<R> from_dense(const Matrix<R>& m) {
  if (!is_circulant_dense(m)) throw std::invalid_argument("from_dense: matrix is not circulant");
  const u32 n = m.rows();
  std::vector<typename R::Elem> v(n);
  for (u32 i = 0; i < n; ++i) v[i] = m.at(i, n - 1);
  return Circulant<R>(m.ring(), std::move(v));
}

// Product of circulants as a cyclic convolution of defining vectors; agrees
// with dense matrix multiplication and keeps the result in circulant form.
template <class R>
Circulant<R> circ_mul(const Circulant<R>& c, const Circulant<R>& d) {
  if (!c.ring().same(d.ring()))
    throw std::invalid_argument("circ_mul: operands over different rings");
  if (c.n() != d.n()) throw std::invalid_argument("circ_mul: size mismatch");
  const R& ring = c.ring();
  const u32 n = c.n();
  std::vector<typename R::Elem> u(n, ring.zero());
  // With v the last dense column, the matrix is sum_k v_k A^{n-k}; exponents
  // add mod n, which lands v_a * w_b on result slot a+b+1 (0-based).
  for (u32 a = 0; a < n; ++a) {
    const auto& va = c.column[a];
    if (ring.eq(va, ring.zero())) continue;
    for (u32 b = 0; b < n; ++b) {
      const u32 k = (a + b + 1) % n;
      u[k] = ring.add(u[k], ring.mul(va, d.column[b]));
    }
  }
  return Circulant<R>(ring, std::move(u));
}

// Regular means invertible: the determinant is a unit of the ring.
template <class R>
bool is_regular(const Circulant<R>& c) {
  return c.ring().is_unit(determinant(to_dense(c)));
}

struct EnumerateOptions {
  u64 budget = u64{1} << 24;  // maximum number of candidate vectors
  bool det_one = false;       // count only circulants with determinant one
  unsigned threads = 0;       // 0 = hardware choice; emit forces 1
  // Called with each regular defining vector in enumeration order.
  std::function<void(const std::vector<u64>&)> emit;  // encodings
};

namespace detail {

template <class R>
mpz_class enumerate_range(const R& ring, u32 n, u64 lo, u64 hi, bool det_one,
                          const std::function<void(const std::vector<u64>&)>& emit) {
  const u64 q = ring.size();
  // Decode the start index into odometer digits; v_1 is the most
  // significant digit, giving lexicographic order over defining vectors.
  std::vector<u64> digits(n, 0);
  u64 rem = lo;
  for (u32 i = n; i-- > 0;) {
    digits[i] = rem % q;
    rem /= q;
  }
  Circulant<R> c(ring, std::vector<typename R::Elem>(n, ring.zero()));
  Matrix<R> dense(ring, n, n);
  mpz_class count = 0;
  for (u64 idx = lo; idx < hi; ++idx) {
    for (u32 i = 0; i < n; ++i) c.column[i] = ring.elem_at(digits[i]);
    for (u32 i = 0; i < n; ++i)
      for (u32 j = 0; j < n; ++j) dense.at(i, j) = c.column[(i + n - 1 - j) % n];
    const auto det = determinant(dense);
    const bool keep = det_one ? ring.eq(det, ring.one()) : ring.is_unit(det);
    if (keep) {
      ++count;
      if (emit) emit(digits);
    }
    for (u32 i = n; i-- > 0;) {  // odometer increment
      if (++digits[i] < q) break;
      digits[i] = 0;
    }
  }
  return count;
}

}  // namespace detail

// Count of regular circulants over the ring, by exhaustive scan of all
// size^n defining vectors in lexicographic encoding order. Throws
// BudgetError when size^n exceeds the budget.
template <class R>
mpz_class enumerate_regular(const R& ring, u32 n, const EnumerateOptions& opt = {}) {
  if (n < 1) throw std::invalid_argument("enumerate_regular: n must be >= 1");
  if (ring.size() == 0)
    throw std::invalid_argument("enumerate_regular: ring is not enumerable");
  const mpz_class total = mpz_pow_u64(ring.size(), n);
  if (total > opt.budget) throw BudgetError(total, opt.budget);
  const u64 count = total.get_ui();

  unsigned threads = opt.threads ? opt.threads : std::thread::hardware_concurrency();
  if (threads == 0) threads = 1;
  if (opt.emit || count < (u64{1} << 14)) threads = 1;
  if (threads > count) threads = static_cast<unsigned>(count);

  if (threads == 1)
    return detail::enumerate_range(ring, n, 0, count, opt.det_one, opt.emit);

  std::vector<mpz_class> partial(threads, 0);
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned w = 0; w < threads; ++w) {
    const u64 lo = count / threads * w + std::min<u64>(count % threads, w);
    const u64 hi = lo + count / threads + (w < count % threads ? 1 : 0);
    pool.emplace_back([&, w, lo, hi] {
      partial[w] = detail::enumerate_range(ring, n, lo, hi, opt.det_one, nullptr);
    });
  }
  for (auto& th : pool) th.join();
  mpz_class sum = 0;
  for (const auto& part : partial) sum += part;
  return sum;
}

}  // namespace rcm
