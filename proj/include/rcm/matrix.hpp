#pragma once
// Dense exact matrices over a pluggable commutative ring.
//
// A ring descriptor R is an immutable value providing:
//   using Elem;                          element value type
//   static constexpr bool kIsField;     selects elimination strategy
//   Elem zero(), one();
//   Elem add(Elem, Elem), sub(Elem, Elem), neg(Elem), mul(Elem, Elem);
//   bool is_unit(Elem);  Elem inv_unit(Elem);      // throws on non-units
//   bool eq(Elem, Elem); bool same(const R&);      // same ring instance
//   u64 size();                          0 means infinite
//   Elem elem_at(u64), u64 encoding(Elem);         // dense enumeration
//   Elem from_int(i64);                  image of a rational integer
//   std::string str(Elem);
// Non-field rings additionally provide exact integer lifts used by the
// fraction-free determinant:
//   mpz_class lift(Elem); Elem reduce_int(const mpz_class&);
//
// Matrices hold a non-owning pointer to their ring; rings must outlive the
// matrices built over them. Indices are 0-based internally; the formula
// comments use the conventional 1-based indices.

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "rcm/numtheory.hpp"

namespace rcm {

// Thrown by inverse() (and other operations requiring regularity) when the
// input has a non-unit determinant; distinct from shape errors, which are
// std::invalid_argument.
class SingularMatrixError : public std::runtime_error {
 public:
  explicit SingularMatrixError(const std::string& what) : std::runtime_error(what) {}
};

template <class R>
class Matrix {
 public:
  using Elem = typename R::Elem;

  Matrix() : ring_(nullptr), rows_(0), cols_(0) {}
  Matrix(const R& ring, u32 rows, u32 cols)
      : ring_(&ring), rows_(rows), cols_(cols), e_(std::size_t{rows} * cols, ring.zero()) {}

  static Matrix identity(const R& ring, u32 n) {
    Matrix m(ring, n, n);
    for (u32 i = 0; i < n; ++i) m.at(i, i) = ring.one();
    return m;
  }

  const R& ring() const { return *ring_; }
  u32 rows() const { return rows_; }
  u32 cols() const { return cols_; }

  Elem& at(u32 i, u32 j) { return e_[std::size_t{i} * cols_ + j]; }
  const Elem& at(u32 i, u32 j) const { return e_[std::size_t{i} * cols_ + j]; }

  const std::vector<Elem>& entries() const { return e_; }

  bool operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    if (!ring_->same(*o.ring_)) return false;
    for (std::size_t k = 0; k < e_.size(); ++k)
      if (!ring_->eq(e_[k], o.e_[k])) return false;
    return true;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  std::string str() const {
    std::string s;
    for (u32 i = 0; i < rows_; ++i) {
      s += i == 0 ? "[" : " ";
      for (u32 j = 0; j < cols_; ++j) {
        s += ring_->str(at(i, j));
        if (j + 1 < cols_) s += " ";
      }
      s += i + 1 < rows_ ? "\n" : "]";
    }
    return s;
  }

 private:
  const R* ring_;
  u32 rows_, cols_;
  std::vector<Elem> e_;
};

namespace detail {
template <class R>
void require_same_ring(const Matrix<R>& a, const Matrix<R>& b, const char* op) {
  if (!a.ring().same(b.ring()))
    throw std::invalid_argument(std::string(op) + ": operands over different rings");
}
}  // namespace detail

template <class R>
Matrix<R> mat_mul(const Matrix<R>& a, const Matrix<R>& b) {
  detail::require_same_ring(a, b, "mat_mul");
  if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: dimension mismatch");
  const R& ring = a.ring();
  Matrix<R> c(ring, a.rows(), b.cols());
  for (u32 i = 0; i < a.rows(); ++i)
    for (u32 k = 0; k < a.cols(); ++k) {
      const auto& aik = a.at(i, k);
      if (ring.eq(aik, ring.zero())) continue;
      for (u32 j = 0; j < b.cols(); ++j)
        c.at(i, j) = ring.add(c.at(i, j), ring.mul(aik, b.at(k, j)));
    }
  return c;
}

template <class R>
Matrix<R> mat_add(const Matrix<R>& a, const Matrix<R>& b) {
  detail::require_same_ring(a, b, "mat_add");
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("mat_add: dimension mismatch");
  const R& ring = a.ring();
  Matrix<R> c(ring, a.rows(), a.cols());
  for (u32 i = 0; i < a.rows(); ++i)
    for (u32 j = 0; j < a.cols(); ++j) c.at(i, j) = ring.add(a.at(i, j), b.at(i, j));
  return c;
}

template <class R>
Matrix<R> transpose(const Matrix<R>& a) {
  Matrix<R> t(a.ring(), a.cols(), a.rows());
  for (u32 i = 0; i < a.rows(); ++i)
    for (u32 j = 0; j < a.cols(); ++j) t.at(j, i) = a.at(i, j);
  return t;
}

template <class R>
Matrix<R> scalar_mul(typename R::Elem c, const Matrix<R>& a) {
  const R& ring = a.ring();
  Matrix<R> s(ring, a.rows(), a.cols());
  for (u32 i = 0; i < a.rows(); ++i)
    for (u32 j = 0; j < a.cols(); ++j) s.at(i, j) = ring.mul(c, a.at(i, j));
  return s;
}

template <class R>
Matrix<R> mat_pow(const Matrix<R>& a, u64 k) {
  if (a.rows() != a.cols()) throw std::invalid_argument("mat_pow: non-square matrix");
  Matrix<R> result = Matrix<R>::identity(a.ring(), a.rows());
  Matrix<R> base = a;
  while (k) {
    if (k & 1) result = mat_mul(result, base);
    base = mat_mul(base, base);
    k >>= 1;
  }
  return result;
}

template <class R>
Matrix<R> kronecker(const Matrix<R>& a, const Matrix<R>& b) {
  detail::require_same_ring(a, b, "kronecker");
  const R& ring = a.ring();
  Matrix<R> k(ring, a.rows() * b.rows(), a.cols() * b.cols());
  for (u32 i1 = 0; i1 < a.rows(); ++i1)
    for (u32 j1 = 0; j1 < a.cols(); ++j1) {
      const auto& aij = a.at(i1, j1);
      for (u32 i2 = 0; i2 < b.rows(); ++i2)
        for (u32 j2 = 0; j2 < b.cols(); ++j2)
          k.at(i1 * b.rows() + i2, j1 * b.cols() + j2) = ring.mul(aij, b.at(i2, j2));
    }
  return k;
}

namespace detail {

// Fraction-free (Bareiss) determinant of an integer matrix. Exact; every
// intermediate value is a minor of the input, so a Hadamard-style bound on
// the input controls all intermediates.
inline mpz_class bareiss_det_mpz(std::vector<mpz_class> m, u32 n) {
  if (n == 0) return 1;
  auto at = [&](u32 i, u32 j) -> mpz_class& { return m[std::size_t{i} * n + j]; };
  int sign = 1;
  mpz_class prev = 1;
  for (u32 k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      u32 swap_row = k + 1;
      while (swap_row < n && at(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (u32 j = 0; j < n; ++j) std::swap(at(k, j), at(swap_row, j));
      sign = -sign;
    }
    for (u32 i = k + 1; i < n; ++i) {
      for (u32 j = k + 1; j < n; ++j) {
        mpz_class num = at(k, k) * at(i, j) - at(i, k) * at(k, j);
        mpz_divexact(at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      at(i, k) = 0;
    }
    prev = at(k, k);
  }
  return sign > 0 ? at(n - 1, n - 1) : mpz_class(-at(n - 1, n - 1));
}

// Same algorithm on 64-bit storage with 128-bit intermediates; only valid
// when the caller has bounded all minors below 2^62.
inline i64 bareiss_det_i64(std::vector<i64> m, u32 n) {
  if (n == 0) return 1;
  auto at = [&](u32 i, u32 j) -> i64& { return m[std::size_t{i} * n + j]; };
  int sign = 1;
  i64 prev = 1;
  for (u32 k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      u32 swap_row = k + 1;
      while (swap_row < n && at(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (u32 j = 0; j < n; ++j) std::swap(at(k, j), at(swap_row, j));
      sign = -sign;
    }
    for (u32 i = k + 1; i < n; ++i) {
      for (u32 j = k + 1; j < n; ++j) {
        const __int128 num = static_cast<__int128>(at(k, k)) * at(i, j) -
                             static_cast<__int128>(at(i, k)) * at(k, j);
        at(i, j) = static_cast<i64>(num / prev);
      }
      at(i, k) = 0;
    }
    prev = at(k, k);
  }
  return sign > 0 ? at(n - 1, n - 1) : -at(n - 1, n - 1);
}

}  // namespace detail

// Exact determinant. Over fields: Gaussian elimination with row swaps and
// sign tracking. Over other rings: lift entries to integers, run a
// fraction-free elimination there, and reduce the integer determinant back
// into the ring (elimination in the ring itself would require exact
// division by non-units).
template <class R>
typename R::Elem determinant(const Matrix<R>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: non-square matrix");
  const R& ring = m.ring();
  const u32 n = m.rows();
  if (n == 0) return ring.one();

  if constexpr (R::kIsField) {
    Matrix<R> w = m;
    bool negate = false;
    typename R::Elem det = ring.one();
    for (u32 k = 0; k < n; ++k) {
      u32 pivot = k;
      while (pivot < n && ring.eq(w.at(pivot, k), ring.zero())) ++pivot;
      if (pivot == n) return ring.zero();
      if (pivot != k) {
        for (u32 j = k; j < n; ++j) std::swap(w.at(k, j), w.at(pivot, j));
        negate = !negate;
      }
      const auto pk = w.at(k, k);
      det = ring.mul(det, pk);
      const auto inv = ring.inv_unit(pk);
      for (u32 i = k + 1; i < n; ++i) {
        const auto factor = ring.mul(w.at(i, k), inv);
        if (ring.eq(factor, ring.zero())) continue;
        for (u32 j = k; j < n; ++j)
          w.at(i, j) = ring.sub(w.at(i, j), ring.mul(factor, w.at(k, j)));
      }
    }
    return negate ? ring.neg(det) : det;
  } else {
    std::vector<mpz_class> lifts(std::size_t{n} * n);
    bool small = true;
    double log2_bound = 0.0;
    for (u32 i = 0; i < n; ++i) {
      double row_sq = 0.0;
      for (u32 j = 0; j < n; ++j) {
        mpz_class& v = lifts[std::size_t{i} * n + j];
        v = ring.lift(m.at(i, j));
        if (!v.fits_slong_p()) small = false;
        const double d = std::abs(v.get_d());
        row_sq += d * d;
      }
      log2_bound += 0.5 * std::log2(row_sq + 1.0);
    }
    mpz_class det_z;
    if (small && log2_bound < 61.0) {
      std::vector<i64> w(lifts.size());
      for (std::size_t k = 0; k < lifts.size(); ++k) w[k] = lifts[k].get_si();
      det_z = static_cast<long>(detail::bareiss_det_i64(std::move(w), n));
    } else {
      det_z = detail::bareiss_det_mpz(std::move(lifts), n);
    }
    return ring.reduce_int(det_z);
  }
}

// Exact inverse; throws SingularMatrixError when the determinant is not a
// unit. Over fields: Gauss-Jordan. Over other rings: adjugate divided by
// the determinant (cofactor minors are computed with the fraction-free
// determinant above, so everything stays exact).
template <class R>
Matrix<R> inverse(const Matrix<R>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: non-square matrix");
  const R& ring = m.ring();
  const u32 n = m.rows();

  if constexpr (R::kIsField) {
    Matrix<R> w = m;
    Matrix<R> inv = Matrix<R>::identity(ring, n);
    for (u32 k = 0; k < n; ++k) {
      u32 pivot = k;
      while (pivot < n && ring.eq(w.at(pivot, k), ring.zero())) ++pivot;
      if (pivot == n) throw SingularMatrixError("inverse: singular matrix");
      if (pivot != k)
        for (u32 j = 0; j < n; ++j) {
          std::swap(w.at(k, j), w.at(pivot, j));
          std::swap(inv.at(k, j), inv.at(pivot, j));
        }
      const auto pk_inv = ring.inv_unit(w.at(k, k));
      for (u32 j = 0; j < n; ++j) {
        w.at(k, j) = ring.mul(w.at(k, j), pk_inv);
        inv.at(k, j) = ring.mul(inv.at(k, j), pk_inv);
      }
      for (u32 i = 0; i < n; ++i) {
        if (i == k) continue;
        const auto factor = w.at(i, k);
        if (ring.eq(factor, ring.zero())) continue;
        for (u32 j = 0; j < n; ++j) {
          w.at(i, j) = ring.sub(w.at(i, j), ring.mul(factor, w.at(k, j)));
          inv.at(i, j) = ring.sub(inv.at(i, j), ring.mul(factor, inv.at(k, j)));
        }
      }
    }
    return inv;
  } else {
    const auto det = determinant(m);
    if (!ring.is_unit(det)) throw SingularMatrixError("inverse: determinant is not a unit");
    const auto det_inv = ring.inv_unit(det);
    Matrix<R> adj(ring, n, n);
    Matrix<R> minor(ring, n - 1, n - 1);
    for (u32 i = 0; i < n; ++i)
      for (u32 j = 0; j < n; ++j) {
        for (u32 r = 0, rr = 0; r < n; ++r) {
          if (r == i) continue;
          for (u32 c = 0, cc = 0; c < n; ++c) {
            if (c == j) continue;
            minor.at(rr, cc) = m.at(r, c);
            ++cc;
          }
          ++rr;
        }
        auto cof = determinant(minor);
        if ((i + j) & 1) cof = ring.neg(cof);
        adj.at(j, i) = ring.mul(det_inv, cof);  // adjugate transposes the cofactors
      }
    return adj;
  }
}

// Lower-triangular matrix of binomials C(i-1, j-1) reduced into the ring,
// built by the additive Pascal recurrence (factorials would overflow and
// their quotients need not exist in the ring).
template <class R>
Matrix<R> pascal_matrix(const R& ring, u32 n) {
  if (n < 1) throw std::invalid_argument("pascal_matrix: size must be >= 1");
  Matrix<R> p(ring, n, n);
  for (u32 i = 0; i < n; ++i) {
    p.at(i, 0) = ring.one();
    for (u32 j = 1; j <= i; ++j)
      p.at(i, j) = i == j ? ring.one() : ring.add(p.at(i - 1, j - 1), p.at(i - 1, j));
  }
  return p;
}

// The signed closed-form inverse ((-1)^{i+j} C(i-1, j-1)); multiplies
// pascal_matrix(n) to the identity in any ring.
template <class R>
Matrix<R> pascal_inverse_signed(const R& ring, u32 n) {
  Matrix<R> p = pascal_matrix(ring, n);
  for (u32 i = 0; i < n; ++i)
    for (u32 j = 0; j <= i; ++j)
      if ((i + j) & 1) p.at(i, j) = ring.neg(p.at(i, j));
  return p;
}

// The reflected closed-form inverse of the Pascal matrix of prime-power
// size p^r in characteristic p: entries C(p^r - j, p^r - i) with 1-based
// i, j. Equals pascal_inverse_signed(p^r) there, because
// C(p^r - j, p^r - i) = (-1)^{i+j} C(i-1, j-1) mod p. Digit-wise binomials
// keep this exact for any r.
template <class R>
Matrix<R> pascal_inverse_reflected(const R& ring, u64 pr, u64 p) {
  if (!is_prime(p)) throw std::domain_error("pascal_inverse_reflected: p must be prime");
  u64 v = pr;
  while (v > 1 && v % p == 0) v /= p;
  if (v != 1 || pr < 1)
    throw std::domain_error("pascal_inverse_reflected: size is not a power of p");
  const u32 n = static_cast<u32>(pr);
  Matrix<R> m(ring, n, n);
  for (u32 i = 1; i <= n; ++i)
    for (u32 j = 1; j <= n; ++j)
      m.at(i - 1, j - 1) =
          ring.from_int(static_cast<i64>(lucas_binomial(pr - j, pr - i, p)));
  return m;
}

// Block permutation matrix: k*block x k*block, moving block-row i of an
// operand to block-row perm[i] of the product, i.e. the identity block of
// block-column i sits at block-row perm[i].
template <class R>
Matrix<R> permutation_matrix(const R& ring, const std::vector<u32>& perm, u32 block) {
  const u32 k = static_cast<u32>(perm.size());
  std::vector<bool> seen(k, false);
  for (u32 i = 0; i < k; ++i) {
    if (perm[i] >= k || seen[perm[i]])
      throw std::invalid_argument("permutation_matrix: not a permutation");
    seen[perm[i]] = true;
  }
  Matrix<R> p(ring, k * block, k * block);
  for (u32 i = 0; i < k; ++i)
    for (u32 b = 0; b < block; ++b) p.at(perm[i] * block + b, i * block + b) = ring.one();
  return p;
}

// Anti-diagonal reversal matrix (ones on the anti-diagonal).
template <class R>
Matrix<R> anti_diagonal_reversal(const R& ring, u32 n) {
  Matrix<R> r(ring, n, n);
  for (u32 i = 0; i < n; ++i) r.at(i, n - 1 - i) = ring.one();
  return r;
}

}  // namespace rcm
