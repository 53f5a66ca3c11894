#pragma once
// Constructive canonical-form machinery for regular circulants over
// F_{p^t}, working inside the splitting field F_{p^s}.
//
// Write n = m p^r with p not dividing m, let mu be a primitive m-th root
// of unity in F_{p^s} and A the cyclic shift generator. The explicit
// conjugator
//     X = m^{-1} ( mu^{-a b p^r} X(a) )_{a,b=1..m},
//     X(k) = ( (-1)^{i+j} mu^{(i-j)k} C(i-1, j-1) )_{i,j=1..p^r},
// with closed-form inverse
//     X^{-1} = ( mu^{a b p^r} X(b)^{-1} )_{a,b},
//     X(k)^{-1} = ( mu^{(i-j)k} C(i-1, j-1) ),
// satisfies X A X^{-1} = diag(J_1, ..., J_m) where J_b is the p^r x p^r
// Jordan block with eigenvalue mu^b. Conjugating a regular circulant C by
// X yields m * diag(T(v_(1)), ..., T(v_(m))) with upper-triangular
// Toeplitz blocks T, and the block vectors v_(b) range exactly over the
// admissible vectors: nonzero last entries, cycle leaders in the subfield
// F_{p^{t m_k}}, and successive blocks along each orbit of the residue map
// b -> p^t b on Z/mZ obtained by applying the relative Frobenius.
//
// Index conventions, stated once: blocks carry 1-based labels b = 1..m
// (block b has eigenvalue mu^b) and occupy 0-based block position b-1;
// the residue class of b mod m identifies the block under the mod-m maps,
// so residue 0 corresponds to block m.

#include <map>
#include <memory>
#include <vector>

#include <gmpxx.h>

#include "rcm/circulant.hpp"
#include "rcm/finite_field.hpp"
#include "rcm/matrix.hpp"

namespace rcm {

enum class Direction { forward, inverse };

// Disjoint cycles of the multiplication map x -> k x on Z/mZ, each cycle
// rotated so its minimal element leads and cycles sorted by that element.
// Successive entries within a cycle follow one application of the map.
struct CycleDecomposition {
  u64 modulus = 1;
  u64 multiplier = 1;
  std::vector<std::vector<u64>> cycles;

  std::map<u64, u64> lengths() const;      // cycle length -> count
  std::vector<u64> as_function() const;    // image array of the map
};

// Cycles of x -> p^t x (forward) or x -> p^{-t} x (inverse) on Z/mZ; the
// directions are mutually inverse permutations with equal length multisets.
// Requires gcd(p, m) = 1.
CycleDecomposition frobenius_permutation(u64 p, u32 t, u64 m, Direction direction);

// Closed-form multiset of cycle lengths: each divisor d of m contributes
// phi(d) / ord_d(p^t) cycles of length ord_d(p^t). Must agree with the
// literal decomposition above.
std::map<u64, u64> cycle_structure_formula(u64 p, u32 t, u64 m);

// prod over cycles k of (p^{t m_k} - 1) p^{t m_k (p^r - 1)}: the number of
// admissible block vectors, which is also |RC_n(F_{p^t})|.
mpz_class admissible_count(u64 p, u32 t, u32 n);

// Upper-triangular Toeplitz matrix T(w) with entry (i, j) = w_{k-j+i}
// (1-based) when that index lies in [1, k] and zero otherwise; the
// diagonal is constantly w_k and det T(w) = w_k^k.
Matrix<FiniteField> toeplitz_T(const FiniteField& field, const std::vector<u32>& w);

// Immutable context bundling the splitting field and the conjugation data
// for one (p, t, n). Construction eagerly builds X, X^{-1} and the Jordan
// form and verifies X X^{-1} = I and X A X^{-1} = A_tilde, so any
// downstream use can rely on the conjugation identity. Non-movable: the
// matrices point at the contained field.
class StructureContext {
 public:
  StructureContext(u64 p, u32 t, u32 n,
                   u64 table_limit = FiniteField::kDefaultTableLimit);
  StructureContext(const StructureContext&) = delete;
  StructureContext& operator=(const StructureContext&) = delete;

  u64 p() const { return p_; }
  u32 t() const { return t_; }
  u32 n() const { return n_; }
  u64 m() const { return m_; }
  u32 r() const { return r_; }
  u64 pr() const { return pr_; }  // p^r, the block size
  u32 s() const { return field_.s(); }
  const FiniteField& field() const { return field_; }
  u32 mu() const { return mu_; }
  // The block permutation of the canonical form: x -> p^{-t} x on Z/mZ.
  const CycleDecomposition& sigma() const { return sigma_; }
  const Matrix<FiniteField>& X() const { return X_; }
  const Matrix<FiniteField>& X_inv() const { return X_inv_; }
  const Matrix<FiniteField>& A_tilde() const { return A_tilde_; }

  // Block label (1..m) of a residue mod m and back.
  u64 block_of_residue(u64 residue) const { return residue == 0 ? m_ : residue; }
  u64 residue_of_block(u64 b) const { return b % m_; }

 private:
  u64 p_;
  u32 t_, n_;
  u64 m_;
  u32 r_;
  u64 pr_;
  FiniteField field_;
  u32 mu_;
  CycleDecomposition sigma_;
  Matrix<FiniteField> X_, X_inv_, A_tilde_;
};

// Block-diagonal Jordan form: m blocks of size p^r, block b with
// eigenvalue mu^b on the diagonal and ones on the superdiagonal.
Matrix<FiniteField> jordan_blocks(const StructureContext& ctx);

// Closed-form power of one Jordan block: entry (i, j) = mu^{(k+i-j) b}
// C(k, j-i); agrees with repeated multiplication, and the p^r-th power is
// the scalar mu^{b p^r}.
Matrix<FiniteField> jordan_block_power(const StructureContext& ctx, u64 b, u64 k);

// The p^r x p^r factor X(k) and its closed-form inverse.
std::pair<Matrix<FiniteField>, Matrix<FiniteField>> conjugator_blocks(
    const StructureContext& ctx, u64 k);

// The full n x n conjugator X and its closed-form inverse.
std::pair<Matrix<FiniteField>, Matrix<FiniteField>> build_conjugator(
    const StructureContext& ctx);

// True iff applying the relative Frobenius entrywise to X equals P X, with
// P the block permutation matrix of sigma (blocks of size p^r).
bool frobenius_conjugation_check(const StructureContext& ctx);

// Admissibility of a stacked block vector v (n field codes, m blocks of
// p^r entries): every block's last entry is nonzero, each cycle-leader
// block lies entrywise in F_{p^{t m_k}}, and walking an orbit along
// x -> p^t x applies the relative Frobenius entrywise at each step.
bool check_admissible(const StructureContext& ctx, const std::vector<u32>& v);

// X C X^{-1} for a regular circulant whose entries all lie in the
// Frobenius-fixed copy of F_{p^t}; the result is m * diag(T(v_(b))) for
// the admissible block vectors v_(b) of C. Rejects singular circulants and
// entries outside the subfield.
Matrix<FiniteField> canonical_form(const StructureContext& ctx,
                                   const Circulant<FiniteField>& c);

// Block vectors v_(b) recovered from a canonical form: the last column of
// each diagonal block, scaled by m^{-1}. Validates the block-Toeplitz
// shape first.
std::vector<std::vector<u32>> extract_block_vectors(const StructureContext& ctx,
                                                    const Matrix<FiniteField>& m);

// Shape test used by extract_block_vectors: off-block entries all zero and
// every diagonal block upper-triangular Toeplitz.
bool is_block_toeplitz(const StructureContext& ctx, const Matrix<FiniteField>& m);

// Build the circulant over (the embedded copy of) F_{p^t} whose canonical
// form has the given cycle-leader blocks: one block of p^r field codes per
// cycle of sigma, ordered like sigma's cycles. Leaders must lie in their
// cycle's subfield with nonzero last entry; the remaining blocks are
// completed by iterated Frobenius and the defining vector is X^{-1} v.
Circulant<FiniteField> synthesize_circulant(const StructureContext& ctx,
                                            const std::vector<std::vector<u32>>& leaders);

}  // namespace rcm
