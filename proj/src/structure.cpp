#include "rcm/structure.hpp"

#include <algorithm>
#include <stdexcept>

namespace rcm {

namespace {

u64 checked_m_part(u32 n, u64 p) {
  if (n == 0) throw std::invalid_argument("StructureContext: n must be >= 1");
  if (!is_prime(p)) throw std::domain_error("StructureContext: p must be prime");
  return split_p_power(n, p).first;
}

u64 inverse_mod(u64 k, u64 m) {
  if (m == 1) return 0;
  i64 old_r = static_cast<i64>(k % m), r = static_cast<i64>(m);
  i64 old_s = 1, s = 0;
  while (r != 0) {
    const i64 q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
  }
  if (old_r != 1) throw std::domain_error("inverse_mod: not invertible");
  i64 v = old_s % static_cast<i64>(m);
  return static_cast<u64>(v < 0 ? v + static_cast<i64>(m) : v);
}

// mu^e for a possibly negative exponent e, with mu of multiplicative
// order m.
u32 root_power(const FiniteField& field, u32 mu, i64 e, u64 m) {
  i64 em = e % static_cast<i64>(m);
  if (em < 0) em += static_cast<i64>(m);
  return field.pow(mu, em);
}

}  // namespace

std::map<u64, u64> CycleDecomposition::lengths() const {
  std::map<u64, u64> out;
  for (const auto& cycle : cycles) ++out[cycle.size()];
  return out;
}

std::vector<u64> CycleDecomposition::as_function() const {
  std::vector<u64> f(modulus);
  for (const auto& cycle : cycles)
    for (std::size_t i = 0; i < cycle.size(); ++i)
      f[cycle[i]] = cycle[(i + 1) % cycle.size()];
  return f;
}

CycleDecomposition frobenius_permutation(u64 p, u32 t, u64 m, Direction direction) {
  if (m == 0) throw std::invalid_argument("frobenius_permutation: m must be >= 1");
  if (m % p == 0 && m > 1)
    throw std::domain_error("frobenius_permutation: p must not divide m");
  u64 k = powmod(p, t, m);
  if (direction == Direction::inverse) k = inverse_mod(k, m);

  CycleDecomposition dec;
  dec.modulus = m;
  dec.multiplier = m == 1 ? 1 : k;
  std::vector<bool> seen(m, false);
  for (u64 start = 0; start < m; ++start) {
    if (seen[start]) continue;
    std::vector<u64> cycle;
    u64 x = start;
    do {
      seen[x] = true;
      cycle.push_back(x);
      x = mulmod(k, x, m);
    } while (x != start);
    dec.cycles.push_back(std::move(cycle));
  }
  return dec;
}

std::map<u64, u64> cycle_structure_formula(u64 p, u32 t, u64 m) {
  if (m == 0) throw std::invalid_argument("cycle_structure_formula: m must be >= 1");
  if (m % p == 0 && m > 1)
    throw std::domain_error("cycle_structure_formula: p must not divide m");
  std::map<u64, u64> lengths;
  for (u64 d : divisors(m)) {
    const u64 e = multiplicative_order(powmod(p, t, d), d);
    lengths[e] += euler_phi(d) / e;
  }
  return lengths;
}

mpz_class admissible_count(u64 p, u32 t, u32 n) {
  if (!is_prime(p)) throw std::domain_error("admissible_count: p must be prime");
  if (t == 0 || n == 0)
    throw std::invalid_argument("admissible_count: t and n must be >= 1");
  const auto [m, r] = split_p_power(n, p);
  u64 pr = 1;
  for (u32 i = 0; i < r; ++i) pr *= p;
  mpz_class count = 1;
  for (auto [len, copies] : cycle_structure_formula(p, t, m)) {
    const mpz_class per_cycle =
        (mpz_pow_u64(p, t * len) - 1) * mpz_pow_u64(p, t * len * (pr - 1));
    for (u64 c = 0; c < copies; ++c) count *= per_cycle;
  }
  return count;
}

Matrix<FiniteField> toeplitz_T(const FiniteField& field, const std::vector<u32>& w) {
  const u32 k = static_cast<u32>(w.size());
  if (k < 1) throw std::invalid_argument("toeplitz_T: vector must be non-empty");
  Matrix<FiniteField> m(field, k, k);
  for (u32 i = 1; i <= k; ++i)
    for (u32 j = i; j <= k; ++j) {
      const u32 idx = k - j + i;  // in [1, k] exactly when j >= i
      m.at(i - 1, j - 1) = w[idx - 1];
    }
  return m;
}

StructureContext::StructureContext(u64 p, u32 t, u32 n, u64 table_limit)
    : p_(p),
      t_(t),
      n_(n),
      m_(checked_m_part(n, p)),
      r_(split_p_power(n, p).second),
      pr_(n / m_),
      field_(p, required_extension_degree(p, t, m_), table_limit) {
  mu_ = field_.primitive_root_of_unity(m_);
  sigma_ = frobenius_permutation(p_, t_, m_, Direction::inverse);

  auto [x, x_inv] = build_conjugator(*this);
  X_ = std::move(x);
  X_inv_ = std::move(x_inv);
  A_tilde_ = jordan_blocks(*this);

  const auto identity = Matrix<FiniteField>::identity(field_, n_);
  if (mat_mul(X_, X_inv_) != identity)
    throw std::logic_error("StructureContext: X * X^{-1} != I");
  const auto a = shift_generator(field_, n_);
  if (mat_mul(mat_mul(X_, a), X_inv_) != A_tilde_)
    throw std::logic_error("StructureContext: X A X^{-1} != Jordan form");
}

Matrix<FiniteField> jordan_blocks(const StructureContext& ctx) {
  const FiniteField& field = ctx.field();
  const u32 pr = static_cast<u32>(ctx.pr());
  Matrix<FiniteField> a(field, ctx.n(), ctx.n());
  for (u64 b = 1; b <= ctx.m(); ++b) {
    const u32 off = static_cast<u32>((b - 1) * pr);
    const u32 eig = field.pow(ctx.mu(), static_cast<i64>(b % ctx.m()));
    for (u32 i = 0; i < pr; ++i) {
      a.at(off + i, off + i) = eig;
      if (i + 1 < pr) a.at(off + i, off + i + 1) = field.one();
    }
  }
  return a;
}

Matrix<FiniteField> jordan_block_power(const StructureContext& ctx, u64 b, u64 k) {
  const FiniteField& field = ctx.field();
  const u32 pr = static_cast<u32>(ctx.pr());
  Matrix<FiniteField> m(field, pr, pr);
  for (u32 i = 1; i <= pr; ++i)
    for (u32 j = 1; j <= pr; ++j) {
      if (j >= i && j - i > k) continue;  // C(k, j-i) = 0
      if (j < i) continue;
      const u64 binom = lucas_binomial(k, j - i, ctx.p());
      if (binom == 0) continue;
      const i64 exponent =
          (static_cast<i64>(k % ctx.m()) + static_cast<i64>(i) - static_cast<i64>(j)) *
          static_cast<i64>(b % ctx.m());
      const u32 scalar = root_power(field, ctx.mu(), exponent, ctx.m());
      m.at(i - 1, j - 1) = field.mul(scalar, field.from_int(static_cast<i64>(binom)));
    }
  return m;
}

std::pair<Matrix<FiniteField>, Matrix<FiniteField>> conjugator_blocks(
    const StructureContext& ctx, u64 k) {
  const FiniteField& field = ctx.field();
  const u32 pr = static_cast<u32>(ctx.pr());
  Matrix<FiniteField> xk(field, pr, pr), xk_inv(field, pr, pr);
  for (u32 i = 1; i <= pr; ++i)
    for (u32 j = 1; j <= i; ++j) {  // C(i-1, j-1) = 0 above the diagonal
      const u64 binom = lucas_binomial(i - 1, j - 1, ctx.p());
      if (binom == 0) continue;
      const i64 diff = static_cast<i64>(i) - static_cast<i64>(j);
      const u32 base = field.mul(root_power(field, ctx.mu(), diff * static_cast<i64>(k % ctx.m()), ctx.m()),
                                 field.from_int(static_cast<i64>(binom)));
      xk_inv.at(i - 1, j - 1) = base;
      xk.at(i - 1, j - 1) = (i + j) % 2 == 0 ? base : field.neg(base);
    }
  return {std::move(xk), std::move(xk_inv)};
}

std::pair<Matrix<FiniteField>, Matrix<FiniteField>> build_conjugator(
    const StructureContext& ctx) {
  const FiniteField& field = ctx.field();
  const u64 m = ctx.m();
  const u32 pr = static_cast<u32>(ctx.pr());
  const u32 m_inv = field.inv_unit(field.from_int(static_cast<i64>(m % ctx.p())));

  std::vector<Matrix<FiniteField>> xk(m + 1), xk_inv(m + 1);
  for (u64 k = 1; k <= m; ++k) {
    auto pair = conjugator_blocks(ctx, k);
    xk[k] = std::move(pair.first);
    xk_inv[k] = std::move(pair.second);
  }

  Matrix<FiniteField> x(field, ctx.n(), ctx.n()), x_inv(field, ctx.n(), ctx.n());
  for (u64 a = 1; a <= m; ++a)
    for (u64 b = 1; b <= m; ++b) {
      const u64 abpr = mulmod(mulmod(a % m, b % m, m), ctx.pr() % m, m);
      const u32 fwd = field.mul(m_inv, root_power(field, ctx.mu(),
                                                  -static_cast<i64>(abpr), m));
      const u32 bwd = root_power(field, ctx.mu(), static_cast<i64>(abpr), m);
      const u32 row = static_cast<u32>((a - 1) * pr);
      const u32 col = static_cast<u32>((b - 1) * pr);
      for (u32 i = 0; i < pr; ++i)
        for (u32 j = 0; j < pr; ++j) {
          x.at(row + i, col + j) = field.mul(fwd, xk[a].at(i, j));
          x_inv.at(row + i, col + j) = field.mul(bwd, xk_inv[b].at(i, j));
        }
    }
  return {std::move(x), std::move(x_inv)};
}

bool frobenius_conjugation_check(const StructureContext& ctx) {
  const FiniteField& field = ctx.field();
  Matrix<FiniteField> fx(field, ctx.n(), ctx.n());
  for (u32 i = 0; i < ctx.n(); ++i)
    for (u32 j = 0; j < ctx.n(); ++j)
      fx.at(i, j) = field.frobenius(ctx.X().at(i, j), ctx.t());

  // Block-position permutation of sigma: position b-1 of block b, residue
  // b mod m.
  const auto sigma_fn = ctx.sigma().as_function();
  std::vector<u32> perm(ctx.m());
  for (u64 b = 1; b <= ctx.m(); ++b) {
    const u64 image = ctx.block_of_residue(sigma_fn[ctx.residue_of_block(b)]);
    perm[b - 1] = static_cast<u32>(image - 1);
  }
  const auto p_matrix = permutation_matrix(field, perm, static_cast<u32>(ctx.pr()));
  return fx == mat_mul(p_matrix, ctx.X());
}

bool check_admissible(const StructureContext& ctx, const std::vector<u32>& v) {
  if (v.size() != ctx.n())
    throw std::invalid_argument("check_admissible: vector length must be n");
  const FiniteField& field = ctx.field();
  const u64 pr = ctx.pr();

  for (u64 b = 1; b <= ctx.m(); ++b)
    if (v[(b - 1) * pr + (pr - 1)] == 0) return false;

  for (const auto& cycle : ctx.sigma().cycles) {
    const u32 sub_degree = static_cast<u32>(ctx.t() * cycle.size());
    const u64 leader = cycle.front();
    const u64 lead_off = (ctx.block_of_residue(leader) - 1) * pr;
    std::vector<u32> expected(pr);
    for (u64 i = 0; i < pr; ++i) {
      expected[i] = v[lead_off + i];
      if (!field.in_subfield(expected[i], sub_degree)) return false;
    }
    // Walk the orbit under x -> p^t x; each step applies the relative
    // Frobenius entrywise. (This orbit is the cycle of sigma traversed
    // backwards; the leader is shared.)
    u64 res = leader;
    for (std::size_t step = 1; step < cycle.size(); ++step) {
      res = mulmod(powmod(ctx.p(), ctx.t(), ctx.m()), res, ctx.m());
      for (u64 i = 0; i < pr; ++i) expected[i] = field.frobenius(expected[i], ctx.t());
      const u64 off = (ctx.block_of_residue(res) - 1) * pr;
      for (u64 i = 0; i < pr; ++i)
        if (v[off + i] != expected[i]) return false;
    }
  }
  return true;
}

Matrix<FiniteField> canonical_form(const StructureContext& ctx,
                                   const Circulant<FiniteField>& c) {
  if (!c.ring().same(ctx.field()))
    throw std::invalid_argument("canonical_form: circulant over a different field");
  if (c.n() != ctx.n()) throw std::invalid_argument("canonical_form: size mismatch");
  for (u32 code : c.column)
    if (!ctx.field().in_subfield(code, ctx.t()))
      throw std::domain_error("canonical_form: entries must lie in the base subfield");
  if (!is_regular(c)) throw SingularMatrixError("canonical_form: singular circulant");
  return mat_mul(mat_mul(ctx.X(), to_dense(c)), ctx.X_inv());
}

bool is_block_toeplitz(const StructureContext& ctx, const Matrix<FiniteField>& m) {
  if (m.rows() != ctx.n() || m.cols() != ctx.n()) return false;
  const u32 pr = static_cast<u32>(ctx.pr());
  for (u32 i = 0; i < ctx.n(); ++i)
    for (u32 j = 0; j < ctx.n(); ++j) {
      const u32 bi = i / pr, bj = j / pr;
      if (bi != bj) {
        if (m.at(i, j) != 0) return false;
        continue;
      }
      const u32 li = i % pr, lj = j % pr;
      if (lj < li) {
        if (m.at(i, j) != 0) return false;  // strictly upper triangular blocks
      } else if (li > 0) {
        if (m.at(i, j) != m.at(i - 1, j - 1)) return false;  // constant diagonals
      }
    }
  return true;
}

std::vector<std::vector<u32>> extract_block_vectors(const StructureContext& ctx,
                                                    const Matrix<FiniteField>& m) {
  if (!is_block_toeplitz(ctx, m))
    throw std::invalid_argument("extract_block_vectors: not in block-Toeplitz form");
  const FiniteField& field = ctx.field();
  const u32 pr = static_cast<u32>(ctx.pr());
  const u32 m_inv = field.inv_unit(field.from_int(static_cast<i64>(ctx.m() % ctx.p())));
  std::vector<std::vector<u32>> blocks(ctx.m(), std::vector<u32>(pr));
  for (u64 b = 0; b < ctx.m(); ++b) {
    const u32 off = static_cast<u32>(b * pr);
    for (u32 i = 0; i < pr; ++i)
      blocks[b][i] = field.mul(m_inv, m.at(off + i, off + pr - 1));
  }
  return blocks;
}

Circulant<FiniteField> synthesize_circulant(
    const StructureContext& ctx, const std::vector<std::vector<u32>>& leaders) {
  const FiniteField& field = ctx.field();
  const u64 pr = ctx.pr();
  const auto& cycles = ctx.sigma().cycles;
  if (leaders.size() != cycles.size())
    throw std::invalid_argument("synthesize_circulant: one leader block per cycle");

  std::vector<u32> v(ctx.n(), 0);
  for (std::size_t k = 0; k < cycles.size(); ++k) {
    const auto& cycle = cycles[k];
    const auto& leader = leaders[k];
    if (leader.size() != pr)
      throw std::invalid_argument("synthesize_circulant: leader block has wrong size");
    const u32 sub_degree = static_cast<u32>(ctx.t() * cycle.size());
    if (leader.back() == 0)
      throw std::domain_error("synthesize_circulant: leader's last entry must be nonzero");
    for (u32 code : leader)
      if (!field.in_subfield(code, sub_degree))
        throw std::domain_error(
            "synthesize_circulant: leader outside its cycle's subfield");

    std::vector<u32> block(leader);
    u64 res = cycle.front();
    for (std::size_t step = 0; step < cycle.size(); ++step) {
      const u64 off = (ctx.block_of_residue(res) - 1) * pr;
      for (u64 i = 0; i < pr; ++i) v[off + i] = block[i];
      res = mulmod(powmod(ctx.p(), ctx.t(), ctx.m()), res, ctx.m());
      for (u64 i = 0; i < pr; ++i) block[i] = field.frobenius(block[i], ctx.t());
    }
  }

  // Defining vector X^{-1} v; admissibility makes every entry land in the
  // Frobenius-fixed subfield.
  std::vector<u32> u(ctx.n(), 0);
  for (u32 i = 0; i < ctx.n(); ++i) {
    u32 acc = 0;
    for (u32 j = 0; j < ctx.n(); ++j)
      acc = field.add(acc, field.mul(ctx.X_inv().at(i, j), v[j]));
    u[i] = acc;
  }
  for (u32 code : u)
    if (!field.in_subfield(code, ctx.t()))
      throw std::logic_error("synthesize_circulant: defining vector left the subfield");
  return Circulant<FiniteField>(field, std::move(u));
}

}  // namespace rcm
