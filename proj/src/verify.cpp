#include "rcm/verify.hpp"

#include <array>
#include <memory>
#include <numeric>
#include <random>
#include <stdexcept>
#include <tuple>

#include "rcm/circulant.hpp"
#include "rcm/finite_field.hpp"
#include "rcm/matrix.hpp"
#include "rcm/orders.hpp"
#include "rcm/structure.hpp"
#include "rcm/zint.hpp"
#include "rcm/zmod.hpp"

namespace rcm {

namespace {

CheckResult pass(std::string name) { return {std::move(name), Status::pass, ""}; }

CheckResult fail(std::string name, std::string detail) {
  return {std::move(name), Status::fail, std::move(detail)};
}

CheckResult skip(std::string name, std::string detail) {
  return {std::move(name), Status::skip, std::move(detail)};
}

CheckResult verdict(std::string name, bool ok, std::string detail) {
  return ok ? pass(std::move(name)) : fail(std::move(name), std::move(detail));
}

std::string cfg_field(u64 p, u32 t, u32 n) {
  return "p=" + std::to_string(p) + " t=" + std::to_string(t) +
         " n=" + std::to_string(n);
}

mpz_class mpz_pow(const mpz_class& base, u64 e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

u64 u64_pow(u64 base, u32 e) {
  u64 r = 1;
  for (u32 i = 0; i < e; ++i) r *= base;
  return r;
}

// Budget gate: a skip result when size^n candidates exceed the budget,
// otherwise nothing.
bool over_budget(const std::string& name, u64 size, u32 n, u64 budget,
                 std::vector<CheckResult>& out) {
  const mpz_class total = mpz_pow_u64(size, n);
  if (total <= budget) return false;
  out.push_back(skip(name, "search space " + total.get_str() +
                               " exceeds budget " + std::to_string(budget)));
  return true;
}

// Deterministic small-range draw (avoids distribution objects, whose
// output is implementation-defined).
u64 draw(std::mt19937_64& rng, u64 bound) { return rng() % bound; }

template <class R>
Circulant<R> random_regular(const R& ring, u32 n, std::mt19937_64& rng,
                            const std::vector<typename R::Elem>& pool) {
  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::vector<typename R::Elem> col(n);
    for (u32 i = 0; i < n; ++i) col[i] = pool[draw(rng, pool.size())];
    Circulant<R> c(ring, std::move(col));
    if (is_regular(c)) return c;
  }
  throw std::logic_error("random_regular: rejection sampling failed");
}

// 1000 random regular pairs: the product is circulant, regular, commutes,
// and agrees with dense multiplication; the dense inverse is circulant and
// multiplies back to the identity.
template <class R>
CheckResult group_axioms_check(std::string name, const R& ring, u32 n,
                               std::mt19937_64& rng,
                               const std::vector<typename R::Elem>& pool) {
  const auto id_column = circulant_identity(ring, n).column;
  for (int sample = 0; sample < 1000; ++sample) {
    const auto a = random_regular(ring, n, rng, pool);
    const auto b = random_regular(ring, n, rng, pool);
    const auto prod = circ_mul(a, b);
    const std::string where = "sample " + std::to_string(sample);
    if (to_dense(prod) != mat_mul(to_dense(a), to_dense(b)))
      return fail(name, where + ": circ_mul disagrees with dense product");
    if (circ_mul(b, a).column != prod.column)
      return fail(name, where + ": product does not commute");
    if (!is_regular(prod))
      return fail(name, where + ": product of regular circulants not regular");
    const auto inv_dense = inverse(to_dense(a));
    if (!is_circulant_dense(inv_dense))
      return fail(name, where + ": inverse is not circulant");
    const auto inv_c = from_dense(inv_dense);
    if (circ_mul(a, inv_c).column != id_column)
      return fail(name, where + ": inverse does not multiply to the identity");
  }
  return pass(std::move(name));
}

}  // namespace

const char* status_name(Status s) {
  switch (s) {
    case Status::pass:
      return "PASS";
    case Status::fail:
      return "FAIL";
    default:
      return "SKIP";
  }
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (r.status == Status::fail) return false;
  return true;
}

std::vector<CheckResult> verify_orders(u64 budget) {
  std::vector<CheckResult> out;
  struct Grid {
    u64 p;
    u32 t, n_max;
  };
  constexpr std::array<Grid, 5> grids{
      {{2, 1, 16}, {2, 2, 8}, {3, 1, 10}, {5, 1, 6}, {7, 1, 5}}};

  // Closed formula vs. exhaustive enumeration.
  for (const Grid& g : grids) {
    const FiniteField field(g.p, g.t);
    for (u32 n = 1; n <= g.n_max; ++n) {
      const std::string name = "orders/field " + cfg_field(g.p, g.t, n);
      if (over_budget(name, field.q(), n, budget, out)) continue;
      const mpz_class formula = order_rc_field(g.p, g.t, n).value;
      EnumerateOptions opt;
      opt.budget = budget;
      const mpz_class counted = enumerate_regular(field, n, opt);
      out.push_back(verdict(name, formula == counted,
                            "formula=" + formula.get_str() +
                                " enumeration=" + counted.get_str()));
    }
  }

  // The p-power part of the order collapses to p^{t(n-m)}: the order equals
  // the unit-part product times that single power.
  for (const Grid& g : grids) {
    const std::string name =
        "orders/p-part p=" + std::to_string(g.p) + " t=" + std::to_string(g.t);
    bool ok = true;
    std::string detail;
    for (u32 n = 1; n <= 24 && ok; ++n) {
      const auto [m, r] = split_p_power(n, g.p);
      (void)r;
      mpz_class unit_part = 1;
      for (u64 d : divisors(m)) {
        const u64 e = multiplicative_order(powmod(g.p, g.t, d), d);
        unit_part *= mpz_pow(mpz_pow_u64(g.p, u64{g.t} * e) - 1, euler_phi(d) / e);
      }
      const mpz_class expected =
          unit_part * mpz_pow_u64(g.p, u64{g.t} * (n - m));
      const mpz_class got = order_rc_field(g.p, g.t, n).value;
      if (got != expected) {
        ok = false;
        detail = "n=" + std::to_string(n) + " order=" + got.get_str() +
                 " unit-part*p-power=" + expected.get_str();
      }
    }
    out.push_back(verdict(name, ok, detail));
  }

  // sl_count * (q - 1) recovers the full order exactly.
  for (const Grid& g : grids) {
    const std::string name =
        "orders/sl p=" + std::to_string(g.p) + " t=" + std::to_string(g.t);
    const mpz_class units = mpz_pow_u64(g.p, g.t) - 1;
    bool ok = true;
    std::string detail;
    for (u32 n = 1; n <= 16 && ok; ++n) {
      const mpz_class lhs = sl_count(g.p, g.t, n) * units;
      const mpz_class rhs = order_rc_field(g.p, g.t, n).value;
      if (lhs != rhs) {
        ok = false;
        detail = "n=" + std::to_string(n) + " sl*(q-1)=" + lhs.get_str() +
                 " order=" + rhs.get_str();
      }
    }
    out.push_back(verdict(name, ok, detail));
  }

  // Determinant-one counts match sl_count, and the determinant map is onto
  // the multiplicative group.
  constexpr std::array<Grid, 4> det_grid{
      {{2, 2, 3}, {3, 1, 3}, {3, 1, 4}, {5, 1, 2}}};
  for (const Grid& g : det_grid) {
    const std::string name = "orders/det-one " + cfg_field(g.p, g.t, g.n_max);
    const FiniteField field(g.p, g.t);
    if (over_budget(name, field.q(), g.n_max, budget, out)) continue;
    EnumerateOptions opt;
    opt.budget = budget;
    opt.det_one = true;
    const mpz_class counted = enumerate_regular(field, g.n_max, opt);
    const mpz_class expected = sl_count(g.p, g.t, g.n_max);
    bool ok = counted == expected;
    std::string detail = "det-one count=" + counted.get_str() +
                         " order/(q-1)=" + expected.get_str();
    const DetImageResult image = det_image(g.p, g.t, g.n_max, budget);
    std::vector<u32> everything;
    for (u64 c = 1; c < field.q(); ++c) everything.push_back(static_cast<u32>(c));
    if (image.dets != everything) {
      ok = false;
      detail += "; det image misses part of the unit group";
    }
    out.push_back(verdict(name, ok, detail));
  }
  return out;
}

std::vector<CheckResult> verify_zmod(u64 budget) {
  std::vector<CheckResult> out;

  // Closed formula vs. exhaustive enumeration over Z/aZ.
  for (u64 a = 2; a <= 12; ++a) {
    const ZmodRing ring(a);
    for (u32 n = 1; n <= 5; ++n) {
      if (mpz_pow_u64(a, n) > (u64{1} << 20)) continue;  // grid bound
      const std::string name =
          "zmod/order a=" + std::to_string(a) + " n=" + std::to_string(n);
      if (over_budget(name, a, n, budget, out)) continue;
      const mpz_class formula = order_rc_zmod(a, n).value;
      EnumerateOptions opt;
      opt.budget = budget;
      const mpz_class counted = enumerate_regular(ring, n, opt);
      out.push_back(verdict(name, formula == counted,
                            "formula=" + formula.get_str() +
                                " enumeration=" + counted.get_str()));
    }
  }

  // Multiplicativity across the prime factorization of a.
  {
    bool ok = true;
    std::string detail;
    for (u64 a = 2; a <= 30 && ok; ++a) {
      for (u32 n = 1; n <= 4 && ok; ++n) {
        mpz_class product = 1;
        for (const auto& [p, e] : factorize(a).pairs)
          product *= order_rc_zmod(u64_pow(p, e), n).value;
        const mpz_class direct = order_rc_zmod(a, n).value;
        if (product != direct) {
          ok = false;
          detail = "a=" + std::to_string(a) + " n=" + std::to_string(n) +
                   " direct=" + direct.get_str() +
                   " prime-power product=" + product.get_str();
        }
      }
    }
    out.push_back(verdict("zmod/crt", ok, detail));
  }

  // Lifting recursion: one more power of p multiplies the count by p^n,
  // checked with both sides enumerated.
  for (u64 p : {u64{2}, u64{3}}) {
    for (u32 t = 1; t <= 2; ++t) {
      for (u32 n = 1; n <= 4; ++n) {
        const std::string name = "zmod/lift p=" + std::to_string(p) +
                                 " t=" + std::to_string(t) +
                                 " n=" + std::to_string(n);
        const u64 lo_mod = u64_pow(p, t), hi_mod = lo_mod * p;
        if (over_budget(name, hi_mod, n, budget, out)) continue;
        EnumerateOptions opt;
        opt.budget = budget;
        const ZmodRing lo(lo_mod), hi(hi_mod);
        const mpz_class lo_count = enumerate_regular(lo, n, opt);
        const mpz_class hi_count = enumerate_regular(hi, n, opt);
        const mpz_class kernel = kernel_circulant_count(p, n);
        out.push_back(verdict(name, hi_count == kernel * lo_count,
                              "count(" + std::to_string(hi_mod) +
                                  ")=" + hi_count.get_str() + " kernel*count(" +
                                  std::to_string(lo_mod) +
                                  ")=" + mpz_class(kernel * lo_count).get_str()));
      }
    }
  }
  return out;
}

std::vector<CheckResult> verify_cycles() {
  std::vector<CheckResult> out;
  constexpr std::array<std::pair<u64, u32>, 8> bases{
      {{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {2, 4}}};
  for (const auto& [p, t] : bases) {
    const u64 q = u64_pow(p, t);
    {
      bool ok = true;
      std::string detail;
      for (u64 m = 1; m <= 200 && ok; ++m) {
        if (std::gcd(m, p) != 1) continue;
        const auto formula = cycle_structure_formula(p, t, m);
        const auto literal =
            frobenius_permutation(p, t, m, Direction::forward).lengths();
        if (formula != literal) {
          ok = false;
          detail = "m=" + std::to_string(m);
        }
      }
      out.push_back(
          verdict("cycles/formula multiplier=" + std::to_string(q), ok, detail));
    }
    {
      bool ok = true;
      std::string detail;
      for (u64 m = 1; m <= 60 && ok; ++m) {
        if (std::gcd(m, p) != 1) continue;
        const auto fwd = frobenius_permutation(p, t, m, Direction::forward);
        const auto inv = frobenius_permutation(p, t, m, Direction::inverse);
        if (fwd.lengths() != inv.lengths()) {
          ok = false;
          detail = "m=" + std::to_string(m) + " length multisets differ";
          break;
        }
        const auto f = fwd.as_function(), g = inv.as_function();
        for (u64 x = 0; x < m; ++x) {
          if (f[g[x]] != x || g[f[x]] != x) {
            ok = false;
            detail = "m=" + std::to_string(m) + " maps are not mutual inverses";
            break;
          }
        }
      }
      out.push_back(
          verdict("cycles/inverse multiplier=" + std::to_string(q), ok, detail));
    }
  }
  return out;
}

std::vector<CheckResult> verify_pascal() {
  std::vector<CheckResult> out;
  const std::array<u64, 4> primes{2, 3, 5, 7};

  for (u64 p : primes) {
    const FiniteField field(p, 1);
    std::vector<u32> rs{1, 2};
    if (p == 2) rs.push_back(3);
    for (u32 r : rs) {
      const u32 size = static_cast<u32>(u64_pow(p, r));
      const std::string name =
          "pascal/inverse p=" + std::to_string(p) + " size=" + std::to_string(size);
      const auto pasc = pascal_matrix(field, size);
      const auto signed_inv = pascal_inverse_signed(field, size);
      const auto reflected = pascal_inverse_reflected(field, size, p);
      const auto identity = Matrix<FiniteField>::identity(field, size);
      const bool ok = mat_mul(pasc, signed_inv) == identity &&
                      mat_mul(signed_inv, pasc) == identity &&
                      mat_mul(pasc, reflected) == identity &&
                      mat_mul(reflected, pasc) == identity &&
                      signed_inv == reflected;
      out.push_back(verdict(name, ok, "some product missed the identity"));
    }
    {
      const std::string name = "pascal/kronecker p=" + std::to_string(p);
      const auto base = pascal_matrix(field, static_cast<u32>(p));
      auto power = base;
      bool ok = true;
      u32 max_r = p == 2 ? 3 : 2;
      for (u32 r = 2; r <= max_r; ++r) {
        power = kronecker(power, base);
        ok = ok && power == pascal_matrix(field, static_cast<u32>(u64_pow(p, r)));
      }
      out.push_back(verdict(name, ok, "Kronecker power differs from direct matrix"));
    }
  }

  // Digit-wise binomials vs. exact integer binomials, for every prime at
  // once so each binomial is computed a single time.
  {
    std::array<bool, 4> ok{true, true, true, true};
    std::array<std::string, 4> details;
    mpz_class bin;
    for (u64 a = 0; a <= 500; ++a) {
      for (u64 b = 0; b <= 500; ++b) {
        mpz_bin_uiui(bin.get_mpz_t(), static_cast<unsigned long>(a),
                     static_cast<unsigned long>(b));
        for (std::size_t i = 0; i < primes.size(); ++i) {
          if (!ok[i]) continue;
          const u64 expected = mpz_fdiv_ui(bin.get_mpz_t(), primes[i]);
          if (lucas_binomial(a, b, primes[i]) != expected) {
            ok[i] = false;
            details[i] = "a=" + std::to_string(a) + " b=" + std::to_string(b);
          }
        }
      }
    }
    for (std::size_t i = 0; i < primes.size(); ++i)
      out.push_back(verdict("pascal/lucas p=" + std::to_string(primes[i]), ok[i],
                            details[i]));
  }

  // The signed inverse also works over the integers, where no truncation
  // can hide an error.
  {
    const ZRing z;
    const u32 n = 16;
    const bool ok = mat_mul(pascal_matrix(z, n), pascal_inverse_signed(z, n)) ==
                    Matrix<ZRing>::identity(z, n);
    out.push_back(verdict("pascal/signed-integers", ok,
                          "product misses the identity over Z"));
  }
  return out;
}

std::vector<CheckResult> verify_structure(u64 budget) {
  (void)budget;  // every structure check is closed-form or fixed-sample
  std::vector<CheckResult> out;

  constexpr std::array<std::tuple<u64, u32, u32>, 9> grid{{{2, 1, 2},
                                                           {2, 1, 3},
                                                           {2, 1, 4},
                                                           {2, 1, 6},
                                                           {2, 2, 3},
                                                           {3, 1, 2},
                                                           {3, 1, 3},
                                                           {3, 1, 6},
                                                           {5, 1, 4}}};
  for (const auto& [p, t, n] : grid) {
    const std::string cfg = cfg_field(p, t, n);
    std::unique_ptr<StructureContext> ctx;
    try {
      ctx = std::make_unique<StructureContext>(p, t, n);
    } catch (const std::exception& e) {
      out.push_back(fail("structure/conjugation " + cfg, e.what()));
      continue;
    }
    // Construction already validated X X^{-1} = I and X A X^{-1} = Jordan.
    out.push_back(pass("structure/conjugation " + cfg));
    out.push_back(verdict("structure/closed-inverse " + cfg,
                          inverse(ctx->X()) == ctx->X_inv(),
                          "closed-form inverse differs from elimination"));
    out.push_back(verdict("structure/frobenius " + cfg,
                          frobenius_conjugation_check(*ctx),
                          "entrywise Frobenius of X is not P*X"));

    std::mt19937_64 rng(0x5eed0000u + p * 10000 + t * 100 + n);
    const auto pool = ctx->field().subfield_elements(t);
    bool ok = true;
    std::string detail;
    for (int sample = 0; sample < 100 && ok; ++sample) {
      const auto c = random_regular(ctx->field(), n, rng, pool);
      const auto canon = canonical_form(*ctx, c);
      if (!is_block_toeplitz(*ctx, canon)) {
        ok = false;
        detail = "sample " + std::to_string(sample) + ": not block Toeplitz";
        break;
      }
      const auto blocks = extract_block_vectors(*ctx, canon);
      std::vector<u32> stacked;
      for (const auto& block : blocks)
        stacked.insert(stacked.end(), block.begin(), block.end());
      if (!check_admissible(*ctx, stacked)) {
        ok = false;
        detail = "sample " + std::to_string(sample) + ": not admissible";
        break;
      }
      std::vector<std::vector<u32>> leaders;
      for (const auto& cycle : ctx->sigma().cycles)
        leaders.push_back(blocks[ctx->block_of_residue(cycle.front()) - 1]);
      const auto rebuilt = synthesize_circulant(*ctx, leaders);
      if (rebuilt.column != c.column) {
        ok = false;
        detail = "sample " + std::to_string(sample) + ": round trip changed the vector";
      }
    }
    out.push_back(verdict("structure/canonical " + cfg, ok, detail));
  }

  // Admissible-vector count equals the group order, formula vs. formula.
  for (u64 p : {u64{2}, u64{3}, u64{5}}) {
    for (u32 t = 1; t <= 3; ++t) {
      const std::string name =
          "structure/count p=" + std::to_string(p) + " t=" + std::to_string(t);
      bool ok = true;
      std::string detail;
      for (u32 n = 1; n <= 24 && ok; ++n) {
        const mpz_class adm = admissible_count(p, t, n);
        const mpz_class ord = order_rc_field(p, t, n).value;
        if (adm != ord) {
          ok = false;
          detail = "n=" + std::to_string(n) + " admissible=" + adm.get_str() +
                   " order=" + ord.get_str();
        }
      }
      out.push_back(verdict(name, ok, detail));
    }
  }

  // Group axioms on random regular pairs.
  constexpr std::array<std::tuple<u64, u32, u32>, 4> field_cfgs{
      {{2, 1, 4}, {3, 1, 3}, {2, 2, 3}, {5, 1, 2}}};
  for (const auto& [p, t, n] : field_cfgs) {
    const FiniteField field(p, t);
    std::vector<u32> pool;
    for (u64 c = 0; c < field.q(); ++c) pool.push_back(static_cast<u32>(c));
    std::mt19937_64 rng(0xc1ac0000u + p * 10000 + t * 100 + n);
    out.push_back(group_axioms_check("structure/axioms field " + cfg_field(p, t, n),
                                     field, n, rng, pool));
  }
  constexpr std::array<std::pair<u64, u32>, 3> zmod_cfgs{{{6, 2}, {12, 2}, {4, 3}}};
  for (const auto& [a, n] : zmod_cfgs) {
    const ZmodRing ring(a);
    std::vector<u64> pool;
    for (u64 c = 0; c < a; ++c) pool.push_back(c);
    std::mt19937_64 rng(0xc1ac0000u + a * 100 + n);
    out.push_back(group_axioms_check("structure/axioms mod a=" + std::to_string(a) +
                                         " n=" + std::to_string(n),
                                     ring, n, rng, pool));
  }
  return out;
}

std::vector<CheckResult> verify_suite(const std::string& name, u64 budget) {
  if (name == "orders") return verify_orders(budget);
  if (name == "zmod") return verify_zmod(budget);
  if (name == "cycles") return verify_cycles();
  if (name == "pascal") return verify_pascal();
  if (name == "structure") return verify_structure(budget);
  if (name == "all") {
    std::vector<CheckResult> out = verify_orders(budget);
    auto append = [&out](std::vector<CheckResult> v) {
      out.insert(out.end(), std::make_move_iterator(v.begin()),
                 std::make_move_iterator(v.end()));
    };
    append(verify_zmod(budget));
    append(verify_cycles());
    append(verify_pascal());
    append(verify_structure(budget));
    return out;
  }
  throw std::invalid_argument("verify_suite: unknown suite '" + name + "'");
}

}  // namespace rcm
