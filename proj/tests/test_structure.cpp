#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "oracles.hpp"
#include "rcm/orders.hpp"
#include "rcm/structure.hpp"

using namespace rcm;

TEST_CASE("multiplication-map cycles, both directions") {
  auto fwd7 = frobenius_permutation(2, 1, 7, Direction::forward);
  CHECK(fwd7.modulus == 7);
  CHECK(fwd7.multiplier == 2);
  REQUIRE(fwd7.cycles.size() == 3);
  CHECK(fwd7.cycles[0] == std::vector<u64>{0});
  CHECK(fwd7.cycles[1] == std::vector<u64>{1, 2, 4});
  CHECK(fwd7.cycles[2] == std::vector<u64>{3, 6, 5});
  CHECK(fwd7.lengths() == std::map<u64, u64>{{1, 1}, {3, 2}});

  auto inv7 = frobenius_permutation(2, 1, 7, Direction::inverse);
  CHECK(inv7.multiplier == 4);
  CHECK(inv7.cycles[1] == std::vector<u64>{1, 4, 2});
  CHECK(inv7.cycles[2] == std::vector<u64>{3, 5, 6});
  CHECK(inv7.lengths() == fwd7.lengths());

  // the two directions are mutually inverse as functions on Z/7Z
  auto f = fwd7.as_function(), g = inv7.as_function();
  for (u64 x = 0; x < 7; ++x) {
    CHECK(g[f[x]] == x);
    CHECK(f[g[x]] == x);
  }
  CHECK(f[1] == 2);
  CHECK(f[4] == 1);

  auto fwd5 = frobenius_permutation(2, 1, 5, Direction::forward);
  REQUIRE(fwd5.cycles.size() == 2);
  CHECK(fwd5.cycles[1] == std::vector<u64>{1, 2, 4, 3});

  CHECK_THROWS_AS(frobenius_permutation(2, 1, 6, Direction::forward), std::domain_error);
  CHECK_THROWS_AS(frobenius_permutation(2, 1, 0, Direction::forward), std::invalid_argument);
}

TEST_CASE("closed-form cycle structure agrees with the literal decomposition") {
  CHECK(cycle_structure_formula(2, 2, 15) == std::map<u64, u64>{{1, 3}, {2, 6}});
  for (u64 m : {1, 3, 5, 9, 15, 21, 63}) {
    CHECK(cycle_structure_formula(2, 1, m) ==
          frobenius_permutation(2, 1, m, Direction::forward).lengths());
    CHECK(cycle_structure_formula(2, 1, m) ==
          frobenius_permutation(2, 1, m, Direction::inverse).lengths());
  }
  CHECK_THROWS_AS(cycle_structure_formula(3, 1, 6), std::domain_error);
}

TEST_CASE("upper-triangular Toeplitz builder") {
  FiniteField f5(5, 1);
  auto t = toeplitz_T(f5, {1, 2, 3});
  const u32 expect[3][3] = {{3, 2, 1}, {0, 3, 2}, {0, 0, 3}};
  for (u32 i = 0; i < 3; ++i)
    for (u32 j = 0; j < 3; ++j) CHECK(t.at(i, j) == expect[i][j]);
  CHECK(determinant(t) == 2);  // 3^3 mod 5
  CHECK_THROWS_AS(toeplitz_T(f5, {}), std::invalid_argument);
}

TEST_CASE("conjugator for n = 3 over F_2: splitting field F_4") {
  StructureContext ctx(2, 1, 3);
  CHECK(ctx.m() == 3);
  CHECK(ctx.r() == 0);
  CHECK(ctx.pr() == 1);
  CHECK(ctx.s() == 2);
  CHECK(ctx.mu() == 2);
  REQUIRE(ctx.sigma().cycles.size() == 2);
  CHECK(ctx.sigma().cycles[0] == std::vector<u64>{0});
  CHECK(ctx.sigma().cycles[1] == std::vector<u64>{1, 2});

  const u32 x_expect[3][3] = {{3, 2, 1}, {2, 3, 1}, {1, 1, 1}};
  const u32 xi_expect[3][3] = {{2, 3, 1}, {3, 2, 1}, {1, 1, 1}};
  for (u32 i = 0; i < 3; ++i)
    for (u32 j = 0; j < 3; ++j) {
      CHECK(ctx.X().at(i, j) == x_expect[i][j]);
      CHECK(ctx.X_inv().at(i, j) == xi_expect[i][j]);
    }
  // A_tilde = diag(mu, mu^2, mu^3=1)
  CHECK(ctx.A_tilde().at(0, 0) == 2);
  CHECK(ctx.A_tilde().at(1, 1) == 3);
  CHECK(ctx.A_tilde().at(2, 2) == 1);
  CHECK(ctx.A_tilde().at(0, 1) == 0);

  // the ctor validated X X^{-1} = I and X A X^{-1} = A_tilde; re-derive the
  // second identity in product form
  auto a = shift_generator(ctx.field(), 3);
  CHECK(mat_mul(ctx.X(), a) == mat_mul(ctx.A_tilde(), ctx.X()));

  // a table-free splitting field yields the same conjugator
  StructureContext slow(2, 1, 3, 0);
  CHECK(slow.X() == ctx.X());
  CHECK(slow.X_inv() == ctx.X_inv());
}

TEST_CASE("conjugator for n = 4 over F_2: no field extension needed") {
  StructureContext ctx(2, 1, 4);
  CHECK(ctx.m() == 1);
  CHECK(ctx.r() == 2);
  CHECK(ctx.pr() == 4);
  CHECK(ctx.s() == 1);
  // with m = 1 and mu = 1 the conjugator degenerates to the Pascal matrix
  const u32 x_expect[4][4] = {
      {1, 0, 0, 0}, {1, 1, 0, 0}, {1, 0, 1, 0}, {1, 1, 1, 1}};
  for (u32 i = 0; i < 4; ++i)
    for (u32 j = 0; j < 4; ++j) CHECK(ctx.X().at(i, j) == x_expect[i][j]);
  CHECK(ctx.X() == pascal_matrix(ctx.field(), 4));
  CHECK(ctx.X_inv() == ctx.X());  // Pascal is an involution mod 2

  // A_tilde is the single Jordan block with eigenvalue 1
  for (u32 i = 0; i < 4; ++i) {
    CHECK(ctx.A_tilde().at(i, i) == 1);
    if (i + 1 < 4) CHECK(ctx.A_tilde().at(i, i + 1) == 1);
  }
  CHECK(ctx.A_tilde().at(0, 2) == 0);
}

TEST_CASE("signed Pascal block appears for odd characteristic") {
  StructureContext ctx(3, 1, 3);
  CHECK(ctx.m() == 1);
  CHECK(ctx.pr() == 3);
  CHECK(ctx.s() == 1);
  CHECK(ctx.X() == pascal_inverse_signed(ctx.field(), 3));
  CHECK(ctx.X_inv() == pascal_matrix(ctx.field(), 3));
}

TEST_CASE("closed-form Jordan block powers") {
  StructureContext ctx(2, 1, 6);  // m = 3, blocks of size 2 over F_4
  CHECK(ctx.m() == 3);
  CHECK(ctx.pr() == 2);
  const FiniteField& f = ctx.field();
  for (u64 b = 1; b <= 3; ++b) {
    Matrix<FiniteField> jb(f, 2, 2);
    const u32 eig = f.pow(ctx.mu(), static_cast<i64>(b % 3));
    jb.at(0, 0) = jb.at(1, 1) = eig;
    jb.at(0, 1) = f.one();
    for (u64 k = 0; k <= 8; ++k)
      CHECK(jordan_block_power(ctx, b, k) == mat_pow(jb, k));
    // the p^r-th power is the scalar mu^{b p^r}
    auto scalar = jordan_block_power(ctx, b, 2);
    CHECK(scalar.at(0, 1) == 0);
    CHECK(scalar.at(0, 0) == f.pow(ctx.mu(), static_cast<i64>(2 * b % 3)));
  }
}

TEST_CASE("Frobenius of the conjugator permutes its block rows") {
  for (u32 n : {2, 3, 4, 6}) CHECK(frobenius_conjugation_check(StructureContext(2, 1, n)));
  CHECK(frobenius_conjugation_check(StructureContext(3, 1, 6)));
  CHECK(frobenius_conjugation_check(StructureContext(2, 2, 3)));
}

TEST_CASE("admissibility over n = 3, F_2") {
  StructureContext ctx(2, 1, 3);
  CHECK(check_admissible(ctx, {2, 3, 1}));        // canonical vector of the shift
  CHECK_FALSE(check_admissible(ctx, {2, 2, 1}));  // breaks the Frobenius chain
  CHECK_FALSE(check_admissible(ctx, {0, 1, 1}));  // zero last entry in block 1
  CHECK_FALSE(check_admissible(ctx, {2, 3, 2}));  // block 3 leader outside F_2
  CHECK_THROWS_AS(check_admissible(ctx, {1, 1}), std::invalid_argument);
}

TEST_CASE("canonical form of the shift generator is the Jordan form") {
  StructureContext ctx(2, 1, 3);
  auto a = circulant_identity(ctx.field(), 3);
  a.column = {0, 1, 0};  // defining vector of the shift generator
  auto canon = canonical_form(ctx, a);
  CHECK(canon == ctx.A_tilde());
  auto blocks = extract_block_vectors(ctx, canon);
  REQUIRE(blocks.size() == 3);
  CHECK(blocks[0] == std::vector<u32>{2});
  CHECK(blocks[1] == std::vector<u32>{3});
  CHECK(blocks[2] == std::vector<u32>{1});
}

TEST_CASE("orbit direction: the block chain applies Frobenius along x -> p^t x") {
  // n = 5 over F_2 splits in F_16 with mu = 8 of order 5; the shift's
  // canonical blocks are (mu, mu^2, mu^3, mu^4, 1), which is admissible
  // only if successive blocks along 1 -> 2 -> 4 -> 3 square the previous
  // one. The opposite reading gives (8,10,12,15,1) and must be rejected.
  StructureContext ctx(2, 1, 5);
  CHECK(ctx.s() == 4);
  CHECK(ctx.mu() == 8);
  REQUIRE(ctx.sigma().cycles.size() == 2);
  CHECK(ctx.sigma().cycles[0] == std::vector<u64>{0});
  CHECK(ctx.sigma().cycles[1] == std::vector<u64>{1, 3, 4, 2});

  auto a = circulant_identity(ctx.field(), 5);
  a.column = {0, 0, 0, 1, 0};
  auto blocks = extract_block_vectors(ctx, canonical_form(ctx, a));
  CHECK(blocks[0] == std::vector<u32>{8});
  CHECK(blocks[1] == std::vector<u32>{12});
  CHECK(blocks[2] == std::vector<u32>{10});
  CHECK(blocks[3] == std::vector<u32>{15});
  CHECK(blocks[4] == std::vector<u32>{1});

  CHECK(check_admissible(ctx, {8, 12, 10, 15, 1}));
  CHECK_FALSE(check_admissible(ctx, {8, 10, 12, 15, 1}));

  // synthesizing from the leaders (1 for cycle {0}, mu for the long cycle)
  // recovers the shift generator exactly
  auto back = synthesize_circulant(ctx, {{1}, {8}});
  CHECK(back.column == std::vector<u32>{0, 0, 0, 1, 0});
}

TEST_CASE("synthesis walks each cycle and inverts the conjugation") {
  StructureContext ctx(2, 1, 3);
  auto c = synthesize_circulant(ctx, {{1}, {2}});
  CHECK(c.column == std::vector<u32>{0, 1, 0});

  CHECK_THROWS_AS(synthesize_circulant(ctx, {{1}}), std::invalid_argument);
  CHECK_THROWS_AS(synthesize_circulant(ctx, {{1}, {2, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(synthesize_circulant(ctx, {{0}, {2}}), std::domain_error);
}

TEST_CASE("subfield constraints on cycle leaders") {
  StructureContext ctx(2, 1, 7);  // F_8; residue-0 cycle needs F_2 leaders
  CHECK(ctx.s() == 3);
  REQUIRE(ctx.sigma().cycles.size() == 3);
  // leader 2 = x lies in F_8 but not F_2, so the fixed cycle rejects it
  CHECK_THROWS_AS(synthesize_circulant(ctx, {{2}, {2}, {2}}), std::domain_error);
  // same violation through the admissibility predicate: block 7 carries
  // residue 0 and must be Frobenius-fixed
  CHECK_FALSE(check_admissible(ctx, {2, 2, 2, 2, 2, 2, 2}));
  // chains fail too: the orbit 1 -> 2 -> 4 needs block 4 to hold F(F(2)) = 6
  CHECK_FALSE(check_admissible(ctx, {2, 4, 6, 2, 4, 6, 1}));
  auto good = synthesize_circulant(ctx, {{1}, {2}, {3}});
  CHECK(check_admissible(ctx, [&] {
    auto blocks = extract_block_vectors(ctx, canonical_form(ctx, good));
    std::vector<u32> v;
    for (const auto& b : blocks) v.insert(v.end(), b.begin(), b.end());
    return v;
  }()));
}

TEST_CASE("canonical form input validation") {
  StructureContext ctx2(2, 1, 2);
  Circulant<FiniteField> singular(ctx2.field(), {1, 1});
  CHECK_THROWS_AS(canonical_form(ctx2, singular), SingularMatrixError);

  StructureContext ctx3(2, 1, 3);
  Circulant<FiniteField> outside(ctx3.field(), {2, 0, 1});
  CHECK_THROWS_AS(canonical_form(ctx3, outside), std::domain_error);
  Circulant<FiniteField> short_vec(ctx3.field(), {1, 1});
  CHECK_THROWS_AS(canonical_form(ctx3, short_vec), std::invalid_argument);
  FiniteField f2(2, 1);
  Circulant<FiniteField> wrong_field(f2, {1, 0, 0});
  CHECK_THROWS_AS(canonical_form(ctx3, wrong_field), std::invalid_argument);
}

TEST_CASE("exhaustive round trip for n = 6 over F_2") {
  StructureContext ctx(2, 1, 6);
  const FiniteField& f = ctx.field();
  const u32 scale = f.from_int(static_cast<i64>(ctx.m()));
  u64 regular_count = 0;
  for (u32 mask = 0; mask < 64; ++mask) {
    std::vector<u32> col(6);
    for (u32 i = 0; i < 6; ++i) col[i] = (mask >> i) & 1;
    Circulant<FiniteField> c(f, col);
    if (!is_regular(c)) continue;
    ++regular_count;

    auto canon = canonical_form(ctx, c);
    REQUIRE(is_block_toeplitz(ctx, canon));
    auto blocks = extract_block_vectors(ctx, canon);

    // the canonical form is m times the block-diagonal of the T(v_(b))
    for (u64 b = 0; b < 3; ++b) {
      auto t = toeplitz_T(f, blocks[b]);
      for (u32 i = 0; i < 2; ++i)
        for (u32 j = 0; j < 2; ++j)
          CHECK(canon.at(static_cast<u32>(b) * 2 + i, static_cast<u32>(b) * 2 + j) ==
                f.mul(scale, t.at(i, j)));
    }

    std::vector<u32> stacked;
    for (const auto& b : blocks) stacked.insert(stacked.end(), b.begin(), b.end());
    CHECK(check_admissible(ctx, stacked));

    // rebuild from the cycle leaders: sigma's cycles are {0} and {1, 2},
    // whose leading residues live in blocks 3 and 1
    auto rebuilt = synthesize_circulant(ctx, {blocks[2], blocks[0]});
    CHECK(rebuilt.column == c.column);
  }
  CHECK(regular_count == 24);
  CHECK(admissible_count(2, 1, 6) == 24);
  CHECK(admissible_count(2, 1, 6) == order_rc_field(2, 1, 6).value);
}

TEST_CASE("block-Toeplitz recognition rejects perturbations") {
  StructureContext ctx(2, 1, 6);
  auto good = ctx.A_tilde();
  CHECK(is_block_toeplitz(ctx, good));

  auto off_block = good;
  off_block.at(0, 3) = 1;  // outside the diagonal blocks
  CHECK_FALSE(is_block_toeplitz(ctx, off_block));
  CHECK_THROWS_AS(extract_block_vectors(ctx, off_block), std::invalid_argument);

  auto lower = good;
  lower.at(1, 0) = 1;  // below a block diagonal
  CHECK_FALSE(is_block_toeplitz(ctx, lower));

  auto uneven = good;
  uneven.at(1, 1) = ctx.field().add(uneven.at(1, 1), 1);  // diagonal not constant
  CHECK_FALSE(is_block_toeplitz(ctx, uneven));
}

TEST_CASE("admissible count equals the closed order formula") {
  for (u64 p : {2, 3, 5}) {
    StructureContext probe(p, 1, static_cast<u32>(p));  // touches the p | n path
    CHECK(probe.m() == 1);
    for (u32 t = 1; t <= 2; ++t)
      for (u32 n = 1; n <= 12; ++n)
        CHECK(admissible_count(p, t, n) == order_rc_field(p, t, n).value);
  }
  CHECK_THROWS_AS(admissible_count(4, 1, 3), std::domain_error);
  CHECK_THROWS_AS(admissible_count(2, 0, 3), std::invalid_argument);
}

TEST_CASE("context construction rejects bad parameters") {
  CHECK_THROWS_AS(StructureContext(2, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(StructureContext(6, 1, 3), std::domain_error);
}
