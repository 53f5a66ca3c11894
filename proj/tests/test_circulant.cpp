#include <doctest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "rcm/circulant.hpp"
#include "rcm/finite_field.hpp"
#include "rcm/zint.hpp"
#include "rcm/zmod.hpp"

using namespace rcm;

TEST_CASE("the defining vector is the last dense column") {
  ZmodRing z10(10);
  Circulant<ZmodRing> c2(z10, {1, 2});
  auto d2 = to_dense(c2);
  CHECK(d2.at(0, 0) == 2);
  CHECK(d2.at(0, 1) == 1);
  CHECK(d2.at(1, 0) == 1);
  CHECK(d2.at(1, 1) == 2);

  Circulant<ZmodRing> c3(z10, {1, 2, 3});
  auto d3 = to_dense(c3);
  const u64 expect[3][3] = {{3, 2, 1}, {1, 3, 2}, {2, 1, 3}};
  for (u32 i = 0; i < 3; ++i)
    for (u32 j = 0; j < 3; ++j) CHECK(d3.at(i, j) == expect[i][j]);
  // last column is the defining vector itself
  for (u32 i = 0; i < 3; ++i) CHECK(d3.at(i, 2) == c3.column[i]);
  // every row is the right rotation of the row above
  CHECK(d3 == oracle::circulant_dense(z10, c3.column));

  CHECK_THROWS_AS(Circulant<ZmodRing>(z10, {}), std::invalid_argument);
}

TEST_CASE("from_dense inverts to_dense and rejects non-circulants") {
  FiniteField f4(2, 2);
  Circulant<FiniteField> c(f4, {2, 0, 3, 1});
  CHECK(from_dense(to_dense(c)).column == c.column);
  CHECK(is_circulant_dense(to_dense(c)));

  auto broken = to_dense(c);
  broken.at(0, 0) = f4.add(broken.at(0, 0), 1);
  CHECK_FALSE(is_circulant_dense(broken));
  CHECK_THROWS_AS(from_dense(broken), std::invalid_argument);
}

TEST_CASE("shift generator and powers") {
  FiniteField f2(2, 1);
  auto a = shift_generator(f2, 3);
  const u32 expect[3][3] = {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}};
  for (u32 i = 0; i < 3; ++i)
    for (u32 j = 0; j < 3; ++j) CHECK(a.at(i, j) == expect[i][j]);
  CHECK(mat_pow(a, 3) == Matrix<FiniteField>::identity(f2, 3));
  // the shift generator is itself circulant with defining vector e_{n-1}
  CHECK(from_dense(a).column == std::vector<u32>{0, 1, 0});
  // identity circulant
  CHECK(to_dense(circulant_identity(f2, 3)) == Matrix<FiniteField>::identity(f2, 3));
}

TEST_CASE("circulant product is convolution and commutes") {
  FiniteField f4(2, 2);
  ZmodRing z12(12);
  u64 seed = 777;
  auto next = [&seed] {
    seed = seed * 6364136223846793005ull + 1442695040888963407ull;
    return seed >> 33;
  };
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<u32> u(5), v(5);
    for (auto& x : u) x = static_cast<u32>(next() % 4);
    for (auto& x : v) x = static_cast<u32>(next() % 4);
    Circulant<FiniteField> cu(f4, u), cv(f4, v);
    auto prod = circ_mul(cu, cv);
    CHECK(to_dense(prod) == mat_mul(to_dense(cu), to_dense(cv)));
    CHECK(circ_mul(cv, cu).column == prod.column);

    std::vector<u64> uz(4), vz(4);
    for (auto& x : uz) x = next() % 12;
    for (auto& x : vz) x = next() % 12;
    Circulant<ZmodRing> cuz(z12, uz), cvz(z12, vz);
    CHECK(to_dense(circ_mul(cuz, cvz)) == mat_mul(to_dense(cuz), to_dense(cvz)));
  }
  // identity is neutral
  Circulant<ZmodRing> w(z12, {3, 7, 11});
  CHECK(circ_mul(w, circulant_identity(z12, 3)).column == w.column);
}

TEST_CASE("regularity matches unit determinants, two independent routes") {
  ZmodRing z4(4);
  Circulant<ZmodRing> c(z4, {1, 2});
  const auto dense = to_dense(c);
  CHECK(determinant(dense) == 3);
  CHECK(oracle::det_cofactor(dense) == 3);
  CHECK(is_regular(c));

  ZmodRing z3(3);
  // defining vector (0,1) is the identity matrix
  Circulant<ZmodRing> id(z3, {0, 1});
  CHECK(to_dense(id) == Matrix<ZmodRing>::identity(z3, 2));
  CHECK(determinant(to_dense(id)) == 1);
  CHECK(is_regular(id));

  FiniteField f2(2, 1);
  Circulant<FiniteField> ones(f2, {1, 1});
  CHECK_FALSE(is_regular(ones));
}

TEST_CASE("enumeration counts match the independent integer oracle") {
  FiniteField f2(2, 1), f3(3, 1);
  for (u32 n = 1; n <= 4; ++n) {
    CHECK(enumerate_regular(f2, n) == oracle::count_regular_zmod(2, n));
    CHECK(enumerate_regular(f3, n) == oracle::count_regular_zmod(3, n));
  }
  CHECK(enumerate_regular(f2, 1) == 1);
  CHECK(enumerate_regular(f2, 2) == 2);
  CHECK(enumerate_regular(f2, 3) == 3);
  CHECK(enumerate_regular(f2, 4) == 8);

  ZmodRing z6(6);
  CHECK(enumerate_regular(z6, 3) == oracle::count_regular_zmod(6, 3));

  EnumerateOptions det1;
  det1.det_one = true;
  CHECK(enumerate_regular(f3, 3, det1) == 9);
  CHECK(enumerate_regular(f3, 3, det1) == oracle::count_regular_zmod(3, 3, true));
}

TEST_CASE("enumeration budget errors carry the required budget") {
  FiniteField f2(2, 1);
  EnumerateOptions opt;
  opt.budget = 100;
  CHECK_THROWS_AS(enumerate_regular(f2, 7, opt), BudgetError);
  try {
    enumerate_regular(f2, 7, opt);
  } catch (const BudgetError& e) {
    CHECK(e.required() == 128);
    CHECK(std::string(e.what()).find("128") != std::string::npos);
    CHECK(std::string(e.what()).find("100") != std::string::npos);
  }
  // a budget exactly equal to the search space is allowed
  opt.budget = 128;
  CHECK(enumerate_regular(f2, 7, opt) == 49);
}

TEST_CASE("emit streams defining vectors in lexicographic order") {
  FiniteField f2(2, 1);
  EnumerateOptions opt;
  std::vector<std::vector<u64>> seen;
  opt.emit = [&seen](const std::vector<u64>& v) { seen.push_back(v); };
  CHECK(enumerate_regular(f2, 2, opt) == 2);
  REQUIRE(seen.size() == 2);
  CHECK(seen[0] == std::vector<u64>{0, 1});
  CHECK(seen[1] == std::vector<u64>{1, 0});
}

TEST_CASE("sharded enumeration equals single-threaded") {
  FiniteField f2(2, 1);
  EnumerateOptions one, many;
  one.threads = 1;
  many.threads = 3;
  CHECK(enumerate_regular(f2, 14, one) == enumerate_regular(f2, 14, many));

  ZmodRing z3(3);
  one.det_one = many.det_one = true;
  CHECK(enumerate_regular(z3, 9, one) == enumerate_regular(z3, 9, many));
}

TEST_CASE("non-enumerable rings are rejected") {
  ZRing z;
  CHECK_THROWS_AS(enumerate_regular(z, 2), std::invalid_argument);
  FiniteField f2(2, 1);
  CHECK_THROWS_AS(enumerate_regular(f2, 0), std::invalid_argument);
}

TEST_CASE("circulant inverses stay circulant") {
  FiniteField f4(2, 2);
  Circulant<FiniteField> c(f4, {2, 1, 1});
  REQUIRE(is_regular(c));
  auto inv_dense = inverse(to_dense(c));
  CHECK(is_circulant_dense(inv_dense));
  auto cinv = from_dense(inv_dense);
  CHECK(circ_mul(c, cinv).column == circulant_identity(f4, 3).column);
}
