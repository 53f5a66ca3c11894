#include <doctest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "rcm/circulant.hpp"
#include "rcm/lifting.hpp"
#include "rcm/matrix.hpp"
#include "rcm/zmod.hpp"

using namespace rcm;

TEST_CASE("ZmodRing arithmetic in Z/12") {
  ZmodRing ring(12);
  CHECK(ring.size() == 12);
  CHECK(ring.add(7, 8) == 3);
  CHECK(ring.mul(7, 8) == 8);
  CHECK(ring.neg(5) == 7);
  CHECK(ring.neg(0) == 0);
  CHECK(ring.sub(3, 7) == 8);
  CHECK(ring.eq(ring.one(), 1));
  for (u64 x = 0; x < 12; ++x)
    CHECK(ring.is_unit(x) == (x == 1 || x == 5 || x == 7 || x == 11));
  // every unit of Z/12 is its own inverse
  for (u64 x : {1, 5, 7, 11}) CHECK(ring.inv_unit(x) == x);
  CHECK_THROWS_AS(ring.inv_unit(6), std::domain_error);
  CHECK_THROWS_AS(ZmodRing(1), std::invalid_argument);
  CHECK_THROWS_AS(ZmodRing(0), std::invalid_argument);
}

TEST_CASE("ZmodRing inverses match Fermat in Z/7") {
  ZmodRing ring(7);
  for (u64 x = 1; x < 7; ++x) CHECK(ring.inv_unit(x) == powmod(x, 5, 7));
}

TEST_CASE("from_int and integer lifts") {
  ZmodRing ring(9);
  CHECK(ring.from_int(-1) == 8);
  CHECK(ring.from_int(10) == 1);
  CHECK(ring.from_int(0) == 0);
  CHECK(ring.lift(5) == 5);
  CHECK(ring.reduce_int(mpz_class(-2)) == 7);
  CHECK(ring.reduce_int(mpz_class("123456789123456789")) ==
        mpz_class("123456789123456789").get_ui() % 9);
}

TEST_CASE("element wrappers and free functions") {
  ZmodRing ring(10);
  ZmodElement a(ring, 7), b(ring, 8);
  CHECK(zmod_add(a, b).value == 5);
  CHECK(zmod_mul(a, b).value == 6);
  CHECK(zmod_neg(a).value == 3);
  CHECK(is_unit(a));
  CHECK_FALSE(is_unit(b));
  CHECK(a == ZmodElement(ring, 7));
}

TEST_CASE("crt_split factors the modulus into prime powers") {
  ZmodRing ring(12);
  auto parts = crt_split(3, ring);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].size() == 4);
  CHECK(parts[1].size() == 3);
  auto parts360 = crt_split(2, ZmodRing(360));
  REQUIRE(parts360.size() == 3);
  CHECK(parts360[0].size() == 8);
  CHECK(parts360[1].size() == 9);
  CHECK(parts360[2].size() == 5);
  auto one = crt_split(1, ZmodRing(7));
  REQUIRE(one.size() == 1);
  CHECK(one[0].size() == 7);
}

TEST_CASE("lifted_modulus_ring multiplies a prime-power modulus by p") {
  CHECK(lifted_modulus_ring(ZmodRing(9)).size() == 27);
  CHECK(lifted_modulus_ring(ZmodRing(2)).size() == 4);
  CHECK_THROWS_AS(lifted_modulus_ring(ZmodRing(6)), std::domain_error);
}

TEST_CASE("lift_circulant carries a regular circulant to Z/p^{t+1}Z") {
  ZmodRing z3(3);
  ZmodRing z9 = lifted_modulus_ring(z3);
  Circulant<ZmodRing> c(z3, {1, 0});  // dense [[0,1],[1,0]], determinant -1
  REQUIRE(is_regular(c));
  auto lifted = lift_circulant(c, z9);
  CHECK(lifted.column == std::vector<u64>{1, 0});
  CHECK(is_regular(lifted));

  Circulant<ZmodRing> singular(z3, {1, 2});  // determinant 3 = 0 mod 3
  CHECK_FALSE(is_regular(singular));
  CHECK_THROWS_AS(lift_circulant(singular, z9), std::domain_error);
  // target modulus must be p times the source modulus
  CHECK_THROWS_AS(lift_circulant(c, ZmodRing(27)), std::invalid_argument);
  CHECK_THROWS_AS(lift_circulant(Circulant<ZmodRing>(ZmodRing(6), {1, 0}), z9),
                  std::domain_error);
}

TEST_CASE("kernel_circulant_count is p^n") {
  CHECK(kernel_circulant_count(3, 2) == 9);
  CHECK(kernel_circulant_count(2, 10) == 1024);
  CHECK(kernel_circulant_count(5, 1) == 5);
}

TEST_CASE("determinants over Z/aZ agree with integer cofactor expansion") {
  ZmodRing z4(4);
  Circulant<ZmodRing> c(z4, {1, 2});
  auto dense = to_dense(c);
  CHECK(dense.at(0, 0) == 2);
  CHECK(dense.at(0, 1) == 1);
  CHECK(dense.at(1, 0) == 1);
  CHECK(dense.at(1, 1) == 2);
  CHECK(determinant(dense) == 3);           // 2*2 - 1*1 mod 4
  CHECK(oracle::det_cofactor(dense) == 3);  // independent route
  CHECK(z4.is_unit(3));
  CHECK(is_regular(c));

  // random cross-checks against the cofactor oracle
  ZmodRing z12(12);
  u64 seed = 12345;
  for (int trial = 0; trial < 25; ++trial) {
    Matrix<ZmodRing> m(z12, 4, 4);
    for (u32 i = 0; i < 4; ++i)
      for (u32 j = 0; j < 4; ++j) {
        seed = seed * 6364136223846793005ull + 1442695040888963407ull;
        m.at(i, j) = (seed >> 33) % 12;
      }
    CHECK(determinant(m) == oracle::det_cofactor(m));
  }
}

TEST_CASE("enumerate over Z/6 matches the integer oracle") {
  ZmodRing z6(6);
  CHECK(enumerate_regular(z6, 2) == oracle::count_regular_zmod(6, 2));
  CHECK(enumerate_regular(z6, 2) == 8);
}
