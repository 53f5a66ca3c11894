#include "rcm/orders.hpp"

#include <stdexcept>

#include "rcm/circulant.hpp"
#include "rcm/finite_field.hpp"

namespace rcm {

namespace {

// The per-divisor factor (p^{t e} - 1)^{phi(d)/e} * p^{t (p^r - 1) phi(d)}
// with e = ord_d(p^t). Shared by the field and Z/aZ cases (the latter with
// t = 1 against each prime factor).
mpz_class divisor_factor(u64 p, u32 t, u64 d, u64 pr) {
  const u64 e = multiplicative_order(powmod(p, t, d), d);
  const u64 phi = euler_phi(d);
  mpz_class unit_part = mpz_pow_u64(p, t * e) - 1;
  mpz_pow_ui(unit_part.get_mpz_t(), unit_part.get_mpz_t(),
             static_cast<unsigned long>(phi / e));
  return unit_part * mpz_pow_u64(p, static_cast<u64>(t) * (pr - 1) * phi);
}

}  // namespace

GroupOrder order_rc_field(u64 p, u32 t, u32 n) {
  if (t == 0) throw std::invalid_argument("order_rc_field: t must be >= 1");
  if (n == 0) throw std::invalid_argument("order_rc_field: n must be >= 1");
  if (!is_prime(p)) throw std::domain_error("order_rc_field: p must be prime");

  const auto [m, r] = split_p_power(n, p);
  u64 pr = 1;
  for (u32 i = 0; i < r; ++i) pr *= p;

  GroupOrder order;
  order.kind = GroupOrder::Kind::field;
  order.p = p;
  order.t = t;
  order.n = n;
  order.value = 1;
  for (u64 d : divisors(m)) {
    OrderTerm term{p, d, divisor_factor(p, t, d, pr)};
    order.value *= term.factor;
    order.breakdown.push_back(std::move(term));
  }
  return order;
}

GroupOrder order_rc_zmod(u64 a, u32 n) {
  if (a < 2) throw std::invalid_argument("order_rc_zmod: modulus must be >= 2");
  if (n == 0) throw std::invalid_argument("order_rc_zmod: n must be >= 1");

  GroupOrder order;
  order.kind = GroupOrder::Kind::zmod;
  order.a = a;
  order.n = n;
  order.value = 1;
  for (auto [p, tp] : factorize(a).pairs) {
    if (tp > 1) {
      // Kernel of each reduction Z/p^{k+1} -> Z/p^k contributes p^n
      // circulant units, hence the factor p^{n (t_p - 1)}.
      OrderTerm lift{p, 0, mpz_pow_u64(p, static_cast<u64>(n) * (tp - 1))};
      order.value *= lift.factor;
      order.breakdown.push_back(std::move(lift));
    }
    const auto [m, r] = split_p_power(n, p);
    u64 pr = 1;
    for (u32 i = 0; i < r; ++i) pr *= p;
    for (u64 d : divisors(m)) {
      OrderTerm term{p, d, divisor_factor(p, 1, d, pr)};
      order.value *= term.factor;
      order.breakdown.push_back(std::move(term));
    }
  }
  return order;
}

mpz_class sl_count(u64 p, u32 t, u32 n) {
  const GroupOrder order = order_rc_field(p, t, n);
  const mpz_class units = mpz_pow_u64(p, t) - 1;
  if (units == 0 || !mpz_divisible_p(order.value.get_mpz_t(), units.get_mpz_t()))
    throw std::logic_error("sl_count: group order not divisible by p^t - 1");
  return order.value / units;
}

DetImageResult det_image(u64 p, u32 t, u32 n, u64 budget) {
  const FiniteField field(p, t);
  const mpz_class total = mpz_pow_u64(field.q(), n);
  if (total > budget) throw BudgetError(total, budget);
  const u64 count = total.get_ui();

  std::vector<bool> seen(field.q(), false);
  std::vector<u64> digits(n, 0);
  Matrix<FiniteField> dense(field, n, n);
  for (u64 idx = 0; idx < count; ++idx) {
    for (u32 i = 0; i < n; ++i)
      for (u32 j = 0; j < n; ++j)
        dense.at(i, j) = static_cast<u32>(digits[(i + n - 1 - j) % n]);
    const auto det = determinant(dense);
    if (det != 0) seen[det] = true;
    for (u32 i = n; i-- > 0;) {
      if (++digits[i] < field.q()) break;
      digits[i] = 0;
    }
  }

  DetImageResult result{p, t, {}};
  for (u64 c = 1; c < field.q(); ++c)
    if (seen[c]) result.dets.push_back(static_cast<u32>(c));
  return result;
}

}  // namespace rcm
