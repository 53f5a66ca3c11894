#include "rcm/finite_field.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rcm {

namespace {

// Dense polynomial helpers over F_p, coefficient vectors ascending with no
// trailing-zero guarantees. Only used during field construction and as the
// arithmetic fallback for large fields, so clarity beats speed.

using Poly = std::vector<u32>;

u32 poly_degree(const Poly& f) {
  for (std::size_t i = f.size(); i-- > 0;)
    if (f[i] != 0) return static_cast<u32>(i);
  return 0;  // the zero polynomial is treated as degree 0 where it matters
}

bool poly_is_zero(const Poly& f) {
  for (u32 c : f)
    if (c != 0) return false;
  return true;
}

Poly poly_mod(Poly f, const Poly& g, u64 p) {
  const u32 dg = poly_degree(g);
  while (!poly_is_zero(f)) {
    const u32 df = poly_degree(f);
    if (df < dg) break;
    // g is monic in every call site, so the quotient digit is f's lead.
    const u64 lead = f[df];
    for (u32 i = 0; i <= dg; ++i) {
      const u64 sub = lead * g[i] % p;
      f[df - dg + i] = static_cast<u32>((f[df - dg + i] + p - sub) % p);
    }
  }
  f.resize(dg == 0 ? 1 : dg);
  return f;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& g, u64 p) {
  Poly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      prod[i + j] = static_cast<u32>((prod[i + j] + static_cast<u64>(a[i]) * b[j]) % p);
  }
  return poly_mod(std::move(prod), g, p);
}

Poly poly_powmod(Poly base, u64 e, const Poly& g, u64 p) {
  Poly result{1};
  while (e) {
    if (e & 1) result = poly_mulmod(result, base, g, p);
    base = poly_mulmod(base, base, g, p);
    e >>= 1;
  }
  return result;
}

Poly poly_gcd(Poly a, Poly b, u64 p) {
  auto inv_mod_p = [p](u64 v) {
    // Fermat inverse; p is prime.
    u64 r = 1, base = v % p, e = p - 2;
    while (e) {
      if (e & 1) r = r * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return r;
  };
  while (!poly_is_zero(b)) {
    // Reduce a mod b after making b monic.
    const u32 db = poly_degree(b);
    const u64 lead_inv = inv_mod_p(b[db]);
    Poly monic(b.begin(), b.begin() + db + 1);
    for (u32& c : monic) c = static_cast<u32>(c * lead_inv % p);
    a = poly_mod(std::move(a), monic, p);
    std::swap(a, b);
  }
  return a;
}

Poly decode_poly(u64 code, u64 p, u32 len) {
  Poly f(len, 0);
  for (u32 i = 0; i < len && code; ++i) {
    f[i] = static_cast<u32>(code % p);
    code /= p;
  }
  return f;
}

u32 encode_poly(const Poly& f, u64 p) {
  u64 code = 0;
  for (std::size_t i = f.size(); i-- > 0;) code = code * p + f[i];
  return static_cast<u32>(code);
}

// Irreducibility over F_p of a monic f of degree s: x^{p^s} = x mod f and
// gcd(f, x^{p^k} - x) = 1 for every k <= s/2. (The gcd condition rules out
// irreducible factors of degree k; the power condition forces all factor
// degrees to divide s.)
bool is_irreducible(const Poly& f, u64 p, u32 s) {
  if (s == 1) return true;
  Poly x{0, 1};
  Poly xp = x;  // x^{p^k} mod f, starting at k = 0
  for (u32 k = 1; k <= s; ++k) {
    xp = poly_powmod(std::move(xp), p, f, p);
    if (k <= s / 2) {
      Poly d = xp;
      d.resize(std::max<std::size_t>(d.size(), 2), 0);
      d[1] = static_cast<u32>((d[1] + p - 1) % p);  // x^{p^k} - x
      const Poly g = poly_gcd(f, std::move(d), p);
      if (poly_degree(g) != 0 || poly_is_zero(g)) return false;
    }
  }
  // xp now holds x^{p^s} mod f; equality with x finishes the test.
  Poly x_red(xp.size(), 0);
  if (x_red.size() > 1) x_red[1] = 1;
  return xp == x_red;
}

}  // namespace

FiniteField::FiniteField(u64 p, u32 s, u64 table_limit) : p_(p), s_(s) {
  if (!is_prime(p)) throw std::domain_error("FiniteField: p must be prime");
  if (s < 1) throw std::invalid_argument("FiniteField: degree must be >= 1");
  q_ = 1;
  for (u32 i = 0; i < s; ++i) {
    if (q_ > (u64{1} << 31) / p)
      throw std::invalid_argument("FiniteField: p^s too large for u32 codes");
    q_ *= p;
  }

  // Modulus: the monic irreducible of degree s whose code (with the leading
  // coefficient included) is minimal; equivalently minimal lower part.
  for (u64 c = 0;; ++c) {
    if (c >= q_) throw std::logic_error("FiniteField: no irreducible polynomial found");
    Poly f = decode_poly(c, p_, s + 1);
    f[s] = 1;
    if (is_irreducible(f, p_, s)) {
      modulus_ = f;
      break;
    }
  }

  // Generator: smallest code whose multiplicative order is exactly q - 1,
  // certified via the prime factorization of q - 1.
  if (q_ == 2) {
    generator_ = 1;
  } else {
    const Factorization fact = factorize(q_ - 1);
    for (u64 c = 1; c < q_; ++c) {
      bool ok = true;
      for (auto [f, e] : fact.pairs) {
        (void)e;
        if (poly_pow(static_cast<Elem>(c), (q_ - 1) / f) == 1) {
          ok = false;
          break;
        }
      }
      if (ok) {
        generator_ = static_cast<Elem>(c);
        break;
      }
    }
    if (generator_ == 0) throw std::logic_error("FiniteField: no generator found");
  }

  if (q_ <= table_limit) {
    exp_.resize(2 * (q_ - 1));
    log_.assign(q_, 0);
    u32 acc = 1;
    for (u64 k = 0; k < q_ - 1; ++k) {
      exp_[k] = acc;
      exp_[k + (q_ - 1)] = acc;
      log_[acc] = static_cast<u32>(k);
      acc = poly_mul(acc, generator_);
    }
    if (acc != 1) throw std::logic_error("FiniteField: generator order check failed");
    if (p_ != 2 && s_ > 1 && q_ <= 1024) {
      add_.resize(q_ * q_);
      for (u64 x = 0; x < q_; ++x)
        for (u64 y = 0; y <= x; ++y) {
          Poly fx = decode_poly(x, p_, s_), fy = decode_poly(y, p_, s_);
          for (u32 i = 0; i < s_; ++i) fx[i] = static_cast<u32>((fx[i] + fy[i]) % p_);
          add_[x * q_ + y] = add_[y * q_ + x] = encode_poly(fx, p_);
        }
    }
  }
}

FiniteField::Elem FiniteField::add(Elem x, Elem y) const {
  if (s_ == 1) return static_cast<Elem>((x + y) % p_);
  if (p_ == 2) return x ^ y;
  if (!add_.empty()) return add_[static_cast<u64>(x) * q_ + y];
  Poly fx = decode_poly(x, p_, s_), fy = decode_poly(y, p_, s_);
  for (u32 i = 0; i < s_; ++i) fx[i] = static_cast<u32>((fx[i] + fy[i]) % p_);
  return encode_poly(fx, p_);
}

FiniteField::Elem FiniteField::neg(Elem x) const {
  if (s_ == 1) return x == 0 ? 0 : static_cast<Elem>(p_ - x);
  if (p_ == 2) return x;
  Poly f = decode_poly(x, p_, s_);
  for (u32& c : f) c = c == 0 ? 0 : static_cast<u32>(p_ - c);
  return encode_poly(f, p_);
}

FiniteField::Elem FiniteField::mul(Elem x, Elem y) const {
  if (x == 0 || y == 0) return 0;
  if (!log_.empty()) return exp_[log_[x] + log_[y]];
  return poly_mul(x, y);
}

FiniteField::Elem FiniteField::inv_unit(Elem x) const {
  if (x == 0) throw std::domain_error("FiniteField: zero is not a unit");
  if (!log_.empty()) return exp_[(q_ - 1 - log_[x]) % (q_ - 1)];
  return poly_pow(x, q_ - 2);
}

FiniteField::Elem FiniteField::poly_mul(Elem x, Elem y) const {
  const Poly prod = poly_mulmod(decode_poly(x, p_, s_), decode_poly(y, p_, s_),
                                modulus_, p_);
  return encode_poly(prod, p_);
}

FiniteField::Elem FiniteField::poly_pow(Elem x, u64 e) const {
  const Poly r = poly_powmod(decode_poly(x, p_, s_), e, modulus_, p_);
  return encode_poly(r, p_);
}

FiniteField::Elem FiniteField::pow(Elem x, i64 e) const {
  if (x == 0) {
    if (e < 0) throw std::domain_error("FiniteField: negative power of zero");
    return e == 0 ? 1 : 0;
  }
  // Orders divide q - 1, so reduce the exponent there.
  const u64 order = q_ - 1;
  u64 er = static_cast<u64>(((e % static_cast<i64>(order)) + static_cast<i64>(order))) %
           order;
  if (!log_.empty()) return exp_[mulmod(log_[x], er, order)];
  return poly_pow(x, er);
}

FiniteField::Elem FiniteField::frobenius(Elem x, u64 t) const {
  if (x == 0) return 0;
  // x^{p^t}: since x^{q-1} = 1 and p^s = 1 mod q-1, only t mod s matters.
  const u64 e = powmod(p_, t % s_, q_ - 1);
  if (!log_.empty()) return exp_[mulmod(log_[x], e == 0 ? q_ - 1 : e, q_ - 1)];
  u64 direct = 1;
  for (u64 i = 0; i < t % s_; ++i) direct *= p_;
  return poly_pow(x, direct);
}

bool FiniteField::in_subfield(Elem x, u32 t) const {
  if (t == 0 || s_ % t != 0)
    throw std::domain_error("in_subfield: subfield degree must divide s");
  return frobenius(x, t) == x;
}

std::vector<FiniteField::Elem> FiniteField::subfield_elements(u32 t) const {
  if (t == 0 || s_ % t != 0)
    throw std::domain_error("subfield_elements: subfield degree must divide s");
  u64 sub_q = 1;
  for (u32 i = 0; i < t; ++i) sub_q *= p_;
  // The subfield's multiplicative group is the unique cyclic subgroup of
  // order sub_q - 1, generated by generator^{(q-1)/(sub_q-1)}.
  std::vector<Elem> elems{0};
  const Elem g = pow(generator_, static_cast<i64>((q_ - 1) / (sub_q - 1)));
  Elem acc = 1;
  for (u64 k = 0; k < sub_q - 1; ++k) {
    elems.push_back(acc);
    acc = mul(acc, g);
  }
  if (acc != 1 || elems.size() != sub_q)
    throw std::logic_error("subfield_elements: internal consistency failure");
  std::sort(elems.begin(), elems.end());
  return elems;
}

FiniteField::Elem FiniteField::primitive_root_of_unity(u64 m) const {
  if (m == 0 || (q_ - 1) % m != 0)
    throw std::domain_error("primitive_root_of_unity: m must divide q - 1");
  return pow(generator_, static_cast<i64>((q_ - 1) / m));
}

u64 FiniteField::element_order(Elem x) const {
  if (x == 0) throw std::domain_error("element_order: zero has no order");
  u64 e = q_ - 1;
  if (e == 1) return 1;
  for (auto [f, mult] : factorize(e).pairs) {
    (void)mult;
    while (e % f == 0 && pow(x, static_cast<i64>(e / f)) == 1) e /= f;
  }
  return e;
}

std::vector<u32> FiniteField::coeffs(Elem x) const { return decode_poly(x, p_, s_); }

std::string FiniteField::str(Elem x) const {
  const auto c = coeffs(x);
  std::ostringstream os;
  os << "[";
  for (u32 i = 0; i < s_; ++i) os << (i ? "," : "") << c[i];
  os << "]";
  return os.str();
}

namespace {
void require_same_field(const FieldElement& x, const FieldElement& y) {
  if (!x.field->same(*y.field))
    throw std::invalid_argument("FieldElement: operands from different fields");
}
}  // namespace

FieldElement operator+(const FieldElement& x, const FieldElement& y) {
  require_same_field(x, y);
  return {*x.field, x.field->add(x.code, y.code)};
}
FieldElement operator-(const FieldElement& x, const FieldElement& y) {
  require_same_field(x, y);
  return {*x.field, x.field->sub(x.code, y.code)};
}
FieldElement operator*(const FieldElement& x, const FieldElement& y) {
  require_same_field(x, y);
  return {*x.field, x.field->mul(x.code, y.code)};
}
FieldElement operator/(const FieldElement& x, const FieldElement& y) {
  require_same_field(x, y);
  return {*x.field, x.field->mul(x.code, x.field->inv_unit(y.code))};
}
bool operator==(const FieldElement& x, const FieldElement& y) {
  return x.field->same(*y.field) && x.code == y.code;
}

FiniteField make_field(u64 p, u32 s, u64 table_limit) {
  return FiniteField(p, s, table_limit);
}

u32 required_extension_degree(u64 p, u32 t, u64 m) {
  if (m == 0) throw std::invalid_argument("required_extension_degree: m must be >= 1");
  if (m % p == 0)
    throw std::domain_error("required_extension_degree: p must not divide m");
  if (t < 1) throw std::invalid_argument("required_extension_degree: t must be >= 1");
  return static_cast<u32>(std::lcm<u64>(t, multiplicative_order(p, m)));
}

SubfieldEmbedding::SubfieldEmbedding(const FiniteField& sub, const FiniteField& ambient)
    : sub_(&sub), ambient_(&ambient) {
  if (sub.p() != ambient.p() || ambient.s() % sub.s() != 0)
    throw std::domain_error("SubfieldEmbedding: not a subfield configuration");
  // Roots of the sub-modulus in the ambient field lie in the Frobenius-fixed
  // copy of F_{p^t}; scan it for the minimal-code root.
  root_ = 0;
  bool found = false;
  const auto& g = sub.modulus();
  for (u32 cand : ambient.subfield_elements(sub.s())) {
    u32 acc = 0;  // evaluate g at cand by Horner's rule
    for (std::size_t i = g.size(); i-- > 0;)
      acc = ambient.add(ambient.mul(acc, cand), ambient.from_int(g[i]));
    if (acc == 0) {
      root_ = cand;
      found = true;
      break;  // subfield_elements is ascending, so the first root is minimal
    }
  }
  if (!found) throw std::logic_error("SubfieldEmbedding: modulus has no root in ambient");
}

u32 SubfieldEmbedding::operator()(u32 sub_code) const {
  const auto c = sub_->coeffs(sub_code);
  u32 acc = 0;
  for (std::size_t i = c.size(); i-- > 0;)
    acc = ambient_->add(ambient_->mul(acc, root_), ambient_->from_int(c[i]));
  return acc;
}

}  // namespace rcm
