#include "permahank/field.hpp"

#include <numeric>

namespace permahank {

namespace {

std::uint32_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint32_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = result * base % p;
    base = base * base % p;
    exp >>= 1U;
  }
  return static_cast<std::uint32_t>(result);
}

std::uint32_t reduce_mpz(const mpz_class& z, std::uint32_t p) {
  mpz_class r = z % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

}  // namespace

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

void check_characteristic(std::uint32_t characteristic) {
  if (characteristic == 0) return;
  if (characteristic == 2) {
    throw FieldError(
        "characteristic 2 is not supported: permanental ideals are only studied in "
        "characteristic different from 2 (in characteristic 2 they coincide with determinantal ideals)");
  }
  if (!is_prime(characteristic)) {
    throw FieldError("characteristic " + std::to_string(characteristic) + " is not prime");
  }
}

namespace {

constexpr std::int64_t kLimit = std::int64_t{1} << 62;

using u128 = unsigned __int128;
using i128 = __int128;

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    const u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u128 abs128(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

bool fits(i128 num, i128 den) { return num > -kLimit && num < kLimit && den > 0 && den < kLimit; }

mpz_class mpz_from_i128(i128 v) {
  const bool neg = v < 0;
  u128 a = abs128(v);
  mpz_class hi(static_cast<unsigned long>(a >> 64));
  mpz_class lo(static_cast<unsigned long>(a & ~std::uint64_t{0}));
  mpz_class out = (hi << 64) + lo;
  return neg ? mpz_class(-out) : out;
}

}  // namespace

FieldElement FieldElement::from_mpq(mpq_class q) {
  q.canonicalize();
  const mpz_class& num = q.get_num();
  const mpz_class& den = q.get_den();
  if (num.fits_slong_p() && den.fits_slong_p()) {
    const long n = num.get_si();
    const long d = den.get_si();
    if (fits(n, d)) return FieldElement(Small{n, d});
  }
  FieldElement out;
  out.rep_ = std::move(q);
  return out;
}

mpq_class FieldElement::to_mpq() const {
  if (const auto* s = std::get_if<Small>(&rep_)) {
    return mpq_class(mpz_class(static_cast<long>(s->num)), mpz_class(static_cast<long>(s->den)));
  }
  return std::get<mpq_class>(rep_);
}

mpq_class FieldElement::rational() const {
  if (std::holds_alternative<Residue>(rep_)) throw std::bad_variant_access();
  return to_mpq();
}

FieldElement FieldElement::from_integer(long value, std::uint32_t characteristic) {
  if (characteristic == 0) {
    if (fits(value, 1)) return FieldElement(Small{value, 1});
    return from_mpq(mpq_class(value));
  }
  long r = value % static_cast<long>(characteristic);
  if (r < 0) r += characteristic;
  return FieldElement(Residue{static_cast<std::uint32_t>(r), characteristic});
}

FieldElement FieldElement::from_rational(const mpq_class& value, std::uint32_t characteristic) {
  if (characteristic == 0) return from_mpq(value);
  const std::uint32_t den = reduce_mpz(value.get_den(), characteristic);
  if (den == 0) {
    throw FieldError("denominator " + value.get_den().get_str() + " is not invertible modulo " +
                     std::to_string(characteristic));
  }
  const std::uint32_t num = reduce_mpz(value.get_num(), characteristic);
  const std::uint64_t inv = mod_pow(den, characteristic - 2, characteristic);
  return FieldElement(
      Residue{static_cast<std::uint32_t>(num * inv % characteristic), characteristic});
}

bool FieldElement::is_zero() const noexcept {
  if (const auto* s = std::get_if<Small>(&rep_)) return s->num == 0;
  if (const auto* q = std::get_if<mpq_class>(&rep_)) return sgn(*q) == 0;
  return std::get<Residue>(rep_).value == 0;
}

bool FieldElement::is_one() const noexcept {
  if (const auto* s = std::get_if<Small>(&rep_)) return s->num == 1 && s->den == 1;
  if (const auto* q = std::get_if<mpq_class>(&rep_)) return *q == 1;
  return std::get<Residue>(rep_).value == 1;
}

mpq_class FieldElement::representative() const {
  if (is_rational()) return to_mpq();
  const Residue r = std::get<Residue>(rep_);
  long v = r.value;
  if (r.value > r.modulus / 2) v -= static_cast<long>(r.modulus);
  return mpq_class(v);
}

void FieldElement::check_same_field(const FieldElement& other) const {
  if (characteristic() != other.characteristic()) {
    throw FieldError("field mismatch: characteristic " + std::to_string(characteristic()) +
                     " vs " + std::to_string(other.characteristic()));
  }
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw FieldError("division by zero");
  if (const auto* s = std::get_if<Small>(&rep_)) {
    return s->num < 0 ? FieldElement(Small{-s->den, -s->num}) : FieldElement(Small{s->den, s->num});
  }
  if (const auto* q = std::get_if<mpq_class>(&rep_)) {
    mpq_class inv;
    mpq_inv(inv.get_mpq_t(), q->get_mpq_t());
    return from_mpq(std::move(inv));
  }
  const Residue r = std::get<Residue>(rep_);
  return FieldElement(Residue{mod_pow(r.value, r.modulus - 2, r.modulus), r.modulus});
}

FieldElement FieldElement::operator-() const {
  if (const auto* s = std::get_if<Small>(&rep_)) return FieldElement(Small{-s->num, s->den});
  if (const auto* q = std::get_if<mpq_class>(&rep_)) return from_mpq(mpq_class(-*q));
  const Residue r = std::get<Residue>(rep_);
  return FieldElement(Residue{r.value == 0 ? 0 : r.modulus - r.value, r.modulus});
}

void FieldElement::add_rational(const FieldElement& other, bool subtract) {
  const auto* a = std::get_if<Small>(&rep_);
  const auto* b = std::get_if<Small>(&other.rep_);
  if (a && b) {
    const i128 bn = subtract ? -i128{b->num} : i128{b->num};
    i128 num;
    i128 den;
    if (a->den == b->den) {
      num = i128{a->num} + bn;
      den = a->den;
    } else {
      num = i128{a->num} * b->den + bn * a->den;
      den = i128{a->den} * b->den;
    }
    if (num == 0) {
      rep_ = Small{0, 1};
      return;
    }
    const u128 g = gcd128(abs128(num), static_cast<u128>(den));
    num /= static_cast<i128>(g);
    den /= static_cast<i128>(g);
    if (fits(num, den)) {
      rep_ = Small{static_cast<std::int64_t>(num), static_cast<std::int64_t>(den)};
    } else {
      *this = from_mpq(mpq_class(mpz_from_i128(num), mpz_from_i128(den)));
    }
    return;
  }
  mpq_class q = to_mpq();
  if (subtract) {
    q -= other.to_mpq();
  } else {
    q += other.to_mpq();
  }
  *this = from_mpq(std::move(q));
}

void FieldElement::mul_rational(const FieldElement& other) {
  const auto* a = std::get_if<Small>(&rep_);
  const auto* b = std::get_if<Small>(&other.rep_);
  if (a && b) {
    if (a->num == 0 || b->num == 0) {
      rep_ = Small{0, 1};
      return;
    }
    const std::int64_t g1 = std::gcd(a->num, b->den);
    const std::int64_t g2 = std::gcd(b->num, a->den);
    const i128 num = i128{a->num / g1} * (b->num / g2);
    const i128 den = i128{a->den / g2} * (b->den / g1);
    if (fits(num, den)) {
      rep_ = Small{static_cast<std::int64_t>(num), static_cast<std::int64_t>(den)};
    } else {
      *this = from_mpq(mpq_class(mpz_from_i128(num), mpz_from_i128(den)));
    }
    return;
  }
  mpq_class q = to_mpq();
  q *= other.to_mpq();
  *this = from_mpq(std::move(q));
}

FieldElement& FieldElement::operator+=(const FieldElement& other) {
  check_same_field(other);
  if (is_rational()) {
    add_rational(other, false);
  } else {
    Residue& r = std::get<Residue>(rep_);
    const std::uint64_t s = std::uint64_t{r.value} + std::get<Residue>(other.rep_).value;
    r.value = static_cast<std::uint32_t>(s % r.modulus);
  }
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& other) {
  check_same_field(other);
  if (is_rational()) {
    add_rational(other, true);
  } else {
    Residue& r = std::get<Residue>(rep_);
    const std::uint64_t s =
        std::uint64_t{r.value} + r.modulus - std::get<Residue>(other.rep_).value;
    r.value = static_cast<std::uint32_t>(s % r.modulus);
  }
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& other) {
  check_same_field(other);
  if (is_rational()) {
    mul_rational(other);
  } else {
    Residue& r = std::get<Residue>(rep_);
    r.value = static_cast<std::uint32_t>(std::uint64_t{r.value} *
                                         std::get<Residue>(other.rep_).value % r.modulus);
  }
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& other) {
  return *this *= other.inverse();
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  if (a.characteristic() != b.characteristic()) return false;
  if (!a.is_rational()) return a.residue() == b.residue();
  const auto* sa = std::get_if<FieldElement::Small>(&a.rep_);
  const auto* sb = std::get_if<FieldElement::Small>(&b.rep_);
  if (sa && sb) return sa->num == sb->num && sa->den == sb->den;
  // Inline and GMP forms are canonical, so mixed forms never compare equal.
  if (sa || sb) return false;
  return std::get<mpq_class>(a.rep_) == std::get<mpq_class>(b.rep_);
}

std::string FieldElement::to_string() const { return representative().get_str(); }

}  // namespace permahank
