#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace permahank {

/// Thrown for arithmetic or construction errors in the coefficient field.
class FieldError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Returns true if p is prime. Deterministic for every 32-bit value.
bool is_prime(std::uint32_t p);

/// Rejects characteristic 2 and non-prime positive characteristics.
/// Characteristic 0 selects the rationals.
void check_characteristic(std::uint32_t characteristic);

/// An exact coefficient: a rational number in lowest terms, or a residue
/// modulo an odd prime. Two elements can only be combined when they live in
/// the same field. Rationals whose numerator and denominator fit in 62 bits
/// are kept inline; larger ones fall back to GMP.
class FieldElement {
 public:
  struct Residue {
    std::uint32_t value = 0;
    std::uint32_t modulus = 0;
    bool operator==(const Residue&) const = default;
  };

  /// Zero of the rationals.
  FieldElement() noexcept : rep_(Small{0, 1}) {}

  static FieldElement from_integer(long value, std::uint32_t characteristic);
  /// Maps a rational into the field. Over F_p the denominator must be a unit.
  static FieldElement from_rational(const mpq_class& value, std::uint32_t characteristic);

  std::uint32_t characteristic() const noexcept {
    return is_rational() ? 0U : std::get<Residue>(rep_).modulus;
  }
  bool is_rational() const noexcept { return !std::holds_alternative<Residue>(rep_); }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  /// The rational value; throws std::bad_variant_access for residues.
  mpq_class rational() const;
  Residue residue() const { return std::get<Residue>(rep_); }

  /// Signed value used for display: the rational itself, or the residue's
  /// representative in (-p/2, p/2].
  mpq_class representative() const;

  FieldElement inverse() const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& other);
  FieldElement& operator-=(const FieldElement& other);
  FieldElement& operator*=(const FieldElement& other);
  FieldElement& operator/=(const FieldElement& other);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

  friend bool operator==(const FieldElement& a, const FieldElement& b);

  std::string to_string() const;

 private:
  struct Small {
    std::int64_t num;
    std::int64_t den;  // > 0, coprime to num
  };

  explicit FieldElement(Small s) noexcept : rep_(s) {}
  explicit FieldElement(Residue r) noexcept : rep_(r) {}
  /// Canonicalizes q and stores it inline when it fits.
  static FieldElement from_mpq(mpq_class q);

  void check_same_field(const FieldElement& other) const;
  mpq_class to_mpq() const;
  void add_rational(const FieldElement& other, bool subtract);
  void mul_rational(const FieldElement& other);

  std::variant<Small, mpq_class, Residue> rep_;
};

}  // namespace permahank
