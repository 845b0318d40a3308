#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "dotbinom/numbers.hpp"

namespace dotbinom::gf {

/// An element of GF(p^e). The code is the base-p packing sum(c_i * p^i) of
/// the fully reduced representative c_0 + c_1 t + ... + c_{e-1} t^{e-1}, so
/// equal elements have equal codes and code order is the canonical element
/// order.
class FieldElement {
 public:
  constexpr FieldElement() = default;
  constexpr explicit FieldElement(std::uint32_t code) : code_(code) {}

  constexpr std::uint32_t code() const { return code_; }
  constexpr bool is_zero() const { return code_ == 0; }

  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;

 private:
  std::uint32_t code_ = 0;
};

enum class SquareClass : std::int8_t { Zero = 0, Square = 1, NonSquare = -1 };

/// Largest supported field order. Arithmetic is table driven.
inline constexpr std::uint32_t kMaxOrder = 1024;
inline constexpr unsigned kMaxDegree = 4;

/// GF(q), q = p^e odd. Immutable once built; share through make_field.
class Field {
 public:
  std::uint32_t p() const { return p_; }
  unsigned e() const { return e_; }
  std::uint32_t q() const { return q_; }
  BigInt order() const { return BigInt(q_); }
  int q_mod4() const { return static_cast<int>(q_ % 4); }

  /// Monic irreducible modulus, coefficients lowest degree first (size e+1).
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  /// Smallest non-square in canonical element order.
  FieldElement lambda() const { return lambda_; }

  FieldElement zero() const { return FieldElement{0}; }
  FieldElement one() const { return FieldElement{1}; }

  /// The image of an integer under Z -> GF(p) -> GF(q).
  FieldElement from_int(long long v) const;
  FieldElement from_coeffs(std::span<const std::uint32_t> coeffs) const;
  FieldElement from_code(std::uint32_t code) const;
  std::vector<std::uint32_t> coeffs(FieldElement a) const;

  FieldElement add(FieldElement a, FieldElement b) const {
    return FieldElement{add_[a.code() * q_ + b.code()]};
  }
  FieldElement sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }
  FieldElement mul(FieldElement a, FieldElement b) const {
    return FieldElement{mul_[a.code() * q_ + b.code()]};
  }
  FieldElement neg(FieldElement a) const { return FieldElement{neg_[a.code()]}; }
  /// Throws DivisionByZero for a = 0.
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }
  FieldElement pow(FieldElement a, std::uint64_t exponent) const;

  SquareClass square_class(FieldElement a) const {
    return static_cast<SquareClass>(square_class_[a.code()]);
  }

  /// All elements in canonical order.
  std::vector<FieldElement> elements() const;

  /// "3" in prime fields, "2*t^2 + t + 1"-style polynomials otherwise.
  std::string to_string(FieldElement a) const;

  // Raw tables for hot loops in the enumeration oracle. Index as a*q + b.
  const std::uint16_t* add_table() const { return add_.data(); }
  const std::uint16_t* mul_table() const { return mul_.data(); }
  const std::uint16_t* neg_table() const { return neg_.data(); }
  const std::uint16_t* inv_table() const { return inv_.data(); }
  const std::int8_t* square_class_table() const { return square_class_.data(); }

 private:
  friend std::shared_ptr<const Field> make_field(std::uint32_t, unsigned);
  Field() = default;

  std::uint32_t p_ = 0;
  unsigned e_ = 0;
  std::uint32_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  FieldElement lambda_;
  std::vector<std::uint16_t> add_;
  std::vector<std::uint16_t> mul_;
  std::vector<std::uint16_t> neg_;
  std::vector<std::uint16_t> inv_;
  std::vector<std::int8_t> square_class_;
};

using FieldPtr = std::shared_ptr<const Field>;

/// Build GF(p^e) with the lexicographically smallest monic irreducible
/// modulus. Throws NotPrime, EvenCharacteristic, DegreeOutOfRange or
/// OrderOutOfRange.
FieldPtr make_field(std::uint32_t p, unsigned e);

/// Convenience: factor q and build the field.
FieldPtr make_field_of_order(std::uint64_t q);

/// Exhaustive irreducibility test of a monic polynomial over GF(p)
/// (coefficients lowest degree first) by trial division with every monic
/// polynomial of degree <= deg/2.
bool is_irreducible(std::span<const std::uint32_t> monic, std::uint32_t p);

}  // namespace dotbinom::gf
