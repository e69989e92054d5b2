#pragma once

// Exact scalar fields: the rationals (GMP) and prime fields F_p with p > 3.
//
// Both field types expose the same small interface so that the rest of the
// library can be written once as templates:
//
//   F::Elem                       element type, value semantics, + - * / ==
//   f.zero(), f.one(), f.from_int(n)
//   f.inv(a)                      throws Errc::DivisionByZero on 0
//   f.sqrt(a)                     optional square root (canonical choice)
//   f.primitive_cube_root()       optional
//   f.parse(text), f.format(a)    "a/b" over Q, decimal residue over F_p
//   f.descriptor()

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "hecke/error.hpp"

namespace hecke {

struct FieldDescriptor {
  enum class Kind { Rationals, PrimeField };
  Kind kind = Kind::Rationals;
  std::uint32_t p = 0;  // only meaningful for PrimeField

  static FieldDescriptor rationals() { return {}; }
  static FieldDescriptor prime(std::uint32_t p);

  bool operator==(const FieldDescriptor&) const = default;
  std::string to_string() const;
};

/// Parses "Q" or "Fp:<prime>". Characteristic 2 and 3 are rejected.
FieldDescriptor parse_field(std::string_view spec);

bool is_prime(std::uint64_t n);

// ---------------------------------------------------------------------------
// Rationals

using Rational = mpq_class;

class RationalField {
 public:
  using Elem = Rational;

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_int(long long n) const;
  Elem inv(const Elem& a) const;
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }

  /// Square root with nonnegative numerator, when numerator and denominator
  /// are both perfect squares.
  std::optional<Elem> sqrt(const Elem& a) const;
  std::optional<Elem> primitive_cube_root() const { return std::nullopt; }

  Elem parse(std::string_view text) const;
  std::string format(const Elem& a) const;

  FieldDescriptor descriptor() const { return FieldDescriptor::rationals(); }
  bool operator==(const RationalField&) const = default;
};

// ---------------------------------------------------------------------------
// Prime fields

/// Residue modulo a runtime prime. The modulus travels with the value so the
/// usual operators work; mixing moduli raises Errc::FieldMismatch.
class ModInt {
 public:
  ModInt() = default;
  ModInt(std::uint32_t value, std::uint32_t modulus) : v_(value % modulus), p_(modulus) {}

  std::uint32_t value() const { return v_; }
  std::uint32_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  ModInt& operator+=(ModInt o) {
    check(o);
    v_ += o.v_;
    if (v_ >= p_) v_ -= p_;
    return *this;
  }
  ModInt& operator-=(ModInt o) {
    check(o);
    v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_;
    return *this;
  }
  ModInt& operator*=(ModInt o) {
    check(o);
    v_ = static_cast<std::uint32_t>(static_cast<std::uint64_t>(v_) * o.v_ % p_);
    return *this;
  }
  ModInt& operator/=(ModInt o) { return *this *= o.inverse(); }

  ModInt operator-() const { return ModInt(v_ == 0 ? 0 : p_ - v_, p_, raw_tag{}); }
  ModInt inverse() const;
  ModInt pow(std::uint64_t e) const;

  friend ModInt operator+(ModInt a, ModInt b) { return a += b; }
  friend ModInt operator-(ModInt a, ModInt b) { return a -= b; }
  friend ModInt operator*(ModInt a, ModInt b) { return a *= b; }
  friend ModInt operator/(ModInt a, ModInt b) { return a /= b; }
  friend bool operator==(ModInt a, ModInt b) { return a.v_ == b.v_ && a.p_ == b.p_; }

 private:
  struct raw_tag {};
  ModInt(std::uint32_t v, std::uint32_t p, raw_tag) : v_(v), p_(p) {}
  void check(ModInt o) const {
    if (o.p_ != p_) throw Error(Errc::FieldMismatch, "residues modulo different primes");
  }

  std::uint32_t v_ = 0;
  std::uint32_t p_ = 1;
};

class PrimeField {
 public:
  using Elem = ModInt;

  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const { return p_; }

  Elem zero() const { return Elem(0, p_); }
  Elem one() const { return Elem(1, p_); }
  Elem from_int(long long n) const;
  Elem inv(const Elem& a) const { return a.inverse(); }
  bool is_zero(const Elem& a) const { return a.is_zero(); }

  /// Square root with the smallest canonical residue (Tonelli-Shanks, then
  /// the smaller of r and p - r).
  std::optional<Elem> sqrt(const Elem& a) const;
  /// Smallest residue e with e^3 = 1, e != 1; present iff p = 1 mod 3.
  std::optional<Elem> primitive_cube_root() const;
  bool is_square(const Elem& a) const;

  Elem parse(std::string_view text) const;
  std::string format(const Elem& a) const { return std::to_string(a.value()); }

  FieldDescriptor descriptor() const { return FieldDescriptor::prime(p_); }
  bool operator==(const PrimeField&) const = default;

 private:
  std::uint32_t p_;
};

/// Calls fn(RationalField{}) or fn(PrimeField{p}) according to the descriptor.
template <class Fn>
decltype(auto) with_field(const FieldDescriptor& d, Fn&& fn) {
  if (d.kind == FieldDescriptor::Kind::Rationals) return fn(RationalField{});
  return fn(PrimeField{d.p});
}

}  // namespace hecke
