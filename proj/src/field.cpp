#include "hecke/field.hpp"

#include <cctype>
#include <charconv>

namespace hecke {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::MalformedSpec: return "MalformedSpec";
    case Errc::UnsupportedCharacteristic: return "UnsupportedCharacteristic";
    case Errc::NotPrime: return "NotPrime";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::Singular: return "Singular";
    case Errc::DeltaRelationViolated: return "DeltaRelationViolated";
    case Errc::ZeroParameter: return "ZeroParameter";
    case Errc::InvalidParameter: return "InvalidParameter";
    case Errc::DoesNotCommute: return "DoesNotCommute";
    case Errc::WrongRank: return "WrongRank";
    case Errc::UnexpectedDimension: return "UnexpectedDimension";
    case Errc::NotInUpsilon3: return "NotInUpsilon3";
    case Errc::ContextInvalid: return "ContextInvalid";
    case Errc::EquivalenceViolated: return "EquivalenceViolated";
    case Errc::RootRequired: return "RootRequired";
    case Errc::NoRowMatches: return "NoRowMatches";
    case Errc::FieldLacksRoot: return "FieldLacksRoot";
    case Errc::FieldTooLarge: return "FieldTooLarge";
    case Errc::InternalInvariant: return "InternalInvariant";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldDescriptor FieldDescriptor::prime(std::uint32_t p) {
  if (p == 2 || p == 3) {
    throw Error(Errc::UnsupportedCharacteristic, "characteristic " + std::to_string(p) + " is excluded");
  }
  if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  if (p >= (1u << 31)) throw Error(Errc::MalformedSpec, "modulus must be below 2^31");
  FieldDescriptor d;
  d.kind = Kind::PrimeField;
  d.p = p;
  return d;
}

std::string FieldDescriptor::to_string() const {
  if (kind == Kind::Rationals) return "Q";
  return "Fp:" + std::to_string(p);
}

FieldDescriptor parse_field(std::string_view spec) {
  if (spec == "Q") return FieldDescriptor::rationals();
  constexpr std::string_view prefix = "Fp:";
  if (spec.substr(0, prefix.size()) != prefix) {
    throw Error(Errc::MalformedSpec, "field must be \"Q\" or \"Fp:<prime>\", got \"" + std::string(spec) + "\"");
  }
  auto digits = spec.substr(prefix.size());
  std::uint64_t p = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
  if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size() || p >= (1ull << 31)) {
    throw Error(Errc::MalformedSpec, "bad prime in \"" + std::string(spec) + "\"");
  }
  return FieldDescriptor::prime(static_cast<std::uint32_t>(p));
}

// ---------------------------------------------------------------------------

Rational RationalField::from_int(long long n) const {
  mpz_class z;
  mpz_set_si(z.get_mpz_t(), static_cast<long>(n));
  return Rational(z);
}

Rational RationalField::inv(const Rational& a) const {
  if (sgn(a) == 0) throw Error(Errc::DivisionByZero, "inverse of zero");
  return Rational(1) / a;
}

std::optional<Rational> RationalField::sqrt(const Rational& a) const {
  if (sgn(a) < 0) return std::nullopt;
  const mpz_class& num = a.get_num();
  const mpz_class& den = a.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
    return std::nullopt;
  }
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  Rational r(rn, rd);
  r.canonicalize();
  return r;
}

Rational RationalField::parse(std::string_view text) const {
  std::string s(text);
  auto bad = [&] { return Error(Errc::MalformedSpec, "not a rational number: \"" + s + "\""); };
  if (s.empty()) throw bad();
  auto slash = s.find('/');
  auto valid_int = [](std::string_view part) {
    if (part.empty()) return false;
    std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
    }
    return true;
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') throw bad();
  if (num[0] == '+') num.erase(0, 1);
  mpz_class n(num, 10), d(den, 10);
  if (d == 0) throw Error(Errc::DivisionByZero, "zero denominator in \"" + s + "\"");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string RationalField::format(const Rational& a) const { return a.get_str(10); }

// ---------------------------------------------------------------------------

ModInt ModInt::pow(std::uint64_t e) const {
  ModInt base = *this;
  ModInt acc(1, p_);
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

ModInt ModInt::inverse() const {
  if (v_ == 0) throw Error(Errc::DivisionByZero, "inverse of zero residue");
  std::int64_t a = v_, m = p_, x0 = 1, x1 = 0;
  while (m != 0) {
    std::int64_t q = a / m;
    std::int64_t t = a - q * m;
    a = m;
    m = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  std::int64_t r = x0 % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return ModInt(static_cast<std::uint32_t>(r), p_, raw_tag{});
}

PrimeField::PrimeField(std::uint32_t p) : p_(FieldDescriptor::prime(p).p) {}

ModInt PrimeField::from_int(long long n) const {
  long long r = n % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return ModInt(static_cast<std::uint32_t>(r), p_);
}

bool PrimeField::is_square(const ModInt& a) const {
  if (a.is_zero()) return true;
  return a.pow((p_ - 1) / 2) == one();
}

std::optional<ModInt> PrimeField::sqrt(const ModInt& a) const {
  if (a.is_zero()) return zero();
  if (!is_square(a)) return std::nullopt;
  // Tonelli-Shanks: p - 1 = q * 2^s with q odd.
  std::uint32_t q = p_ - 1, s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  ModInt z = from_int(2);
  while (is_square(z)) z += one();
  std::uint32_t m = s;
  ModInt c = z.pow(q);
  ModInt t = a.pow(q);
  ModInt r = a.pow((q + 1) / 2);
  while (!(t == one())) {
    std::uint32_t i = 0;
    ModInt t2 = t;
    while (!(t2 == one())) {
      t2 *= t2;
      ++i;
    }
    ModInt b = c;
    for (std::uint32_t j = 0; j + i + 1 < m; ++j) b *= b;
    m = i;
    c = b * b;
    t *= c;
    r *= b;
  }
  ModInt other = -r;
  return other.value() < r.value() ? other : r;
}

std::optional<ModInt> PrimeField::primitive_cube_root() const {
  if (p_ % 3 != 1) return std::nullopt;
  // Roots of x^2 + x + 1 are (-1 +- sqrt(-3)) / 2.
  auto root = sqrt(from_int(-3));
  if (!root) throw Error(Errc::InternalInvariant, "-3 must be a square when p = 1 mod 3");
  ModInt half = inv(from_int(2));
  ModInt e1 = (from_int(-1) + *root) * half;
  ModInt e2 = (from_int(-1) - *root) * half;
  return e1.value() < e2.value() ? e1 : e2;
}

ModInt PrimeField::parse(std::string_view text) const {
  std::string s(text);
  if (s.empty()) throw Error(Errc::MalformedSpec, "empty residue");
  // Accept "a" or "a/b" with integer a, b; reduce into [0, p).
  auto slash = s.find('/');
  auto to_int = [&](const std::string& part) {
    long long v = 0;
    auto first = part.data();
    if (!part.empty() && part[0] == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, part.data() + part.size(), v);
    if (part.empty() || ec != std::errc{} || ptr != part.data() + part.size()) {
      throw Error(Errc::MalformedSpec, "not a residue: \"" + s + "\"");
    }
    return from_int(v);
  };
  if (slash == std::string::npos) return to_int(s);
  ModInt den = to_int(s.substr(slash + 1));
  if (den.is_zero()) throw Error(Errc::DivisionByZero, "denominator vanishes mod p in \"" + s + "\"");
  return to_int(s.substr(0, slash)) / den;
}

}  // namespace hecke
