#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <variant>

#include "dgpic/error.hpp"

namespace dgpic {

namespace detail {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = mulmod(result, base, p);
    base = mulmod(base, base, p);
    exp >>= 1U;
  }
  return result;
}

struct Residue {
  std::uint64_t value = 0;
  std::uint64_t modulus = 0;
  bool operator==(const Residue&) const = default;
};

}  // namespace detail

class Field;

/// An exact element of Q or of a prime field F_p. The two kinds never mix;
/// combining scalars from different fields throws FieldMismatch.
class Scalar {
 public:
  Scalar() : value_(mpq_class(0)) {}

  static Scalar rational(mpq_class q) {
    q.canonicalize();
    Scalar s;
    s.value_ = std::move(q);
    return s;
  }

  static Scalar residue(std::int64_t v, std::uint64_t p) {
    std::int64_t m = static_cast<std::int64_t>(p);
    std::int64_t r = v % m;
    if (r < 0) r += m;
    Scalar s;
    s.value_ = detail::Residue{static_cast<std::uint64_t>(r), p};
    return s;
  }

  bool is_rational() const { return std::holds_alternative<mpq_class>(value_); }
  std::uint64_t modulus() const {
    return is_rational() ? 0 : std::get<detail::Residue>(value_).modulus;
  }

  const mpq_class& as_rational() const { return std::get<mpq_class>(value_); }
  std::uint64_t as_residue() const { return std::get<detail::Residue>(value_).value; }

  bool is_zero() const {
    if (is_rational()) return sgn(as_rational()) == 0;
    return as_residue() == 0;
  }

  bool is_one() const {
    if (is_rational()) return as_rational() == 1;
    return as_residue() == 1 % modulus();
  }

  Scalar operator-() const {
    if (is_rational()) return rational(-as_rational());
    const auto& r = std::get<detail::Residue>(value_);
    return from_residue(r.value == 0 ? 0 : r.modulus - r.value, r.modulus);
  }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    check_same(a, b);
    if (a.is_rational()) return rational(a.as_rational() + b.as_rational());
    std::uint64_t p = a.modulus();
    return from_residue((a.as_residue() + b.as_residue()) % p, p);
  }

  friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    check_same(a, b);
    if (a.is_rational()) return rational(a.as_rational() * b.as_rational());
    std::uint64_t p = a.modulus();
    return from_residue(detail::mulmod(a.as_residue(), b.as_residue(), p), p);
  }

  Scalar inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero scalar");
    if (is_rational()) return rational(1 / as_rational());
    std::uint64_t p = modulus();
    return from_residue(detail::powmod(as_residue(), p - 2, p), p);
  }

  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  Scalar pow(unsigned exp) const {
    Scalar result = one_like();
    Scalar base = *this;
    while (exp > 0) {
      if (exp & 1U) result *= base;
      base *= base;
      exp >>= 1U;
    }
    return result;
  }

  Scalar one_like() const {
    if (is_rational()) return rational(1);
    return from_residue(1 % modulus(), modulus());
  }

  Scalar zero_like() const {
    if (is_rational()) return rational(0);
    return from_residue(0, modulus());
  }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (a.is_rational() != b.is_rational()) return false;
    if (a.is_rational()) return a.as_rational() == b.as_rational();
    return std::get<detail::Residue>(a.value_) == std::get<detail::Residue>(b.value_);
  }

  /// "p/q" (or "p") over Q, the canonical residue in [0, p) over F_p.
  std::string to_string() const {
    if (is_rational()) return as_rational().get_str();
    return std::to_string(as_residue());
  }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

 private:
  static Scalar from_residue(std::uint64_t v, std::uint64_t p) {
    Scalar s;
    s.value_ = detail::Residue{v, p};
    return s;
  }

  static void check_same(const Scalar& a, const Scalar& b) {
    if (a.modulus() != b.modulus()) {
      throw Error(ErrorCode::FieldMismatch, "scalars from different fields combined");
    }
  }

  std::variant<mpq_class, detail::Residue> value_;
};

/// The coefficient field: Q (characteristic 0) or F_p.
class Field {
 public:
  Field() = default;

  static Field rationals() { return Field(); }

  static Field prime(std::uint64_t p) {
    if (!detail::is_prime(p) || p >= (std::uint64_t{1} << 62)) {
      throw Error(ErrorCode::BadField, std::to_string(p) + " is not a supported prime");
    }
    Field f;
    f.p_ = p;
    return f;
  }

  bool is_rational() const { return p_ == 0; }
  std::uint64_t characteristic() const { return p_; }

  std::string name() const { return is_rational() ? "Q" : "F" + std::to_string(p_); }

  Scalar zero() const { return from_int(0); }
  Scalar one() const { return from_int(1); }

  Scalar from_int(std::int64_t v) const {
    if (is_rational()) return Scalar::rational(mpq_class(static_cast<long>(v)));
    return Scalar::residue(v, p_);
  }

  /// Maps an exact rational into this field; BadPrime when the denominator
  /// vanishes mod p.
  Scalar from_rational(const mpq_class& q) const {
    if (is_rational()) return Scalar::rational(q);
    mpz_class num = q.get_num() % mpz_class(static_cast<unsigned long>(p_));
    mpz_class den = q.get_den() % mpz_class(static_cast<unsigned long>(p_));
    if (den == 0) {
      throw Error(ErrorCode::BadPrime,
                  "denominator of " + q.get_str() + " vanishes mod " + std::to_string(p_));
    }
    if (num < 0) num += static_cast<unsigned long>(p_);
    Scalar n = Scalar::residue(static_cast<std::int64_t>(num.get_ui()), p_);
    Scalar d = Scalar::residue(static_cast<std::int64_t>(den.get_ui()), p_);
    return n / d;
  }

  /// Parses "a", "-a" or "a/b" with integer a, b.
  Scalar parse(const std::string& text) const {
    mpq_class q;
    if (text.empty() || q.set_str(text, 10) != 0 || q.get_den() == 0) {
      throw Error(ErrorCode::ParseError, "bad scalar literal '" + text + "'");
    }
    q.canonicalize();
    return from_rational(q);
  }

  bool contains(const Scalar& s) const { return s.modulus() == p_; }

  bool operator==(const Field&) const = default;

 private:
  std::uint64_t p_ = 0;
};

}  // namespace dgpic
