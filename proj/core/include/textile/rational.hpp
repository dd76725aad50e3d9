#ifndef TEXTILE_RATIONAL_HPP
#define TEXTILE_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>

#include "textile/errors.hpp"

namespace textile {

/// Exact rational number. Always kept in canonical form: positive
/// denominator, gcd(|num|, den) = 1, and zero is 0/1.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(long n) : v_(n) {}  // NOLINT(google-explicit-constructor): integers embed
  Rat(long num, long den);
  explicit Rat(const mpz_class& n) : v_(n) {}
  Rat(const mpz_class& num, const mpz_class& den);

  /// Parses "a", "-a" or "a/b" with arbitrary-precision parts.
  static Rat from_string(const std::string& text);

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  Rat inv() const;
  Rat abs() const { return Rat(mpq_class(::abs(v_))); }
  Rat pow(unsigned long e) const;

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    int c = cmp(a.v_, b.v_);
    return c <=> 0;
  }

  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const Rat& r);

 private:
  explicit Rat(const mpq_class& q) : v_(q) {}

  mpq_class v_;  // canonical (mpq_canonicalize'd) at all times
};

/// Exact integer square root test: returns true and sets root when n is a
/// perfect square (n >= 0).
bool perfect_square(const mpz_class& n, mpz_class& root);

/// Rational square root: r = s^2 exactly, when it exists.
bool rat_sqrt(const Rat& r, Rat& root);

}  // namespace textile

#endif
