#include "textile/rational.hpp"

#include <ostream>

namespace textile {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::NonInvertible: return "NonInvertible";
    case Errc::ModulusMismatch: return "ModulusMismatch";
    case Errc::RingMismatch: return "RingMismatch";
    case Errc::OrderMismatch: return "OrderMismatch";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::BadBounds: return "BadBounds";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::InsufficientCap: return "InsufficientCap";
    case Errc::AlphaListTooShort: return "AlphaListTooShort";
    case Errc::DuplicateAlphas: return "DuplicateAlphas";
    case Errc::ComponentMismatch: return "ComponentMismatch";
    case Errc::NotZeroDimensionalHandled: return "NotZeroDimensionalHandled";
    case Errc::ParseError: return "ParseError";
    case Errc::ValidationError: return "ValidationError";
    case Errc::Internal: return "Internal";
  }
  return "Error";
}

Rat::Rat(long num, long den) {
  if (den == 0) throw Error(Errc::DivisionByZero, "rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat::Rat(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw Error(Errc::DivisionByZero, "rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat Rat::from_string(const std::string& text) {
  mpq_class q;
  if (q.set_str(text, 10) != 0)
    throw Error(Errc::ParseError, "bad rational literal '" + text + "'");
  if (q.get_den() == 0) throw Error(Errc::DivisionByZero, "rational with zero denominator");
  q.canonicalize();
  return Rat(q);
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw Error(Errc::DivisionByZero, "rational division by zero");
  v_ /= o.v_;
  return *this;
}

Rat Rat::inv() const {
  if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
  return Rat(mpq_class(1) / v_);
}

Rat Rat::pow(unsigned long e) const {
  Rat acc(1L);
  Rat base = *this;
  while (e > 0) {
    if (e & 1UL) acc *= base;
    base *= base;
    e >>= 1UL;
  }
  return acc;
}

std::string Rat::to_string() const { return v_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.v_; }

bool perfect_square(const mpz_class& n, mpz_class& root) {
  if (n < 0) return false;
  root = sqrt(n);
  return root * root == n;
}

bool rat_sqrt(const Rat& r, Rat& root) {
  if (r.sign() < 0) return false;
  mpz_class sn, sd;
  if (!perfect_square(r.num(), sn) || !perfect_square(r.den(), sd)) return false;
  root = Rat(sn, sd);
  return true;
}

}  // namespace textile
