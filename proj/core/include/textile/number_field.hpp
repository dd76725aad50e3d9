#ifndef TEXTILE_NUMBER_FIELD_HPP
#define TEXTILE_NUMBER_FIELD_HPP

#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "textile/rational.hpp"

namespace textile {

/// Dense univariate polynomial over Q, coefficient of t^i at index i.
/// Normalized form has no trailing zero coefficients; zero is {}.
using QPoly = std::vector<Rat>;

QPoly qpoly_normalize(QPoly p);
int qpoly_degree(const QPoly& p);  // -1 for zero
QPoly qpoly_add(const QPoly& a, const QPoly& b);
QPoly qpoly_sub(const QPoly& a, const QPoly& b);
QPoly qpoly_mul(const QPoly& a, const QPoly& b);
/// Euclidean division, b != 0.
void qpoly_divrem(const QPoly& a, const QPoly& b, QPoly& quot, QPoly& rem);
/// Monic gcd; gcd(0, 0) = 0.
QPoly qpoly_gcd(QPoly a, QPoly b);
/// Extended Euclid: g = gcd(a, b) monic, g = s*a + t*b.
QPoly qpoly_egcd(const QPoly& a, const QPoly& b, QPoly& s, QPoly& t);
QPoly qpoly_derivative(const QPoly& p);
Rat qpoly_eval(const QPoly& p, const Rat& x);
std::string qpoly_to_string(const QPoly& p, const std::string& var = "t");

struct RationalRoots {
  std::vector<Rat> roots;  // distinct, ascending
  bool complete = true;    // false when divisor enumeration was cut off
};

/// All rational roots of p (p != 0) by the rational root test on the
/// denominator-cleared integer polynomial.
RationalRoots qpoly_rational_roots(const QPoly& p);

struct ModulusDiagnostics {
  bool squarefree = false;
  std::vector<Rat> rational_roots;
  bool roots_complete = true;
};

/// Diagnostics for a candidate defining polynomial: squarefreeness
/// (gcd(m, m') constant) and rational roots. Deliberately does NOT decide
/// irreducibility; a reducible squarefree modulus is only caught lazily by
/// NonInvertible errors during arithmetic.
ModulusDiagnostics check_modulus(const QPoly& m);

class NumberField;
using NumberFieldPtr = std::shared_ptr<const NumberField>;

/// A simple extension Q(t)/(m(t)) given by a monic defining polynomial of
/// degree >= 1. Irreducibility is asserted by the user, not verified.
class NumberField {
 public:
  explicit NumberField(QPoly monic_modulus);

  static NumberFieldPtr make(QPoly monic_modulus) {
    return std::make_shared<NumberField>(std::move(monic_modulus));
  }

  int degree() const { return static_cast<int>(modulus_.size()) - 1; }
  const QPoly& modulus() const { return modulus_; }
  ModulusDiagnostics diagnostics() const { return check_modulus(modulus_); }
  std::string to_string() const { return qpoly_to_string(modulus_); }

  friend bool operator==(const NumberField& a, const NumberField& b) {
    return a.modulus_ == b.modulus_;
  }

 private:
  QPoly modulus_;
};

/// Element of Q(t)/(m(t)), stored as the coefficient vector of its unique
/// degree < deg(m) representative.
class NFElem {
 public:
  NFElem(NumberFieldPtr field, QPoly value);

  static NFElem from_rat(NumberFieldPtr field, const Rat& r);
  static NFElem generator(NumberFieldPtr field);  // the class of t

  const NumberFieldPtr& field() const { return field_; }
  /// Coefficients, fixed length deg(m).
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;  // all coefficients above t^0 vanish
  Rat rat_value() const;     // requires is_rational()

  NFElem operator-() const;
  friend NFElem operator+(const NFElem& a, const NFElem& b);
  friend NFElem operator-(const NFElem& a, const NFElem& b);
  friend NFElem operator*(const NFElem& a, const NFElem& b);
  friend NFElem operator/(const NFElem& a, const NFElem& b) { return a * b.inv(); }

  /// Ring inverse via extended Euclid. Throws NonInvertible when
  /// gcd(value, m) is non-constant (which also flags reducible moduli).
  NFElem inv() const;

  friend bool operator==(const NFElem& a, const NFElem& b);

  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const NFElem& e);

 private:
  NumberFieldPtr field_;
  std::vector<Rat> coeffs_;
};

/// Shared-field check used by every binary operation.
const NumberFieldPtr& common_field(const NFElem& a, const NFElem& b);

/// Square root of d in its field, when one can be written down: exact
/// rational square roots at any extension degree, and the full closed-form
/// case analysis for quadratic moduli. Returns false when no expressible
/// root was found (this does not certify that none exists for deg(m) > 2).
bool nf_sqrt(const NFElem& d, NFElem& root);

}  // namespace textile

#endif
