#ifndef TEXTILE_FIELD_HPP
#define TEXTILE_FIELD_HPP

#include <iosfwd>
#include <string>
#include <variant>

#include "textile/number_field.hpp"
#include "textile/rational.hpp"

namespace textile {

/// Exact scalar of the session field: a rational, or an element of the
/// session's single extension Q(t)/(m). Rationals embed into the extension
/// automatically; elements of the extension that happen to be rational are
/// demoted back, so equal values always have equal representations.
/// Elements of two different extensions never mix (ModulusMismatch).
class FieldElem {
 public:
  FieldElem() : v_(Rat()) {}
  FieldElem(Rat r) : v_(std::move(r)) {}      // NOLINT(google-explicit-constructor)
  FieldElem(long n) : v_(Rat(n)) {}           // NOLINT(google-explicit-constructor)
  FieldElem(NFElem e);                        // NOLINT(google-explicit-constructor)

  bool is_rational() const { return std::holds_alternative<Rat>(v_); }
  const Rat& rat() const { return std::get<Rat>(v_); }
  const NFElem& nf() const { return std::get<NFElem>(v_); }

  bool is_zero() const;
  bool is_one() const;

  FieldElem operator-() const;
  friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator/(const FieldElem& a, const FieldElem& b) { return a * b.inv(); }
  FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
  FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
  FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }

  FieldElem inv() const;
  FieldElem pow(unsigned long e) const;

  friend bool operator==(const FieldElem& a, const FieldElem& b);
  friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }

  /// Total deterministic order used wherever output order matters (root
  /// listings, report rendering). Numeric on Q; coefficient-lexicographic on
  /// extensions, with rationals compared via their embedding.
  static int cmp(const FieldElem& a, const FieldElem& b);

  std::string to_string() const;
  /// True when to_string() needs parentheses inside a product.
  bool needs_parens() const;
  friend std::ostream& operator<<(std::ostream& os, const FieldElem& e);

 private:
  std::variant<Rat, NFElem> v_;
};

/// The fixed coefficient field of a computation session: Q, or one simple
/// extension of it. No towers, no mixing of distinct extensions.
class Field {
 public:
  Field() = default;  // Q
  static Field rationals() { return Field(); }
  static Field extension(NumberFieldPtr nf) { return Field(std::move(nf)); }

  bool is_extension() const { return static_cast<bool>(ext_); }
  const NumberFieldPtr& number_field() const { return ext_; }

  FieldElem from_int(long n) const { return FieldElem(Rat(n)); }
  FieldElem zero() const { return FieldElem(); }
  FieldElem one() const { return FieldElem(Rat(1L)); }
  /// The class of t; only available over an extension.
  FieldElem generator() const;

  /// True when e belongs to this session field (rationals always do).
  bool contains(const FieldElem& e) const;

  friend bool operator==(const Field& a, const Field& b);
  friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }

  std::string to_string() const;  // "Q" or "Q(t)/<modulus>"

 private:
  explicit Field(NumberFieldPtr nf) : ext_(std::move(nf)) {}
  NumberFieldPtr ext_;
};

}  // namespace textile

#endif
