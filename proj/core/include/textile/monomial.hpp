#ifndef TEXTILE_MONOMIAL_HPP
#define TEXTILE_MONOMIAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "textile/errors.hpp"

namespace textile {

/// Exponent vector with one slot per ring variable.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(size_t nvars) : e_(nvars, 0) {}
  explicit Monomial(std::vector<uint32_t> exps) : e_(std::move(exps)) {}

  static Monomial var(size_t nvars, size_t index, uint32_t exp = 1) {
    Monomial m(nvars);
    m.e_[index] = exp;
    return m;
  }

  size_t nvars() const { return e_.size(); }
  uint32_t exp(size_t i) const { return e_[i]; }
  const std::vector<uint32_t>& exps() const { return e_; }
  uint32_t degree() const;
  bool is_constant() const;

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& o) const;
  /// Componentwise difference; requires o.divides(*this).
  Monomial quotient(const Monomial& o) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);
  static bool coprime(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
  /// Plain lexicographic order on the exponent vector; used only as the
  /// canonical storage key, not as a monomial order.
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.e_ < b.e_; }

 private:
  std::vector<uint32_t> e_;
};

/// A monomial order: lex, grevlex, or a block elimination order that
/// compares the first `split` variables lexicographically and breaks ties
/// with grevlex on the remaining block.
class MonomialOrder {
 public:
  enum class Kind { Lex, Grevlex, Block };

  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
  static MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex, 0); }
  static MonomialOrder block(int split) { return MonomialOrder(Kind::Block, split); }

  Kind kind() const { return kind_; }
  int split() const { return split_; }

  /// -1, 0, +1 for a <, =, > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind_ == b.kind_ && a.split_ == b.split_;
  }

  std::string to_string() const;

 private:
  MonomialOrder(Kind k, int split) : kind_(k), split_(split) {}
  Kind kind_;
  int split_;
};

}  // namespace textile

#endif
