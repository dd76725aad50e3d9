#ifndef TEXTILE_MPOLY_HPP
#define TEXTILE_MPOLY_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "textile/field.hpp"
#include "textile/monomial.hpp"

namespace textile {

/// Variable-name table of a polynomial ring. Rings compare equal by name
/// table, so independently constructed rings interoperate.
class PolyRing {
 public:
  explicit PolyRing(std::vector<std::string> names);

  size_t nvars() const { return names_.size(); }
  const std::string& var_name(size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<size_t> var_index(const std::string& name) const;

  friend bool operator==(const PolyRing& a, const PolyRing& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
  std::map<std::string, size_t> index_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(std::vector<std::string> names);
bool same_ring(const RingPtr& a, const RingPtr& b);
void require_same_ring(const RingPtr& a, const RingPtr& b);

/// Sparse multivariate polynomial over the session field. Terms are stored
/// in a canonical map (no zero coefficients), so structural equality is
/// value equality regardless of construction order.
class MPoly {
 public:
  explicit MPoly(RingPtr ring);
  static MPoly constant(RingPtr ring, FieldElem c);
  static MPoly variable(RingPtr ring, size_t index);
  static MPoly term(RingPtr ring, Monomial m, FieldElem c);

  const RingPtr& ring() const { return ring_; }
  const std::map<Monomial, FieldElem>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// The coefficient of the constant monomial (0 when absent).
  FieldElem constant_value() const;
  size_t term_count() const { return terms_.size(); }
  /// -1 for the zero polynomial.
  int total_degree() const;
  FieldElem coeff(const Monomial& m) const;
  bool uses_var(size_t index) const;

  /// Accumulates c * m, dropping the term when the sum cancels.
  void add_term(const Monomial& m, const FieldElem& c);

  MPoly operator-() const;
  friend MPoly operator+(const MPoly& a, const MPoly& b);
  friend MPoly operator-(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
  MPoly& operator-=(const MPoly& o) { return *this = *this - o; }
  MPoly scale(const FieldElem& c) const;
  MPoly pow(unsigned e) const;

  std::pair<Monomial, FieldElem> leading_term(const MonomialOrder& ord) const;
  const Monomial& leading_monomial(const MonomialOrder& ord) const;
  MPoly monic(const MonomialOrder& ord) const;

  friend bool operator==(const MPoly& a, const MPoly& b);
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

 private:
  RingPtr ring_;
  std::map<Monomial, FieldElem> terms_;
};

struct DivisionResult {
  std::vector<MPoly> quotients;
  MPoly remainder;
};

/// Multivariate division with remainder: f = sum q_i g_i + r, where no
/// monomial of r is divisible by any leading monomial of the divisors.
/// Divisors are tried in list order, making the result deterministic.
DivisionResult divide(const MPoly& f, const std::vector<MPoly>& divisors,
                      const MonomialOrder& ord);

/// Substitution target: a scalar or a polynomial of the same ring.
using SubstTarget = std::variant<FieldElem, MPoly>;

/// Substitutes targets for the assigned variables; unassigned variables
/// persist. Keys are variable indices of f's ring.
MPoly substitute(const MPoly& f, const std::map<size_t, SubstTarget>& assignment);
MPoly substitute(const MPoly& f, const std::map<size_t, FieldElem>& assignment);

/// Re-expresses f in `target` by matching variable names; every variable in
/// the support of f must exist in the target ring.
MPoly change_ring(const MPoly& f, const RingPtr& target);

}  // namespace textile

#endif
