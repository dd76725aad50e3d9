#ifndef TEXTILE_GROEBNER_HPP
#define TEXTILE_GROEBNER_HPP

#include <vector>

#include "textile/mpoly.hpp"

namespace textile {

/// Reduced Groebner basis: monic generators, pairwise non-divisible leading
/// monomials, tails fully reduced, sorted by leading monomial. Unique per
/// (ideal, order), so structural equality decides ideal equality.
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr ring, MonomialOrder ord, std::vector<MPoly> reduced_gens);

  const RingPtr& ring() const { return ring_; }
  const MonomialOrder& order() const { return ord_; }
  const std::vector<MPoly>& gens() const { return gens_; }

  bool is_zero_ideal() const { return gens_.empty(); }
  /// True iff the basis is {1} (the whole ring; empty variety over any
  /// algebraically closed extension).
  bool trivial() const;

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b);

 private:
  RingPtr ring_;
  MonomialOrder ord_;
  std::vector<MPoly> gens_;
};

/// Buchberger's algorithm with the coprime-leading-monomial and chain
/// criteria, normal pair selection (minimal lcm degree, ties broken
/// lexicographically), full inter-reduction. Deterministic.
GroebnerBasis buchberger(const RingPtr& ring, const std::vector<MPoly>& gens,
                         const MonomialOrder& ord);
/// Ring deduced from the first generator; the list must be nonempty.
GroebnerBasis buchberger(const std::vector<MPoly>& gens, const MonomialOrder& ord);

MPoly spoly(const MPoly& f, const MPoly& g, const MonomialOrder& ord);

/// Remainder of f on division by the basis; zero iff f lies in the ideal.
MPoly normal_form(const MPoly& f, const GroebnerBasis& gb);
bool ideal_member(const MPoly& f, const GroebnerBasis& gb);

struct Triviality {
  bool trivial;
  GroebnerBasis certificate;
};

/// Weak-Nullstellensatz emptiness test: the ideal is the whole ring iff the
/// reduced basis is {1}. The certificate is the basis itself.
Triviality is_trivial(const RingPtr& ring, const std::vector<MPoly>& gens);

/// Elimination ideal of the generated ideal with respect to the kept
/// variables, as a reduced grevlex basis of the kept-variable ring.
/// Internally permutes variables so the eliminated block comes first and
/// runs a block-order basis; any keep subset is accepted.
GroebnerBasis eliminate(const RingPtr& ring, const std::vector<MPoly>& gens,
                        const std::vector<size_t>& keep);

/// Syntactic comparison of reduced bases; sound by uniqueness. Throws
/// OrderMismatch / RingMismatch when the bases are not comparable.
bool ideal_equal(const GroebnerBasis& a, const GroebnerBasis& b);

struct PointSolve {
  /// Full coordinate vectors, ordered by ring variable index. Listed in
  /// descending canonical order of the outermost solved coordinate.
  std::vector<std::vector<FieldElem>> points;
  /// True when every univariate factor met during back-substitution split
  /// into linear factors over the session field; false means the listing
  /// may be incomplete over extensions (the spec's "Inconclusive").
  bool complete = true;
};

/// Back-substitution point solver for a lex basis. Finds all solutions with
/// coordinates in the session field; univariate root extraction uses the
/// rational root test over Q and linear/quadratic closed forms over Q(t)
/// when expressible. Throws NotZeroDimensionalHandled on non-triangular
/// shapes (free variables / positive-dimensional systems).
PointSolve solve_points(const GroebnerBasis& gb, const Field& field);

struct UnivariateRoots {
  std::vector<FieldElem> roots;  // distinct, descending canonical order
  bool complete = true;          // residual after deflation is constant
};

/// Roots in the session field of a dense univariate polynomial (index =
/// power). Exposed for reuse by the lift search and tests.
UnivariateRoots univariate_roots(std::vector<FieldElem> coeffs, const Field& field);

}  // namespace textile

#endif
