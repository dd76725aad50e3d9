#ifndef TEXTILE_SYSTEM_HPP
#define TEXTILE_SYSTEM_HPP

#include <map>
#include <variant>
#include <vector>

#include "textile/groebner.hpp"
#include "textile/series.hpp"

namespace textile {

/// Ring of a composition rule F: variables x1..xn followed by the unknown
/// slots y1..ym.
RingPtr make_slot_ring(int n, int m);

/// Composition presentation: G(y) = F(x, y(x)) for q polynomial rules.
struct CompositionMode {
  std::vector<MPoly> rules;  // q polynomials over make_slot_ring(n, m)
};

/// Explicit table presentation up to a maximal extraction order.
struct ExplicitMode {
  int max_order = 0;                                 // extraction valid for N <= max_order
  std::map<int, int> depend;                         // N -> D_N, all 1 <= N <= max_order
  std::map<std::pair<int, Monomial>, MPoly> table;   // (j, beta) -> coefficient polynomial
  RingPtr table_ring;                                // level-max(D) coefficient ring
};

/// The one-variable counterexample family: G_{1,l} = (y1_0 - a_{l-1}) y1_l - 1.
struct CounterexampleMode {
  std::vector<FieldElem> alphas;  // pairwise distinct
};

/// Finite presentation of a textile map: every output coefficient is a
/// polynomial in the input coefficients, given by one of three modes.
class TextileSystem {
 public:
  static TextileSystem composition(Field field, int n, int m, int q, std::vector<MPoly> rules);
  static TextileSystem explicit_table(Field field, int n, int m, int q, int max_order,
                                      std::map<int, int> depend,
                                      std::map<std::pair<int, Monomial>, MPoly> table);
  static TextileSystem counterexample(Field field, std::vector<FieldElem> alphas);

  int xvars() const { return n_; }
  int unknowns() const { return m_; }
  int outputs() const { return q_; }
  const Field& field() const { return field_; }

  bool is_composition() const { return std::holds_alternative<CompositionMode>(mode_); }
  bool is_explicit() const { return std::holds_alternative<ExplicitMode>(mode_); }
  bool is_counterexample() const { return std::holds_alternative<CounterexampleMode>(mode_); }
  const CompositionMode& composition_mode() const { return std::get<CompositionMode>(mode_); }
  const ExplicitMode& explicit_mode() const { return std::get<ExplicitMode>(mode_); }
  const CounterexampleMode& counterexample_mode() const {
    return std::get<CounterexampleMode>(mode_);
  }

  friend bool operator==(const TextileSystem& a, const TextileSystem& b);

 private:
  TextileSystem(Field field, int n, int m, int q)
      : field_(std::move(field)), n_(n), m_(m), q_(q) {}

  Field field_;
  int n_, m_, q_;
  std::variant<CompositionMode, ExplicitMode, CounterexampleMode> mode_;
};

/// D_N: all output coefficients of degree < N depend only on input
/// coefficients of degree < D_N. Composition and counterexample modes give
/// exactly N; explicit mode reads its declared table.
int depend_bound(const TextileSystem& sys, int N);

/// The coefficient polynomials G_{j,beta} for |beta| < N, over the level-D_N
/// coefficient ring. Zero entries are present in the map.
std::map<std::pair<int, Monomial>, MPoly> extract_coeffs(const TextileSystem& sys, int N);

/// G(y) mod (x)^N as a q-component series of cap N, computed directly from
/// the concrete coefficients of y (not via extract_coeffs; the two routes
/// are cross-checked by tests). Requires cap(y) >= depend_bound(sys, N).
TruncatedSeries evaluate(const TextileSystem& sys, const TruncatedSeries& y, int N);

/// True iff G(y) vanishes through degree N, i.e. y approximately solves the
/// system to order N.
bool order_at_least(const TextileSystem& sys, const TruncatedSeries& y, int N);

/// The family's order-N approximate solution
///   y_N = a_N + sum_{k=1..N} x^k / (a_N - a_{k-1}),
/// returned with cap N+2 so the failing x^{N+1} coefficient is observable.
TruncatedSeries counterexample_solution(const std::vector<FieldElem>& alphas, int N);

}  // namespace textile

#endif
