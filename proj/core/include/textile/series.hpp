#ifndef TEXTILE_SERIES_HPP
#define TEXTILE_SERIES_HPP

#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "textile/mpoly.hpp"

namespace textile {

/// All multi-indices alpha in N^n with |alpha| < cap, enumerated by total
/// degree and lexicographically descending within each degree block:
/// 1; x1, x2; x1^2, x1*x2, x2^2; ... This single convention fixes variable
/// ids, file formats and report layouts.
std::vector<Monomial> enumerate_multi_indices(int n, int cap);

/// Number of coefficient variables at truncation level k:
/// m * C(n+k-1, k-1), i.e. m slots per multi-index of degree < k.
long long var_count(int n, int k, int m);

/// The bijection (component i, multi-index alpha) <-> flat variable id for
/// a fixed (m, n, k). Ids are degree-major, so the level-l variables are an
/// exact prefix of the level-k variables for l <= k.
class CoeffIndexing {
 public:
  CoeffIndexing(int m, int n, int k);

  int components() const { return m_; }
  int xvars() const { return n_; }
  int level() const { return k_; }
  size_t count() const { return alphas_.size() * static_cast<size_t>(m_); }

  /// comp is 1-based.
  size_t var_id(int comp, const Monomial& alpha) const;
  std::pair<int, Monomial> var_of(size_t id) const;
  const std::vector<Monomial>& alphas() const { return alphas_; }
  const RingPtr& ring() const { return ring_; }

  static std::string var_name(int comp, const Monomial& alpha);

 private:
  int m_, n_, k_;
  std::vector<Monomial> alphas_;
  std::map<Monomial, size_t> alpha_index_;
  RingPtr ring_;
};

/// m-tuple of power series in n variables with every coefficient of total
/// degree < cap stored exactly; coefficients at degree >= cap are unknown,
/// not zero. Absent entries below the cap are zero.
class TruncatedSeries {
 public:
  TruncatedSeries(int nvars, int ncomponents, int cap);

  int xvars() const { return n_; }
  int components() const { return m_; }
  int cap() const { return cap_; }

  /// comp is 1-based throughout.
  FieldElem coeff(int comp, const Monomial& alpha) const;
  void set_coeff(int comp, const Monomial& alpha, const FieldElem& value);
  const std::map<std::pair<int, Monomial>, FieldElem>& coeffs() const { return coeffs_; }

  bool is_zero() const { return coeffs_.empty(); }

  /// The truncation map pi_k. Requires k <= cap.
  TruncatedSeries truncate(int k) const;

  /// First nonzero coefficient in enumeration order (degree, then index
  /// position, then component); nullopt when zero through the cap.
  std::optional<std::tuple<int, Monomial, FieldElem>> first_nonzero() const;

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);
  friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) { return !(a == b); }

 private:
  int n_, m_, cap_;
  std::map<std::pair<int, Monomial>, FieldElem> coeffs_;
};

/// Flat coefficient vector of y at the indexing's level (requires
/// idx.level() <= cap, matching dimensions).
std::vector<FieldElem> coeff_vector(const TruncatedSeries& y, const CoeffIndexing& idx);
TruncatedSeries series_from_vector(const std::vector<FieldElem>& v, const CoeffIndexing& idx);

/// The projection pi_{k,l} on flat coefficient vectors: keeps the entries
/// with |alpha| < l. Requires l <= k (BadBounds otherwise).
std::vector<FieldElem> project_vector(const std::vector<FieldElem>& v, int m, int n, int k, int l);

}  // namespace textile

#endif
