#include "textile/number_field.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace textile {

QPoly qpoly_normalize(QPoly p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  return p;
}

int qpoly_degree(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

QPoly qpoly_add(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] += a[i];
    if (i < b.size()) r[i] += b[i];
  }
  return qpoly_normalize(std::move(r));
}

QPoly qpoly_sub(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] += a[i];
    if (i < b.size()) r[i] -= b[i];
  }
  return qpoly_normalize(std::move(r));
}

QPoly qpoly_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return qpoly_normalize(std::move(r));
}

void qpoly_divrem(const QPoly& a, const QPoly& b_in, QPoly& quot, QPoly& rem) {
  QPoly b = qpoly_normalize(b_in);
  if (b.empty()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
  rem = qpoly_normalize(a);
  quot.assign(rem.size() >= b.size() ? rem.size() - b.size() + 1 : 0, Rat());
  const Rat& lead = b.back();
  // Each pass zeroes the current leading coefficient, so rem shrinks strictly.
  while (rem.size() >= b.size()) {
    Rat c = rem.back() / lead;
    size_t shift = rem.size() - b.size();
    quot[shift] += c;
    for (size_t i = 0; i < b.size(); ++i) rem[shift + i] -= c * b[i];
    rem = qpoly_normalize(std::move(rem));
  }
  quot = qpoly_normalize(std::move(quot));
}

static QPoly qpoly_monic(QPoly p) {
  if (p.empty()) return p;
  Rat lead = p.back();
  for (Rat& c : p) c /= lead;
  return p;
}

QPoly qpoly_gcd(QPoly a, QPoly b) {
  a = qpoly_normalize(std::move(a));
  b = qpoly_normalize(std::move(b));
  while (!b.empty()) {
    QPoly q, r;
    qpoly_divrem(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return qpoly_monic(std::move(a));
}

QPoly qpoly_egcd(const QPoly& a, const QPoly& b, QPoly& s, QPoly& t) {
  QPoly r0 = qpoly_normalize(a), r1 = qpoly_normalize(b);
  QPoly s0{Rat(1L)}, s1{};
  QPoly t0{}, t1{Rat(1L)};
  while (!r1.empty()) {
    QPoly q, r;
    qpoly_divrem(r0, r1, q, r);
    QPoly s2 = qpoly_sub(s0, qpoly_mul(q, s1));
    QPoly t2 = qpoly_sub(t0, qpoly_mul(q, t1));
    r0 = std::move(r1); r1 = std::move(r);
    s0 = std::move(s1); s1 = std::move(s2);
    t0 = std::move(t1); t1 = std::move(t2);
  }
  if (!r0.empty()) {
    Rat lead = r0.back();
    for (Rat& c : r0) c /= lead;
    for (Rat& c : s0) c /= lead;
    for (Rat& c : t0) c /= lead;
  }
  s = std::move(s0);
  t = std::move(t0);
  return r0;
}

QPoly qpoly_derivative(const QPoly& p) {
  if (p.size() <= 1) return {};
  QPoly r(p.size() - 1);
  for (size_t i = 1; i < p.size(); ++i) r[i - 1] = p[i] * Rat(static_cast<long>(i));
  return qpoly_normalize(std::move(r));
}

Rat qpoly_eval(const QPoly& p, const Rat& x) {
  Rat acc;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string qpoly_to_string(const QPoly& p, const std::string& var) {
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = qpoly_degree(p); i >= 0; --i) {
    const Rat& c = p[static_cast<size_t>(i)];
    if (c.is_zero()) continue;
    Rat a = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    if (i == 0) {
      os << a;
    } else {
      if (!a.is_one()) os << a << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

namespace {

// Divisors of |n| by trial division. Gives up (complete=false) past the
// trial bound; desk-scale inputs stay far below it.
bool positive_divisors(const mpz_class& n_in, std::vector<mpz_class>& out) {
  mpz_class n = ::abs(n_in);
  if (n == 0) return true;
  constexpr unsigned long kTrialBound = 2000000UL;
  mpz_class i = 1;
  for (; i * i <= n; ++i) {
    if (i > kTrialBound) return false;
    if (n % i == 0) {
      out.push_back(i);
      mpz_class other = n / i;
      if (other != i) out.push_back(other);
    }
  }
  std::sort(out.begin(), out.end());
  return true;
}

}  // namespace

RationalRoots qpoly_rational_roots(const QPoly& p_in) {
  RationalRoots result;
  QPoly p = qpoly_normalize(p_in);
  if (p.empty()) throw Error(Errc::ZeroPolynomial, "rational roots of the zero polynomial");

  // Strip powers of t; 0 is a root iff the constant term vanishes.
  size_t low = 0;
  while (low < p.size() && p[low].is_zero()) ++low;
  if (low > 0) {
    result.roots.push_back(Rat());
    p.erase(p.begin(), p.begin() + static_cast<long>(low));
  }
  if (p.size() <= 1) return result;

  // Clear denominators to an integer polynomial.
  mpz_class den_lcm = 1;
  for (const Rat& c : p) den_lcm = lcm(den_lcm, c.den());
  std::vector<mpz_class> z(p.size());
  for (size_t i = 0; i < p.size(); ++i) {
    Rat scaled = p[i] * Rat(den_lcm);
    z[i] = scaled.num();
  }

  std::vector<mpz_class> ps, qs;
  bool ok = positive_divisors(z.front(), ps);
  ok = positive_divisors(z.back(), qs) && ok;
  result.complete = ok;
  if (!ok) return result;

  for (const mpz_class& num : ps) {
    for (const mpz_class& den : qs) {
      for (int sign : {1, -1}) {
        Rat cand(sign > 0 ? num : mpz_class(-num), den);
        if (qpoly_eval(p, cand).is_zero()) result.roots.push_back(cand);
      }
    }
  }
  std::sort(result.roots.begin(), result.roots.end());
  result.roots.erase(std::unique(result.roots.begin(), result.roots.end()), result.roots.end());
  return result;
}

ModulusDiagnostics check_modulus(const QPoly& m_in) {
  QPoly m = qpoly_normalize(m_in);
  if (qpoly_degree(m) < 1)
    throw Error(Errc::ValidationError, "modulus must have degree >= 1");
  if (!m.back().is_one())
    throw Error(Errc::ValidationError, "modulus must be monic");
  ModulusDiagnostics d;
  d.squarefree = qpoly_degree(qpoly_gcd(m, qpoly_derivative(m))) == 0;
  RationalRoots rr = qpoly_rational_roots(m);
  d.rational_roots = rr.roots;
  d.roots_complete = rr.complete;
  return d;
}

NumberField::NumberField(QPoly monic_modulus) : modulus_(qpoly_normalize(std::move(monic_modulus))) {
  if (qpoly_degree(modulus_) < 1)
    throw Error(Errc::ValidationError, "defining polynomial must have degree >= 1");
  if (!modulus_.back().is_one())
    throw Error(Errc::ValidationError, "defining polynomial must be monic");
}

NFElem::NFElem(NumberFieldPtr field, QPoly value) : field_(std::move(field)) {
  if (!field_) throw Error(Errc::Internal, "NFElem without field");
  QPoly v = qpoly_normalize(std::move(value));
  if (qpoly_degree(v) >= field_->degree()) {
    QPoly q, r;
    qpoly_divrem(v, field_->modulus(), q, r);
    v = std::move(r);
  }
  coeffs_ = std::move(v);
  coeffs_.resize(static_cast<size_t>(field_->degree()));
}

NFElem NFElem::from_rat(NumberFieldPtr field, const Rat& r) {
  return NFElem(std::move(field), QPoly{r});
}

NFElem NFElem::generator(NumberFieldPtr field) {
  return NFElem(std::move(field), QPoly{Rat(), Rat(1L)});
}

bool NFElem::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rat& c) { return c.is_zero(); });
}

bool NFElem::is_rational() const {
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) return false;
  return true;
}

Rat NFElem::rat_value() const {
  if (!is_rational()) throw Error(Errc::Internal, "rat_value of a non-rational element");
  return coeffs_.empty() ? Rat() : coeffs_[0];
}

const NumberFieldPtr& common_field(const NFElem& a, const NFElem& b) {
  if (a.field() == b.field()) return a.field();
  if (*a.field() == *b.field()) return a.field();
  throw Error(Errc::ModulusMismatch,
              "operands live in Q(t)/(" + a.field()->to_string() + ") and Q(t)/(" +
                  b.field()->to_string() + ")");
}

NFElem NFElem::operator-() const {
  QPoly v = coeffs_;
  for (Rat& c : v) c = -c;
  return NFElem(field_, std::move(v));
}

NFElem operator+(const NFElem& a, const NFElem& b) {
  const NumberFieldPtr& f = common_field(a, b);
  return NFElem(f, qpoly_add(a.coeffs_, b.coeffs_));
}

NFElem operator-(const NFElem& a, const NFElem& b) {
  const NumberFieldPtr& f = common_field(a, b);
  return NFElem(f, qpoly_sub(a.coeffs_, b.coeffs_));
}

NFElem operator*(const NFElem& a, const NFElem& b) {
  const NumberFieldPtr& f = common_field(a, b);
  return NFElem(f, qpoly_mul(a.coeffs_, b.coeffs_));
}

NFElem NFElem::inv() const {
  QPoly v = qpoly_normalize(coeffs_);
  if (v.empty()) throw Error(Errc::NonInvertible, "inverse of zero");
  QPoly s, t;
  QPoly g = qpoly_egcd(v, field_->modulus(), s, t);
  if (qpoly_degree(g) != 0)
    throw Error(Errc::NonInvertible,
                "gcd(" + qpoly_to_string(v) + ", " + field_->to_string() +
                    ") is non-constant; the modulus is reducible");
  // g is monic constant 1 after egcd normalization, so s is the inverse.
  return NFElem(field_, std::move(s));
}

bool operator==(const NFElem& a, const NFElem& b) {
  if (!(a.field_ == b.field_ || *a.field_ == *b.field_)) return false;
  return a.coeffs_ == b.coeffs_;
}

std::string NFElem::to_string() const { return qpoly_to_string(qpoly_normalize(coeffs_)); }

std::ostream& operator<<(std::ostream& os, const NFElem& e) { return os << e.to_string(); }

bool nf_sqrt(const NFElem& d, NFElem& root) {
  const NumberFieldPtr& f = d.field();
  if (d.is_zero()) {
    root = NFElem::from_rat(f, Rat());
    return true;
  }
  // Rational square, valid at any extension degree.
  if (d.is_rational()) {
    Rat r;
    if (rat_sqrt(d.rat_value(), r)) {
      root = NFElem::from_rat(f, r);
      return true;
    }
  }
  if (f->degree() != 2) return false;

  // Quadratic modulus m = t^2 + c1 t + c0. Solve (u + v t)^2 = d0 + d1 t:
  //   u^2 - c0 v^2            = d0
  //   2uv - c1 v^2            = d1
  // v = 0 reduces to the rational case above; otherwise eliminating u gives
  //   (c1^2 - 4 c0) v^4 + (2 c1 d1 - 4 d0) v^2 + d1^2 = 0.
  const Rat c0 = f->modulus()[0];
  const Rat c1 = f->modulus()[1];
  const Rat d0 = d.coeffs()[0];
  const Rat d1 = d.coeffs()[1];

  const Rat A = c1 * c1 - Rat(4L) * c0;
  const Rat B = Rat(2L) * c1 * d1 - Rat(4L) * d0;
  const Rat C = d1 * d1;

  std::vector<Rat> v2_candidates;
  if (A.is_zero()) {
    // Degenerate modulus discriminant (m not squarefree); B v^2 + C = 0.
    if (!B.is_zero()) v2_candidates.push_back(-C / B);
  } else {
    Rat disc = B * B - Rat(4L) * A * C;
    Rat sd;
    if (rat_sqrt(disc, sd)) {
      v2_candidates.push_back((-B + sd) / (Rat(2L) * A));
      v2_candidates.push_back((-B - sd) / (Rat(2L) * A));
    }
  }
  for (const Rat& v2 : v2_candidates) {
    Rat v;
    if (!rat_sqrt(v2, v)) continue;
    for (const Rat& vv : {v, -v}) {
      if (vv.is_zero()) continue;
      Rat u = (d1 + c1 * v2) / (Rat(2L) * vv);
      NFElem cand(f, QPoly{u, vv});
      if (cand * cand == d) {
        root = cand;
        return true;
      }
    }
  }
  return false;
}

}  // namespace textile
