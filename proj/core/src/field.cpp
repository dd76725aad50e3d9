#include "textile/field.hpp"

#include <ostream>

namespace textile {

FieldElem::FieldElem(NFElem e) {
  if (e.is_rational())
    v_ = e.rat_value();
  else
    v_ = std::move(e);
}

bool FieldElem::is_zero() const {
  return is_rational() ? rat().is_zero() : nf().is_zero();
}

bool FieldElem::is_one() const { return is_rational() && rat().is_one(); }

FieldElem FieldElem::operator-() const {
  if (is_rational()) return FieldElem(-rat());
  return FieldElem(-nf());
}

namespace {

NFElem promote(const Rat& r, const NumberFieldPtr& f) { return NFElem::from_rat(f, r); }

template <typename Op>
FieldElem binop(const FieldElem& a, const FieldElem& b, Op op) {
  if (a.is_rational() && b.is_rational()) return FieldElem(op(a.rat(), b.rat()));
  if (a.is_rational()) return FieldElem(op(promote(a.rat(), b.nf().field()), b.nf()));
  if (b.is_rational()) return FieldElem(op(a.nf(), promote(b.rat(), a.nf().field())));
  return FieldElem(op(a.nf(), b.nf()));
}

}  // namespace

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
  return binop(a, b, [](const auto& x, const auto& y) { return x + y; });
}

FieldElem operator-(const FieldElem& a, const FieldElem& b) {
  return binop(a, b, [](const auto& x, const auto& y) { return x - y; });
}

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
  return binop(a, b, [](const auto& x, const auto& y) { return x * y; });
}

FieldElem FieldElem::inv() const {
  if (is_rational()) return FieldElem(rat().inv());
  return FieldElem(nf().inv());
}

FieldElem FieldElem::pow(unsigned long e) const {
  FieldElem acc(Rat(1L));
  FieldElem base = *this;
  while (e > 0) {
    if (e & 1UL) acc = acc * base;
    base = base * base;
    e >>= 1UL;
  }
  return acc;
}

bool operator==(const FieldElem& a, const FieldElem& b) {
  if (a.is_rational() != b.is_rational()) return false;  // NF values are demoted when rational
  if (a.is_rational()) return a.rat() == b.rat();
  return a.nf() == b.nf();
}

int FieldElem::cmp(const FieldElem& a, const FieldElem& b) {
  auto coeff = [](const FieldElem& e, size_t i) -> Rat {
    if (e.is_rational()) return i == 0 ? e.rat() : Rat();
    const auto& cs = e.nf().coeffs();
    return i < cs.size() ? cs[i] : Rat();
  };
  size_t n = 1;
  if (!a.is_rational()) n = std::max(n, a.nf().coeffs().size());
  if (!b.is_rational()) n = std::max(n, b.nf().coeffs().size());
  for (size_t i = 0; i < n; ++i) {
    Rat ca = coeff(a, i), cb = coeff(b, i);
    if (ca < cb) return -1;
    if (cb < ca) return 1;
  }
  return 0;
}

std::string FieldElem::to_string() const {
  return is_rational() ? rat().to_string() : nf().to_string();
}

bool FieldElem::needs_parens() const {
  if (is_rational()) return false;
  int nonzero = 0;
  for (const Rat& c : nf().coeffs())
    if (!c.is_zero()) ++nonzero;
  if (nonzero > 1) return true;
  // Single term still needs parens when it renders with a leading minus.
  for (const Rat& c : nf().coeffs())
    if (c.sign() < 0) return true;
  return false;
}

std::ostream& operator<<(std::ostream& os, const FieldElem& e) { return os << e.to_string(); }

FieldElem Field::generator() const {
  if (!ext_) throw Error(Errc::ValidationError, "t is only available over an extension field");
  return FieldElem(NFElem::generator(ext_));
}

bool Field::contains(const FieldElem& e) const {
  if (e.is_rational()) return true;
  if (!ext_) return false;
  return e.nf().field() == ext_ || *e.nf().field() == *ext_;
}

bool operator==(const Field& a, const Field& b) {
  if (a.is_extension() != b.is_extension()) return false;
  if (!a.is_extension()) return true;
  return a.ext_ == b.ext_ || *a.ext_ == *b.ext_;
}

std::string Field::to_string() const {
  if (!ext_) return "Q";
  return "Q(t)/" + ext_->to_string();
}

}  // namespace textile
