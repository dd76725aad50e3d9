#include "textile/monomial.hpp"

#include <algorithm>
#include <numeric>

namespace textile {

uint32_t Monomial::degree() const {
  return std::accumulate(e_.begin(), e_.end(), uint32_t{0});
}

bool Monomial::is_constant() const {
  return std::all_of(e_.begin(), e_.end(), [](uint32_t x) { return x == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  if (e_.size() != other.e_.size()) return false;
  for (size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > other.e_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r(*this);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
  return r;
}

Monomial Monomial::quotient(const Monomial& o) const {
  Monomial r(*this);
  for (size_t i = 0; i < e_.size(); ++i) {
    if (o.e_[i] > e_[i]) throw Error(Errc::Internal, "monomial quotient without divisibility");
    r.e_[i] -= o.e_[i];
  }
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a);
  for (size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = std::max(a.e_[i], b.e_[i]);
  return r;
}

bool Monomial::coprime(const Monomial& a, const Monomial& b) {
  for (size_t i = 0; i < a.e_.size(); ++i)
    if (a.e_[i] > 0 && b.e_[i] > 0) return false;
  return true;
}

namespace {

int cmp_lex(const Monomial& a, const Monomial& b, size_t from, size_t to) {
  for (size_t i = from; i < to; ++i) {
    if (a.exp(i) != b.exp(i)) return a.exp(i) > b.exp(i) ? 1 : -1;
  }
  return 0;
}

int cmp_grevlex(const Monomial& a, const Monomial& b, size_t from, size_t to) {
  uint32_t da = 0, db = 0;
  for (size_t i = from; i < to; ++i) {
    da += a.exp(i);
    db += b.exp(i);
  }
  if (da != db) return da > db ? 1 : -1;
  // Equal degree: the monomial whose last differing exponent is smaller wins.
  for (size_t i = to; i-- > from;) {
    if (a.exp(i) != b.exp(i)) return a.exp(i) < b.exp(i) ? 1 : -1;
  }
  return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.nvars() != b.nvars())
    throw Error(Errc::RingMismatch, "comparing monomials from different rings");
  size_t n = a.nvars();
  switch (kind_) {
    case Kind::Lex:
      return cmp_lex(a, b, 0, n);
    case Kind::Grevlex:
      return cmp_grevlex(a, b, 0, n);
    case Kind::Block: {
      size_t s = std::min<size_t>(static_cast<size_t>(split_), n);
      if (int c = cmp_lex(a, b, 0, s)) return c;
      return cmp_grevlex(a, b, s, n);
    }
  }
  return 0;
}

std::string MonomialOrder::to_string() const {
  switch (kind_) {
    case Kind::Lex: return "lex";
    case Kind::Grevlex: return "grevlex";
    case Kind::Block: return "block(" + std::to_string(split_) + ")";
  }
  return "?";
}

}  // namespace textile
