#include "textile/mpoly.hpp"

#include <algorithm>

namespace textile {

PolyRing::PolyRing(std::vector<std::string> names) : names_(std::move(names)) {
  for (size_t i = 0; i < names_.size(); ++i) {
    if (!index_.emplace(names_[i], i).second)
      throw Error(Errc::ValidationError, "duplicate ring variable '" + names_[i] + "'");
  }
}

std::optional<size_t> PolyRing::var_index(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

RingPtr make_ring(std::vector<std::string> names) {
  return std::make_shared<PolyRing>(std::move(names));
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (!same_ring(a, b)) throw Error(Errc::RingMismatch, "operands live in different rings");
}

MPoly::MPoly(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw Error(Errc::Internal, "polynomial without ring");
}

MPoly MPoly::constant(RingPtr ring, FieldElem c) {
  MPoly p(std::move(ring));
  p.add_term(Monomial(p.ring_->nvars()), c);
  return p;
}

MPoly MPoly::variable(RingPtr ring, size_t index) {
  MPoly p(std::move(ring));
  if (index >= p.ring_->nvars()) throw Error(Errc::OutOfRange, "variable index out of range");
  p.add_term(Monomial::var(p.ring_->nvars(), index), FieldElem(Rat(1L)));
  return p;
}

MPoly MPoly::term(RingPtr ring, Monomial m, FieldElem c) {
  MPoly p(std::move(ring));
  if (m.nvars() != p.ring_->nvars()) throw Error(Errc::RingMismatch, "monomial arity mismatch");
  p.add_term(m, c);
  return p;
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_constant());
}

FieldElem MPoly::constant_value() const {
  auto it = terms_.find(Monomial(ring_->nvars()));
  return it == terms_.end() ? FieldElem() : it->second;
}

int MPoly::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.degree()));
  return d;
}

FieldElem MPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? FieldElem() : it->second;
}

bool MPoly::uses_var(size_t index) const {
  for (const auto& [m, c] : terms_)
    if (m.exp(index) > 0) return true;
  return false;
}

void MPoly::add_term(const Monomial& m, const FieldElem& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MPoly MPoly::operator-() const {
  MPoly r(ring_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

MPoly operator+(const MPoly& a, const MPoly& b) {
  require_same_ring(a.ring_, b.ring_);
  MPoly r = a;
  for (const auto& [m, c] : b.terms_) r.add_term(m, c);
  return r;
}

MPoly operator-(const MPoly& a, const MPoly& b) {
  require_same_ring(a.ring_, b.ring_);
  MPoly r = a;
  for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
  return r;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  require_same_ring(a.ring_, b.ring_);
  MPoly r(a.ring_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

MPoly MPoly::scale(const FieldElem& c) const {
  MPoly r(ring_);
  if (c.is_zero()) return r;
  for (const auto& [m, cc] : terms_) r.terms_.emplace(m, cc * c);
  return r;
}

MPoly MPoly::pow(unsigned e) const {
  MPoly acc = MPoly::constant(ring_, FieldElem(Rat(1L)));
  MPoly base = *this;
  while (e > 0) {
    if (e & 1U) acc = acc * base;
    base = base * base;
    e >>= 1U;
  }
  return acc;
}

std::pair<Monomial, FieldElem> MPoly::leading_term(const MonomialOrder& ord) const {
  const Monomial& m = leading_monomial(ord);
  return {m, terms_.at(m)};
}

const Monomial& MPoly::leading_monomial(const MonomialOrder& ord) const {
  if (terms_.empty()) throw Error(Errc::ZeroPolynomial, "leading term of the zero polynomial");
  const Monomial* best = &terms_.begin()->first;
  for (const auto& [m, c] : terms_)
    if (ord.greater(m, *best)) best = &m;
  return *best;
}

MPoly MPoly::monic(const MonomialOrder& ord) const {
  if (is_zero()) return *this;
  FieldElem lc = leading_term(ord).second;
  return scale(lc.inv());
}

bool operator==(const MPoly& a, const MPoly& b) {
  return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
}

DivisionResult divide(const MPoly& f, const std::vector<MPoly>& divisors,
                      const MonomialOrder& ord) {
  for (const MPoly& g : divisors) {
    require_same_ring(f.ring(), g.ring());
    if (g.is_zero()) throw Error(Errc::ZeroPolynomial, "division by a zero divisor");
  }
  DivisionResult res{std::vector<MPoly>(divisors.size(), MPoly(f.ring())), MPoly(f.ring())};

  std::vector<Monomial> lms;
  std::vector<FieldElem> lcs;
  lms.reserve(divisors.size());
  for (const MPoly& g : divisors) {
    auto [m, c] = g.leading_term(ord);
    lms.push_back(m);
    lcs.push_back(c);
  }

  MPoly p = f;
  while (!p.is_zero()) {
    auto [lm, lc] = p.leading_term(ord);
    bool reduced = false;
    for (size_t i = 0; i < divisors.size(); ++i) {
      if (lms[i].divides(lm)) {
        Monomial q = lm.quotient(lms[i]);
        FieldElem qc = lc / lcs[i];
        res.quotients[i].add_term(q, qc);
        p -= divisors[i].scale(qc) * MPoly::term(f.ring(), q, FieldElem(Rat(1L)));
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      res.remainder.add_term(lm, lc);
      p.add_term(lm, -lc);
    }
  }
  return res;
}

MPoly substitute(const MPoly& f, const std::map<size_t, SubstTarget>& assignment) {
  for (const auto& [idx, target] : assignment) {
    if (idx >= f.ring()->nvars()) throw Error(Errc::OutOfRange, "substituted variable out of range");
    if (const MPoly* p = std::get_if<MPoly>(&target)) require_same_ring(f.ring(), p->ring());
  }
  MPoly result(f.ring());
  for (const auto& [m, c] : f.terms()) {
    MPoly term_val = MPoly::constant(f.ring(), c);
    Monomial residual(f.ring()->nvars());
    for (size_t i = 0; i < m.nvars(); ++i) {
      uint32_t e = m.exp(i);
      if (e == 0) continue;
      auto it = assignment.find(i);
      if (it == assignment.end()) {
        residual = residual * Monomial::var(m.nvars(), i, e);
      } else if (const FieldElem* v = std::get_if<FieldElem>(&it->second)) {
        term_val = term_val.scale(v->pow(e));
      } else {
        term_val = term_val * std::get<MPoly>(it->second).pow(e);
      }
    }
    result += term_val * MPoly::term(f.ring(), residual, FieldElem(Rat(1L)));
  }
  return result;
}

MPoly substitute(const MPoly& f, const std::map<size_t, FieldElem>& assignment) {
  std::map<size_t, SubstTarget> a;
  for (const auto& [k, v] : assignment) a.emplace(k, v);
  return substitute(f, a);
}

MPoly change_ring(const MPoly& f, const RingPtr& target) {
  MPoly r(target);
  for (const auto& [m, c] : f.terms()) {
    Monomial t(target->nvars());
    for (size_t i = 0; i < m.nvars(); ++i) {
      if (m.exp(i) == 0) continue;
      auto idx = target->var_index(f.ring()->var_name(i));
      if (!idx)
        throw Error(Errc::RingMismatch,
                    "variable '" + f.ring()->var_name(i) + "' not present in target ring");
      t = t * Monomial::var(target->nvars(), *idx, m.exp(i));
    }
    r.add_term(t, c);
  }
  return r;
}

}  // namespace textile
