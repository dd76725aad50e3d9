#include "textile/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace textile {

GroebnerBasis::GroebnerBasis(RingPtr ring, MonomialOrder ord, std::vector<MPoly> reduced_gens)
    : ring_(std::move(ring)), ord_(ord), gens_(std::move(reduced_gens)) {
  for (const MPoly& g : gens_) require_same_ring(ring_, g.ring());
}

bool GroebnerBasis::trivial() const {
  return gens_.size() == 1 && gens_[0].is_constant() && !gens_[0].is_zero();
}

bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
  return same_ring(a.ring_, b.ring_) && a.ord_ == b.ord_ && a.gens_ == b.gens_;
}

MPoly spoly(const MPoly& f, const MPoly& g, const MonomialOrder& ord) {
  auto [mf, cf] = f.leading_term(ord);
  auto [mg, cg] = g.leading_term(ord);
  Monomial l = Monomial::lcm(mf, mg);
  MPoly uf = MPoly::term(f.ring(), l.quotient(mf), cf.inv());
  MPoly ug = MPoly::term(g.ring(), l.quotient(mg), cg.inv());
  return uf * f - ug * g;
}

namespace {

MPoly reduce_full(const MPoly& f, const std::vector<MPoly>& basis, const MonomialOrder& ord) {
  if (basis.empty()) return f;
  return divide(f, basis, ord).remainder;
}

// Minimalize + inter-reduce + monic + sort: the canonical reduced basis.
std::vector<MPoly> reduce_basis(std::vector<MPoly> g, const MonomialOrder& ord) {
  // Drop generators whose leading monomial is divisible by another's.
  std::vector<bool> dead(g.size(), false);
  for (size_t i = 0; i < g.size(); ++i) {
    if (dead[i]) continue;
    for (size_t j = 0; j < g.size(); ++j) {
      if (i == j || dead[j]) continue;
      const Monomial& mi = g[i].leading_monomial(ord);
      const Monomial& mj = g[j].leading_monomial(ord);
      if (mj.divides(mi) && !(mi == mj && j > i)) {
        dead[i] = true;
        break;
      }
    }
  }
  std::vector<MPoly> minimal;
  for (size_t i = 0; i < g.size(); ++i)
    if (!dead[i]) minimal.push_back(g[i].monic(ord));

  // Tails reduce against the other generators; leading monomials are
  // pairwise non-divisible, so one full-division pass per element suffices.
  std::vector<MPoly> reduced = minimal;
  for (size_t i = 0; i < reduced.size(); ++i) {
    std::vector<MPoly> others;
    for (size_t j = 0; j < reduced.size(); ++j)
      if (j != i) others.push_back(reduced[j]);
    reduced[i] = reduce_full(reduced[i], others, ord).monic(ord);
  }

  std::sort(reduced.begin(), reduced.end(), [&](const MPoly& a, const MPoly& b) {
    return ord.less(a.leading_monomial(ord), b.leading_monomial(ord));
  });
  return reduced;
}

}  // namespace

GroebnerBasis buchberger(const RingPtr& ring, const std::vector<MPoly>& gens,
                         const MonomialOrder& ord) {
  std::vector<MPoly> g;
  for (const MPoly& f : gens) {
    require_same_ring(ring, f.ring());
    if (!f.is_zero()) g.push_back(f.monic(ord));
  }
  if (g.empty()) return GroebnerBasis(ring, ord, {});

  using PairKey = std::tuple<uint32_t, std::vector<uint32_t>, size_t, size_t>;
  std::set<PairKey> queue;
  std::set<std::pair<size_t, size_t>> pending;

  auto push_pair = [&](size_t i, size_t j) {
    Monomial l = Monomial::lcm(g[i].leading_monomial(ord), g[j].leading_monomial(ord));
    queue.emplace(l.degree(), l.exps(), i, j);
    pending.emplace(i, j);
  };
  for (size_t j = 1; j < g.size(); ++j)
    for (size_t i = 0; i < j; ++i) push_pair(i, j);

  while (!queue.empty()) {
    auto [deg, lexps, i, j] = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({i, j});

    const Monomial& mi = g[i].leading_monomial(ord);
    const Monomial& mj = g[j].leading_monomial(ord);
    if (Monomial::coprime(mi, mj)) continue;  // first criterion

    // Chain criterion: some g[k] divides the lcm and both mixed pairs were
    // already handled.
    Monomial l = Monomial::lcm(mi, mj);
    bool skip = false;
    for (size_t k = 0; k < g.size() && !skip; ++k) {
      if (k == i || k == j) continue;
      if (!g[k].leading_monomial(ord).divides(l)) continue;
      auto p1 = std::minmax(i, k);
      auto p2 = std::minmax(j, k);
      if (!pending.count({p1.first, p1.second}) && !pending.count({p2.first, p2.second}))
        skip = true;
    }
    if (skip) continue;

    MPoly r = reduce_full(spoly(g[i], g[j], ord), g, ord);
    if (r.is_zero()) continue;
    g.push_back(r.monic(ord));
    for (size_t k = 0; k + 1 < g.size(); ++k) push_pair(k, g.size() - 1);
  }

  std::vector<MPoly> reduced = reduce_basis(std::move(g), ord);
  // A nonzero constant anywhere collapses the ideal to the whole ring.
  for (const MPoly& f : reduced) {
    if (f.is_constant() && !f.is_zero())
      return GroebnerBasis(ring, ord, {MPoly::constant(ring, FieldElem(Rat(1L)))});
  }
  return GroebnerBasis(ring, ord, std::move(reduced));
}

GroebnerBasis buchberger(const std::vector<MPoly>& gens, const MonomialOrder& ord) {
  if (gens.empty())
    throw Error(Errc::ValidationError, "cannot deduce the ring from an empty generator list");
  return buchberger(gens.front().ring(), gens, ord);
}

MPoly normal_form(const MPoly& f, const GroebnerBasis& gb) {
  require_same_ring(f.ring(), gb.ring());
  return reduce_full(f, gb.gens(), gb.order());
}

bool ideal_member(const MPoly& f, const GroebnerBasis& gb) {
  return normal_form(f, gb).is_zero();
}

Triviality is_trivial(const RingPtr& ring, const std::vector<MPoly>& gens) {
  GroebnerBasis gb = buchberger(ring, gens, MonomialOrder::grevlex());
  return Triviality{gb.trivial(), std::move(gb)};
}

GroebnerBasis eliminate(const RingPtr& ring, const std::vector<MPoly>& gens,
                        const std::vector<size_t>& keep) {
  std::vector<bool> kept(ring->nvars(), false);
  for (size_t k : keep) {
    if (k >= ring->nvars()) throw Error(Errc::OutOfRange, "kept variable out of range");
    kept[k] = true;
  }

  std::vector<std::string> perm_names, kept_names;
  for (size_t i = 0; i < ring->nvars(); ++i)
    if (!kept[i]) perm_names.push_back(ring->var_name(i));
  size_t elim_count = perm_names.size();
  for (size_t i = 0; i < ring->nvars(); ++i)
    if (kept[i]) {
      perm_names.push_back(ring->var_name(i));
      kept_names.push_back(ring->var_name(i));
    }

  RingPtr perm_ring = make_ring(perm_names);
  RingPtr kept_ring = make_ring(kept_names);

  std::vector<MPoly> perm_gens;
  perm_gens.reserve(gens.size());
  for (const MPoly& f : gens) {
    require_same_ring(ring, f.ring());
    perm_gens.push_back(change_ring(f, perm_ring));
  }

  GroebnerBasis gb =
      buchberger(perm_ring, perm_gens, MonomialOrder::block(static_cast<int>(elim_count)));

  // Generators supported on the kept block form the reduced grevlex basis of
  // the elimination ideal.
  std::vector<MPoly> out;
  for (const MPoly& f : gb.gens()) {
    bool kept_only = true;
    for (size_t v = 0; v < elim_count && kept_only; ++v)
      if (f.uses_var(v)) kept_only = false;
    if (kept_only) out.push_back(change_ring(f, kept_ring));
  }
  MonomialOrder sub = MonomialOrder::grevlex();
  std::sort(out.begin(), out.end(), [&](const MPoly& a, const MPoly& b) {
    return sub.less(a.leading_monomial(sub), b.leading_monomial(sub));
  });
  return GroebnerBasis(kept_ring, sub, std::move(out));
}

bool ideal_equal(const GroebnerBasis& a, const GroebnerBasis& b) {
  if (!(a.order() == b.order()))
    throw Error(Errc::OrderMismatch, "comparing bases under different orders");
  if (!same_ring(a.ring(), b.ring()))
    throw Error(Errc::RingMismatch, "comparing bases over different rings");
  return a.gens() == b.gens();
}

namespace {

// Dense univariate view of f in variable v; fails if other variables occur.
std::vector<FieldElem> univariate_view(const MPoly& f, size_t v) {
  std::vector<FieldElem> coeffs;
  for (const auto& [m, c] : f.terms()) {
    for (size_t i = 0; i < m.nvars(); ++i)
      if (i != v && m.exp(i) > 0)
        throw Error(Errc::Internal, "univariate view of a multivariate polynomial");
    size_t e = m.exp(v);
    if (coeffs.size() <= e) coeffs.resize(e + 1);
    coeffs[e] = c;
  }
  return coeffs;
}

FieldElem eval_univariate(const std::vector<FieldElem>& coeffs, const FieldElem& x) {
  FieldElem acc;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Synthetic division by (z - r); requires r to be a root.
std::vector<FieldElem> deflate(const std::vector<FieldElem>& coeffs, const FieldElem& r) {
  std::vector<FieldElem> q(coeffs.size() - 1);
  FieldElem carry;
  for (size_t i = coeffs.size(); i-- > 1;) {
    carry = coeffs[i] + carry * r;
    q[i - 1] = carry;
  }
  return q;
}

void strip_trailing_zeros(std::vector<FieldElem>& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

bool all_rational(const std::vector<FieldElem>& c) {
  return std::all_of(c.begin(), c.end(), [](const FieldElem& x) { return x.is_rational(); });
}

// Square root of delta in the session field, when expressible.
bool field_sqrt(const FieldElem& delta, const Field& field, FieldElem& out) {
  if (delta.is_rational()) {
    Rat r;
    if (rat_sqrt(delta.rat(), r)) {
      out = FieldElem(r);
      return true;
    }
    if (!field.is_extension()) return false;
    NFElem root = NFElem::from_rat(field.number_field(), Rat());
    if (nf_sqrt(NFElem::from_rat(field.number_field(), delta.rat()), root)) {
      out = FieldElem(root);
      return true;
    }
    return false;
  }
  NFElem root = NFElem::from_rat(delta.nf().field(), Rat());
  if (nf_sqrt(delta.nf(), root)) {
    out = FieldElem(root);
    return true;
  }
  return false;
}

}  // namespace

UnivariateRoots univariate_roots(std::vector<FieldElem> coeffs, const Field& field) {
  UnivariateRoots result;
  strip_trailing_zeros(coeffs);
  if (coeffs.empty())
    throw Error(Errc::ZeroPolynomial, "roots of the zero polynomial");

  std::vector<FieldElem> p = std::move(coeffs);
  while (p.size() > 1) {
    if (p.size() == 2) {  // linear: exact over any session field
      FieldElem r = -p[0] / p[1];
      result.roots.push_back(r);
      p = deflate(p, r);
      strip_trailing_zeros(p);
      continue;
    }
    if (all_rational(p)) {
      QPoly q(p.size());
      for (size_t i = 0; i < p.size(); ++i) q[i] = p[i].rat();
      RationalRoots rr = qpoly_rational_roots(q);
      if (!rr.complete) {
        result.complete = false;
        break;
      }
      if (!rr.roots.empty()) {
        for (const Rat& r : rr.roots) {
          FieldElem fr(r);
          while (p.size() > 1 && eval_univariate(p, fr).is_zero()) {
            result.roots.push_back(fr);
            p = deflate(p, fr);
            strip_trailing_zeros(p);
          }
        }
        continue;
      }
    }
    if (p.size() == 3) {  // quadratic closed form when the discriminant has a field sqrt
      FieldElem a = p[2], b = p[1], c = p[0];
      FieldElem delta = b * b - FieldElem(Rat(4L)) * a * c;
      FieldElem s;
      if (field_sqrt(delta, field, s)) {
        FieldElem inv2a = (FieldElem(Rat(2L)) * a).inv();
        for (const FieldElem& r : {(-b + s) * inv2a, (-b - s) * inv2a}) {
          if (p.size() > 1 && eval_univariate(p, r).is_zero()) {
            result.roots.push_back(r);
            p = deflate(p, r);
            strip_trailing_zeros(p);
          }
        }
        continue;
      }
    }
    result.complete = false;  // unsplit factor of degree >= 2
    break;
  }

  std::sort(result.roots.begin(), result.roots.end(),
            [](const FieldElem& a, const FieldElem& b) { return FieldElem::cmp(a, b) > 0; });
  result.roots.erase(std::unique(result.roots.begin(), result.roots.end()), result.roots.end());
  return result;
}

namespace {

std::vector<std::vector<FieldElem>> solve_rec(const GroebnerBasis& gb, const Field& field,
                                              bool& complete) {
  const RingPtr& ring = gb.ring();
  if (gb.trivial()) return {};
  if (ring->nvars() == 0) return {{}};
  if (gb.is_zero_ideal())
    throw Error(Errc::NotZeroDimensionalHandled,
                "system leaves all remaining variables free");

  // In a reduced lex basis the elimination structure puts a univariate
  // generator in the least variable whenever the system is zero-dimensional.
  size_t v = ring->nvars() - 1;
  const MPoly* univ = nullptr;
  for (const MPoly& f : gb.gens()) {
    bool only_v = true;
    for (size_t i = 0; i < ring->nvars() && only_v; ++i)
      if (i != v && f.uses_var(i)) only_v = false;
    if (only_v) {
      univ = &f;
      break;
    }
  }
  if (!univ)
    throw Error(Errc::NotZeroDimensionalHandled,
                "no univariate generator in '" + ring->var_name(v) + "'");

  UnivariateRoots roots = univariate_roots(univariate_view(*univ, v), field);
  if (!roots.complete) complete = false;

  std::vector<std::string> sub_names(ring->names().begin(), ring->names().end() - 1);
  RingPtr sub_ring = make_ring(sub_names);

  std::vector<std::vector<FieldElem>> points;
  for (const FieldElem& r : roots.roots) {
    std::vector<MPoly> specialized;
    for (const MPoly& f : gb.gens()) {
      MPoly s = substitute(f, std::map<size_t, FieldElem>{{v, r}});
      if (!s.is_zero()) specialized.push_back(change_ring(s, sub_ring));
    }
    if (sub_ring->nvars() == 0) {
      if (specialized.empty()) points.push_back({r});
      continue;
    }
    GroebnerBasis sub_gb = buchberger(sub_ring, specialized, MonomialOrder::lex());
    auto sub_points = solve_rec(sub_gb, field, complete);
    for (auto& p : sub_points) {
      p.push_back(r);
      points.push_back(std::move(p));
    }
  }
  return points;
}

}  // namespace

PointSolve solve_points(const GroebnerBasis& gb, const Field& field) {
  if (!(gb.order() == MonomialOrder::lex()))
    throw Error(Errc::OrderMismatch, "solve_points requires a lex basis");
  PointSolve out;
  out.points = solve_rec(gb, field, out.complete);
  return out;
}

}  // namespace textile
