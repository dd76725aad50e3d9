#include "textile/system.hpp"

#include <algorithm>

namespace textile {

RingPtr make_slot_ring(int n, int m) {
  if (n < 1 || m < 1) throw Error(Errc::BadBounds, "slot ring requires n, m >= 1");
  std::vector<std::string> names;
  names.reserve(static_cast<size_t>(n + m));
  for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  for (int i = 1; i <= m; ++i) names.push_back("y" + std::to_string(i));
  return make_ring(std::move(names));
}

TextileSystem TextileSystem::composition(Field field, int n, int m, int q,
                                         std::vector<MPoly> rules) {
  if (n < 1 || m < 1 || q < 1)
    throw Error(Errc::ValidationError, "system dimensions must be >= 1");
  if (rules.size() != static_cast<size_t>(q))
    throw Error(Errc::ValidationError, "expected one rule per output component");
  RingPtr slots = make_slot_ring(n, m);
  for (const MPoly& f : rules)
    if (!same_ring(f.ring(), slots))
      throw Error(Errc::ValidationError, "rule is not a polynomial in x1..xn, y1..ym");
  TextileSystem s(std::move(field), n, m, q);
  s.mode_ = CompositionMode{std::move(rules)};
  return s;
}

TextileSystem TextileSystem::explicit_table(Field field, int n, int m, int q, int max_order,
                                            std::map<int, int> depend,
                                            std::map<std::pair<int, Monomial>, MPoly> table) {
  if (n < 1 || m < 1 || q < 1)
    throw Error(Errc::ValidationError, "system dimensions must be >= 1");
  if (max_order < 1) throw Error(Errc::ValidationError, "max-degree must be >= 1");
  for (int N = 1; N <= max_order; ++N) {
    auto it = depend.find(N);
    if (it == depend.end())
      throw Error(Errc::ValidationError, "missing depend entry for N=" + std::to_string(N));
    if (it->second < N)
      throw Error(Errc::ValidationError,
                  "depend " + std::to_string(N) + " = " + std::to_string(it->second) +
                      " violates D_N >= N");
  }
  int dmax = 0;
  for (const auto& [N, D] : depend)
    if (N >= 1 && N <= max_order) dmax = std::max(dmax, D);
  CoeffIndexing idx(m, n, dmax);

  for (const auto& [key, poly] : table) {
    const auto& [j, beta] = key;
    if (j < 1 || j > q) throw Error(Errc::ValidationError, "table component out of range");
    if (beta.nvars() != static_cast<size_t>(n))
      throw Error(Errc::ValidationError, "table multi-index arity mismatch");
    if (static_cast<int>(beta.degree()) >= max_order)
      throw Error(Errc::ValidationError, "table entry beyond max-degree");
    if (!same_ring(poly.ring(), idx.ring()))
      throw Error(Errc::ValidationError, "table entry in an unexpected coefficient ring");
    // Entries with |beta| < N may only use y-variables with |alpha| < D_N;
    // the binding case is N = |beta| + 1.
    int bind = depend.at(static_cast<int>(beta.degree()) + 1);
    size_t limit = static_cast<size_t>(var_count(n, bind, m));
    for (size_t v = limit; v < idx.count(); ++v)
      if (poly.uses_var(v))
        throw Error(Errc::ValidationError,
                    "coefficient polynomial for |beta|=" + std::to_string(beta.degree()) +
                        " uses " + idx.ring()->var_name(v) + " beyond its depend bound");
  }

  TextileSystem s(std::move(field), n, m, q);
  s.mode_ = ExplicitMode{max_order, std::move(depend), std::move(table), idx.ring()};
  return s;
}

TextileSystem TextileSystem::counterexample(Field field, std::vector<FieldElem> alphas) {
  if (alphas.empty()) throw Error(Errc::ValidationError, "alphas list must be nonempty");
  for (size_t i = 0; i < alphas.size(); ++i)
    for (size_t j = i + 1; j < alphas.size(); ++j)
      if (alphas[i] == alphas[j])
        throw Error(Errc::DuplicateAlphas, "alphas must be pairwise distinct");
  TextileSystem s(std::move(field), 1, 1, 1);
  s.mode_ = CounterexampleMode{std::move(alphas)};
  return s;
}

bool operator==(const TextileSystem& a, const TextileSystem& b) {
  if (!(a.field_ == b.field_) || a.n_ != b.n_ || a.m_ != b.m_ || a.q_ != b.q_) return false;
  if (a.mode_.index() != b.mode_.index()) return false;
  if (a.is_composition()) return a.composition_mode().rules == b.composition_mode().rules;
  if (a.is_counterexample())
    return a.counterexample_mode().alphas == b.counterexample_mode().alphas;
  const ExplicitMode& x = a.explicit_mode();
  const ExplicitMode& y = b.explicit_mode();
  return x.max_order == y.max_order && x.depend == y.depend && x.table == y.table;
}

int depend_bound(const TextileSystem& sys, int N) {
  if (N < 1) throw Error(Errc::OutOfRange, "depend bound requires N >= 1");
  if (sys.is_explicit()) {
    const ExplicitMode& ex = sys.explicit_mode();
    if (N > ex.max_order)
      throw Error(Errc::OutOfRange,
                  "N=" + std::to_string(N) + " beyond the declared max-degree " +
                      std::to_string(ex.max_order));
    return ex.depend.at(N);
  }
  // Substituting a series into a polynomial, the x^beta coefficient only
  // involves y-coefficients of degree <= |beta|; the counterexample family
  // uses y1_0 and y1_l at degree l.
  return N;
}

namespace {

// Truncated series in the x variables whose coefficients are polynomials in
// the y-coefficient variables; the engine behind symbolic extraction.
using PolySeries = std::map<Monomial, MPoly>;

void ps_accumulate(PolySeries& r, const Monomial& beta, const MPoly& p) {
  if (p.is_zero()) return;
  auto it = r.find(beta);
  if (it == r.end()) {
    r.emplace(beta, p);
  } else {
    it->second += p;
    if (it->second.is_zero()) r.erase(it);
  }
}

PolySeries ps_mul(const PolySeries& a, const PolySeries& b, int cap) {
  PolySeries r;
  for (const auto& [ba, pa] : a) {
    for (const auto& [bb, pb] : b) {
      Monomial beta = ba * bb;
      if (static_cast<int>(beta.degree()) >= cap) continue;
      ps_accumulate(r, beta, pa * pb);
    }
  }
  return r;
}

PolySeries ps_pow(const PolySeries& a, unsigned e, int cap, const PolySeries& one) {
  PolySeries acc = one;
  for (unsigned i = 0; i < e; ++i) acc = ps_mul(acc, a, cap);
  return acc;
}

std::map<std::pair<int, Monomial>, MPoly> extract_composition(const TextileSystem& sys, int N) {
  const int n = sys.xvars(), m = sys.unknowns(), q = sys.outputs();
  CoeffIndexing idx(m, n, depend_bound(sys, N));
  const RingPtr& yring = idx.ring();

  std::vector<PolySeries> yhat(static_cast<size_t>(m));
  for (int i = 1; i <= m; ++i)
    for (const Monomial& alpha : idx.alphas())
      yhat[static_cast<size_t>(i - 1)].emplace(alpha,
                                               MPoly::variable(yring, idx.var_id(i, alpha)));

  PolySeries one{{Monomial(static_cast<size_t>(n)), MPoly::constant(yring, FieldElem(Rat(1L)))}};

  std::map<std::pair<int, Monomial>, MPoly> out;
  std::vector<Monomial> betas = enumerate_multi_indices(n, N);
  const std::vector<MPoly>& rules = sys.composition_mode().rules;
  for (int j = 1; j <= q; ++j) {
    PolySeries acc;
    for (const auto& [mono, c] : rules[static_cast<size_t>(j - 1)].terms()) {
      std::vector<uint32_t> xpart(mono.exps().begin(), mono.exps().begin() + n);
      Monomial gamma{std::move(xpart)};
      if (static_cast<int>(gamma.degree()) >= N) continue;
      PolySeries term{{gamma, MPoly::constant(yring, c)}};
      for (int i = 1; i <= m; ++i) {
        uint32_t e = mono.exp(static_cast<size_t>(n + i - 1));
        if (e > 0)
          term = ps_mul(term, ps_pow(yhat[static_cast<size_t>(i - 1)], e, N, one), N);
      }
      for (const auto& [beta, p] : term) ps_accumulate(acc, beta, p);
    }
    for (const Monomial& beta : betas) {
      auto it = acc.find(beta);
      out.emplace(std::make_pair(j, beta),
                  it == acc.end() ? MPoly(yring) : it->second);
    }
  }
  return out;
}

std::map<std::pair<int, Monomial>, MPoly> extract_counterexample(const TextileSystem& sys,
                                                                 int N) {
  const std::vector<FieldElem>& alphas = sys.counterexample_mode().alphas;
  if (static_cast<int>(alphas.size()) < N - 1)
    throw Error(Errc::AlphaListTooShort,
                "extraction to order " + std::to_string(N) + " needs " + std::to_string(N - 1) +
                    " alphas, have " + std::to_string(alphas.size()));
  CoeffIndexing idx(1, 1, depend_bound(sys, N));
  const RingPtr& ring = idx.ring();

  std::map<std::pair<int, Monomial>, MPoly> out;
  out.emplace(std::make_pair(1, Monomial(1)), MPoly(ring));  // G_{1,0} = 0
  for (int l = 1; l < N; ++l) {
    MPoly y0 = MPoly::variable(ring, idx.var_id(1, Monomial(1)));
    MPoly yl = MPoly::variable(ring, idx.var_id(1, Monomial::var(1, 0, static_cast<uint32_t>(l))));
    MPoly g = (y0 - MPoly::constant(ring, alphas[static_cast<size_t>(l - 1)])) * yl -
              MPoly::constant(ring, FieldElem(Rat(1L)));
    out.emplace(std::make_pair(1, Monomial::var(1, 0, static_cast<uint32_t>(l))), std::move(g));
  }
  return out;
}

std::map<std::pair<int, Monomial>, MPoly> extract_explicit(const TextileSystem& sys, int N) {
  const ExplicitMode& ex = sys.explicit_mode();
  if (N < 1 || N > ex.max_order)
    throw Error(Errc::OutOfRange, "extraction order beyond the declared max-degree");
  CoeffIndexing idx(sys.unknowns(), sys.xvars(), depend_bound(sys, N));

  std::map<std::pair<int, Monomial>, MPoly> out;
  for (const Monomial& beta : enumerate_multi_indices(sys.xvars(), N)) {
    for (int j = 1; j <= sys.outputs(); ++j) {
      auto it = ex.table.find({j, beta});
      if (it == ex.table.end()) {
        out.emplace(std::make_pair(j, beta), MPoly(idx.ring()));
      } else {
        out.emplace(std::make_pair(j, beta), change_ring(it->second, idx.ring()));
      }
    }
  }
  return out;
}

}  // namespace

std::map<std::pair<int, Monomial>, MPoly> extract_coeffs(const TextileSystem& sys, int N) {
  if (N < 1) throw Error(Errc::OutOfRange, "extraction requires N >= 1");
  if (sys.is_composition()) return extract_composition(sys, N);
  if (sys.is_counterexample()) return extract_counterexample(sys, N);
  return extract_explicit(sys, N);
}

namespace {

// Concrete truncated series over the field; evaluation route, written
// independently of the symbolic PolySeries machinery above.
using ScalarSeries = std::map<Monomial, FieldElem>;

void ss_accumulate(ScalarSeries& r, const Monomial& beta, const FieldElem& v) {
  if (v.is_zero()) return;
  auto it = r.find(beta);
  if (it == r.end()) {
    r.emplace(beta, v);
  } else {
    it->second += v;
    if (it->second.is_zero()) r.erase(it);
  }
}

ScalarSeries ss_mul(const ScalarSeries& a, const ScalarSeries& b, int cap) {
  ScalarSeries r;
  for (const auto& [ba, va] : a)
    for (const auto& [bb, vb] : b) {
      Monomial beta = ba * bb;
      if (static_cast<int>(beta.degree()) >= cap) continue;
      ss_accumulate(r, beta, va * vb);
    }
  return r;
}

TruncatedSeries evaluate_composition(const TextileSystem& sys, const TruncatedSeries& y, int N) {
  const int n = sys.xvars(), m = sys.unknowns(), q = sys.outputs();

  std::vector<ScalarSeries> ys(static_cast<size_t>(m));
  for (const auto& [key, v] : y.coeffs()) {
    if (static_cast<int>(key.second.degree()) >= N) continue;
    ys[static_cast<size_t>(key.first - 1)].emplace(key.second, v);
  }

  TruncatedSeries out(n, q, N);
  const std::vector<MPoly>& rules = sys.composition_mode().rules;
  for (int j = 1; j <= q; ++j) {
    ScalarSeries acc;
    for (const auto& [mono, c] : rules[static_cast<size_t>(j - 1)].terms()) {
      std::vector<uint32_t> xpart(mono.exps().begin(), mono.exps().begin() + n);
      Monomial gamma{std::move(xpart)};
      if (static_cast<int>(gamma.degree()) >= N) continue;
      ScalarSeries term{{gamma, c}};
      for (int i = 1; i <= m; ++i) {
        for (uint32_t e = 0; e < mono.exp(static_cast<size_t>(n + i - 1)); ++e)
          term = ss_mul(term, ys[static_cast<size_t>(i - 1)], N);
      }
      for (const auto& [beta, v] : term) ss_accumulate(acc, beta, v);
    }
    for (const auto& [beta, v] : acc) out.set_coeff(j, beta, v);
  }
  return out;
}

TruncatedSeries evaluate_counterexample(const TextileSystem& sys, const TruncatedSeries& y,
                                        int N) {
  const std::vector<FieldElem>& alphas = sys.counterexample_mode().alphas;
  if (static_cast<int>(alphas.size()) < N - 1)
    throw Error(Errc::AlphaListTooShort,
                "evaluation to order " + std::to_string(N) + " needs " + std::to_string(N - 1) +
                    " alphas, have " + std::to_string(alphas.size()));
  TruncatedSeries out(1, 1, N);
  FieldElem y0 = y.coeff(1, Monomial(1));
  for (int l = 1; l < N; ++l) {
    Monomial xl = Monomial::var(1, 0, static_cast<uint32_t>(l));
    FieldElem v = (y0 - alphas[static_cast<size_t>(l - 1)]) * y.coeff(1, xl) - FieldElem(Rat(1L));
    out.set_coeff(1, xl, v);
  }
  return out;
}

TruncatedSeries evaluate_explicit(const TextileSystem& sys, const TruncatedSeries& y, int N) {
  CoeffIndexing idx(sys.unknowns(), sys.xvars(), depend_bound(sys, N));
  std::map<size_t, FieldElem> assignment;
  for (size_t id = 0; id < idx.count(); ++id) {
    auto [comp, alpha] = idx.var_of(id);
    assignment.emplace(id, y.coeff(comp, alpha));
  }
  TruncatedSeries out(sys.xvars(), sys.outputs(), N);
  for (const auto& [key, poly] : extract_coeffs(sys, N)) {
    MPoly v = substitute(poly, assignment);
    if (!v.is_constant()) throw Error(Errc::Internal, "specialized coefficient not constant");
    if (!v.is_zero()) out.set_coeff(key.first, key.second, v.constant_value());
  }
  return out;
}

}  // namespace

TruncatedSeries evaluate(const TextileSystem& sys, const TruncatedSeries& y, int N) {
  if (N < 1) throw Error(Errc::OutOfRange, "evaluation requires N >= 1");
  if (y.components() != sys.unknowns() || y.xvars() != sys.xvars())
    throw Error(Errc::ComponentMismatch, "solution shape does not match the system");
  if (y.cap() < depend_bound(sys, N))
    throw Error(Errc::InsufficientCap,
                "evaluation to order " + std::to_string(N) + " needs coefficients below degree " +
                    std::to_string(depend_bound(sys, N)) + ", cap is " +
                    std::to_string(y.cap()));
  if (sys.is_composition()) return evaluate_composition(sys, y, N);
  if (sys.is_counterexample()) return evaluate_counterexample(sys, y, N);
  return evaluate_explicit(sys, y, N);
}

bool order_at_least(const TextileSystem& sys, const TruncatedSeries& y, int N) {
  return evaluate(sys, y, N).is_zero();
}

TruncatedSeries counterexample_solution(const std::vector<FieldElem>& alphas, int N) {
  if (N < 0) throw Error(Errc::BadBounds, "solution order must be >= 0");
  if (static_cast<int>(alphas.size()) < N + 1)
    throw Error(Errc::AlphaListTooShort,
                "y_" + std::to_string(N) + " needs " + std::to_string(N + 1) + " alphas, have " +
                    std::to_string(alphas.size()));
  for (int i = 0; i <= N; ++i)
    for (int j = i + 1; j <= N; ++j)
      if (alphas[static_cast<size_t>(i)] == alphas[static_cast<size_t>(j)])
        throw Error(Errc::DuplicateAlphas, "alphas must be pairwise distinct");

  const FieldElem& aN = alphas[static_cast<size_t>(N)];
  TruncatedSeries y(1, 1, N + 2);
  y.set_coeff(1, Monomial(1), aN);
  for (int k = 1; k <= N; ++k)
    y.set_coeff(1, Monomial::var(1, 0, static_cast<uint32_t>(k)),
                (aN - alphas[static_cast<size_t>(k - 1)]).inv());
  return y;
}

}  // namespace textile
