#include "textile/series.hpp"

#include <sstream>

namespace textile {

namespace {

void gen_compositions(int n, int pos, uint32_t remaining, std::vector<uint32_t>& cur,
                      std::vector<Monomial>& out) {
  if (pos == n - 1) {
    cur[static_cast<size_t>(pos)] = remaining;
    out.emplace_back(cur);
    return;
  }
  for (uint32_t e = remaining; e != static_cast<uint32_t>(-1); --e) {
    cur[static_cast<size_t>(pos)] = e;
    gen_compositions(n, pos + 1, remaining - e, cur, out);
  }
}

}  // namespace

std::vector<Monomial> enumerate_multi_indices(int n, int cap) {
  if (n < 1 || cap < 0) throw Error(Errc::BadBounds, "enumerate_multi_indices(n >= 1, cap >= 0)");
  std::vector<Monomial> out;
  std::vector<uint32_t> cur(static_cast<size_t>(n));
  for (int d = 0; d < cap; ++d) gen_compositions(n, 0, static_cast<uint32_t>(d), cur, out);
  return out;
}

long long var_count(int n, int k, int m) {
  if (n < 1 || k < 1 || m < 1) throw Error(Errc::BadBounds, "var_count requires n, k, m >= 1");
  // C(n+k-1, n): multi-indices in n slots of total degree < k.
  long long num = 1;
  for (int i = 1; i <= n; ++i) {
    num = num * (k - 1 + i);
    num /= i;  // exact: product of i consecutive integers is divisible by i!
  }
  return num * m;
}

std::string CoeffIndexing::var_name(int comp, const Monomial& alpha) {
  std::ostringstream os;
  os << "y" << comp << "_";
  for (size_t i = 0; i < alpha.nvars(); ++i) {
    if (i) os << ".";
    os << alpha.exp(i);
  }
  return os.str();
}

CoeffIndexing::CoeffIndexing(int m, int n, int k) : m_(m), n_(n), k_(k) {
  if (m < 1 || n < 1 || k < 1) throw Error(Errc::BadBounds, "CoeffIndexing requires m, n, k >= 1");
  alphas_ = enumerate_multi_indices(n, k);
  std::vector<std::string> names;
  names.reserve(alphas_.size() * static_cast<size_t>(m));
  for (size_t a = 0; a < alphas_.size(); ++a) {
    alpha_index_.emplace(alphas_[a], a);
    for (int i = 1; i <= m; ++i) names.push_back(var_name(i, alphas_[a]));
  }
  ring_ = make_ring(std::move(names));
}

size_t CoeffIndexing::var_id(int comp, const Monomial& alpha) const {
  if (comp < 1 || comp > m_) throw Error(Errc::OutOfRange, "component out of range");
  auto it = alpha_index_.find(alpha);
  if (it == alpha_index_.end())
    throw Error(Errc::OutOfRange, "multi-index outside the indexed level");
  return it->second * static_cast<size_t>(m_) + static_cast<size_t>(comp - 1);
}

std::pair<int, Monomial> CoeffIndexing::var_of(size_t id) const {
  if (id >= count()) throw Error(Errc::OutOfRange, "variable id out of range");
  return {static_cast<int>(id % static_cast<size_t>(m_)) + 1,
          alphas_[id / static_cast<size_t>(m_)]};
}

TruncatedSeries::TruncatedSeries(int nvars, int ncomponents, int cap)
    : n_(nvars), m_(ncomponents), cap_(cap) {
  if (nvars < 1 || ncomponents < 1 || cap < 0)
    throw Error(Errc::BadBounds, "series requires n >= 1, m >= 1, cap >= 0");
}

FieldElem TruncatedSeries::coeff(int comp, const Monomial& alpha) const {
  auto it = coeffs_.find({comp, alpha});
  return it == coeffs_.end() ? FieldElem() : it->second;
}

void TruncatedSeries::set_coeff(int comp, const Monomial& alpha, const FieldElem& value) {
  if (comp < 1 || comp > m_) throw Error(Errc::ComponentMismatch, "component out of range");
  if (alpha.nvars() != static_cast<size_t>(n_))
    throw Error(Errc::BadBounds, "multi-index arity mismatch");
  if (static_cast<int>(alpha.degree()) >= cap_)
    throw Error(Errc::CapExceeded, "coefficient beyond the truncation cap");
  if (value.is_zero())
    coeffs_.erase({comp, alpha});
  else
    coeffs_[{comp, alpha}] = value;
}

TruncatedSeries TruncatedSeries::truncate(int k) const {
  if (k > cap_) throw Error(Errc::CapExceeded, "truncate beyond the stored cap");
  if (k < 0) throw Error(Errc::BadBounds, "negative truncation level");
  TruncatedSeries r(n_, m_, k);
  for (const auto& [key, v] : coeffs_)
    if (static_cast<int>(key.second.degree()) < k) r.coeffs_.emplace(key, v);
  return r;
}

std::optional<std::tuple<int, Monomial, FieldElem>> TruncatedSeries::first_nonzero() const {
  if (coeffs_.empty()) return std::nullopt;
  std::vector<Monomial> order = enumerate_multi_indices(n_, cap_);
  for (const Monomial& a : order) {
    for (int i = 1; i <= m_; ++i) {
      auto it = coeffs_.find({i, a});
      if (it != coeffs_.end()) return std::make_tuple(i, a, it->second);
    }
  }
  return std::nullopt;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
  return a.n_ == b.n_ && a.m_ == b.m_ && a.cap_ == b.cap_ && a.coeffs_ == b.coeffs_;
}

std::vector<FieldElem> coeff_vector(const TruncatedSeries& y, const CoeffIndexing& idx) {
  if (y.components() != idx.components() || y.xvars() != idx.xvars())
    throw Error(Errc::ComponentMismatch, "series does not match the indexing");
  if (idx.level() > y.cap())
    throw Error(Errc::InsufficientCap, "series cap below the indexing level");
  std::vector<FieldElem> v(idx.count());
  for (size_t id = 0; id < v.size(); ++id) {
    auto [comp, alpha] = idx.var_of(id);
    v[id] = y.coeff(comp, alpha);
  }
  return v;
}

TruncatedSeries series_from_vector(const std::vector<FieldElem>& v, const CoeffIndexing& idx) {
  if (v.size() != idx.count()) throw Error(Errc::BadBounds, "coefficient vector length mismatch");
  TruncatedSeries y(idx.xvars(), idx.components(), idx.level());
  for (size_t id = 0; id < v.size(); ++id) {
    if (v[id].is_zero()) continue;
    auto [comp, alpha] = idx.var_of(id);
    y.set_coeff(comp, alpha, v[id]);
  }
  return y;
}

std::vector<FieldElem> project_vector(const std::vector<FieldElem>& v, int m, int n, int k,
                                      int l) {
  if (l > k) throw Error(Errc::BadBounds, "projection raises the level");
  CoeffIndexing from(m, n, k), to(m, n, l);
  if (v.size() != from.count()) throw Error(Errc::BadBounds, "coefficient vector length mismatch");
  // Level-l ids are a prefix of level-k ids.
  return std::vector<FieldElem>(v.begin(), v.begin() + static_cast<long>(to.count()));
}

}  // namespace textile
