#include "koszul/quotient.hpp"

#include <algorithm>

namespace koszul {

QuotientRing::QuotientRing(Ideal defining) : ring_(defining.ring), defining_(std::move(defining)) {
  for (const auto& g : defining_.gens) {
    if (!g.is_homogeneous())
      throw std::invalid_argument("defining ideal must be homogeneous");
    if (ring_->has_fine_grading() && !g.is_multihomogeneous())
      throw std::invalid_argument("defining ideal must be homogeneous for the fine grading");
  }
  gb_ = reduced_groebner_basis(defining_, ring_->order());
  if (gb_.is_unit_ideal()) throw std::invalid_argument("defining ideal is the unit ideal");
  for (const auto& g : gb_.elems)
    if (g.degree() <= 1)
      throw std::invalid_argument("defining ideal contains a linear form; eliminate it first");
}

namespace {

// enumerate degree-d monomials not divisible by any lead, in ascending order
// under the ring's active order
void enumerate_std(const RingPtr& ring, const std::vector<Monomial>& leads, int64_t degree,
                   std::vector<int32_t>& exps, std::size_t var, int64_t remaining,
                   std::vector<Monomial>& out) {
  if (var + 1 == exps.size()) {
    exps[var] = static_cast<int32_t>(remaining);
    Monomial m(exps);
    bool standard = true;
    for (const auto& l : leads)
      if (m.divisible_by(l)) {
        standard = false;
        break;
      }
    if (standard) out.push_back(std::move(m));
    exps[var] = 0;
    return;
  }
  for (int64_t e = 0; e <= remaining; ++e) {
    exps[var] = static_cast<int32_t>(e);
    enumerate_std(ring, leads, degree, exps, var + 1, remaining - e, out);
  }
  exps[var] = 0;
}

}  // namespace

const std::vector<Monomial>& QuotientRing::std_basis(int64_t degree) const {
  auto it = basis_cache_.find(degree);
  if (it != basis_cache_.end()) return it->second;
  std::vector<Monomial> out;
  if (degree >= 0) {
    std::vector<int32_t> exps(ring_->nvars(), 0);
    std::vector<Monomial> leads = gb_.leading_monomials();
    enumerate_std(ring_, leads, degree, exps, 0, degree, out);
    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
      return monomial_compare(a, b, ring_->order()) < 0;
    });
  }
  auto& slot = basis_cache_[degree];
  slot = std::move(out);
  auto& idx = index_cache_[degree];
  for (std::size_t i = 0; i < slot.size(); ++i) idx[slot[i]] = static_cast<int>(i);
  return slot;
}

int QuotientRing::basis_index(int64_t degree, const Monomial& m) const {
  std_basis(degree);
  const auto& idx = index_cache_[degree];
  auto it = idx.find(m);
  return it == idx.end() ? -1 : it->second;
}

namespace {

// exponent vectors with exactly the requested fine multidegree; grading
// columns are nonzero with nonnegative entries, so each variable's exponent
// is bounded and the recursion terminates
void enumerate_multi(const RingPtr& ring, const std::vector<Monomial>& leads, Multidegree remaining,
                     std::vector<int32_t>& exps, std::size_t var, std::vector<Monomial>& out) {
  if (var == exps.size()) {
    for (int64_t r : remaining)
      if (r != 0) return;
    Monomial m(exps);
    for (const auto& l : leads)
      if (m.divisible_by(l)) return;
    out.push_back(std::move(m));
    return;
  }
  const Multidegree& col = ring->var_multidegrees()[var];
  int64_t maxe = -1;
  for (std::size_t r = 0; r < col.size(); ++r)
    if (col[r] > 0) {
      int64_t cap = remaining[r] / col[r];
      maxe = (maxe < 0) ? cap : std::min(maxe, cap);
    }
  for (int64_t e = 0; e <= maxe; ++e) {
    bool ok = true;
    for (std::size_t r = 0; r < col.size(); ++r) {
      if (remaining[r] < e * col[r]) {
        ok = false;
        break;
      }
    }
    if (!ok) break;
    Multidegree next = remaining;
    for (std::size_t r = 0; r < col.size(); ++r) next[r] -= e * col[r];
    exps[var] = static_cast<int32_t>(e);
    enumerate_multi(ring, leads, std::move(next), exps, var + 1, out);
  }
  exps[var] = 0;
}

}  // namespace

const std::vector<Monomial>& QuotientRing::std_basis_multi(const Multidegree& d) const {
  if (!ring_->has_fine_grading())
    throw std::invalid_argument("fine-graded basis requires a fine grading");
  if (d.size() != ring_->grading_rows())
    throw std::invalid_argument("multidegree length does not match the grading");
  auto it = multi_basis_cache_.find(d);
  if (it != multi_basis_cache_.end()) return it->second;
  std::vector<Monomial> out;
  bool nonneg = true;
  for (int64_t x : d) nonneg &= (x >= 0);
  if (nonneg) {
    std::vector<int32_t> exps(ring_->nvars(), 0);
    std::vector<Monomial> leads = gb_.leading_monomials();
    enumerate_multi(ring_, leads, d, exps, 0, out);
    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
      return monomial_compare(a, b, ring_->order()) < 0;
    });
  }
  auto& slot = multi_basis_cache_[d];
  slot = std::move(out);
  return slot;
}

std::vector<mpq_class> QuotientRing::coords(const Polynomial& f, int64_t degree) const {
  const auto& basis = std_basis(degree);
  std::vector<mpq_class> v(basis.size(), mpq_class(0));
  Polynomial r = nf(f);
  for (const auto& t : r.terms()) {
    if (t.mono.degree() != degree)
      throw std::invalid_argument("coordinates need a homogeneous element of the stated degree");
    int i = basis_index(degree, t.mono);
    if (i < 0) throw std::logic_error("normal form left the standard basis");
    v[i] = t.coeff;
  }
  return v;
}

const std::vector<QuotientRing::SparseCol>& QuotientRing::mult_by_var(std::size_t v,
                                                                      int64_t degree) const {
  auto key = std::make_pair(v, degree);
  auto it = mult_cache_.find(key);
  if (it != mult_cache_.end()) return it->second;
  const auto& from = std_basis(degree);
  std_basis(degree + 1);
  std::vector<SparseCol> cols(from.size());
  for (std::size_t j = 0; j < from.size(); ++j) {
    Monomial m = from[j] * Monomial::variable(ring_->nvars(), v);
    int direct = basis_index(degree + 1, m);
    if (direct >= 0) {
      cols[j].push_back({direct, mpq_class(1)});
      continue;
    }
    Polynomial r = nf(Polynomial::monomial(ring_, 1, m));
    for (const auto& t : r.terms()) {
      int i = basis_index(degree + 1, t.mono);
      if (i < 0) throw std::logic_error("normal form left the standard basis");
      cols[j].push_back({i, t.coeff});
    }
  }
  auto& slot = mult_cache_[key];
  slot = std::move(cols);
  return slot;
}

bool QuotientRing::is_artinian() const {
  for (std::size_t v = 0; v < ring_->nvars(); ++v) {
    bool pure = false;
    for (const auto& g : gb_.elems) {
      const Monomial& l = g.leading_monomial();
      bool only_v = l.exp(v) > 0;
      for (std::size_t i = 0; i < ring_->nvars() && only_v; ++i)
        if (i != v && l.exp(i) > 0) only_v = false;
      if (only_v) {
        pure = true;
        break;
      }
    }
    if (!pure) return false;
  }
  return true;
}

int64_t QuotientRing::top_degree() const {
  if (top_degree_ != -2) return top_degree_;
  if (!is_artinian()) {
    top_degree_ = -1;
    return top_degree_;
  }
  // dims vanish beyond the sum of (pure power degree - 1) over variables
  int64_t d = 0;
  int64_t last_nonzero = 0;
  for (;; ++d) {
    if (dim_at(d) == 0) break;
    last_nonzero = d;
  }
  top_degree_ = last_nonzero;
  return top_degree_;
}

}  // namespace koszul
