#include "koszul/ring.hpp"

#include <cctype>
#include <set>
#include <stdexcept>

namespace koszul {

namespace {

bool identifier_like(const std::string& s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

}  // namespace

PolynomialRing::PolynomialRing(Field field, std::vector<std::string> var_names, MonomialOrder order,
                               std::vector<Multidegree> var_multidegrees)
    : field_(field), names_(std::move(var_names)), order_(std::move(order)), var_mdegs_(std::move(var_multidegrees)) {
  if (names_.empty()) throw std::invalid_argument("ring needs at least one variable");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (!identifier_like(n)) throw std::invalid_argument("bad variable name: '" + n + "'");
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate variable name: '" + n + "'");
  }
  if (!var_mdegs_.empty()) {
    if (var_mdegs_.size() != names_.size())
      throw std::invalid_argument("grading needs one column per variable");
    grading_rows_ = var_mdegs_[0].size();
    if (grading_rows_ == 0) throw std::invalid_argument("grading rows must be nonempty");
    for (const auto& col : var_mdegs_) {
      if (col.size() != grading_rows_) throw std::invalid_argument("ragged grading matrix");
      bool nonzero = false;
      for (int64_t v : col) {
        if (v < 0) throw std::invalid_argument("grading entries must be nonnegative");
        nonzero |= (v != 0);
      }
      if (!nonzero) throw std::invalid_argument("grading column is zero");
    }
  }
  if (!order_.perm.empty() && order_.perm.size() != names_.size())
    throw std::invalid_argument("order permutation length mismatch");
  if (order_.kind == MonomialOrder::Kind::weight && order_.weights.size() != names_.size())
    throw std::invalid_argument("order weight length mismatch");
  if (order_.kind == MonomialOrder::Kind::block && order_.eliminated.size() != names_.size())
    throw std::invalid_argument("order block mask length mismatch");
}

int PolynomialRing::var_index(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

Multidegree PolynomialRing::multidegree_of(const Monomial& m) const {
  if (m.nvars() != nvars()) throw std::invalid_argument("monomial/ring variable count mismatch");
  if (!has_fine_grading()) return {m.degree()};
  Multidegree d(grading_rows_, 0);
  for (std::size_t i = 0; i < nvars(); ++i)
    if (m.exp(i) != 0)
      for (std::size_t r = 0; r < grading_rows_; ++r) d[r] += int64_t(m.exp(i)) * var_mdegs_[i][r];
  return d;
}

std::optional<int64_t> PolynomialRing::uniform_grading_weight() const {
  if (!has_fine_grading()) return 1;
  int64_t w = 0;
  for (const auto& col : var_mdegs_) {
    int64_t s = 0;
    for (int64_t v : col) s += v;
    if (w == 0)
      w = s;
    else if (s != w)
      return std::nullopt;
  }
  return w;
}

RingPtr make_ring(Field field, std::vector<std::string> var_names, MonomialOrder order,
                  std::vector<Multidegree> var_multidegrees) {
  return std::make_shared<PolynomialRing>(field, std::move(var_names), std::move(order),
                                          std::move(var_multidegrees));
}

RingPtr with_order(const RingPtr& ring, MonomialOrder order) {
  if (ring->order() == order) return ring;
  return std::make_shared<PolynomialRing>(ring->field(), ring->var_names(), std::move(order),
                                          ring->var_multidegrees());
}

}  // namespace koszul
