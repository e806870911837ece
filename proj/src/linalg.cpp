#include "koszul/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace koszul {

namespace {

std::size_t rank_bareiss(const QMat& a) {
  if (a.empty()) return 0;
  std::size_t nr = a.size(), nc = 0;
  for (const auto& r : a) nc = std::max(nc, r.size());
  // clear denominators per row
  std::vector<std::vector<mpz_class>> m(nr, std::vector<mpz_class>(nc, 0));
  for (std::size_t i = 0; i < nr; ++i) {
    mpz_class den = 1;
    for (const auto& x : a[i]) den = lcm(den, x.get_den());
    for (std::size_t j = 0; j < a[i].size(); ++j) {
      mpq_class v = a[i][j] * den;
      m[i][j] = v.get_num();
    }
  }
  std::size_t rank = 0;
  mpz_class prev = 1;
  for (std::size_t col = 0; col < nc && rank < nr; ++col) {
    std::size_t piv = rank;
    while (piv < nr && m[piv][col] == 0) ++piv;
    if (piv == nr) continue;
    std::swap(m[rank], m[piv]);
    for (std::size_t i = rank + 1; i < nr; ++i) {
      for (std::size_t j = col + 1; j < nc; ++j) {
        m[i][j] = m[rank][col] * m[i][j] - m[i][col] * m[rank][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      m[i][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t matrix_rank(QMat a, const Field& k) {
  if (k.kind == Field::Kind::rationals) return rank_bareiss(a);
  return rref(a, k).size();
}

std::vector<std::size_t> rref(QMat& a, const Field& k) {
  std::vector<std::size_t> pivots;
  if (a.empty()) return pivots;
  std::size_t nr = a.size(), nc = 0;
  for (const auto& r : a) nc = std::max(nc, r.size());
  for (auto& r : a) r.resize(nc, mpq_class(0));
  if (k.kind != Field::Kind::rationals)
    for (auto& r : a)
      for (auto& x : r) x = k.reduce(x);
  std::size_t row = 0;
  for (std::size_t col = 0; col < nc && row < nr; ++col) {
    std::size_t piv = row;
    while (piv < nr && a[piv][col] == 0) ++piv;
    if (piv == nr) continue;
    std::swap(a[row], a[piv]);
    mpq_class inv = k.inv(a[row][col]);
    for (std::size_t j = col; j < nc; ++j) a[row][j] = k.mul(a[row][j], inv);
    for (std::size_t i = 0; i < nr; ++i) {
      if (i == row || a[i][col] == 0) continue;
      mpq_class f = a[i][col];
      for (std::size_t j = col; j < nc; ++j)
        a[i][j] = k.sub(a[i][j], k.mul(f, a[row][j]));
    }
    pivots.push_back(col);
    ++row;
  }
  a.resize(row);  // drop zero rows
  return pivots;
}

QMat kernel_basis(const QMat& a, std::size_t ncols, const Field& k) {
  QMat m = a;
  for (auto& r : m) r.resize(ncols, mpq_class(0));
  std::vector<std::size_t> pivots = rref(m, k);
  std::vector<char> is_pivot(ncols, 0);
  for (std::size_t p : pivots) is_pivot[p] = 1;
  QMat basis;
  for (std::size_t free_col = 0; free_col < ncols; ++free_col) {
    if (is_pivot[free_col]) continue;
    QVec v(ncols, mpq_class(0));
    v[free_col] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = k.neg(m[r][free_col]);
    basis.push_back(std::move(v));
  }
  return basis;
}

QVec RowSpace::reduce(QVec v) const {
  v.resize(ncols_, mpq_class(0));
  if (k_.kind != Field::Kind::rationals)
    for (auto& x : v) x = k_.reduce(x);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const mpq_class& c = v[pivots_[r]];
    if (c == 0) continue;
    mpq_class f = c;  // pivot entries are 1
    for (std::size_t j = pivots_[r]; j < ncols_; ++j)
      if (rows_[r][j] != 0) v[j] = k_.sub(v[j], k_.mul(f, rows_[r][j]));
  }
  return v;
}

bool RowSpace::insert(QVec v) {
  v = reduce(std::move(v));
  std::size_t lead = ncols_;
  for (std::size_t j = 0; j < ncols_; ++j)
    if (v[j] != 0) {
      lead = j;
      break;
    }
  if (lead == ncols_) return false;
  mpq_class inv = k_.inv(v[lead]);
  for (std::size_t j = lead; j < ncols_; ++j) v[j] = k_.mul(v[j], inv);
  // keep earlier rows reduced against the new one
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const mpq_class& c = rows_[r][lead];
    if (c == 0) continue;
    mpq_class f = c;
    for (std::size_t j = lead; j < ncols_; ++j)
      if (v[j] != 0) rows_[r][j] = k_.sub(rows_[r][j], k_.mul(f, v[j]));
  }
  std::size_t at = 0;
  while (at < pivots_.size() && pivots_[at] < lead) ++at;
  rows_.insert(rows_.begin() + at, std::move(v));
  pivots_.insert(pivots_.begin() + at, lead);
  return true;
}

bool RowSpace::contains(const QVec& v) const {
  QVec r = reduce(v);
  for (const auto& x : r)
    if (x != 0) return false;
  return true;
}

}  // namespace koszul
