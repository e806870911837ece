#pragma once

#include <cstddef>
#include <vector>

#include "koszul/field.hpp"

namespace koszul {

using QVec = std::vector<mpq_class>;
using QMat = std::vector<QVec>;

// rank over the field; for the rationals this clears denominators rowwise and
// runs fraction-free Bareiss elimination on integers
std::size_t matrix_rank(QMat a, const Field& k);

// reduced row echelon form in place; returns pivot column indices
std::vector<std::size_t> rref(QMat& a, const Field& k);

// basis of the right kernel {v : Av = 0}
QMat kernel_basis(const QMat& a, std::size_t ncols, const Field& k);

// Incrementally built row space in reduced echelon form. insert() reduces the
// vector against the current rows and absorbs any nonzero remainder; reduce()
// only reduces. Membership of v is remainder emptiness.
class RowSpace {
 public:
  RowSpace(std::size_t ncols, Field k) : ncols_(ncols), k_(k) {}

  std::size_t dim() const { return rows_.size(); }
  std::size_t ncols() const { return ncols_; }

  QVec reduce(QVec v) const;
  // returns true when v was independent (rank grew)
  bool insert(QVec v);
  bool contains(const QVec& v) const;
  const QMat& rows() const { return rows_; }

 private:
  std::size_t ncols_;
  Field k_;
  QMat rows_;                    // rref rows, each scaled to pivot 1
  std::vector<std::size_t> pivots_;  // pivot column of each row
};

}  // namespace koszul
