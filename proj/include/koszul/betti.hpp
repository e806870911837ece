#pragma once

#include <map>
#include <optional>
#include <string>

#include "koszul/polynomial.hpp"

namespace koszul {

// Graded Betti numbers beta_{ij}, rows i = 0..hom_bound. deg_bound < 0 means
// no internal-degree truncation was applied; otherwise entries with j beyond
// the bound may be missing and j == deg_bound sits at the boundary.
struct BettiTable {
  std::map<std::pair<int64_t, int64_t>, int64_t> entries;
  int64_t hom_bound = 0;
  int64_t deg_bound = -1;
  bool complete = true;  // resolution exhausted within the window, nothing dropped
  std::string over = "S";

  void add(int64_t i, int64_t j, int64_t count) {
    if (count != 0) entries[{i, j}] += count;
  }
  int64_t beta(int64_t i, int64_t j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
  }
  // largest internal degree in row i
  std::optional<int64_t> t(int64_t i) const;
  int64_t total_in_row(int64_t i) const;
  // max over entries of j - i
  int64_t regularity() const;
  // largest nonempty row; certified when a fully empty computed row follows
  // it or the resolution is complete
  std::optional<int64_t> projective_dimension() const;
  bool row_empty(int64_t i) const;
  // rows 1..p live only in degree i+1: quadratic relations and linear
  // syzygies through homological step p
  bool satisfies_N(int64_t p) const;
  // beta_{ii} for i = 0..up_to
  std::vector<mpz_class> diagonal(int64_t up_to) const;
  // smallest (i, j) with i != j and beta_{ij} != 0, ordered by i then j
  std::optional<std::pair<int64_t, int64_t>> first_off_diagonal() const;
  // Macaulay-style grid, rows indexed by j - i
  std::string grid() const;
  // sum_i (-1)^i sum_j beta_{ij} z^j as a polynomial
  std::vector<mpz_class> euler_polynomial() const;
};

// Homogeneous matrix between graded free modules: entry (r, c) is zero or
// homogeneous of degree col_degrees[c] - row_degrees[r].
struct GradedMatrix {
  RingPtr ring;
  std::vector<int64_t> row_degrees, col_degrees;
  std::vector<std::vector<Polynomial>> entries;  // [row][col]

  std::size_t nrows() const { return row_degrees.size(); }
  std::size_t ncols() const { return col_degrees.size(); }
  bool graded_ok() const;
  bool has_scalar_entry() const;
};

// entries of a*b for composable graded matrices (used to verify complexes)
GradedMatrix compose(const GradedMatrix& a, const GradedMatrix& b);
bool is_zero(const GradedMatrix& m);

}  // namespace koszul
