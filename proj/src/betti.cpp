#include "koszul/betti.hpp"

#include <algorithm>
#include <sstream>

namespace koszul {

std::optional<int64_t> BettiTable::t(int64_t i) const {
  std::optional<int64_t> best;
  for (const auto& [key, count] : entries) {
    if (key.first == i && count != 0) {
      if (!best || key.second > *best) best = key.second;
    }
  }
  return best;
}

int64_t BettiTable::total_in_row(int64_t i) const {
  int64_t total = 0;
  for (const auto& [key, count] : entries)
    if (key.first == i) total += count;
  return total;
}

int64_t BettiTable::regularity() const {
  int64_t reg = 0;
  for (const auto& [key, count] : entries)
    if (count != 0) reg = std::max(reg, key.second - key.first);
  return reg;
}

bool BettiTable::row_empty(int64_t i) const {
  for (const auto& [key, count] : entries)
    if (key.first == i && count != 0) return false;
  return true;
}

std::optional<int64_t> BettiTable::projective_dimension() const {
  int64_t last = -1;
  for (const auto& [key, count] : entries)
    if (count != 0) last = std::max(last, key.first);
  if (complete) return last;
  // a fully computed empty row right after `last` certifies pd only when the
  // resolution is minimal and untruncated, which `complete` already covers
  return std::nullopt;
}

bool BettiTable::satisfies_N(int64_t p) const {
  for (const auto& [key, count] : entries) {
    if (count == 0) continue;
    if (key.first >= 1 && key.first <= p && key.second != key.first + 1)
      return false;
  }
  return true;
}

std::vector<mpz_class> BettiTable::diagonal(int64_t up_to) const {
  std::vector<mpz_class> d;
  for (int64_t i = 0; i <= up_to; ++i) d.emplace_back(beta(i, i));
  return d;
}

std::optional<std::pair<int64_t, int64_t>> BettiTable::first_off_diagonal()
    const {
  std::optional<std::pair<int64_t, int64_t>> best;
  for (const auto& [key, count] : entries) {
    if (count == 0 || key.first == key.second) continue;
    if (!best || key < *best) best = key;
  }
  return best;
}

std::string BettiTable::grid() const {
  int64_t max_i = 0, max_diag = 0;
  for (const auto& [key, count] : entries) {
    if (count == 0) continue;
    max_i = std::max(max_i, key.first);
    max_diag = std::max(max_diag, key.second - key.first);
  }
  std::vector<std::vector<std::string>> cells(
      static_cast<std::size_t>(max_diag) + 2,
      std::vector<std::string>(static_cast<std::size_t>(max_i) + 2, "."));
  cells[0][0] = "";
  for (int64_t i = 0; i <= max_i; ++i)
    cells[0][static_cast<std::size_t>(i) + 1] = std::to_string(i);
  for (int64_t d = 0; d <= max_diag; ++d)
    cells[static_cast<std::size_t>(d) + 1][0] = std::to_string(d) + ":";
  for (const auto& [key, count] : entries) {
    if (count == 0) continue;
    cells[static_cast<std::size_t>(key.second - key.first) + 1]
         [static_cast<std::size_t>(key.first) + 1] = std::to_string(count);
  }
  std::vector<std::size_t> widths(cells[0].size(), 0);
  for (const auto& row : cells)
    for (std::size_t c = 0; c < row.size(); ++c)
      widths[c] = std::max(widths[c], row[c].size());
  std::ostringstream out;
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << ' ';
      out << std::string(widths[c] - row[c].size(), ' ') << row[c];
    }
    out << '\n';
  }
  return out.str();
}

std::vector<mpz_class> BettiTable::euler_polynomial() const {
  std::vector<mpz_class> poly;
  for (const auto& [key, count] : entries) {
    if (key.second < 0) throw std::domain_error("negative internal degree");
    auto j = static_cast<std::size_t>(key.second);
    if (poly.size() <= j) poly.resize(j + 1, 0);
    if (key.first % 2 == 0)
      poly[j] += count;
    else
      poly[j] -= count;
  }
  while (!poly.empty() && poly.back() == 0) poly.pop_back();
  return poly;
}

bool GradedMatrix::graded_ok() const {
  for (std::size_t r = 0; r < nrows(); ++r)
    for (std::size_t c = 0; c < ncols(); ++c) {
      const Polynomial& e = entries[r][c];
      if (e.is_zero()) continue;
      if (!e.is_homogeneous()) return false;
      if (e.degree() != col_degrees[c] - row_degrees[r]) return false;
    }
  return true;
}

bool GradedMatrix::has_scalar_entry() const {
  for (const auto& row : entries)
    for (const auto& e : row)
      if (!e.is_zero() && e.degree() == 0) return true;
  return false;
}

GradedMatrix compose(const GradedMatrix& a, const GradedMatrix& b) {
  if (a.ncols() != b.nrows())
    throw std::invalid_argument("matrix shapes do not compose");
  GradedMatrix out;
  out.ring = a.ring;
  out.row_degrees = a.row_degrees;
  out.col_degrees = b.col_degrees;
  out.entries.assign(a.nrows(),
                     std::vector<Polynomial>(b.ncols(), Polynomial(a.ring)));
  for (std::size_t r = 0; r < a.nrows(); ++r)
    for (std::size_t c = 0; c < b.ncols(); ++c) {
      Polynomial sum(a.ring);
      for (std::size_t k = 0; k < a.ncols(); ++k)
        sum = sum + a.entries[r][k] * b.entries[k][c];
      out.entries[r][c] = sum;
    }
  return out;
}

bool is_zero(const GradedMatrix& m) {
  for (const auto& row : m.entries)
    for (const auto& e : row)
      if (!e.is_zero()) return false;
  return true;
}

}  // namespace koszul
