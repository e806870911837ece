#include "koszul/resolution_r.hpp"

#include <algorithm>
#include <unordered_map>

namespace koszul {

namespace {

// coordinate bookkeeping for a graded free module over Q with given
// generator degrees: component at degree j is the concatenation of the
// standard-monomial coordinate spaces R_{j - deg_g}
class FreeModQ {
 public:
  FreeModQ(const QuotientRing* Q, std::vector<int64_t> degs)
      : Q_(Q), degs_(std::move(degs)) {}

  const std::vector<int64_t>& degrees() const { return degs_; }

  std::vector<std::size_t> offsets(int64_t j) const {
    std::vector<std::size_t> off(degs_.size() + 1, 0);
    for (std::size_t g = 0; g < degs_.size(); ++g) {
      std::size_t d = j >= degs_[g] ? Q_->dim_at(j - degs_[g]) : 0;
      off[g + 1] = off[g] + d;
    }
    return off;
  }
  std::size_t dim(int64_t j) const { return offsets(j).back(); }

  // image of a degree-(j-1) coordinate vector under multiplication by x_v
  QVec var_mult(std::size_t v, int64_t j, const QVec& x) const {
    auto from = offsets(j - 1);
    auto to = offsets(j);
    QVec out(to.back(), mpq_class(0));
    for (std::size_t g = 0; g < degs_.size(); ++g) {
      if (from[g] == from[g + 1]) continue;
      int64_t d = j - 1 - degs_[g];
      const auto& cols = Q_->mult_by_var(v, d);
      for (std::size_t c = 0; c + from[g] < from[g + 1]; ++c) {
        const mpq_class& val = x[from[g] + c];
        if (val == 0) continue;
        for (const auto& [row, coeff] : cols[c])
          out[to[g] + static_cast<std::size_t>(row)] += val * coeff;
      }
    }
    return out;
  }

  // coordinates of a homogeneous polynomial vector of module degree j
  QVec coords(const std::vector<Polynomial>& vec, int64_t j) const {
    auto off = offsets(j);
    QVec out(off.back(), mpq_class(0));
    for (std::size_t g = 0; g < degs_.size(); ++g) {
      if (vec[g].is_zero()) continue;
      QVec part = Q_->coords(vec[g], j - degs_[g]);
      for (std::size_t c = 0; c < part.size(); ++c) out[off[g] + c] = part[c];
    }
    return out;
  }

 private:
  const QuotientRing* Q_;
  std::vector<int64_t> degs_;
};

// cancel unit entries of the presentation matrix so the cokernel's minimal
// generators are exactly the remaining rows
void minimalize_presentation(const QuotientRing& Q,
                             QuotientModulePresentation& M) {
  bool again = true;
  while (again) {
    again = false;
    for (std::size_t c = 0; c < M.relations.size() && !again; ++c)
      for (std::size_t r = 0; r < M.gen_degrees.size() && !again; ++r) {
        const Polynomial& e = M.relations[c][r];
        if (e.is_zero() || !e.is_constant()) continue;
        mpq_class uinv =
            Q.ambient()->field().inv(e.constant_value());
        for (std::size_t c2 = 0; c2 < M.relations.size(); ++c2) {
          if (c2 == c || M.relations[c2][r].is_zero()) continue;
          Polynomial factor = M.relations[c2][r].scaled(uinv);
          for (std::size_t r2 = 0; r2 < M.gen_degrees.size(); ++r2) {
            if (r2 == r) continue;
            M.relations[c2][r2] = Q.nf(M.relations[c2][r2] -
                                       factor * M.relations[c][r2]);
          }
          M.relations[c2][r] = Polynomial(Q.ambient());
        }
        for (auto& rel : M.relations)
          rel.erase(rel.begin() + static_cast<std::ptrdiff_t>(r));
        M.relations.erase(M.relations.begin() +
                          static_cast<std::ptrdiff_t>(c));
        M.gen_degrees.erase(M.gen_degrees.begin() +
                            static_cast<std::ptrdiff_t>(r));
        again = true;
      }
  }
}

// selected minimal generator of a syzygy module: its degree and coordinate
// vector over the ambient free module of the previous homological step
struct LevelGen {
  int64_t degree;
  QVec vec;
};

}  // namespace

BettiTable betti_table_over_quotient(const QuotientRing& Q, int64_t hom_bound,
                                     int64_t deg_bound) {
  QuotientModulePresentation K;
  K.gen_degrees = {0};
  const RingPtr& ring = Q.ambient();
  for (std::size_t v = 0; v < Q.nvars(); ++v)
    K.relations.push_back({Polynomial::variable(ring, v)});
  return betti_table_over_quotient(Q, K, hom_bound, deg_bound);
}

BettiTable betti_table_over_quotient(const QuotientRing& Q,
                                     const QuotientModulePresentation& M_in,
                                     int64_t hom_bound, int64_t deg_bound) {
  if (hom_bound < 0 || deg_bound < 0)
    throw std::invalid_argument("bounds must be nonnegative");
  const Field& field = Q.ambient()->field();
  QuotientModulePresentation M = M_in;
  for (auto& rel : M.relations) {
    if (rel.size() != M.gen_degrees.size())
      throw std::invalid_argument("relation has wrong length");
    for (auto& e : rel) e = Q.nf(e);
  }
  minimalize_presentation(Q, M);

  BettiTable table;
  table.hom_bound = hom_bound;
  table.deg_bound = deg_bound;
  table.complete = false;
  table.over = "R";
  for (int64_t d : M.gen_degrees) table.add(0, d, 1);
  if (M.gen_degrees.empty()) {
    table.complete = true;
    return table;
  }

  int64_t min_rel_degree = -1;
  std::vector<std::pair<int64_t, QVec>> pending;  // presentation columns
  {
    FreeModQ F0(&Q, M.gen_degrees);
    for (const auto& rel : M.relations) {
      std::optional<int64_t> deg;
      for (std::size_t g = 0; g < rel.size(); ++g) {
        if (rel[g].is_zero()) continue;
        if (!rel[g].is_homogeneous())
          throw std::domain_error("inhomogeneous relation");
        int64_t d = rel[g].degree() + M.gen_degrees[g];
        if (deg && *deg != d)
          throw std::domain_error("inhomogeneous relation");
        deg = d;
      }
      if (!deg) continue;
      pending.emplace_back(*deg, F0.coords(rel, *deg));
      if (min_rel_degree < 0 || *deg < min_rel_degree) min_rel_degree = *deg;
    }
  }
  if (!pending.empty() && min_rel_degree > deg_bound)
    throw std::invalid_argument(
        "degree bound too small to see any relation; nothing certified");

  // ambient free module of the current level and the degreewise spanning data
  // of the submodule being resolved: span_at[j] holds a basis of its degree-j
  // piece, candidates[j] the vectors offered to the minimal-generator sieve
  FreeModQ F(&Q, M.gen_degrees);
  std::map<int64_t, QMat> candidates;
  for (auto& [d, v] : pending) candidates[d].push_back(std::move(v));

  for (int64_t level = 1; level <= hom_bound; ++level) {
    std::vector<LevelGen> gens;
    std::map<int64_t, QMat> span_at;
    int64_t start =
        candidates.empty() ? deg_bound + 1 : candidates.begin()->first;
    for (int64_t j = start; j <= deg_bound; ++j) {
      std::size_t ncols = F.dim(j);
      RowSpace rs(ncols, field);
      if (auto it = span_at.find(j - 1); it != span_at.end())
        for (const QVec& w : it->second)
          for (std::size_t v = 0; v < Q.nvars(); ++v)
            rs.insert(F.var_mult(v, j, w));
      if (auto it = candidates.find(j); it != candidates.end())
        for (const QVec& c : it->second)
          if (rs.insert(c)) gens.push_back({j, c});
      if (rs.dim() > 0) span_at[j] = rs.rows();
    }
    for (const auto& g : gens) table.add(level, g.degree, 1);
    if (gens.empty()) {
      // no syzygies showed up in the window: at level 1 the relation list is
      // known in full, so the module is free; at higher levels the kernel was
      // only scanned up to deg_bound, and vanishing above it is certain only
      // when the ambient component is zero there (artinian coefficient ring)
      if (level == 1) {
        table.complete = true;
      } else if (Q.is_artinian() && !F.degrees().empty()) {
        int64_t top_gen =
            *std::max_element(F.degrees().begin(), F.degrees().end());
        table.complete = deg_bound >= top_gen + Q.top_degree();
      }
      break;
    }
    if (level == hom_bound) break;

    // kernel of the map sending the new generators into F, degree by degree;
    // per generator, coordinates of its standard-monomial multiples are built
    // incrementally from one degree to the next
    std::vector<int64_t> next_degs;
    next_degs.reserve(gens.size());
    for (const auto& g : gens) next_degs.push_back(g.degree);
    FreeModQ Fn(&Q, next_degs);
    std::vector<std::map<int64_t, QMat>> mono_mult(gens.size());
    for (std::size_t g = 0; g < gens.size(); ++g)
      mono_mult[g][gens[g].degree] = {gens[g].vec};

    std::map<int64_t, QMat> kernels;
    for (int64_t j = next_degs.empty()
                         ? deg_bound + 1
                         : *std::min_element(next_degs.begin(), next_degs.end());
         j <= deg_bound; ++j) {
      auto off = Fn.offsets(j);
      std::size_t ncols = off.back();
      if (ncols == 0) continue;
      std::size_t nrows = F.dim(j);
      QMat A(nrows, QVec(ncols, mpq_class(0)));
      for (std::size_t g = 0; g < gens.size(); ++g) {
        int64_t d = j - gens[g].degree;
        if (d < 0) continue;
        QMat& rows = mono_mult[g][j];
        if (d > 0) {
          const auto& basis = Q.std_basis(d);
          const QMat& prev = mono_mult[g][j - 1];
          rows.resize(basis.size());
          for (std::size_t b = 0; b < basis.size(); ++b) {
            const Monomial& m = basis[b];
            std::size_t v = 0;
            while (m.exp(v) == 0) ++v;
            Monomial m2 = m / Monomial::variable(m.nvars(), v);
            int prev_idx = Q.basis_index(d - 1, m2);
            rows[b] = F.var_mult(v, j, prev[static_cast<std::size_t>(prev_idx)]);
          }
        }
        for (std::size_t b = 0; b < rows.size(); ++b)
          for (std::size_t r = 0; r < nrows; ++r)
            if (rows[b][r] != 0) A[r][off[g] + b] = rows[b][r];
      }
      QMat ker = kernel_basis(A, ncols, field);
      if (!ker.empty()) kernels[j] = std::move(ker);
      // degree j-1 coordinate data is no longer needed
      for (auto& mm : mono_mult) mm.erase(j - 1);
    }
    F = std::move(Fn);
    candidates = std::move(kernels);
  }
  return table;
}

int64_t KoszulHomology::dim(int64_t i, int64_t j) const {
  if (i < 0 || i >= static_cast<int64_t>(dims.size())) return 0;
  auto it = dims[static_cast<std::size_t>(i)].find(j);
  return it == dims[static_cast<std::size_t>(i)].end() ? 0 : it->second;
}

std::optional<int64_t> KoszulHomology::t(int64_t i) const {
  if (i < 0 || i >= static_cast<int64_t>(dims.size())) return std::nullopt;
  const auto& row = dims[static_cast<std::size_t>(i)];
  std::optional<int64_t> best;
  for (const auto& [j, d] : row)
    if (d != 0 && (!best || j > *best)) best = j;
  return best;
}

int64_t KoszulHomology::regularity() const {
  int64_t reg = 0;
  for (std::size_t i = 0; i < dims.size(); ++i)
    for (const auto& [j, d] : dims[i])
      if (d != 0) reg = std::max(reg, j - static_cast<int64_t>(i));
  return reg;
}

bool KoszulHomology::fully_certified() const {
  return std::all_of(row_certified.begin(), row_certified.end(),
                     [](char c) { return c != 0; });
}

KoszulHomology koszul_homology_dims(const QuotientRing& Q, int64_t i_max,
                                    int64_t deg_bound) {
  const std::size_t n = Q.nvars();
  const Field& field = Q.ambient()->field();
  const bool fine = Q.ambient()->has_fine_grading();
  KoszulHomology H;
  H.i_max = i_max;
  H.deg_bound = deg_bound;
  H.dims.resize(static_cast<std::size_t>(i_max) + 1);
  H.row_certified.assign(static_cast<std::size_t>(i_max) + 1, 0);

  // subsets of {0..n-1} by size, each as a sorted index list, in
  // lexicographic order; index lookup via bitmask
  auto subsets_of_size = [n](std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    auto rec = [&](auto&& self, std::size_t next) -> void {
      if (cur.size() == k) {
        out.push_back(cur);
        return;
      }
      for (std::size_t v = next; v + (k - cur.size()) <= n; ++v) {
        cur.push_back(v);
        self(self, v + 1);
        cur.pop_back();
      }
    };
    rec(rec, 0);
    return out;
  };
  auto mask_of = [](const std::vector<std::size_t>& s) {
    uint64_t m = 0;
    for (std::size_t v : s) m |= 1ull << v;
    return m;
  };

  // rank of the Koszul differential from (i, j) to (i-1, j), blocked by fine
  // multidegree when one is declared
  std::vector<std::vector<std::size_t>> prev_subsets = subsets_of_size(0);
  std::map<std::pair<int64_t, int64_t>, std::size_t> ranks;
  for (int64_t i = 1; i <= i_max + 1; ++i) {
    auto cur = subsets_of_size(static_cast<std::size_t>(i));
    if (cur.empty()) break;
    std::unordered_map<uint64_t, std::size_t> prev_index;
    for (std::size_t s = 0; s < prev_subsets.size(); ++s)
      prev_index[mask_of(prev_subsets[s])] = s;
    for (int64_t j = i; j <= deg_bound; ++j) {
      int64_t d = j - i;
      const auto& src_basis = Q.std_basis(d);
      const auto& dst_basis = Q.std_basis(d + 1);
      if (src_basis.empty()) continue;
      std::size_t nrows = prev_subsets.size() * dst_basis.size();
      if (nrows == 0) continue;
      // group columns by multidegree so ranks add up blockwise
      std::map<Multidegree, std::vector<std::size_t>> col_blocks;
      for (std::size_t s = 0; s < cur.size(); ++s)
        for (std::size_t b = 0; b < src_basis.size(); ++b) {
          Multidegree key;
          if (fine) {
            key = Q.ambient()->multidegree_of(src_basis[b]);
            for (std::size_t v : cur[s]) {
              Multidegree dv = Q.ambient()->multidegree_of(
                  Monomial::variable(n, v));
              for (std::size_t t = 0; t < key.size(); ++t) key[t] += dv[t];
            }
          }
          col_blocks[key].push_back(s * src_basis.size() + b);
        }
      std::size_t total_rank = 0;
      for (const auto& [key, cols] : col_blocks) {
        std::unordered_map<std::size_t, std::size_t> row_map;
        QMat A;
        QMat cols_data;
        for (std::size_t col : cols) {
          std::size_t s = col / src_basis.size();
          std::size_t b = col % src_basis.size();
          std::vector<std::pair<std::size_t, mpq_class>> sparse;
          const auto& sub = cur[s];
          for (std::size_t k = 0; k < sub.size(); ++k) {
            uint64_t m = mask_of(sub) & ~(1ull << sub[k]);
            std::size_t ps = prev_index.at(m);
            int sign = (k % 2 == 0) ? 1 : -1;
            const auto& mult = Q.mult_by_var(sub[k], d);
            for (const auto& [row, coeff] : mult[b]) {
              std::size_t global_row =
                  ps * dst_basis.size() + static_cast<std::size_t>(row);
              sparse.emplace_back(global_row, sign * coeff);
            }
          }
          QVec dense_col;
          for (auto& [gr, val] : sparse) {
            auto [it, inserted] = row_map.try_emplace(gr, row_map.size());
            std::size_t local = it->second;
            if (local >= dense_col.size())
              dense_col.resize(row_map.size(), mpq_class(0));
            dense_col[local] += val;
          }
          cols_data.push_back(std::move(dense_col));
        }
        std::size_t block_rows = row_map.size();
        if (block_rows == 0) continue;
        QMat mat(block_rows, QVec(cols_data.size(), mpq_class(0)));
        for (std::size_t c = 0; c < cols_data.size(); ++c)
          for (std::size_t r = 0; r < cols_data[c].size(); ++r)
            mat[r][c] = cols_data[c][r];
        total_rank += matrix_rank(std::move(mat), field);
      }
      ranks[{i, j}] = total_rank;
    }
    prev_subsets = std::move(cur);
  }

  auto choose = [](std::size_t n_, std::size_t k_) {
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), n_, k_);
    return c.get_ui();
  };
  for (int64_t i = 0; i <= i_max; ++i) {
    for (int64_t j = i; j <= deg_bound; ++j) {
      std::size_t chamber =
          i <= static_cast<int64_t>(n)
              ? choose(n, static_cast<std::size_t>(i)) * Q.dim_at(j - i)
              : 0;
      auto rank_of = [&](int64_t ii, int64_t jj) -> std::size_t {
        auto it = ranks.find({ii, jj});
        return it == ranks.end() ? 0 : it->second;
      };
      int64_t h = static_cast<int64_t>(chamber) -
                  static_cast<int64_t>(rank_of(i, j)) -
                  static_cast<int64_t>(rank_of(i + 1, j));
      if (h < 0) throw std::logic_error("negative homology dimension");
      if (h > 0) H.dims[static_cast<std::size_t>(i)][j] = h;
    }
    if (Q.is_artinian() && deg_bound >= i + Q.top_degree())
      H.row_certified[static_cast<std::size_t>(i)] = 1;
  }
  return H;
}

}  // namespace koszul
