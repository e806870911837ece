#include "koszul/resolution_s.hpp"

#include <algorithm>
#include <queue>

namespace koszul {

namespace {

using ModVec = std::vector<Polynomial>;

bool vec_is_zero(const ModVec& v) {
  return std::all_of(v.begin(), v.end(),
                     [](const Polynomial& p) { return p.is_zero(); });
}

// leading module term under (ring order on the monomial, then position)
struct ModLead {
  std::size_t pos = 0;
  Monomial mono;
  mpq_class coeff;
};

ModLead mod_lead(const ModVec& v, const MonomialOrder& ord) {
  const Monomial* best = nullptr;
  std::size_t best_pos = 0;
  for (std::size_t p = 0; p < v.size(); ++p) {
    if (v[p].is_zero()) continue;
    const Monomial& m = v[p].leading_monomial();
    if (!best || monomial_compare(m, *best, ord) > 0) {
      best = &m;
      best_pos = p;
    }
  }
  if (!best) throw std::domain_error("leading term of zero vector");
  return {best_pos, *best, v[best_pos].leading_coeff()};
}

void vec_axpy(ModVec& v, const mpq_class& c, const Monomial& m,
              const ModVec& w) {
  for (std::size_t p = 0; p < v.size(); ++p)
    if (!w[p].is_zero()) v[p] = v[p] - w[p].term_multiple(c, m);
}

class ModuleEngine {
 public:
  ModuleEngine(const std::vector<ModVec>& gens,
               const std::vector<int64_t>& shifts, RingPtr ring, int64_t bound)
      : ring_(std::move(ring)), ord_(ring_->order()), shifts_(shifts),
        bound_(bound), pairs_(PairCmp{&ord_}) {
    std::vector<std::pair<int64_t, std::size_t>> by_degree;
    for (std::size_t g = 0; g < gens.size(); ++g) {
      if (gens[g].size() != shifts_.size())
        throw std::invalid_argument("module vector has wrong length");
      if (vec_is_zero(gens[g])) continue;
      by_degree.emplace_back(module_degree(gens[g], shifts_), g);
    }
    std::stable_sort(by_degree.begin(), by_degree.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [deg, g] : by_degree) {
      if (bound_ >= 0 && deg > bound_) {
        truncated_ = true;
        continue;
      }
      auto [r, q] = normal_form(gens[g]);
      (void)q;
      if (!vec_is_zero(r)) add_element(std::move(r), deg);
    }
    run();
  }

  ModuleGB result() && {
    ModuleGB out;
    for (auto& e : basis_) out.basis.push_back(std::move(e.vec));
    for (auto& e : basis_) out.degrees.push_back(e.mdeg);
    for (auto& s : syz_) {
      s.resize(basis_.size(), Polynomial(ring_));
      out.syzygies.push_back(std::move(s));
    }
    out.truncated = truncated_;
    return out;
  }

 private:
  struct Entry {
    ModVec vec;  // monic
    std::size_t lpos;
    Monomial lmono;
    uint64_t lmask;
    int64_t mdeg;
  };
  struct Pair {
    int64_t deg;
    Monomial lcm;
    std::size_t i, j;
  };
  struct PairCmp {
    const MonomialOrder* ord;
    bool operator()(const Pair& a, const Pair& b) const {
      if (a.deg != b.deg) return a.deg > b.deg;  // min-heap on degree
      int c = monomial_compare(a.lcm, b.lcm, *ord);
      if (c != 0) return c > 0;
      if (a.j != b.j) return a.j > b.j;
      return a.i > b.i;
    }
  };

  // full normal form with division tracking: returns (r, q) with
  // v = sum q[l] * basis[l] + r and no term of r reducible
  std::pair<ModVec, std::vector<Polynomial>> normal_form(ModVec v) {
    std::vector<Polynomial> q(basis_.size(), Polynomial(ring_));
    ModVec r(v.size(), Polynomial(ring_));
    while (!vec_is_zero(v)) {
      ModLead lead = mod_lead(v, ord_);
      std::size_t reducer = basis_.size();
      for (std::size_t l = 0; l < basis_.size(); ++l) {
        const Entry& e = basis_[l];
        if (e.lpos != lead.pos) continue;
        if ((e.lmask & ~lead.mono.mask()) != 0) continue;
        if (e.lmono.degree() > lead.mono.degree()) continue;
        if (lead.mono.divisible_by(e.lmono)) {
          reducer = l;
          break;
        }
      }
      if (reducer < basis_.size()) {
        const Entry& e = basis_[reducer];
        Monomial u = lead.mono / e.lmono;
        vec_axpy(v, lead.coeff, u, e.vec);
        q[reducer] =
            q[reducer] + Polynomial::monomial(ring_, lead.coeff, u);
      } else {
        r[lead.pos] =
            r[lead.pos] + Polynomial::monomial(ring_, lead.coeff, lead.mono);
        v[lead.pos] =
            v[lead.pos] - Polynomial::monomial(ring_, lead.coeff, lead.mono);
      }
    }
    return {std::move(r), std::move(q)};
  }

  void add_element(ModVec v, int64_t mdeg) {
    ModLead lead = mod_lead(v, ord_);
    mpq_class inv = ring_->field().inv(lead.coeff);
    for (auto& comp : v) comp = comp.scaled(inv);
    std::size_t t = basis_.size();
    for (std::size_t l = 0; l < t; ++l) {
      if (basis_[l].lpos != lead.pos) continue;
      Monomial L = lcm(basis_[l].lmono, lead.mono);
      int64_t pdeg = L.degree() + shifts_[lead.pos];
      pairs_.push({pdeg, std::move(L), l, t});
    }
    basis_.push_back(
        {std::move(v), lead.pos, lead.mono, lead.mono.mask(), mdeg});
  }

  void run() {
    while (!pairs_.empty()) {
      Pair pr = pairs_.top();
      if (bound_ >= 0 && pr.deg > bound_) {
        truncated_ = true;
        break;  // heap is ordered by degree, the rest are above the bound too
      }
      pairs_.pop();
      const Entry& ei = basis_[pr.i];
      const Entry& ej = basis_[pr.j];
      Monomial ui = pr.lcm / ei.lmono;
      Monomial uj = pr.lcm / ej.lmono;
      ModVec v(shifts_.size(), Polynomial(ring_));
      vec_axpy(v, mpq_class(-1), ui, ei.vec);  // v += ui * ei
      vec_axpy(v, mpq_class(1), uj, ej.vec);   // v -= uj * ej
      auto [r, q] = normal_form(std::move(v));
      std::vector<Polynomial> s = std::move(q);
      for (auto& comp : s) comp = -comp;
      s[pr.i] = s[pr.i] + Polynomial::monomial(ring_, 1, ui);
      s[pr.j] = s[pr.j] - Polynomial::monomial(ring_, 1, uj);
      if (!vec_is_zero(r)) {
        mpq_class lc = mod_lead(r, ord_).coeff;
        add_element(std::move(r), pr.deg);
        s.resize(basis_.size(), Polynomial(ring_));
        s.back() = Polynomial::constant(ring_, -lc);
      }
      syz_.push_back(std::move(s));
    }
  }

  RingPtr ring_;
  const MonomialOrder& ord_;
  std::vector<int64_t> shifts_;
  int64_t bound_;
  std::vector<Entry> basis_;
  std::vector<ModVec> syz_;
  std::priority_queue<Pair, std::vector<Pair>, PairCmp> pairs_;
  bool truncated_ = false;
};

// cancel the scalar entry at maps[k](r, c), shrinking F_{k+1} and F_k
void cancel_pair(std::vector<std::vector<int64_t>>& shifts,
                 std::vector<std::vector<std::vector<Polynomial>>>& maps,
                 const RingPtr& ring, std::size_t k, std::size_t r,
                 std::size_t c) {
  auto& B = maps[k];
  mpq_class u = B[r][c].constant_value();
  mpq_class uinv = ring->field().inv(u);
  for (std::size_t r2 = 0; r2 < B.size(); ++r2) {
    if (r2 == r) continue;
    if (B[r2][c].is_zero()) continue;
    Polynomial factor = B[r2][c].scaled(uinv);
    for (std::size_t c2 = 0; c2 < B[r2].size(); ++c2) {
      if (c2 == c || B[r][c2].is_zero()) continue;
      B[r2][c2] = B[r2][c2] - factor * B[r][c2];
    }
  }
  for (auto& row : B) row.erase(row.begin() + static_cast<std::ptrdiff_t>(c));
  B.erase(B.begin() + static_cast<std::ptrdiff_t>(r));
  shifts[k + 1].erase(shifts[k + 1].begin() + static_cast<std::ptrdiff_t>(c));
  shifts[k].erase(shifts[k].begin() + static_cast<std::ptrdiff_t>(r));
  if (k + 1 < maps.size() && !maps[k + 1].empty())
    maps[k + 1].erase(maps[k + 1].begin() + static_cast<std::ptrdiff_t>(c));
  if (k > 0)
    for (auto& row : maps[k - 1])
      row.erase(row.begin() + static_cast<std::ptrdiff_t>(r));
}

void minimalize(std::vector<std::vector<int64_t>>& shifts,
                std::vector<std::vector<std::vector<Polynomial>>>& maps,
                const RingPtr& ring) {
  bool again = true;
  while (again) {
    again = false;
    for (std::size_t k = 0; k < maps.size() && !again; ++k)
      for (std::size_t r = 0; r < maps[k].size() && !again; ++r)
        for (std::size_t c = 0; c < maps[k][r].size() && !again; ++c) {
          const Polynomial& e = maps[k][r][c];
          if (!e.is_zero() && e.is_constant()) {
            cancel_pair(shifts, maps, ring, k, r, c);
            again = true;
          }
        }
  }
}

}  // namespace

ModulePresentation presentation_of_quotient(const Ideal& I) {
  ModulePresentation M;
  M.ring = I.ring;
  M.gen_degrees = {0};
  for (const auto& g : I.gens)
    if (!g.is_zero()) M.relations.push_back({g});
  return M;
}

void validate_presentation(const ModulePresentation& M) {
  if (!M.ring) throw std::invalid_argument("presentation without a ring");
  for (const auto& rel : M.relations) {
    if (rel.size() != M.gen_degrees.size())
      throw std::invalid_argument("relation has wrong length");
    module_degree(rel, M.gen_degrees);  // throws when inhomogeneous
  }
}

int64_t module_degree(const std::vector<Polynomial>& vec,
                      const std::vector<int64_t>& shifts) {
  if (vec.size() != shifts.size())
    throw std::invalid_argument("module vector has wrong length");
  std::optional<int64_t> deg;
  for (std::size_t p = 0; p < vec.size(); ++p) {
    if (vec[p].is_zero()) continue;
    if (!vec[p].is_homogeneous())
      throw std::domain_error("inhomogeneous module vector");
    int64_t d = vec[p].degree() + shifts[p];
    if (deg && *deg != d)
      throw std::domain_error("inhomogeneous module vector");
    deg = d;
  }
  if (!deg) throw std::domain_error("module degree of zero vector");
  return *deg;
}

ModuleGB module_groebner(const std::vector<std::vector<Polynomial>>& gens,
                         const std::vector<int64_t>& shifts, RingPtr ring,
                         int64_t degree_bound) {
  ModuleEngine engine(gens, shifts, std::move(ring), degree_bound);
  return std::move(engine).result();
}

GradedMatrix FreeResolution::map_matrix(std::size_t k) const {
  GradedMatrix m;
  m.ring = ring;
  m.row_degrees = shifts[k];
  m.col_degrees = shifts[k + 1];
  m.entries = maps[k];
  return m;
}

bool FreeResolution::is_complex() const {
  for (std::size_t k = 0; k + 1 < maps.size(); ++k) {
    if (maps[k].empty() || maps[k + 1].empty()) continue;
    if (!is_zero(compose(map_matrix(k), map_matrix(k + 1)))) return false;
  }
  return true;
}

bool FreeResolution::is_minimal() const {
  for (const auto& m : maps)
    for (const auto& row : m)
      for (const auto& e : row)
        if (!e.is_zero() && e.is_constant()) return false;
  return true;
}

BettiTable FreeResolution::betti(int64_t hom_bound) const {
  BettiTable t;
  t.hom_bound = hom_bound;
  t.deg_bound = deg_bound;
  t.complete = complete;
  for (std::size_t i = 0; i < shifts.size(); ++i) {
    if (static_cast<int64_t>(i) > hom_bound) break;
    for (int64_t d : shifts[i]) t.add(static_cast<int64_t>(i), d, 1);
  }
  return t;
}

FreeResolution minimal_free_resolution_S(const ModulePresentation& M,
                                         int64_t hom_bound,
                                         int64_t deg_bound) {
  validate_presentation(M);
  FreeResolution res;
  res.ring = M.ring;
  res.deg_bound = deg_bound;
  res.shifts.push_back(M.gen_degrees);

  std::vector<ModVec> gens = M.relations;
  for (int64_t k = 1; k <= hom_bound + 1; ++k) {
    if (gens.empty()) {
      res.complete = !res.truncated;
      break;
    }
    ModuleGB gb = module_groebner(gens, res.shifts.back(), M.ring, deg_bound);
    res.truncated = res.truncated || gb.truncated;
    if (gb.basis.empty()) {
      res.complete = !res.truncated;
      break;
    }
    std::vector<std::vector<Polynomial>> mat(
        res.shifts.back().size(),
        std::vector<Polynomial>(gb.basis.size(), Polynomial(M.ring)));
    for (std::size_t c = 0; c < gb.basis.size(); ++c)
      for (std::size_t r = 0; r < mat.size(); ++r)
        mat[r][c] = gb.basis[c][r];
    res.maps.push_back(std::move(mat));
    res.shifts.push_back(gb.degrees);
    gens = std::move(gb.syzygies);
  }
  if (!res.complete && gens.empty() && !res.truncated) res.complete = true;

  minimalize(res.shifts, res.maps, M.ring);
  // drop trailing zero modules left by cancellation
  while (!res.shifts.empty() && res.shifts.back().empty()) {
    res.shifts.pop_back();
    if (!res.maps.empty()) res.maps.pop_back();
  }
  return res;
}

BettiTable minimal_betti_table_S(const ModulePresentation& M,
                                 int64_t hom_bound, int64_t deg_bound) {
  return minimal_free_resolution_S(M, hom_bound, deg_bound).betti(hom_bound);
}

BettiTable minimal_betti_table_S(const Ideal& I, int64_t hom_bound,
                                 int64_t deg_bound) {
  if (!ideal_is_homogeneous(I))
    throw std::domain_error("inhomogeneous ideal has no graded Betti table");
  return minimal_betti_table_S(presentation_of_quotient(I), hom_bound,
                               deg_bound);
}

BettiTable taylor_bounds(const std::vector<Monomial>& gens, RingPtr ring) {
  if (gens.size() > 30)
    throw std::invalid_argument("too many generators for subset enumeration");
  BettiTable t;
  t.hom_bound = static_cast<int64_t>(gens.size());
  t.complete = true;
  t.add(0, 0, 1);
  std::uint64_t total = 1ull << gens.size();
  for (std::uint64_t sub = 1; sub < total; ++sub) {
    Monomial L = Monomial::one(ring->nvars());
    int64_t size = 0;
    for (std::size_t g = 0; g < gens.size(); ++g)
      if (sub & (1ull << g)) {
        L = lcm(L, gens[g]);
        ++size;
      }
    t.add(size, L.degree(), 1);
  }
  return t;
}

}  // namespace koszul
