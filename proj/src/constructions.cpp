#include "koszul/constructions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "koszul/linalg.hpp"

namespace koszul {

namespace {

std::vector<std::string> fresh_names(const RingPtr& ambient,
                                     const std::string& base,
                                     std::size_t count, std::size_t start) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < count; ++i) {
    std::string name = base + std::to_string(start + i);
    while (ambient->var_index(name) >= 0) name = base + name;
    out.push_back(std::move(name));
  }
  return out;
}

Polynomial monomial_poly(const RingPtr& ring, const Monomial& m) {
  return Polynomial(ring, {Term{mpq_class(1), m}});
}

SubalgebraPresentation presentation_from_targets(
    const QuotientRing& R, const std::vector<Polynomial>& targets,
    const std::vector<Multidegree>& source_multidegrees) {
  const Ideal& I = R.defining_ideal();
  const Ideal* modulus = I.gens.empty() ? nullptr : &I;
  std::vector<std::string> names =
      fresh_names(R.ambient(), "t", targets.size(), 0);
  KernelResult kr =
      algebra_map_kernel(targets, names, source_multidegrees, modulus);
  std::vector<Polynomial> kernel_gens(kr.kernel.elems.begin(),
                                      kr.kernel.elems.end());
  return SubalgebraPresentation{targets, kr.source,
                                make_ideal(kr.source, kernel_gens)};
}

}  // namespace

SubalgebraPresentation veronese_presentation(const QuotientRing& R, int64_t c) {
  if (c < 1) throw std::invalid_argument("Veronese index must be positive");
  std::vector<Polynomial> targets;
  std::vector<Multidegree> mdegs;
  for (const Monomial& m : R.std_basis(c)) {
    targets.push_back(monomial_poly(R.ambient(), m));
    if (R.is_polynomial_ring()) {
      Multidegree a(m.nvars());
      for (std::size_t v = 0; v < m.nvars(); ++v) a[v] = m.exp(v);
      mdegs.push_back(std::move(a));
    }
  }
  return presentation_from_targets(R, targets, mdegs);
}

VeroneseModule veronese_module_presentation(const QuotientRing& R,
                                                int64_t c, int64_t u,
                                                int64_t degree_bound) {
  if (u < 0 || u >= c) throw std::invalid_argument("slice index must lie in 0..c-1");
  if (degree_bound < 0) throw std::invalid_argument("negative degree bound");
  VeroneseModule out;
  out.base = veronese_presentation(R, c);
  for (const Monomial& m : R.std_basis(u))
    out.generator_expressions.push_back(monomial_poly(R.ambient(), m));
  out.degree_bound = degree_bound;
  const RingPtr& T = out.base.presentation_ring;
  QuotientRing Tfree = QuotientRing::polynomial_ring(T);
  const std::size_t r = out.generator_expressions.size();
  const Field& k = R.ambient()->field();
  const auto& tgens = out.base.generator_expressions;

  // evaluation of a presentation monomial: product of the generator images
  auto eval_mono = [&](const Monomial& mu) {
    std::vector<int32_t> e(R.ambient()->nvars(), 0);
    for (std::size_t t = 0; t < tgens.size(); ++t)
      for (int32_t rep = 0; rep < mu.exp(t); ++rep)
        for (std::size_t v = 0; v < e.size(); ++v)
          e[v] += tgens[t].terms()[0].mono.exp(v);
    return Monomial(std::move(e));
  };

  std::vector<std::vector<Polynomial>> prev_kernel;  // full kernel, degree k-1
  for (int64_t k_deg = 1; k_deg <= degree_bound; ++k_deg) {
    const auto& mus = Tfree.std_basis(k_deg);
    const std::size_t ncols = mus.size() * r;
    const int64_t target_deg = u + k_deg * c;
    const std::size_t nrows = R.dim_at(target_deg);
    QMat A(nrows, QVec(ncols, mpq_class(0)));
    for (std::size_t mi = 0; mi < mus.size(); ++mi) {
      Monomial image = eval_mono(mus[mi]);
      for (std::size_t gi = 0; gi < r; ++gi) {
        Polynomial prod = out.generator_expressions[gi].term_multiple(
            mpq_class(1), image);
        QVec col = R.coords(prod, target_deg);
        for (std::size_t row = 0; row < nrows; ++row)
          A[row][mi * r + gi] = col[row];
      }
    }
    QMat ker = kernel_basis(A, ncols, k);

    // known part: presentation-ideal multiples and one-step products of the
    // previous kernel
    RowSpace rs(ncols, k);
    auto col_index = [&](const Monomial& mu, std::size_t gi) {
      return static_cast<std::size_t>(Tfree.basis_index(k_deg, mu)) * r + gi;
    };
    auto insert_vector = [&](const std::vector<Polynomial>& vec) {
      QVec v(ncols, mpq_class(0));
      for (std::size_t gi = 0; gi < r; ++gi)
        for (const Term& t : vec[gi].terms())
          v[col_index(t.mono, gi)] += t.coeff;
      return rs.insert(v);
    };
    for (const auto& p : out.base.kernel.gens) {
      if (p.is_zero() || p.degree() > k_deg) continue;
      for (const Monomial& m : Tfree.std_basis(k_deg - p.degree())) {
        Polynomial mult = p.term_multiple(mpq_class(1), m);
        for (std::size_t gi = 0; gi < r; ++gi) {
          std::vector<Polynomial> vec(r, Polynomial(T));
          vec[gi] = mult;
          insert_vector(vec);
        }
      }
    }
    for (const auto& vec : prev_kernel)
      for (std::size_t tv = 0; tv < T->nvars(); ++tv) {
        std::vector<Polynomial> shifted;
        for (const auto& p : vec)
          shifted.push_back(p.term_multiple(
              mpq_class(1), Monomial::variable(T->nvars(), tv)));
        insert_vector(shifted);
      }

    std::vector<std::vector<Polynomial>> full;
    for (const auto& kv : ker) {
      std::vector<Polynomial> vec;
      for (std::size_t gi = 0; gi < r; ++gi) {
        Polynomial p(T);
        for (std::size_t mi = 0; mi < mus.size(); ++mi)
          if (kv[mi * r + gi] != 0)
            p = p + monomial_poly(T, mus[mi]).scaled(kv[mi * r + gi]);
        vec.push_back(p);
      }
      if (insert_vector(vec)) {
        out.relations.push_back(vec);
        out.relation_degrees.push_back(k_deg);
      }
      full.push_back(std::move(vec));
    }
    prev_kernel = std::move(full);
  }
  return out;
}

PinchedVeronese pinched_veronese(int64_t n, int64_t d, int64_t s,
                                 int64_t degree_bound) {
  if (n < 1 || d < 1 || s < 1 || s > n)
    throw std::invalid_argument("need 1 <= s <= n and d >= 1");
  if (degree_bound < 1) throw std::invalid_argument("degree bound must be positive");
  std::vector<std::string> xnames;
  for (int64_t i = 1; i <= n; ++i) xnames.push_back("x" + std::to_string(i));
  RingPtr amb = make_ring(Field::rationals(), xnames);
  QuotientRing S = QuotientRing::polynomial_ring(amb);

  PinchedVeronese out;
  out.degree_bound = degree_bound;
  std::vector<Monomial> gens;
  for (const Monomial& m : S.std_basis(d)) {
    int64_t support = 0;
    for (std::size_t v = 0; v < m.nvars(); ++v)
      if (m.exp(v) > 0) ++support;
    if (support <= s) gens.push_back(m);
  }
  const std::size_t N = gens.size();
  std::vector<std::string> tnames = fresh_names(amb, "t", N, 0);
  std::vector<Multidegree> mdegs;
  for (const auto& g : gens) {
    Multidegree a(g.nvars());
    for (std::size_t v = 0; v < g.nvars(); ++v) a[v] = g.exp(v);
    mdegs.push_back(std::move(a));
  }
  RingPtr T = make_ring(amb->field(), tnames, MonomialOrder::degrevlex(), mdegs);

  // fiberwise minimal generators: within each ambient multidegree, connect
  // multisets of generators sharing a factor; each extra component yields one
  // binomial
  std::vector<Polynomial> kernel_gens;
  out.kernel_mingens_by_degree.assign(static_cast<std::size_t>(degree_bound) + 1, 0);
  std::vector<std::size_t> pick;
  for (int64_t k = 2; k <= degree_bound; ++k) {
    std::map<std::vector<int64_t>, std::vector<std::vector<std::size_t>>> fibers;
    pick.assign(static_cast<std::size_t>(k), 0);
    // multisets as nondecreasing index tuples
    while (true) {
      std::vector<int64_t> key(static_cast<std::size_t>(n), 0);
      for (std::size_t i : pick)
        for (std::size_t v = 0; v < static_cast<std::size_t>(n); ++v)
          key[v] += gens[i].exp(v);
      fibers[key].push_back(pick);
      std::size_t i = pick.size();
      while (i > 0 && pick[i - 1] == N - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < pick.size(); ++j) pick[j] = pick[i - 1];
    }
    for (auto& [key, fiber] : fibers) {
      if (fiber.size() < 2) continue;
      // union-find over the fiber via shared generator indices
      std::vector<std::size_t> parent(fiber.size());
      std::iota(parent.begin(), parent.end(), 0);
      std::function<std::size_t(std::size_t)> find = [&](std::size_t a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
      };
      std::map<std::size_t, std::size_t> anchor;  // generator index -> node
      for (std::size_t node = 0; node < fiber.size(); ++node)
        for (std::size_t gi : fiber[node]) {
          auto [it, fresh] = anchor.emplace(gi, node);
          if (!fresh) parent[find(node)] = find(it->second);
        }
      std::map<std::size_t, std::size_t> rep;  // component root -> first node
      for (std::size_t node = 0; node < fiber.size(); ++node)
        rep.emplace(find(node), node);
      if (rep.size() < 2) continue;
      out.kernel_mingens_by_degree[static_cast<std::size_t>(k)] +=
          static_cast<int64_t>(rep.size()) - 1;
      auto to_mono = [&](const std::vector<std::size_t>& multiset) {
        std::vector<int32_t> e(N, 0);
        for (std::size_t gi : multiset) e[gi] += 1;
        return Monomial(std::move(e));
      };
      auto it = rep.begin();
      Monomial head = to_mono(fiber[it->second]);
      for (++it; it != rep.end(); ++it)
        kernel_gens.push_back(monomial_poly(T, head) -
                              monomial_poly(T, to_mono(fiber[it->second])));
    }
  }
  std::vector<Polynomial> targets;
  for (const auto& g : gens) targets.push_back(monomial_poly(amb, g));
  out.pres = SubalgebraPresentation{std::move(targets), T,
                                    make_ideal(T, std::move(kernel_gens))};
  return out;
}

SubalgebraPresentation diagonal_subalgebra(const QuotientRing& R, int64_t c1,
                                           int64_t c2) {
  if (R.ambient()->grading_rows() != 2)
    throw std::invalid_argument("diagonal needs a Z^2 graded ring");
  std::vector<Polynomial> targets;
  for (const Monomial& m : R.std_basis_multi({c1, c2}))
    targets.push_back(monomial_poly(R.ambient(), m));
  if (targets.empty())
    throw std::invalid_argument("empty graded piece cannot generate");
  std::vector<Multidegree> mdegs(targets.size(), Multidegree{c1, c2});
  return presentation_from_targets(R, targets, mdegs);
}

QuotientRing rees_ci_presentation(const std::vector<Polynomial>& f) {
  if (f.empty()) throw std::invalid_argument("empty sequence");
  const RingPtr amb = f[0].ring();
  if (amb->has_fine_grading())
    throw std::invalid_argument("base ring must carry the standard grading only");
  const int64_t d = f[0].is_zero() ? 0 : f[0].degree();
  for (const auto& g : f)
    if (g.is_zero() || !g.is_homogeneous() || g.degree() != d ||
        !g.ring()->same_as(*amb))
      throw std::invalid_argument("need equal-degree forms in one ring");
  // regular sequence certificate: unreduced numerator of S/(f) must be
  // (1 - z^d)^r exactly
  {
    HilbertSeries H = hilbert_series(QuotientRing(
        make_ideal(amb, std::vector<Polynomial>(f.begin(), f.end()))));
    ZPoly expect = {1};
    ZPoly factor(static_cast<std::size_t>(d) + 1, 0);
    factor[0] = 1;
    factor[static_cast<std::size_t>(d)] = -1;
    for (std::size_t i = 0; i < f.size(); ++i) expect = zp_mul(expect, factor);
    ZPoly got = H.numerator_unreduced;
    zp_trim(got);
    zp_trim(expect);
    if (got != expect)
      throw std::invalid_argument("not a regular sequence (series mismatch)");
  }
  const std::size_t n = amb->nvars(), r = f.size();
  std::vector<std::string> names = amb->var_names();
  std::vector<std::string> ynames = fresh_names(amb, "y", r, 1);
  names.insert(names.end(), ynames.begin(), ynames.end());
  std::vector<Multidegree> mdegs;
  for (std::size_t i = 0; i < n; ++i) mdegs.push_back({1, 0});
  for (std::size_t i = 0; i < r; ++i) mdegs.push_back({0, 1});
  RingPtr big = make_ring(amb->field(), names, MonomialOrder::degrevlex(), mdegs);
  auto lift = [&](const Polynomial& g) {
    std::vector<Term> ts;
    for (const Term& t : g.terms()) {
      std::vector<int32_t> e(n + r, 0);
      for (std::size_t v = 0; v < n; ++v) e[v] = t.mono.exp(v);
      ts.push_back(Term{t.coeff, Monomial(std::move(e))});
    }
    return Polynomial(big, std::move(ts));
  };
  std::vector<Polynomial> minors;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) {
      Polynomial yi = Polynomial::variable(big, n + i);
      Polynomial yj = Polynomial::variable(big, n + j);
      minors.push_back(yi * lift(f[j]) - yj * lift(f[i]));
    }
  return QuotientRing(make_ideal(big, std::move(minors)));
}

CiLift ci_lift(const QuotientRing& R) {
  const std::vector<Polynomial>& q = R.defining_ideal().gens;
  const RingPtr amb = R.ambient();
  if (q.empty()) throw std::invalid_argument("need a nonzero ideal of quadrics");
  for (const auto& g : q)
    if (g.is_zero() || !g.is_homogeneous() || g.degree() != 2)
      throw std::invalid_argument("defining ideal must consist of quadrics");
  const std::size_t m = q.size(), n = amb->nvars();
  {
    HilbertSeries H = hilbert_series(R);
    ZPoly expect = {1};
    for (std::size_t i = 0; i < m; ++i) expect = zp_mul(expect, ZPoly{1, 0, -1});
    ZPoly got = H.numerator_unreduced;
    zp_trim(got);
    zp_trim(expect);
    if (got != expect)
      throw std::invalid_argument("quadrics are not a regular sequence");
  }
  std::vector<std::string> ynames = fresh_names(amb, "y", m, 1);
  std::vector<std::string> names = ynames;
  for (const auto& s : amb->var_names()) names.push_back(s);
  MonomialOrder order = MonomialOrder::lex();
  RingPtr big = make_ring(amb->field(), names, order);
  auto lift = [&](const Polynomial& g) {
    std::vector<Term> ts;
    for (const Term& t : g.terms()) {
      std::vector<int32_t> e(m + n, 0);
      for (std::size_t v = 0; v < n; ++v) e[m + v] = t.mono.exp(v);
      ts.push_back(Term{t.coeff, Monomial(std::move(e))});
    }
    return Polynomial(big, std::move(ts));
  };
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < m; ++i) {
    Polynomial yi = Polynomial::variable(big, i);
    gens.push_back(yi * yi + lift(q[i]));
  }
  Ideal J = make_ideal(big, gens);
  // certificate: the y-first lex initial ideal is exactly (y_1^2 .. y_m^2)
  GroebnerBasis G = reduced_groebner_basis(J);
  std::vector<Monomial> lms = G.leading_monomials();
  if (lms.size() != m) throw std::logic_error("lift initial ideal has wrong size");
  for (const auto& lm : lms) {
    bool ok = false;
    for (std::size_t i = 0; i < m; ++i)
      if (lm == Monomial::variable(m + n, i, 2)) ok = true;
    if (!ok) throw std::logic_error("lift initial ideal is not the expected one");
  }
  QuotientRing A(J);
  CiLift out{A, std::move(ynames), order, hilbert_series(A)};
  HilbertSeries base = hilbert_series(R);
  if (out.h_check.numerator != base.numerator ||
      out.h_check.denominator_exponent != base.denominator_exponent + static_cast<int64_t>(m))
    throw std::logic_error("lift does not preserve the h-polynomial");
  return out;
}

bool cs_monomial_in_J(const Monomial& p, int64_t m, int64_t n) {
  int64_t rows = 0, sum = 0;
  for (int64_t i = 0; i < m; ++i) {
    int64_t mi = 0;
    for (int64_t j = 0; j < n; ++j)
      if (p.exp(static_cast<std::size_t>(i * n + j)) > 0) mi = j + 1;
    if (mi > 0) {
      ++rows;
      sum += mi;
    }
  }
  return rows > 0 && sum >= n + rows;
}

CartwrightSturmfelsCheck cartwright_sturmfels_check(int64_t m, int64_t n,
                                                    int64_t box_side) {
  if (m < 1 || n < 1 || box_side < 0) throw std::invalid_argument("need m, n >= 1");
  CartwrightSturmfelsCheck out;
  out.m = m;
  out.n = n;
  std::vector<std::string> names;
  std::vector<Multidegree> mdegs;
  for (int64_t i = 1; i <= m; ++i)
    for (int64_t j = 1; j <= n; ++j) {
      names.push_back("t" + std::to_string(i) + std::to_string(j));
      Multidegree a(static_cast<std::size_t>(m), 0);
      a[static_cast<std::size_t>(i - 1)] = 1;
      mdegs.push_back(std::move(a));
    }
  RingPtr T = make_ring(Field::rationals(), names, MonomialOrder::degrevlex(), mdegs);
  auto var = [&](int64_t i, int64_t j) {
    return Polynomial::variable(T, static_cast<std::size_t>(i * n + j));
  };
  std::vector<Polynomial> minors;
  for (int64_t i = 0; i < m; ++i)
    for (int64_t k = i + 1; k < m; ++k)
      for (int64_t j = 0; j < n; ++j)
        for (int64_t l = j + 1; l < n; ++l)
          minors.push_back(var(i, j) * var(k, l) - var(i, l) * var(k, j));
  QuotientRing segre(make_ideal(T, minors));

  // J: entries from strictly increasing rows, column labels summing to at
  // least n + (number of rows used)
  std::vector<Polynomial> jgens;
  for (int64_t mask = 1; mask < (1 << m); ++mask) {
    std::vector<int64_t> rows;
    for (int64_t i = 0; i < m; ++i)
      if (mask & (1 << i)) rows.push_back(i);
    const int64_t k = static_cast<int64_t>(rows.size());
    std::vector<int64_t> cols(rows.size(), 0);
    while (true) {
      int64_t sum = 0;
      for (int64_t c : cols) sum += c + 1;
      if (sum >= n + k) {
        std::vector<int32_t> e(static_cast<std::size_t>(m * n), 0);
        for (std::size_t idx = 0; idx < rows.size(); ++idx)
          e[static_cast<std::size_t>(rows[idx] * n + cols[idx])] += 1;
        jgens.push_back(monomial_poly(T, Monomial(std::move(e))));
      }
      std::size_t i = cols.size();
      while (i > 0 && cols[i - 1] == n - 1) --i;
      if (i == 0) break;
      ++cols[i - 1];
      for (std::size_t j = i; j < cols.size(); ++j) cols[j] = 0;
    }
  }
  QuotientRing byJ(make_ideal(T, jgens));

  std::vector<int64_t> a(static_cast<std::size_t>(m), 0);
  while (true) {
    Multidegree md(a.begin(), a.end());
    int64_t lhs = multigraded_hilbert_function(segre, md);
    int64_t rhs = multigraded_hilbert_function(byJ, md);
    int64_t total = std::accumulate(a.begin(), a.end(), int64_t{0});
    mpz_class formula = binomial(n - 1 + total, n - 1);
    ++out.points_checked;
    if (lhs != rhs || formula != lhs) {
      if (lhs != rhs) out.equal = false;
      if (formula != lhs || formula != rhs) out.closed_formula = false;
      if (!out.first_mismatch) out.first_mismatch = md;
    }
    std::size_t i = a.size();
    while (i > 0 && a[i - 1] == box_side) --i;
    if (i == 0) break;
    ++a[i - 1];
    for (std::size_t j = i; j < a.size(); ++j) a[j] = 0;
  }
  return out;
}

}  // namespace koszul
