#include "koszul/koszulness.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "koszul/linalg.hpp"

namespace koszul {

namespace {

// lift an ideal of R = S/I0 given by polynomial representatives
Ideal lifted(const QuotientRing& Q, const std::vector<Polynomial>& gens) {
  std::vector<Polynomial> all = Q.defining_ideal().gens;
  for (const auto& g : gens)
    if (!g.is_zero()) all.push_back(g);
  return make_ideal(Q.ambient(), std::move(all));
}

}  // namespace

std::vector<int64_t> minimal_generator_degrees(const Ideal& I) {
  std::vector<Polynomial> gens;
  for (const auto& g : I.gens)
    if (!g.is_zero()) gens.push_back(g);
  if (gens.empty()) return {};
  QuotientRing amb = QuotientRing::polynomial_ring(I.ring);
  int64_t dmin = gens[0].degree(), dmax = gens[0].degree();
  for (const auto& g : gens) {
    if (!g.is_homogeneous())
      throw std::domain_error("generators must be homogeneous");
    dmin = std::min(dmin, g.degree());
    dmax = std::max(dmax, g.degree());
  }
  std::vector<int64_t> result;
  for (int64_t d = dmin; d <= dmax; ++d) {
    RowSpace rs(amb.dim_at(d), I.ring->field());
    // multiples of lower-degree generators span the part already reachable
    for (const auto& g : gens) {
      if (g.degree() >= d) continue;
      for (const Monomial& m : amb.std_basis(d - g.degree())) {
        Polynomial prod = g.term_multiple(mpq_class(1), m);
        rs.insert(amb.coords(prod, d));
      }
    }
    for (const auto& g : gens) {
      if (g.degree() != d) continue;
      if (rs.insert(amb.coords(g, d))) result.push_back(d);
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

QuadraticityReport is_quadratic(const QuotientRing& Q) {
  QuadraticityReport rep;
  rep.min_gen_degrees = minimal_generator_degrees(Q.defining_ideal());
  for (int64_t d : rep.min_gen_degrees)
    if (d != 2) rep.quadratic = false;
  return rep;
}

bool verify_g_quadratic(const QuotientRing& Q, const GQuadraticCertificate& c) {
  const RingPtr& ring = Q.ambient();
  std::size_t n = ring->nvars();
  RingPtr reordered = with_order(ring, c.order);
  std::vector<Polynomial> gens;
  if (c.change.empty()) {
    for (const auto& g : Q.defining_ideal().gens)
      gens.push_back(g.converted(reordered));
  } else {
    if (c.change.size() != n) return false;
    QMat m(n, QVec(n, mpq_class(0)));
    for (std::size_t i = 0; i < n; ++i) {
      if (c.change[i].size() != n) return false;
      for (std::size_t j = 0; j < n; ++j) m[i][j] = c.change[i][j];
    }
    if (matrix_rank(m, ring->field()) != n) return false;
    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < n; ++i) {
      Polynomial img(reordered);
      for (std::size_t j = 0; j < n; ++j)
        if (c.change[i][j] != 0)
          img = img + Polynomial::variable(reordered, j).scaled(c.change[i][j]);
      images.push_back(img);
    }
    for (const auto& g : Q.defining_ideal().gens)
      gens.push_back(substitute(g, reordered, images));
  }
  GroebnerBasis G = reduced_groebner_basis(make_ideal(reordered, gens));
  for (const Monomial& m : G.leading_monomials())
    if (m.degree() != 2) return false;
  return true;
}

GQuadraticSearch g_quadratic_search(const QuotientRing& Q, int random_changes,
                                    uint64_t seed) {
  GQuadraticSearch out;
  if (!is_quadratic(Q).quadratic) return out;
  std::size_t n = Q.ambient()->nvars();
  std::vector<int> identity(n), reversed(n);
  for (std::size_t i = 0; i < n; ++i) {
    identity[i] = static_cast<int>(i);
    reversed[i] = static_cast<int>(n - 1 - i);
  }
  std::vector<int> rot = identity;
  if (n > 1) std::rotate(rot.begin(), rot.begin() + 1, rot.end());
  std::vector<MonomialOrder> orders;
  for (const auto& perm : {identity, reversed}) {
    MonomialOrder o1 = MonomialOrder::degrevlex();
    o1.perm = perm;
    MonomialOrder o2 = MonomialOrder::deglex();
    o2.perm = perm;
    MonomialOrder o3 = MonomialOrder::lex();
    o3.perm = perm;
    orders.push_back(o1);
    orders.push_back(o2);
    orders.push_back(o3);
  }
  {
    MonomialOrder o1 = MonomialOrder::degrevlex();
    o1.perm = rot;
    MonomialOrder o2 = MonomialOrder::lex();
    o2.perm = rot;
    orders.push_back(o1);
    orders.push_back(o2);
  }
  for (const auto& ord : orders) {
    ++out.orders_tried;
    GQuadraticCertificate cert{ord, {}};
    if (verify_g_quadratic(Q, cert)) {
      out.certificate = cert;
      return out;
    }
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-2, 2);
  const Field& k = Q.ambient()->field();
  // budget counts invertible changes actually tested; singular draws are
  // redrawn (capped so a degenerate entry range cannot loop forever)
  long draws_left = 20L * random_changes;
  while (out.changes_tried < random_changes && draws_left-- > 0) {
    std::vector<std::vector<mpq_class>> change(n, std::vector<mpq_class>(n));
    QMat m(n, QVec(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        change[i][j] = k.from_long(entry(rng));
        m[i][j] = change[i][j];
      }
    if (matrix_rank(m, k) != n) continue;
    ++out.changes_tried;
    GQuadraticCertificate cert{MonomialOrder::degrevlex(), change};
    if (verify_g_quadratic(Q, cert)) {
      out.certificate = cert;
      return out;
    }
  }
  return out;
}

FiltrationCheck verify_koszul_filtration(const QuotientRing& Q,
                                         const KoszulFiltration& F) {
  FiltrationCheck out;
  auto fail = [&](std::string msg) {
    out.failure = std::move(msg);
    return out;
  };
  const std::size_t count = F.ideals.size();
  for (const auto& [idx, w] : F.witnesses)
    if (idx >= count || w.smaller >= count || w.colon >= count)
      throw std::out_of_range("filtration witness references an absent ideal");
  for (std::size_t i = 0; i < count; ++i)
    for (const auto& g : F.ideals[i])
      if (g.is_zero() || !g.is_homogeneous() || g.degree() != 1)
        return fail("ideal #" + std::to_string(i) +
                    " has a generator that is not a linear form");

  Ideal zero_lift = lifted(Q, {});
  std::vector<char> is_zero_ideal(count, 0);
  bool has_zero = false, has_max = false;
  std::vector<Polynomial> vars;
  for (std::size_t v = 0; v < Q.nvars(); ++v)
    vars.push_back(Polynomial::variable(Q.ambient(), v));
  Ideal max_lift = make_ideal(Q.ambient(), vars);
  for (std::size_t i = 0; i < count; ++i) {
    Ideal li = lifted(Q, F.ideals[i]);
    if (ideal_equal(li, zero_lift)) {
      is_zero_ideal[i] = 1;
      has_zero = true;
    }
    if (ideal_equal(li, max_lift)) has_max = true;
  }
  if (!has_zero) return fail("the zero ideal is missing");
  if (!has_max) return fail("the maximal ideal is missing");

  // every nonzero member needs a witness whose chain reaches the zero ideal
  for (std::size_t i = 0; i < count; ++i) {
    if (is_zero_ideal[i]) continue;
    if (!F.witnesses.count(i))
      return fail("ideal #" + std::to_string(i) + " has no witness");
  }
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t cur = i;
    std::size_t steps = 0;
    while (!is_zero_ideal[cur]) {
      cur = F.witnesses.at(cur).smaller;
      if (++steps > count)
        return fail("witness chain from ideal #" + std::to_string(i) +
                    " never reaches the zero ideal");
    }
  }

  for (const auto& [idx, w] : F.witnesses) {
    if (is_zero_ideal[idx]) continue;
    const std::string tag = "ideal #" + std::to_string(idx) + ": ";
    if (w.cyclic_gen.is_zero() || !w.cyclic_gen.is_homogeneous() ||
        w.cyclic_gen.degree() != 1)
      return fail(tag + "cyclic generator is not a linear form");
    Ideal li = lifted(Q, F.ideals[idx]);
    Ideal lj = lifted(Q, F.ideals[w.smaller]);
    GroebnerBasis gj = reduced_groebner_basis(lj);
    for (const auto& g : F.ideals[w.smaller])
      if (!in_ideal(g, reduced_groebner_basis(li)))
        return fail(tag + "witness ideal is not contained in it");
    if (in_ideal(w.cyclic_gen, gj))
      return fail(tag + "cyclic generator already lies in the witness ideal");
    std::vector<Polynomial> joined = F.ideals[w.smaller];
    joined.push_back(w.cyclic_gen);
    if (!ideal_equal(lifted(Q, joined), li))
      return fail(tag + "witness ideal plus cyclic generator does not give it");
    Ideal colon = ideal_colon(lj, w.cyclic_gen);
    if (!ideal_equal(colon, lifted(Q, F.ideals[w.colon])))
      return fail(tag + "colon does not match the expected member");
  }
  out.verified = true;
  return out;
}

StronglyKoszulResult strongly_koszul_check(const QuotientRing& Q,
                                           const std::vector<Polynomial>& X) {
  const std::size_t m = X.size();
  if (m > 16) throw std::invalid_argument("basis too large for subset search");
  if (m != Q.dim_at(1))
    throw std::invalid_argument("candidate set has the wrong size for a basis");
  {
    RowSpace rs(Q.dim_at(1), Q.ambient()->field());
    for (const auto& x : X) {
      if (x.is_zero() || !x.is_homogeneous() || x.degree() != 1)
        throw std::invalid_argument("basis elements must be linear forms");
      if (!rs.insert(Q.coords(x, 1)))
        throw std::invalid_argument("candidate set is linearly dependent");
    }
  }
  StronglyKoszulResult out;
  for (std::uint64_t mask = 0; mask + 1 < (1ull << m); ++mask) {
    std::vector<Polynomial> Y;
    std::vector<std::size_t> Yidx;
    for (std::size_t i = 0; i < m; ++i)
      if (mask & (1ull << i)) {
        Y.push_back(X[i]);
        Yidx.push_back(i);
      }
    Ideal ly = lifted(Q, Y);
    for (std::size_t i = 0; i < m; ++i) {
      if (mask & (1ull << i)) continue;
      ++out.pairs_checked;
      Ideal colon = ideal_colon(ly, X[i]);
      GroebnerBasis gc = reduced_groebner_basis(colon);
      std::vector<Polynomial> Z;
      for (const auto& z : X)
        if (in_ideal(z, gc)) Z.push_back(z);
      if (!ideal_equal(colon, lifted(Q, Z))) {
        out.counterexample = {Yidx, i};
        return out;
      }
    }
  }
  out.verified = true;
  return out;
}

std::vector<Monomial> canonical_monomial_ideal(std::vector<Monomial> gens) {
  if (gens.empty()) return gens;
  const std::size_t n = gens[0].nvars();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::vector<std::vector<int32_t>> best;
  bool first = true;
  do {
    std::vector<std::vector<int32_t>> image;
    image.reserve(gens.size());
    for (const auto& g : gens) {
      std::vector<int32_t> e(n);
      for (std::size_t v = 0; v < n; ++v) e[perm[v]] = g.exp(v);
      image.push_back(std::move(e));
    }
    std::sort(image.begin(), image.end());
    if (first || image < best) {
      best = std::move(image);
      first = false;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<Monomial> out;
  out.reserve(best.size());
  for (auto& e : best) out.emplace_back(std::move(e));
  return out;
}

LGObstructionResult lg_obstruction_search(const ZPoly& h,
                                          int64_t max_extra_vars) {
  ZPoly hh = h;
  zp_trim(hh);
  if (hh.empty() || hh[0] != 1)
    throw std::invalid_argument("h-polynomial must have constant term 1");
  {
    mpz_class at_one = 0;
    for (const auto& c : hh) at_one += c;
    if (at_one == 0)
      throw std::invalid_argument("h-polynomial is not in lowest terms");
  }
  if (max_extra_vars < 0)
    throw std::invalid_argument("extra variable count must be nonnegative");
  LGObstructionResult out;
  out.h = hh;
  mpz_class h1z = hh.size() > 1 ? hh[1] : 0;
  mpz_class h2z = hh.size() > 2 ? hh[2] : 0;
  if (h1z < 0 || !h1z.fits_sint_p())
    throw std::invalid_argument("linear coefficient is not a valid codimension");
  out.codim = h1z.get_si();
  if (out.codim > 8) throw std::invalid_argument("codimension too large to enumerate");
  mpz_class qz = binomial(out.codim + 1, 2) - h2z;
  if (qz < 0)
    throw std::invalid_argument(
        "quadratic coefficient exceeds what any quadric count allows");
  out.quadric_count = qz.get_si();
  out.max_extra_vars = max_extra_vars;

  // a codim-c quadratic monomial quotient with h-polynomial h has unreduced
  // numerator h * (1-z)^c over any number of variables
  ZPoly target = hh;
  {
    ZPoly one_minus_z = {1, -1};
    for (int64_t t = 0; t < out.codim; ++t) target = zp_mul(target, one_minus_z);
  }
  for (int64_t k = 0; k <= max_extra_vars; ++k) {
    std::vector<LGCandidate> found;
    const std::size_t n = static_cast<std::size_t>(out.codim + k);
    if (n > 9) throw std::invalid_argument("too many variables to canonicalize");
    // generator pool: quadrics v_i * v_j with i in the covering block
    std::vector<Monomial> pool;
    for (std::size_t i = 0; i < static_cast<std::size_t>(out.codim); ++i)
      for (std::size_t j = i; j < n; ++j) {
        std::vector<int32_t> e(n, 0);
        e[i] += 1;
        e[j] += 1;
        pool.emplace_back(std::move(e));
      }
    const std::size_t q = static_cast<std::size_t>(out.quadric_count);
    std::set<std::vector<std::vector<int32_t>>> seen;
    if (q > pool.size()) {
      out.per_extra.push_back(std::move(found));
      continue;
    }
    if (q == 0) {
      // only the empty ideal; it uses no variables at all
      if (n == 0 && target == ZPoly{1}) found.push_back(LGCandidate{0, {}});
      out.per_extra.push_back(std::move(found));
      continue;
    }
    std::vector<std::size_t> pick(q);
    for (std::size_t i = 0; i < q; ++i) pick[i] = i;
    while (true) {
      std::vector<Monomial> gens;
      uint64_t support = 0;
      for (std::size_t i : pick) {
        gens.push_back(pool[i]);
        support |= pool[i].mask();
      }
      if (support == ((n >= 64 ? 0 : (1ull << n)) - 1ull)) {
        ZPoly num = hilbert_numerator_monomial(gens, n);
        if (num == target) {
          std::vector<Monomial> canon = canonical_monomial_ideal(gens);
          std::vector<std::vector<int32_t>> key;
          for (const auto& g : canon) key.push_back(g.exps());
          if (seen.insert(key).second)
            found.push_back(LGCandidate{n, std::move(canon)});
        }
      }
      // next combination
      std::size_t i = q;
      while (i > 0 && pick[i - 1] == pool.size() - q + (i - 1)) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < q; ++j) pick[j] = pick[j - 1] + 1;
    }
    std::sort(found.begin(), found.end(),
              [](const LGCandidate& a, const LGCandidate& b) {
                std::vector<std::vector<int32_t>> ka, kb;
                for (const auto& g : a.gens) ka.push_back(g.exps());
                for (const auto& g : b.gens) kb.push_back(g.exps());
                return ka < kb;
              });
    out.per_extra.push_back(std::move(found));
  }
  return out;
}

KoszulWindowCertificate koszul_certificate_up_to(const QuotientRing& Q,
                                                 int64_t i_max,
                                                 int64_t deg_bound) {
  KoszulWindowCertificate out;
  out.table = betti_table_over_quotient(Q, i_max, deg_bound);
  out.first_off_diagonal = out.table.first_off_diagonal();
  out.diagonal = !out.first_off_diagonal.has_value();
  std::optional<mpq_class> rate;
  for (int64_t i = 1; i + 1 <= i_max; ++i) {
    std::optional<int64_t> t = out.table.t(i + 1);
    if (!t) continue;
    mpq_class r(*t - 1, i);
    r.canonicalize();
    if (!rate || r > *rate) rate = r;
  }
  out.rate_estimate = rate;
  return out;
}

SyzygyBoundChecks syzygy_bound_checks(const BettiTable& over_S, int64_t codim) {
  if (!over_S.complete)
    throw std::domain_error("syzygy bounds need a complete table");
  SyzygyBoundChecks out;
  std::optional<int64_t> pd = over_S.projective_dimension();
  if (!pd) throw std::domain_error("projective dimension unavailable");
  int64_t b1 = over_S.total_in_row(1);
  out.reg_le_pd = over_S.regularity() <= *pd;
  out.pd_le_first_totals = *pd <= b1;
  for (int64_t i = 0; i <= *pd; ++i) {
    std::optional<int64_t> ti = over_S.t(i);
    if (ti && *ti > 2 * i) out.slope = false;
    if (ti && *ti < 2 * i) {
      std::optional<int64_t> tn = over_S.t(i + 1);
      if (tn && *tn >= 2 * (i + 1)) out.slope_propagates = false;
    }
    if (i > codim && ti && *ti >= 2 * i) out.slope_past_codim = false;
    if (mpz_class(over_S.total_in_row(i)) > binomial(b1, i))
      out.binomial_totals = false;
  }
  return out;
}

DiagnosticReport full_report(const QuotientRing& Q, const ReportOptions& opt) {
  DiagnosticReport rep;
  rep.quadratic = is_quadratic(Q);
  HilbertSeries H = hilbert_series(Q);
  rep.numeric = series_obstructions(H, opt.series_truncation);
  rep.window = koszul_certificate_up_to(Q, opt.i_max, opt.deg_bound);
  if (opt.search_g_quadratic && rep.quadratic.quadratic)
    rep.g_search = g_quadratic_search(Q, opt.g_random_changes, opt.seed);
  if (opt.lg_max_extra_vars)
    rep.lg_search = lg_obstruction_search(H.numerator, *opt.lg_max_extra_vars);
  if (opt.filtration) rep.filtration = verify_koszul_filtration(Q, *opt.filtration);

  if (!rep.quadratic.quadratic) {
    rep.verdict = "not-koszul";
    rep.reason = "defining ideal needs minimal generators of degree other than 2";
  } else if (!rep.window.diagonal) {
    auto [i, j] = *rep.window.first_off_diagonal;
    rep.verdict = "not-koszul";
    rep.reason = "residue field has an off-diagonal Betti number at (" +
                 std::to_string(i) + ", " + std::to_string(j) + ")";
  } else if (rep.numeric.obstructed()) {
    rep.verdict = "not-koszul";
    rep.reason = "inverse series obstruction";
  } else if (Q.is_polynomial_ring()) {
    rep.verdict = "koszul";
    rep.reason = "zero defining ideal: polynomial rings are Koszul";
  } else if (rep.filtration && rep.filtration->verified) {
    rep.verdict = "koszul";
    rep.reason = "Koszul filtration verified";
  } else if (rep.g_search && rep.g_search->certificate) {
    rep.verdict = "koszul";
    rep.reason = "quadratic initial ideal found";
  } else {
    rep.verdict = "inconclusive";
    rep.reason = "diagonal table up to the window bounds proves nothing further";
  }
  bool certified = (rep.filtration && rep.filtration->verified) ||
                   (rep.g_search && rep.g_search->certificate);
  if (rep.verdict == "not-koszul" && certified)
    throw std::logic_error("contradictory certificates in one report");
  return rep;
}

}  // namespace koszul
