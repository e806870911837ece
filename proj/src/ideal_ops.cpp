#include "koszul/ideal_ops.hpp"

#include <algorithm>
#include <set>

namespace koszul {

namespace {

// restriction of a polynomial supported on kept variables; kept is ascending
Polynomial restrict_to(const Polynomial& f, const RingPtr& sub, const std::vector<int>& kept) {
  std::vector<Term> ts;
  ts.reserve(f.nterms());
  for (const auto& t : f.terms()) {
    std::vector<int32_t> e(kept.size());
    for (std::size_t k = 0; k < kept.size(); ++k) e[k] = t.mono.exp(kept[k]);
    ts.push_back(Term{t.coeff, Monomial(std::move(e))});
  }
  return Polynomial(sub, std::move(ts));
}

bool supported_on(const Monomial& m, const std::vector<char>& allowed) {
  for (std::size_t i = 0; i < m.nvars(); ++i)
    if (m.exp(i) > 0 && !allowed[i]) return false;
  return true;
}

bool poly_supported_on(const Polynomial& f, const std::vector<char>& allowed) {
  for (const auto& t : f.terms())
    if (!supported_on(t.mono, allowed)) return false;
  return true;
}

}  // namespace

EliminationResult eliminate(const Ideal& I, std::vector<int> keep_indices) {
  const RingPtr& R = I.ring;
  std::sort(keep_indices.begin(), keep_indices.end());
  keep_indices.erase(std::unique(keep_indices.begin(), keep_indices.end()), keep_indices.end());
  std::vector<char> kept_mask(R->nvars(), 0);
  for (int i : keep_indices) {
    if (i < 0 || static_cast<std::size_t>(i) >= R->nvars())
      throw std::invalid_argument("eliminate: variable index out of range");
    kept_mask[i] = 1;
  }
  std::vector<char> elim_mask(R->nvars());
  for (std::size_t i = 0; i < R->nvars(); ++i) elim_mask[i] = !kept_mask[i];

  GroebnerBasis G = reduced_groebner_basis(I, MonomialOrder::block_elim(elim_mask));

  std::vector<std::string> sub_names;
  std::vector<Multidegree> sub_mdegs;
  for (int i : keep_indices) {
    sub_names.push_back(R->var_names()[i]);
    if (R->has_fine_grading()) sub_mdegs.push_back(R->var_multidegrees()[i]);
  }
  RingPtr sub = make_ring(R->field(), sub_names, MonomialOrder::degrevlex(), sub_mdegs);

  EliminationResult out;
  out.subring = sub;
  out.kept = keep_indices;
  out.basis.ring = sub;
  for (const auto& g : G.elems)
    if (poly_supported_on(g, kept_mask)) out.basis.elems.push_back(restrict_to(g, sub, keep_indices));
  // the block order restricted to the kept tail is degrevlex in the original
  // variable sequence, which is the subring's active order; elements are
  // already reduced, so only the sort order needs refreshing
  std::sort(out.basis.elems.begin(), out.basis.elems.end(),
            [&](const Polynomial& a, const Polynomial& b) {
              return monomial_compare(a.leading_monomial(), b.leading_monomial(), sub->order()) < 0;
            });
  return out;
}

KernelResult algebra_map_kernel(const std::vector<Polynomial>& targets,
                                const std::vector<std::string>& source_names,
                                const std::vector<Multidegree>& source_multidegrees,
                                const Ideal* modulus) {
  if (targets.empty()) throw std::invalid_argument("algebra map needs at least one target");
  if (source_names.size() != targets.size())
    throw std::invalid_argument("one source name per target required");
  const RingPtr amb = targets[0].ring();
  for (const auto& f : targets) {
    if (!f.ring()->same_as(*amb)) throw std::invalid_argument("targets live in different rings");
    if (f.is_zero() || !f.is_homogeneous())
      throw std::invalid_argument("inhomogeneous target expression");
    if (amb->has_fine_grading() && !f.is_multihomogeneous())
      throw std::invalid_argument("target not homogeneous for the ambient grading");
  }
  if (modulus && !modulus->ring->same_as(*amb))
    throw std::invalid_argument("modulus ideal lives in a different ring");

  std::size_t m = source_names.size(), n = amb->nvars();
  // big ring [source vars, ambient vars], ambient block eliminated
  std::vector<std::string> big_names = source_names;
  for (const auto& s : amb->var_names()) {
    if (std::find(big_names.begin(), big_names.end(), s) != big_names.end())
      throw std::invalid_argument("source variable name collides with ambient: '" + s + "'");
    big_names.push_back(s);
  }
  std::vector<char> elim(m + n, 0);
  for (std::size_t i = m; i < m + n; ++i) elim[i] = 1;
  RingPtr big = make_ring(amb->field(), big_names, MonomialOrder::block_elim(elim));

  auto lift_ambient = [&](const Polynomial& f) {
    std::vector<Term> ts;
    for (const auto& t : f.terms()) {
      std::vector<int32_t> e(m + n, 0);
      for (std::size_t i = 0; i < n; ++i) e[m + i] = t.mono.exp(i);
      ts.push_back(Term{t.coeff, Monomial(std::move(e))});
    }
    return Polynomial(big, std::move(ts));
  };

  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < m; ++i)
    gens.push_back(Polynomial::variable(big, i) - lift_ambient(targets[i]));
  if (modulus)
    for (const auto& g : modulus->gens)
      if (!g.is_zero()) gens.push_back(lift_ambient(g));

  GroebnerBasis G = reduced_groebner_basis(make_ideal(big, gens), big->order());

  RingPtr source = make_ring(amb->field(), source_names, MonomialOrder::degrevlex(),
                             source_multidegrees);
  std::vector<char> keep_mask(m + n, 0);
  std::vector<int> keep_idx;
  for (std::size_t i = 0; i < m; ++i) {
    keep_mask[i] = 1;
    keep_idx.push_back(static_cast<int>(i));
  }
  KernelResult out;
  out.source = source;
  out.kernel.ring = source;
  for (const auto& g : G.elems)
    if (poly_supported_on(g, keep_mask))
      out.kernel.elems.push_back(restrict_to(g, source, keep_idx));
  std::sort(out.kernel.elems.begin(), out.kernel.elems.end(),
            [&](const Polynomial& a, const Polynomial& b) {
              return monomial_compare(a.leading_monomial(), b.leading_monomial(), source->order()) < 0;
            });
  return out;
}

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
  if (!I.ring->same_as(*J.ring)) throw std::invalid_argument("ring mismatch in ideal sum");
  std::vector<Polynomial> gens = I.gens;
  for (const auto& g : J.gens) gens.push_back(g.converted(I.ring));
  return Ideal{I.ring, std::move(gens)};
}

Ideal ideal_intersection(const Ideal& I, const Ideal& J) {
  if (!I.ring->same_as(*J.ring)) throw std::invalid_argument("ring mismatch in ideal intersection");
  const RingPtr& R = I.ring;
  std::size_t n = R->nvars();
  // tag construction: (t*I + (1-t)*J) ∩ K[x]; the tag rides along ungraded
  std::vector<std::string> names = R->var_names();
  std::string tag = "t_";
  while (R->var_index(tag) >= 0) tag += "_";
  names.push_back(tag);
  std::vector<char> elim(n + 1, 0);
  elim[n] = 1;
  RingPtr big = make_ring(R->field(), names, MonomialOrder::block_elim(elim));

  auto lift = [&](const Polynomial& f) {
    std::vector<Term> ts;
    for (const auto& t : f.terms()) {
      std::vector<int32_t> e = t.mono.exps();
      e.push_back(0);
      ts.push_back(Term{t.coeff, Monomial(std::move(e))});
    }
    return Polynomial(big, std::move(ts));
  };
  Polynomial t = Polynomial::variable(big, n);
  Polynomial one = Polynomial::constant(big, 1);
  std::vector<Polynomial> gens;
  for (const auto& f : I.gens)
    if (!f.is_zero()) gens.push_back(t * lift(f));
  for (const auto& g : J.gens)
    if (!g.is_zero()) gens.push_back((one - t) * lift(g));

  GroebnerBasis G = reduced_groebner_basis(make_ideal(big, gens), big->order());
  std::vector<char> keep(n + 1, 1);
  keep[n] = 0;
  std::vector<int> keep_idx(n);
  for (std::size_t i = 0; i < n; ++i) keep_idx[i] = static_cast<int>(i);
  std::vector<Polynomial> result;
  for (const auto& g : G.elems)
    if (poly_supported_on(g, keep)) result.push_back(restrict_to(g, R, keep_idx));
  // canonical presentation under the ring's active order
  GroebnerBasis canon = reduced_groebner_basis(make_ideal(R, result), R->order());
  return Ideal{R, canon.elems};
}

Ideal ideal_colon(const Ideal& J, const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("colon by zero element");
  if (!f.ring()->same_as(*J.ring)) throw std::invalid_argument("ring mismatch in ideal colon");
  Ideal principal{J.ring, {f.converted(J.ring)}};
  Ideal meet = ideal_intersection(J, principal);
  std::vector<Polynomial> gens;
  for (const auto& g : meet.gens)
    if (!g.is_zero()) gens.push_back(exact_divide(g, f.converted(J.ring)));
  GroebnerBasis canon = reduced_groebner_basis(make_ideal(J.ring, gens), J.ring->order());
  return Ideal{J.ring, canon.elems};
}

Ideal ideal_colon(const Ideal& J, const Ideal& I) {
  if (!I.ring->same_as(*J.ring)) throw std::invalid_argument("ring mismatch in ideal colon");
  bool nonzero = false;
  Ideal acc{J.ring, {}};
  for (const auto& f : I.gens) {
    if (f.is_zero()) continue;
    Ideal c = ideal_colon(J, f);
    acc = nonzero ? ideal_intersection(acc, c) : c;
    nonzero = true;
  }
  if (!nonzero) {
    // J : (0) is the whole ring
    return Ideal{J.ring, {Polynomial::constant(J.ring, 1)}};
  }
  return acc;
}

bool ideal_equal(const Ideal& I, const Ideal& J) {
  if (!I.ring->same_as(*J.ring)) throw std::invalid_argument("ring mismatch in ideal comparison");
  GroebnerBasis A = reduced_groebner_basis(I, I.ring->order());
  GroebnerBasis B = reduced_groebner_basis(J, I.ring->order());
  if (A.elems.size() != B.elems.size()) return false;
  for (std::size_t i = 0; i < A.elems.size(); ++i)
    if (A.elems[i] != B.elems[i]) return false;
  return true;
}

bool ideal_contains(const Ideal& I, const Polynomial& f) {
  GroebnerBasis G = reduced_groebner_basis(I, I.ring->order());
  return in_ideal(f.converted(G.ring), G);
}

}  // namespace koszul
