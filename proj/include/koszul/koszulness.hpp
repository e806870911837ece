#pragma once

#include <map>

#include "koszul/hilbert.hpp"
#include "koszul/ideal_ops.hpp"
#include "koszul/resolution_r.hpp"
#include "koszul/resolution_s.hpp"

namespace koszul {

// minimal homogeneous generator degrees of the defining ideal, extracted per
// degree by graded Nakayama (new generators modulo ambient multiples of the
// lower-degree ones)
struct QuadraticityReport {
  bool quadratic = true;                 // vacuously true for the zero ideal
  std::vector<int64_t> min_gen_degrees;  // ascending, with multiplicity
};
QuadraticityReport is_quadratic(const QuotientRing& Q);
std::vector<int64_t> minimal_generator_degrees(const Ideal& I);

// A coordinate system and order under which the defining ideal acquires a
// quadratic initial ideal. `change` (when nonempty) maps variable i to the
// linear form with coefficient row change[i]; the certificate is always
// re-verifiable by recomputing the basis.
struct GQuadraticCertificate {
  MonomialOrder order;
  std::vector<std::vector<mpq_class>> change;
};
bool verify_g_quadratic(const QuotientRing& Q, const GQuadraticCertificate& c);

// Budgeted search: a handful of standard orders, then seeded random
// invertible coordinate changes under degrevlex. Finding nothing proves
// nothing and is reported as inconclusive.
struct GQuadraticSearch {
  std::optional<GQuadraticCertificate> certificate;
  int64_t orders_tried = 0;
  int64_t changes_tried = 0;
};
GQuadraticSearch g_quadratic_search(const QuotientRing& Q,
                                    int random_changes = 0, uint64_t seed = 1);

// Family of ideals generated by linear forms, each nonzero member carrying a
// witness: a smaller member J with I = J + (cyclic_gen) whose colon J : I is
// again in the family. Verifying every witness certifies the ring Koszul.
struct FiltrationWitness {
  std::size_t smaller = 0;  // index of J
  Polynomial cyclic_gen;    // linear form x with I = J + (x)
  std::size_t colon = 0;    // index of the expected value of J : I
};
struct KoszulFiltration {
  std::vector<std::vector<Polynomial>> ideals;  // linear-form generators
  std::map<std::size_t, FiltrationWitness> witnesses;  // keyed by index of I
};
struct FiltrationCheck {
  bool verified = false;
  std::string failure;  // first failing condition, empty when verified
};
FiltrationCheck verify_koszul_filtration(const QuotientRing& Q,
                                         const KoszulFiltration& F);

// Exhaustive colon test over a basis X of the degree-1 component: for every
// Y subset of X and x outside Y, (Y) : x must be generated by the elements
// of X it contains. Success yields a Koszul filtration, hence Koszulness.
struct StronglyKoszulResult {
  bool verified = false;
  std::optional<std::pair<std::vector<std::size_t>, std::size_t>>
      counterexample;  // indices into X: (Y, x)
  int64_t pairs_checked = 0;
};
StronglyKoszulResult strongly_koszul_check(const QuotientRing& Q,
                                           const std::vector<Polynomial>& X);

// Quadratic monomial ideals achieving a prescribed h-polynomial, enumerated
// over codim + k variables for k = 0..max_extra_vars, one canonical
// representative per permutation class, every variable required to occur.
// Empty lists everywhere certify that no quotient with this h-polynomial is
// a linear-regular-sequence quotient of a monomial-quadric algebra.
struct LGCandidate {
  std::size_t nvars = 0;
  std::vector<Monomial> gens;  // canonical under variable permutation
};
struct LGObstructionResult {
  ZPoly h;
  int64_t codim = 0;
  int64_t quadric_count = 0;
  int64_t max_extra_vars = 0;
  std::vector<std::vector<LGCandidate>> per_extra;  // index = extra variables
  bool obstructed() const {
    for (const auto& v : per_extra)
      if (!v.empty()) return false;
    return true;
  }
};
LGObstructionResult lg_obstruction_search(const ZPoly& h,
                                          int64_t max_extra_vars);
// canonical form of a monomial generating set under variable permutation
std::vector<Monomial> canonical_monomial_ideal(std::vector<Monomial> gens);

// Window test of the defining property: the residue field's table over R must
// stay on the diagonal. Off-diagonal entries inside the window refute
// Koszulness; an all-diagonal window is necessary but not sufficient.
struct KoszulWindowCertificate {
  BettiTable table;  // K over R, exact for j <= deg_bound
  bool diagonal = true;
  std::optional<std::pair<int64_t, int64_t>> first_off_diagonal;
  std::optional<mpq_class> rate_estimate;  // max of (t_{i+1} - 1)/i seen
};
KoszulWindowCertificate koszul_certificate_up_to(const QuotientRing& Q,
                                                 int64_t i_max,
                                                 int64_t deg_bound);

// Empirical syzygy bounds for the table of R over the polynomial ring; all
// six hold when R is Koszul (the last two at conjecture strength). The table
// must be complete so that pd and every t_i are certain.
struct SyzygyBoundChecks {
  bool slope = true;                // t_i <= 2i
  bool reg_le_pd = true;            // regularity <= projective dimension
  bool slope_propagates = true;     // t_i < 2i forces t_{i+1} < 2(i+1)
  bool slope_past_codim = true;     // t_i < 2i once i > codim
  bool binomial_totals = true;      // beta_i <= C(beta_1, i)
  bool pd_le_first_totals = true;   // pd <= beta_1
  bool all() const {
    return slope && reg_le_pd && slope_propagates && slope_past_codim &&
           binomial_totals && pd_le_first_totals;
  }
};
SyzygyBoundChecks syzygy_bound_checks(const BettiTable& over_S, int64_t codim);

// One-stop diagnostic. The verdict respects the implication chain
// G-quadratic -> (linear-quotient of such) -> Koszul -> quadratic: positive
// verdicts come only from an unconditional certificate (filtration or
// quadratic initial ideal), negative ones from an exact witness.
struct ReportOptions {
  int64_t i_max = 4;
  int64_t deg_bound = 10;
  int64_t series_truncation = 12;
  bool search_g_quadratic = false;
  int g_random_changes = 0;
  uint64_t seed = 1;
  std::optional<int64_t> lg_max_extra_vars;
  const KoszulFiltration* filtration = nullptr;
};
struct DiagnosticReport {
  QuadraticityReport quadratic;
  ObstructionReport numeric;
  KoszulWindowCertificate window;
  std::optional<GQuadraticSearch> g_search;
  std::optional<LGObstructionResult> lg_search;
  std::optional<FiltrationCheck> filtration;
  std::string verdict;  // "koszul", "not-koszul", "inconclusive"
  std::string reason;
};
DiagnosticReport full_report(const QuotientRing& Q, const ReportOptions& opt = {});

}  // namespace koszul
