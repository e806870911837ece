#pragma once

#include <optional>
#include <string>

#include "koszul/quotient.hpp"

namespace koszul {

// dense integer polynomial in one variable z, index = degree
using ZPoly = std::vector<mpz_class>;

void zp_trim(ZPoly& p);
ZPoly zp_add(const ZPoly& a, const ZPoly& b);
ZPoly zp_sub(const ZPoly& a, const ZPoly& b);
ZPoly zp_mul(const ZPoly& a, const ZPoly& b);
ZPoly zp_at_minus_z(const ZPoly& a);
std::string zp_to_string(const ZPoly& p, const std::string& var = "z");
mpz_class binomial(int64_t n, int64_t k);

// Hilbert series numerator/(1-z)^denominator_exponent in lowest terms; the
// unreduced numerator over (1-z)^nvars is kept for Euler-characteristic
// cross-checks. For our standard graded quotients the reduced numerator is
// the h-polynomial and denominator_exponent the Krull dimension.
struct HilbertSeries {
  ZPoly numerator;
  int64_t denominator_exponent = 0;
  ZPoly numerator_unreduced;
  int64_t nvars = 0;

  mpz_class coefficient(int64_t d) const;  // dim of the graded piece
  const ZPoly& h_polynomial() const { return numerator; }
  int64_t dimension() const { return denominator_exponent; }
  std::string to_string() const;
  bool operator==(const HilbertSeries& o) const {
    return numerator == o.numerator && denominator_exponent == o.denominator_exponent;
  }
};

HilbertSeries make_series(ZPoly unreduced_numerator, int64_t nvars);

// numerator of K[x]/M over (1-z)^nvars for a monomial ideal M, by the
// pivot recursion N(M) = N(M + (x)) + z * N(M : x) with memoization
ZPoly hilbert_numerator_monomial(std::vector<Monomial> gens, std::size_t nvars);

HilbertSeries hilbert_series(const QuotientRing& Q);

// truncated power series with rational coefficients 0..order
struct SeriesTruncation {
  std::vector<mpq_class> c;

  int64_t order() const { return static_cast<int64_t>(c.size()) - 1; }
  static SeriesTruncation from_zpoly(const ZPoly& p, int64_t order);
  SeriesTruncation mul(const SeriesTruncation& o) const;
  SeriesTruncation inverse() const;  // needs c[0] != 0
  // truncation of the full series of H at z
  static SeriesTruncation of_series(const HilbertSeries& H, int64_t order);
};

struct DeviationSequence {
  std::vector<mpz_class> e;  // e[h] for h = 1..N at indices 1..N; e[0] unused
  // first h with e_h <= 0 while some later e_{h'} != 0, or e_h < 0 outright
  std::optional<int64_t> obstruction_index;
};

struct ObstructionReport {
  std::vector<mpz_class> inverse_coeffs;  // of 1/H(-z), degrees 0..N
  std::optional<int64_t> first_negative_inverse;
  DeviationSequence deviations;
  bool obstructed() const {
    return first_negative_inverse.has_value() || deviations.obstruction_index.has_value();
  }
};

// numeric consequences of a hypothetical Koszul Poincare series 1/H(-z)
ObstructionReport series_obstructions(const HilbertSeries& H, int64_t truncation_order);

struct FrobergCheck {
  bool holds = false;
  int64_t checked_to = 0;
  std::optional<int64_t> first_mismatch;
};

// does (sum_i betti_diag[i] z^i) * H(-z) = 1 through the truncation order
FrobergCheck froberg_identity_check(const HilbertSeries& H, const std::vector<mpz_class>& betti_diag,
                                    int64_t truncation_order);

int64_t multigraded_hilbert_function(const QuotientRing& Q, const Multidegree& a);

// Quotient by dim-many linear forms, certified regular by the exact series
// identity h_{R'} = h_R with dim R' = 0. Success doubles as a
// Cohen-Macaulayness certificate; failure after all attempts returns nothing
// (and is immediate when the h-polynomial has a negative coefficient).
struct ArtinianReduction {
  QuotientRing reduced;              // artinian quotient in dim fewer variables
  std::vector<Polynomial> forms;     // the linear forms, in the original ring
};
std::optional<ArtinianReduction> artinian_reduction(const QuotientRing& Q,
                                                    uint64_t seed = 1,
                                                    int max_attempts = 20);

// monomial count identity: choosing a degree-n monomial in sum(b) variables
// equals distributing the degree over v blocks of sizes b_i
struct CountIdentity {
  mpz_class lhs, rhs;
  bool holds() const { return lhs == rhs; }
};
CountIdentity count_identity_check(int64_t n, const std::vector<int64_t>& b);

}  // namespace koszul
