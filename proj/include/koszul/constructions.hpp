#pragma once

#include "koszul/hilbert.hpp"
#include "koszul/ideal_ops.hpp"

namespace koszul {

// Presentation of the subalgebra generated by homogeneous elements of a
// quotient ring: one presentation variable per generator, the kernel of the
// evaluation map as its defining ideal. Every kernel element vanishes when
// the generator expressions are substituted in.
struct SubalgebraPresentation {
  std::vector<Polynomial> generator_expressions;  // in the ambient ring
  RingPtr presentation_ring;
  Ideal kernel;  // in presentation_ring

  QuotientRing presented() const { return QuotientRing(kernel); }
};

// generators = monomial basis of R_c; kernel by elimination
SubalgebraPresentation veronese_presentation(const QuotientRing& R, int64_t c);

// The degree-u slice of R as a module over the presented c-th Veronese
// subalgebra: generators are a basis of R_u placed in module degree 0,
// relation columns live over the presentation ring and evaluate to zero.
// New relation columns are extracted degreewise through degree_bound.
struct VeroneseModule {
  SubalgebraPresentation base;  // the Veronese subalgebra it is a module over
  std::vector<Polynomial> generator_expressions;  // basis of R_u
  std::vector<std::vector<Polynomial>> relations;  // columns, entries over base
  std::vector<int64_t> relation_degrees;  // module degree of each column
  int64_t degree_bound = 0;  // relations complete through this module degree
};
VeroneseModule veronese_module_presentation(const QuotientRing& R, int64_t c,
                                                int64_t u,
                                                int64_t degree_bound = 6);

// Subalgebra of the degree-d monomials supported on at most s variables.
// The kernel's minimal generators are counted and produced fiberwise: in
// each multidegree, one binomial per extra connected component of the graph
// joining power products that share a presentation variable.
struct PinchedVeronese {
  SubalgebraPresentation pres;  // kernel = the minimal binomial generators
  std::vector<int64_t> kernel_mingens_by_degree;  // index = degree in the t's
  int64_t degree_bound = 0;  // counts complete through this degree
};
PinchedVeronese pinched_veronese(int64_t n, int64_t d, int64_t s,
                                 int64_t degree_bound = 3);

// generators = basis of the (c1, c2) piece of a bigraded quotient; for a
// bigraded polynomial ring this presents the Segre product of two Veroneses
SubalgebraPresentation diagonal_subalgebra(const QuotientRing& R, int64_t c1,
                                           int64_t c2);

// Rees algebra S[y1..yr]/(y_i f_j - y_j f_i) of an equal-degree regular
// sequence, bigraded with deg x = (1,0), deg y = (0,1). Regularity of the
// sequence is certified by the exact series identity for S/(f).
QuotientRing rees_ci_presentation(const std::vector<Polynomial>& f);

// A = R[y1..ym]/(y_i^2 + q_i) for R = S/(q_1..q_m) a complete intersection
// of quadrics: the y-first lex initial ideal is (y_1^2..y_m^2), so A is
// G-quadratic, and A/(y) recovers R, so R is a linear-section quotient of a
// G-quadratic algebra. The certificate is re-verified on construction.
struct CiLift {
  QuotientRing lifted;               // A
  std::vector<std::string> new_vars; // the y names
  MonomialOrder order;               // certifying order on A's ambient
  HilbertSeries h_check;             // series of A; same numerator as R's
};
CiLift ci_lift(const QuotientRing& R);

// Hilbert-function comparison between T/I_2(t) for the generic m x n matrix
// t and the combinatorially defined monomial ideal J (entries picked from
// distinct rows, column indices summing to at least n + k). Checks every
// multidegree in the box against the closed binomial count.
struct CartwrightSturmfelsCheck {
  int64_t m = 0, n = 0;
  bool equal = true;  // T/J and T/I_2(t) agree on the whole box
  bool closed_formula = true;  // both match binom(n-1+sum a, n-1)
  std::optional<Multidegree> first_mismatch;
  int64_t points_checked = 0;
};
CartwrightSturmfelsCheck cartwright_sturmfels_check(int64_t m, int64_t n,
                                                    int64_t box_side);

// membership test for the ideal J above on a monomial in the t variables,
// via row maxima: p lies in J iff sum of M_i(p) >= n + (rows meeting p)
bool cs_monomial_in_J(const Monomial& p, int64_t m, int64_t n);

}  // namespace koszul
