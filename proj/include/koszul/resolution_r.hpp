#pragma once

#include "koszul/betti.hpp"
#include "koszul/linalg.hpp"
#include "koszul/quotient.hpp"

namespace koszul {

// Module over a quotient ring R given by generators and relations; entries
// are polynomial representatives, homogeneous with respect to the generator
// degrees. The zero-relation module is free.
struct QuotientModulePresentation {
  std::vector<int64_t> gen_degrees;
  std::vector<std::vector<Polynomial>> relations;  // columns over the generators
};

// Graded Betti numbers over R, computed degree by degree: minimal generators
// of each syzygy module are extracted per degree (kernel of the previous map
// modulo the span of lower-degree multiples), so every entry with internal
// degree <= deg_bound is exact. Entries at j == deg_bound sit at the window
// boundary; higher-degree generators are invisible. The residue field overload
// resolves K = R/m.
BettiTable betti_table_over_quotient(const QuotientRing& Q, int64_t hom_bound,
                                     int64_t deg_bound);
BettiTable betti_table_over_quotient(const QuotientRing& Q,
                                     const QuotientModulePresentation& M,
                                     int64_t hom_bound, int64_t deg_bound);

// Homology of the Koszul complex on the variable images in R, sliced by
// (homological index i, internal degree j). Row i equals the degree-j graded
// pieces of the i-th syzygies of R over its polynomial presentation, so the
// largest nonzero degree in a certified row is t_i.
struct KoszulHomology {
  int64_t i_max = 0;
  int64_t deg_bound = 0;
  std::vector<std::map<int64_t, int64_t>> dims;  // dims[i]: degree -> dim, zeros omitted
  std::vector<char> row_certified;  // complex vanishes above the window

  int64_t dim(int64_t i, int64_t j) const;
  std::optional<int64_t> t(int64_t i) const;  // max degree seen in row i
  int64_t regularity() const;                 // max (j - i) over the window
  bool fully_certified() const;
};

KoszulHomology koszul_homology_dims(const QuotientRing& Q, int64_t i_max,
                                    int64_t deg_bound);

}  // namespace koszul
