#pragma once

#include "koszul/groebner.hpp"

namespace koszul {

// I ∩ K[kept variables], presented in a fresh ring on those variables (field
// and grading columns inherited, active order degrevlex). kept indices are
// normalized ascending; the result carries a reduced basis.
struct EliminationResult {
  RingPtr subring;
  std::vector<int> kept;            // original indices, ascending
  GroebnerBasis basis;              // reduced degrevlex basis of the intersection
};
EliminationResult eliminate(const Ideal& I, std::vector<int> keep_indices);

// Kernel of the algebra map K[source_names] -> ambient/(modulus), sending the
// i-th source variable to targets[i]. Targets must be homogeneous; the source
// ring carries source_multidegrees as its fine grading when provided.
struct KernelResult {
  RingPtr source;
  GroebnerBasis kernel;  // reduced degrevlex basis
};
KernelResult algebra_map_kernel(const std::vector<Polynomial>& targets,
                                const std::vector<std::string>& source_names,
                                const std::vector<Multidegree>& source_multidegrees = {},
                                const Ideal* modulus = nullptr);

Ideal ideal_sum(const Ideal& I, const Ideal& J);
Ideal ideal_intersection(const Ideal& I, const Ideal& J);
// colon (J : f) for a single nonzero polynomial, via (J ∩ (f)) / f
Ideal ideal_colon(const Ideal& J, const Polynomial& f);
// colon (J : I) as the intersection of the single-element colons over gens(I)
Ideal ideal_colon(const Ideal& J, const Ideal& I);
bool ideal_equal(const Ideal& I, const Ideal& J);
bool ideal_contains(const Ideal& I, const Polynomial& f);

}  // namespace koszul
