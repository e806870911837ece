#pragma once

#include "koszul/betti.hpp"
#include "koszul/groebner.hpp"

namespace koszul {

// Cokernel of a homogeneous matrix over a polynomial ring: free module on
// generators with the given degrees, modulo the span of `relations`. Each
// relation is a coordinate vector over the generators, homogeneous with
// respect to the generator degrees.
struct ModulePresentation {
  RingPtr ring;
  std::vector<int64_t> gen_degrees;
  std::vector<std::vector<Polynomial>> relations;
};

ModulePresentation presentation_of_quotient(const Ideal& I);
void validate_presentation(const ModulePresentation& M);
// module degree of a homogeneous vector over generators with these shifts;
// throws if the vector is inhomogeneous
int64_t module_degree(const std::vector<Polynomial>& vec,
                      const std::vector<int64_t>& shifts);

// Gr\"obner basis of a submodule of a graded free module, together with
// generators of its syzygy module. Every S-pair is processed and recorded,
// so the syzygies generate the full first syzygy module (through the degree
// bound when one is set). Module terms are compared by the ring order on the
// monomial first, then by position.
struct ModuleGB {
  std::vector<std::vector<Polynomial>> basis;  // monic leading coefficients
  std::vector<int64_t> degrees;                // module degree of each element
  std::vector<std::vector<Polynomial>> syzygies;  // vectors over `basis`
  bool truncated = false;
};

ModuleGB module_groebner(const std::vector<std::vector<Polynomial>>& gens,
                         const std::vector<int64_t>& shifts, RingPtr ring,
                         int64_t degree_bound = -1);

// Graded free resolution of coker(M). maps[k] sends F_{k+1} to F_k, stored
// as entries[row][col] with rows over F_k. shifts[k] lists the generator
// degrees of F_k.
struct FreeResolution {
  RingPtr ring;
  std::vector<std::vector<int64_t>> shifts;
  std::vector<std::vector<std::vector<Polynomial>>> maps;
  bool complete = false;   // syzygies exhausted inside the window
  bool truncated = false;  // some pair beyond the degree bound was dropped
  int64_t deg_bound = -1;

  std::size_t length() const { return shifts.empty() ? 0 : shifts.size() - 1; }
  GradedMatrix map_matrix(std::size_t k) const;
  bool is_complex() const;
  bool is_minimal() const;
  BettiTable betti(int64_t hom_bound) const;
};

// Iterated syzygy computation followed by cancellation of scalar entries.
// Computes one level past hom_bound so every reported row is minimal.
// Entries with internal degree <= deg_bound are exact.
FreeResolution minimal_free_resolution_S(const ModulePresentation& M,
                                         int64_t hom_bound,
                                         int64_t deg_bound = -1);

BettiTable minimal_betti_table_S(const ModulePresentation& M,
                                 int64_t hom_bound, int64_t deg_bound = -1);
// Betti table of S/I as a module over the polynomial ring
BettiTable minimal_betti_table_S(const Ideal& I, int64_t hom_bound,
                                 int64_t deg_bound = -1);

// Upper bounds for the Betti numbers of S/M, M a monomial ideal: entry
// (i, j) counts the i-element subsets of the generators whose lcm has
// degree j. Row 0 is the single entry (0, 0).
BettiTable taylor_bounds(const std::vector<Monomial>& gens, RingPtr ring);

}  // namespace koszul
