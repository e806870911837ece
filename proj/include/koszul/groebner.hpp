#pragma once

#include <vector>

#include "koszul/polynomial.hpp"

namespace koszul {

struct Ideal {
  RingPtr ring;
  std::vector<Polynomial> gens;
};

Ideal make_ideal(const RingPtr& ring, std::vector<Polynomial> gens);
Ideal parse_ideal(const RingPtr& ring, const std::vector<std::string>& gens);
bool ideal_is_homogeneous(const Ideal& I);

struct BuchbergerOptions {
  // when >= 0 and the order is degree-compatible, S-pairs above this total
  // degree are skipped; the result is a basis of the ideal through that degree
  int64_t degree_bound = -1;
};

// Reduced Groebner basis: monic elements, no leading term divides another,
// tails fully reduced; sorted ascending by leading monomial. Unique for the
// given ideal and order.
struct GroebnerBasis {
  RingPtr ring;  // carries the order the basis lives under
  std::vector<Polynomial> elems;
  int64_t degree_bound = -1;
  bool truncated = false;  // true when the bound actually dropped pairs

  bool is_unit_ideal() const {
    return elems.size() == 1 && elems[0].is_constant() && !elems[0].is_zero();
  }
  bool is_zero_ideal() const { return elems.empty(); }
  std::vector<Monomial> leading_monomials() const;
  std::vector<int64_t> element_degrees() const;
};

GroebnerBasis reduced_groebner_basis(const Ideal& I, const MonomialOrder& ord,
                                     const BuchbergerOptions& opts = {});
// convenience: under the ideal ring's active order
GroebnerBasis reduced_groebner_basis(const Ideal& I, const BuchbergerOptions& opts = {});

// full normal form (leading and tail reduction); the canonical representative
// of f modulo the ideal when the basis is reduced and untruncated
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G);

bool in_ideal(const Polynomial& f, const GroebnerBasis& G);

}  // namespace koszul
