#pragma once

#include <map>
#include <unordered_map>

#include "koszul/groebner.hpp"

namespace koszul {

// Standard graded algebra R = S/I presented by a homogeneous ideal with no
// linear forms (the presentation is assumed minimal in degree 1). Carries the
// reduced basis under the ambient ring's active order and caches standard
// monomial bases per degree, which represent R's graded components.
class QuotientRing {
 public:
  explicit QuotientRing(Ideal defining);
  static QuotientRing polynomial_ring(const RingPtr& ring) { return QuotientRing(Ideal{ring, {}}); }

  const RingPtr& ambient() const { return ring_; }
  const Ideal& defining_ideal() const { return defining_; }
  const GroebnerBasis& gb() const { return gb_; }
  bool is_polynomial_ring() const { return gb_.elems.empty(); }
  std::size_t nvars() const { return ring_->nvars(); }

  Polynomial nf(const Polynomial& f) const { return normal_form(f, gb_); }
  Polynomial multiply(const Polynomial& f, const Polynomial& g) const { return nf(f * g); }

  // monomials of the given degree not in the initial ideal; a K-basis of R_d
  const std::vector<Monomial>& std_basis(int64_t degree) const;
  std::size_t dim_at(int64_t degree) const { return std_basis(degree).size(); }
  int basis_index(int64_t degree, const Monomial& m) const;  // -1 when absent

  // fine-graded slice of the basis (requires a fine grading on the ring)
  const std::vector<Monomial>& std_basis_multi(const Multidegree& d) const;

  // coordinates of nf(f) over std_basis(degree); f must be homogeneous of that degree
  std::vector<mpq_class> coords(const Polynomial& f, int64_t degree) const;

  // sparse column form of multiplication by variable v from R_d to R_{d+1}:
  // for basis index j, a list of (row index, coefficient)
  using SparseCol = std::vector<std::pair<int, mpq_class>>;
  const std::vector<SparseCol>& mult_by_var(std::size_t v, int64_t degree) const;

  // true when some power of every variable leads the initial ideal, i.e. R is
  // finite dimensional; top_degree is then the largest d with R_d nonzero
  bool is_artinian() const;
  int64_t top_degree() const;

 private:
  RingPtr ring_;
  Ideal defining_;
  GroebnerBasis gb_;
  mutable std::map<int64_t, std::vector<Monomial>> basis_cache_;
  mutable std::map<int64_t, std::unordered_map<Monomial, int, MonomialHash>> index_cache_;
  mutable std::map<Multidegree, std::vector<Monomial>> multi_basis_cache_;
  mutable std::map<std::pair<std::size_t, int64_t>, std::vector<SparseCol>> mult_cache_;
  mutable int64_t top_degree_ = -2;  // -2 unknown, -1 not artinian
};

}  // namespace koszul
