#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "koszul/field.hpp"
#include "koszul/monomial.hpp"

namespace koszul {

using Multidegree = std::vector<int64_t>;

// Polynomial ring K[x_1..x_n], standard graded (every variable has standard
// degree 1), optionally carrying a finer Z^m grading given column-wise. The
// active order is the term order polynomials in this ring are sorted under.
class PolynomialRing {
 public:
  PolynomialRing(Field field, std::vector<std::string> var_names, MonomialOrder order,
                 std::vector<Multidegree> var_multidegrees = {});

  const Field& field() const { return field_; }
  const std::vector<std::string>& var_names() const { return names_; }
  std::size_t nvars() const { return names_.size(); }
  const MonomialOrder& order() const { return order_; }
  // rows of the grading matrix; empty when only the standard grading is declared
  std::size_t grading_rows() const { return grading_rows_; }
  bool has_fine_grading() const { return grading_rows_ > 0; }
  const std::vector<Multidegree>& var_multidegrees() const { return var_mdegs_; }

  int var_index(const std::string& name) const;  // -1 when absent

  Multidegree multidegree_of(const Monomial& m) const;
  // positive w with standard degree = |multidegree|/w for every variable,
  // when such a uniform weight exists
  std::optional<int64_t> uniform_grading_weight() const;

  bool same_as(const PolynomialRing& o) const {
    return field_ == o.field_ && names_ == o.names_ && var_mdegs_ == o.var_mdegs_;
  }

 private:
  Field field_;
  std::vector<std::string> names_;
  MonomialOrder order_;
  std::vector<Multidegree> var_mdegs_;  // one per variable, length grading_rows_
  std::size_t grading_rows_ = 0;
};

using RingPtr = std::shared_ptr<const PolynomialRing>;

RingPtr make_ring(Field field, std::vector<std::string> var_names,
                  MonomialOrder order = MonomialOrder::degrevlex(),
                  std::vector<Multidegree> var_multidegrees = {});

// same variables and grading, different active order
RingPtr with_order(const RingPtr& ring, MonomialOrder order);

}  // namespace koszul
