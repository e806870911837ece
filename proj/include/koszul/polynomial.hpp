#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "koszul/ring.hpp"

namespace koszul {

struct Term {
  mpq_class coeff;
  Monomial mono;
};

// Terms sorted strictly descending under the ring's active order, no zero
// coefficients, coefficients in field-canonical form.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  Polynomial(RingPtr ring, std::vector<Term> terms);  // canonicalizes

  static Polynomial zero(const RingPtr& ring) { return Polynomial(ring); }
  static Polynomial constant(const RingPtr& ring, const mpq_class& c);
  static Polynomial monomial(const RingPtr& ring, const mpq_class& c, Monomial m);
  static Polynomial variable(const RingPtr& ring, std::size_t i, int32_t e = 1);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t nterms() const { return terms_.size(); }

  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().mono; }
  const mpq_class& leading_coeff() const { return leading_term().coeff; }

  // degree of the leading term's monomial need not be the polynomial degree
  // under non-degree orders, so this scans
  int64_t degree() const;
  bool is_homogeneous() const;
  bool is_multihomogeneous() const;  // w.r.t. the ring's fine grading
  std::optional<Multidegree> multidegree() const;
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  mpq_class constant_value() const { return terms_.empty() ? mpq_class(0) : terms_[0].coeff; }

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  Polynomial scaled(const mpq_class& c) const;
  Polynomial term_multiple(const mpq_class& c, const Monomial& m) const;
  Polynomial monic() const;

  // split into homogeneous components, ascending degree
  std::map<int64_t, Polynomial> homogeneous_components() const;

  Polynomial converted(const RingPtr& other) const;  // same vars/field, any order

 private:
  void canon();
  RingPtr ring_;
  std::vector<Term> terms_;
};

// exact quotient f/g; throws when g does not divide f
Polynomial exact_divide(const Polynomial& f, const Polynomial& g);

// image of f under x_i -> images[i]; images live in the target ring
Polynomial substitute(const Polynomial& f, const RingPtr& target,
                      const std::vector<Polynomial>& images);

std::string to_string(const Polynomial& f);
std::string to_string(const Monomial& m, const std::vector<std::string>& names);

struct ParseError : std::runtime_error {
  ParseError(std::string msg, std::size_t pos) : std::runtime_error(std::move(msg)), pos(pos) {}
  std::size_t pos;  // byte offset into the parsed text
};

// Grammar: sum of terms, each term a '*'-joined product of an optional
// rational coefficient (p or p/q) and powers name or name^e. Whitespace free
// between tokens or not; '**' is accepted for '^'.
Polynomial parse_polynomial(const RingPtr& ring, const std::string& text);

}  // namespace koszul
