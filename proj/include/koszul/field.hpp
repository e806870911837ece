#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace koszul {

// Coefficient field: the rationals, or a prime field F_p for machine-word p.
// Elements are carried as mpq_class in canonical form; for F_p the canonical
// form is an integer in [0, p).
struct Field {
  enum class Kind { rationals, prime };
  Kind kind = Kind::rationals;
  unsigned long p = 0;

  static Field rationals() { return Field{Kind::rationals, 0}; }
  static Field prime(unsigned long p);

  bool operator==(const Field&) const = default;

  bool is_prime_field() const { return kind == Kind::prime; }
  std::string name() const;

  mpq_class reduce(const mpq_class& a) const;
  mpq_class from_long(long v) const { return reduce(mpq_class(v)); }

  mpq_class add(const mpq_class& a, const mpq_class& b) const { return reduce(a + b); }
  mpq_class sub(const mpq_class& a, const mpq_class& b) const { return reduce(a - b); }
  mpq_class mul(const mpq_class& a, const mpq_class& b) const { return reduce(a * b); }
  mpq_class neg(const mpq_class& a) const { return reduce(-a); }
  mpq_class inv(const mpq_class& a) const;
  mpq_class div(const mpq_class& a, const mpq_class& b) const { return mul(a, inv(b)); }
};

bool is_prime_ulong(unsigned long p);

}  // namespace koszul
