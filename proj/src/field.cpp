#include "koszul/field.hpp"

namespace koszul {

bool is_prime_ulong(unsigned long p) {
  mpz_class z(static_cast<unsigned long>(p));
  return mpz_probab_prime_p(z.get_mpz_t(), 40) != 0;
}

Field Field::prime(unsigned long p) {
  if (!is_prime_ulong(p)) throw std::invalid_argument("field characteristic must be prime: " + std::to_string(p));
  return Field{Kind::prime, p};
}

std::string Field::name() const {
  return kind == Kind::rationals ? std::string("Q") : "F" + std::to_string(p);
}

mpq_class Field::reduce(const mpq_class& a) const {
  if (kind == Kind::rationals) return a;
  // num/den with den invertible mod p; result in [0, p)
  mpz_class P(p);
  mpz_class den = a.get_den() % P;
  if (den == 0) throw std::domain_error("denominator vanishes in F" + std::to_string(p));
  mpz_class dinv;
  if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), P.get_mpz_t()) == 0)
    throw std::domain_error("denominator not invertible in F" + std::to_string(p));
  mpz_class r = (a.get_num() % P) * dinv % P;
  if (r < 0) r += P;
  return mpq_class(r);
}

mpq_class Field::inv(const mpq_class& a) const {
  if (a == 0) throw std::domain_error("division by zero in " + name());
  if (kind == Kind::rationals) return 1 / a;
  return reduce(mpq_class(1) / a);
}

}  // namespace koszul
