#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace koszul {

// Exponent vector with cached total degree and a 64-bit support mask
// (bit i set when the i-th of the first 64 variables occurs). The mask is a
// cheap necessary filter for divisibility tests.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int32_t> exps) : exps_(std::move(exps)) { recompute(); }
  static Monomial one(std::size_t nvars) { return Monomial(std::vector<int32_t>(nvars, 0)); }
  static Monomial variable(std::size_t nvars, std::size_t i, int32_t e = 1) {
    std::vector<int32_t> v(nvars, 0);
    v.at(i) = e;
    return Monomial(std::move(v));
  }

  const std::vector<int32_t>& exps() const { return exps_; }
  std::size_t nvars() const { return exps_.size(); }
  int32_t exp(std::size_t i) const { return exps_[i]; }
  int64_t degree() const { return degree_; }
  uint64_t mask() const { return mask_; }
  bool is_one() const { return degree_ == 0; }

  bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
  bool operator!=(const Monomial& o) const { return exps_ != o.exps_; }

  Monomial operator*(const Monomial& o) const;
  // quotient this/o; requires divisibility
  Monomial operator/(const Monomial& o) const;
  bool divisible_by(const Monomial& o) const;

  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);
  friend bool coprime(const Monomial& a, const Monomial& b) {
    if ((a.mask_ & b.mask_) != 0) return false;
    for (std::size_t i = 64; i < a.exps_.size(); ++i)
      if (a.exps_[i] > 0 && b.exps_[i] > 0) return false;
    return true;
  }

 private:
  void recompute();
  std::vector<int32_t> exps_;
  int64_t degree_ = 0;
  uint64_t mask_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::size_t h = 1469598103934665603ull;
    for (int32_t e : m.exps()) {
      h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Global (well-founded, multiplicative, total) orders on monomials. The
// variable priority is given by perm: perm[0] is the index of the largest
// variable. Block orders compare the eliminated block first, so any basis
// element free of eliminated variables stays free of them after reduction.
struct MonomialOrder {
  enum class Kind { lex, deglex, degrevlex, weight, block };
  Kind kind = Kind::degrevlex;
  std::vector<int> perm;           // empty means identity
  std::vector<int64_t> weights;    // weight order: compared first, degrevlex tiebreak
  std::vector<char> eliminated;    // block order: mask of the block compared first

  static MonomialOrder lex() { return {Kind::lex, {}, {}, {}}; }
  static MonomialOrder deglex() { return {Kind::deglex, {}, {}, {}}; }
  static MonomialOrder degrevlex() { return {Kind::degrevlex, {}, {}, {}}; }
  static MonomialOrder lex_perm(std::vector<int> p) { return {Kind::lex, std::move(p), {}, {}}; }
  static MonomialOrder deglex_perm(std::vector<int> p) { return {Kind::deglex, std::move(p), {}, {}}; }
  static MonomialOrder degrevlex_perm(std::vector<int> p) { return {Kind::degrevlex, std::move(p), {}, {}}; }
  static MonomialOrder weight_order(std::vector<int64_t> w);
  static MonomialOrder block_elim(std::vector<char> elim_mask) {
    return {Kind::block, {}, {}, std::move(elim_mask)};
  }

  bool operator==(const MonomialOrder&) const = default;

  // true when a > b implies deg a >= deg b (degree-compatible); lex and block
  // orders are not
  bool degree_compatible() const;
  std::string describe(const std::vector<std::string>& var_names) const;
};

// three-way compare under ord: positive when a > b, 0 when equal
int monomial_compare(const Monomial& a, const Monomial& b, const MonomialOrder& ord);

}  // namespace koszul
