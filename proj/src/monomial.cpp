#include "koszul/monomial.hpp"

#include <algorithm>

namespace koszul {

void Monomial::recompute() {
  degree_ = 0;
  mask_ = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] < 0) throw std::invalid_argument("negative exponent in monomial");
    degree_ += exps_[i];
    if (exps_[i] > 0 && i < 64) mask_ |= (1ull << i);
  }
  if (degree_ > (int64_t(1) << 40)) throw std::overflow_error("monomial degree overflow");
}

Monomial Monomial::operator*(const Monomial& o) const {
  if (exps_.size() != o.exps_.size()) throw std::invalid_argument("monomial length mismatch");
  Monomial r;
  r.exps_.resize(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = exps_[i] + o.exps_[i];
  r.degree_ = degree_ + o.degree_;
  r.mask_ = mask_ | o.mask_;
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  if (!divisible_by(o)) throw std::domain_error("monomial quotient is not exact");
  Monomial r;
  r.exps_.resize(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = exps_[i] - o.exps_[i];
  r.recompute();
  return r;
}

bool Monomial::divisible_by(const Monomial& o) const {
  if (exps_.size() != o.exps_.size()) throw std::invalid_argument("monomial length mismatch");
  if ((o.mask_ & ~mask_) != 0) return false;
  if (o.degree_ > degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (o.exps_[i] > exps_[i]) return false;
  return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  if (a.exps_.size() != b.exps_.size()) throw std::invalid_argument("monomial length mismatch");
  Monomial r;
  r.exps_.resize(a.exps_.size());
  for (std::size_t i = 0; i < a.exps_.size(); ++i) r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
  r.recompute();
  return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  if (a.exps_.size() != b.exps_.size()) throw std::invalid_argument("monomial length mismatch");
  Monomial r;
  r.exps_.resize(a.exps_.size());
  for (std::size_t i = 0; i < a.exps_.size(); ++i) r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
  r.recompute();
  return r;
}

MonomialOrder MonomialOrder::weight_order(std::vector<int64_t> w) {
  for (int64_t wi : w)
    if (wi < 0) throw std::invalid_argument("weight order needs nonnegative weights");
  return {Kind::weight, {}, std::move(w), {}};
}

bool MonomialOrder::degree_compatible() const {
  switch (kind) {
    case Kind::deglex:
    case Kind::degrevlex:
      return true;
    case Kind::weight: {
      for (std::size_t i = 1; i < weights.size(); ++i)
        if (weights[i] != weights[0]) return false;
      return true;
    }
    default:
      return false;
  }
}

std::string MonomialOrder::describe(const std::vector<std::string>& names) const {
  std::string s;
  switch (kind) {
    case Kind::lex: s = "lex"; break;
    case Kind::deglex: s = "deglex"; break;
    case Kind::degrevlex: s = "degrevlex"; break;
    case Kind::weight: s = "weight"; break;
    case Kind::block: s = "block-elim"; break;
  }
  if (!perm.empty()) {
    s += " ";
    for (std::size_t i = 0; i < perm.size(); ++i) {
      if (i) s += ">";
      s += names.at(perm[i]);
    }
  }
  return s;
}

namespace {

// permuted exponent access; perm empty = identity
inline int32_t pexp(const Monomial& m, const std::vector<int>& perm, std::size_t i) {
  return perm.empty() ? m.exp(i) : m.exp(perm[i]);
}

int lex_cmp(const Monomial& a, const Monomial& b, const std::vector<int>& perm) {
  for (std::size_t i = 0; i < a.nvars(); ++i) {
    int32_t d = pexp(a, perm, i) - pexp(b, perm, i);
    if (d != 0) return d > 0 ? 1 : -1;
  }
  return 0;
}

// degrevlex tie rule: smaller exponent on the least-priority variable wins
int revlex_tie(const Monomial& a, const Monomial& b, const std::vector<int>& perm) {
  for (std::size_t i = a.nvars(); i-- > 0;) {
    int32_t d = pexp(a, perm, i) - pexp(b, perm, i);
    if (d != 0) return d > 0 ? -1 : 1;
  }
  return 0;
}

int degrevlex_cmp(const Monomial& a, const Monomial& b, const std::vector<int>& perm) {
  if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
  return revlex_tie(a, b, perm);
}

}  // namespace

int monomial_compare(const Monomial& a, const Monomial& b, const MonomialOrder& ord) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("monomial length mismatch");
  switch (ord.kind) {
    case MonomialOrder::Kind::lex:
      return lex_cmp(a, b, ord.perm);
    case MonomialOrder::Kind::deglex:
      if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
      return lex_cmp(a, b, ord.perm);
    case MonomialOrder::Kind::degrevlex:
      return degrevlex_cmp(a, b, ord.perm);
    case MonomialOrder::Kind::weight: {
      int64_t wa = 0, wb = 0;
      for (std::size_t i = 0; i < a.nvars(); ++i) {
        wa += ord.weights.at(i) * a.exp(i);
        wb += ord.weights.at(i) * b.exp(i);
      }
      if (wa != wb) return wa > wb ? 1 : -1;
      return degrevlex_cmp(a, b, {});
    }
    case MonomialOrder::Kind::block: {
      if (ord.eliminated.size() != a.nvars()) throw std::invalid_argument("block mask length mismatch");
      // degrevlex on the eliminated block, then degrevlex on the rest
      for (int pass = 1; pass >= 0; --pass) {
        int64_t ta = 0, tb = 0;
        for (std::size_t i = 0; i < a.nvars(); ++i)
          if ((ord.eliminated[i] != 0) == (pass == 1)) {
            ta += a.exp(i);
            tb += b.exp(i);
          }
        if (ta != tb) return ta > tb ? 1 : -1;
        for (std::size_t i = a.nvars(); i-- > 0;)
          if ((ord.eliminated[i] != 0) == (pass == 1)) {
            int32_t d = a.exp(i) - b.exp(i);
            if (d != 0) return d > 0 ? -1 : 1;
          }
      }
      return 0;
    }
  }
  return 0;
}

}  // namespace koszul
