#include "koszul/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace koszul {

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms)
    : ring_(std::move(ring)), terms_(std::move(terms)) {
  canon();
}

void Polynomial::canon() {
  const auto& ord = ring_->order();
  for (auto& t : terms_) {
    if (t.mono.nvars() != ring_->nvars())
      throw std::invalid_argument("term monomial does not match ring variable count");
    t.coeff = ring_->field().reduce(t.coeff);
  }
  std::sort(terms_.begin(), terms_.end(), [&](const Term& x, const Term& y) {
    return monomial_compare(x.mono, y.mono, ord) > 0;
  });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().mono == t.mono)
      out.back().coeff = ring_->field().add(out.back().coeff, t.coeff);
    else
      out.push_back(std::move(t));
    if (!out.empty() && out.back().coeff == 0) out.pop_back();
  }
  terms_ = std::move(out);
}

Polynomial Polynomial::constant(const RingPtr& ring, const mpq_class& c) {
  return Polynomial(ring, {Term{c, Monomial::one(ring->nvars())}});
}

Polynomial Polynomial::monomial(const RingPtr& ring, const mpq_class& c, Monomial m) {
  return Polynomial(ring, {Term{c, std::move(m)}});
}

Polynomial Polynomial::variable(const RingPtr& ring, std::size_t i, int32_t e) {
  return Polynomial(ring, {Term{1, Monomial::variable(ring->nvars(), i, e)}});
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
  return terms_.front();
}

int64_t Polynomial::degree() const {
  int64_t d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.mono.degree() != terms_[0].mono.degree()) return false;
  return true;
}

bool Polynomial::is_multihomogeneous() const {
  if (terms_.size() <= 1) return true;
  Multidegree d0 = ring_->multidegree_of(terms_[0].mono);
  for (std::size_t i = 1; i < terms_.size(); ++i)
    if (ring_->multidegree_of(terms_[i].mono) != d0) return false;
  return true;
}

std::optional<Multidegree> Polynomial::multidegree() const {
  if (terms_.empty()) return std::nullopt;
  if (!is_multihomogeneous()) return std::nullopt;
  return ring_->multidegree_of(terms_[0].mono);
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& t : r.terms_) t.coeff = ring_->field().neg(t.coeff);
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  if (!ring_ || !o.ring_ || !ring_->same_as(*o.ring_) || !(ring_->order() == o.ring_->order()))
    throw std::invalid_argument("ring mismatch in polynomial sum");
  const auto& ord = ring_->order();
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    int c;
    if (i >= terms_.size())
      c = -1;
    else if (j >= o.terms_.size())
      c = 1;
    else
      c = monomial_compare(terms_[i].mono, o.terms_[j].mono, ord);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      mpq_class s = ring_->field().add(terms_[i].coeff, o.terms_[j].coeff);
      if (s != 0) r.terms_.push_back(Term{std::move(s), terms_[i].mono});
      ++i;
      ++j;
    }
  }
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (!ring_ || !o.ring_ || !ring_->same_as(*o.ring_) || !(ring_->order() == o.ring_->order()))
    throw std::invalid_argument("ring mismatch in polynomial product");
  Polynomial r(ring_);
  if (terms_.empty() || o.terms_.empty()) return r;
  std::vector<Term> acc;
  acc.reserve(terms_.size() * o.terms_.size());
  for (const auto& t : terms_)
    for (const auto& u : o.terms_)
      acc.push_back(Term{ring_->field().mul(t.coeff, u.coeff), t.mono * u.mono});
  return Polynomial(ring_, std::move(acc));
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].coeff != o.terms_[i].coeff || !(terms_[i].mono == o.terms_[i].mono)) return false;
  return true;
}

Polynomial Polynomial::scaled(const mpq_class& c) const {
  if (c == 0) return Polynomial(ring_);
  Polynomial r(*this);
  for (auto& t : r.terms_) t.coeff = ring_->field().mul(t.coeff, c);
  std::erase_if(r.terms_, [](const Term& t) { return t.coeff == 0; });
  return r;
}

Polynomial Polynomial::term_multiple(const mpq_class& c, const Monomial& m) const {
  if (c == 0) return Polynomial(ring_);
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    mpq_class p = ring_->field().mul(t.coeff, c);
    if (p != 0) r.terms_.push_back(Term{std::move(p), t.mono * m});
  }
  return r;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return scaled(ring_->field().inv(leading_coeff()));
}

std::map<int64_t, Polynomial> Polynomial::homogeneous_components() const {
  std::map<int64_t, std::vector<Term>> buckets;
  for (const auto& t : terms_) buckets[t.mono.degree()].push_back(t);
  std::map<int64_t, Polynomial> out;
  for (auto& [d, ts] : buckets) out.emplace(d, Polynomial(ring_, std::move(ts)));
  return out;
}

Polynomial Polynomial::converted(const RingPtr& other) const {
  if (!ring_->same_as(*other)) throw std::invalid_argument("ring mismatch in order conversion");
  return Polynomial(other, terms_);
}

Polynomial exact_divide(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw std::domain_error("division by zero polynomial");
  const RingPtr& ring = f.ring();
  Polynomial rem = f;
  Polynomial quot(ring);
  const Field& k = ring->field();
  while (!rem.is_zero()) {
    const Term& lt = rem.leading_term();
    if (!lt.mono.divisible_by(g.leading_monomial()))
      throw std::domain_error("polynomial quotient is not exact");
    mpq_class c = k.div(lt.coeff, g.leading_coeff());
    Monomial m = lt.mono / g.leading_monomial();
    quot = quot + Polynomial::monomial(ring, c, m);
    rem = rem - g.term_multiple(c, m);
  }
  return quot;
}

Polynomial substitute(const Polynomial& f, const RingPtr& target,
                      const std::vector<Polynomial>& images) {
  if (images.size() != f.ring()->nvars())
    throw std::invalid_argument("substitution needs one image per variable");
  Polynomial out(target);
  for (const auto& t : f.terms()) {
    Polynomial term = Polynomial::constant(target, t.coeff);
    for (std::size_t i = 0; i < images.size(); ++i)
      for (int32_t e = 0; e < t.mono.exp(i); ++e) term = term * images[i];
    out = out + term;
  }
  return out;
}

std::string to_string(const Monomial& m, const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m.exp(i) == 0) continue;
    if (!s.empty()) s += "*";
    s += names[i];
    if (m.exp(i) > 1) s += "^" + std::to_string(m.exp(i));
  }
  return s.empty() ? "1" : s;
}

std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : f.terms()) {
    mpq_class c = t.coeff;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    std::string mono = to_string(t.mono, f.ring()->var_names());
    if (c != 1 || mono == "1") {
      os << c.get_str();
      if (mono != "1") os << "*";
    }
    if (mono != "1") os << mono;
  }
  return os.str();
}

namespace {

struct Parser {
  const RingPtr& ring;
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos); }

  mpz_class integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected integer");
    return mpz_class(s.substr(start, pos - start));
  }

  std::string identifier() {
    skip_ws();
    std::size_t start = pos;
    if (pos < s.size() && (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) {
      ++pos;
      while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) ++pos;
    }
    if (pos == start) fail("expected variable name");
    return s.substr(start, pos - start);
  }

  int32_t exponent() {
    skip_ws();
    if (eat('^')) {
      // accept '**' too
    } else if (pos + 1 < s.size() && s[pos] == '*' && s[pos + 1] == '*') {
      pos += 2;
    } else {
      return 1;
    }
    mpz_class e = integer();
    if (e < 0 || e > 1000000) fail("exponent out of range");
    return static_cast<int32_t>(e.get_si());
  }

  // one product of coefficient and variable powers
  Polynomial term() {
    mpq_class coeff = 1;
    std::vector<int32_t> exps(ring->nvars(), 0);
    bool saw_factor = false;
    bool expect_factor = false;
    for (;;) {
      skip_ws();
      if (pos >= s.size()) break;
      char c = s[pos];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        mpz_class num = integer();
        skip_ws();
        if (pos < s.size() && s[pos] == '/') {
          ++pos;
          mpz_class den = integer();
          if (den == 0) fail("zero denominator");
          coeff *= mpq_class(num, den);
        } else {
          coeff *= mpq_class(num);
        }
        coeff.canonicalize();
        saw_factor = true;
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t at = pos;
        std::string name = identifier();
        int idx = ring->var_index(name);
        if (idx < 0) {
          pos = at;
          fail("unknown variable '" + name + "'");
        }
        int32_t e = exponent();
        exps[idx] += e;
        saw_factor = true;
      } else {
        if (expect_factor) fail("expected factor after '*'");
        break;
      }
      expect_factor = false;
      skip_ws();
      // '*' continues the product unless it is '**'
      if (pos < s.size() && s[pos] == '*' && !(pos + 1 < s.size() && s[pos + 1] == '*')) {
        ++pos;
        expect_factor = true;
        continue;
      }
      // juxtaposition like 2x or x y also continues
      skip_ws();
      if (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) continue;
      break;
    }
    if (expect_factor) fail("expected factor after '*'");
    if (!saw_factor) fail("expected term");
    return Polynomial::monomial(ring, coeff, Monomial(std::move(exps)));
  }

  Polynomial expression() {
    Polynomial out(ring);
    skip_ws();
    bool negate = false;
    if (eat('-'))
      negate = true;
    else
      eat('+');
    for (;;) {
      Polynomial t = term();
      out = out + (negate ? -t : t);
      skip_ws();
      if (eat('+'))
        negate = false;
      else if (eat('-'))
        negate = true;
      else
        break;
    }
    skip_ws();
    if (pos != s.size()) fail("unexpected trailing input");
    return out;
  }
};

}  // namespace

Polynomial parse_polynomial(const RingPtr& ring, const std::string& text) {
  Parser p{ring, text};
  return p.expression();
}

}  // namespace koszul
