#include "koszul/hilbert.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <unordered_map>

namespace koszul {

void zp_trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

ZPoly zp_add(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  zp_trim(r);
  return r;
}

ZPoly zp_sub(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  zp_trim(r);
  return r;
}

ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0)
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  zp_trim(r);
  return r;
}

ZPoly zp_at_minus_z(const ZPoly& a) {
  ZPoly r = a;
  for (std::size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
  return r;
}

std::string zp_to_string(const ZPoly& p, const std::string& var) {
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    mpz_class c = p[i];
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? "-" : "+");
    }
    if (i == 0) {
      os << c.get_str();
    } else {
      if (c != 1) os << c.get_str();
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  if (first) return "0";
  return os.str();
}

mpz_class binomial(int64_t n, int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

mpz_class HilbertSeries::coefficient(int64_t d) const {
  if (d < 0) return 0;
  mpz_class s = 0;
  for (std::size_t j = 0; j < numerator.size(); ++j) {
    if (static_cast<int64_t>(j) > d) break;
    if (denominator_exponent == 0) {
      if (static_cast<int64_t>(j) == d) s += numerator[j];
    } else {
      s += numerator[j] * binomial(d - j + denominator_exponent - 1, denominator_exponent - 1);
    }
  }
  return s;
}

std::string HilbertSeries::to_string() const {
  std::string s = "(" + zp_to_string(numerator) + ")";
  if (denominator_exponent == 1) s += "/(1-z)";
  if (denominator_exponent > 1) s += "/(1-z)^" + std::to_string(denominator_exponent);
  return s;
}

HilbertSeries make_series(ZPoly unreduced_numerator, int64_t nvars) {
  HilbertSeries H;
  zp_trim(unreduced_numerator);
  H.numerator_unreduced = unreduced_numerator;
  H.nvars = nvars;
  H.denominator_exponent = nvars;
  H.numerator = std::move(unreduced_numerator);
  // cancel (1-z) factors exactly: p = (1-z) q  <=>  q_i = sum_{j<=i} p_j
  while (H.denominator_exponent > 0 && !H.numerator.empty()) {
    mpz_class acc = 0;
    for (const auto& c : H.numerator) acc += c;
    if (acc != 0) break;  // numerator(1) != 0, nothing cancels
    ZPoly q(H.numerator.size() - 1, 0);
    mpz_class run = 0;
    for (std::size_t i = 0; i + 1 < H.numerator.size(); ++i) {
      run += H.numerator[i];
      q[i] = run;
    }
    zp_trim(q);
    H.numerator = std::move(q);
    --H.denominator_exponent;
  }
  return H;
}

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<int32_t>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (int32_t e : v) {
      h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

class HilbertEngine {
 public:
  explicit HilbertEngine(std::size_t nvars) : nvars_(nvars) {}

  ZPoly numerator(std::vector<Monomial> gens) {
    minimalize(gens);
    return compute(std::move(gens));
  }

 private:
  static void minimalize(std::vector<Monomial>& gens) {
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
      if (a.degree() != b.degree()) return a.degree() < b.degree();
      return a.exps() < b.exps();
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> out;
    for (const auto& m : gens) {
      bool covered = false;
      for (const auto& kept : out)
        if (m.divisible_by(kept)) {
          covered = true;
          break;
        }
      if (!covered) out.push_back(m);
    }
    gens = std::move(out);
  }

  ZPoly compute(std::vector<Monomial> gens) {
    if (gens.empty()) return {1};
    if (gens[0].is_one()) return {};  // unit ideal: zero module
    bool pairwise_coprime = true;
    for (std::size_t i = 0; i < gens.size() && pairwise_coprime; ++i)
      for (std::size_t j = i + 1; j < gens.size(); ++j)
        if (!coprime(gens[i], gens[j])) {
          pairwise_coprime = false;
          break;
        }
    if (pairwise_coprime) {
      ZPoly r{1};
      for (const auto& g : gens) {
        ZPoly f(g.degree() + 1, 0);
        f[0] = 1;
        f[g.degree()] = -1;
        r = zp_mul(r, f);
      }
      return r;
    }

    std::vector<int32_t> key = serialize(gens);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    // pivot on the most shared variable
    std::vector<int> freq(nvars_, 0);
    for (const auto& g : gens)
      for (std::size_t v = 0; v < nvars_; ++v)
        if (g.exp(v) > 0) ++freq[v];
    std::size_t piv = 0;
    for (std::size_t v = 1; v < nvars_; ++v)
      if (freq[v] > freq[piv]) piv = v;

    // M + (x): survivors without x, plus x itself
    std::vector<Monomial> plus;
    plus.push_back(Monomial::variable(nvars_, piv));
    for (const auto& g : gens)
      if (g.exp(piv) == 0) plus.push_back(g);
    // M : x: divide the x-multiples once, keep the rest
    std::vector<Monomial> colon;
    for (const auto& g : gens) {
      if (g.exp(piv) > 0)
        colon.push_back(g / Monomial::variable(nvars_, piv));
      else
        colon.push_back(g);
    }
    minimalize(colon);

    ZPoly a = compute(std::move(plus));
    ZPoly b = compute(std::move(colon));
    ZPoly shifted(b.size() + 1, 0);
    for (std::size_t i = 0; i < b.size(); ++i) shifted[i + 1] = b[i];
    ZPoly r = zp_add(a, shifted);
    memo_.emplace(std::move(key), r);
    return r;
  }

  std::vector<int32_t> serialize(const std::vector<Monomial>& gens) const {
    std::vector<int32_t> key;
    key.reserve(gens.size() * nvars_);
    for (const auto& g : gens)
      for (std::size_t v = 0; v < nvars_; ++v) key.push_back(g.exp(v));
    return key;
  }

  std::size_t nvars_;
  std::unordered_map<std::vector<int32_t>, ZPoly, VecHash> memo_;
};

}  // namespace

ZPoly hilbert_numerator_monomial(std::vector<Monomial> gens, std::size_t nvars) {
  HilbertEngine eng(nvars);
  return eng.numerator(std::move(gens));
}

HilbertSeries hilbert_series(const QuotientRing& Q) {
  const RingPtr& R = Q.ambient();
  if (R->grading_rows() == 1) {
    for (const auto& col : R->var_multidegrees())
      if (col[0] != 1)
        throw std::invalid_argument(
            "non-standard grading: use the multigraded Hilbert function instead");
  }
  ZPoly num = hilbert_numerator_monomial(Q.gb().leading_monomials(), R->nvars());
  return make_series(std::move(num), R->nvars());
}

SeriesTruncation SeriesTruncation::from_zpoly(const ZPoly& p, int64_t order) {
  SeriesTruncation t;
  t.c.assign(order + 1, mpq_class(0));
  for (std::size_t i = 0; i < p.size() && static_cast<int64_t>(i) <= order; ++i) t.c[i] = mpq_class(p[i]);
  return t;
}

SeriesTruncation SeriesTruncation::mul(const SeriesTruncation& o) const {
  SeriesTruncation r;
  int64_t n = std::min(order(), o.order());
  r.c.assign(n + 1, mpq_class(0));
  for (int64_t i = 0; i <= n; ++i)
    for (int64_t j = 0; i + j <= n; ++j)
      if (c[i] != 0 && o.c[j] != 0) r.c[i + j] += c[i] * o.c[j];
  return r;
}

SeriesTruncation SeriesTruncation::inverse() const {
  if (c.empty() || c[0] == 0) throw std::domain_error("series inverse needs a unit constant term");
  SeriesTruncation r;
  r.c.assign(c.size(), mpq_class(0));
  r.c[0] = 1 / c[0];
  for (std::size_t k = 1; k < c.size(); ++k) {
    mpq_class s = 0;
    for (std::size_t j = 1; j <= k; ++j)
      if (j < c.size()) s += c[j] * r.c[k - j];
    r.c[k] = -s / c[0];
  }
  return r;
}

SeriesTruncation SeriesTruncation::of_series(const HilbertSeries& H, int64_t order) {
  SeriesTruncation num = from_zpoly(H.numerator, order);
  // 1/(1-z)^e = sum binomial(k+e-1, e-1) z^k
  SeriesTruncation den;
  den.c.assign(order + 1, mpq_class(0));
  for (int64_t k = 0; k <= order; ++k)
    den.c[k] = mpq_class(binomial(k + H.denominator_exponent - 1, H.denominator_exponent - 1));
  if (H.denominator_exponent == 0) {
    den.c.assign(order + 1, mpq_class(0));
    den.c[0] = 1;
  }
  return num.mul(den);
}

ObstructionReport series_obstructions(const HilbertSeries& H, int64_t N) {
  if (N < 1) throw std::invalid_argument("truncation order must be positive");
  ObstructionReport rep;
  // 1/H(-z) = (1+z)^e / numerator(-z)
  ZPoly numz = zp_at_minus_z(H.numerator);
  SeriesTruncation inv = SeriesTruncation::from_zpoly(numz, N).inverse();
  ZPoly pow_1pz{1};
  ZPoly onepz{1, 1};
  for (int64_t i = 0; i < H.denominator_exponent; ++i) pow_1pz = zp_mul(pow_1pz, onepz);
  SeriesTruncation F = SeriesTruncation::from_zpoly(pow_1pz, N).mul(inv);

  rep.inverse_coeffs.reserve(N + 1);
  for (int64_t i = 0; i <= N; ++i) {
    if (F.c[i].get_den() != 1) throw std::logic_error("inverse series coefficient not integral");
    rep.inverse_coeffs.push_back(F.c[i].get_num());
    if (F.c[i] < 0 && !rep.first_negative_inverse) rep.first_negative_inverse = i;
  }

  // peel factors: odd h contributes (1+z^h)^{e_h}, even h contributes
  // 1/(1-z^h)^{e_h}; in both cases e_h is the z^h coefficient of what remains
  rep.deviations.e.assign(N + 1, 0);
  SeriesTruncation G = F;
  for (int64_t h = 1; h <= N; ++h) {
    if (G.c[h].get_den() != 1) throw std::logic_error("deviation not integral");
    mpz_class eh = G.c[h].get_num();
    rep.deviations.e[h] = eh;
    if (eh == 0) continue;
    // peel the factor: multiply by (1+z^h)^{-e_h} (odd h) or (1-z^h)^{+e_h}
    // (even h); generalized binomials handle negative exponents
    auto gen_binomial = [](const mpz_class& m, int64_t k) {
      mpz_class num = 1, den = 1;
      for (int64_t i = 0; i < k; ++i) {
        num *= (m - i);
        den *= (i + 1);
      }
      mpz_class q;
      mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      return q;
    };
    SeriesTruncation factor;
    factor.c.assign(N + 1, mpq_class(0));
    for (int64_t k = 0; k * h <= N; ++k) {
      mpz_class coef = gen_binomial(h % 2 == 1 ? mpz_class(-eh) : eh, k);
      if (h % 2 == 0 && k % 2 == 1) coef = -coef;  // (-z^h)^k sign
      factor.c[k * h] = mpq_class(coef);
    }
    G = G.mul(factor);
  }
  // an obstruction: e_h < 0, or e_h <= 0 followed by a later nonzero
  std::optional<int64_t> last_nonzero;
  for (int64_t h = N; h >= 1; --h)
    if (rep.deviations.e[h] != 0) {
      last_nonzero = h;
      break;
    }
  for (int64_t h = 1; h <= N && !rep.deviations.obstruction_index; ++h) {
    if (rep.deviations.e[h] < 0)
      rep.deviations.obstruction_index = h;
    else if (rep.deviations.e[h] == 0 && last_nonzero && *last_nonzero > h)
      rep.deviations.obstruction_index = h;
  }
  return rep;
}

FrobergCheck froberg_identity_check(const HilbertSeries& H, const std::vector<mpz_class>& betti_diag,
                                    int64_t N) {
  FrobergCheck out;
  int64_t limit = std::min<int64_t>(N, static_cast<int64_t>(betti_diag.size()) - 1);
  out.checked_to = limit;
  SeriesTruncation P;
  P.c.assign(limit + 1, mpq_class(0));
  for (int64_t i = 0; i <= limit; ++i) P.c[i] = mpq_class(betti_diag[i]);
  HilbertSeries Hm = H;
  SeriesTruncation hs = SeriesTruncation::of_series(Hm, limit);
  for (std::size_t i = 1; i < hs.c.size(); i += 2) hs.c[i] = -hs.c[i];
  SeriesTruncation prod = P.mul(hs);
  for (int64_t i = 0; i <= limit; ++i) {
    mpq_class want = (i == 0) ? 1 : 0;
    if (prod.c[i] != want) {
      out.first_mismatch = i;
      break;
    }
  }
  out.holds = !out.first_mismatch.has_value();
  return out;
}

int64_t multigraded_hilbert_function(const QuotientRing& Q, const Multidegree& a) {
  if (!Q.ambient()->has_fine_grading())
    throw std::invalid_argument("ring has no fine grading");
  for (const auto& g : Q.defining_ideal().gens)
    if (!g.is_multihomogeneous())
      throw std::invalid_argument("defining ideal not homogeneous for the fine grading");
  return static_cast<int64_t>(Q.std_basis_multi(a).size());
}

CountIdentity count_identity_check(int64_t n, const std::vector<int64_t>& b) {
  if (n < 0) throw std::invalid_argument("degree must be nonnegative");
  for (int64_t bi : b)
    if (bi < 0) throw std::invalid_argument("block sizes must be nonnegative");
  CountIdentity out;
  int64_t total = 0;
  for (int64_t bi : b) total += bi;
  out.lhs = binomial(total + n - 1, n);
  // sum over compositions of n into |b| parts
  out.rhs = 0;
  std::vector<int64_t> comp(b.size(), 0);
  auto rec = [&](auto&& self, std::size_t idx, int64_t rem) -> void {
    if (idx + 1 == comp.size() || comp.empty()) {
      if (!comp.empty()) comp[idx] = rem;
      mpz_class prod = 1;
      for (std::size_t i = 0; i < comp.size(); ++i)
        prod *= binomial(comp[i] + b[i] - 1, comp[i]);
      out.rhs += prod;
      return;
    }
    for (int64_t c = 0; c <= rem; ++c) {
      comp[idx] = c;
      self(self, idx + 1, rem - c);
    }
  };
  if (b.empty())
    out.rhs = (n == 0) ? 1 : 0;
  else
    rec(rec, 0, n);
  return out;
}

namespace {

// substitute away the pivot variable: x_pivot -> combo over the others.
// Returns the quotient presentation in a ring on the remaining variables,
// and the linear form x_pivot - combo spelled in `ring`.
struct SubstStep {
  RingPtr smaller;
  std::vector<Polynomial> gens;
  Polynomial form;
};

SubstStep substitute_out(const RingPtr& ring, const std::vector<Polynomial>& gens,
                         std::size_t pivot, const std::vector<mpq_class>& combo) {
  std::vector<std::string> names;
  for (std::size_t v = 0; v < ring->nvars(); ++v)
    if (v != pivot) names.push_back(ring->var_names()[v]);
  RingPtr smaller = make_ring(ring->field(), names);
  std::vector<Polynomial> images(ring->nvars(), Polynomial(smaller));
  Polynomial replacement(smaller);
  std::size_t w = 0;
  for (std::size_t v = 0; v < ring->nvars(); ++v) {
    if (v == pivot) continue;
    images[v] = Polynomial::variable(smaller, w);
    if (combo[v] != 0) replacement = replacement + images[v].scaled(combo[v]);
    ++w;
  }
  images[pivot] = replacement;
  SubstStep out;
  out.smaller = smaller;
  out.form = Polynomial::variable(ring, pivot);
  for (std::size_t v = 0; v < ring->nvars(); ++v)
    if (v != pivot && combo[v] != 0)
      out.form = out.form - Polynomial::variable(ring, v).scaled(combo[v]);
  for (const auto& g : gens) {
    Polynomial h = substitute(g, smaller, images);
    if (!h.is_zero()) out.gens.push_back(h);
  }
  return out;
}

}  // namespace

std::optional<ArtinianReduction> artinian_reduction(const QuotientRing& Q,
                                                    uint64_t seed,
                                                    int max_attempts) {
  HilbertSeries H = hilbert_series(Q);
  int64_t dim = H.dimension();
  if (dim == 0) return ArtinianReduction{Q, {}};
  for (const mpz_class& c : H.numerator)
    if (c < 0) return std::nullopt;  // artinian reductions have h as their HF
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> small(-2, 2);
  const std::size_t n = Q.ambient()->nvars();
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    RingPtr ring = Q.ambient();
    std::vector<Polynomial> gens = Q.defining_ideal().gens;
    std::vector<Polynomial> forms;
    for (int64_t step = 0; step < dim; ++step) {
      std::size_t pivot = ring->nvars() - 1;
      std::vector<mpq_class> combo(ring->nvars(), 0);
      if (attempt == 1) {
        for (std::size_t v = 0; v + 1 < ring->nvars(); ++v) combo[v] = 1;
      } else if (attempt >= 2) {
        for (std::size_t v = 0; v + 1 < ring->nvars(); ++v)
          combo[v] = Q.ambient()->field().from_long(small(rng));
      }
      SubstStep next = substitute_out(ring, gens, pivot, combo);
      // the recorded form names surviving variables, so it lifts to the
      // original ring by name lookup
      Polynomial lifted_form(Q.ambient());
      for (const auto& t : next.form.terms()) {
        std::vector<int32_t> e(n, 0);
        for (std::size_t v = 0; v < t.mono.nvars(); ++v) {
          if (t.mono.exp(v) == 0) continue;
          int orig = Q.ambient()->var_index(ring->var_names()[v]);
          e[static_cast<std::size_t>(orig)] = t.mono.exp(v);
        }
        lifted_form = lifted_form + Polynomial::monomial(Q.ambient(), t.coeff,
                                                         Monomial(std::move(e)));
      }
      forms.push_back(std::move(lifted_form));
      ring = next.smaller;
      gens = std::move(next.gens);
    }
    try {
      QuotientRing candidate(make_ideal(ring, gens));
      HilbertSeries h2 = hilbert_series(candidate);
      if (h2.denominator_exponent == 0 && h2.numerator == H.numerator)
        return ArtinianReduction{std::move(candidate), std::move(forms)};
    } catch (const std::exception&) {
      // a linear form showed up in the substituted presentation: not regular
    }
  }
  return std::nullopt;
}

}  // namespace koszul
