#include "koszul/groebner.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace koszul {

Ideal make_ideal(const RingPtr& ring, std::vector<Polynomial> gens) {
  for (const auto& g : gens)
    if (!g.ring() || !g.ring()->same_as(*ring))
      throw std::invalid_argument("ring mismatch in ideal generators");
  return Ideal{ring, std::move(gens)};
}

Ideal parse_ideal(const RingPtr& ring, const std::vector<std::string>& gens) {
  std::vector<Polynomial> ps;
  ps.reserve(gens.size());
  for (const auto& s : gens) ps.push_back(parse_polynomial(ring, s));
  return Ideal{ring, std::move(ps)};
}

bool ideal_is_homogeneous(const Ideal& I) {
  for (const auto& g : I.gens)
    if (!g.is_homogeneous()) return false;
  return true;
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> ms;
  ms.reserve(elems.size());
  for (const auto& g : elems) ms.push_back(g.leading_monomial());
  return ms;
}

std::vector<int64_t> GroebnerBasis::element_degrees() const {
  std::vector<int64_t> ds;
  ds.reserve(elems.size());
  for (const auto& g : elems) ds.push_back(g.degree());
  return ds;
}

namespace {

struct BasisEntry {
  Polynomial poly;  // monic
  Monomial lm;
  uint64_t mask;
  int64_t deg;
};

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  int64_t deg;
};

class Engine {
 public:
  Engine(RingPtr ring, const BuchbergerOptions& opts)
      : ring_(std::move(ring)), ord_(ring_->order()), opts_(opts) {}

  void add_generator(const Polynomial& f) {
    Polynomial r = reduce_full(f);
    if (!r.is_zero()) add_element(r.monic());
  }

  void run() {
    while (!queue_.empty()) {
      Pair p = pop_pair();
      if (opts_.degree_bound >= 0 && p.deg > opts_.degree_bound) {
        truncated_ = true;
        continue;
      }
      if (!pair_alive(p)) continue;
      Polynomial s = spoly(p);
      Polynomial r = reduce_full(s);
      if (!r.is_zero()) add_element(r.monic());
    }
  }

  bool truncated() const { return truncated_; }

  std::vector<Polynomial> interreduced() {
    // minimal basis: drop entries whose lead is divisible by another lead,
    // ties broken toward the earlier index
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      bool redundant = false;
      for (std::size_t j = 0; j < basis_.size() && !redundant; ++j) {
        if (i == j) continue;
        if (basis_[i].lm.divisible_by(basis_[j].lm) &&
            (!(basis_[i].lm == basis_[j].lm) || j < i))
          redundant = true;
      }
      if (!redundant) keep.push_back(i);
    }
    // tail-reduce each kept element against the others; a minimal element's
    // own lead cannot divide its tail, so skipping b == a is safe
    std::vector<Polynomial> out;
    for (std::size_t idx : keep) out.push_back(basis_[idx].poly);
    for (std::size_t a = 0; a < out.size(); ++a) {
      Polynomial f = out[a];
      Polynomial acc(ring_);
      while (!f.is_zero()) {
        bool reduced = false;
        for (std::size_t b = 0; b < out.size(); ++b) {
          if (b == a) continue;
          if (f.leading_monomial().divisible_by(out[b].leading_monomial())) {
            f = f - out[b].term_multiple(f.leading_coeff(),
                                         f.leading_monomial() / out[b].leading_monomial());
            reduced = true;
            break;
          }
        }
        if (!reduced) {
          acc = acc + Polynomial::monomial(ring_, f.leading_coeff(), f.leading_monomial());
          f = f - Polynomial::monomial(ring_, f.leading_coeff(), f.leading_monomial());
        }
      }
      out[a] = acc.monic();
    }
    std::sort(out.begin(), out.end(), [&](const Polynomial& x, const Polynomial& y) {
      return monomial_compare(x.leading_monomial(), y.leading_monomial(), ord_) < 0;
    });
    return out;
  }

 private:
  Polynomial spoly(const Pair& p) {
    const BasisEntry& f = basis_[p.i];
    const BasisEntry& g = basis_[p.j];
    return f.poly.term_multiple(1, p.lcm / f.lm) - g.poly.term_multiple(1, p.lcm / g.lm);
  }

  // full normal form against the current basis
  Polynomial reduce_full(Polynomial f) {
    Polynomial acc(ring_);
    while (!f.is_zero()) {
      const Monomial& m = f.leading_monomial();
      int d = find_divisor(m);
      if (d >= 0) {
        const BasisEntry& g = basis_[d];
        f = f - g.poly.term_multiple(f.leading_coeff(), m / g.lm);
      } else {
        acc = acc + Polynomial::monomial(ring_, f.leading_coeff(), m);
        f = f - Polynomial::monomial(ring_, f.leading_coeff(), m);
      }
    }
    return acc;
  }

  int find_divisor(const Monomial& m) const {
    uint64_t mask = m.mask();
    int64_t deg = m.degree();
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      const BasisEntry& b = basis_[i];
      if ((b.mask & ~mask) != 0 || b.deg > deg) continue;
      if (m.divisible_by(b.lm)) return static_cast<int>(i);
    }
    return -1;
  }

  // pairs pruned after queueing are skipped at pop time
  bool pair_alive(const Pair& p) {
    auto key = std::make_pair(std::min(p.i, p.j), std::max(p.i, p.j));
    return alive_.erase(key) != 0;
  }

  Pair pop_pair() {
    Pair p = queue_.top();
    queue_.pop();
    return p;
  }

  void push_pair(std::size_t i, std::size_t j) {
    Monomial m = lcm(basis_[i].lm, basis_[j].lm);
    int64_t d = m.degree();
    queue_.push(Pair{i, j, std::move(m), d});
    alive_.insert({std::min(i, j), std::max(i, j)});
  }

  void add_element(Polynomial f) {
    std::size_t t = basis_.size();
    Monomial lm = f.leading_monomial();
    basis_.push_back(BasisEntry{std::move(f), lm, lm.mask(), lm.degree()});

    // Gebauer-Moller update
    // 1. prune old pairs whose lcm is strictly covered through the new element
    std::vector<std::pair<std::size_t, std::size_t>> dead;
    for (const auto& key : alive_) {
      std::size_t i = key.first, j = key.second;
      if (i == t || j == t) continue;
      Monomial mij = lcm(basis_[i].lm, basis_[j].lm);
      if (!mij.divisible_by(lm)) continue;
      if (lcm(basis_[i].lm, lm) == mij) continue;
      if (lcm(basis_[j].lm, lm) == mij) continue;
      dead.push_back(key);
    }
    for (const auto& key : dead) alive_.erase(key);

    // 2. new pairs, keeping only minimal lcms; one representative per lcm;
    //    the whole lcm class dies when some class member has coprime leads
    struct Cand {
      std::size_t i;
      Monomial lcm;
      bool coprime;
    };
    std::vector<Cand> cands;
    for (std::size_t i = 0; i < t; ++i)
      cands.push_back(Cand{i, lcm(basis_[i].lm, lm), coprime(basis_[i].lm, lm)});
    std::vector<char> drop(cands.size(), 0);
    for (std::size_t a = 0; a < cands.size(); ++a)
      for (std::size_t b = 0; b < cands.size(); ++b) {
        if (a == b || drop[a]) continue;
        if (cands[a].lcm == cands[b].lcm) continue;
        if (cands[a].lcm.divisible_by(cands[b].lcm)) drop[a] = 1;
      }
    // group survivors by lcm
    std::vector<std::size_t> order;
    for (std::size_t a = 0; a < cands.size(); ++a)
      if (!drop[a]) order.push_back(a);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      int c = monomial_compare(cands[a].lcm, cands[b].lcm, ord_);
      if (c != 0) return c < 0;
      return cands[a].i < cands[b].i;
    });
    for (std::size_t idx = 0; idx < order.size();) {
      std::size_t end = idx;
      bool any_coprime = false;
      while (end < order.size() && cands[order[end]].lcm == cands[order[idx]].lcm) {
        any_coprime |= cands[order[end]].coprime;
        ++end;
      }
      if (!any_coprime) push_pair(cands[order[idx]].i, t);
      idx = end;
    }
  }

  struct PairCmp {
    const MonomialOrder* ord;
    bool operator()(const Pair& a, const Pair& b) const {
      if (a.deg != b.deg) return a.deg > b.deg;  // min-degree first
      int c = monomial_compare(a.lcm, b.lcm, *ord);
      if (c != 0) return c > 0;
      if (a.j != b.j) return a.j > b.j;
      return a.i > b.i;
    }
  };

  RingPtr ring_;
  MonomialOrder ord_;
  BuchbergerOptions opts_;
  std::vector<BasisEntry> basis_;
  std::priority_queue<Pair, std::vector<Pair>, PairCmp> queue_{PairCmp{&ord_}};
  std::set<std::pair<std::size_t, std::size_t>> alive_;
  bool truncated_ = false;
};

}  // namespace

GroebnerBasis reduced_groebner_basis(const Ideal& I, const MonomialOrder& ord,
                                     const BuchbergerOptions& opts) {
  RingPtr R = with_order(I.ring, ord);
  if (opts.degree_bound >= 0 && !ord.degree_compatible())
    throw std::invalid_argument("degree truncation needs a degree-compatible order");
  Engine eng(R, opts);
  // feed generators sorted for determinism and better reduction behavior
  std::vector<Polynomial> gens;
  for (const auto& g : I.gens)
    if (!g.is_zero()) gens.push_back(g.converted(R));
  std::sort(gens.begin(), gens.end(), [&](const Polynomial& a, const Polynomial& b) {
    return monomial_compare(a.leading_monomial(), b.leading_monomial(), ord) < 0;
  });
  for (const auto& g : gens) {
    if (opts.degree_bound >= 0 && g.degree() > opts.degree_bound) {
      // cannot contribute below the bound for homogeneous input
      continue;
    }
    eng.add_generator(g);
  }
  eng.run();
  GroebnerBasis out;
  out.ring = R;
  out.elems = eng.interreduced();
  out.degree_bound = opts.degree_bound;
  out.truncated = eng.truncated();
  if (out.degree_bound >= 0)
    for (const auto& g : I.gens)
      if (!g.is_zero() && g.degree() > out.degree_bound) out.truncated = true;
  return out;
}

GroebnerBasis reduced_groebner_basis(const Ideal& I, const BuchbergerOptions& opts) {
  return reduced_groebner_basis(I, I.ring->order(), opts);
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G) {
  Polynomial p = f.ring()->same_as(*G.ring) ? f.converted(G.ring)
                                            : throw std::invalid_argument("ring mismatch in normal form");
  Polynomial acc(G.ring);
  while (!p.is_zero()) {
    const Monomial& m = p.leading_monomial();
    bool hit = false;
    for (const auto& g : G.elems) {
      if (m.divisible_by(g.leading_monomial())) {
        p = p - g.term_multiple(p.leading_coeff(), m / g.leading_monomial());
        hit = true;
        break;
      }
    }
    if (!hit) {
      acc = acc + Polynomial::monomial(G.ring, p.leading_coeff(), m);
      p = p - Polynomial::monomial(G.ring, p.leading_coeff(), m);
    }
  }
  return acc;
}

bool in_ideal(const Polynomial& f, const GroebnerBasis& G) { return normal_form(f, G).is_zero(); }

}  // namespace koszul
