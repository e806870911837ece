#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "koszul/linalg.hpp"
#include "koszul/polynomial.hpp"

using namespace koszul;

namespace {

Monomial mono(std::vector<int32_t> e) { return Monomial(std::move(e)); }

Monomial random_monomial(std::mt19937& rng, std::size_t nvars, int maxe = 4) {
  std::uniform_int_distribution<int32_t> d(0, maxe);
  std::vector<int32_t> e(nvars);
  for (auto& x : e) x = d(rng);
  return Monomial(std::move(e));
}

Polynomial random_poly(std::mt19937& rng, const RingPtr& R, int maxterms = 5) {
  std::uniform_int_distribution<int> nt(0, maxterms);
  std::uniform_int_distribution<int> c(-9, 9);
  std::vector<Term> ts;
  int n = nt(rng);
  for (int i = 0; i < n; ++i) ts.push_back(Term{mpq_class(c(rng)), random_monomial(rng, R->nvars())});
  return Polynomial(R, std::move(ts));
}

}  // namespace

TEST_CASE("monomial basics") {
  Monomial a = mono({1, 0, 2});
  Monomial b = mono({0, 2, 1});
  CHECK(a.degree() == 3);
  CHECK((a * b).exps() == std::vector<int32_t>{1, 2, 3});
  CHECK(lcm(a, b).exps() == std::vector<int32_t>{1, 2, 2});
  CHECK(gcd(a, b).exps() == std::vector<int32_t>{0, 0, 1});
  CHECK(!a.divisible_by(b));
  CHECK((a * b).divisible_by(a));
  CHECK(((a * b) / a) == b);
  CHECK(!coprime(a, b));
  CHECK(coprime(mono({2, 0, 0}), mono({0, 3, 1})));
  CHECK_THROWS_AS(a / b, std::domain_error);
  CHECK_THROWS_AS(mono({1, 2}) * a, std::invalid_argument);
  CHECK_THROWS_AS(Monomial(std::vector<int32_t>{-1, 0}), std::invalid_argument);
}

TEST_CASE("monomial compare: pinned examples") {
  // lex with x1 > x2 > x3
  CHECK(monomial_compare(mono({1, 0, 0}), mono({0, 3, 0}), MonomialOrder::lex()) > 0);
  // degrevlex: x1*x3^2 < x2^2*x3 (equal degree, revlex tie on the last variable)
  CHECK(monomial_compare(mono({1, 0, 2}), mono({0, 2, 1}), MonomialOrder::degrevlex()) < 0);
  // eliminating x1 by a block order: anything containing x1 beats anything without it
  MonomialOrder blk = MonomialOrder::block_elim({1, 0, 0});
  CHECK(monomial_compare(mono({1, 0, 0}), mono({0, 5, 0}), blk) > 0);
  // deglex ranks degree first, then lex
  CHECK(monomial_compare(mono({1, 0, 0}), mono({0, 3, 0}), MonomialOrder::deglex()) < 0);
  CHECK(monomial_compare(mono({1, 1, 0}), mono({0, 2, 0}), MonomialOrder::deglex()) > 0);
}

TEST_CASE("monomial compare respects the variable priority permutation") {
  // degrevlex with priority e>d>b>c>a on (a,b,c,d,e): ab < ae
  std::vector<int> perm{4, 3, 1, 2, 0};
  Monomial ab = mono({1, 1, 0, 0, 0});
  Monomial ae = mono({1, 0, 0, 0, 1});
  CHECK(monomial_compare(ab, ae, MonomialOrder::degrevlex_perm(perm)) < 0);
  CHECK(monomial_compare(ab, ae, MonomialOrder::degrevlex()) > 0);
}

TEST_CASE("order axioms hold on random triples for every order kind") {
  std::mt19937 rng(20240811);
  std::vector<MonomialOrder> orders = {
      MonomialOrder::lex(),
      MonomialOrder::deglex(),
      MonomialOrder::degrevlex(),
      MonomialOrder::degrevlex_perm({2, 0, 1, 3}),
      MonomialOrder::weight_order({3, 1, 4, 1}),
      MonomialOrder::block_elim({1, 1, 0, 0}),
  };
  Monomial one = Monomial::one(4);
  for (const auto& ord : orders) {
    for (int it = 0; it < 300; ++it) {
      Monomial a = random_monomial(rng, 4), b = random_monomial(rng, 4), c = random_monomial(rng, 4);
      int ab = monomial_compare(a, b, ord);
      // totality and antisymmetry
      CHECK(monomial_compare(b, a, ord) == -ab);
      CHECK((ab == 0) == (a == b));
      // multiplicativity
      CHECK(monomial_compare(a * c, b * c, ord) == ab);
      // 1 is the least monomial
      if (!(a == one)) CHECK(monomial_compare(a, one, ord) > 0);
      // transitivity on the sampled triple
      int bc = monomial_compare(b, c, ord);
      if (ab > 0 && bc > 0) CHECK(monomial_compare(a, c, ord) > 0);
    }
  }
}

TEST_CASE("polynomial arithmetic: pinned expansions") {
  auto R = make_ring(Field::rationals(), {"x", "y"});
  Polynomial x = Polynomial::variable(R, 0), y = Polynomial::variable(R, 1);
  CHECK((x + y) * (x + y) == x * x + (x * y).scaled(2) + y * y);
  CHECK(to_string((x + y) * (x + y)) == "x^2 + 2*x*y + y^2");
  CHECK((x + y) * (x - y) == x * x - y * y);
  CHECK(((x + y) * (x + y)).degree() == 2);

  auto F2 = make_ring(Field::prime(2), {"x", "y"});
  Polynomial u = Polynomial::variable(F2, 0), v = Polynomial::variable(F2, 1);
  CHECK((u + v) * (u + v) == u * u + v * v);
  CHECK(to_string((u + v) * (u + v)) == "x^2 + y^2");
}

TEST_CASE("ring axioms on random polynomials") {
  for (Field k : {Field::rationals(), Field::prime(7)}) {
    auto R = make_ring(k, {"x", "y", "z"});
    std::mt19937 rng(99);
    for (int it = 0; it < 120; ++it) {
      Polynomial f = random_poly(rng, R), g = random_poly(rng, R), h = random_poly(rng, R);
      CHECK(f + g == g + f);
      CHECK(f * g == g * f);
      CHECK((f + g) + h == f + (g + h));
      CHECK((f * g) * h == f * (g * h));
      CHECK(f * (g + h) == f * g + f * h);
      CHECK(f - f == Polynomial::zero(R));
      CHECK(f + Polynomial::zero(R) == f);
      CHECK(f * Polynomial::constant(R, 1) == f);
    }
  }
}

TEST_CASE("canonical form is idempotent and order-aware") {
  auto R = make_ring(Field::rationals(), {"x", "y"});
  // duplicate monomials combine; zero sums vanish
  Polynomial f(R, {Term{2, mono({1, 1})}, Term{-2, mono({1, 1})}, Term{3, mono({0, 2})}});
  CHECK(f.nterms() == 1);
  CHECK(to_string(f) == "3*y^2");
  Polynomial g(R, f.terms());
  CHECK(g == f);
  // the same terms sort differently under lex vs degrevlex
  auto Rlex = with_order(R, MonomialOrder::lex());
  Polynomial h(R, {Term{1, mono({1, 0})}, Term{1, mono({0, 5})}});
  CHECK(h.leading_monomial() == mono({0, 5}));
  CHECK(h.converted(Rlex).leading_monomial() == mono({1, 0}));
}

TEST_CASE("multidegree of monomials and homogeneity") {
  auto S = make_ring(Field::rationals(), {"x", "y", "z"});
  CHECK(S->multidegree_of(mono({2, 1, 0})) == Multidegree{3});
  // Segre-style bigrading: x,y in the first block, z in the second
  auto B = make_ring(Field::rationals(), {"x", "y", "z"}, MonomialOrder::degrevlex(),
                     {{1, 0}, {1, 0}, {0, 1}});
  CHECK(B->multidegree_of(mono({1, 1, 0})) == Multidegree{2, 0});
  CHECK(B->multidegree_of(mono({1, 0, 1})) == Multidegree{1, 1});
  CHECK(B->uniform_grading_weight() == 1);
  Polynomial f = parse_polynomial(B, "x*z - y*z");
  CHECK(f.is_multihomogeneous());
  CHECK(f.multidegree() == Multidegree{1, 1});
  Polynomial g = parse_polynomial(B, "x*y - z^2");
  CHECK(g.is_homogeneous());
  CHECK(!g.is_multihomogeneous());
  // fine Z^2 grading with uniform weight 2
  auto V = make_ring(Field::rationals(), {"t0", "t1", "t2"}, MonomialOrder::degrevlex(),
                     {{2, 0}, {1, 1}, {0, 2}});
  CHECK(V->uniform_grading_weight() == 2);
  CHECK(V->multidegree_of(mono({1, 0, 1})) == Multidegree{2, 2});
}

TEST_CASE("grading validation") {
  CHECK_THROWS_AS(make_ring(Field::rationals(), {"x", "y"}, MonomialOrder::degrevlex(),
                            {{1, 0}, {0, 0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_ring(Field::rationals(), {"x", "y"}, MonomialOrder::degrevlex(), {{1}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_ring(Field::rationals(), {"x", "x"}), std::invalid_argument);
  CHECK_THROWS_AS(make_ring(Field::rationals(), {"2bad"}), std::invalid_argument);
  CHECK_THROWS_AS(Field::prime(6), std::invalid_argument);
}

TEST_CASE("parser round-trips and rejects junk with positions") {
  auto R = make_ring(Field::rationals(), {"x", "y", "z"});
  std::mt19937 rng(7);
  for (int it = 0; it < 60; ++it) {
    Polynomial f = random_poly(rng, R);
    CHECK(parse_polynomial(R, to_string(f)) == f);
  }
  CHECK(parse_polynomial(R, "x**2 + 3/2*y*z") ==
        parse_polynomial(R, "x^2 + 3/2 z y"));
  CHECK(parse_polynomial(R, "-x + x") == Polynomial::zero(R));
  CHECK(parse_polynomial(R, "0") == Polynomial::zero(R));
  CHECK_THROWS_AS(parse_polynomial(R, "x + w"), ParseError);
  CHECK_THROWS_AS(parse_polynomial(R, "x * + y"), ParseError);
  CHECK_THROWS_AS(parse_polynomial(R, "x ^"), ParseError);
  CHECK_THROWS_AS(parse_polynomial(R, "1/0"), ParseError);
  try {
    parse_polynomial(R, "x + w^2");
  } catch (const ParseError& e) {
    CHECK(e.pos == 4);
  }
}

TEST_CASE("mismatched rings refuse to mix") {
  auto R = make_ring(Field::rationals(), {"x", "y"});
  auto S = make_ring(Field::rationals(), {"x", "y", "z"});
  CHECK_THROWS_AS(Polynomial::variable(R, 0) + Polynomial::variable(S, 0), std::invalid_argument);
  CHECK_THROWS_AS(Polynomial::variable(R, 5), std::out_of_range);
}

TEST_CASE("exact division and substitution") {
  auto R = make_ring(Field::rationals(), {"x", "y"});
  Polynomial x = Polynomial::variable(R, 0), y = Polynomial::variable(R, 1);
  Polynomial f = (x + y) * (x - y) * (x + y.scaled(3));
  CHECK(exact_divide(f, x + y) == (x - y) * (x + y.scaled(3)));
  CHECK_THROWS_AS(exact_divide(f, x + y.scaled(2)), std::domain_error);
  auto T = make_ring(Field::rationals(), {"u"});
  Polynomial u = Polynomial::variable(T, 0);
  // x -> u^2, y -> u: x^2 - y^3 maps to u^4 - u^3
  CHECK(substitute(x * x - y * y * y, T, {u * u, u}) == u * u * u * u - u * u * u);
}

TEST_CASE("prime field canonical forms") {
  Field F5 = Field::prime(5);
  CHECK(F5.reduce(mpq_class(7)) == 2);
  CHECK(F5.reduce(mpq_class(-1)) == 4);
  CHECK(F5.reduce(mpq_class(1, 2)) == 3);  // 2*3 = 6 = 1
  CHECK(F5.inv(mpq_class(4)) == 4);
  CHECK_THROWS_AS(F5.reduce(mpq_class(1, 5)), std::domain_error);
  CHECK_THROWS_AS(F5.inv(mpq_class(0)), std::domain_error);
}

TEST_CASE("rank, rref, kernel and RowSpace agree") {
  Field Q = Field::rationals();
  QMat a = {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  CHECK(matrix_rank(a, Q) == 2);
  QMat ker = kernel_basis(a, 3, Q);
  REQUIRE(ker.size() == 1);
  for (const auto& row : a) {
    mpq_class dot = 0;
    for (std::size_t j = 0; j < 3; ++j) dot += row[j] * ker[0][j];
    CHECK(dot == 0);
  }
  // rank over F_2 can drop
  QMat b = {{2, 0}, {0, 1}};
  CHECK(matrix_rank(b, Q) == 2);
  CHECK(matrix_rank(b, Field::prime(2)) == 1);

  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int it = 0; it < 40; ++it) {
    std::size_t nr = 1 + rng() % 5, nc = 1 + rng() % 5;
    QMat m(nr, QVec(nc));
    for (auto& r : m)
      for (auto& x : r) x = d(rng);
    std::size_t rk = matrix_rank(m, Q);
    QMat copy = m;
    CHECK(rref(copy, Q).size() == rk);
    CHECK(kernel_basis(m, nc, Q).size() == nc - rk);
    RowSpace rs(nc, Q);
    for (const auto& r : m) rs.insert(r);
    CHECK(rs.dim() == rk);
    for (const auto& r : m) CHECK(rs.contains(r));
  }
}
