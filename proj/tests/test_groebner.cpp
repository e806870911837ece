#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include "koszul/groebner.hpp"
#include "koszul/ideal_ops.hpp"

using namespace koszul;

namespace {

std::string src_dir() {
  const char* p = std::getenv("KOSZUL_SRC_DIR");
  return p ? p : ".";
}

std::vector<std::string> read_lines(const std::string& rel) {
  std::ifstream in(src_dir() + "/" + rel);
  REQUIRE(in.good());
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) lines.push_back(line);
  return lines;
}

// canonical order for set comparison: by leading monomial under the ring order
std::vector<Polynomial> sorted_basis(std::vector<Polynomial> v) {
  std::sort(v.begin(), v.end(), [](const Polynomial& f, const Polynomial& g) {
    return monomial_compare(f.leading_monomial(), g.leading_monomial(),
                            f.ring()->order()) < 0;
  });
  return v;
}

void check_matches_golden(const GroebnerBasis& G, const std::string& rel) {
  std::vector<Polynomial> expected;
  for (const auto& line : read_lines(rel))
    expected.push_back(parse_polynomial(G.ring, line));
  expected = sorted_basis(std::move(expected));
  std::vector<Polynomial> got = sorted_basis(G.elems);
  REQUIRE(got.size() == expected.size());
  for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == expected[i]);
}

Polynomial spair(const Polynomial& f, const Polynomial& g) {
  Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  Polynomial a = f.term_multiple(mpq_class(1), l / f.leading_monomial());
  Polynomial b = g.term_multiple(mpq_class(1), l / g.leading_monomial());
  return a.scaled(f.ring()->field().inv(f.leading_coeff())) -
         b.scaled(g.ring()->field().inv(g.leading_coeff()));
}

}  // namespace

TEST_CASE("reduced basis matches independent CAS golden: dim-2 quotient") {
  auto R = make_ring(Field::rationals(), {"a", "b", "c", "d"});
  Ideal I = parse_ideal(R, {"a*c", "a*d", "a*b-b*d", "a^2+b*c", "b^2"});
  GroebnerBasis G = reduced_groebner_basis(I);
  check_matches_golden(G, "tests/golden/gb_filtration_ring_degrevlex.txt");
  CHECK(!G.truncated);
}

TEST_CASE("reduced basis matches independent CAS golden: quadratic initial ideal of a lift") {
  // degrevlex with variable priority e > d > b > c > a
  auto R = make_ring(Field::rationals(), {"e", "d", "b", "c", "a"});
  Ideal I = parse_ideal(
      R, {"a^2-b*c+b*e", "d^2", "c*d", "b^2+e*b", "a*c", "a*b+a*e"});
  GroebnerBasis G = reduced_groebner_basis(I);
  check_matches_golden(G, "tests/golden/gb_lift_degrevlex_edbca.txt");
  // every leading monomial is a quadric: the initial ideal certifies a
  // quadratic Groebner deformation
  for (const Monomial& m : G.leading_monomials()) CHECK(m.degree() == 2);
}

TEST_CASE("normal form matches independent CAS golden") {
  auto R = make_ring(Field::rationals(), {"a", "b", "c", "d"});
  Ideal I = parse_ideal(R, {"a*c", "a*d", "a*b-b*d", "a^2+b*c", "b^2"});
  GroebnerBasis G = reduced_groebner_basis(I);
  Polynomial f = parse_polynomial(R, "a*b");
  Polynomial expected =
      parse_polynomial(R, read_lines("tests/golden/nf_ab_filtration_ring.txt")[0]);
  CHECK(normal_form(f, G) == expected);
}

TEST_CASE("every S-pair of a reduced basis reduces to zero") {
  auto R = make_ring(Field::rationals(), {"x", "y", "z"});
  std::vector<std::vector<std::string>> cases = {
      {"x^2-y*z", "y^2-x*z", "z^2-x*y"},
      {"x*y+z^2", "y^2-x*z"},
      {"x^3-y^2", "x*y*z-z^3", "y*z-x^2"},
  };
  for (const auto& gens : cases) {
    GroebnerBasis G = reduced_groebner_basis(parse_ideal(R, gens));
    for (std::size_t i = 0; i < G.elems.size(); ++i)
      for (std::size_t j = i + 1; j < G.elems.size(); ++j)
        CHECK(normal_form(spair(G.elems[i], G.elems[j]), G).is_zero());
  }
}

TEST_CASE("reduced basis is invariant under generator shuffling and scaling") {
  auto R = make_ring(Field::rationals(), {"a", "b", "c", "d"});
  std::vector<std::string> gens = {"a*c", "a*d", "a*b-b*d", "a^2+b*c", "b^2"};
  Ideal I = parse_ideal(R, gens);
  GroebnerBasis ref = reduced_groebner_basis(I);
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coeff(1, 9);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<Polynomial> shuffled = I.gens;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    for (auto& g : shuffled) g = g.scaled(mpq_class(coeff(rng)));
    // also mix in a random combination of two generators
    shuffled.push_back(shuffled[0] + shuffled[1].scaled(mpq_class(coeff(rng))));
    GroebnerBasis G = reduced_groebner_basis(make_ideal(R, shuffled));
    REQUIRE(G.elems.size() == ref.elems.size());
    for (std::size_t i = 0; i < G.elems.size(); ++i)
      CHECK(G.elems[i] == ref.elems[i]);
  }
}

TEST_CASE("degree-truncated basis agrees with the low-degree part of the full basis") {
  auto R = make_ring(Field::rationals(), {"a", "b", "c", "d"});
  Ideal I = parse_ideal(R, {"a*c", "a*d", "a*b-b*d", "a^2+b*c", "b^2"});
  GroebnerBasis full = reduced_groebner_basis(I);
  BuchbergerOptions opts;
  opts.degree_bound = 2;
  GroebnerBasis trunc = reduced_groebner_basis(I, opts);
  CHECK(trunc.truncated);
  std::vector<Polynomial> low;
  for (const auto& g : full.elems)
    if (g.degree() <= 2) low.push_back(g);
  REQUIRE(trunc.elems.size() == low.size());
  for (std::size_t i = 0; i < low.size(); ++i) CHECK(trunc.elems[i] == low[i]);
}

TEST_CASE("membership via normal form") {
  auto R = make_ring(Field::rationals(), {"x", "y", "z"});
  GroebnerBasis G =
      reduced_groebner_basis(parse_ideal(R, {"x^2-y*z", "y^2-x*z"}));
  CHECK(in_ideal(parse_polynomial(R, "x^2-y*z"), G));
  CHECK(in_ideal(parse_polynomial(R, "x^3-x*y*z"), G));
  CHECK(!in_ideal(parse_polynomial(R, "x*y"), G));
  CHECK(!in_ideal(parse_polynomial(R, "z^2"), G));
}

TEST_CASE("elimination recovers the conic through the twisted quadric monomials") {
  // kernel of K[u,v,w] -> K[s,t], u,v,w -> s^2, s*t, t^2 is (v^2 - u*w)
  auto A = make_ring(Field::rationals(), {"s", "t", "u", "v", "w"});
  Ideal I = parse_ideal(A, {"u-s^2", "v-s*t", "w-t^2"});
  EliminationResult E = eliminate(I, {2, 3, 4});
  REQUIRE(E.basis.elems.size() == 1);
  CHECK(E.basis.elems[0] ==
        parse_polynomial(E.subring, "v^2-u*w"));
}

TEST_CASE("algebra map kernel: Segre product of two projective lines") {
  auto A = make_ring(Field::rationals(), {"s", "t", "u", "v"});
  std::vector<Polynomial> targets = {
      parse_polynomial(A, "s*u"), parse_polynomial(A, "s*v"),
      parse_polynomial(A, "t*u"), parse_polynomial(A, "t*v")};
  KernelResult KR = algebra_map_kernel(targets, {"p", "q", "r", "w"});
  REQUIRE(KR.kernel.elems.size() == 1);
  CHECK(KR.kernel.elems[0] == parse_polynomial(KR.source, "q*r-p*w"));
}

TEST_CASE("colon identities of the filtration on the dim-2 quotient") {
  auto R = make_ring(Field::rationals(), {"a", "b", "c", "d"});
  Ideal I0 = parse_ideal(R, {"a*c", "a*d", "a*b-b*d", "a^2+b*c", "b^2"});
  auto lift = [&](const std::vector<std::string>& vars) {
    std::vector<Polynomial> gens = I0.gens;
    for (const auto& v : vars) gens.push_back(parse_polynomial(R, v));
    return make_ideal(R, gens);
  };
  auto check_colon = [&](const std::vector<std::string>& J,
                         const std::string& x,
                         const std::vector<std::string>& expected) {
    Ideal colon = ideal_colon(lift(J), parse_polynomial(R, x));
    CHECK(ideal_equal(colon, lift(expected)));
  };
  // annihilators of the cyclic quotients between consecutive filtration ideals
  check_colon({"a", "c", "d"}, "b", {"a", "b", "c", "d"});
  check_colon({"c", "d"}, "a", {"a", "b", "c", "d"});
  check_colon({"c"}, "d", {"a", "c"});
  check_colon({"c"}, "a", {"a", "c", "d"});
  check_colon({}, "a", {"c", "d"});
  check_colon({}, "c", {"a"});
}

TEST_CASE("ideal intersection and sum sanity") {
  auto R = make_ring(Field::rationals(), {"x", "y"});
  Ideal A = parse_ideal(R, {"x^2", "x*y"});
  Ideal B = parse_ideal(R, {"y"});
  Ideal inter = ideal_intersection(A, B);
  GroebnerBasis G = reduced_groebner_basis(inter);
  CHECK(in_ideal(parse_polynomial(R, "x*y"), G));
  CHECK(in_ideal(parse_polynomial(R, "x^2*y"), G));
  CHECK(!in_ideal(parse_polynomial(R, "x^2"), G));
  CHECK(!in_ideal(parse_polynomial(R, "y"), G));
  Ideal sum = ideal_sum(A, B);
  CHECK(ideal_equal(sum, parse_ideal(R, {"x^2", "y"})));
}
