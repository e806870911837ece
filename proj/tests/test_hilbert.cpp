#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "koszul/hilbert.hpp"

using namespace koszul;

namespace {

// independent degreewise count: monomials of degree d in n variables not
// divisible by any generator (no Groebner or recursion machinery involved)
int64_t naive_quotient_dim(const std::vector<Monomial>& gens, std::size_t n,
                           int64_t d) {
  int64_t count = 0;
  std::vector<int32_t> e(n, 0);
  std::function<void(std::size_t, int64_t)> rec = [&](std::size_t i,
                                                      int64_t left) {
    if (i + 1 == n) {
      e[i] = static_cast<int32_t>(left);
      Monomial m{e};
      bool in_ideal = false;
      for (const auto& g : gens)
        if (m.divisible_by(g)) {
          in_ideal = true;
          break;
        }
      if (!in_ideal) ++count;
      return;
    }
    for (int64_t k = 0; k <= left; ++k) {
      e[i] = static_cast<int32_t>(k);
      rec(i + 1, left - k);
    }
  };
  rec(0, d);
  return count;
}

}  // namespace

TEST_CASE("series of the dim-2 Koszul quotient") {
  auto R = make_ring(Field::rationals(), {"a", "b", "c", "d"});
  QuotientRing Q(parse_ideal(R, {"a*c", "a*d", "a*b-b*d", "a^2+b*c", "b^2"}));
  HilbertSeries H = hilbert_series(Q);
  CHECK(H.to_string() == "(1+2z-2z^2-2z^3+2z^4)/(1-z)^2");
  CHECK(H.dimension() == 2);
  // h-polynomial coefficients drive the quadric count of any quadratic
  // monomial ideal with the same series: codim 2 and C(3,2)-(-2) = 5 quadrics
  CHECK(H.h_polynomial() == ZPoly{1, 2, -2, -2, 2});
}

TEST_CASE("series of the ideal that lifts to a quadratic initial ideal") {
  auto R = make_ring(Field::rationals(), {"a", "b", "c", "d"});
  QuotientRing Q(parse_ideal(R, {"a^2-b*c", "d^2", "c*d", "b^2", "a*c", "a*b"}));
  CHECK(hilbert_series(Q).to_string() == "(1+3z-3z^3)/(1-z)");
}

TEST_CASE("quadratic but numerically non-Koszul: inverse series and deviations") {
  auto S = make_ring(Field::rationals(), {"x", "y", "z", "t"});
  QuotientRing Q(parse_ideal(S, {"x^2", "y^2", "z^2", "t^2", "x*y+z*t"}));
  HilbertSeries H = hilbert_series(Q);
  CHECK(H.to_string() == "(1+4z+5z^2)");
  ObstructionReport rep = series_obstructions(H, 8);
  ZPoly expected = {1, 4, 11, 24, 41, 44, -29};
  for (std::size_t i = 0; i < expected.size(); ++i)
    CHECK(rep.inverse_coeffs[i] == expected[i]);
  REQUIRE(rep.first_negative_inverse.has_value());
  CHECK(*rep.first_negative_inverse == 6);
  CHECK(rep.deviations.e[1] == 4);
  CHECK(rep.deviations.e[2] == 5);
  CHECK(rep.deviations.e[3] == 0);
  CHECK(rep.deviations.e[4] == -5);
  REQUIRE(rep.deviations.obstruction_index.has_value());
  CHECK(*rep.deviations.obstruction_index == 3);
  CHECK(rep.obstructed());
}

TEST_CASE("deviations of unobstructed algebras") {
  auto R = make_ring(Field::rationals(), {"x", "y"});
  // hypersurface: 2 variables, 1 quadric, nothing above
  ObstructionReport hyp = series_obstructions(
      hilbert_series(QuotientRing(parse_ideal(R, {"x*y"}))), 8);
  CHECK(hyp.deviations.e[1] == 2);
  CHECK(hyp.deviations.e[2] == 1);
  for (std::size_t h = 3; h < hyp.deviations.e.size(); ++h)
    CHECK(hyp.deviations.e[h] == 0);
  CHECK(!hyp.obstructed());

  // complete intersection of two quadrics
  ObstructionReport ci = series_obstructions(
      hilbert_series(QuotientRing(parse_ideal(R, {"x^2", "y^2"}))), 8);
  CHECK(ci.deviations.e[1] == 2);
  CHECK(ci.deviations.e[2] == 2);
  for (std::size_t h = 3; h < ci.deviations.e.size(); ++h)
    CHECK(ci.deviations.e[h] == 0);
  CHECK(!ci.obstructed());

  // polynomial ring: a single deviation in degree 1
  ObstructionReport poly =
      series_obstructions(hilbert_series(QuotientRing(Ideal{R, {}})), 6);
  CHECK(poly.deviations.e[1] == 2);
  for (std::size_t h = 2; h < poly.deviations.e.size(); ++h)
    CHECK(poly.deviations.e[h] == 0);
}

TEST_CASE("monomial numerator recursion against naive degreewise counting") {
  auto check = [](const std::vector<std::string>& gens,
                  std::vector<std::string> vars) {
    auto R = make_ring(Field::rationals(), vars);
    Ideal I = parse_ideal(R, gens);
    std::vector<Monomial> mons;
    for (const auto& g : I.gens) mons.push_back(g.leading_monomial());
    QuotientRing Q(I);
    HilbertSeries H = hilbert_series(Q);
    for (int64_t d = 0; d <= 8; ++d)
      CHECK(H.coefficient(d) == naive_quotient_dim(mons, R->nvars(), d));
  };
  check({"x*y", "y*z"}, {"x", "y", "z"});
  check({"x^2", "x*y", "y^3"}, {"x", "y"});
  check({"x*y*z"}, {"x", "y", "z"});
  check({"x^2", "y^2", "z^2", "x*y*z"}, {"x", "y", "z"});
  check({"x*y", "z*w", "x*z"}, {"x", "y", "z", "w"});
}

TEST_CASE("series is invariant under passing to the initial ideal") {
  auto R = make_ring(Field::rationals(), {"x", "y", "z", "t"});
  std::vector<std::vector<std::string>> cases = {
      {"x^2", "y^2", "z^2", "t^2", "x*y+z*t"},
      {"x*y-z^2", "x*z-y*t"},
      {"x^2+y*z", "y^2+x*z"},
  };
  for (const auto& gens : cases) {
    Ideal I = parse_ideal(R, gens);
    QuotientRing Q(I);
    std::vector<Polynomial> lead;
    for (const auto& g : Q.gb().elems)
      lead.push_back(Polynomial::monomial(R, mpq_class(1), g.leading_monomial()));
    QuotientRing Qin(make_ideal(R, lead));
    CHECK(hilbert_series(Q) == hilbert_series(Qin));
  }
}

TEST_CASE("graded component dimensions match standard monomial bases") {
  auto R = make_ring(Field::rationals(), {"x", "y", "z"});
  QuotientRing Q(parse_ideal(R, {"x^2-y*z", "x*y"}));
  HilbertSeries H = hilbert_series(Q);
  for (int64_t d = 0; d <= 10; ++d)
    CHECK(H.coefficient(d) == static_cast<int64_t>(Q.dim_at(d)));
}

TEST_CASE("series arithmetic: truncated inverse is a true inverse") {
  auto R = make_ring(Field::rationals(), {"a", "b", "c", "d"});
  QuotientRing Q(parse_ideal(R, {"a*c", "a*d", "a*b-b*d", "a^2+b*c", "b^2"}));
  HilbertSeries H = hilbert_series(Q);
  SeriesTruncation F = SeriesTruncation::of_series(H, 12);
  SeriesTruncation G = F.inverse();
  SeriesTruncation one = F.mul(G);
  CHECK(one.c[0] == 1);
  for (std::size_t i = 1; i < one.c.size(); ++i) CHECK(one.c[i] == 0);
}

TEST_CASE("diagonal Poincare identity for a complete intersection of quadrics") {
  auto R = make_ring(Field::rationals(), {"x", "y"});
  HilbertSeries H = hilbert_series(QuotientRing(parse_ideal(R, {"x^2", "y^2"})));
  // the K-resolution over this ring has diagonal Betti numbers 1, 2, 3, ...
  std::vector<mpz_class> diag;
  for (int64_t i = 0; i <= 8; ++i) diag.emplace_back(i + 1);
  FrobergCheck ok = froberg_identity_check(H, diag, 8);
  CHECK(ok.holds);
  CHECK(ok.checked_to == 8);
  CHECK(!ok.first_mismatch);

  // tampering with one diagonal value must be caught at that order
  diag[5] += 1;
  FrobergCheck bad = froberg_identity_check(H, diag, 8);
  CHECK(!bad.holds);
  REQUIRE(bad.first_mismatch.has_value());
  CHECK(*bad.first_mismatch == 5);
}

TEST_CASE("bigraded component dimensions") {
  std::vector<Multidegree> mdeg = {{1, 0}, {1, 0}, {0, 1}, {0, 1}};
  auto R = make_ring(Field::rationals(), {"x1", "x2", "y1", "y2"},
                     MonomialOrder::degrevlex(), mdeg);
  QuotientRing free(Ideal{R, {}});
  CHECK(multigraded_hilbert_function(free, {2, 3}) == 3 * 4);
  QuotientRing segre(parse_ideal(R, {"x1*y2-x2*y1"}));
  for (int64_t a = 0; a <= 3; ++a)
    for (int64_t b = 0; b <= 3; ++b)
      CHECK(multigraded_hilbert_function(segre, {a, b}) == a + b + 1);
}

TEST_CASE("block count identity over a small grid") {
  for (int64_t n = 0; n <= 5; ++n) {
    CHECK(count_identity_check(n, {1, 1, 1}).holds());
    CHECK(count_identity_check(n, {2, 3}).holds());
    CHECK(count_identity_check(n, {1, 2, 3}).holds());
    CHECK(count_identity_check(n, {4}).holds());
    CHECK(count_identity_check(n, {2, 2, 2, 2}).holds());
  }
}
