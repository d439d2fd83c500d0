#include <doctest.h>

#include <sstream>

#include "constel/errors.hpp"
#include "constel/io.hpp"
#include "constel/matrix.hpp"
#include "constel/monomial.hpp"
#include "constel/multipoly.hpp"
#include "constel/substitute.hpp"
#include "constel/xseries.hpp"
#include "support/oracles.hpp"

using namespace constel;

namespace {

MultiPoly V(std::uint32_t i) { return MultiPoly::v(i); }

// The p = 3 path polynomials as printed, typed in by hand.
const MultiPoly F1 = V(1) * V(2);
const MultiPoly F2_inner = V(1) * V(2) + V(2) * V(3) + V(3) * V(4);
const MultiPoly F2 = F1 * F2_inner;
const MultiPoly F0_1 = V(1);
const MultiPoly F1_1 = V(1) * V(2) * (V(1) + V(3));

XSeries x_series(int order) { return XSeries::variable(1, order); }

}  // namespace

TEST_CASE("monomials keep sorted positive exponents") {
  const Monomial m = Monomial::v(3) * Monomial::v(1) * Monomial::v(3) * Monomial::x(2);
  CHECK(to_string(m) == "V1*V3^2*x2");
  CHECK(m.degree() == 4);
  CHECK(m.degree(Family::V) == 3);
  CHECK(m.exponent(Var::v(3)) == 2);
  CHECK(m.exponent(Var::v(2)) == 0);
  CHECK(m.max_index(Family::V) == 3);
  CHECK(to_string(Monomial()) == "1");
  CHECK_THROWS_AS(Monomial::v(0), std::invalid_argument);
  const auto q = m.divide(Monomial::v(3, 2));
  REQUIRE(q.has_value());
  CHECK(to_string(*q) == "V1*x2");
  CHECK_FALSE(m.divide(Monomial::v(2)).has_value());
}

TEST_CASE("canonical order is graded, then by leading exponents") {
  CHECK(CanonicalLess{}(Monomial::v(1), Monomial::v(1) * Monomial::v(2)));
  CHECK(CanonicalLess{}(Monomial::v(1) * Monomial::v(2), Monomial::v(2) * Monomial::v(3)));
  CHECK(CanonicalLess{}(Monomial::v(1, 2), Monomial::v(1) * Monomial::v(2)));
  CHECK(CanonicalLess{}(Monomial::v(5), Monomial::x(1)));
}

TEST_CASE("polynomial addition") {
  CHECK(V(1) + MultiPoly() == V(1));
  CHECK((V(1) + MultiPoly(-1) * V(1)).is_zero());
  CHECK(to_string(MultiPoly()) == "0");
  CHECK(to_string(MultiPoly(1)) == "1");
  CHECK(to_string(V(1) * V(2) + V(2) * V(3) + V(3) * V(4)) == "V1*V2 + V2*V3 + V3*V4");
}

TEST_CASE("polynomial multiplication") {
  CHECK(V(1) * V(2) == MultiPoly(Monomial::v(1) * Monomial::v(2)));
  CHECK((MultiPoly(1) + V(1)) * (MultiPoly(1) - V(1)) == MultiPoly(1) - V(1) * V(1));
  CHECK(to_string(F2) == "V1^2*V2^2 + V1*V2^2*V3 + V1*V2*V3*V4");
  CHECK(pow(V(1) + V(2), 3) == V(1) * V(1) * V(1) + MultiPoly(3) * V(1) * V(1) * V(2) +
                                   MultiPoly(3) * V(1) * V(2) * V(2) + V(2) * V(2) * V(2));
  CHECK(mul_truncated(MultiPoly(1) + V(1), MultiPoly(1) + V(2), 1) == MultiPoly(1) + V(1) + V(2));
}

TEST_CASE("exact division") {
  CHECK(exact_div(V(1) * V(2) * V(3), V(1) * V(2)) == V(3));
  CHECK(exact_div(F2, F1) == F2_inner);
  CHECK(exact_div(F2, F2_inner) == F1);
  CHECK_THROWS_AS(exact_div(V(1) * V(2), V(3)), NotDivisible);
  CHECK_THROWS_AS(exact_div(V(1) * V(1) + MultiPoly(1), V(1) + MultiPoly(1)), NotDivisible);
  CHECK_THROWS_AS(exact_div(V(1), MultiPoly()), std::domain_error);
  CHECK(exact_div(MultiPoly(), V(2)).is_zero());
}

TEST_CASE("parse and print are inverse") {
  const MultiPoly p = parse_poly("  -2*V3^2 + V2*V3 +V1*V2 ");
  CHECK(to_string(p) == "V1*V2 + V2*V3 - 2*V3^2");
  CHECK(parse_poly(to_string(F2)) == F2);
  CHECK(parse_poly("0").is_zero());
  CHECK(parse_poly("x1^2*V4 - 7") == MultiPoly(Monomial::v(4) * Monomial::x(1, 2)) - MultiPoly(7));
  CHECK_THROWS_AS(parse_poly("V1 +"), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly("V0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly("Y1"), std::invalid_argument);
}

TEST_CASE("big coefficients stay exact") {
  MultiPoly p = MultiPoly(1) + V(1);
  p = pow(p, 80);
  CHECK(p.coeff(Monomial::v(1, 40)) == binomial(80, 40));
  CHECK(poly_from_json(to_json(p)) == p);
}

TEST_CASE("division-free determinants") {
  PolyMatrix one{{MultiPoly(1)}};
  CHECK(det_division_free(one) == MultiPoly(1));
  PolyMatrix h{{MultiPoly(1), F1}, {F0_1, F1_1}};
  CHECK(det_division_free(h) == V(1) * V(2) * V(3));
  CHECK(det_division_free(PolyMatrix::identity(3)) == MultiPoly(1));
  CHECK(det_division_free(PolyMatrix(0, 0)) == MultiPoly(1));
  CHECK_THROWS_AS(det_division_free(PolyMatrix(2, 3)), NonSquare);
  CHECK_THROWS_AS(det_berkowitz(PolyMatrix(3, 2)), NonSquare);
}

TEST_CASE("cofactor and Berkowitz agree on an 8x8 integer matrix") {
  oracle::Rng rng(7);
  Matrix<Integer> m(8, 8);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) m(i, j) = oracle::uniform(rng, -9, 9);
  CHECK(det_cofactor(m) == det_berkowitz(m));
  CHECK(det_division_free(m) == det_cofactor(m));
}

TEST_CASE("series arithmetic and inversion") {
  const int D = 6;
  const XSeries x = x_series(D);
  const XSeries geometric = inv(XSeries(1) - x);
  for (int d = 0; d <= D; ++d) CHECK(geometric.coeff(d) == 1);
  CHECK(geometric.order() == D);

  // V = 1 + 2xV^2 gives V(1 - 2xV) = 1.
  XSeries v(MultiPoly(1), D);
  for (int k = 0; k < D; ++k) v = XSeries(1) + XSeries(2) * x * v * v;
  CHECK(inv(XSeries(1) - XSeries(2) * x * v) == v);
  const long expected[] = {1, 2, 8, 40, 224, 1344, 8448};
  for (int d = 0; d <= D; ++d) CHECK(v.coeff(d) == expected[d]);

  CHECK_THROWS_AS(inv(x), NonUnitConstant);
  CHECK_THROWS_AS(inv(XSeries(2) + x), NonUnitConstant);
  CHECK_THROWS_AS(pow(x, -1), NonUnitConstant);
  CHECK(pow(XSeries(1) - x, -2) == geometric * geometric);
  CHECK(inv(XSeries(-1) + x) == -geometric);
}

TEST_CASE("series truncation bookkeeping") {
  const XSeries a(parse_poly("1 + x1 + x1^5"), 3);
  CHECK(a.poly() == parse_poly("1 + x1"));
  CHECK(to_string(a) == "1 + x1 + O(x^4)");
  CHECK(to_string(XSeries(MultiPoly(), 2)) == "O(x^3)");
  CHECK(to_string(XSeries(3)) == "3");
  const XSeries b(parse_poly("1 + x1 + x1^4"), 5);
  CHECK(a == b);  // equal through degree 3
  CHECK((a * b).order() == 3);
  CHECK(XSeries(parse_poly("x1^2 + x2^3"), 4).valuation() == 2);
  CHECK(XSeries(MultiPoly(), 4).valuation() == 5);
  CHECK_THROWS_AS(XSeries(V(1), 2), std::invalid_argument);
  CHECK(series_from_json(to_json(a)) == a);
  CHECK(series_from_json(to_json(a)).order() == 3);
  CHECK(series_from_json(to_json(XSeries(5))).is_exact());
}

TEST_CASE("substitution") {
  const MultiPoly f3 = parse_poly(
      "V1^3*V2^3 + 2*V1^2*V2^3*V3 + V1*V2^3*V3^2 + 2*V1^2*V2^2*V3*V4 + 2*V1*V2^2*V3^2*V4 + "
      "V1*V2*V3^2*V4^2 + V1*V2^2*V3*V4*V5 + V1*V2*V3*V4^2*V5 + V1*V2*V3*V4*V5*V6");
  CHECK(evaluate_constant(f3, 1) == 12);

  SeriesAssignment ones;
  for (std::uint32_t i = 1; i <= 2; ++i) ones[i] = XSeries(MultiPoly(1), 3);
  const XSeries one_value = substitute(F1, ones, {});
  CHECK(one_value == XSeries(1));
  CHECK(one_value.order() == 3);

  // V_1 = 1 + x + ..., V_2 = 1 + 2x + ... give V1*V2 = 1 + 3x + ...
  SeriesAssignment vs{{1, XSeries(parse_poly("1 + x1"), 1)}, {2, XSeries(parse_poly("1 + 2*x1"), 1)}};
  const XSeries f1 = substitute(F1, vs, {});
  CHECK(f1.coeff(0) == 1);
  CHECK(f1.coeff(1) == 3);
  CHECK(f1.order() == 1);

  CHECK_THROWS_AS(substitute(V(3), vs, {}), UnassignedVariable);
  CHECK_THROWS_AS(substitute(MultiPoly::x(1), vs, {}), UnassignedVariable);
  const XSeries mixed = substitute(MultiPoly::x(1) * V(1), vs, {{1, x_series(4)}});
  CHECK(mixed.order() == 1);
  CHECK(mixed == XSeries(parse_poly("x1"), 1));
}

TEST_CASE("determinant matches the permutation expansion on polynomial entries") {
  oracle::Rng rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const auto n = static_cast<std::size_t>(oracle::uniform(rng, 1, 4));
    PolyMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = oracle::random_poly(rng, 3, 3, 2);
    CHECK(det_division_free(m) == oracle::leibniz_det(m));
    CHECK(det_berkowitz(m) == oracle::leibniz_det(m));
  }
}
