#include <doctest.h>

#include "constel/eulerian.hpp"
#include "constel/gf_solver.hpp"
#include "constel/paths.hpp"
#include "constel/substitute.hpp"
#include "support/oracles.hpp"

using namespace constel;

namespace {

/// Substitutes V_i -> v_series(i) (V_0 never occurs in a path polynomial).
XSeries substitute_vi(const MultiPoly& poly, int order) {
  SeriesAssignment assign;
  for (std::uint32_t i = 1; i <= poly.max_index(Family::V); ++i) assign[i] = v_series(static_cast<int>(i), order);
  return substitute(poly, assign, {}, order);
}

UPoly poly_of(std::initializer_list<long> cs) {
  std::vector<Integer> v;
  for (long c : cs) v.emplace_back(c);
  return UPoly(std::move(v));
}

}  // namespace

TEST_CASE("context series") {
  const EulerContext ctx = make_context(8);
  const long expected[] = {1, 2, 8, 40, 224};
  for (int d = 0; d <= 4; ++d) CHECK(ctx.v.coeff(d) == expected[d]);
  CHECK(ctx.y.constant_term() == 0);
  CHECK(ctx.xv * (ctx.y * ctx.y + XSeries(1)) == ctx.y * (XSeries(1) - XSeries(2) * ctx.xv));
  CHECK(ctx.y.order() == 8);
  CHECK(make_context(0).y == XSeries(MultiPoly(), 0));
}

TEST_CASE("V_i by recurrence") {
  CHECK(v_series(0, 5).poly().is_zero());
  CHECK(v_series(1, 2) == XSeries(parse_poly("1 + x1 + 3*x1^2"), 2));
  const int N = 4;
  const EulerContext ctx = make_context(N);
  for (int i = 2 * N + 3; i <= 2 * N + 5; ++i) CHECK(v_series(i, N) == ctx.v);
}

TEST_CASE("V_i closed form") {
  CHECK(v_closed(1, 4) == v_series(1, 4));
  const EulerContext ctx = make_context(5);
  for (int i = 6; i <= 9; ++i) CHECK(v_closed(i, ctx) == ctx.v);
  for (int i = 1; i <= 4; ++i) CHECK(v_closed(i, 0) == XSeries(MultiPoly(1), 0));
  CHECK_THROWS_AS(v_closed(0, 3), std::invalid_argument);
}

TEST_CASE("V_i recurrence and closed form agree, and V - V_i starts at x^i") {
  const int N = 16;
  const EulerContext ctx = make_context(N);
  for (int i = 1; i <= 8; ++i) {
    const XSeries vi = v_series(i, N);
    CHECK(vi == v_closed(i, ctx));
    CHECK((ctx.v - vi).valuation() >= i);
    CHECK((ctx.v - vi).valuation() == i);
  }
}

TEST_CASE("Fibonacci polynomials") {
  CHECK(fib_poly(0) == UPoly());
  CHECK(fib_poly(1) == UPoly(1));
  CHECK(fib_poly(3) == poly_of({1, -1}));
  CHECK(fib_poly(5) == poly_of({1, -3, 1}));
  CHECK(fib_poly(6) == poly_of({1, -4, 3}));
  CHECK(to_string(fib_poly(5)) == "1 - 3*z + z^2");
  for (int n = 1; n <= 12; ++n) CHECK(fib_chebyshev_check(n));
  CHECK_THROWS_AS(fib_poly(-1), std::invalid_argument);
}

TEST_CASE("ternary counts") {
  CHECK(ternary_count(3, 0) == 12);
  CHECK(ternary_count(1, 1) == 2);
  CHECK(ternary_count(-1, 3) == 0);
  for (int n = 1; n <= 6; ++n) CHECK(ternary_count(n, 1) == ternary_count(n, 0) + ternary_count(n - 1, 3));
}

TEST_CASE("closed forms of F_n and F_n^(1)") {
  const int N = 12;
  const EulerContext ctx = make_context(N);
  CHECK(f_closed(0, ctx) == XSeries(MultiPoly(1), N));
  const XSeries f1 = f_closed(1, ctx);
  CHECK(f1.coeff(0) == 1);
  CHECK(f1.coeff(1) == 3);
  CHECK(f1_closed(0, ctx) == v_series(1, N));
  for (int n = 0; n <= 4; ++n) {
    CHECK(f_closed(n, ctx) == substitute_vi(f_poly(3, n, 0), N));
    CHECK(f1_closed(n, ctx) == substitute_vi(f_poly(3, n, 1), N));
  }
  for (int n = 0; n <= 5; ++n) CHECK(f_closed_alt(n, ctx) == f_closed(n, ctx));
  const XSeries x = XSeries::variable(1, N);
  for (int n = 0; n <= 4; ++n) {
    XSeries rhs = x * f_closed(n + 1, ctx);
    for (int i = 0; i <= n; ++i) rhs += f_closed(i, ctx) * f_closed(n - i, ctx);
    CHECK(f1_closed(n, ctx) == rhs);
  }
}

TEST_CASE("normalized determinants") {
  const int N = 12;
  const EulerContext ctx = make_context(N);
  const XSeries one(MultiPoly(1), N);
  CHECK(t_n(1, ctx) == one);
  CHECK(t_n(2, ctx) == one);
  CHECK(t_n(3, ctx) == one - ctx.xv);
  CHECK(t_n(4, ctx) == one - XSeries(2) * ctx.xv);
  // T_6 V^3 is the H_3^{2,1} determinant.
  CHECK((one - ctx.xv) * (one - XSeries(3) * ctx.xv) * pow(ctx.v, 3) ==
        fib_poly(6).evaluate(ctx.xv) * pow(ctx.v, 3));
  for (int n = 1; n <= 12; ++n) CHECK(t_n(n, ctx) == fib_poly(n).evaluate(ctx.xv));
  for (int n = 1; n + 3 <= 12; ++n)
    CHECK(t_n(n + 3, ctx) == (one - ctx.xv) * t_n(n + 1, ctx) - ctx.xv * t_n(n, ctx));
}

TEST_CASE("first determinants in closed form") {
  const int N = 6;
  const EulerContext ctx = make_context(N);
  // H_3^{0,0} = F_0 = 1 = V (1 - 2xV).
  CHECK(f_closed(0, ctx) == ctx.v * fib_poly(4).evaluate(ctx.xv));
  // H_3^{1,0} = F_0^{(1)} = V_1 = V^2 phi_5(xV).
  const XSeries h10 = f1_closed(0, ctx);
  CHECK(h10 == pow(ctx.v, 2) * fib_poly(5).evaluate(ctx.xv));
  CHECK(h10.coeff(0) == 1);
  CHECK(h10.coeff(1) == 1);
}

TEST_CASE("full determinant verification") {
  const Det3Report report = verify_det3_report(3, make_context(12));
  CHECK(report.ok);
  CHECK(report.first_failure.empty());
  CHECK(verify_det3(1, 6));
}
