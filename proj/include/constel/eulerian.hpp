#pragma once

#include <string>
#include <vector>

#include "constel/integer.hpp"
#include "constel/xseries.hpp"

namespace constel {

/// Dense univariate integer polynomial; coefficient i multiplies z^i.
class UPoly {
 public:
  UPoly() = default;
  UPoly(long c);  // NOLINT(google-explicit-constructor)
  explicit UPoly(std::vector<Integer> coeffs);

  static UPoly z() { return UPoly(std::vector<Integer>{0, 1}); }

  const std::vector<Integer>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Integer coeff(int i) const;

  UPoly& operator+=(const UPoly& rhs);
  UPoly& operator-=(const UPoly& rhs);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  bool operator==(const UPoly&) const = default;

  /// Horner evaluation at a series.
  XSeries evaluate(const XSeries& at) const;

 private:
  void trim();
  std::vector<Integer> coeffs_;  // no trailing zeros
};

UPoly pow(const UPoly& a, unsigned e);
std::string to_string(const UPoly& p, const std::string& var = "z");

/// The Fibonacci polynomials: phi_0 = 0, phi_1 = 1, phi_{n+2} = phi_{n+1} - z phi_n.
using FibPoly = UPoly;
FibPoly fib_poly(int n);

/// Checks (1-y)(1+y)^{n-1} phi_n(y/(1+y)^2) = 1 - y^n as polynomials in y.
bool fib_chebyshev_check(int n);

/// Series for triangulations (p = 3, x_1 = x, x_k = 0 otherwise), all in the
/// single variable x1 and truncated at `order`.
struct EulerContext {
  int order = 0;
  XSeries v;   // V = 1 + 2 x V^2
  XSeries y;   // y = xV (1 + y)^2
  XSeries xv;  // x V
};

EulerContext make_context(int order);

/// V_i from V_i = 1 + x V_i (V_{i-1} + V_{i+1}), V_0 = 0.
XSeries v_series(int i, int order);

/// V_i = V (1-y^i)(1-y^{i+4}) / ((1-y^{i+1})(1-y^{i+3})).
XSeries v_closed(int i, const EulerContext& ctx);
XSeries v_closed(int i, int order);

/// (r+1)/(3n+r+1) C(3n+r+1, n): number of 3-paths from (-r, r) to (3n, 0);
/// 0 for n < 0.
Integer ternary_count(int n, int r);

/// F_n = (p0_n (1-xV) - p1_n xV) V^{2n+1}.
XSeries f_closed(int n, const EulerContext& ctx);
/// The same F_n via (p0_n (1-2xV) - p3_{n-1} xV) V^{2n+1}.
XSeries f_closed_alt(int n, const EulerContext& ctx);
/// F_n^{(1)} = (p1_n (1-xV)^2 - p0_{n+1} xV) V^{2n+2}.
XSeries f1_closed(int n, const EulerContext& ctx);

/// Normalized determinants T_{3k+1}, T_{3k+2}, T_{3k+3} built from the
/// Hankel matrices with closed-form series entries.
XSeries t_n(int n, const EulerContext& ctx);

struct Det3Report {
  bool ok = true;
  std::string first_failure;
};

/// T_n = phi_n(xV) for n <= 3 kmax + 3, and T_{n+3} = (1-xV)T_{n+1} - xV T_n
/// wherever all three terms are in range.
Det3Report verify_det3_report(int kmax, const EulerContext& ctx);
bool verify_det3(int kmax, int order);

}  // namespace constel
