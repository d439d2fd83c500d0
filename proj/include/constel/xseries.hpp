#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <string>

#include "constel/multipoly.hpp"

namespace constel {

/// Truncated power series in the face weights x_1, x_2, ..., graded by total
/// x-degree (every x_k has degree 1).
///
/// A series knows its truncation order D: coefficients of degree <= D are
/// exact, everything above is unknown. Constants built from integers carry
/// the order kExact and adopt the order of whatever they are combined with.
class XSeries {
 public:
  static constexpr int kExact = std::numeric_limits<int>::max();

  XSeries() = default;
  XSeries(long c) : poly_(c) {}  // NOLINT(google-explicit-constructor)
  XSeries(const Integer& c) : poly_(c) {}  // NOLINT(google-explicit-constructor)
  /// Truncates p at degree `order`. p must not involve any V variable.
  XSeries(MultiPoly p, int order);

  /// The series x_k, known through `order`.
  static XSeries variable(std::uint32_t k, int order);

  int order() const { return order_; }
  bool is_exact() const { return order_ == kExact; }
  const MultiPoly& poly() const { return poly_; }

  MultiPoly component(int degree) const { return poly_.component(degree); }
  Integer coeff(const Monomial& m) const { return poly_.coeff(m); }
  /// Coefficient of x_1^d, the univariate view used for triangulations.
  Integer coeff(int d) const { return poly_.coeff(Monomial::x(1, static_cast<std::uint32_t>(d))); }
  Integer constant_term() const { return poly_.constant_term(); }

  /// Degree of the lowest nonzero term, or order()+1 when all known
  /// coefficients vanish.
  int valuation() const;

  XSeries truncated(int order) const;

  XSeries operator-() const;
  XSeries& operator+=(const XSeries& rhs);
  XSeries& operator-=(const XSeries& rhs);
  XSeries& operator*=(const XSeries& rhs);

  friend XSeries operator+(XSeries a, const XSeries& b) { return a += b; }
  friend XSeries operator-(XSeries a, const XSeries& b) { return a -= b; }
  friend XSeries operator*(const XSeries& a, const XSeries& b);

  /// Equal when every coefficient through the smaller of the two orders
  /// agrees.
  bool operator==(const XSeries& other) const;

 private:
  MultiPoly poly_;
  int order_ = kExact;
};

/// Multiplicative inverse. Requires a constant term of +1 or -1 and a finite
/// order (unless the series is itself a constant).
XSeries inv(const XSeries& a);

/// a^e; negative exponents go through inv().
XSeries pow(const XSeries& a, long e);

/// "1 + 2*x1 + 8*x1^2 + O(x^3)". The O-term names the first unknown total
/// degree and is omitted for exact series.
std::string to_string(const XSeries& s);
std::ostream& operator<<(std::ostream& os, const XSeries& s);

}  // namespace constel
