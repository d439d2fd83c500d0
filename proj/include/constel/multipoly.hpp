#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "constel/integer.hpp"
#include "constel/monomial.hpp"

namespace constel {

/// Exact multivariate polynomial in the V_i and x_k with integer coefficients.
///
/// Terms are stored in canonical (ascending) monomial order with no zero
/// coefficients, so structural equality is polynomial equality.
class MultiPoly {
 public:
  using Term = std::pair<Monomial, Integer>;

  MultiPoly() = default;
  MultiPoly(long c);  // NOLINT(google-explicit-constructor)
  MultiPoly(const Integer& c);  // NOLINT(google-explicit-constructor)
  MultiPoly(Monomial m, Integer c = 1);

  static MultiPoly v(std::uint32_t i) { return MultiPoly(Monomial::v(i)); }
  static MultiPoly x(std::uint32_t k) { return MultiPoly(Monomial::x(k)); }

  /// Sums duplicate monomials, drops zeros, sorts.
  static MultiPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }

  Integer coeff(const Monomial& m) const;
  Integer constant_term() const;
  /// Total degree of the highest term, -1 for zero.
  int degree() const;
  std::uint32_t max_index(Family family) const;
  bool has_family(Family family) const;

  /// Terms whose total degree is <= max_degree.
  MultiPoly truncated(int max_degree) const;
  /// Homogeneous component of the given total degree.
  MultiPoly component(int degree) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  MultiPoly& operator*=(const MultiPoly& rhs);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const Monomial& m);

  bool operator==(const MultiPoly& other) const { return terms_ == other.terms_; }

  /// Product with every term of total degree above max_degree discarded.
  friend MultiPoly mul_truncated(const MultiPoly& a, const MultiPoly& b, int max_degree);

 private:
  static MultiPoly add_scaled(const MultiPoly& a, const MultiPoly& b, int sign);

  std::vector<Term> terms_;
};

MultiPoly pow(const MultiPoly& a, unsigned e);

/// q with q * b == a. Throws NotDivisible when no such polynomial exists and
/// std::domain_error when b is zero.
MultiPoly exact_div(const MultiPoly& a, const MultiPoly& b);

/// Canonical text form, e.g. "V1*V2 + V2*V3 - 2*V3^2". Zero prints as "0".
std::string to_string(const MultiPoly& p);
std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

/// Parses the canonical text form (whitespace-insensitive, any term order).
/// Throws std::invalid_argument on malformed input.
MultiPoly parse_poly(std::string_view text);

}  // namespace constel
