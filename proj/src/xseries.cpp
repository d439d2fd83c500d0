#include "constel/xseries.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "constel/errors.hpp"

namespace constel {

XSeries::XSeries(MultiPoly p, int order) : order_(order) {
  if (order < 0) throw std::invalid_argument("XSeries: negative truncation order");
  if (p.has_family(Family::V)) throw std::invalid_argument("XSeries: V variables are not series variables");
  poly_ = order == kExact ? std::move(p) : p.truncated(order);
}

XSeries XSeries::variable(std::uint32_t k, int order) { return XSeries(MultiPoly::x(k), order); }

int XSeries::valuation() const {
  if (poly_.is_zero()) return order_ == kExact ? kExact : order_ + 1;
  return static_cast<int>(poly_.terms().front().first.degree());
}

XSeries XSeries::truncated(int order) const {
  if (order >= order_) return *this;
  return XSeries(poly_, order);
}

XSeries XSeries::operator-() const {
  XSeries out = *this;
  out.poly_ = -poly_;
  return out;
}

XSeries& XSeries::operator+=(const XSeries& rhs) {
  order_ = std::min(order_, rhs.order_);
  poly_ += rhs.poly_;
  if (order_ != kExact) poly_ = poly_.truncated(order_);
  return *this;
}

XSeries& XSeries::operator-=(const XSeries& rhs) {
  order_ = std::min(order_, rhs.order_);
  poly_ -= rhs.poly_;
  if (order_ != kExact) poly_ = poly_.truncated(order_);
  return *this;
}

XSeries& XSeries::operator*=(const XSeries& rhs) { return *this = *this * rhs; }

XSeries operator*(const XSeries& a, const XSeries& b) {
  XSeries out;
  out.order_ = std::min(a.order_, b.order_);
  out.poly_ = mul_truncated(a.poly_, b.poly_, out.order_);
  return out;
}

bool XSeries::operator==(const XSeries& other) const {
  const int order = std::min(order_, other.order_);
  if (order == kExact) return poly_ == other.poly_;
  return poly_.truncated(order) == other.poly_.truncated(order);
}

XSeries inv(const XSeries& a) {
  const Integer c0 = a.constant_term();
  if (c0 != 1 && c0 != -1)
    throw NonUnitConstant("inv: constant term " + c0.get_str() + " is not a unit");
  if (a.poly().is_constant()) return XSeries(c0);
  if (a.is_exact()) throw std::domain_error("inv: a non-constant exact series has no finite inverse");

  // Degree by degree: b_d = -c0 * sum_{j=1..d} a_j b_{d-j}.
  const int order = a.order();
  std::vector<MultiPoly> a_parts(order + 1);
  for (int d = 0; d <= order; ++d) a_parts[d] = a.component(d);
  std::vector<MultiPoly> b_parts(order + 1);
  b_parts[0] = MultiPoly(c0);
  MultiPoly total = b_parts[0];
  for (int d = 1; d <= order; ++d) {
    MultiPoly acc;
    for (int j = 1; j <= d; ++j)
      if (!a_parts[j].is_zero() && !b_parts[d - j].is_zero()) acc += a_parts[j] * b_parts[d - j];
    b_parts[d] = c0 == 1 ? -acc : acc;
    total += b_parts[d];
  }
  return XSeries(std::move(total), order);
}

XSeries pow(const XSeries& a, long e) {
  if (e < 0) return pow(inv(a), -e);
  XSeries result(1);
  XSeries base = a;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  if (result.is_exact() && !a.is_exact()) result = XSeries(result.poly(), a.order());
  return result;
}

std::string to_string(const XSeries& s) {
  std::string out = to_string(s.poly());
  if (s.is_exact()) return out;
  if (s.poly().is_zero()) return "O(x^" + std::to_string(s.order() + 1) + ")";
  return out + " + O(x^" + std::to_string(s.order() + 1) + ")";
}

std::ostream& operator<<(std::ostream& os, const XSeries& s) { return os << to_string(s); }

}  // namespace constel
