#pragma once

#include <vector>

#include "constel/multipoly.hpp"

namespace constel {

/// Power series in the rise marker t with polynomial coefficients, truncated
/// after t^order().
struct TSeries {
  std::vector<MultiPoly> coeffs;

  int order() const { return static_cast<int>(coeffs.size()) - 1; }
  const MultiPoly& operator[](int n) const { return coeffs.at(static_cast<std::size_t>(n)); }
  bool operator==(const TSeries&) const = default;
};

/// F^{(r)}(t; V_{shift+1}, V_{shift+2}, ...) through t^order, from the
/// first-rise / first-passage recursions between the F^{(r)}.
TSeries expand_f(int p, int r, int shift, int order);

/// Sum_n F_n t^n evaluated as the nested fraction
///   1 / (1 - t * prod_{i=1}^{p-1} V_i F^{(0)}(t; V_{i+1}, ...))
/// unfolded `depth` levels deep, the innermost tail replaced by 1. The
/// default depth (order + 1) is exact through t^order.
TSeries expand_multicont(int p, int order, int depth = -1);

}  // namespace constel
