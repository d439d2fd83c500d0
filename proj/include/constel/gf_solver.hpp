#pragma once

#include <map>
#include <vector>

#include "constel/multipoly.hpp"
#include "constel/xseries.hpp"

namespace constel {

/// Truncation regime for the V / V_i equations.
struct SolverConfig {
  int p = 3;
  int degree = 4;          // D: total x-degree kept
  int max_x_index = 1;     // K: x_k = 0 for k > K
  int max_v_index = 1;     // I: highest V_i requested
  int index_cap = 0;       // V_i for i > index_cap is pinned to V

  /// Config with the default cap I + (p-1)*p*D.
  static SolverConfig make(int p, int degree, int max_x_index, int max_v_index);
  static int default_cap(int p, int degree, int max_v_index);

  /// Throws std::invalid_argument on out-of-range fields.
  void validate() const;
};

/// The limit V: V = 1 + sum_{n=1}^{K} C(np-1, n) x_n V^{n(p-1)}, by D rounds
/// of fixed-point iteration from V = 1.
XSeries solve_v(const SolverConfig& cfg);

/// The family V_1, V_2, ... solving V_i = 1 + V_i sum_n x_n F_n^{(i-1;i)}.
class VFamily {
 public:
  VFamily(XSeries limit, std::vector<XSeries> values, int order)
      : limit_(std::move(limit)), values_(std::move(values)), order_(order) {}

  /// V_i for i >= 1; indices above the cap return the limit V. V_0 = 0.
  const XSeries& operator[](int i) const;
  const XSeries& limit() const { return limit_; }
  int cap() const { return static_cast<int>(values_.size()); }
  int order() const { return order_; }

 private:
  XSeries limit_;
  std::vector<XSeries> values_;  // values_[i-1] = V_i
  XSeries zero_{MultiPoly(), 0};
  int order_;
};

/// Jacobi iteration over i in [1, index_cap], D sweeps from the all-ones
/// family.
VFamily solve_vi(const SolverConfig& cfg);

/// Substitutes the family into a polynomial in the V_i (x_k mapped to the
/// series variables x_k, 0 above K).
XSeries substitute_family(const MultiPoly& poly, const VFamily& family, const SolverConfig& cfg);

/// Right-hand side 1 + V_i sum_n x_n F_n^{(i-1;i)}(family) for one i.
XSeries vi_equation_rhs(const SolverConfig& cfg, const VFamily& family, int i);

/// F_n from the closed formula in V (coefficients checked to be integers).
XSeries f_from_v(const SolverConfig& cfg, int n);

/// F_n^{(1)} = sum_l x_l F_{n+l} + sum_{i=0}^{n} F_i F_{n-i} at p = 3, both
/// sides by substituting the solved family into path polynomials.
bool f1_tutte_check(const SolverConfig& cfg, int n);

}  // namespace constel
