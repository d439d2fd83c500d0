#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <vector>

#include "constel/integer.hpp"
#include "constel/multipoly.hpp"

namespace constel {

struct LatticePoint {
  int column = 0;
  int height = 0;

  constexpr auto operator<=>(const LatticePoint&) const = default;
};

enum class Step : std::uint8_t { Rise, Fall };

/// A p-path: rises (1, p-1) and falls (1, -1) that never go below height 0.
class PPath {
 public:
  /// Throws std::invalid_argument if p < 2 or the path dips below zero.
  PPath(int p, LatticePoint start, std::vector<Step> steps);

  int p() const { return p_; }
  LatticePoint start() const { return start_; }
  const std::vector<Step>& steps() const { return steps_; }
  LatticePoint end() const;
  /// Every visited point, start and end included.
  std::vector<LatticePoint> vertices() const;
  /// Starting heights of the falls, in path order.
  std::vector<int> fall_heights() const;

  bool operator==(const PPath&) const = default;

 private:
  int p_;
  LatticePoint start_;
  std::vector<Step> steps_;
};

/// Whether a p-path from `start` to `end` can exist at all (step count,
/// height bookkeeping and nonnegativity of the endpoints).
bool path_feasible(int p, LatticePoint start, LatticePoint end);

/// Calls `visit` on every p-path from start to end, depth first with Rise tried
/// before Fall. Vertices rejected by `allowed` are never entered (the start
/// point is not tested).
void for_each_path(int p, LatticePoint start, LatticePoint end,
                   const std::function<bool(LatticePoint)>& allowed,
                   const std::function<void(const PPath&)>& visit);

/// All p-paths from start to end in depth-first, Rise-before-Fall order.
std::vector<PPath> enumerate_paths(int p, LatticePoint start, LatticePoint end);

/// Product of V_h over the falls, h being the starting height of each fall.
MultiPoly path_weight(const PPath& path);

/// Sum of path_weight over all p-paths from start to end, aggregated column
/// by column without materializing the paths.
MultiPoly path_sum(int p, LatticePoint start, LatticePoint end);

/// F_n^{(r)}: paths from (-r, r) to (np, 0). Requires p >= 2, n >= 0 and
/// 0 <= r <= p-1.
MultiPoly f_poly(int p, int n, int r);

/// F_n^{(i-1;i)}: paths from (0, i-1) to (np-1, i). Requires n >= 1, i >= 1.
MultiPoly f_mid(int p, int n, int i);

/// Number of p-paths from (-r, r) to (np, 0); r may go up to p.
Integer count_paths(int p, int n, int r);

}  // namespace constel
