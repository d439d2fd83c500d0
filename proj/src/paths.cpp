#include "constel/paths.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace constel {

namespace {

void require_p(int p) {
  if (p < 2) throw std::invalid_argument("p must be at least 2, got " + std::to_string(p));
}

int height_change(int p, Step s) { return s == Step::Rise ? p - 1 : -1; }

/// Remaining `steps` can take height h to target_height.
bool reachable(int p, int h, int steps, int target_height) {
  if (steps < 0 || h < 0) return false;
  const int numer = steps + target_height - h;  // p * rises
  if (numer < 0 || numer % p != 0) return false;
  return numer / p <= steps;
}

}  // namespace

PPath::PPath(int p, LatticePoint start, std::vector<Step> steps)
    : p_(p), start_(start), steps_(std::move(steps)) {
  require_p(p);
  if (start.height < 0) throw std::invalid_argument("PPath: negative start height");
  int h = start.height;
  for (Step s : steps_) {
    h += height_change(p, s);
    if (h < 0) throw std::invalid_argument("PPath: path goes below height 0");
  }
}

LatticePoint PPath::end() const {
  LatticePoint pt = start_;
  for (Step s : steps_) {
    pt.column += 1;
    pt.height += height_change(p_, s);
  }
  return pt;
}

std::vector<LatticePoint> PPath::vertices() const {
  std::vector<LatticePoint> out{start_};
  out.reserve(steps_.size() + 1);
  LatticePoint pt = start_;
  for (Step s : steps_) {
    pt.column += 1;
    pt.height += height_change(p_, s);
    out.push_back(pt);
  }
  return out;
}

std::vector<int> PPath::fall_heights() const {
  std::vector<int> out;
  int h = start_.height;
  for (Step s : steps_) {
    if (s == Step::Fall) out.push_back(h);
    h += height_change(p_, s);
  }
  return out;
}

bool path_feasible(int p, LatticePoint start, LatticePoint end) {
  require_p(p);
  if (start.height < 0 || end.height < 0) return false;
  return reachable(p, start.height, end.column - start.column, end.height);
}

void for_each_path(int p, LatticePoint start, LatticePoint end,
                   const std::function<bool(LatticePoint)>& allowed,
                   const std::function<void(const PPath&)>& visit) {
  if (!path_feasible(p, start, end)) return;
  const int length = end.column - start.column;
  std::vector<Step> steps;
  steps.reserve(static_cast<std::size_t>(length));

  std::function<void(LatticePoint)> walk = [&](LatticePoint at) {
    const int left = end.column - at.column;
    if (left == 0) {
      visit(PPath(p, start, steps));
      return;
    }
    for (Step s : {Step::Rise, Step::Fall}) {
      LatticePoint next{at.column + 1, at.height + height_change(p, s)};
      if (!reachable(p, next.height, left - 1, end.height)) continue;
      if (allowed && !allowed(next)) continue;
      steps.push_back(s);
      walk(next);
      steps.pop_back();
    }
  };
  walk(start);
}

std::vector<PPath> enumerate_paths(int p, LatticePoint start, LatticePoint end) {
  std::vector<PPath> out;
  for_each_path(p, start, end, nullptr, [&](const PPath& path) { out.push_back(path); });
  return out;
}

MultiPoly path_weight(const PPath& path) {
  std::vector<Factor> factors;
  for (int h : path.fall_heights()) factors.push_back({Var::v(static_cast<std::uint32_t>(h)), 1});
  return MultiPoly(Monomial(std::move(factors)));
}

namespace {

/// Column-by-column transfer over heights; `Value` is MultiPoly or Integer.
template <class Value, class FallWeight>
Value transfer(int p, LatticePoint start, LatticePoint end, FallWeight&& fall) {
  if (!path_feasible(p, start, end)) return Value(0);
  std::map<int, Value> layer{{start.height, Value(1)}};
  for (int col = start.column; col < end.column; ++col) {
    const int left = end.column - col - 1;
    std::map<int, Value> next;
    for (const auto& [h, value] : layer) {
      const int up = h + p - 1;
      if (reachable(p, up, left, end.height)) next[up] += value;
      const int down = h - 1;
      if (down >= 0 && reachable(p, down, left, end.height)) next[down] += fall(value, h);
    }
    layer = std::move(next);
  }
  auto it = layer.find(end.height);
  return it == layer.end() ? Value(0) : it->second;
}

}  // namespace

MultiPoly path_sum(int p, LatticePoint start, LatticePoint end) {
  return transfer<MultiPoly>(p, start, end, [](const MultiPoly& value, int h) {
    return value * Monomial::v(static_cast<std::uint32_t>(h));
  });
}

MultiPoly f_poly(int p, int n, int r) {
  require_p(p);
  if (n < 0) throw std::invalid_argument("f_poly: n must be >= 0");
  if (r < 0 || r > p - 1) throw std::invalid_argument("f_poly: r must lie in [0, p-1]");
  return path_sum(p, {-r, r}, {n * p, 0});
}

MultiPoly f_mid(int p, int n, int i) {
  require_p(p);
  if (n < 1 || i < 1) throw std::invalid_argument("f_mid: n and i must be >= 1");
  return path_sum(p, {0, i - 1}, {n * p - 1, i});
}

Integer count_paths(int p, int n, int r) {
  require_p(p);
  if (n < 0) throw std::invalid_argument("count_paths: n must be >= 0");
  if (r < 0 || r > p) throw std::invalid_argument("count_paths: r must lie in [0, p]");
  return transfer<Integer>(p, {-r, r}, {n * p, 0}, [](const Integer& value, int) { return value; });
}

}  // namespace constel
