#include "constel/contfrac.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <tuple>

namespace constel {

namespace {

void require_args(int p, int order) {
  if (p < 2) throw std::invalid_argument("p must be at least 2, got " + std::to_string(p));
  if (order < 0) throw std::invalid_argument("order must be >= 0");
}

TSeries one(int order) {
  TSeries s;
  if (order < 0) return s;
  s.coeffs.assign(static_cast<std::size_t>(order) + 1, MultiPoly());
  s.coeffs[0] = MultiPoly(1);
  return s;
}

TSeries mul(const TSeries& a, const TSeries& b, int order) {
  TSeries out;
  out.coeffs.assign(static_cast<std::size_t>(order) + 1, MultiPoly());
  for (int i = 0; i <= std::min(order, a.order()); ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= order && j <= b.order(); ++j)
      if (!b[j].is_zero()) out.coeffs[i + j] += a[i] * b[j];
  }
  return out;
}

TSeries scale(const TSeries& a, const MultiPoly& c) {
  TSeries out = a;
  for (MultiPoly& x : out.coeffs) x = x * c;
  return out;
}

// F^{(0)}_s = 1 + t F^{(p-1)}_s
// F^{(r)}_s = V_{s+r} F^{(0)}_{s+r} F^{(r-1)}_s      (r >= 1)
class Expander {
 public:
  explicit Expander(int p) : p_(p) {}

  const TSeries& get(int r, int shift, int order) {
    auto key = std::make_tuple(r, shift, order);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    TSeries value;
    if (order < 0) {
      value = TSeries{};
    } else if (r == 0) {
      value = one(order);
      if (order >= 1) {
        const TSeries& top = get(p_ - 1, shift, order - 1);
        for (int n = 1; n <= order; ++n) value.coeffs[n] += top[n - 1];
      }
    } else {
      const TSeries& head = get(0, shift + r, order);
      const TSeries& rest = get(r - 1, shift, order);
      value = scale(mul(head, rest, order), MultiPoly::v(static_cast<std::uint32_t>(shift + r)));
    }
    return memo_.emplace(key, std::move(value)).first->second;
  }

 private:
  int p_;
  std::map<std::tuple<int, int, int>, TSeries> memo_;
};

// Level `s` of the fraction: 1 / (1 - t * prod_{i=1}^{p-1} V_{s+i} L_{s+i}).
class FractionLevels {
 public:
  explicit FractionLevels(int p) : p_(p) {}

  TSeries level(int shift, int depth, int order) {
    if (order < 0) return TSeries{};
    if (depth == 0) return one(order);
    auto key = std::make_tuple(shift, depth, order);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    // Only t^0..t^{order-1} of the product matter, the t in front shifts it.
    TSeries product = one(order - 1);
    if (order >= 1) {
      for (int i = 1; i <= p_ - 1; ++i) {
        TSeries inner = level(shift + i, depth - 1, order - 1);
        product = scale(mul(product, inner, order - 1), MultiPoly::v(static_cast<std::uint32_t>(shift + i)));
      }
    }
    // 1 / (1 - t g): c_0 = 1, c_n = sum_{j=1}^n g_{j-1} c_{n-j}.
    TSeries out = one(order);
    for (int n = 1; n <= order; ++n) {
      MultiPoly acc;
      for (int j = 1; j <= n; ++j)
        if (!product[j - 1].is_zero() && !out[n - j].is_zero()) acc += product[j - 1] * out[n - j];
      out.coeffs[n] = std::move(acc);
    }
    return memo_.emplace(key, out).first->second;
  }

 private:
  int p_;
  std::map<std::tuple<int, int, int>, TSeries> memo_;
};

}  // namespace

TSeries expand_f(int p, int r, int shift, int order) {
  require_args(p, order);
  if (r < 0 || r > p - 1) throw std::invalid_argument("expand_f: r must lie in [0, p-1]");
  if (shift < 0) throw std::invalid_argument("expand_f: shift must be >= 0");
  Expander expander(p);
  return expander.get(r, shift, order);
}

TSeries expand_multicont(int p, int order, int depth) {
  require_args(p, order);
  if (depth < 0) depth = order + 1;
  FractionLevels levels(p);
  return levels.level(0, depth, order);
}

}  // namespace constel
