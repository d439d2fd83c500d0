#include "constel/eulerian.hpp"

#include <stdexcept>

#include "constel/gf_solver.hpp"
#include "constel/hankel.hpp"
#include "constel/matrix.hpp"

namespace constel {

UPoly::UPoly(long c) {
  if (c != 0) coeffs_.emplace_back(c);
}

UPoly::UPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer UPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

UPoly& UPoly::operator+=(const UPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.coeffs_.empty() || b.coeffs_.empty()) return {};
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
  return UPoly(std::move(out));
}

UPoly pow(const UPoly& a, unsigned e) {
  UPoly out(1);
  for (unsigned i = 0; i < e; ++i) out = out * a;
  return out;
}

XSeries UPoly::evaluate(const XSeries& at) const {
  XSeries out(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) out = out * at + XSeries(*it);
  return out;
}

std::string to_string(const UPoly& p, const std::string& var) {
  if (p.coeffs().empty()) return "0";
  std::string out;
  for (int i = 0; i <= p.degree(); ++i) {
    const Integer& c = p.coeffs()[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const bool negative = c < 0;
    Integer mag = abs(c);
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    if (i == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + '*';
    out += var;
    if (i > 1) out += '^' + std::to_string(i);
  }
  return out;
}

FibPoly fib_poly(int n) {
  if (n < 0) throw std::invalid_argument("fib_poly: n must be >= 0");
  FibPoly prev(0);
  FibPoly cur(1);
  if (n == 0) return prev;
  for (int k = 1; k < n; ++k) {
    FibPoly next = cur - UPoly::z() * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

bool fib_chebyshev_check(int n) {
  if (n < 1) throw std::invalid_argument("fib_chebyshev_check: n must be >= 1");
  const FibPoly phi = fib_poly(n);
  const UPoly y = UPoly::z();
  const UPoly one_plus_y = UPoly(1) + y;
  // (1+y)^{n-1} phi_n(y/(1+y)^2) = sum_j c_j y^j (1+y)^{n-1-2j}
  UPoly cleared;
  for (int j = 0; j <= phi.degree(); ++j) {
    if (phi.coeff(j) == 0) continue;
    const int e = n - 1 - 2 * j;
    if (e < 0) return false;
    cleared += UPoly(std::vector<Integer>{phi.coeff(j)}) * pow(y, static_cast<unsigned>(j)) *
               pow(one_plus_y, static_cast<unsigned>(e));
  }
  const UPoly lhs = (UPoly(1) - y) * cleared;
  const UPoly rhs = UPoly(1) - pow(y, static_cast<unsigned>(n));
  return lhs == rhs;
}

EulerContext make_context(int order) {
  if (order < 0) throw std::invalid_argument("make_context: order must be >= 0");
  EulerContext ctx;
  ctx.order = order;
  ctx.v = solve_v(SolverConfig::make(3, order, 1, 0));
  const XSeries x = XSeries::variable(1, order);
  ctx.xv = x * ctx.v;
  XSeries y(MultiPoly(), order);
  for (int sweep = 0; sweep < order; ++sweep) {
    const XSeries one_plus_y = XSeries(1) + y;
    y = ctx.xv * one_plus_y * one_plus_y;
  }
  ctx.y = y;
  return ctx;
}

XSeries v_series(int i, int order) {
  if (i < 0) throw std::invalid_argument("v_series: i must be >= 0");
  if (order < 0) throw std::invalid_argument("v_series: order must be >= 0");
  if (i == 0) return XSeries(MultiPoly(), order);
  const VFamily family = solve_vi(SolverConfig::make(3, order, 1, i));
  return family[i];
}

XSeries v_closed(int i, const EulerContext& ctx) {
  if (i < 1) throw std::invalid_argument("v_closed: i must be >= 1");
  const XSeries one(MultiPoly(1), ctx.order);
  auto one_minus_y_pow = [&](int e) { return one - pow(ctx.y, e); };
  const XSeries numer = one_minus_y_pow(i) * one_minus_y_pow(i + 4);
  const XSeries denom = one_minus_y_pow(i + 1) * one_minus_y_pow(i + 3);
  return ctx.v * numer * inv(denom);
}

XSeries v_closed(int i, int order) { return v_closed(i, make_context(order)); }

Integer ternary_count(int n, int r) {
  if (r < 0) throw std::invalid_argument("ternary_count: r must be >= 0");
  if (n < 0) return 0;
  const long top = 3L * n + r + 1;
  Integer numer = Integer(r + 1) * binomial(top, n);
  if (!mpz_divisible_ui_p(numer.get_mpz_t(), static_cast<unsigned long>(top)))
    throw std::logic_error("ternary_count: non-integral count");
  return Integer(numer / top);
}

namespace {

XSeries closed_prefactor(const EulerContext& ctx, const Integer& a, const XSeries& first, const Integer& b) {
  return XSeries(a) * first - XSeries(b) * ctx.xv;
}

}  // namespace

XSeries f_closed(int n, const EulerContext& ctx) {
  if (n < 0) throw std::invalid_argument("f_closed: n must be >= 0");
  const XSeries one_minus_xv = XSeries(1) - ctx.xv;
  return closed_prefactor(ctx, ternary_count(n, 0), one_minus_xv, ternary_count(n, 1)) * pow(ctx.v, 2L * n + 1);
}

XSeries f_closed_alt(int n, const EulerContext& ctx) {
  if (n < 0) throw std::invalid_argument("f_closed_alt: n must be >= 0");
  const XSeries one_minus_2xv = XSeries(1) - XSeries(2) * ctx.xv;
  return closed_prefactor(ctx, ternary_count(n, 0), one_minus_2xv, ternary_count(n - 1, 3)) *
         pow(ctx.v, 2L * n + 1);
}

XSeries f1_closed(int n, const EulerContext& ctx) {
  if (n < 0) throw std::invalid_argument("f1_closed: n must be >= 0");
  const XSeries one_minus_xv = XSeries(1) - ctx.xv;
  return closed_prefactor(ctx, ternary_count(n, 1), one_minus_xv * one_minus_xv, ternary_count(n + 1, 0)) *
         pow(ctx.v, 2L * n + 2);
}

XSeries t_n(int n, const EulerContext& ctx) {
  if (n < 1) throw std::invalid_argument("t_n: n must be >= 1");
  const int k = (n - 1) / 3;
  const int m = n - 3 * k - 1;  // 0, 1, 2
  const auto size = static_cast<std::size_t>(k);

  SeriesMatrix mat(size, size);
  for (int i = 0; i < k; ++i) {
    const QR d = qr(i + m, 3);
    for (int j = 0; j < k; ++j)
      mat(i, j) = d.r == 0 ? f_closed(d.q + j, ctx) : f1_closed(d.q + j, ctx);
  }
  XSeries det = k == 0 ? XSeries(MultiPoly(1), ctx.order) : det_division_free(mat);

  const long exponent = m == 0 ? k * (3L * k - 1) / 2 : m == 1 ? k * (3L * k + 1) / 2 : k * (3L * k + 3) / 2;
  XSeries out = det * pow(ctx.v, -exponent);
  if (m == 2) out *= XSeries(1) - ctx.xv;
  return out;
}

Det3Report verify_det3_report(int kmax, const EulerContext& ctx) {
  if (kmax < 0) throw std::invalid_argument("verify_det3: kmax must be >= 0");
  Det3Report report;
  const int top = 3 * kmax + 3;
  std::vector<XSeries> t(static_cast<std::size_t>(top) + 1);
  for (int n = 1; n <= top; ++n) {
    t[n] = t_n(n, ctx);
    const XSeries expected = fib_poly(n).evaluate(ctx.xv);
    if (!(t[n] == expected) && report.ok) {
      report.ok = false;
      report.first_failure = "T_" + std::to_string(n) + " = " + to_string(t[n]) + " but phi_" +
                             std::to_string(n) + "(xV) = " + to_string(expected);
    }
  }
  const XSeries one_minus_xv = XSeries(1) - ctx.xv;
  for (int n = 1; n + 3 <= top; ++n) {
    if (!(t[n + 3] == one_minus_xv * t[n + 1] - ctx.xv * t[n]) && report.ok) {
      report.ok = false;
      report.first_failure = "T_{n+3} recurrence fails at n = " + std::to_string(n);
    }
  }
  return report;
}

bool verify_det3(int kmax, int order) { return verify_det3_report(kmax, make_context(order)).ok; }

}  // namespace constel
