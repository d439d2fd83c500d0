#include "constel/gf_solver.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "constel/errors.hpp"
#include "constel/paths.hpp"
#include "constel/substitute.hpp"

namespace constel {

int SolverConfig::default_cap(int p, int degree, int max_v_index) {
  return max_v_index + (p - 1) * p * degree;
}

SolverConfig SolverConfig::make(int p, int degree, int max_x_index, int max_v_index) {
  return {p, degree, max_x_index, max_v_index, default_cap(p, degree, max_v_index)};
}

void SolverConfig::validate() const {
  if (p < 2) throw std::invalid_argument("SolverConfig: p must be at least 2");
  if (degree < 0) throw std::invalid_argument("SolverConfig: degree must be >= 0");
  if (max_x_index < 0) throw std::invalid_argument("SolverConfig: max_x_index must be >= 0");
  if (max_v_index < 0) throw std::invalid_argument("SolverConfig: max_v_index must be >= 0");
  if (index_cap < max_v_index) throw std::invalid_argument("SolverConfig: index_cap below max_v_index");
}

namespace {

SeriesAssignment x_variables(const SolverConfig& cfg) {
  SeriesAssignment out;
  for (int k = 1; k <= cfg.max_x_index; ++k)
    out.emplace(static_cast<std::uint32_t>(k), XSeries::variable(static_cast<std::uint32_t>(k), cfg.degree));
  return out;
}

XSeries one(int order) { return XSeries(MultiPoly(1), order); }

}  // namespace

XSeries solve_v(const SolverConfig& cfg) {
  cfg.validate();
  const auto xs = x_variables(cfg);
  XSeries v = one(cfg.degree);
  for (int sweep = 0; sweep < cfg.degree; ++sweep) {
    XSeries next = one(cfg.degree);
    for (int n = 1; n <= cfg.max_x_index; ++n) {
      const Integer c = binomial(static_cast<long>(n) * cfg.p - 1, n);
      next += XSeries(c) * xs.at(static_cast<std::uint32_t>(n)) * pow(v, static_cast<long>(n) * (cfg.p - 1));
    }
    v = std::move(next);
  }
  return v;
}

const XSeries& VFamily::operator[](int i) const {
  if (i < 0) throw std::out_of_range("VFamily: negative index");
  if (i == 0) return zero_;
  if (i > cap()) return limit_;
  return values_[static_cast<std::size_t>(i - 1)];
}

namespace {

struct MidTable {
  // polys[n-1][i-1] = F_n^{(i-1;i)}
  std::vector<std::vector<MultiPoly>> polys;
};

MidTable build_mid_table(const SolverConfig& cfg) {
  MidTable t;
  for (int n = 1; n <= cfg.max_x_index; ++n) {
    std::vector<MultiPoly> row;
    row.reserve(static_cast<std::size_t>(cfg.index_cap));
    for (int i = 1; i <= cfg.index_cap; ++i) row.push_back(f_mid(cfg.p, n, i));
    t.polys.push_back(std::move(row));
  }
  return t;
}

XSeries rhs_with(const SolverConfig& cfg, const VFamily& family, const SeriesAssignment& xs,
                 const MultiPoly* const* mids, int i) {
  auto lookup = [&](std::uint32_t j) -> const XSeries* { return &family[static_cast<int>(j)]; };
  XSeries sum(MultiPoly(), cfg.degree);
  for (int n = 1; n <= cfg.max_x_index; ++n) {
    const XSeries& xn = xs.at(static_cast<std::uint32_t>(n));
    sum += xn * substitute_with(*mids[n - 1], lookup, {}, cfg.degree);
  }
  return one(cfg.degree) + family[i] * sum;
}

}  // namespace

VFamily solve_vi(const SolverConfig& cfg) {
  cfg.validate();
  const XSeries limit = solve_v(cfg);
  const auto xs = x_variables(cfg);
  const MidTable table = build_mid_table(cfg);

  VFamily family(limit, std::vector<XSeries>(static_cast<std::size_t>(cfg.index_cap), one(cfg.degree)),
                 cfg.degree);
  std::vector<const MultiPoly*> mids(static_cast<std::size_t>(cfg.max_x_index));
  for (int sweep = 0; sweep < cfg.degree; ++sweep) {
    std::vector<XSeries> next;
    next.reserve(static_cast<std::size_t>(cfg.index_cap));
    for (int i = 1; i <= cfg.index_cap; ++i) {
      for (int n = 1; n <= cfg.max_x_index; ++n) mids[n - 1] = &table.polys[n - 1][i - 1];
      next.push_back(rhs_with(cfg, family, xs, mids.data(), i));
    }
    family = VFamily(limit, std::move(next), cfg.degree);
  }
  return family;
}

XSeries substitute_family(const MultiPoly& poly, const VFamily& family, const SolverConfig& cfg) {
  return substitute_with(
      poly, [&](std::uint32_t j) -> const XSeries* { return &family[static_cast<int>(j)]; }, x_variables(cfg),
      cfg.degree);
}

XSeries vi_equation_rhs(const SolverConfig& cfg, const VFamily& family, int i) {
  cfg.validate();
  if (i < 1) throw std::invalid_argument("vi_equation_rhs: i must be >= 1");
  const auto xs = x_variables(cfg);
  std::vector<MultiPoly> polys;
  for (int n = 1; n <= cfg.max_x_index; ++n) polys.push_back(f_mid(cfg.p, n, i));
  std::vector<const MultiPoly*> mids;
  for (const MultiPoly& poly : polys) mids.push_back(&poly);
  return rhs_with(cfg, family, xs, mids.data(), i);
}

XSeries f_from_v(const SolverConfig& cfg, int n) {
  cfg.validate();
  if (n < 0) throw std::invalid_argument("f_from_v: n must be >= 0");
  const long p = cfg.p;
  const XSeries v = solve_v(cfg);
  const auto xs = x_variables(cfg);

  auto as_integer = [&](const Rational& q, const std::string& what) {
    if (q.get_den() != 1)
      throw IdentityViolation("f_from_v: " + what + " = " + q.get_str() + " is not an integer");
    return Integer(q.get_num());
  };

  Rational lead(binomial(n * p + 1, n), Integer(n * p + 1));
  lead.canonicalize();
  XSeries total = XSeries(as_integer(lead, "leading coefficient")) * pow(v, n * (p - 1) + 1);
  for (long k = 1; k <= cfg.max_x_index; ++k) {
    Rational c = 0;
    const long j_max = std::min<long>(n, k * p - 1 - k);
    for (long j = 0; j <= j_max; ++j) {
      const Integer numer = Integer(j * p + 1) * binomial(n * p + 1, n - j) * binomial(k * p - 1, k + j);
      Rational term(numer, Integer(n * p + 1));
      c += term;
    }
    c.canonicalize();
    const Integer ck = as_integer(c, "coefficient of x_" + std::to_string(k));
    total -= XSeries(ck) * xs.at(static_cast<std::uint32_t>(k)) * pow(v, (k + n) * (p - 1));
  }
  return total;
}

bool f1_tutte_check(const SolverConfig& cfg, int n) {
  cfg.validate();
  if (cfg.p != 3) throw std::invalid_argument("f1_tutte_check: only defined for p = 3");
  if (n < 0) throw std::invalid_argument("f1_tutte_check: n must be >= 0");
  // Heights of 3-paths ending at 3(n+K) stay below 2(n+K) + 2.
  const int needed = 2 * (n + cfg.max_x_index) + 2;
  SolverConfig run = SolverConfig::make(3, cfg.degree, cfg.max_x_index, std::max(needed, cfg.max_v_index));
  run.index_cap = std::max(run.index_cap, cfg.index_cap);
  const VFamily family = solve_vi(run);
  const auto xs = x_variables(run);

  std::vector<XSeries> f;
  for (int i = 0; i <= n + cfg.max_x_index; ++i) f.push_back(substitute_family(f_poly(3, i, 0), family, run));

  const XSeries lhs = substitute_family(f_poly(3, n, 1), family, run);
  XSeries rhs(MultiPoly(), run.degree);
  for (int l = 1; l <= cfg.max_x_index; ++l) rhs += xs.at(static_cast<std::uint32_t>(l)) * f[n + l];
  for (int i = 0; i <= n; ++i) rhs += f[i] * f[n - i];
  return lhs == rhs;
}

}  // namespace constel
