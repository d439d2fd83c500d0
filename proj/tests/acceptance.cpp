// Acceptance run: one PASS/FAIL line per criterion, exact equality throughout.
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>

#include "constel/contfrac.hpp"
#include "constel/errors.hpp"
#include "constel/eulerian.hpp"
#include "constel/gf_solver.hpp"
#include "constel/hankel.hpp"
#include "constel/paths.hpp"
#include "constel/substitute.hpp"
#include "support/oracles.hpp"

#ifndef CONSTEL_PROPERTY_BINARY
#error "CONSTEL_PROPERTY_BINARY must name the property test executable"
#endif

using namespace constel;

namespace {

struct Failure {
  std::string what;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

MultiPoly P(const char* text) { return parse_poly(text); }

void ac1_golden() {
  const MultiPoly f1 = P("V1*V2");
  expect(f_poly(3, 1, 0) == f1, "F_1");
  expect(f_poly(3, 2, 0) == f1 * P("V1*V2 + V2*V3 + V3*V4"), "F_2");
  expect(f_poly(3, 3, 0) == f1 * P("V1^2*V2^2 + 2*V1*V2^2*V3 + V2^2*V3^2 + 2*V1*V2*V3*V4 + 2*V2*V3^2*V4 + "
                                   "V3^2*V4^2 + V2*V3*V4*V5 + V3*V4^2*V5 + V3*V4*V5*V6"),
         "F_3");
  expect(f_poly(3, 0, 1) == P("V1"), "F_0^(1)");
  expect(f_poly(3, 1, 1) == f1 * P("V1 + V3"), "F_1^(1)");
  expect(f_poly(3, 2, 1) == f1 * P("V1^2*V2 + 2*V1*V2*V3 + V2*V3^2 + V1*V3*V4 + V3^2*V4 + V3*V4*V5"),
         "F_2^(1)");
}

void ac2_fraction() {
  for (int p = 2; p <= 4; ++p) {
    const TSeries s = expand_multicont(p, 6);
    for (int n = 0; n <= 6; ++n)
      expect(s[n] == f_poly(p, n, 0), "p=" + std::to_string(p) + " n=" + std::to_string(n));
  }
}

void ac3_hankel() {
  for (int p = 2; p <= 4; ++p) {
    FTable table(p);
    for (int m = 0; m <= p - 1; ++m)
      for (int n = 0; n <= 3; ++n) {
        const HankelSpec spec{p, m, n};
        MultiPoly product(1);
        for (int i = 0; i <= n; ++i) product = product * oracle::v_prefix(i * p + m);
        expect(hankel_det(spec, table) == product, spec.label());
      }
  }
}

void ac4_inversion() {
  for (int p = 2; p <= 4; ++p) {
    FTable table(p);
    for (int i = 1; i <= 2 * p + 2; ++i)
      expect(recover_vi(p, i, table) == MultiPoly::v(static_cast<std::uint32_t>(i)),
             "p=" + std::to_string(p) + " i=" + std::to_string(i));
  }
}

void ac5_lgv() {
  for (int p = 2; p <= 3; ++p)
    for (int m = 0; m <= p - 1; ++m)
      for (int n = 0; n <= 2; ++n) {
        const HankelSpec spec{p, m, n};
        expect(lgv_signed_sum(spec) == hankel_det(spec), "signed sum " + spec.label());
        const NilpResult r = nilp_unique(spec);
        expect(r.count == 1 && r.weight == hankel_monomial(spec), "NILP " + spec.label());
      }
}

void ac6_counts() {
  for (int p = 2; p <= 5; ++p)
    for (int n = 0; n <= 6; ++n)
      expect(count_paths(p, n, 0) == oracle::fuss_catalan(p, n), "p=" + std::to_string(p) + " n=" + std::to_string(n));
  for (int n = 0; n <= 6; ++n) {
    for (int r = 0; r <= 2; ++r) {
      Rational closed(Integer(r + 1) * binomial(3L * n + r + 1, n), Integer(3L * n + r + 1));
      closed.canonicalize();
      expect(closed.get_den() == 1 && count_paths(3, n, r) == closed.get_num(),
             "closed form n=" + std::to_string(n) + " r=" + std::to_string(r));
    }
    if (n >= 1) {
      const auto from_three = enumerate_paths(3, {-3, 3}, {3 * (n - 1), 0}).size();
      expect(count_paths(3, n, 1) == count_paths(3, n, 0) + Integer(static_cast<unsigned long>(from_three)),
             "p_n^(1) split n=" + std::to_string(n));
    }
  }
}

void ac7_solver() {
  const SolverConfig cfg = SolverConfig::make(3, 4, 2, 6);
  const VFamily family = solve_vi(cfg);
  for (int i = 1; i <= cfg.max_v_index; ++i)
    expect(vi_equation_rhs(cfg, family, i) == family[i], "V_i equation i=" + std::to_string(i));
  for (int n = 0; n <= 3; ++n)
    expect(f_from_v(cfg, n) == substitute_family(f_poly(3, n, 0), family, cfg), "closed F_n n=" + std::to_string(n));
  SolverConfig doubled = cfg;
  doubled.index_cap *= 2;
  const VFamily wide = solve_vi(doubled);
  for (int i = 1; i <= cfg.max_v_index; ++i)
    expect(wide[i].poly() == family[i].poly(), "cap doubling i=" + std::to_string(i));
  for (int n = 0; n <= 2; ++n) expect(f1_tutte_check(cfg, n), "Tutte relation n=" + std::to_string(n));
}

XSeries substitute_vi(const MultiPoly& poly, int order) {
  SeriesAssignment assign;
  for (std::uint32_t i = 1; i <= poly.max_index(Family::V); ++i) assign[i] = v_series(static_cast<int>(i), order);
  return substitute(poly, assign, {}, order);
}

void ac8_triangulations() {
  const EulerContext c16 = make_context(16);
  for (int i = 1; i <= 8; ++i) {
    const XSeries vi = v_series(i, 16);
    expect(vi == v_closed(i, c16), "V_i closed form i=" + std::to_string(i));
    expect((c16.v - vi).valuation() >= i, "V - V_i order i=" + std::to_string(i));
  }
  const EulerContext c12 = make_context(12);
  for (int n = 0; n <= 4; ++n) {
    expect(f_closed(n, c12) == substitute_vi(f_poly(3, n, 0), 12), "F_n n=" + std::to_string(n));
    expect(f1_closed(n, c12) == substitute_vi(f_poly(3, n, 1), 12), "F_n^(1) n=" + std::to_string(n));
  }
  const XSeries one(MultiPoly(1), 12);
  for (int n = 1; n <= 12; ++n) {
    expect(t_n(n, c12) == fib_poly(n).evaluate(c12.xv), "T_n n=" + std::to_string(n));
    if (n + 3 <= 12)
      expect(t_n(n + 3, c12) == (one - c12.xv) * t_n(n + 1, c12) - c12.xv * t_n(n, c12),
             "T recurrence n=" + std::to_string(n));
    expect(fib_chebyshev_check(n), "Chebyshev n=" + std::to_string(n));
  }
  expect(verify_det3(3, 12), "verify_det3(3, 12)");
}

void ac9_properties() {
  const std::string cmd = std::string("\"") + CONSTEL_PROPERTY_BINARY + "\" --minimal > /dev/null 2>&1";
  expect(std::system(cmd.c_str()) == 0, "property suite reported failures");
}

struct Criterion {
  const char* id;
  const char* title;
  double limit_seconds;  // 0 = no limit
  std::function<void()> body;
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {"AC1", "golden F_n and F_n^(1) fixtures at p=3", 1.0, ac1_golden},
      {"AC2", "fraction expansion equals path sums, p in 2..4, n <= 6", 30.0, ac2_fraction},
      {"AC3", "Hankel determinants equal V products, p in 2..4, n <= 3", 120.0, ac3_hankel},
      {"AC4", "V_i recovered from determinants, i <= 2p+2", 0.0, ac4_inversion},
      {"AC5", "LGV signed sums and unique NILP, p in 2..3, n <= 2", 0.0, ac5_lgv},
      {"AC6", "path counts and p=3 closed forms", 0.0, ac6_counts},
      {"AC7", "V_i solver at p=3, K=2, D=4", 0.0, ac7_solver},
      {"AC8", "triangulation series suite", 120.0, ac8_triangulations},
      {"AC9", "randomized property suites", 0.0, ac9_properties},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      c.body();
    } catch (const Failure& f) {
      ok = false;
      detail = f.what;
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && c.limit_seconds > 0 && seconds > c.limit_seconds) {
      ok = false;
      detail = "exceeded " + std::to_string(c.limit_seconds) + " s";
    }
    std::cout << c.id << (ok ? " PASS" : " FAIL") << "  " << c.title << "  (" << seconds << " s)";
    if (!ok) std::cout << "  " << detail;
    std::cout << '\n';
    failed += ok ? 0 : 1;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
  return failed == 0 ? 0 : 1;
}
