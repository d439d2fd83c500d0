#include "constel/verify.hpp"

#include <algorithm>
#include <atomic>
#include <ostream>
#include <thread>

#include "constel/contfrac.hpp"
#include "constel/errors.hpp"
#include "constel/eulerian.hpp"
#include "constel/gf_solver.hpp"
#include "constel/paths.hpp"

namespace constel {

bool VerifyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::size_t VerifyReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.passed; }));
}

namespace {

using Task = std::function<CheckResult()>;

CheckResult fail(CheckResult r, std::string witness) {
  r.passed = false;
  r.witness = std::move(witness);
  return r;
}

std::string pn(int p, int n) { return "(p=" + std::to_string(p) + ",n=" + std::to_string(n) + ")"; }

Task path_check(int p, int n_max) {
  return [=] {
    CheckResult r{"path counts and F^(p-1) shift, p=" + std::to_string(p), true, {}};
    for (int n = 0; n <= 2 * n_max; ++n) {
      const Integer expected = binomial(static_cast<long>(n) * p + 1, n) / (static_cast<long>(n) * p + 1);
      if (count_paths(p, n, 0) != expected) return fail(r, "count_paths" + pn(p, n));
      if (n <= n_max && f_poly(p, n, p - 1) != f_poly(p, n + 1, 0)) return fail(r, "F_n^(p-1) != F_{n+1} at " + pn(p, n));
    }
    return r;
  };
}

Task contfrac_check(int p, int n_max) {
  return [=] {
    CheckResult r{"multicontinued fraction = path sums, p=" + std::to_string(p), true, {}};
    const int order = 2 * n_max;
    const TSeries fraction = expand_multicont(p, order);
    for (int n = 0; n <= order; ++n)
      if (fraction[n] != f_poly(p, n, 0)) return fail(r, "coefficient of t^n at " + pn(p, n));
    return r;
  };
}

Task hankel_check(int p, int m, int n_max, std::function<void(const HankelSpec&, PolyMatrix&)> tamper) {
  return [=] {
    CheckResult r{"Hankel determinant = monomial, p=" + std::to_string(p) + " m=" + std::to_string(m), true, {}};
    FTable table(p);
    for (int n = 0; n <= n_max; ++n) {
      const HankelSpec spec{p, m, n};
      PolyMatrix mat = hankel_matrix(spec, table);
      if (tamper) tamper(spec, mat);
      if (det_division_free(mat) != hankel_monomial(spec)) return fail(r, spec.label());
    }
    return r;
  };
}

Task invert_check(int p) {
  return [=] {
    CheckResult r{"V_i recovered from determinants, p=" + std::to_string(p), true, {}};
    FTable table(p);
    for (int i = 1; i <= 2 * p + 2; ++i) {
      try {
        if (recover_vi(p, i, table) != MultiPoly::v(static_cast<std::uint32_t>(i)))
          return fail(r, "(p=" + std::to_string(p) + ",i=" + std::to_string(i) + ")");
      } catch (const IdentityViolation& e) {
        return fail(r, e.what());
      }
    }
    return r;
  };
}

Task lgv_check(int p, int m, int n_max) {
  return [=] {
    CheckResult r{"LGV signed sum and unique NILP, p=" + std::to_string(p) + " m=" + std::to_string(m), true, {}};
    FTable table(p);
    for (int n = 0; n <= std::min(n_max, 2); ++n) {
      const HankelSpec spec{p, m, n};
      if (lgv_signed_sum(spec) != hankel_det(spec, table)) return fail(r, "signed sum " + spec.label());
      try {
        if (nilp_unique(spec).weight != hankel_monomial(spec)) return fail(r, "NILP weight " + spec.label());
      } catch (const Error& e) {
        return fail(r, e.what());
      }
    }
    return r;
  };
}

Task solver_check(int p, int degree) {
  return [=] {
    CheckResult r{"V_i equations and closed F_n, p=" + std::to_string(p), true, {}};
    const int max_x = std::min(2, std::max(degree, 1));
    const SolverConfig cfg = SolverConfig::make(p, degree, max_x, 3 * (p - 1) + 2);
    const VFamily family = solve_vi(cfg);
    for (int i = 1; i <= cfg.max_v_index; ++i)
      if (!(vi_equation_rhs(cfg, family, i) == family[i])) return fail(r, "V_i equation at i=" + std::to_string(i));
    for (int n = 0; n <= 3; ++n)
      if (!(f_from_v(cfg, n) == substitute_family(f_poly(p, n, 0), family, cfg)))
        return fail(r, "closed F_n at " + pn(p, n));
    if (p == 3)
      for (int n = 0; n <= 2; ++n)
        if (!f1_tutte_check(cfg, n)) return fail(r, "Tutte relation at n=" + std::to_string(n));
    return r;
  };
}

Task euler_check(int order) {
  return [=] {
    CheckResult r{"triangulation series, order=" + std::to_string(order), true, {}};
    const EulerContext ctx = make_context(order);
    for (int i = 1; i <= 8; ++i)
      if (!(v_series(i, order) == v_closed(i, ctx))) return fail(r, "V_i closed form at i=" + std::to_string(i));
    for (int n = 1; n <= 12; ++n)
      if (!fib_chebyshev_check(n)) return fail(r, "Chebyshev relation at n=" + std::to_string(n));
    const Det3Report det3 = verify_det3_report(3, ctx);
    if (!det3.ok) return fail(r, det3.first_failure);
    return r;
  };
}

}  // namespace

VerifyReport verify_all(const VerifyOptions& options) {
  std::vector<Task> tasks;
  for (int p = std::max(options.p_min, 2); p <= options.p_max; ++p) {
    tasks.push_back(path_check(p, options.n_max));
    tasks.push_back(contfrac_check(p, options.n_max));
    for (int m = 0; m <= p - 1; ++m) tasks.push_back(hankel_check(p, m, options.n_max, options.tamper));
    tasks.push_back(invert_check(p));
    if (p <= 3)
      for (int m = 0; m <= p - 1; ++m) tasks.push_back(lgv_check(p, m, options.n_max));
    if (p <= 3) tasks.push_back(solver_check(p, std::min(options.order, 4)));
  }
  if (options.p_min <= 3 && 3 <= options.p_max && options.n_max >= 0) tasks.push_back(euler_check(options.order));

  VerifyReport report;
  report.checks.resize(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        report.checks[i] = tasks[i]();
      } catch (const std::exception& e) {
        report.checks[i] = CheckResult{"task " + std::to_string(i), false, e.what()};
      }
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(tasks.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  return report;
}

void print_report(const VerifyReport& report, std::ostream& out) {
  for (const CheckResult& c : report.checks) {
    out << (c.passed ? "PASS  " : "FAIL  ") << c.name;
    if (!c.passed) out << "  witness: " << c.witness;
    out << '\n';
  }
  out << report.checks.size() << " checks, " << report.failures() << " failed\n";
}

}  // namespace constel
