#include "constel/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include "constel/contfrac.hpp"
#include "constel/errors.hpp"
#include "constel/eulerian.hpp"
#include "constel/hankel.hpp"
#include "constel/io.hpp"
#include "constel/paths.hpp"
#include "constel/verify.hpp"

namespace constel::cli {

namespace {

/// Flag range violation detected after parsing.
struct UsageError {
  std::string message;
};

void require(bool ok, const std::string& message) {
  if (!ok) throw UsageError{message};
}

void require_p(int p) { require(p >= 2, "--p must be >= 2 (got " + std::to_string(p) + ")"); }

void require_nonneg(int v, const std::string& flag) {
  require(v >= 0, flag + " must be >= 0 (got " + std::to_string(v) + ")");
}

void emit(std::ostream& out, bool json, const nlohmann::json& payload, const std::string& text) {
  if (json) {
    out << payload.dump() << '\n';
  } else {
    out << text << '\n';
  }
}

unsigned threads_from_env() {
  const char* raw = std::getenv("CONSTEL_THREADS");
  if (raw == nullptr) return 1;
  char* end = nullptr;
  const long v = std::strtol(raw, &end, 10);
  if (end == raw || v < 1) return 1;
  return static_cast<unsigned>(std::min(v, 256L));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact enumeration toolkit for planar constellations: path polynomials, "
               "multicontinued fractions, generalized Hankel determinants"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Print machine-readable JSON");

  int p = 0, n = 0, r = 0, m = 0, i = 0, order = 0, kmax = 3, index = 1;
  bool count = false, check = false;

  auto* fn = app.add_subcommand("fn", "F_n^(r): weighted p-paths from (-r,r) to (np,0)");
  fn->add_option("--p", p, "Rise height plus one")->required();
  fn->add_option("--n", n, "Number of rises")->required();
  fn->add_option("--r", r, "Start offset, 0 <= r <= p-1")->default_val(0);
  fn->add_flag("--count", count, "Print the number of paths instead of the polynomial");
  fn->add_flag("--json", json, "Print machine-readable JSON");

  auto* contfrac = app.add_subcommand("contfrac", "Expand the multicontinued fraction to t^order");
  contfrac->add_option("--p", p)->required();
  contfrac->add_option("--order", order)->required();
  contfrac->add_flag("--json", json);

  auto* hankel = app.add_subcommand("hankel", "Generalized Hankel determinant H_p^{m,n}");
  hankel->add_option("--p", p)->required();
  hankel->add_option("--m", m)->required();
  hankel->add_option("--n", n)->required();
  hankel->add_flag("--check", check, "Exit 1 unless the determinant equals the product formula");
  hankel->add_flag("--json", json);

  auto* invert = app.add_subcommand("invert", "Recover V_i from ratios of determinants");
  invert->add_option("--p", p)->required();
  invert->add_option("--i", i)->required();
  invert->add_flag("--json", json);

  auto* lgv = app.add_subcommand("lgv", "Signed path-system sum and the unique non-intersecting system");
  lgv->add_option("--p", p)->required();
  lgv->add_option("--m", m)->required();
  lgv->add_option("--n", n)->required();
  lgv->add_flag("--json", json);

  std::string what = "V";
  auto* euler_series = app.add_subcommand("euler-series", "Series for Eulerian triangulations (p=3, x_1=x)");
  euler_series->add_option("--what", what, "V, y, Vi, Vi-closed, F, F1 or T")
      ->check(CLI::IsMember({"V", "y", "Vi", "Vi-closed", "F", "F1", "T"}));
  euler_series->add_option("--index", index, "i for Vi/Vi-closed, n for F/F1/T")->default_val(1);
  euler_series->add_option("--order", order)->required();
  euler_series->add_flag("--json", json);

  auto* euler_verify = app.add_subcommand("euler-verify", "Check the triangulation determinant formulas");
  euler_verify->add_option("--kmax", kmax)->default_val(3);
  euler_verify->add_option("--order", order)->default_val(12);
  euler_verify->add_flag("--json", json);

  VerifyOptions vopts;
  std::vector<int> fault;
  auto* verify = app.add_subcommand("verify-all", "Run every identity suite over a parameter range");
  verify->add_option("--p-min", vopts.p_min)->default_val(2);
  verify->add_option("--p-max", vopts.p_max)->default_val(4);
  verify->add_option("--n-max", vopts.n_max)->default_val(3);
  verify->add_option("--order", vopts.order)->default_val(10);
  verify->add_option("--inject-fault", fault, "Corrupt entry (0,0) of H_p^{m,n}; given as P,M,N")
      ->delimiter(',')
      ->expected(3);
  verify->add_flag("--json", json);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (fn->parsed()) {
      require_p(p);
      require_nonneg(n, "--n");
      if (count) {
        require(r >= 0 && r <= p, "--r must lie in [0, p] with --count (got " + std::to_string(r) + ")");
        const Integer c = count_paths(p, n, r);
        emit(out, json, {{"command", "fn"}, {"p", p}, {"n", n}, {"r", r}, {"count", c.get_str()}}, c.get_str());
      } else {
        require(r >= 0 && r <= p - 1, "--r must lie in [0, p-1] (got " + std::to_string(r) + ")");
        const MultiPoly f = f_poly(p, n, r);
        emit(out, json, {{"command", "fn"}, {"p", p}, {"n", n}, {"r", r}, {"result", to_json(f)}}, to_string(f));
      }
    } else if (contfrac->parsed()) {
      require_p(p);
      require_nonneg(order, "--order");
      const TSeries s = expand_multicont(p, order);
      nlohmann::json coeffs = nlohmann::json::array();
      std::ostringstream text;
      for (int k = 0; k <= s.order(); ++k) {
        coeffs.push_back(to_json(s[k]));
        text << (k == 0 ? "" : "\n") << "t^" << k << ": " << to_string(s[k]);
      }
      emit(out, json, {{"command", "contfrac"}, {"p", p}, {"order", order}, {"coefficients", coeffs}}, text.str());
    } else if (hankel->parsed()) {
      require_p(p);
      require(m >= 0 && m <= p - 1, "--m must lie in [0, p-1] (got " + std::to_string(m) + ")");
      require(n >= -1, "--n must be >= -1 (got " + std::to_string(n) + ")");
      const HankelSpec spec{p, m, n};
      const MultiPoly det = hankel_det(spec);
      emit(out, json, {{"command", "hankel"}, {"p", p}, {"m", m}, {"n", n}, {"result", to_json(det)}},
           to_string(det));
      if (check && det != hankel_monomial(spec)) {
        err << "identity violation: H" << spec.label() << " != " << to_string(hankel_monomial(spec)) << '\n';
        return kIdentityViolation;
      }
    } else if (invert->parsed()) {
      require_p(p);
      require(i >= 1, "--i must be >= 1 (got " + std::to_string(i) + ")");
      const MultiPoly v = recover_vi(p, i);
      emit(out, json, {{"command", "invert"}, {"p", p}, {"i", i}, {"result", to_json(v)}}, to_string(v));
      if (v != MultiPoly::v(static_cast<std::uint32_t>(i))) {
        err << "identity violation: recovered " << to_string(v) << " instead of V" << i << '\n';
        return kIdentityViolation;
      }
    } else if (lgv->parsed()) {
      require_p(p);
      require(m >= 0 && m <= p - 1, "--m must lie in [0, p-1] (got " + std::to_string(m) + ")");
      require(n >= 0 && n <= 3, "--n must lie in [0, 3] (got " + std::to_string(n) + ")");
      const HankelSpec spec{p, m, n};
      const MultiPoly signed_sum = lgv_signed_sum(spec);
      const NilpResult nilp = nilp_unique(spec);
      emit(out, json,
           {{"command", "lgv"},
            {"p", p},
            {"m", m},
            {"n", n},
            {"signed_sum", to_json(signed_sum)},
            {"nilp_count", nilp.count},
            {"nilp_weight", to_json(nilp.weight)}},
           "signed sum: " + to_string(signed_sum) + "\nnilp: " + std::to_string(nilp.count) + " x " +
               to_string(nilp.weight));
      if (signed_sum != nilp.weight) {
        err << "identity violation: signed sum differs from the non-intersecting system\n";
        return kIdentityViolation;
      }
    } else if (euler_series->parsed()) {
      require_nonneg(order, "--order");
      const EulerContext ctx = make_context(order);
      XSeries s;
      if (what == "V") {
        s = ctx.v;
      } else if (what == "y") {
        s = ctx.y;
      } else if (what == "Vi") {
        require_nonneg(index, "--index");
        s = v_series(index, order);
      } else if (what == "Vi-closed") {
        require(index >= 1, "--index must be >= 1 for Vi-closed");
        s = v_closed(index, ctx);
      } else if (what == "F") {
        require_nonneg(index, "--index");
        s = f_closed(index, ctx);
      } else if (what == "F1") {
        require_nonneg(index, "--index");
        s = f1_closed(index, ctx);
      } else {
        require(index >= 1, "--index must be >= 1 for T");
        s = t_n(index, ctx);
      }
      emit(out, json, {{"command", "euler-series"}, {"what", what}, {"index", index}, {"result", to_json(s)}},
           to_string(s));
    } else if (euler_verify->parsed()) {
      require_nonneg(kmax, "--kmax");
      require_nonneg(order, "--order");
      const Det3Report report = verify_det3_report(kmax, make_context(order));
      emit(out, json, {{"command", "euler-verify"}, {"passed", report.ok}, {"witness", report.first_failure}},
           report.ok ? "PASS" : "FAIL  " + report.first_failure);
      return report.ok ? kOk : kIdentityViolation;
    } else if (verify->parsed()) {
      require_nonneg(vopts.n_max, "--n-max");
      require_nonneg(vopts.order, "--order");
      vopts.threads = threads_from_env();
      if (!fault.empty()) {
        const HankelSpec target{fault[0], fault[1], fault[2]};
        vopts.tamper = [target](const HankelSpec& spec, PolyMatrix& mat) {
          if (spec.p == target.p && spec.m == target.m && spec.n == target.n) mat(0, 0) += MultiPoly::v(1);
        };
      }
      const VerifyReport report = verify_all(vopts);
      if (json) {
        nlohmann::json checks = nlohmann::json::array();
        for (const CheckResult& c : report.checks)
          checks.push_back({{"name", c.name}, {"passed", c.passed}, {"witness", c.witness}});
        out << nlohmann::json{{"command", "verify-all"}, {"passed", report.all_passed()}, {"checks", checks}}.dump()
            << '\n';
      } else {
        print_report(report, out);
      }
      return report.all_passed() ? kOk : kIdentityViolation;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.message << '\n';
    return kUsage;
  } catch (const IdentityViolation& e) {
    err << "identity violation: " << e.what() << '\n';
    return kIdentityViolation;
  } catch (const NonUniqueNILP& e) {
    err << "identity violation: " << e.what() << '\n';
    return kIdentityViolation;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }
  return kOk;
}

}  // namespace constel::cli
