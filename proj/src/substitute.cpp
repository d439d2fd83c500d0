#include "constel/substitute.hpp"

#include <algorithm>
#include <map>

#include "constel/errors.hpp"

namespace constel {

namespace detail {

XSeries substitute_impl(const MultiPoly& poly, const std::function<const XSeries*(Var)>& lookup,
                        int order) {
  // First pass resolves every variable so the result order is known before
  // any product is formed.
  std::map<Var, const XSeries*> values;
  for (const auto& [mono, coeff] : poly.terms()) {
    for (const Factor& f : mono.factors()) {
      if (values.contains(f.var)) continue;
      const XSeries* s = lookup(f.var);
      if (s == nullptr) throw UnassignedVariable("substitute: no value for " + f.var.name());
      values.emplace(f.var, s);
      order = std::min(order, s->order());
    }
  }

  std::map<std::pair<Var, std::uint32_t>, XSeries> powers;

  XSeries total = order == XSeries::kExact ? XSeries(0) : XSeries(MultiPoly{}, order);
  for (const auto& [mono, coeff] : poly.terms()) {
    XSeries term = order == XSeries::kExact ? XSeries(coeff) : XSeries(MultiPoly(coeff), order);
    for (const Factor& f : mono.factors()) {
      auto key = std::make_pair(f.var, f.exp);
      auto it = powers.find(key);
      if (it == powers.end())
        it = powers.emplace(key, pow(values.at(f.var)->truncated(order), f.exp)).first;
      term *= it->second;
      if (term.poly().is_zero()) break;
    }
    total += term;
  }
  return total;
}

}  // namespace detail

XSeries substitute(const MultiPoly& poly, const SeriesAssignment& v_assign,
                   const SeriesAssignment& x_assign, int order) {
  return substitute_with(
      poly,
      [&](std::uint32_t i) -> const XSeries* {
        auto it = v_assign.find(i);
        return it == v_assign.end() ? nullptr : &it->second;
      },
      x_assign, order);
}

Integer evaluate_constant(const MultiPoly& poly, const Integer& value) {
  Integer total = 0;
  for (const auto& [mono, coeff] : poly.terms()) {
    Integer term = coeff;
    for (const Factor& f : mono.factors()) {
      Integer p;
      mpz_pow_ui(p.get_mpz_t(), value.get_mpz_t(), f.exp);
      term *= p;
    }
    total += term;
  }
  return total;
}

}  // namespace constel
