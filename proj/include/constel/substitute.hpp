#pragma once

#include <cstdint>
#include <functional>
#include <map>

#include "constel/multipoly.hpp"
#include "constel/xseries.hpp"

namespace constel {

/// Series values for the indices of one variable family.
using SeriesAssignment = std::map<std::uint32_t, XSeries>;

/// Evaluates `poly` with V_i := v_assign[i] and x_k := x_assign[k].
///
/// The result is known through the smallest order among `order` and the
/// assignments actually used. Throws UnassignedVariable if a variable of
/// `poly` has no value.
XSeries substitute(const MultiPoly& poly, const SeriesAssignment& v_assign,
                   const SeriesAssignment& x_assign, int order = XSeries::kExact);

/// Same, with V_i resolved through a lookup (returning nullptr when the index
/// has no value) so that callers can serve unbounded families lazily.
template <class Lookup>
XSeries substitute_with(const MultiPoly& poly, Lookup&& v_lookup, const SeriesAssignment& x_assign,
                        int order = XSeries::kExact);

/// Integer value of `poly` with every variable set to `value`.
Integer evaluate_constant(const MultiPoly& poly, const Integer& value);

namespace detail {
XSeries substitute_impl(const MultiPoly& poly,
                        const std::function<const XSeries*(Var)>& lookup, int order);
}

template <class Lookup>
XSeries substitute_with(const MultiPoly& poly, Lookup&& v_lookup, const SeriesAssignment& x_assign,
                        int order) {
  return detail::substitute_impl(
      poly,
      [&](Var var) -> const XSeries* {
        if (var.family() == Family::V) return v_lookup(var.index());
        auto it = x_assign.find(var.index());
        return it == x_assign.end() ? nullptr : &it->second;
      },
      order);
}

}  // namespace constel
