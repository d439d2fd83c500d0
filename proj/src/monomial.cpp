#include "constel/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace constel {

std::string Var::name() const {
  return (family() == Family::V ? "V" : "x") + std::to_string(index());
}

Monomial::Monomial(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return a.var < b.var; });
  for (const Factor& f : factors) {
    if (f.var.index() == 0) throw std::invalid_argument("variable indices start at 1");
    if (f.exp == 0) continue;
    if (!factors_.empty() && factors_.back().var == f.var) {
      factors_.back().exp += f.exp;
    } else {
      factors_.push_back(f);
    }
    degree_ += f.exp;
  }
}

Monomial Monomial::v(std::uint32_t i, std::uint32_t e) { return Monomial({{Var::v(i), e}}); }
Monomial Monomial::x(std::uint32_t k, std::uint32_t e) { return Monomial({{Var::x(k), e}}); }

std::uint32_t Monomial::degree(Family family) const {
  std::uint32_t d = 0;
  for (const Factor& f : factors_)
    if (f.var.family() == family) d += f.exp;
  return d;
}

std::uint32_t Monomial::exponent(Var var) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), var,
                             [](const Factor& f, Var v) { return f.var < v; });
  return (it != factors_.end() && it->var == var) ? it->exp : 0;
}

bool Monomial::has_family(Family family) const {
  return std::any_of(factors_.begin(), factors_.end(),
                     [family](const Factor& f) { return f.var.family() == family; });
}

std::uint32_t Monomial::max_index(Family family) const {
  std::uint32_t out = 0;
  for (const Factor& f : factors_)
    if (f.var.family() == family) out = std::max(out, f.var.index());
  return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto ia = a.factors_.begin();
  auto ib = b.factors_.begin();
  while (ia != a.factors_.end() && ib != b.factors_.end()) {
    if (ia->var < ib->var) {
      out.factors_.push_back(*ia++);
    } else if (ib->var < ia->var) {
      out.factors_.push_back(*ib++);
    } else {
      out.factors_.push_back({ia->var, ia->exp + ib->exp});
      ++ia;
      ++ib;
    }
  }
  out.factors_.insert(out.factors_.end(), ia, a.factors_.end());
  out.factors_.insert(out.factors_.end(), ib, b.factors_.end());
  out.degree_ = a.degree_ + b.degree_;
  return out;
}

std::optional<Monomial> Monomial::divide(const Monomial& other) const {
  Monomial out;
  auto ia = factors_.begin();
  for (const Factor& f : other.factors_) {
    while (ia != factors_.end() && ia->var < f.var) out.factors_.push_back(*ia++);
    if (ia == factors_.end() || ia->var != f.var || ia->exp < f.exp) return std::nullopt;
    if (ia->exp > f.exp) out.factors_.push_back({f.var, ia->exp - f.exp});
    ++ia;
  }
  out.factors_.insert(out.factors_.end(), ia, factors_.end());
  out.degree_ = degree_ - other.degree_;
  return out;
}

std::size_t Monomial::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (const Factor& f : factors_) {
    std::size_t k = (static_cast<std::size_t>(f.var.key()) << 20) ^ f.exp;
    h ^= k + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

std::strong_ordering canonical_compare(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  auto fa = a.factors();
  auto fb = b.factors();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < fa.size() && j < fb.size()) {
    if (fa[i].var < fb[j].var) return std::strong_ordering::less;
    if (fb[j].var < fa[i].var) return std::strong_ordering::greater;
    if (fa[i].exp != fb[j].exp)
      return fa[i].exp > fb[j].exp ? std::strong_ordering::less : std::strong_ordering::greater;
    ++i;
    ++j;
  }
  // Equal degree and a common prefix means both are exhausted together.
  return std::strong_ordering::equal;
}

std::string to_string(const Monomial& m) {
  if (m.is_one()) return "1";
  std::string out;
  for (const Factor& f : m.factors()) {
    if (!out.empty()) out += '*';
    out += f.var.name();
    if (f.exp > 1) out += '^' + std::to_string(f.exp);
  }
  return out;
}

}  // namespace constel
