#include "constel/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <unordered_map>

#include "constel/errors.hpp"

namespace constel {

MultiPoly::MultiPoly(long c) {
  if (c != 0) terms_.emplace_back(Monomial{}, Integer(c));
}

MultiPoly::MultiPoly(const Integer& c) {
  if (c != 0) terms_.emplace_back(Monomial{}, c);
}

MultiPoly::MultiPoly(Monomial m, Integer c) {
  if (c != 0) terms_.emplace_back(std::move(m), std::move(c));
}

MultiPoly MultiPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return CanonicalLess{}(a.first, b.first); });
  MultiPoly out;
  for (Term& t : terms) {
    if (!out.terms_.empty() && out.terms_.back().first == t.first) {
      out.terms_.back().second += t.second;
    } else {
      if (!out.terms_.empty() && out.terms_.back().second == 0) out.terms_.pop_back();
      out.terms_.push_back(std::move(t));
    }
  }
  if (!out.terms_.empty() && out.terms_.back().second == 0) out.terms_.pop_back();
  return out;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().first.is_one());
}

Integer MultiPoly::coeff(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& k) {
    return CanonicalLess{}(t.first, k);
  });
  if (it != terms_.end() && it->first == m) return it->second;
  return 0;
}

Integer MultiPoly::constant_term() const {
  if (!terms_.empty() && terms_.front().first.is_one()) return terms_.front().second;
  return 0;
}

int MultiPoly::degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.back().first.degree());
}

std::uint32_t MultiPoly::max_index(Family family) const {
  std::uint32_t out = 0;
  for (const Term& t : terms_) out = std::max(out, t.first.max_index(family));
  return out;
}

bool MultiPoly::has_family(Family family) const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [family](const Term& t) { return t.first.has_family(family); });
}

MultiPoly MultiPoly::truncated(int max_degree) const {
  MultiPoly out;
  for (const Term& t : terms_) {
    if (static_cast<int>(t.first.degree()) > max_degree) break;
    out.terms_.push_back(t);
  }
  return out;
}

MultiPoly MultiPoly::component(int degree) const {
  MultiPoly out;
  for (const Term& t : terms_) {
    int d = static_cast<int>(t.first.degree());
    if (d > degree) break;
    if (d == degree) out.terms_.push_back(t);
  }
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (Term& t : out.terms_) t.second = -t.second;
  return out;
}

MultiPoly MultiPoly::add_scaled(const MultiPoly& a, const MultiPoly& b, int sign) {
  MultiPoly out;
  out.terms_.reserve(a.terms_.size() + b.terms_.size());
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  auto push_b = [&](const Term& t) {
    out.terms_.emplace_back(t.first, sign > 0 ? t.second : Integer(-t.second));
  };
  while (ia != a.terms_.end() && ib != b.terms_.end()) {
    auto c = canonical_compare(ia->first, ib->first);
    if (c < 0) {
      out.terms_.push_back(*ia++);
    } else if (c > 0) {
      push_b(*ib++);
    } else {
      Integer s = sign > 0 ? Integer(ia->second + ib->second) : Integer(ia->second - ib->second);
      if (s != 0) out.terms_.emplace_back(ia->first, std::move(s));
      ++ia;
      ++ib;
    }
  }
  for (; ia != a.terms_.end(); ++ia) out.terms_.push_back(*ia);
  for (; ib != b.terms_.end(); ++ib) push_b(*ib);
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  return *this = add_scaled(*this, rhs, +1);
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
  if (rhs.is_zero()) return *this;
  return *this = add_scaled(*this, rhs, -1);
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& rhs) { return *this = *this * rhs; }

MultiPoly operator*(const MultiPoly& a, const Monomial& m) {
  // The canonical order is multiplicative, so sortedness survives.
  MultiPoly out;
  out.terms_.reserve(a.terms_.size());
  for (const auto& [mono, c] : a.terms_) out.terms_.emplace_back(mono * m, c);
  return out;
}

namespace {

MultiPoly scale_by_term(const MultiPoly& a, const MultiPoly::Term& t, int max_degree) {
  std::vector<MultiPoly::Term> terms;
  terms.reserve(a.size());
  for (const auto& [mono, c] : a.terms()) {
    if (static_cast<int>(mono.degree() + t.first.degree()) > max_degree) break;
    terms.emplace_back(mono * t.first, Integer(c * t.second));
  }
  // Already in canonical order; from_terms only re-verifies.
  return MultiPoly::from_terms(std::move(terms));
}

}  // namespace

MultiPoly mul_truncated(const MultiPoly& a, const MultiPoly& b, int max_degree) {
  if (a.is_zero() || b.is_zero()) return {};
  const MultiPoly& small = a.size() <= b.size() ? a : b;
  const MultiPoly& large = a.size() <= b.size() ? b : a;
  if (small.size() == 1) return scale_by_term(large, small.terms_.front(), max_degree);

  std::unordered_map<Monomial, Integer, MonomialHash> acc;
  acc.reserve(small.size() * large.size() / 2 + 16);
  for (const auto& [ms, cs] : small.terms_) {
    for (const auto& [ml, cl] : large.terms_) {
      if (static_cast<int>(ms.degree() + ml.degree()) > max_degree) break;
      Integer& slot = acc[ms * ml];
      mpz_addmul(slot.get_mpz_t(), cs.get_mpz_t(), cl.get_mpz_t());
    }
  }
  std::vector<MultiPoly::Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) terms.emplace_back(m, std::move(c));
  std::sort(terms.begin(), terms.end(), [](const MultiPoly::Term& x, const MultiPoly::Term& y) {
    return CanonicalLess{}(x.first, y.first);
  });
  MultiPoly out;
  out.terms_ = std::move(terms);
  return out;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  return mul_truncated(a, b, std::numeric_limits<int>::max());
}

MultiPoly pow(const MultiPoly& a, unsigned e) {
  MultiPoly result(1);
  MultiPoly base = a;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

MultiPoly exact_div(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw std::domain_error("exact_div: division by the zero polynomial");
  if (b.is_monomial()) {
    // Fast path: divide term by term.
    const auto& [bm, bc] = b.terms().front();
    std::vector<MultiPoly::Term> q;
    q.reserve(a.size());
    for (const auto& [am, ac] : a.terms()) {
      auto m = am.divide(bm);
      if (!m || !mpz_divisible_p(ac.get_mpz_t(), bc.get_mpz_t()))
        throw NotDivisible("exact_div: " + to_string(b) + " does not divide " + to_string(a));
      q.emplace_back(std::move(*m), Integer(ac / bc));
    }
    return MultiPoly::from_terms(std::move(q));
  }

  const auto& [lead_m, lead_c] = b.terms().back();
  MultiPoly quotient;
  MultiPoly rest = a;
  while (!rest.is_zero()) {
    const auto& [rm, rc] = rest.terms().back();
    auto m = rm.divide(lead_m);
    if (!m || !mpz_divisible_p(rc.get_mpz_t(), lead_c.get_mpz_t()))
      throw NotDivisible("exact_div: " + to_string(b) + " does not divide " + to_string(a));
    MultiPoly step(std::move(*m), Integer(rc / lead_c));
    quotient += step;
    rest -= b * step;
  }
  return quotient;
}

std::string to_string(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = c < 0;
    Integer mag = abs(c);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + '*';
      out += to_string(m);
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << to_string(p); }

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  MultiPoly parse() {
    std::vector<MultiPoly::Term> terms;
    skip_ws();
    int sign = 1;
    if (peek() == '-') {
      sign = -1;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    while (true) {
      terms.push_back(parse_term(sign));
      skip_ws();
      if (pos_ == text_.size()) break;
      char c = text_[pos_++];
      if (c == '+') {
        sign = 1;
      } else if (c == '-') {
        sign = -1;
      } else {
        fail("expected '+' or '-'");
      }
    }
    return MultiPoly::from_terms(std::move(terms));
  }

 private:
  MultiPoly::Term parse_term(int sign) {
    skip_ws();
    Integer coeff = sign;
    std::vector<Factor> factors;
    bool need_factor = true;
    while (need_factor) {
      skip_ws();
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff *= Integer(read_digits());
      } else if (c == 'V' || c == 'x') {
        ++pos_;
        std::string idx = read_digits();
        std::uint32_t exp = 1;
        skip_ws();
        if (peek() == '^') {
          ++pos_;
          skip_ws();
          exp = static_cast<std::uint32_t>(std::stoul(read_digits()));
        }
        Var var = c == 'V' ? Var::v(static_cast<std::uint32_t>(std::stoul(idx)))
                           : Var::x(static_cast<std::uint32_t>(std::stoul(idx)));
        factors.push_back({var, exp});
      } else {
        fail("expected a coefficient or a variable");
      }
      skip_ws();
      need_factor = peek() == '*';
      if (need_factor) ++pos_;
    }
    return {Monomial(std::move(factors)), std::move(coeff)};
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("parse_poly: " + what + " at offset " + std::to_string(pos_) +
                                " in \"" + std::string(text_) + "\"");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

}  // namespace constel
