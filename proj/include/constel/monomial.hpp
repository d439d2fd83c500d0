#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace constel {

/// The two indexed variable families: V_i (fall weights) and x_k (face weights).
enum class Family : std::uint8_t { V = 0, X = 1 };

/// A variable V_i or x_k, packed so that the natural integer order puts every
/// V before every x, and indices ascending within a family.
class Var {
 public:
  constexpr Var() = default;
  constexpr Var(Family family, std::uint32_t index)
      : key_((static_cast<std::uint32_t>(family) << 28) | index) {}

  static constexpr Var v(std::uint32_t i) { return {Family::V, i}; }
  static constexpr Var x(std::uint32_t k) { return {Family::X, k}; }

  constexpr Family family() const { return static_cast<Family>(key_ >> 28); }
  constexpr std::uint32_t index() const { return key_ & 0x0FFFFFFFu; }
  constexpr std::uint32_t key() const { return key_; }

  constexpr auto operator<=>(const Var&) const = default;

  std::string name() const;

 private:
  std::uint32_t key_ = 0;
};

struct Factor {
  Var var;
  std::uint32_t exp = 0;

  constexpr bool operator==(const Factor&) const = default;
};

/// Product of powers of V_i and x_k. Factors are kept sorted by variable and
/// every stored exponent is positive, so equal monomials compare equal
/// structurally.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<Factor> factors);

  static Monomial v(std::uint32_t i, std::uint32_t e = 1);
  static Monomial x(std::uint32_t k, std::uint32_t e = 1);

  std::span<const Factor> factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  std::uint32_t degree() const { return degree_; }
  std::uint32_t degree(Family family) const;
  std::uint32_t exponent(Var var) const;
  bool has_family(Family family) const;

  /// Largest index of the given family appearing, 0 if none.
  std::uint32_t max_index(Family family) const;

  /// Returns this / other when other divides this.
  std::optional<Monomial> divide(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  bool operator==(const Monomial& other) const { return factors_ == other.factors_; }

  std::size_t hash() const;

 private:
  std::vector<Factor> factors_;
  std::uint32_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Canonical order: total degree first; within a degree, the monomial with
/// the larger exponent on the first differing variable comes first (so
/// V1*V2 < V2*V3 and V1^2 < V1*V2). The order is multiplicative.
std::strong_ordering canonical_compare(const Monomial& a, const Monomial& b);

struct CanonicalLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return canonical_compare(a, b) == std::strong_ordering::less;
  }
};

/// "V1^2*x3", or "1" for the empty monomial.
std::string to_string(const Monomial& m);

}  // namespace constel
