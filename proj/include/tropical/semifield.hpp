#pragma once

// Idempotent semifields over the extended reals.
//
// A semifield F is a stateless policy type operating on raw doubles. The
// carrier element is wrapped by Element<F>, which validates membership at
// construction so that every Element in circulation is a carrier value.
//
//   MaxPlus:  (R ∪ {-inf}, max, +),  zero = -inf, one = 0
//   MinPlus:  (R ∪ {+inf}, min, +),  zero = +inf, one = 0
//
// The order is the one induced by idempotent addition: x <= y iff x ⊕ y = y.
// In MaxPlus it coincides with the usual order on reals, in MinPlus it is
// reversed.

#include <cmath>
#include <compare>
#include <concepts>
#include <cstdint>
#include <limits>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>

#include "tropical/error.hpp"

namespace tropical {

// Exponent for rational powers. Always normalized: den > 0, gcd(num, den) = 1.
class Rational {
 public:
  constexpr Rational(std::int64_t num = 0, std::int64_t den = 1) : num_(num), den_(den) {
    if (den_ == 0) throw Error(Errc::invalid_value, "rational exponent with zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const auto g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  constexpr std::int64_t num() const noexcept { return num_; }
  constexpr std::int64_t den() const noexcept { return den_; }
  constexpr Rational reciprocal() const { return Rational(den_, num_); }
  constexpr bool positive() const noexcept { return num_ > 0; }
  constexpr bool is_zero() const noexcept { return num_ == 0; }

  constexpr bool operator==(const Rational&) const = default;

 private:
  std::int64_t num_;
  std::int64_t den_;
};

inline constexpr Rational kHalf{1, 2};

template <class F>
concept Semifield = requires(double a, double b, Rational r) {
  { F::zero() } -> std::same_as<double>;
  { F::one() } -> std::same_as<double>;
  { F::add(a, b) } -> std::same_as<double>;
  { F::mul(a, b) } -> std::same_as<double>;
  { F::inv(a) } -> std::same_as<double>;
  { F::pow(a, r) } -> std::same_as<double>;
  { F::leq(a, b) } -> std::same_as<bool>;
  { F::in_carrier(a) } -> std::same_as<bool>;
  { F::name() } -> std::convertible_to<std::string_view>;
};

struct MaxPlus {
  static constexpr double zero() noexcept { return -std::numeric_limits<double>::infinity(); }
  static constexpr double one() noexcept { return 0.0; }
  static constexpr double add(double a, double b) noexcept { return a < b ? b : a; }
  // -inf + finite stays -inf; +inf never enters the carrier.
  static constexpr double mul(double a, double b) noexcept { return a + b; }
  static constexpr double inv(double a) noexcept { return -a; }
  static constexpr double pow(double a, Rational r) noexcept {
    return a * static_cast<double>(r.num()) / static_cast<double>(r.den());
  }
  static constexpr bool leq(double a, double b) noexcept { return a <= b; }
  static bool in_carrier(double a) noexcept {
    return !std::isnan(a) && a != std::numeric_limits<double>::infinity();
  }
  static constexpr std::string_view name() noexcept { return "max-plus"; }
};

struct MinPlus {
  static constexpr double zero() noexcept { return std::numeric_limits<double>::infinity(); }
  static constexpr double one() noexcept { return 0.0; }
  static constexpr double add(double a, double b) noexcept { return b < a ? b : a; }
  static constexpr double mul(double a, double b) noexcept { return a + b; }
  static constexpr double inv(double a) noexcept { return -a; }
  static constexpr double pow(double a, Rational r) noexcept {
    return a * static_cast<double>(r.num()) / static_cast<double>(r.den());
  }
  static constexpr bool leq(double a, double b) noexcept { return b <= a; }
  static bool in_carrier(double a) noexcept {
    return !std::isnan(a) && a != -std::numeric_limits<double>::infinity();
  }
  static constexpr std::string_view name() noexcept { return "min-plus"; }
};

static_assert(Semifield<MaxPlus>);
static_assert(Semifield<MinPlus>);

// A carrier element of the semifield F.
template <Semifield F>
class Element {
 public:
  using field_type = F;

  // Default-constructs the zero element.
  constexpr Element() noexcept : value_(F::zero()) {}

  explicit Element(double value) : value_(value) {
    if (!F::in_carrier(value)) {
      throw Error(Errc::invalid_value,
                  std::string("value ") + std::to_string(value) + " is outside the " +
                      std::string(F::name()) + " carrier");
    }
  }

  static constexpr Element zero() noexcept { return Element(); }
  static Element one() noexcept { return Element(F::one()); }

  constexpr double value() const noexcept { return value_; }
  constexpr bool is_zero() const noexcept { return value_ == F::zero(); }

  Element inv() const {
    if (is_zero()) throw Error(Errc::zero_inverse, "the zero element has no inverse");
    return Element(F::inv(value_));
  }

  Element pow(Rational r) const {
    if (is_zero()) {
      if (r.positive()) return zero();
      throw Error(Errc::undefined_power, "zero raised to a non-positive power");
    }
    if (r.is_zero()) return one();
    return Element(F::pow(value_, r));
  }

  Element sqrt() const { return pow(kHalf); }

  friend Element operator+(Element a, Element b) noexcept {
    return Element(F::add(a.value_, b.value_), unchecked{});
  }
  friend Element operator*(Element a, Element b) noexcept {
    if (a.is_zero() || b.is_zero()) return zero();
    return Element(F::mul(a.value_, b.value_), unchecked{});
  }
  Element& operator+=(Element b) noexcept { return *this = *this + b; }
  Element& operator*=(Element b) noexcept { return *this = *this * b; }

  // Exact equality of carrier values.
  friend constexpr bool operator==(Element a, Element b) noexcept { return a.value_ == b.value_; }

  // Semifield order. Total on both shipped instances.
  friend bool operator<=(Element a, Element b) noexcept { return F::leq(a.value_, b.value_); }
  friend bool operator>=(Element a, Element b) noexcept { return b <= a; }
  friend bool operator<(Element a, Element b) noexcept { return a <= b && !(a == b); }
  friend bool operator>(Element a, Element b) noexcept { return b < a; }

  friend std::ostream& operator<<(std::ostream& os, Element a) {
    if (a.is_zero()) return os << (F::zero() < 0 ? "-inf" : "+inf");
    return os << a.value_;
  }

 private:
  struct unchecked {};
  constexpr Element(double value, unchecked) noexcept : value_(value) {}

  double value_;
};

template <Semifield F>
Element<F> add(Element<F> a, Element<F> b) noexcept {
  return a + b;
}
template <Semifield F>
Element<F> mul(Element<F> a, Element<F> b) noexcept {
  return a * b;
}
template <Semifield F>
Element<F> inv(Element<F> a) {
  return a.inv();
}
template <Semifield F>
Element<F> pow(Element<F> a, Rational r) {
  return a.pow(r);
}
template <Semifield F>
bool leq(Element<F> a, Element<F> b) noexcept {
  return a <= b;
}

using Scalar = Element<MaxPlus>;
using MinPlusScalar = Element<MinPlus>;

}  // namespace tropical
