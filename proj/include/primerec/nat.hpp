#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <concepts>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "primerec/error.hpp"

namespace primerec {

/// Signed arbitrary-precision integer used for intermediate values that may go negative.
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;

/// Unbounded nonnegative integer.
///
/// Wraps an arbitrary-precision signed integer and rejects negative values on
/// construction. Subtraction leaves the type and yields an Integer, so no
/// arithmetic on Nat can wrap or silently go below zero.
class Nat {
 public:
  Nat() = default;

  template <std::integral T>
  Nat(T v) : value_(v) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<T>) {
      if (v < 0) throw_domain("Nat cannot hold a negative value: " + std::to_string(v));
    }
  }

  explicit Nat(Integer v) : value_(std::move(v)) {
    if (value_ < 0) throw_domain("Nat cannot hold a negative value: " + value_.str());
  }

  /// Parses a plain decimal string (digits only, no sign, no separators).
  static Nat parse(std::string_view text) {
    if (text.empty()) throw error(errc::usage, "expected a nonnegative decimal integer, got an empty string");
    for (char c : text) {
      if (c < '0' || c > '9') {
        throw error(errc::usage, "expected a nonnegative decimal integer, got '" + std::string(text) + "'");
      }
    }
    return Nat(Integer(std::string(text)));
  }

  const Integer& value() const noexcept { return value_; }
  std::string str() const { return value_.str(); }
  bool is_zero() const { return value_.is_zero(); }

  /// Narrowing conversion; empty when the value does not fit in T.
  template <std::unsigned_integral T>
  std::optional<T> to() const {
    if (value_ > std::numeric_limits<T>::max()) return std::nullopt;
    return static_cast<T>(value_);
  }

  Nat& operator+=(const Nat& rhs) {
    value_ += rhs.value_;
    return *this;
  }
  Nat& operator*=(const Nat& rhs) {
    value_ *= rhs.value_;
    return *this;
  }
  Nat& operator++() {
    ++value_;
    return *this;
  }

  friend Nat operator+(Nat lhs, const Nat& rhs) { return lhs += rhs; }
  friend Nat operator*(Nat lhs, const Nat& rhs) { return lhs *= rhs; }
  friend Integer operator-(const Nat& lhs, const Nat& rhs) { return lhs.value_ - rhs.value_; }

  friend bool operator==(const Nat& lhs, const Nat& rhs) { return lhs.value_ == rhs.value_; }
  friend std::strong_ordering operator<=>(const Nat& lhs, const Nat& rhs) {
    return lhs.value_.compare(rhs.value_) <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const Nat& n) { return os << n.value_.str(); }

 private:
  Integer value_ = 0;
};

/// An integer restricted to {0, 1}.
class Indicator {
 public:
  static Indicator from(const Integer& v) {
    if (v != 0 && v != 1) throw_domain("indicator must be 0 or 1, got " + v.str());
    return Indicator(v == 1);
  }
  static constexpr Indicator zero() { return Indicator(false); }
  static constexpr Indicator one() { return Indicator(true); }

  constexpr int value() const noexcept { return set_ ? 1 : 0; }
  constexpr explicit operator bool() const noexcept { return set_; }

  friend constexpr bool operator==(Indicator, Indicator) = default;
  friend std::ostream& operator<<(std::ostream& os, Indicator v) { return os << v.value(); }

 private:
  constexpr explicit Indicator(bool set) : set_(set) {}
  bool set_;
};

}  // namespace primerec
