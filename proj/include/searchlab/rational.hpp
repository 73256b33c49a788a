// Copyright 2026 The searchlab Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SEARCHLAB_RATIONAL_HPP
#define SEARCHLAB_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>

#include "searchlab/errors.hpp"

namespace searchlab {

/// Exact rational number over int64 with two extra points at +inf/-inf.
///
/// Heuristic values, f-values and per-edge inconsistency rates are all small
/// rationals (numerators bounded by total instance profit times the epsilon
/// denominator), so 64-bit storage suffices; every operation goes through
/// 128-bit intermediates and throws overflow_error if a reduced result no
/// longer fits. Infinities order above/below every finite value; inf - inf
/// and inf / inf are domain errors.
class Rat {
 public:
  constexpr Rat() : num_(0), den_(1) {}
  constexpr Rat(std::int64_t value) : num_(value), den_(1) {}  // NOLINT: implicit by design

  Rat(std::int64_t num, std::int64_t den) {
    *this = make(static_cast<__int128>(num), static_cast<__int128>(den));
  }

  static constexpr Rat infinity() { return Rat(1, 0, raw_tag{}); }
  static constexpr Rat neg_infinity() { return Rat(-1, 0, raw_tag{}); }

  constexpr bool is_finite() const { return den_ != 0; }
  constexpr bool is_infinite() const { return den_ == 0; }
  constexpr int sign() const { return num_ > 0 ? 1 : num_ < 0 ? -1 : 0; }

  /// Numerator/denominator of a finite value in lowest terms, den > 0.
  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  friend Rat operator+(const Rat& a, const Rat& b) {
    if (a.is_infinite() || b.is_infinite()) {
      if (a.is_finite()) return b;
      if (b.is_finite()) return a;
      if (a.num_ == b.num_) return a;
      throw error("inf + (-inf) is undefined");
    }
    return make(static_cast<__int128>(a.num_) * b.den_ +
                    static_cast<__int128>(b.num_) * a.den_,
                static_cast<__int128>(a.den_) * b.den_);
  }

  friend Rat operator-(const Rat& a, const Rat& b) { return a + (-b); }

  friend Rat operator-(const Rat& a) {
    if (a.is_infinite()) return a.num_ > 0 ? neg_infinity() : infinity();
    return Rat(-a.num_, a.den_, raw_tag{});
  }

  friend Rat operator*(const Rat& a, const Rat& b) {
    if (a.is_infinite() || b.is_infinite()) {
      if (a.sign() == 0 || b.sign() == 0) throw error("0 * inf is undefined");
      return a.sign() * b.sign() > 0 ? infinity() : neg_infinity();
    }
    return make(static_cast<__int128>(a.num_) * b.num_,
                static_cast<__int128>(a.den_) * b.den_);
  }

  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.is_infinite()) {
      if (a.is_infinite()) throw error("inf / inf is undefined");
      return Rat(0);
    }
    if (b.sign() == 0) throw error("division by zero");
    if (a.is_infinite()) return a.sign() * b.sign() > 0 ? infinity() : neg_infinity();
    return make(static_cast<__int128>(a.num_) * b.den_,
                static_cast<__int128>(a.den_) * b.num_);
  }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    if (a == b) return std::strong_ordering::equal;
    if (a.is_infinite() || b.is_infinite()) {
      const int as = a.is_infinite() ? (a.num_ > 0 ? 2 : -2) : 0;
      const int bs = b.is_infinite() ? (b.num_ > 0 ? 2 : -2) : 0;
      return as <=> bs;
    }
    const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    return lhs < rhs   ? std::strong_ordering::less
           : lhs > rhs ? std::strong_ordering::greater
                       : std::strong_ordering::equal;
  }

  /// Largest integer <= value; undefined for infinities.
  std::int64_t floor() const {
    if (is_infinite()) throw error("floor of an infinite value");
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
  }

  /// "7/2", "-3", "inf". Exact, for logs and counterexample dumps.
  std::string str() const {
    if (is_infinite()) return num_ > 0 ? "inf" : "-inf";
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  struct raw_tag {};
  constexpr Rat(std::int64_t num, std::int64_t den, raw_tag) : num_(num), den_(den) {}

  static Rat make(__int128 num, __int128 den) {
    if (den == 0) throw contract_error("rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const __uint128_t mag = num < 0 ? static_cast<__uint128_t>(-num) : static_cast<__uint128_t>(num);
    __uint128_t g = gcd128(mag, static_cast<__uint128_t>(den));
    if (g == 0) g = 1;  // num == 0
    num /= static_cast<__int128>(g);
    den /= static_cast<__int128>(g);
    if (num > INT64_MAX || num < INT64_MIN || den > INT64_MAX) {
      throw overflow_error("rational overflow");
    }
    return Rat(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den), raw_tag{});
  }

  static __uint128_t gcd128(__uint128_t a, __uint128_t b) {
    while (b != 0) {
      const __uint128_t t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  std::int64_t num_;
  std::int64_t den_;  // > 0 for finite values, 0 for +/-inf (sign in num_)
};

/// Parses "0.0016", "-2", "3/4" into an exact rational.
inline Rat parse_rational(const std::string& text) {
  if (text.empty()) throw error("empty rational literal");
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    const std::string n = text.substr(0, slash);
    const std::string d = text.substr(slash + 1);
    try {
      return Rat(std::stoll(n), std::stoll(d));
    } catch (const std::logic_error&) {
      throw error("bad rational literal: " + text);
    }
  }
  std::size_t pos = 0;
  bool neg = false;
  if (text[pos] == '+' || text[pos] == '-') {
    neg = text[pos] == '-';
    ++pos;
  }
  std::int64_t int_part = 0;
  std::int64_t frac_num = 0;
  std::int64_t frac_den = 1;
  bool any_digit = false;
  for (; pos < text.size() && text[pos] != '.'; ++pos) {
    if (text[pos] < '0' || text[pos] > '9') throw error("bad rational literal: " + text);
    if (int_part > (INT64_MAX - 9) / 10) throw overflow_error("rational literal too large");
    int_part = int_part * 10 + (text[pos] - '0');
    any_digit = true;
  }
  if (pos < text.size()) {  // fractional digits
    for (++pos; pos < text.size(); ++pos) {
      if (text[pos] < '0' || text[pos] > '9') throw error("bad rational literal: " + text);
      if (frac_den > INT64_MAX / 10) throw overflow_error("rational literal too precise");
      frac_num = frac_num * 10 + (text[pos] - '0');
      frac_den *= 10;
      any_digit = true;
    }
  }
  if (!any_digit) throw error("bad rational literal: " + text);
  Rat value = Rat(int_part) + Rat(frac_num, frac_den);
  return neg ? -value : value;
}

/// Shortest exact decimal if the denominator is of the form 2^a*5^b
/// (e.g. 1/625 -> "0.0016"), otherwise "num/den".
inline std::string decimal_or_fraction(const Rat& value) {
  if (value.is_infinite()) return value.str();
  std::int64_t den = value.den();
  int twos = 0;
  int fives = 0;
  while (den % 2 == 0) {
    den /= 2;
    ++twos;
  }
  while (den % 5 == 0) {
    den /= 5;
    ++fives;
  }
  if (den != 1) return value.str();
  const int digits = twos > fives ? twos : fives;
  if (digits == 0) return std::to_string(value.num());
  __int128 scaled = static_cast<__int128>(value.num());
  for (int i = 0; i < digits; ++i) scaled *= 10;
  scaled /= value.den();
  const bool neg = scaled < 0;
  unsigned long long mag = neg ? static_cast<unsigned long long>(-scaled)
                               : static_cast<unsigned long long>(scaled);
  std::string body = std::to_string(mag);
  if (body.size() <= static_cast<std::size_t>(digits)) {
    body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
  }
  body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  return neg ? "-" + body : body;
}

}  // namespace searchlab

#endif  // SEARCHLAB_RATIONAL_HPP
