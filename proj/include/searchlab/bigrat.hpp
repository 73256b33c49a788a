// Copyright 2026 The searchlab Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SEARCHLAB_BIGRAT_HPP
#define SEARCHLAB_BIGRAT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "searchlab/rational.hpp"

namespace searchlab {

// Metric averages sum thousands of terms whose denominators share few
// factors, so the running denominator outgrows 64 bits; aggregation is done
// in arbitrary-precision rationals and only display output is rounded.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigRat to_bigrat(const Rat& value) {
  if (value.is_infinite()) throw error("cannot widen an infinite rational");
  return BigRat(BigInt(value.num()), BigInt(value.den()));
}

/// Fixed-point decimal with round-half-even on the last digit,
/// e.g. format_fixed(BigRat(65, 84), 4) == "0.7738".
inline std::string format_fixed(const BigRat& value, int places) {
  BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  const bool neg = num < 0;
  if (neg) num = -num;
  BigInt scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  const BigInt shifted = num * scale;
  BigInt q = shifted / den;
  const BigInt twice_rem = 2 * (shifted % den);
  if (twice_rem > den || (twice_rem == den && (q & 1) == 1)) ++q;
  std::string body = q.str();
  if (body.size() <= static_cast<std::size_t>(places)) {
    body.insert(0, static_cast<std::size_t>(places) + 1 - body.size(), '0');
  }
  if (places > 0) body.insert(body.size() - static_cast<std::size_t>(places), ".");
  return neg && q != 0 ? "-" + body : body;
}

inline std::string format_fixed(const Rat& value, int places) {
  return format_fixed(to_bigrat(value), places);
}

}  // namespace searchlab

#endif  // SEARCHLAB_BIGRAT_HPP
