// Copyright 2026 The searchlab Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SEARCHLAB_ERRORS_HPP
#define SEARCHLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace searchlab {

/// Base class for all errors raised by the library.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A caller violated a documented precondition (empty state, non-positive
/// edge cost, heuristic nonzero at a solution, ...).
struct contract_error : error {
  using error::error;
};

/// Malformed instance text. Carries the 1-based line number.
struct parse_error : error {
  parse_error(int line_number, const std::string& what)
      : error("line " + std::to_string(line_number) + ": " + what),
        line(line_number) {}
  int line;
};

/// File could not be read or written.
struct io_error : error {
  using error::error;
};

/// Intermediate value left the supported 64-bit range.
struct overflow_error : error {
  using error::error;
};

}  // namespace searchlab

#endif  // SEARCHLAB_ERRORS_HPP
