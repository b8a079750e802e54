// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace distgeom {

enum class ErrorKind {
  NonSquare,
  AsymmetricMatrix,
  NegativeEntry,
  NonzeroDiagonal,
  NonFiniteEntry,
  ZeroOffDiagonal,
  InvalidArgument,
  InvalidTolerance,
  NoConvergence,
  NotPSDInput,
  SizeMismatch,
  TooLarge,
  DependentAnchors,
  GeodesicTooLong,
};

std::string_view to_string(ErrorKind kind);

// Raised for contract violations on inputs and for solver breakdowns.
// Negative verdicts (a matrix that is not an EDM, an infeasible triangle,
// inconsistent trilateration distances) are returned as values instead.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  Error(ErrorKind kind, const std::string& what, std::size_t row,
        std::size_t col)
      : std::runtime_error(what), kind_(kind), row_(row), col_(col) {}

  ErrorKind kind() const { return kind_; }
  // Offending entry, when the error concerns a specific matrix index.
  std::optional<std::size_t> row() const { return row_; }
  std::optional<std::size_t> col() const { return col_; }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> row_;
  std::optional<std::size_t> col_;
};

}  // namespace distgeom
