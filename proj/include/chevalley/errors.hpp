#pragma once

#include <stdexcept>
#include <string>

namespace chevalley {

/// Operands of incompatible size (matrix dimension, Lie rank, word rank).
class DimensionMismatch : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// An index (generator, coroot, basis slot) outside its admissible range.
class IndexOutOfRange : public std::out_of_range {
public:
  using std::out_of_range::out_of_range;
};

/// Rank n of sl(n+1) must be at least 1.
class InvalidRank : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class SingularMatrix : public std::domain_error {
public:
  SingularMatrix() : std::domain_error("matrix is singular") {}
};

/// Raised by the terminating exponential when no power up to the dimension vanishes.
class NotNilpotent : public std::domain_error {
public:
  NotNilpotent() : std::domain_error("matrix is not nilpotent within its dimension") {}
};

class NotDiagonal : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class NotARoot : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A group element required to have determinant one does not.
class NotInSpecialLinear : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// A matrix whose row/column pattern is not monomial.
class NotInNormalizer : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Malformed text or JSON input.
class ParseError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

} // namespace chevalley
