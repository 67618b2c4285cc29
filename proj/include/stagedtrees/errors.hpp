#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stagedtrees {

/// Root of the library's exception hierarchy.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input (polynomials, nestings, JSON trees).
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& what)
      : Error("syntax error at position " + std::to_string(position) + ": " + what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Unreadable or unwritable file.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Well-formed input that violates a mathematical precondition.
class DomainError : public Error {
 public:
  using Error::Error;
};

class NonSquareFreeTerm : public DomainError {
 public:
  using DomainError::DomainError;
};

class NonSquareFreeResult : public DomainError {
 public:
  using DomainError::DomainError;
};

class NonSquareFreeInput : public DomainError {
 public:
  using DomainError::DomainError;
};

class CoefficientNotOne : public DomainError {
 public:
  using DomainError::DomainError;
};

class EmptyBasis : public DomainError {
 public:
  using DomainError::DomainError;
};

class UnitIdeal : public DomainError {
 public:
  using DomainError::DomainError;
};

class InvalidTree : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotStaged : public DomainError {
 public:
  using DomainError::DomainError;
};

class DomainMismatch : public DomainError {
 public:
  using DomainError::DomainError;
};

class MissingValue : public DomainError {
 public:
  using DomainError::DomainError;
};

class InvalidNesting : public DomainError {
 public:
  using DomainError::DomainError;
};

class DegenerateTree : public DomainError {
 public:
  using DomainError::DomainError;
};

class UnknownVariable : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace stagedtrees
