#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nccov {

/// Operand shapes do not agree (matrix products, componentwise ops,
/// coordinate rows against bases).
class ShapeMismatch : public std::invalid_argument {
 public:
  explicit ShapeMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// A polylinear map was given the wrong number of arguments, or two maps
/// of different arity were compared.
class ArityMismatch : public std::invalid_argument {
 public:
  explicit ArityMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// Two homomorphisms were composed across different bases.
class BasisMismatch : public std::invalid_argument {
 public:
  explicit BasisMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// Division by zero in the scalar algebra.
class ZeroDivision : public std::domain_error {
 public:
  explicit ZeroDivision(const std::string& what) : std::domain_error(what) {}
};

/// A square matrix has no rc-inverse.
class Singular : public std::domain_error {
 public:
  explicit Singular(const std::string& what) : std::domain_error(what) {}
};

/// Suite configuration out of bounds.
class ConfigError : public std::invalid_argument {
 public:
  explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

/// Malformed text input. Carries the 0-based offset of the failure.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (offset " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace nccov
