#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace diairesis {

// Base class for all library errors that carry domain meaning.
// Plain contract violations (bad constructor arguments and the like)
// throw std::invalid_argument instead.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed formula text; offset is the byte position of the problem.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t offset)
      : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// A valuation did not cover an atom of the evaluated formula.
class MissingAtomError : public Error {
 public:
  explicit MissingAtomError(const std::string& atom)
      : Error("no value assigned to atom '" + atom + "'"), atom_(atom) {}

  const std::string& atom() const { return atom_; }

 private:
  std::string atom_;
};

class UnknownPredicateError : public Error {
 public:
  explicit UnknownPredicateError(const std::string& name)
      : Error("unknown predicate '" + name + "'") {}
};

// An item id that is not part of the table under consideration.
class UnknownItemError : public Error {
 public:
  explicit UnknownItemError(const std::string& id)
      : Error("unknown item '" + id + "'") {}
};

// An exhaustive operation was asked to run beyond its enumeration guard.
class CapacityError : public Error {
 public:
  explicit CapacityError(const std::string& what) : Error(what) {}
};

// Items file (CSV/JSON) could not be understood.
class MalformedInputError : public Error {
 public:
  explicit MalformedInputError(const std::string& what) : Error(what) {}
};

// Raster output would exceed the supported pixel dimensions.
class DimensionError : public Error {
 public:
  explicit DimensionError(const std::string& what) : Error(what) {}
};

}  // namespace diairesis
