#pragma once

#include <stdexcept>
#include <string>

namespace semigrace {

// Requested order (or other size parameter) outside the supported range.
class RangeError : public std::out_of_range {
 public:
  explicit RangeError(const std::string& what) : std::out_of_range(what) {}
};

// Edge list that is not a tree: wrong edge count, loops, duplicates, cycles,
// or disconnected.
class StructuralError : public std::invalid_argument {
 public:
  explicit StructuralError(const std::string& what)
      : std::invalid_argument(what) {}
};

// Argument outside the mathematical domain of an operation, e.g. a cyclic
// distance on labels outside 1..n or a semigraceful test on an even order.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Object that violates a contract: non-bijective labeling, wrong label
// convention, order mismatch between a tree and a labeling.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what)
      : std::invalid_argument(what) {}
};

// Malformed input document: unparsable text, missing or ill-typed fields,
// unknown format version or tags.
class FormatError : public std::runtime_error {
 public:
  explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace semigrace
