#pragma once

#include <stdexcept>
#include <string>

namespace nervelat {

// Invalid input for an operation (bad vertex index, cycle in a relation, ...).
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// A configurable cap (face count, chain count, isomorphism size) was exceeded.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace nervelat
