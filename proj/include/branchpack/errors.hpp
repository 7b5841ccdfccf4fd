#pragma once

#include <stdexcept>
#include <string>

namespace branchpack {

// Malformed or inconsistent input: unknown ids, bad documents, violated
// caller-side preconditions on arguments.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// A structural precondition between values failed, e.g. a path that does
// not attach to a branching at exactly its start vertex.
class StructuralError : public std::runtime_error {
 public:
  explicit StructuralError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace branchpack
