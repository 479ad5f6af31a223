#pragma once

#include <stdexcept>
#include <string>

namespace afnorm {

// Semantically invalid input (well-formed file, impossible request):
// under-used generators, arity mismatches, classes of the wrong length.
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Deliberate guardrails against desk-scale blowup (too many generators,
// too many characters, scan box too large).
struct ResourceError : std::runtime_error {
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace afnorm
