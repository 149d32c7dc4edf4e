#pragma once

#include <stdexcept>
#include <string>

namespace subword {

/// Raised when an argument violates a documented precondition (bad letter,
/// run restriction, incomparable pair, ...).
class ValidationError : public std::invalid_argument {
public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace subword
