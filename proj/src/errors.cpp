#include "invmeans/errors.hpp"

namespace invmeans {

ParseError::ParseError(const std::string& what, std::size_t position)
    : ConfigError("parse error at position " + std::to_string(position) + ": " + what),
      position_(position) {}

} // namespace invmeans
