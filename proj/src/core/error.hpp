#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace realroot {

enum class Errc {
  parse_error,
  constant_input,      // operation requires a nonconstant polynomial
  zero_polynomial,
  dimension_mismatch,
  not_symmetric,
  no_witness,          // witness requested for a real-rooted polynomial
  numeric_failure,     // root finder / interpolation missed its accuracy contract
  internal,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Parse failures carry the byte offset into the offending input.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error(Errc::parse_error, what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace realroot
