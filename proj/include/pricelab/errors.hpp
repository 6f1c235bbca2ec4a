#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pricelab {

/// Malformed input or a violated precondition.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The input is degenerate in a way that the requested construction cannot encode
/// (e.g. an empty clause handed to a gadget reduction).
class DegenerateInstanceError : public ArgumentError {
 public:
  using ArgumentError::ArgumentError;
};

/// An enumeration or search bound was exceeded.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, std::size_t cap)
      : std::runtime_error(what), cap_(cap) {}
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

/// An SSP reduction artifact failed certification; `check()` names the failing check.
class CertificationError : public std::runtime_error {
 public:
  CertificationError(const std::string& what, std::string check)
      : std::runtime_error(what), check_(std::move(check)) {}
  const std::string& check() const noexcept { return check_; }

 private:
  std::string check_;
};

/// The follower's ground set is empty, so the pricing problem has no value.
class NoFollowerSolutionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Document parse failure; `where()` is a field path or "line:column".
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::string where)
      : std::runtime_error(where.empty() ? what : where + ": " + what), where_(std::move(where)) {}
  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

}  // namespace pricelab
