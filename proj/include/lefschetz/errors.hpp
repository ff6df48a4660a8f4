#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace lefschetz {

/// Base for every domain error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A characteristic polynomial has a root that is not a root of unity.
class NotQuasiUnipotent : public Error {
 public:
  explicit NotQuasiUnipotent(std::string what, std::optional<int> degree = std::nullopt)
      : Error(std::move(what)), degree_(degree) {}

  /// Homology degree of the offending map, when known.
  std::optional<int> degree() const { return degree_; }

 private:
  std::optional<int> degree_;
};

class InvalidDegree : public Error {
 public:
  using Error::Error;
};

class EqualDimensions : public Error {
 public:
  using Error::Error;
};

/// A value cannot be written as a product of factors (1 +- t^p)^(+-1).
class NotRepresentable : public Error {
 public:
  using Error::Error;
};

/// A homology model that is not structurally well formed.
class MalformedModel : public Error {
 public:
  using Error::Error;
};

class BoundTooSmall : public Error {
 public:
  BoundTooSmall(std::string what, std::uint64_t required)
      : Error(std::move(what)), required_(required) {}

  /// Smallest period bound that covers the input.
  std::uint64_t required() const { return required_; }

 private:
  std::uint64_t required_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace lefschetz
