#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ipf {

enum class ErrorKind {
  DimensionMismatch,
  NotAPermutation,
  NonPositiveCoordinate,
  OutsideDomain,
  CapExceeded,
  NotIdempotent,
  Overflow,
  BoxTooSmall,
  BoxMismatch,
  NotOrderIso,
  InsufficientBox,
  SyntaxError,
  IndexOutOfRange,
  NotProperEmbedding,
  RepresentationFailure,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string const &message,
        std::optional<std::size_t> position = std::nullopt);

  ErrorKind kind() const noexcept { return kind_; }
  // Byte offset into the parsed text; only set for SyntaxError.
  std::optional<std::size_t> position() const noexcept { return position_; }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> position_;
};

}  // namespace ipf
