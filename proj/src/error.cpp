#include "ipf/error.hpp"

namespace ipf {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotAPermutation: return "NotAPermutation";
    case ErrorKind::NonPositiveCoordinate: return "NonPositiveCoordinate";
    case ErrorKind::OutsideDomain: return "OutsideDomain";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::NotIdempotent: return "NotIdempotent";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::BoxTooSmall: return "BoxTooSmall";
    case ErrorKind::BoxMismatch: return "BoxMismatch";
    case ErrorKind::NotOrderIso: return "NotOrderIso";
    case ErrorKind::InsufficientBox: return "InsufficientBox";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NotProperEmbedding: return "NotProperEmbedding";
    case ErrorKind::RepresentationFailure: return "RepresentationFailure";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, std::string const &message,
             std::optional<std::size_t> position)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind),
      position_(position) {}

}  // namespace ipf
