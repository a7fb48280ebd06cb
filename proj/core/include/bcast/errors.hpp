#pragma once

#include <stdexcept>

namespace bcast {

/// Invalid argument values: bad order, wrong graph family, broadcast of the
/// wrong kind, value outside the capped family, and similar misuse.
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Malformed textual input (broadcast strings, edge-list files).
struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The edge list describes a disconnected graph.
struct ConnectivityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A search exceeded its node guard. Raise the guard to proceed.
struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A runtime certification failed. Indicates a bug, not bad input.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace bcast
