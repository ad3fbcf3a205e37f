#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace groupdepth {

// Raised when user-supplied text (group files, subgroup specs, corpus
// entries, CLI arguments) cannot be parsed or fails validation.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string &what) : std::runtime_error(what) {}
};

// Raised when a computation would exceed a configured size bound.
struct LimitError : std::runtime_error {
  explicit LimitError(const std::string &what) : std::runtime_error(what) {}
};

// Raised when an internal consistency check fails. This always indicates a
// bug, never bad input.
struct InternalError : std::logic_error {
  explicit InternalError(const std::string &what) : std::logic_error(what) {}
};

/// Size bounds for the expensive operations. These are configuration, not
/// constants; the CLI exposes them as flags.
struct Limits {
  std::uint32_t max_degree = 1u << 16;      // points of any permutation domain
  std::uint64_t max_order = 10'000'000;     // element-enumeration bound
  std::uint64_t max_index = 1'000'000;      // coset-action bound
  std::uint64_t backtrack_index = 10'000;   // exact base-size search bound
  std::size_t max_classes = 512;            // character-table class cap
};

} // namespace groupdepth
