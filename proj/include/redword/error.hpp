#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace redword {

/// Malformed input: bad window, bad word text, letter out of range.
class invalid_input : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A configured limit (max n, word cap) was exceeded.
class config_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Enumeration would produce more words than the configured cap.
/// Distinct from failure: callers skip the permutation and carry on.
class cap_exceeded : public std::runtime_error {
public:
  cap_exceeded(std::uint64_t count, std::uint64_t cap)
    : std::runtime_error("reduced word count " +
                         (count == UINT64_MAX ? std::string(">= 2^64")
                                              : std::to_string(count)) +
                         " exceeds cap " + std::to_string(cap)),
      count_(count), cap_(cap) {}

  std::uint64_t count() const noexcept { return count_; }
  std::uint64_t cap() const noexcept { return cap_; }

private:
  std::uint64_t count_;
  std::uint64_t cap_;
};

/// A proved statement failed to hold; this always indicates a bug.
class theorem_violation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace redword
