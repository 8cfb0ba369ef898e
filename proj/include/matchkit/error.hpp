#pragma once

#include <stdexcept>
#include <string>

namespace matchkit {

// Malformed text input (edge lists, words, pattern specs).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A value violates the invariants of the type it is being turned into.
class InvalidValue : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An operation's precondition does not hold for its arguments.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A requested size exceeds the configured enumeration bound.
class BoundExceeded : public std::runtime_error {
 public:
  BoundExceeded(const std::string& what_bound, int requested, int limit)
      : std::runtime_error(what_bound + " bound exceeded: requested " +
                           std::to_string(requested) + ", limit " +
                           std::to_string(limit)),
        requested_(requested),
        limit_(limit) {}

  int requested() const noexcept { return requested_; }
  int limit() const noexcept { return limit_; }

 private:
  int requested_;
  int limit_;
};

}  // namespace matchkit
