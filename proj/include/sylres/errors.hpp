#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sylres {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MalformedPermutation : Error {
  using Error::Error;
};

struct CapExceeded : Error {
  std::uint64_t value;
  std::uint64_t cap;
  CapExceeded(std::uint64_t value_, std::uint64_t cap_)
      : Error("cap exceeded: " + std::to_string(value_) + " > " +
              std::to_string(cap_)),
        value(value_), cap(cap_) {}
};

struct ClassCountExceeded : Error {
  using Error::Error;
};

struct NotAMember : Error {
  using Error::Error;
};

struct NotASubgroup : Error {
  using Error::Error;
};

struct NotAPGroup : Error {
  using Error::Error;
};

struct GroupMismatch : Error {
  using Error::Error;
};

struct NotACharacter : Error {
  using Error::Error;
};

struct NoSuitablePrime : Error {
  using Error::Error;
};

struct NodeBudgetExceeded : Error {
  using Error::Error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct PreconditionViolated : Error {
  using Error::Error;
};

struct UnsupportedParameter : Error {
  using Error::Error;
};

struct PatternMatchFailed : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace sylres
