#pragma once

#include <stdexcept>
#include <string>

namespace nilmult {

/// Requested enumeration exceeds the library's hard desk-scale bounds.
class capacity_error : public std::runtime_error {
  public:
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

/// A cross-checked identity failed. This signals a bug in the library (or a
/// wrong frozen expectation), never bad user input.
class verification_error : public std::runtime_error {
  public:
    explicit verification_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace nilmult
