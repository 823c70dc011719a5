#ifndef POWMON_ERROR_HPP
#define POWMON_ERROR_HPP

#include <stdexcept>
#include <string>

namespace powmon {

/// A certified guarantee failed to hold (as opposed to bad input). The
/// CLI maps this to exit status 1, input errors to 2.
struct VerificationError : std::runtime_error {
  explicit VerificationError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace powmon

#endif
