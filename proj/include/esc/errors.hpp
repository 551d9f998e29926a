#pragma once

#include <stdexcept>
#include <string>

namespace esc {

// Requested n has u_n = 0: no composition of n exists under the given
// cluster size distribution, so the conditional law is undefined.
class unreachable_n_error : public std::runtime_error {
 public:
  explicit unreachable_n_error(const std::string& what) : std::runtime_error(what) {}
};

// The requested operation is not available for this distribution family
// (e.g. no closed form); callers fall back to the generic numeric route.
class capability_error : public std::runtime_error {
 public:
  explicit capability_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace esc
