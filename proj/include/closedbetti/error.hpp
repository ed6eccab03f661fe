#pragma once

#include <stdexcept>
#include <string>

namespace closedbetti {

enum class Errc {
  invalid_graph,
  disconnected,
  not_closed,
  has_cut_point,
  invalid_mu,
  invalid_shape,
  shape_mismatch,
  not_adjacent,
  budget_exceeded,
  parse_error,
};

const char* to_string(Errc code);

/// Every failure in the library is reported as an Error carrying a code that
/// callers can switch on; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace closedbetti
