#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace grpring {

enum class Errc {
  invalid_modulus,
  not_a_unit,
  incompatible_operands,
  unsupported_ring,
  unsupported_group,
  too_large,
  not_a_proper_ideal,
  not_applicable,
  invalid_argument,
  not_an_ideal,
  unknown_suite,
};

std::string_view to_string(Errc code);

/// Every failure the library reports is an Error carrying one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace grpring
