#pragma once

#include <stdexcept>
#include <string>

namespace opn {

enum class errc {
  ok = 0,
  not_prime,
  bad_residue_pi,
  bad_residue_alpha,
  not_coprime,
  not_odd,
  symbolic_m,
  even_input,
  inconsistent_flag,
  inconsistent_prediction,
  bad_range,
  range_too_large,
  bad_exponent,
  alpha_too_large,
  parse_error,
  out_of_range,
  selftest_failed,
  theorem_falsified,
  bad_argument,
  internal_error,
};

// Stable machine-readable name, e.g. "bad_residue_pi".
const char* errc_name(errc c);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace opn
