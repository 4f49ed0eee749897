#pragma once

#include <stdexcept>
#include <string>

namespace periods {

// Failure taxonomy shared by all modules. The CLI maps categories to exit
// codes: validation -> 2, property violation -> 3, precision -> 4, size -> 5.
enum class errc {
  domain_mismatch,
  division_by_zero,
  nonprime_modulus,
  bad_precision,
  precision_exhausted,
  spectra_not_disjoint,
  besser_condition_failed,
  not_effective,
  f_not_subalgebra,
  relations_violated,
  depth_overflow,
  not_in_image,
  no_f0_lift,
  inputs_not_splittings,
  composition_nonzero,
  diagram_violation,
  identity_violation,
  size_limit,
  validation_failed,
  parse_error,
  internal,
};

const char* errc_name(errc c);

class engine_error : public std::runtime_error {
 public:
  engine_error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
  throw engine_error(code, what);
}

inline void require(bool ok, errc code, const std::string& what) {
  if (!ok) fail(code, what);
}

}  // namespace periods
