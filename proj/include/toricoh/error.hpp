#pragma once

#include <stdexcept>
#include <string>

namespace toricoh {

// Failure categories shared across the library. CLI exit codes and test
// assertions key off these, so messages always carry the category name.
enum class Errc {
  integer_overflow,
  zero_vector,
  syntax_error,
  bad_index,
  non_primitive_ray,
  zero_ray,
  duplicate_ray,
  antipodal_cone,
  not_strictly_convex,
  not_unimodular,
  unsupported_fan,
  no_gaps,
  budget_exhausted,
  unknown_name,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace toricoh
