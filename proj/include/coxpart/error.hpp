#pragma once

#include <stdexcept>
#include <string>

namespace coxpart {

// Every failure the engine reports carries one of these kinds; the CLI maps
// them onto exit codes.
enum class ErrorKind {
  overflow,
  unsupported_label,
  malformed_spec,
  index_out_of_range,
  cap_exceeded,
  not_biclosed,
  not_a_prefix,
  lattice_violation,
  not_a_bipartition,
  repeated_letter,
  set_not_symmetric,
  set_not_antisymmetric,
  n_not_positive,
  n_not_negative,
  precondition,
  resource_cap,
  cache_error,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace coxpart
