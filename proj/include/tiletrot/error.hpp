#pragma once

#include <stdexcept>
#include <string>

namespace tiletrot {

enum class ErrorKind {
  dimension_too_small,
  invalid_fragment,
  unknown_kind,
  no_cover,
  non_symmetric,
  not_a_neighbor,
  dimension_mismatch,
  unsupported_lattice,
  non_regular_lattice,
  section_count,
  divisibility,
  invalid_parameter,
  unsupported_bound,
  size_limit,
  non_convergence,
  config,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace tiletrot
