#include "tiletrot/error.hpp"

namespace tiletrot {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::dimension_too_small: return "dimension-too-small";
    case ErrorKind::invalid_fragment: return "invalid-fragment";
    case ErrorKind::unknown_kind: return "unknown-kind";
    case ErrorKind::no_cover: return "no-cover";
    case ErrorKind::non_symmetric: return "non-symmetric";
    case ErrorKind::not_a_neighbor: return "exclude-not-neighbor";
    case ErrorKind::dimension_mismatch: return "dimension-mismatch";
    case ErrorKind::unsupported_lattice: return "unsupported-lattice";
    case ErrorKind::non_regular_lattice: return "non-regular-lattice";
    case ErrorKind::section_count: return "section-count";
    case ErrorKind::divisibility: return "divisibility";
    case ErrorKind::invalid_parameter: return "invalid-parameter";
    case ErrorKind::unsupported_bound: return "unsupported-bound";
    case ErrorKind::size_limit: return "size-limit";
    case ErrorKind::non_convergence: return "non-convergence";
    case ErrorKind::config: return "config";
  }
  return "error";
}

}  // namespace tiletrot
