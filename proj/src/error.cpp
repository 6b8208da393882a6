#include "defsem/error.hpp"

namespace defsem {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_name: return "invalid-name";
    case ErrorKind::unknown_argument: return "unknown-argument";
    case ErrorKind::duplicate_argument: return "duplicate-argument";
    case ErrorKind::unknown_semantics: return "unknown-semantics";
    case ErrorKind::defeater_in_input: return "defeater-in-input";
    case ErrorKind::defeater_as_defendee: return "defeater-as-defendee";
    case ErrorKind::unknown_node: return "unknown-node";
    case ErrorKind::node_not_in_graph: return "node-not-in-graph";
    case ErrorKind::empty_restriction_set: return "empty-restriction-set";
    case ErrorKind::argument_outside_intersection: return "argument-outside-intersection";
    case ErrorKind::missing_separator: return "missing-separator";
    case ErrorKind::undeclared_endpoint: return "undeclared-endpoint";
    case ErrorKind::syntax_error: return "syntax-error";
    case ErrorKind::too_large: return "too-large";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace defsem
