#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace defsem {

enum class ErrorKind {
  invalid_name,
  unknown_argument,
  duplicate_argument,
  unknown_semantics,
  defeater_in_input,
  defeater_as_defendee,
  unknown_node,
  node_not_in_graph,
  empty_restriction_set,
  argument_outside_intersection,
  missing_separator,
  undeclared_endpoint,
  syntax_error,
  too_large,
};

std::string_view to_string(ErrorKind kind);

// Every domain failure in the library is reported through this type.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace defsem
