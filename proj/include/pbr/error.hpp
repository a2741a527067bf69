#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pbr {

  enum class ErrorCode {
    duplicate_label,
    dangling_edge_endpoint,
    duplicate_edge,
    incomposable_shapes,
    closure_violation,
    invalid_o_morphism,
    not_a_brauer_diagram,
    instance_too_large,
    invalid_partition,
    parse_error,
    assertion_failure,
  };

  // Stable names used on the CLI's machine-readable error channel.
  constexpr std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
      case ErrorCode::duplicate_label:
        return "DuplicateLabel";
      case ErrorCode::dangling_edge_endpoint:
        return "DanglingEdgeEndpoint";
      case ErrorCode::duplicate_edge:
        return "DuplicateEdge";
      case ErrorCode::incomposable_shapes:
        return "IncomposableShapes";
      case ErrorCode::closure_violation:
        return "ClosureViolation";
      case ErrorCode::invalid_o_morphism:
        return "InvalidOMorphism";
      case ErrorCode::not_a_brauer_diagram:
        return "NotABrauerDiagram";
      case ErrorCode::instance_too_large:
        return "InstanceTooLarge";
      case ErrorCode::invalid_partition:
        return "InvalidPartition";
      case ErrorCode::parse_error:
        return "ParseError";
      case ErrorCode::assertion_failure:
        return "AssertionFailure";
    }
    return "Unknown";
  }

  class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, std::string const& detail)
        : std::runtime_error(std::string(to_string(code)) + ": " + detail),
          _code(code),
          _detail(detail) {}

    ErrorCode code() const noexcept {
      return _code;
    }

    std::string const& detail() const noexcept {
      return _detail;
    }

   private:
    ErrorCode   _code;
    std::string _detail;
  };

}  // namespace pbr
