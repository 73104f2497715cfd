#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cogrowth {

  enum class ErrorCode {
    invalid_argument,
    invalid_spec,
    non_prolongable,
    empty_period,
    prefix_too_short,
    saturation_failed,
    out_of_range,
    insufficient_strata,
    too_large,
    empty_graph,
    unknown_vertex,
    unknown_edge,
    not_a_fork,
    not_good,
    budget_exceeded,
    precondition_failed,
    generation_failed,
  };

  std::string_view to_string(ErrorCode code) noexcept;

  //! Every failure raised by the library carries one of the codes above so
  //! that callers (the CLI in particular) can map it to an exit status.
  class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, std::string const& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what),
          _code(code) {}

    [[nodiscard]] ErrorCode code() const noexcept {
      return _code;
    }

   private:
    ErrorCode _code;
  };

  inline std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
      case ErrorCode::invalid_argument:
        return "InvalidArgument";
      case ErrorCode::invalid_spec:
        return "InvalidSpec";
      case ErrorCode::non_prolongable:
        return "NonProlongable";
      case ErrorCode::empty_period:
        return "EmptyPeriod";
      case ErrorCode::prefix_too_short:
        return "PrefixTooShort";
      case ErrorCode::saturation_failed:
        return "SaturationFailed";
      case ErrorCode::out_of_range:
        return "OutOfRange";
      case ErrorCode::insufficient_strata:
        return "InsufficientStrata";
      case ErrorCode::too_large:
        return "TooLarge";
      case ErrorCode::empty_graph:
        return "EmptyGraph";
      case ErrorCode::unknown_vertex:
        return "UnknownVertex";
      case ErrorCode::unknown_edge:
        return "UnknownEdge";
      case ErrorCode::not_a_fork:
        return "NotAFork";
      case ErrorCode::not_good:
        return "NotGood";
      case ErrorCode::budget_exceeded:
        return "BudgetExceeded";
      case ErrorCode::precondition_failed:
        return "PreconditionFailed";
      case ErrorCode::generation_failed:
        return "GenerationFailed";
    }
    return "Unknown";
  }

}  // namespace cogrowth
