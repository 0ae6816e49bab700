#include "fatpoints/error.hpp"

namespace fatpoints {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::arithmetic_overflow: return "arithmetic-overflow";
    case Errc::indeterminate_point: return "indeterminate-point";
    case Errc::hypothesis_violated: return "hypothesis-violated";
    case Errc::not_standard_form: return "not-standard-form";
    case Errc::too_many_points: return "too-many-points";
    case Errc::precondition_failed: return "precondition-failed";
    case Errc::bad_index: return "bad-index";
    case Errc::no_points: return "no-points";
    case Errc::size_limit_exceeded: return "size-limit-exceeded";
    case Errc::degenerate_sample: return "degenerate-sample";
    case Errc::invalid_config: return "invalid-config";
  }
  return "unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace fatpoints
