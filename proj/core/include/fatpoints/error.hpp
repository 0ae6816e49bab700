#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fatpoints {

enum class Errc {
  arithmetic_overflow,
  indeterminate_point,
  hypothesis_violated,
  not_standard_form,
  too_many_points,
  precondition_failed,
  bad_index,
  no_points,
  size_limit_exceeded,
  degenerate_sample,
  invalid_config,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace fatpoints
