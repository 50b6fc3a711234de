#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace attnscope {

enum class Errc {
  InvalidArgument,
  Io,
  ParseError,
  MalformedUrl,
  PreEpochTimestamp,
  MonthMismatch,
  EmptyMonth,
  DegenerateSample,
  EmptyInput,
  DegenerateInput,
  DegenerateTail,
  EmptyCorpus,
  TooShort,
  SingularRegression,
  NoSignificantLag,
  AlignmentGap,
  DuplicateDomain,
  EmptySnapshot,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace attnscope
