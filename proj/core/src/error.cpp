#include "attnscope/error.hpp"

namespace attnscope {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::Io: return "Io";
    case Errc::ParseError: return "ParseError";
    case Errc::MalformedUrl: return "MalformedUrl";
    case Errc::PreEpochTimestamp: return "PreEpochTimestamp";
    case Errc::MonthMismatch: return "MonthMismatch";
    case Errc::EmptyMonth: return "EmptyMonth";
    case Errc::DegenerateSample: return "DegenerateSample";
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::DegenerateInput: return "DegenerateInput";
    case Errc::DegenerateTail: return "DegenerateTail";
    case Errc::EmptyCorpus: return "EmptyCorpus";
    case Errc::TooShort: return "TooShort";
    case Errc::SingularRegression: return "SingularRegression";
    case Errc::NoSignificantLag: return "NoSignificantLag";
    case Errc::AlignmentGap: return "AlignmentGap";
    case Errc::DuplicateDomain: return "DuplicateDomain";
    case Errc::EmptySnapshot: return "EmptySnapshot";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace attnscope
