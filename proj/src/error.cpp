#include "homonym/error.hpp"

namespace homonym {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::EmptySupport: return "EmptySupport";
    case Errc::DuplicateLabel: return "DuplicateLabel";
    case Errc::NegativeWeight: return "NegativeWeight";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::InvalidAlpha: return "InvalidAlpha";
    case Errc::DegenerateInput: return "DegenerateInput";
    case Errc::UnsortedInput: return "UnsortedInput";
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::TooLarge: return "TooLarge";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::InsufficientPoints: return "InsufficientPoints";
    case Errc::AllSaturated: return "AllSaturated";
    case Errc::OutOfDomain: return "OutOfDomain";
    case Errc::DegenerateTable: return "DegenerateTable";
    case Errc::FileUnreadable: return "FileUnreadable";
    case Errc::MissingHeader: return "MissingHeader";
    case Errc::EmptyAfterCleaning: return "EmptyAfterCleaning";
  }
  return "Unknown";
}

}  // namespace homonym
