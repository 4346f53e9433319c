#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace homonym {

enum class Errc {
  EmptySupport,
  DuplicateLabel,
  NegativeWeight,
  LengthMismatch,
  InvalidAlpha,
  DegenerateInput,
  UnsortedInput,
  EmptyInput,
  TooLarge,
  InvalidArgument,
  InsufficientPoints,
  AllSaturated,
  OutOfDomain,
  DegenerateTable,
  FileUnreadable,
  MissingHeader,
  EmptyAfterCleaning,
};

std::string_view errc_name(Errc code) noexcept;

// Domain error raised by every module. The CLI maps these to exit code 2.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace homonym
