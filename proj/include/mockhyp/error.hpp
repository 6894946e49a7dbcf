#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mockhyp {

enum class ErrorCode {
  NotGroup,
  NotPermutation,
  NotSubgroup,
  TooLarge,
  NotUniquely2Div,
  NotInQ,
  NotInvolutionClass,
  NoMidpoint,
  MidpointNotUnique,
  NotClosed,
  NotTwisted,
  NotLoop,
  NotAutomorphism,
  NontrivialCenter,
  PrecessionNotInA,
  AutomorphismsNotClosed,
  NotFrobenius,
  KernelNotSubgroup,
  ComplementNotAbelian,
  EvenOrder,
  UnsupportedQ,
  BadParams,
  InconsistentChar,
  CharacteristicTwo,
  Parse,
  Internal,
};

/// Stable identifier used in messages and JSON output, e.g. "E_NOT_GROUP".
std::string_view code_name(ErrorCode code);

/// Every failure raised by the library. Carries the offending elements (if
/// any) so callers can print a reproducible counterexample.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::vector<std::int64_t> witness = {});

  ErrorCode code() const noexcept { return code_; }
  const std::vector<std::int64_t>& witness() const noexcept { return witness_; }

 private:
  ErrorCode code_;
  std::vector<std::int64_t> witness_;
};

}  // namespace mockhyp
