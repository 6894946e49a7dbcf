#include "mockhyp/error.hpp"

namespace mockhyp {

std::string_view code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotGroup: return "E_NOT_GROUP";
    case ErrorCode::NotPermutation: return "E_NOT_PERMUTATION";
    case ErrorCode::NotSubgroup: return "E_NOT_SUBGROUP";
    case ErrorCode::TooLarge: return "E_TOO_LARGE";
    case ErrorCode::NotUniquely2Div: return "E_NOT_UNIQUELY_2DIV";
    case ErrorCode::NotInQ: return "E_NOT_IN_Q";
    case ErrorCode::NotInvolutionClass: return "E_NOT_INVOLUTION_CLASS";
    case ErrorCode::NoMidpoint: return "E_NO_MIDPOINT";
    case ErrorCode::MidpointNotUnique: return "E_MIDPOINT_NOT_UNIQUE";
    case ErrorCode::NotClosed: return "E_NOT_CLOSED";
    case ErrorCode::NotTwisted: return "E_NOT_TWISTED";
    case ErrorCode::NotLoop: return "E_NOT_LOOP";
    case ErrorCode::NotAutomorphism: return "E_NOT_AUTOMORPHISM";
    case ErrorCode::NontrivialCenter: return "E_NONTRIVIAL_CENTER";
    case ErrorCode::PrecessionNotInA: return "E_PRECESSION_NOT_IN_A";
    case ErrorCode::AutomorphismsNotClosed: return "E_AUTOMORPHISMS_NOT_CLOSED";
    case ErrorCode::NotFrobenius: return "E_NOT_FROBENIUS";
    case ErrorCode::KernelNotSubgroup: return "E_KERNEL_NOT_SUBGROUP";
    case ErrorCode::ComplementNotAbelian: return "E_COMPLEMENT_NOT_ABELIAN";
    case ErrorCode::EvenOrder: return "E_EVEN_ORDER";
    case ErrorCode::UnsupportedQ: return "E_UNSUPPORTED_Q";
    case ErrorCode::BadParams: return "E_BAD_PARAMS";
    case ErrorCode::InconsistentChar: return "E_INCONSISTENT_CHAR";
    case ErrorCode::CharacteristicTwo: return "E_CHARACTERISTIC_TWO";
    case ErrorCode::Parse: return "E_PARSE";
    case ErrorCode::Internal: return "E_INTERNAL";
  }
  return "E_UNKNOWN";
}

Error::Error(ErrorCode code, const std::string& message,
             std::vector<std::int64_t> witness)
    : std::runtime_error(std::string(code_name(code)) + ": " + message),
      code_(code),
      witness_(std::move(witness)) {}

}  // namespace mockhyp
