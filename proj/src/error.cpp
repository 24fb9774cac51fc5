#include "cheb/error.hpp"

namespace cheb {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::BadSection: return "BadSection";
    case ErrorCode::TrivialGroup: return "TrivialGroup";
    case ErrorCode::NotAbelianFactor: return "NotAbelianFactor";
    case ErrorCode::NotChief: return "NotChief";
    case ErrorCode::NotIrreducible: return "NotIrreducible";
    case ErrorCode::SearchCapExceeded: return "SearchCapExceeded";
    case ErrorCode::TooManySieves: return "TooManySieves";
    case ErrorCode::StateCapExceeded: return "StateCapExceeded";
    case ErrorCode::TrialCapExceeded: return "TrialCapExceeded";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::BadProbability: return "BadProbability";
    case ErrorCode::UnexpectedException: return "UnexpectedException";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotInvertibleMatrix: return "NotInvertibleMatrix";
  }
  return "Unknown";
}

}  // namespace cheb
