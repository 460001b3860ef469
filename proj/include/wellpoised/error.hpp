#pragma once

#include <stdexcept>
#include <string>

namespace wp {

enum class ErrorCode {
  NotPointed,
  UnboundedBelow,
  TailMismatch,
  DimensionMismatch,
  ZeroPolynomial,
  NotBinomial,
  NotGroebner,
  ImproperDivisor,
  MonomialInInitial,
  NotFullRank,
  RankDeficient,
  NotGeneric,
  NotDegreeOneGenerated,
  NotPositivelyGraded,
  CapExceeded,
  BadBlockSizes,
  EmptyPolyhedron,
  Parse,
  InvalidInput,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotPointed: return "NotPointed";
    case ErrorCode::UnboundedBelow: return "UnboundedBelow";
    case ErrorCode::TailMismatch: return "TailMismatch";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::NotBinomial: return "NotBinomial";
    case ErrorCode::NotGroebner: return "NotGroebner";
    case ErrorCode::ImproperDivisor: return "ImproperDivisor";
    case ErrorCode::MonomialInInitial: return "MonomialInInitial";
    case ErrorCode::NotFullRank: return "NotFullRank";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::NotGeneric: return "NotGeneric";
    case ErrorCode::NotDegreeOneGenerated: return "NotDegreeOneGenerated";
    case ErrorCode::NotPositivelyGraded: return "NotPositivelyGraded";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::BadBlockSizes: return "BadBlockSizes";
    case ErrorCode::EmptyPolyhedron: return "EmptyPolyhedron";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace wp
