#pragma once

#include <stdexcept>
#include <string>

namespace girth {

enum class ErrorCode {
  ParseError,
  NonSimple,
  NegativeWeight,
  NotPlanar,
  NotEmbedded,
  UnknownNode,
  UnknownEdge,
  NotBiconnected,
  NotTriangulated,
  DegreeTooSmall,
  NotNeighbor,
  NotMinDepthNeighbor,
  PreconditionViolated,
  InclusionViolated,
  TooLarge,
  WeightTooLarge,
  NoWitness,
  BadParameter,
  Internal,
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NonSimple: return "NonSimple";
    case ErrorCode::NegativeWeight: return "NegativeWeight";
    case ErrorCode::NotPlanar: return "NotPlanar";
    case ErrorCode::NotEmbedded: return "NotEmbedded";
    case ErrorCode::UnknownNode: return "UnknownNode";
    case ErrorCode::UnknownEdge: return "UnknownEdge";
    case ErrorCode::NotBiconnected: return "NotBiconnected";
    case ErrorCode::NotTriangulated: return "NotTriangulated";
    case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorCode::NotNeighbor: return "NotNeighbor";
    case ErrorCode::NotMinDepthNeighbor: return "NotMinDepthNeighbor";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::InclusionViolated: return "InclusionViolated";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::WeightTooLarge: return "WeightTooLarge";
    case ErrorCode::NoWitness: return "NoWitness";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

class GirthError : public std::runtime_error {
 public:
  GirthError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw GirthError(code, what);
}

inline void require(bool ok, ErrorCode code, const std::string& what) {
  if (!ok) fail(code, what);
}

}  // namespace girth
