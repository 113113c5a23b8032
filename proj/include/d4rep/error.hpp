#pragma once

#include <stdexcept>
#include <string>

namespace d4rep {

enum class Errc {
  // linalg
  NotHermitian,
  NotUnitary,
  // character
  NotSorted,
  SumNotTwo,
  OutOfRange,
  DegenerateCharacter,
  LambdaOutOfRange,
  // constructor
  ConstraintViolated,
  SignPatternInvalid,
  RelationResidualTooLarge,
  DomainViolation,
  // graph representation
  NotRankOne,
  ScalarityViolated,
  // analysis
  Decomposable,
  NotAQuadruple,
  CharacterMismatch,
  // oracle
  ClosureViolated,
  SamplingExhausted,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotHermitian: return "NotHermitian";
    case Errc::NotUnitary: return "NotUnitary";
    case Errc::NotSorted: return "NotSorted";
    case Errc::SumNotTwo: return "SumNotTwo";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::DegenerateCharacter: return "DegenerateCharacter";
    case Errc::LambdaOutOfRange: return "LambdaOutOfRange";
    case Errc::ConstraintViolated: return "ConstraintViolated";
    case Errc::SignPatternInvalid: return "SignPatternInvalid";
    case Errc::RelationResidualTooLarge: return "RelationResidualTooLarge";
    case Errc::DomainViolation: return "DomainViolation";
    case Errc::NotRankOne: return "NotRankOne";
    case Errc::ScalarityViolated: return "ScalarityViolated";
    case Errc::Decomposable: return "Decomposable";
    case Errc::NotAQuadruple: return "NotAQuadruple";
    case Errc::CharacterMismatch: return "CharacterMismatch";
    case Errc::ClosureViolated: return "ClosureViolated";
    case Errc::SamplingExhausted: return "SamplingExhausted";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what, int index = -1)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code),
        index_(index) {}

  Errc code() const { return code_; }

  // 1-based index payload for OutOfRange and friends; -1 when not applicable.
  int index() const { return index_; }

 private:
  Errc code_;
  int index_;
};

}  // namespace d4rep
