#pragma once

#include <stdexcept>
#include <string>

namespace rootpoly {

enum class ErrorCode {
  InvalidRank,      // rank outside the supported range for the family
  OutOfShape,       // diagram coordinates outside the staircase shape
  WrongType,        // operation defined only for some families
  NotPositiveRoot,  // a positive root was required
  NotAbelian,       // set is not an abelian ideal
  NoApex,           // abelian ideal lies in no principal filter class
  MarkNotOne,       // simple root must have mark 1
  NotLongSimple,    // simple root must be long
  NotInM,           // root must lie below the highest-root filter
  NotAntiStandard,  // digraph violates the anti-standard conditions
  UnsupportedType,  // construction not available for this family
  BadSpec,          // malformed ideal/apex specifier on the command line
};

inline const char* name(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidRank: return "InvalidRank";
    case ErrorCode::OutOfShape: return "OutOfShape";
    case ErrorCode::WrongType: return "WrongType";
    case ErrorCode::NotPositiveRoot: return "NotPositiveRoot";
    case ErrorCode::NotAbelian: return "NotAbelian";
    case ErrorCode::NoApex: return "NoApex";
    case ErrorCode::MarkNotOne: return "MarkNotOne";
    case ErrorCode::NotLongSimple: return "NotLongSimple";
    case ErrorCode::NotInM: return "NotInM";
    case ErrorCode::NotAntiStandard: return "NotAntiStandard";
    case ErrorCode::UnsupportedType: return "UnsupportedType";
    case ErrorCode::BadSpec: return "BadSpec";
  }
  return "Error";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace rootpoly
