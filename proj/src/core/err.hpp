#pragma once
#include <stdexcept>
#include <string>

namespace zetafn {

// Error taxonomy shared by all modules.  Each failure mode that callers are
// expected to branch on gets its own code; everything else is Internal.
enum class Err {
  Internal,
  BadArg,
  NotPrime,
  NotIrreducible,
  WrongField,
  NotSmooth,
  Singular,
  NotOnCurve,
  BadDivisor,
  Inconsistent,
  DescentFailed,
  NoSolution,
  Ambiguous,
  GapTooWide,
  NotAdmissible,
  BudgetExceeded,
  Degenerate,
  InconsistentBetti,
  NotSquarefree,
  Unsupported,
};

struct ZfError : std::runtime_error {
  Err code;
  ZfError(Err c, const std::string& what) : std::runtime_error(what), code(c) {}
};

[[noreturn]] inline void fail(Err c, const std::string& what) { throw ZfError(c, what); }

inline const char* err_name(Err c) {
  switch (c) {
    case Err::Internal: return "Internal";
    case Err::BadArg: return "BadArg";
    case Err::NotPrime: return "NotPrime";
    case Err::NotIrreducible: return "NotIrreducible";
    case Err::WrongField: return "WrongField";
    case Err::NotSmooth: return "NotSmooth";
    case Err::Singular: return "Singular";
    case Err::NotOnCurve: return "NotOnCurve";
    case Err::BadDivisor: return "BadDivisor";
    case Err::Inconsistent: return "Inconsistent";
    case Err::DescentFailed: return "DescentFailed";
    case Err::NoSolution: return "NoSolution";
    case Err::Ambiguous: return "Ambiguous";
    case Err::GapTooWide: return "GapTooWide";
    case Err::NotAdmissible: return "NotAdmissible";
    case Err::BudgetExceeded: return "BudgetExceeded";
    case Err::Degenerate: return "Degenerate";
    case Err::InconsistentBetti: return "InconsistentBetti";
    case Err::NotSquarefree: return "NotSquarefree";
    case Err::Unsupported: return "Unsupported";
  }
  return "Internal";
}

}  // namespace zetafn
