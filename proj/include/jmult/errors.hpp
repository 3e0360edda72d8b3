#ifndef JMULT_ERRORS_HPP
#define JMULT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace jmult {

enum class Errc {
  VariableMismatch,
  NonFiniteLength,
  NonIntegerCoefficient,
  NotYetPolynomial,
  NoStabilization,
  NotMPrimary,
  NotASubideal,
  VerificationFailed,
  ParseError,
  InvalidArgument,
  Internal,
};

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

inline const char* errcName(Errc c) {
  switch (c) {
    case Errc::VariableMismatch: return "VariableMismatch";
    case Errc::NonFiniteLength: return "NonFiniteLength";
    case Errc::NonIntegerCoefficient: return "NonIntegerCoefficient";
    case Errc::NotYetPolynomial: return "NotYetPolynomial";
    case Errc::NoStabilization: return "NoStabilization";
    case Errc::NotMPrimary: return "NotMPrimary";
    case Errc::NotASubideal: return "NotASubideal";
    case Errc::VerificationFailed: return "VerificationFailed";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace jmult

#endif
