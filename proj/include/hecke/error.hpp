#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hecke {

enum class Errc {
  MalformedSpec,
  UnsupportedCharacteristic,
  NotPrime,
  FieldMismatch,
  DimensionMismatch,
  DivisionByZero,
  Singular,
  DeltaRelationViolated,
  ZeroParameter,
  InvalidParameter,
  DoesNotCommute,
  WrongRank,
  UnexpectedDimension,
  NotInUpsilon3,
  ContextInvalid,
  EquivalenceViolated,
  RootRequired,
  NoRowMatches,
  FieldLacksRoot,
  FieldTooLarge,
  InternalInvariant,
};

std::string_view errc_name(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above so that
/// callers (tests, the CLI) can branch on the kind without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace hecke
