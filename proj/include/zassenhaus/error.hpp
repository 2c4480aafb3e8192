#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace zassenhaus {

enum class ErrorCode {
  NotPrime,
  ReduciblePolynomial,
  NotPrimitive,
  DivisionByZero,
  DlogOfZero,
  BadD,
  EqualPrimes,
  MixedParams,
  NotOrderPQ,
  Unsupported,
  NonIntegralAugmentation,
  MixedGroups,
  DimensionMismatch,
  NegativeMultiplicity,
  BadAuxPrime,
  CharacterMismatch,
  UnsupportedShape,
  ConfigParse,
  Overflow,
  NotIntegral,
};

std::string_view to_string(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace zassenhaus
