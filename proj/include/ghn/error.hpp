#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ghn {

enum class Errc {
  ZeroPolynomial,
  NonPositiveLeading,
  IndexOutOfRange,
  NotDominant,
  DegenerateForm,
  ZeroVector,
  ParseError,
  UnsupportedType,
  InconsistentDegrees,
  UnderdeterminedPsi,
  NotCentral,
  SearchSpaceTooLarge,
  WrongGroupShape,
  SemistableInput,
  InvalidInput,
  InternalNonRefinement,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace ghn
