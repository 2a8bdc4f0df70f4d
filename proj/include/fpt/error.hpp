#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fpt {

enum class Errc {
  // precondition / domain errors
  CompositeModulusBase,
  DegreeZero,
  DegreeTooSmall,
  DivisionByZero,
  FieldMismatch,
  ZeroElement,
  ConstantModulus,
  ConstantInput,
  DependentPair,
  Fp2OrbitDenominator,
  WrongField,
  NonBinaryEntry,
  NegativeInput,
  NonPositive,
  NegativeIndex,
  NotPrimeFieldElement,
  ZeroArgument,
  PIsFive,
  ExcludedZ,
  ZeroZ,
  ZeroA,
  NoSuchOrder,
  OrderTooSmall,
  ZNotInPrimeField,
  ZeroResidue,
  UnsupportedPrime,
  BadParameter,
  UnknownCommand,
  // resource limits
  BudgetExceeded,
  SearchWindowExhausted,
  // internal invariant violations (these signal bugs)
  SupportCollision,
  NegativeExponent,
  CoefficientNotInPrimeField,
  InternalConsistency,
};

constexpr std::string_view errc_name(Errc c) {
  switch (c) {
    case Errc::CompositeModulusBase: return "CompositeModulusBase";
    case Errc::DegreeZero: return "DegreeZero";
    case Errc::DegreeTooSmall: return "DegreeTooSmall";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::ZeroElement: return "ZeroElement";
    case Errc::ConstantModulus: return "ConstantModulus";
    case Errc::ConstantInput: return "ConstantInput";
    case Errc::DependentPair: return "DependentPair";
    case Errc::Fp2OrbitDenominator: return "Fp2OrbitDenominator";
    case Errc::WrongField: return "WrongField";
    case Errc::NonBinaryEntry: return "NonBinaryEntry";
    case Errc::NegativeInput: return "NegativeInput";
    case Errc::NonPositive: return "NonPositive";
    case Errc::NegativeIndex: return "NegativeIndex";
    case Errc::NotPrimeFieldElement: return "NotPrimeFieldElement";
    case Errc::ZeroArgument: return "ZeroArgument";
    case Errc::PIsFive: return "PIsFive";
    case Errc::ExcludedZ: return "ExcludedZ";
    case Errc::ZeroZ: return "ZeroZ";
    case Errc::ZeroA: return "ZeroA";
    case Errc::NoSuchOrder: return "NoSuchOrder";
    case Errc::OrderTooSmall: return "OrderTooSmall";
    case Errc::ZNotInPrimeField: return "ZNotInPrimeField";
    case Errc::ZeroResidue: return "ZeroResidue";
    case Errc::UnsupportedPrime: return "UnsupportedPrime";
    case Errc::BadParameter: return "BadParameter";
    case Errc::UnknownCommand: return "UnknownCommand";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::SearchWindowExhausted: return "SearchWindowExhausted";
    case Errc::SupportCollision: return "SupportCollision";
    case Errc::NegativeExponent: return "NegativeExponent";
    case Errc::CoefficientNotInPrimeField: return "CoefficientNotInPrimeField";
    case Errc::InternalConsistency: return "InternalConsistency";
  }
  return "Unknown";
}

/// True for error codes that can only be raised when an internal invariant
/// fails, as opposed to bad input or an exhausted budget.
constexpr bool is_invariant_violation(Errc c) {
  return c == Errc::SupportCollision || c == Errc::NegativeExponent ||
         c == Errc::CoefficientNotInPrimeField || c == Errc::InternalConsistency;
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, Errc code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace fpt
