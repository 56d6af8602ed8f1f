#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mdsconv {

enum class ErrorCode {
  // galois
  NotPrime,
  ReducibleModulus,
  DegreeMismatch,
  DivisionByZero,
  FieldMismatch,
  ZeroElement,
  FactorizationUnavailable,
  InvalidFactorization,
  OrderNotDividing,
  EvenOrderField,
  FieldTooLarge,
  // linalg
  NonSquareSelection,
  IndexOutOfRange,
  BudgetExceeded,
  ShapeError,
  DimensionMismatch,
  // convcode
  NotColumnReduced,
  ColumnDegreeMismatch,
  ZeroColumn,
  RankDeficient,
  // constructions / distance
  ParamDomain,
  NBoundViolated,
  FieldTooSmall,
  EvenQ,
  // serialization
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::ReducibleModulus: return "ReducibleModulus";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::FactorizationUnavailable: return "FactorizationUnavailable";
    case ErrorCode::InvalidFactorization: return "InvalidFactorization";
    case ErrorCode::OrderNotDividing: return "OrderNotDividing";
    case ErrorCode::EvenOrderField: return "EvenOrderField";
    case ErrorCode::FieldTooLarge: return "FieldTooLarge";
    case ErrorCode::NonSquareSelection: return "NonSquareSelection";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::ShapeError: return "ShapeError";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotColumnReduced: return "NotColumnReduced";
    case ErrorCode::ColumnDegreeMismatch: return "ColumnDegreeMismatch";
    case ErrorCode::ZeroColumn: return "ZeroColumn";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::ParamDomain: return "ParamDomain";
    case ErrorCode::NBoundViolated: return "NBoundViolated";
    case ErrorCode::FieldTooSmall: return "FieldTooSmall";
    case ErrorCode::EvenQ: return "EvenQ";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace mdsconv
