#pragma once

#include <stdexcept>
#include <string>

namespace covidmc {

/// Base class of every domain error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A matrix row does not sum to 1 within tolerance.
class RowSumError : public Error {
 public:
  RowSumError(int row_, double deviation_)
      : Error("row " + std::to_string(row_) + " sum deviates from 1 by " +
              std::to_string(deviation_)),
        row(row_),
        deviation(deviation_) {}
  int row;
  double deviation;
};

/// A probability entry lies outside [0,1].
class RangeError : public Error {
 public:
  RangeError(int row_, int col_, double value_)
      : Error("entry (" + std::to_string(row_) + "," + std::to_string(col_) +
              ") = " + std::to_string(value_) + " outside [0,1]"),
        row(row_),
        col(col_),
        value(value_) {}
  int row, col;
  double value;
};

/// A computed matrix power drifted off row-stochasticity.
class NumericalDriftError : public Error {
 public:
  NumericalDriftError(int row_, double deviation_)
      : Error("power drifted: row " + std::to_string(row_) +
              " sum off 1 by " + std::to_string(deviation_)),
        row(row_),
        deviation(deviation_) {}
  int row;
  double deviation;
};

class NoAbsorbingStateError : public Error {
 public:
  NoAbsorbingStateError() : Error("chain has no absorbing state") {}
};

/// (I - Q) is numerically singular.
class SingularError : public Error {
 public:
  explicit SingularError(double condition_)
      : Error("I-Q numerically singular (condition estimate " +
              std::to_string(condition_) + ")"),
        condition(condition_) {}
  double condition;
};

/// A count-table row has no usable mass.
class EmptyRowError : public Error {
 public:
  explicit EmptyRowError(int row_)
      : Error("count row " + std::to_string(row_) + " has total 0"),
        row(row_) {}
  int row;
};

class NegativeCountError : public Error {
 public:
  NegativeCountError(int row_, int col_, long long value_)
      : Error("negative count " + std::to_string(value_) + " at (" +
              std::to_string(row_) + "," + std::to_string(col_) + ")"),
        row(row_),
        col(col_),
        value(value_) {}
  int row, col;
  long long value;
};

/// A structure mask row allows no transition (or an invalid D row).
class MaskError : public Error {
 public:
  using Error::Error;
};

class EmptySupportError : public Error {
 public:
  EmptySupportError() : Error("simplex projection support is empty") {}
};

class HeaderMismatchError : public Error {
 public:
  HeaderMismatchError(std::string expected_, std::string got_)
      : Error("header mismatch: expected \"" + expected_ + "\", got \"" +
              got_ + "\""),
        expected(std::move(expected_)),
        got(std::move(got_)) {}
  std::string expected, got;
};

/// A CSV cell failed to parse; coordinates are 1-based (header = line 1).
class FieldParseError : public Error {
 public:
  FieldParseError(int line_, int column_, std::string cell_)
      : Error("cannot parse cell \"" + cell_ + "\" at line " +
              std::to_string(line_) + ", column " + std::to_string(column_)),
        line(line_),
        column(column_),
        cell(std::move(cell_)) {}
  int line, column;
  std::string cell;
};

class DuplicateHorizonError : public Error {
 public:
  explicit DuplicateHorizonError(int day_)
      : Error("duplicate horizon: day " + std::to_string(day_)), day(day_) {}
  int day;
};

}  // namespace covidmc
