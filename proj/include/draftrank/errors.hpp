/**
 * draftrank: accuracy metrics and consensus aggregation for mock drafts.
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace draftrank {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An item id appears more than once in one ranked list.
class DuplicateItemError : public Error {
 public:
  using Error::Error;
};

/// An item id is empty after trimming.
class EmptyIdError : public Error {
 public:
  using Error::Error;
};

/// A value is outside its allowed domain (q, depths, lengths, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed input file. Carries the 1-based line number when known (0 otherwise).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  explicit ParseError(const std::string& what) : ParseError(0, what) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_ = 0;
};

/// Two rows claim the same rank within one (author, type, date, season) group.
class DuplicateRankError : public ParseError {
 public:
  using ParseError::ParseError;
};

/// A mock's season has no actual draft in the dataset.
class MissingActualError : public Error {
 public:
  using Error::Error;
};

/// A metric was given a list with tier tags marking tied entries.
class TiedInputError : public Error {
 public:
  using Error::Error;
};

/// A metric was given an empty ranked list.
class EmptyListError : public Error {
 public:
  using Error::Error;
};

/// The baseline-metric item universe resolved to the empty set.
class EmptyUniverseError : public Error {
 public:
  using Error::Error;
};

/// An aggregation was given no mock drafts.
class NoMocksError : public Error {
 public:
  using Error::Error;
};

/// No mock draft falls inside the requested rolling window.
class NoMocksInWindowError : public Error {
 public:
  using Error::Error;
};

/// The requested season has no actual draft.
class UnknownSeasonError : public Error {
 public:
  using Error::Error;
};

/// The requested author key resolves to no mock draft.
class UnknownAuthorError : public Error {
 public:
  using Error::Error;
};

/// A season has too few final mocks to be percentile-ranked.
class DegenerateSeasonError : public Error {
 public:
  using Error::Error;
};

}  // namespace draftrank
