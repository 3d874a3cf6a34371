// Error types shared across the library. Each carries a stable name so the
// CLI can report the originating failure without string-matching what().
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace roceval {

class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& message)
      : std::runtime_error(message), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

class EmptyDataset : public Error {
 public:
  EmptyDataset() : Error("EmptyDataset", "dataset contains no entries") {}
};

class InvalidScore : public Error {
 public:
  explicit InvalidScore(std::size_t index)
      : Error("InvalidScore",
              "non-finite score at entry index " + std::to_string(index)),
        index_(index) {}

  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class MissingClass : public Error {
 public:
  explicit MissingClass(const std::string& which)
      : Error("MissingClass", "no samples of class " + which) {}
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& message)
      : Error("DomainError", message) {}
};

class DensityUnavailable : public Error {
 public:
  DensityUnavailable()
      : Error("DensityUnavailable",
              "leakage density is undefined for a step-function curve") {}
};

class DegeneratePriors : public Error {
 public:
  explicit DegeneratePriors(const std::string& message)
      : Error("DegeneratePriors", message) {}
};

class InfeasibleCap : public Error {
 public:
  explicit InfeasibleCap(const std::string& message)
      : Error("InfeasibleCap", message) {}
};

class NumericalFailure : public Error {
 public:
  explicit NumericalFailure(const std::string& message)
      : Error("NumericalFailure", message) {}
};

class NotAProbability : public Error {
 public:
  explicit NotAProbability(std::size_t index)
      : Error("NotAProbability",
              "score outside [0,1] at entry index " + std::to_string(index)),
        index_(index) {}

  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class UndefinedPrecision : public Error {
 public:
  UndefinedPrecision()
      : Error("UndefinedPrecision",
              "no predicted positives: precision denominator is zero") {}
};

class EmptyCandidateSet : public Error {
 public:
  EmptyCandidateSet()
      : Error("EmptyCandidateSet", "candidate set is empty") {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& origin, std::size_t line,
             const std::string& message)
      : Error("ParseError",
              origin + ":" + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace roceval
