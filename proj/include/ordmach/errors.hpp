#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ordmach {

struct OrdinalOverflow : std::runtime_error {
  explicit OrdinalOverflow(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidEvidence : std::runtime_error {
  explicit InvalidEvidence(const std::string& what) : std::runtime_error(what) {}
};

struct OracleInapplicable : std::runtime_error {
  explicit OracleInapplicable(const std::string& what) : std::runtime_error(what) {}
};

struct DomainViolation : std::runtime_error {
  explicit DomainViolation(const std::string& what) : std::runtime_error(what) {}
};

struct ProgramClassViolation : std::runtime_error {
  explicit ProgramClassViolation(const std::string& what) : std::runtime_error(what) {}
};

// Parse failure with an exact position. Lines and columns are 1-based.
struct SyntaxError : std::runtime_error {
  std::size_t line;
  std::size_t column;
  std::string expected;

  SyntaxError(std::size_t line_, std::size_t column_, const std::string& expected_)
      : std::runtime_error("line " + std::to_string(line_) + " col " + std::to_string(column_) +
                           ": expected " + expected_),
        line(line_),
        column(column_),
        expected(expected_) {}
};

struct DuplicateRule : std::runtime_error {
  explicit DuplicateRule(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ordmach
