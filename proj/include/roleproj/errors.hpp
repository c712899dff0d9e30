#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace roleproj {

// Base for every input-related failure. The CLI maps these to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text. line/column are 1-based; 0 means unknown.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : InputError(format(what, line, column)), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line,
                            std::size_t column) {
    std::string where;
    if (line > 0) where += "line " + std::to_string(line);
    if (column > 0) where += (where.empty() ? "" : ", ") + std::string("column ") + std::to_string(column);
    return where.empty() ? what : where + ": " + what;
  }

  std::size_t line_;
  std::size_t column_;
};

// An index that falls outside its sentence.
class RangeError : public InputError {
 public:
  using InputError::InputError;
};

// Well-formed text whose shape is inconsistent (column counts, lengths).
class StructuralError : public InputError {
 public:
  using InputError::InputError;
};

// "I-X" with no preceding "B-X"/"I-X", or a frame without a valid V span.
class BioSequenceError : public InputError {
 public:
  using InputError::InputError;
};

// Parallel corpora that do not line up (counts or sentence ids).
class CorpusMismatchError : public InputError {
 public:
  using InputError::InputError;
};

}  // namespace roleproj
