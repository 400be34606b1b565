#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mcs {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised by the segmenter and syllable parser. `offset` is a character
// offset into the offending input, `span` the text that failed.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t offset, std::string span)
      : Error(msg), offset_(offset), span_(std::move(span)) {}
  std::size_t offset() const { return offset_; }
  const std::string& span() const { return span_; }

 private:
  std::size_t offset_;
  std::string span_;
};

class InvalidSyllableError : public ParseError {
 public:
  using ParseError::ParseError;
};

class InvalidToneError : public ParseError {
 public:
  using ParseError::ParseError;
};

// A vowel class has too few samples for the requested operation.
class InsufficientDataError : public Error {
 public:
  InsufficientDataError(const std::string& msg, std::string vowel)
      : Error(msg), vowel_(std::move(vowel)) {}
  const std::string& vowel() const { return vowel_; }

 private:
  std::string vowel_;
};

class NumericDomainError : public Error {
 public:
  using Error::Error;
};

// Malformed table or CSV input; `line` is 1-based.
class SchemaError : public Error {
 public:
  SchemaError(const std::string& msg, std::size_t line)
      : Error(msg), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A table file parsed fine but does not cover every required entry.
class TableIncompleteError : public SchemaError {
 public:
  using SchemaError::SchemaError;
};

}  // namespace mcs
