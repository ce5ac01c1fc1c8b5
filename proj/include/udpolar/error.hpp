#pragma once

#include <stdexcept>
#include <string>

namespace udpolar {

// Base for every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text; the message names the offending line.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Well-formed text that does not describe a valid dependency tree.
class ValidationError : public Error {
 public:
  ValidationError(const std::string& sentence, const std::string& what)
      : Error("sentence " + sentence + ": " + what), sentence_(sentence) {}

  const std::string& sentence() const noexcept { return sentence_; }

 private:
  std::string sentence_;
};

// A broken internal invariant, e.g. an unmarked node where a mark is required.
class InvariantError : public Error {
 public:
  using Error::Error;
};

// Lexicon / hierarchy data files that cannot be loaded.
class LoadError : public Error {
 public:
  using Error::Error;
};

// Predicted and gold sentences that do not line up.
class AlignmentError : public Error {
 public:
  AlignmentError(const std::string& sentence, const std::string& what)
      : Error("sentence " + sentence + ": " + what), sentence_(sentence) {}

  const std::string& sentence() const noexcept { return sentence_; }

 private:
  std::string sentence_;
};

}  // namespace udpolar
