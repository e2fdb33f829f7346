#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace raag {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input: presentation files, complex files, words.
/// `line` is 1-based; 0 means the input was not line-oriented.
class ParseError : public Error {
 public:
  ParseError(std::string source, std::size_t line, std::string token,
             std::string const& what)
      : Error(format(source, line, token, what)),
        source_(std::move(source)),
        line_(line),
        token_(std::move(token)),
        reason_(what) {}

  std::string const& source() const noexcept { return source_; }
  std::size_t line() const noexcept { return line_; }
  std::string const& token() const noexcept { return token_; }
  /// The message without the location prefix.
  std::string const& reason() const noexcept { return reason_; }

 private:
  static std::string format(std::string const& source, std::size_t line,
                            std::string const& token, std::string const& what) {
    std::string msg = source.empty() ? std::string("<input>") : source;
    if (line != 0) {
      msg += ":" + std::to_string(line);
    }
    msg += ": " + what;
    if (!token.empty()) {
      msg += " (token '" + token + "')";
    }
    return msg;
  }

  std::string source_;
  std::size_t line_;
  std::string token_;
  std::string reason_;
};

/// A precondition on a piling or word was violated.
class PilingError : public Error {
 public:
  using Error::Error;
};

/// The complex or a based word on it does not satisfy a precondition.
class ComplexError : public Error {
 public:
  using Error::Error;
};

}  // namespace raag
