#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace jnet {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
public:
  ParseError(const std::string& source, std::size_t line, const std::string& what)
      : Error(format(source, line, what)), line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  static std::string format(const std::string& source, std::size_t line,
                            const std::string& what) {
    std::string out = source;
    if (line > 0) out += ":" + std::to_string(line);
    if (!out.empty()) out += ": ";
    return out + what;
  }

  std::size_t line_;
};

/// Two structures that must describe the same journal set do not.
class AlignmentError : public Error {
public:
  using Error::Error;
};

/// A statistic is undefined for the given input (zero variance, no edges, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

}  // namespace jnet
