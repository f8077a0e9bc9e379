#pragma once

#include <stdexcept>
#include <string>

namespace simint {

// Malformed text input. Carries the 1-based line number when known (0 otherwise).
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Schema violation in a representation document, named by JSON path.
class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& path, const std::string& what)
      : std::runtime_error(path + ": " + what), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

// An exact oracle refused an input above its configured size cap.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const std::string& op, long long size, long long cap)
      : std::runtime_error("cap-exceeded: " + op + " size " + std::to_string(size) +
                           " exceeds cap " + std::to_string(cap)) {}
};

}  // namespace simint
