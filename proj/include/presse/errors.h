#ifndef PRESSE_ERRORS_H_
#define PRESSE_ERRORS_H_

#include <stdexcept>
#include <string>

namespace presse {

// Base class for every error the library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A data file could not be read or contained a malformed line.
class LoadError : public Error {
 public:
  LoadError(const std::string &path, int line, const std::string &what)
      : Error(path + (line > 0 ? ":" + std::to_string(line) : "") + ": " +
              what),
        path_(path),
        line_(line) {}

  const std::string &path() const { return path_; }
  int line() const { return line_; }

 private:
  std::string path_;
  int line_;
};

// A record or configuration violated one of its invariants.
class InvariantError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// The pipeline configuration is unreadable or references missing files.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace presse

#endif  // PRESSE_ERRORS_H_
