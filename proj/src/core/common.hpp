#pragma once

#include <stdexcept>
#include <string>

namespace mergm {

inline constexpr const char* kVersion = "0.1.0";

// Error categories map 1:1 onto CLI exit codes and C API status codes.
enum class ErrorKind {
  usage = 1,    // bad arguments, invalid configuration
  data = 2,     // unreadable/ill-formed input files, broken invariants in data
  numeric = 3,  // numerical failure (e.g. Cholesky of an indefinite matrix)
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail_usage(const std::string& msg) { throw Error(ErrorKind::usage, msg); }
[[noreturn]] inline void fail_data(const std::string& msg) { throw Error(ErrorKind::data, msg); }
[[noreturn]] inline void fail_numeric(const std::string& msg) { throw Error(ErrorKind::numeric, msg); }

}  // namespace mergm
