#pragma once

#include <stdexcept>
#include <string>

namespace dilint {

// Base of every error the library reports to callers. Analysis itself never
// throws; these come from I/O, configuration, oracle files and bad arguments.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

struct OracleError : Error {
  using Error::Error;
};

struct UsageError : Error {
  using Error::Error;
};

}  // namespace dilint
