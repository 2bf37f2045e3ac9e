#ifndef SIRFIT_ERRORS_HPP
#define SIRFIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sirfit {

// Error categories map onto CLI exit codes:
//   std::invalid_argument / ConfigError -> 2 (validation)
//   IoError                             -> 3 (file I/O)
//   NumericError                        -> 4 (numerical failure)

struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

struct IoError : std::runtime_error {
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

struct NumericError : std::runtime_error {
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace sirfit

#endif  // SIRFIT_ERRORS_HPP
