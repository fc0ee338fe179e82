#ifndef DEABENCH_ERRORS_HPP
#define DEABENCH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace deabench {

/// Malformed inputs at an API boundary (dimension mismatch, out-of-range
/// values, mismatched keys). Maps to CLI exit code 2.
class validation_error : public std::runtime_error {
  public:
    explicit validation_error(const std::string &msg) : std::runtime_error(msg) {}
};

/// Missing or unparseable data (missing cell, bad CSV row). Exit code 2.
class data_error : public std::runtime_error {
  public:
    explicit data_error(const std::string &msg) : std::runtime_error(msg) {}
};

/// Bad run configuration (missing year share, invalid weights). Exit code 3.
class config_error : public std::runtime_error {
  public:
    explicit config_error(const std::string &msg) : std::runtime_error(msg) {}
};

/// Broken internal contract (should never surface on valid inputs). Exit code 4.
class internal_error : public std::logic_error {
  public:
    explicit internal_error(const std::string &msg) : std::logic_error(msg) {}
};

} // namespace deabench

#endif
