#ifndef SALTPEPPER_ERRORS_HPP
#define SALTPEPPER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace saltpepper {

/// Invalid parameters, specs, or pipeline configuration (CLI exit code 2).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Operands with incompatible image dimensions (CLI exit code 2).
class ShapeError : public std::runtime_error {
public:
    explicit ShapeError(const std::string& what) : std::runtime_error(what) {}
};

/// Missing or unwritable files (CLI exit code 3).
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed or unsupported file contents (CLI exit code 4).
class FormatError : public std::runtime_error {
public:
    explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace saltpepper

#endif
