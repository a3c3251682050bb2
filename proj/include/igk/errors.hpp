#pragma once

#include <stdexcept>
#include <string>

namespace igk {

// Thrown for unreadable/unwritable files and unsupported formats.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown for malformed file contents; carries the offending line.
class ParseError : public IoError {
public:
    ParseError(const std::string& path, long line, const std::string& msg)
        : IoError(path + ":" + std::to_string(line) + ": " + msg), path_(path), line_(line) {}

    const std::string& path() const noexcept { return path_; }
    long line() const noexcept { return line_; }

private:
    std::string path_;
    long line_;
};

// Thrown when an iterative numerical method fails to reach its tolerance.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown when a kernel-weighted sum has no contributing points.
class EmptySupportError : public NumericError {
public:
    explicit EmptySupportError(const std::string& msg) : NumericError(msg) {}
};

// Thrown by the conjugate gradient solver; carries the residual it reached.
class CgError : public NumericError {
public:
    CgError(const std::string& msg, double achieved_residual)
        : NumericError(msg), achieved_residual_(achieved_residual) {}

    double achieved_residual() const noexcept { return achieved_residual_; }

private:
    double achieved_residual_;
};

} // namespace igk
