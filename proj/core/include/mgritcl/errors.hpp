#pragma once

#include <stdexcept>
#include <string>

namespace mgritcl {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

class DegenerateReferenceError : public Error {
public:
    using Error::Error;
};

// Raised when a state leaves the admissible set (h <= 0, rho <= 0, p <= 0,
// or a negative radicand under a sound speed).
class PhysicalStateError : public Error {
public:
    explicit PhysicalStateError(const std::string& what, int cell = -1)
        : Error(cell < 0 ? what : what + " (cell " + std::to_string(cell) + ")"), cell_(cell) {}

    int cell() const noexcept { return cell_; }

private:
    int cell_;
};

class DivergenceError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(int line, const std::string& key, const std::string& what)
        : Error("line " + std::to_string(line) + (key.empty() ? "" : ", key '" + key + "'") + ": " + what),
          line_(line), key_(key) {}

    int line() const noexcept { return line_; }
    const std::string& key() const noexcept { return key_; }

private:
    int line_;
    std::string key_;
};

class FileError : public Error {
public:
    FileError(const std::string& path, const std::string& what)
        : Error(path + ": " + what), path_(path) {}

    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

} // namespace mgritcl
