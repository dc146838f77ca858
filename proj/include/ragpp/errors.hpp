#pragma once

#include <stdexcept>
#include <string>

namespace ragpp {

// Exit codes for the CLI. Every exception thrown by the library maps to one
// of these; code 0 is success.
enum class ExitCode : int {
    ok = 0,
    usage = 1,
    data = 2,
    gateway = 3,
    evaluation = 4,
};

class Error : public std::runtime_error {
public:
    Error(ExitCode code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    ExitCode code() const { return code_; }

private:
    ExitCode code_;
};

// Bad flags, unreadable config, missing required settings.
class UsageError : public Error {
public:
    explicit UsageError(const std::string& msg) : Error(ExitCode::usage, msg) {}
};

// Malformed or inconsistent input data (parse errors, invariant violations).
class DataError : public Error {
public:
    explicit DataError(const std::string& msg) : Error(ExitCode::data, msg) {}
};

// Parse failure tied to a specific line of a specific file.
class ParseError : public DataError {
public:
    ParseError(const std::string& file, size_t line, const std::string& msg)
        : DataError(file + ":" + std::to_string(line) + ": " + msg), file_(file), line_(line) {}
    const std::string& file() const { return file_; }
    size_t line() const { return line_; }

private:
    std::string file_;
    size_t line_;
};

// Transport failures, missing fixtures, endpoint capability gaps.
class GatewayError : public Error {
public:
    explicit GatewayError(const std::string& msg) : Error(ExitCode::gateway, msg) {}
};

// Undefined statistics, degenerate inputs to the evaluation stage.
class EvalError : public Error {
public:
    explicit EvalError(const std::string& msg) : Error(ExitCode::evaluation, msg) {}
};

}  // namespace ragpp
