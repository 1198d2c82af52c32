#pragma once

#include <stdexcept>
#include <string>

namespace ranergy {

// CLI exit codes. Library errors carry the code they map to.
enum class ExitCode : int {
    ok = 0,
    failure = 1,
    schema = 2,   // config schema / validation problems
    io = 3,       // file system, unreadable input
    domain = 4,   // numeric preconditions (non-positive rate, degenerate fit, ...)
};

class Error : public std::runtime_error {
public:
    Error(ExitCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ExitCode code() const { return code_; }

private:
    ExitCode code_;
};

// Document does not match the expected schema (unknown key, wrong type, missing field).
class SchemaError : public Error {
public:
    explicit SchemaError(const std::string& what) : Error(ExitCode::schema, what) {}
};

// Well-formed document with physically invalid values (non-positive power, duplicate
// names, segment/hop mismatches). Same exit code as SchemaError.
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& what) : Error(ExitCode::schema, what) {}
};

class IoError : public Error {
public:
    explicit IoError(const std::string& what) : Error(ExitCode::io, what) {}
};

class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(ExitCode::domain, what) {}
};

} // namespace ranergy
