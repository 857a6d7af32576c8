#pragma once

#include <stdexcept>
#include <string>

namespace sv {

// Process exit codes double as the error taxonomy: every failure a caller can
// act on is one of these.
enum class ErrorCode : int {
    check_failed = 2, // a verification command found an inequality
    genericity = 3,   // random choices kept violating genericity (retries spent)
    budget = 4,       // Groebner pair/basis budget exceeded
    usage = 5,        // parse errors and precondition violations
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& msg)
        : std::runtime_error(msg), code_(code) {}
    ErrorCode code() const { return code_; }
    int exit_code() const { return static_cast<int>(code_); }

private:
    ErrorCode code_;
};

class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line, int col)
        : Error(ErrorCode::usage,
                msg + " (line " + std::to_string(line) + ", column " +
                    std::to_string(col) + ")"),
          line_(line), col_(col) {}
    int line() const { return line_; }
    int column() const { return col_; }

private:
    int line_, col_;
};

class UsageError : public Error {
public:
    explicit UsageError(const std::string& msg) : Error(ErrorCode::usage, msg) {}
};

class GenericityError : public Error {
public:
    explicit GenericityError(const std::string& msg)
        : Error(ErrorCode::genericity, msg) {}
};

class BudgetError : public Error {
public:
    BudgetError(const std::string& msg, long long pairs, long long basis)
        : Error(ErrorCode::budget, msg + " (pairs processed: " +
                                       std::to_string(pairs) +
                                       ", basis size: " + std::to_string(basis) + ")"),
          pairs_(pairs), basis_(basis) {}
    long long pairs() const { return pairs_; }
    long long basis() const { return basis_; }

private:
    long long pairs_, basis_;
};

class CheckFailedError : public Error {
public:
    explicit CheckFailedError(const std::string& msg)
        : Error(ErrorCode::check_failed, msg) {}
};

} // namespace sv
