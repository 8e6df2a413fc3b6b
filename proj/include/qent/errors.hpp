#pragma once

#include <stdexcept>
#include <string>

namespace qent {

// Exit codes used by the CLI; library errors carry the matching category.
enum class ErrorCode : int {
    usage = 2,      // bad command line
    parse = 3,      // malformed input file
    contract = 4,   // input violates an operation's contract
    numerical = 5,  // LAPACK failure / non-convergence
};

class QentError : public std::runtime_error {
public:
    QentError(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }
    int exit_code() const { return static_cast<int>(code_); }

private:
    ErrorCode code_;
};

[[noreturn]] inline void throw_contract(const std::string& msg) {
    throw QentError(ErrorCode::contract, msg);
}
[[noreturn]] inline void throw_parse(const std::string& msg) {
    throw QentError(ErrorCode::parse, msg);
}
[[noreturn]] inline void throw_numerical(const std::string& msg) {
    throw QentError(ErrorCode::numerical, msg);
}

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw_contract(msg);
}

}  // namespace qent
