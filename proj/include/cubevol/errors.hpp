#pragma once

#include <stdexcept>
#include <string>

namespace cubevol {

/** Thrown when a caller breaks an operation's documented precondition. */
class ContractViolation : public std::logic_error
{
    public:
        explicit ContractViolation(const std::string& what) : std::logic_error(what) {}
};

/** Malformed user input (files, CLI arguments). Carries a 1-based line when known. */
class InputError : public std::runtime_error
{
    public:
        explicit InputError(const std::string& what, int line = 0)
            : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
              line_(line) {}

        int line() const { return line_; }

    private:
        int line_;
};

inline void require(bool condition, const std::string& message)
{
    if (!condition)
        throw ContractViolation(message);
}

}   // namespace cubevol
