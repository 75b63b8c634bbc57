#pragma once

#include <stdexcept>
#include <string>

namespace msvc {

// Malformed input text. `line` is 1-based, 0 when no line applies.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// A documented precondition was violated by the caller.
class ContractError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// A configured budget (configuration-graph nodes, oracle work) would be exceeded.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace msvc
