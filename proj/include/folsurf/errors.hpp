#pragma once

#include <stdexcept>
#include <string>

namespace folsurf {

// Domain-level failure: the inputs were well-formed but the requested
// computation is not defined for them (non-invariant branch, depth
// exhaustion, indefinite lattice, ...). Maps to exit code 1 in the CLI.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input: syntax errors, schema violations. Exit code 2.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// Syntax error carrying the byte offset into the source text.
class ParseError : public InputError {
public:
    ParseError(const std::string& msg, std::size_t offset)
        : InputError(msg + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

}  // namespace folsurf
