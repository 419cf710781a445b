#pragma once

#include <stdexcept>
#include <string>

namespace nacrig {

// Malformed textual input (graph6, edge lists, colorings, checkpoints).
// Messages name the offending byte offset or line where known.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A caller violated an operation's precondition.
class ContractError : public std::runtime_error {
public:
    explicit ContractError(const std::string& what) : std::runtime_error(what) {}
};

// Input exceeds a configured size cap.
class CapacityError : public std::runtime_error {
public:
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// A sampled motion does not look like any construction this library knows.
class ClassificationError : public std::runtime_error {
public:
    explicit ClassificationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace nacrig
