#pragma once
#include <stdexcept>
#include <string>

namespace fsum {

// Base class for everything we throw on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct OverflowError : Error {
    explicit OverflowError(const std::string& msg = "integer overflow") : Error(msg) {}
};

struct InvalidPrime : Error {
    explicit InvalidPrime(const std::string& msg) : Error(msg) {}
};

struct UnknownForm : Error {
    explicit UnknownForm(const std::string& msg) : Error(msg) {}
};

struct HypothesisViolated : Error {
    explicit HypothesisViolated(const std::string& msg) : Error(msg) {}
};

struct SearchExhausted : Error {
    explicit SearchExhausted(const std::string& msg) : Error(msg) {}
};

// A bounded witness search ran out of budget without settling the instance.
struct BoundExhausted : Error {
    explicit BoundExhausted(const std::string& msg) : Error(msg) {}
};

struct NoAdmissibleRewrite : Error {
    explicit NoAdmissibleRewrite(const std::string& msg) : Error(msg) {}
};

struct GroupTooLarge : Error {
    explicit GroupTooLarge(const std::string& msg) : Error(msg) {}
};

struct TableTooSmall : Error {
    explicit TableTooSmall(const std::string& msg) : Error(msg) {}
};

struct UnknownClaim : Error {
    explicit UnknownClaim(const std::string& msg) : Error(msg) {}
};

struct CheckpointCorrupt : Error {
    explicit CheckpointCorrupt(const std::string& msg) : Error(msg) {}
};

struct InvalidAtom : Error {
    explicit InvalidAtom(const std::string& msg) : Error(msg) {}
};

// Thrown by the family DSL parser; position is a byte offset into the input.
struct ParseError : Error {
    size_t position;
    ParseError(const std::string& msg, size_t pos)
        : Error(msg + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
};

} // namespace fsum
