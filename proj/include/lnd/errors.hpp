#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lnd {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ContextMismatch : public Error {
public:
    ContextMismatch() : Error("operands live in different variable contexts") {}
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

class DuplicateVariable : public Error {
public:
    explicit DuplicateVariable(const std::string& name) : Error("duplicate variable '" + name + "'"), name_(name) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

class ZeroRing : public Error {
public:
    ZeroRing() : Error("relations generate the unit ideal (zero ring)") {}
};

class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t offset)
        : Error(message + " at offset " + std::to_string(offset)), offset_(offset) {}
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

class UnknownIdentifier : public ParseError {
public:
    UnknownIdentifier(const std::string& name, std::size_t offset)
        : ParseError("unknown identifier '" + name + "'", offset), name_(name) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

class NotLocalSlice : public Error {
public:
    using Error::Error;
};

class NotASlice : public Error {
public:
    using Error::Error;
};

class UncertifiedDerivation : public Error {
public:
    using Error::Error;
};

class SliceVerificationFailed : public Error {
public:
    using Error::Error;
};

/// A bounded computation would exceed its configured size cap.
class ResourceBound : public Error {
public:
    ResourceBound(const std::string& what, std::size_t cap)
        : Error(what + " exceeds cap " + std::to_string(cap)), cap_(cap) {}
    std::size_t cap() const noexcept { return cap_; }

private:
    std::size_t cap_;
};

class DegreeOverflow : public Error {
public:
    using Error::Error;
};

}  // namespace lnd
