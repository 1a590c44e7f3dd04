#pragma once

#include <stdexcept>
#include <string>

namespace paac {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Container magic/version/header problems.
class BadContainer : public Error {
public:
    explicit BadContainer(const std::string& msg) : Error("bad container: " + msg) {}
};

// Payload shorter than declared, or otherwise unusable.
class CorruptPayload : public Error {
public:
    explicit CorruptPayload(const std::string& msg) : Error("corrupt payload: " + msg) {}
};

// (m-1)*m^k (or the context table) exceeds representable bounds.
class ModelTooLarge : public Error {
public:
    explicit ModelTooLarge(const std::string& msg) : Error("model too large: " + msg) {}
};

class InvalidArgument : public Error {
public:
    explicit InvalidArgument(const std::string& msg) : Error(msg) {}
};

class IoError : public Error {
public:
    explicit IoError(const std::string& msg) : Error(msg) {}
};

} // namespace paac
