#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qec {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad parameters or malformed input values (sizes, indices, family parameters).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

// The input is well formed but outside the domain of the requested computation:
// disconnected graphs, diameter or regularity preconditions, size caps.
class DomainError : public Error {
public:
    using Error::Error;
};

class DisconnectedError : public DomainError {
public:
    DisconnectedError(std::size_t u, std::size_t v)
        : DomainError("graph is disconnected: no path between vertex " + std::to_string(u) +
                      " and vertex " + std::to_string(v)),
          u_(u), v_(v) {}

    std::size_t from() const noexcept { return u_; }
    std::size_t to() const noexcept { return v_; }

private:
    std::size_t u_;
    std::size_t v_;
};

// Text input that does not conform to a grammar. `offset` is 1-based: a character
// offset for expressions, a line number for edge lists.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset) : Error(what), offset_(offset) {}
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

}  // namespace qec
