#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace quintic {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class ZeroPolynomial : public Error {
public:
    explicit ZeroPolynomial(const std::string& msg = "operation undefined for the zero polynomial")
        : Error(msg) {}
};

class WrongDegree : public Error {
public:
    WrongDegree(int expected, int got)
        : Error("expected degree " + std::to_string(expected) + ", got " + std::to_string(got)) {}
    explicit WrongDegree(const std::string& msg) : Error(msg) {}
};

class ReduciblePolynomial : public Error {
public:
    explicit ReduciblePolynomial(const std::string& msg = "polynomial is reducible over Q")
        : Error(msg) {}
};

class RepeatedRoots : public Error {
public:
    explicit RepeatedRoots(const std::string& msg = "polynomial has repeated roots (discriminant is zero)")
        : Error(msg) {}
};

class NoConvergence : public Error {
public:
    explicit NoConvergence(const std::string& msg = "root iteration did not converge")
        : Error(msg) {}
};

class DegenerateRoots : public Error {
public:
    explicit DegenerateRoots(const std::string& msg = "roots too close to evaluate resolvents")
        : Error(msg) {}
};

class SingularMatrix : public Error {
public:
    explicit SingularMatrix(const std::string& msg = "matrix is singular") : Error(msg) {}
};

// Parse failure with the offending position and what was expected there.
class ParseError : public Error {
public:
    ParseError(std::size_t position, const std::string& expected)
        : Error("parse error at position " + std::to_string(position) + ": expected " + expected),
          position_(position), expected_(expected) {}

    std::size_t position() const { return position_; }
    const std::string& expected() const { return expected_; }

private:
    std::size_t position_;
    std::string expected_;
};

} // namespace quintic
