#pragma once

#include <stdexcept>
#include <string>

namespace syztrop {

struct ZeroGermError : std::runtime_error {
    explicit ZeroGermError(const std::string& what) : std::runtime_error(what) {}
};

struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

struct EvaluationZeroError : std::runtime_error {
    explicit EvaluationZeroError(const std::string& what) : std::runtime_error(what) {}
};

struct NotPositiveDefiniteError : std::runtime_error {
    explicit NotPositiveDefiniteError(const std::string& what) : std::runtime_error(what) {}
};

struct NotIsometryError : std::runtime_error {
    explicit NotIsometryError(const std::string& what) : std::runtime_error(what) {}
};

struct SingularBasisError : std::runtime_error {
    explicit SingularBasisError(const std::string& what) : std::runtime_error(what) {}
};

struct SizeError : std::runtime_error {
    explicit SizeError(const std::string& what) : std::runtime_error(what) {}
};

struct RepresentativeError : std::runtime_error {
    explicit RepresentativeError(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace syztrop
