#pragma once

#include <stdexcept>
#include <string>

namespace pdeg {

enum class ErrorKind {
    NotAssociative,
    NotLatinSquare,
    NoIdentity,
    NoInverse,
    InvalidPermutation,
    ClosureTooLarge,
    LatticeTooLarge,
    NotASubgroup,
    NotNormal,
    SubgroupNotInLattice,
    NotCoprime,
    NotOddPrime,
    QuasicenterNotNormal,
    InvalidParameter,
    ParseError,
    CacheError,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
          kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace pdeg
