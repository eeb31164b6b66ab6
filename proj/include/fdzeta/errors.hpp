#pragma once

#include <stdexcept>
#include <string>

namespace fdz {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DomainError : Error {
    using Error::Error;
};

// s = 1 is the single pole of zeta(s, v).
struct PoleAtOne : Error {
    PoleAtOne() : Error("zeta pole at s = 1") {}
};

// Representations with Pochhammer denominators (s-k)_k exclude s in {1,...,k}.
struct PoleSet : Error {
    explicit PoleSet(const std::string& what) : Error(what) {}
};

struct EtaZeroDivisor : Error {
    EtaZeroDivisor() : Error("1 - 2^(1-s) vanishes at this s") {}
};

struct NonPositiveBase : Error {
    NonPositiveBase() : Error("base must be a positive real") {}
};

struct NotConverged : Error {
    explicit NotConverged(const std::string& what) : Error(what) {}
};

// Leading asymptotic term sin(pi a) Gamma(a+1) vanishes at integer a.
struct DegenerateLeading : Error {
    DegenerateLeading() : Error("leading asymptotic term vanishes for integer a") {}
};

struct ConstraintViolated : Error {
    explicit ConstraintViolated(const std::string& what) : Error(what) {}
};

struct UnsupportedRegion : Error {
    explicit UnsupportedRegion(const std::string& what) : Error(what) {}
};

}  // namespace fdz
