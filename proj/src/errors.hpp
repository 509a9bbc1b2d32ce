#pragma once

#include <stdexcept>
#include <string>

namespace a4ssl {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivideByZero : Error {
    DivideByZero() : Error("division by zero") {}
};

struct NotAUnit : Error {
    NotAUnit() : Error("element is not a unit") {}
};

struct ZeroVector : Error {
    ZeroVector() : Error("zero vector has no content") {}
};

struct InvalidArgument : Error {
    explicit InvalidArgument(const std::string& what) : Error(what) {}
};

struct NotInOrder : Error {
    NotInOrder() : Error("quaternion is not in the icosian ring") {}
};

struct InvalidNorm : Error {
    explicit InvalidNorm(const std::string& what) : Error(what) {}
};

struct NotASubmodule : Error {
    NotASubmodule() : Error("first module is not contained in the second") {}
};

struct NotRationalMap : Error {
    NotRationalMap() : Error("similarity map is not rational on the fixed-space basis") {}
};

struct NoInnerWitness : Error {
    NoInnerWitness() : Error("no unit realizes the composition as an inner automorphism") {}
};

struct InternalError : Error {
    explicit InternalError(const std::string& what) : Error(what) {}
};

struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& what) : Error(what) {}
    BudgetExceeded(const std::string& what, unsigned dim_, unsigned long long index_,
                   unsigned long long estimate_, unsigned long long cap_)
        : Error(what), dim(dim_), index(index_), estimate(estimate_), cap(cap_) {}
    unsigned dim = 0;
    unsigned long long index = 0;
    unsigned long long estimate = 0;  // partial-progress metadata
    unsigned long long cap = 0;
};

inline void internal_check(bool ok, const char* what) {
    if (!ok) throw InternalError(what);
}

}  // namespace a4ssl
