#pragma once

#include <stdexcept>
#include <string>

namespace holodet {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
    explicit DivisionByZero(const std::string& what) : Error(what) {}
};

struct InexactDivision : Error {
    InexactDivision() : Error("polynomial division left a nonzero remainder") {}
};

struct PoleAtPoint : Error {
    explicit PoleAtPoint(const std::string& what) : Error(what) {}
};

struct IndexOutOfRange : Error {
    explicit IndexOutOfRange(const std::string& what) : Error(what) {}
};

struct SingularSubmatrix : Error {
    explicit SingularSubmatrix(const std::string& what) : Error(what) {}
};

struct QuotientVanishes : Error {
    explicit QuotientVanishes(const std::string& what) : Error(what) {}
};

struct InsufficientData : Error {
    explicit InsufficientData(const std::string& what) : Error(what) {}
};

struct LeadingCoefficientVanishes : Error {
    explicit LeadingCoefficientVanishes(const std::string& what) : Error(what) {}
};

struct MissingDependency : Error {
    explicit MissingDependency(const std::string& what) : Error(what) {}
};

struct EvenNotSupported : Error {
    explicit EvenNotSupported(const std::string& what) : Error(what) {}
};

struct UsageError : Error {
    explicit UsageError(const std::string& what) : Error(what) {}
};

}  // namespace holodet
