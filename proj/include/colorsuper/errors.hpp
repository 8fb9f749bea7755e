#pragma once

#include <stdexcept>
#include <string>

namespace colorsuper {

struct SchemaError : std::runtime_error {
    explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Division is supported only for single-term radicals; anything else lands here.
struct UnsupportedDivisionError : std::runtime_error {
    explicit UnsupportedDivisionError(const std::string& what) : std::runtime_error(what) {}
};

struct FactorBoundError : std::runtime_error {
    explicit FactorBoundError(const std::string& what) : std::runtime_error(what) {}
};

struct SectorError : std::runtime_error {
    explicit SectorError(const std::string& what) : std::runtime_error(what) {}
};

// Operator bracket left second-order terms: the pair does not close.
struct NonRealizationError : std::runtime_error {
    explicit NonRealizationError(const std::string& what) : std::runtime_error(what) {}
};

struct NoRealizationError : std::runtime_error {
    explicit NoRealizationError(const std::string& what) : std::runtime_error(what) {}
};

struct ReducibilityError : std::runtime_error {
    explicit ReducibilityError(const std::string& what) : std::runtime_error(what) {}
};

struct EmptyAlgebraError : std::runtime_error {
    explicit EmptyAlgebraError(const std::string& what) : std::runtime_error(what) {}
};

struct RenderingGuardError : std::runtime_error {
    explicit RenderingGuardError(const std::string& what) : std::runtime_error(what) {}
};

struct UnsupportedError : std::runtime_error {
    explicit UnsupportedError(const std::string& what) : std::runtime_error(what) {}
};

// Product of two unknown-bearing coefficients; linear-form arithmetic only.
struct NonlinearError : std::runtime_error {
    explicit NonlinearError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace colorsuper
