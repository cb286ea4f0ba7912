#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace curveclass {

// Base of all toolkit errors. name() is the stable identifier that the CLI
// emits in structured error objects, so scripts can match on it.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(what), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

// Rank mismatch between a class and the surface lattice it is used on.
struct DimensionError : Error {
    explicit DimensionError(const std::string& what) : Error("dimension_error", what) {}
};

// 64-bit signed overflow in exact integer arithmetic.
struct ArithmeticError : Error {
    explicit ArithmeticError(const std::string& what) : Error("arithmetic_error", what) {}
};

// Malformed class expression or unknown basis label.
struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error("parse_error", what) {}
};

// A class violates a numerical requirement of the requested invariant,
// e.g. odd parity of e*e + K*e.
struct InvalidClassError : Error {
    explicit InvalidClassError(const std::string& what) : Error("invalid_class_error", what) {}
};

// Operation is not defined on this surface model.
struct ModelError : Error {
    explicit ModelError(const std::string& what) : Error("model_error", what) {}
};

// A required search bound is missing or a search box is infeasibly large.
struct BoundError : Error {
    explicit BoundError(const std::string& what) : Error("bound_error", what) {}
};

// A stated precondition or postcondition assertion failed.
struct PreconditionError : Error {
    explicit PreconditionError(const std::string& what) : Error("precondition_error", what) {}
};

// Subvariety configuration is geometrically impossible at class level.
struct InvalidConfigurationError : Error {
    explicit InvalidConfigurationError(const std::string& what)
        : Error("invalid_configuration_error", what) {}
};

// The deduction engine derived both NonZero and Zero for one class.
struct ContradictionError : Error {
    explicit ContradictionError(const std::string& what) : Error("contradiction_error", what) {}
};

// Weyl orbit exceeded the caller-supplied size bound; carries the partial size.
struct OrbitBoundError : Error {
    OrbitBoundError(const std::string& what, std::size_t partial)
        : Error("orbit_bound_error", what), partial_size(partial) {}
    std::size_t partial_size;
};

// Points in special position: rank drop in an exact linear system.
struct SpecialPositionError : Error {
    explicit SpecialPositionError(const std::string& what)
        : Error("special_position_error", what) {}
};

// Intersection bookkeeping does not reconcile; typically a shared component.
struct ComponentOverlapError : Error {
    explicit ComponentOverlapError(const std::string& what)
        : Error("component_overlap_error", what) {}
};

// Cached payload disagrees with a fresh computation under --verify-cache.
struct CacheVerifyError : Error {
    explicit CacheVerifyError(const std::string& what) : Error("cache_verify_error", what) {}
};

// A supposedly unreachable state; indicates a bug in the toolkit itself.
struct InternalError : Error {
    explicit InternalError(const std::string& what) : Error("internal_error", what) {}
};

}  // namespace curveclass
