#pragma once

#include <cstdint>
#include <string>

#include "curveclass/errors.hpp"
#include "curveclass/expr.hpp"
#include "curveclass/surface.hpp"

namespace curveclass {

// Numerical invariants of a divisor class. The J-genus and the expected
// dimension require e*e + K*e to be even; violating inputs indicate a wrong
// model and are rejected rather than rounded.

inline int64_t adjunction_number(const SurfaceModel& model, const DivisorClass& e) {
    return checked_add(self_pair(model, e), pair(model, model.canonical_class(), e));
}

inline void require_even_adjunction(const SurfaceModel& model, const DivisorClass& e,
                                    const char* op) {
    if (adjunction_number(model, e) % 2 != 0)
        throw InvalidClassError(std::string(op) + ": e*e + K*e is odd for class '" +
                                format_class(model, e) + "'");
}

// g_J(e) = (e*e + K*e)/2 + 1.
inline int64_t j_genus(const SurfaceModel& model, const DivisorClass& e) {
    require_even_adjunction(model, e, "j_genus");
    return checked_add(exact_half(adjunction_number(model, e)), 1);
}

// dim_SW(e) = e*e - K*e. Defined for every class; equals 2*iota_e.
inline int64_t sw_dimension(const SurfaceModel& model, const DivisorClass& e) {
    return checked_sub(self_pair(model, e), pair(model, model.canonical_class(), e));
}

struct ExpectedDimension {
    int64_t iota;  // (e*e - K*e)/2, may be negative
    int64_t l;     // max(iota, 0)
};

inline ExpectedDimension expected_dimension(const SurfaceModel& model, const DivisorClass& e) {
    require_even_adjunction(model, e, "expected_dimension");
    int64_t iota = exact_half(sw_dimension(model, e));
    if (adjunction_number(model, e) == -2 && iota != checked_add(self_pair(model, e), 1))
        throw InternalError("iota != e*e + 1 for a genus-zero class");
    return {iota, iota > 0 ? iota : 0};
}

// Euler characteristic chi(O(D)) = 1 + (D*D - K*D)/2 on a rational surface;
// equals D*D + 2 when g_J(D) = 0.
inline int64_t sheaf_euler_characteristic(const SurfaceModel& model, const DivisorClass& d) {
    if (!model.is_rational())
        throw ModelError("sheaf_euler_characteristic is defined on rational surfaces only");
    require_even_adjunction(model, d, "sheaf_euler_characteristic");
    return checked_add(1, exact_half(sw_dimension(model, d)));
}

// e' = e + h_e, the dual class used to model a sphere-class moduli space.
// Both inputs must have J-genus 0 and pair to 1; the postconditions
// g_J(e') = 0 and e'.e = e*e + 1 = l_e are verified, and the failing
// assertion is named in the raised error.
inline DivisorClass dual_class(const SurfaceModel& model, const DivisorClass& e,
                               const DivisorClass& h_e) {
    if (j_genus(model, e) != 0)
        throw PreconditionError("dual_class: g_J(e) != 0 for '" + format_class(model, e) + "'");
    if (j_genus(model, h_e) != 0)
        throw PreconditionError("dual_class: g_J(h_e) != 0 for '" + format_class(model, h_e) + "'");
    if (pair(model, e, h_e) != 1)
        throw PreconditionError("dual_class: e.h_e != 1");
    DivisorClass dual = e + h_e;
    if (j_genus(model, dual) != 0)
        throw PreconditionError("dual_class: postcondition g_J(e + h_e) = 0 failed");
    int64_t degree = pair(model, dual, e);
    int64_t expected = checked_add(self_pair(model, e), 1);
    if (degree != expected)
        throw PreconditionError("dual_class: postcondition (e + h_e).e = e*e + 1 failed");
    if (expected != expected_dimension(model, e).l)
        throw PreconditionError("dual_class: postcondition e*e + 1 = l_e failed");
    return dual;
}

// Total count of singular points in an anti-canonical pencil, via the Euler
// number chi(CP^2 # k CP^2-bar) = k + 3; the anti-canonical pencil on the
// nine-point blowup carries 12 singular points.
inline int64_t pencil_singular_count(const SurfaceModel& model) {
    if (model.kind() != SurfaceKind::RationalBlowup)
        throw ModelError("pencil_singular_count is defined on rational blowups only");
    return checked_add(model.blowup_count(), 3);
}

struct InvariantReport {
    DivisorClass cls;
    int64_t self_intersection;
    int64_t k_pairing;
    int64_t j_genus;
    int64_t iota;
    int64_t l;
    int64_t sw_dim;
    int64_t adjunction;
};

inline InvariantReport invariant_report(const SurfaceModel& model, const DivisorClass& e) {
    InvariantReport r;
    r.cls = e;
    r.self_intersection = self_pair(model, e);
    r.k_pairing = pair(model, model.canonical_class(), e);
    r.j_genus = j_genus(model, e);
    ExpectedDimension d = expected_dimension(model, e);
    r.iota = d.iota;
    r.l = d.l;
    r.sw_dim = sw_dimension(model, e);
    r.adjunction = adjunction_number(model, e);
    return r;
}

}  // namespace curveclass
