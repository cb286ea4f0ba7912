#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "curveclass/invariants.hpp"
#include "curveclass/surface.hpp"
#include "curveclass/sw.hpp"

namespace curveclass {

// Kneser bound: a class c on a ruled surface of base genus h that is carried
// by an irreducible curve satisfies 2 g_J(c) - 2 >= |c.T| (2h - 2).
inline int64_t kneser_lower_bound(const SurfaceModel& model, const DivisorClass& c) {
    if (!model.is_ruled()) throw ModelError("kneser_lower_bound expects a ruled model");
    int64_t degree = pair(model, c, model.basis_class("T"));
    return checked_mul(checked_abs(degree), 2 * model.base_genus() - 2);
}

// Closed-form data of the family [C] = aU + bT - sum c_i E_i with fixed
// fiber degree a <= -1. All three integers are independent of b and c_i.
struct FiberFamilyCheck {
    int64_t fiber_degree;     // a
    int64_t kneser_bound;     // |a| (2h - 2)
    int64_t wall_crossing;    // (1 - a)^h
    int64_t k_plus_c_pair_t;  // a - 2
};

// Evaluates the triple through the regular operations on a representative
// member aU + (ha)T, whose SW dimension 2a(ah - 1) is nonnegative so the
// wall-crossing formula applies.
inline FiberFamilyCheck evaluate_fiber_family(const SurfaceModel& model, int64_t a) {
    if (!model.is_ruled()) throw ModelError("evaluate_fiber_family expects a ruled model");
    if (a > -1) throw PreconditionError("fiber degree a must be <= -1");
    int64_t h = model.base_genus();
    std::vector<int64_t> coeffs(model.rank(), 0);
    coeffs[0] = a;
    coeffs[1] = checked_mul(h, a);
    DivisorClass rep{std::move(coeffs)};

    FiberFamilyCheck out;
    out.fiber_degree = a;
    out.kneser_bound = kneser_lower_bound(model, rep);
    out.wall_crossing = wall_crossing_number(model, -rep);
    out.k_plus_c_pair_t = pair(model, model.canonical_class() + rep, model.basis_class("T"));
    return out;
}

// Symbolic certificate that the fiber class T is nef: for every family
// aU + bT - sum c_i E_i with a <= -1,
//   - the Kneser bound |a|(2h-2) is >= 0, so dim_SW(-[C]) >= 0 for a curve,
//   - the wall-crossing number (1-a)^h is >= 2^h > 0,
//   - (K + [C]).T = a - 2 <= -3 < 0, killing SW(K + [C]) against T,
// which chains to SW(-[C]) != 0 and the vanishing combination
// 1*[C] + 1*(-[C]) = 0. The inequalities are linear in a, so checking value
// and slope at a = -1 certifies every a <= -1.
struct FiberNefCertificate {
    int64_t base_genus = 0;
    bool certified = false;
    std::string kneser_form;
    std::string wall_crossing_form;
    std::string pairing_form;
    int64_t tameness_b_coefficient = 1;
    int64_t tameness_pool_coefficient = 1;
};

inline FiberNefCertificate certify_fiber_nef(const SurfaceModel& model) {
    if (!model.is_ruled()) throw ModelError("certify_fiber_nef expects a ruled model");
    int64_t h = model.base_genus();
    FiberNefCertificate cert;
    cert.base_genus = h;
    cert.kneser_form = "|a|*(2h-2)";
    cert.wall_crossing_form = "(1-a)^h";
    cert.pairing_form = "a-2";

    // Value at the boundary a = -1 plus monotonicity in -a.
    FiberFamilyCheck boundary = evaluate_fiber_family(model, -1);
    bool kneser_ok = boundary.kneser_bound == 2 * h - 2 && 2 * h - 2 >= 0;
    bool wall_ok = boundary.wall_crossing == checked_pow(2, h) && boundary.wall_crossing > 0;
    bool pairing_ok = boundary.k_plus_c_pair_t == -3;
    // Slopes: d/d(-a) of |a|(2h-2) is 2h-2 >= 0, of (1-a) is 1 > 0, of a-2
    // is -1 < 0; all three conditions persist for a < -1.
    cert.certified = kneser_ok && wall_ok && pairing_ok && h >= 1;
    if (!cert.certified)
        throw InternalError("fiber nefness certificate failed its sign checks");
    return cert;
}

enum class ViolatorEvidence {
    AdjunctionExcluded,
    KneserExcluded,
    TamenessCertificate,
    Unresolved,
};

inline const char* evidence_name(ViolatorEvidence e) {
    switch (e) {
        case ViolatorEvidence::AdjunctionExcluded: return "adjunction_excluded";
        case ViolatorEvidence::KneserExcluded: return "kneser_excluded";
        case ViolatorEvidence::TamenessCertificate: return "tameness_certificate";
        case ViolatorEvidence::Unresolved: return "unresolved";
    }
    return "?";
}

struct Violator {
    DivisorClass cls;
    ViolatorEvidence evidence = ViolatorEvidence::Unresolved;
    // For TamenessCertificate: the vanishing combination with positive
    // coefficients, as (class, coefficient) terms.
    std::vector<std::pair<DivisorClass, int64_t>> combination;
    std::string note;
};

struct SearchBounds {
    int64_t coefficient_bound = 6;
    int64_t tameness_coefficient_bound = 8;
    std::size_t tameness_max_support = 3;
};

struct NefnessReport {
    DivisorClass target;
    std::vector<Violator> violators;
    SearchBounds bounds;
    bool pool_warning = false;  // unresolved candidates with an empty pool
    std::optional<FiberNefCertificate> fiber_certificate;
    std::size_t unresolved_count() const {
        std::size_t n = 0;
        for (const auto& v : violators)
            if (v.evidence == ViolatorEvidence::Unresolved) ++n;
        return n;
    }
};

// Obstruction search for the nefness of `a`: every class B with a.B < 0 in
// the coefficient box is a potential violator, and each is either excluded
// at class level (negative genus; Kneser on ruled models), certified not to
// be a curve class by a tameness combination, or left unresolved.
inline NefnessReport obstruction_search(const SurfaceModel& model, const DivisorClass& a,
                                        const std::vector<DivisorClass>& pool,
                                        SearchBounds bounds = {}) {
    require_rank(model, a);
    if (self_pair(model, a) < 0)
        throw PreconditionError("obstruction_search expects a target with a*a >= 0");
    if (bounds.coefficient_bound < 1) throw BoundError("coefficient bound must be >= 1");

    NefnessReport report;
    report.target = a;
    report.bounds = bounds;

    // The fiber class on a ruled model is certified symbolically; the box
    // search below cannot exhaust its infinitely many candidate families.
    if (model.is_ruled() && a == model.basis_class("T"))
        report.fiber_certificate = certify_fiber_nef(model);

    double box = 1;
    for (std::size_t i = 0; i < model.rank(); ++i) {
        box *= static_cast<double>(2 * bounds.coefficient_bound + 1);
        if (box > static_cast<double>(std::size_t{1} << 26))
            throw BoundError("candidate box exceeds 2^26 classes; lower the coefficient bound");
    }

    AxiomSet axioms;
    axioms.positive_curve_classes.push_back(a);
    for (const DivisorClass& p : pool)
        if (self_pair(model, p) >= 0) axioms.positive_curve_classes.push_back(p);
    axioms.known_nonzero = pool;

    std::vector<int64_t> digits(model.rank(), -bounds.coefficient_bound);
    for (;;) {
        DivisorClass b{digits};
        if (!b.is_zero() && pair(model, a, b) < 0) {
            Violator v;
            v.cls = b;
            int64_t genus = j_genus(model, b);
            int64_t adj = adjunction_number(model, b);
            // The Kneser bound constrains classes of nonzero fiber degree
            // only: a degree-zero class lies in fibers, where rational
            // components are perfectly possible.
            bool kneser_applies = model.is_ruled() &&
                                  pair(model, b, model.basis_class("T")) != 0;
            if (genus < 0) {
                v.evidence = ViolatorEvidence::AdjunctionExcluded;
                v.note = "g_J = " + std::to_string(genus);
            } else if (kneser_applies && adj < kneser_lower_bound(model, b)) {
                v.evidence = ViolatorEvidence::KneserExcluded;
                v.note = "adjunction " + std::to_string(adj) + " below Kneser bound " +
                         std::to_string(kneser_lower_bound(model, b));
            } else {
                // Wall-crossing chain: SW(K + B) killed by pairing, then
                // SW(-B) != 0, giving the combination B + (-B) = 0.
                bool chained = false;
                if (adj >= 0) {
                    std::vector<SWFact> facts = deduce(model, {-b}, axioms);
                    for (const SWFact& f : facts) {
                        if (f.cls == -b && f.status == SWStatus::NonZero) {
                            v.evidence = ViolatorEvidence::TamenessCertificate;
                            v.combination = {{b, 1}, {-b, 1}};
                            v.note = "SW(-B) != 0 by wall crossing";
                            chained = true;
                            break;
                        }
                    }
                }
                if (!chained) {
                    auto cert = tameness_contradiction(model, pool, b,
                                                       bounds.tameness_coefficient_bound,
                                                       bounds.tameness_max_support);
                    if (cert) {
                        v.evidence = ViolatorEvidence::TamenessCertificate;
                        v.combination.emplace_back(b, cert->b_coefficient);
                        for (const auto& [idx, coeff] : cert->pool_terms)
                            v.combination.emplace_back(pool[idx], coeff);
                        v.note = "vanishing combination over the pool";
                    } else {
                        v.evidence = ViolatorEvidence::Unresolved;
                    }
                }
            }
            report.violators.push_back(std::move(v));
        }
        std::size_t d = 0;
        while (d < digits.size() && ++digits[d] > bounds.coefficient_bound)
            digits[d++] = -bounds.coefficient_bound;
        if (d == digits.size()) break;
    }

    report.pool_warning = pool.empty() && report.unresolved_count() > 0;
    return report;
}

}  // namespace curveclass
