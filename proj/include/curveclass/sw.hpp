#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "curveclass/expr.hpp"
#include "curveclass/invariants.hpp"
#include "curveclass/surface.hpp"

namespace curveclass {

// Wall-crossing number for SW(K - e) vs SW(e), valid when dim_SW(e) >= 0:
// 1 on rational surfaces, |1 + e.T|^h on a ruled surface of base genus h.
// The ruled value can vanish (e.T = -1), which disables rule R3 below.
inline int64_t wall_crossing_number(const SurfaceModel& model, const DivisorClass& e) {
    if (sw_dimension(model, e) < 0)
        throw PreconditionError(
            "wall_crossing_number: dim_SW(e) < 0, the invariant is zero by definition and "
            "the formula does not apply");
    if (model.is_rational()) return 1;
    int64_t degree = pair(model, e, model.basis_class("T"));
    return checked_pow(checked_abs(checked_add(1, degree)), model.base_genus());
}

// Degree-b1 wall crossing: when dim_SW(e) >= b1 (b1 = 2h on ruled surfaces,
// 0 otherwise), the top-degree wall-crossing difference is 1 regardless of
// the scalar number above. Exposed as metadata only.
struct DegreeB1WallCross {
    bool applicable;
    int64_t b1;
    int64_t difference;  // 1 when applicable
};

inline DegreeB1WallCross degree_b1_wallcross(const SurfaceModel& model, const DivisorClass& e) {
    int64_t b1 = model.is_ruled() ? 2 * model.base_genus() : 0;
    bool ok = sw_dimension(model, e) >= b1;
    return {ok, b1, ok ? 1 : 0};
}

enum class SWStatus { NonZero, Zero, Unknown };

inline const char* status_name(SWStatus s) {
    switch (s) {
        case SWStatus::NonZero: return "nonzero";
        case SWStatus::Zero: return "zero";
        case SWStatus::Unknown: return "unknown";
    }
    return "?";
}

// One rule firing: which rule, about which class, from which premises, with
// the integers that made it fire.
struct RuleApplication {
    std::string rule;  // "R1".."R4"
    DivisorClass subject;
    SWStatus conclusion = SWStatus::Unknown;
    std::vector<DivisorClass> premises;
    std::vector<int64_t> numbers;
};

struct SWFact {
    DivisorClass cls;
    SWStatus status = SWStatus::Unknown;
    std::vector<RuleApplication> justification;  // in firing order, premises first
};

// Trusted inputs of the deduction:
//  - positive_curve_classes: classes known to carry an irreducible curve of
//    square >= 0 for some tamed structure (enables the pairing rule R2);
//  - known_nonzero: classes with known nonvanishing invariant (rule R4).
struct AxiomSet {
    std::vector<DivisorClass> positive_curve_classes;
    std::vector<DivisorClass> known_nonzero;
};

namespace detail {

struct DeduceState {
    std::map<DivisorClass, SWStatus> status;
    std::map<DivisorClass, RuleApplication> application;

    SWStatus get(const DivisorClass& e) const {
        auto it = status.find(e);
        return it == status.end() ? SWStatus::Unknown : it->second;
    }
};

inline std::string describe_application(const SurfaceModel& model, const RuleApplication& app) {
    std::string s = app.rule + " => SW(" + format_class(model, app.subject) +
                    ") = " + status_name(app.conclusion);
    for (const auto& p : app.premises) s += ", premise " + format_class(model, p);
    return s;
}

inline void set_status(const SurfaceModel& model, DeduceState& state, RuleApplication app) {
    SWStatus prev = state.get(app.subject);
    if (prev == app.conclusion) return;
    if (prev != SWStatus::Unknown) {
        throw ContradictionError(
            "contradictory deduction for class '" + format_class(model, app.subject) + "': " +
            describe_application(model, state.application.at(app.subject)) + " versus " +
            describe_application(model, app));
    }
    state.status[app.subject] = app.conclusion;
    state.application[app.subject] = std::move(app);
}

}  // namespace detail

// Forward-chains the four rules to a fixpoint over the targets, their
// wall-crossing partners K - e, and the axiom classes:
//   R1  dim_SW(e) < 0                                  => SW(e) = 0
//   R2  some positive curve class C with e.C < 0       => SW(e) = 0
//   R3  dim_SW(e) >= 0, wall crossing != 0, SW(K-e)=0  => SW(e) != 0
//   R4  e in known_nonzero                             => SW(e) != 0
// The rules are monotone, so the fixpoint does not depend on processing
// order. A class deduced both ways raises ContradictionError carrying both
// justifications.
inline std::vector<SWFact> deduce(const SurfaceModel& model,
                                  const std::vector<DivisorClass>& targets,
                                  const AxiomSet& axioms) {
    for (const DivisorClass& c : axioms.positive_curve_classes)
        if (self_pair(model, c) < 0)
            throw PreconditionError("positive_curve_classes entry '" + format_class(model, c) +
                                    "' has negative square");

    std::set<DivisorClass> universe;
    for (const DivisorClass& t : targets) {
        universe.insert(t);
        universe.insert(model.canonical_class() - t);
    }
    for (const DivisorClass& c : axioms.known_nonzero) universe.insert(c);

    detail::DeduceState state;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const DivisorClass& e : universe) {
            // Evaluate every applicable rule, not just the first, so that
            // inconsistent derivations surface as ContradictionError instead
            // of silently depending on rule order.
            std::vector<RuleApplication> fired;
            int64_t dim = sw_dimension(model, e);
            if (dim < 0) fired.push_back({"R1", e, SWStatus::Zero, {}, {dim}});
            for (const DivisorClass& c : axioms.positive_curve_classes) {
                int64_t p = pair(model, e, c);
                if (p < 0) {
                    fired.push_back({"R2", e, SWStatus::Zero, {c}, {p}});
                    break;
                }
            }
            DivisorClass partner = model.canonical_class() - e;
            if (dim >= 0 && state.get(partner) == SWStatus::Zero) {
                int64_t wc = wall_crossing_number(model, e);
                if (wc != 0)
                    fired.push_back({"R3", e, SWStatus::NonZero, {partner}, {dim, wc}});
            }
            for (const DivisorClass& c : axioms.known_nonzero)
                if (c == e) {
                    fired.push_back({"R4", e, SWStatus::NonZero, {}, {}});
                    break;
                }

            SWStatus before = state.get(e);
            for (RuleApplication& app : fired) detail::set_status(model, state, std::move(app));
            if (state.get(e) != before) changed = true;
        }
    }

    // Assemble facts with transitive justifications, premises first.
    std::vector<SWFact> facts;
    for (const DivisorClass& e : universe) {
        SWFact f;
        f.cls = e;
        f.status = state.get(e);
        std::vector<DivisorClass> stack{e};
        std::vector<RuleApplication> chain;
        std::set<DivisorClass> seen;
        while (!stack.empty()) {
            DivisorClass cur = stack.back();
            stack.pop_back();
            if (!seen.insert(cur).second) continue;
            auto it = state.application.find(cur);
            if (it == state.application.end()) continue;
            chain.push_back(it->second);
            for (const DivisorClass& p : it->second.premises) stack.push_back(p);
        }
        std::reverse(chain.begin(), chain.end());
        f.justification = std::move(chain);
        facts.push_back(std::move(f));
    }
    return facts;
}

// Re-runs one logged rule application against the fact store; the logged
// conclusion must reproduce.
inline bool replay_application(const SurfaceModel& model, const AxiomSet& axioms,
                               const std::map<DivisorClass, SWStatus>& statuses,
                               const RuleApplication& app) {
    if (app.rule == "R1")
        return sw_dimension(model, app.subject) < 0 && app.conclusion == SWStatus::Zero;
    if (app.rule == "R2")
        return app.premises.size() == 1 && pair(model, app.subject, app.premises[0]) < 0 &&
               app.conclusion == SWStatus::Zero;
    if (app.rule == "R3") {
        if (app.premises.size() != 1 || app.conclusion != SWStatus::NonZero) return false;
        auto it = statuses.find(app.premises[0]);
        if (it == statuses.end() || it->second != SWStatus::Zero) return false;
        return sw_dimension(model, app.subject) >= 0 &&
               wall_crossing_number(model, app.subject) != 0;
    }
    if (app.rule == "R4")
        return std::find(axioms.known_nonzero.begin(), axioms.known_nonzero.end(), app.subject) !=
                   axioms.known_nonzero.end() &&
               app.conclusion == SWStatus::NonZero;
    return false;
}

// An exact vanishing combination a0*B + sum a_i*C_i = 0 with positive
// integer coefficients on its support: the certificate that B cannot be a
// curve class while the C_i carry subvarieties under a tamed structure.
struct TamenessCertificate {
    int64_t b_coefficient = 0;
    std::vector<std::pair<std::size_t, int64_t>> pool_terms;  // (pool index, coefficient)

    bool replay(const DivisorClass& b, const std::vector<DivisorClass>& pool) const {
        if (b_coefficient <= 0) return false;
        DivisorClass sum = b_coefficient * b;
        for (const auto& [idx, coeff] : pool_terms) {
            if (coeff <= 0 || idx >= pool.size()) return false;
            sum = sum + coeff * pool[idx];
        }
        return sum.is_zero();
    }
};

namespace detail {

// Advances a k-combination of {0, ..., n-1} in lexicographic order.
inline bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
        if (idx[i] + (k - i) < n) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace detail

// Bounded search for a tameness certificate. Support subsets are scanned in
// ascending size and lexicographic index order, coefficients by odometer up
// to `coefficient_bound`, so the first match is deterministic.
inline std::optional<TamenessCertificate> tameness_contradiction(
    const SurfaceModel& model, const std::vector<DivisorClass>& nonzero_pool,
    const DivisorClass& candidate_b, int64_t coefficient_bound = 8,
    std::size_t max_support = 3) {
    require_rank(model, candidate_b);
    if (coefficient_bound < 1) throw BoundError("coefficient bound must be >= 1");

    auto try_subset = [&](const std::vector<std::size_t>& idx)
        -> std::optional<TamenessCertificate> {
        std::vector<int64_t> a(idx.size(), 1);
        for (;;) {
            DivisorClass partial = DivisorClass::zero(candidate_b.rank());
            for (std::size_t i = 0; i < idx.size(); ++i)
                partial = partial + a[i] * nonzero_pool[idx[i]];
            for (int64_t a0 = 1; a0 <= coefficient_bound; ++a0) {
                if ((a0 * candidate_b + partial).is_zero()) {
                    TamenessCertificate cert;
                    cert.b_coefficient = a0;
                    for (std::size_t i = 0; i < idx.size(); ++i)
                        cert.pool_terms.emplace_back(idx[i], a[i]);
                    return cert;
                }
            }
            std::size_t d = 0;
            while (d < a.size() && ++a[d] > coefficient_bound) a[d++] = 1;
            if (d == a.size()) return std::nullopt;
        }
    };

    for (std::size_t support = 1; support <= std::min(max_support, nonzero_pool.size());
         ++support) {
        std::vector<std::size_t> idx(support);
        for (std::size_t i = 0; i < support; ++i) idx[i] = i;
        do {
            if (auto cert = try_subset(idx)) return cert;
        } while (detail::next_combination(idx, nonzero_pool.size()));
    }
    return std::nullopt;
}

}  // namespace curveclass
