#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "curveclass/errors.hpp"
#include "curveclass/expr.hpp"
#include "curveclass/surface.hpp"

namespace curveclass {

// Generators of the Weyl action on a rational blowup, realized as lattice
// automorphisms fixing K:
//   Reflect(i,j,k)  reflection in the root H - Ei - Ej - Ek
//   SwapE(i,j)      reflection in the root Ei - Ej (transposition)
// Indices are 1-based E-labels.
struct CremonaMove {
    enum class Kind { Reflect, SwapE };
    Kind kind;
    int64_t i = 0, j = 0, k = 0;

    static CremonaMove reflect(int64_t i, int64_t j, int64_t k) {
        return {Kind::Reflect, i, j, k};
    }
    static CremonaMove swap_e(int64_t i, int64_t j) { return {Kind::SwapE, i, j, 0}; }

    bool operator==(const CremonaMove& o) const {
        return kind == o.kind && i == o.i && j == o.j && k == o.k;
    }
};

namespace detail {

inline void check_move_indices(const SurfaceModel& model, const CremonaMove& move) {
    if (model.kind() != SurfaceKind::RationalBlowup)
        throw ModelError("Cremona moves act on rational blowups only");
    int64_t k = model.blowup_count();
    auto check = [&](int64_t idx) {
        if (idx < 1 || idx > k)
            throw PreconditionError("E-index " + std::to_string(idx) + " out of range 1.." +
                                    std::to_string(k));
    };
    check(move.i);
    check(move.j);
    if (move.kind == CremonaMove::Kind::Reflect) {
        check(move.k);
        if (move.i == move.j || move.i == move.k || move.j == move.k)
            throw PreconditionError("Reflect indices must be distinct");
    } else if (move.i == move.j) {
        throw PreconditionError("SwapE indices must be distinct");
    }
}

}  // namespace detail

namespace detail {

inline DivisorClass move_image(const DivisorClass& e, const CremonaMove& move) {
    std::vector<int64_t> c = e.coefficients();
    if (move.kind == CremonaMove::Kind::SwapE) {
        std::swap(c[static_cast<std::size_t>(move.i)], c[static_cast<std::size_t>(move.j)]);
    } else {
        std::size_t i = static_cast<std::size_t>(move.i);
        std::size_t j = static_cast<std::size_t>(move.j);
        std::size_t k = static_cast<std::size_t>(move.k);
        int64_t d = checked_add(checked_add(c[0], c[i]), checked_add(c[j], c[k]));
        c[0] = checked_add(c[0], d);
        c[i] = checked_sub(c[i], d);
        c[j] = checked_sub(c[j], d);
        c[k] = checked_sub(c[k], d);
    }
    return DivisorClass{std::move(c)};
}

}  // namespace detail

// Applies one move. Writing e = aH - sum b_m E_m, Reflect(i,j,k) sends
//   a -> 2a - b_i - b_j - b_k,   b_i -> a - b_j - b_k  (cyclically),
// which is e |-> e + (e.r) r for the root r = H - Ei - Ej - Ek. Both move
// kinds preserve the pairing and fix K; this is re-verified on every call.
inline DivisorClass apply_move(const SurfaceModel& model, const DivisorClass& e,
                               const CremonaMove& move) {
    detail::check_move_indices(model, move);
    require_rank(model, e);
    DivisorClass image = detail::move_image(e, move);
    if (self_pair(model, image) != self_pair(model, e) ||
        pair(model, model.canonical_class(), image) != pair(model, model.canonical_class(), e))
        throw InternalError("Cremona move failed to preserve the pairing");
    if (detail::move_image(model.canonical_class(), move) != model.canonical_class())
        throw InternalError("Cremona move failed to fix K");
    return image;
}

// Reduction of e = aH - sum b_i E_i: repeatedly sort the b_i descending
// (recording the transpositions) and reflect on the top three while
// b_1 + b_2 + b_3 > a. Every Reflect strictly decreases a. The reduced form
// satisfies b_1 + b_2 + b_3 <= a, or the surface has fewer than 3 blowups.
//
// For k <= 8 the Weyl group is finite, so the strictly decreasing degree
// ranges over a finite orbit and the loop always stops. From k = 9 on the
// group is infinite and classes outside the reducible cone escape with
// exponentially growing coefficients (already e.g. some square -800 classes
// on k = 11); that divergence surfaces as a bound_error.
struct ReductionTrace {
    DivisorClass input;
    std::vector<CremonaMove> moves;
    DivisorClass reduced;
    int64_t reflect_count = 0;
};

inline ReductionTrace cremona_reduce(const SurfaceModel& model, const DivisorClass& e) {
    if (model.kind() != SurfaceKind::RationalBlowup)
        throw ModelError("cremona_reduce acts on rational blowups only");
    require_rank(model, e);

    ReductionTrace trace;
    trace.input = e;
    std::vector<int64_t> c = e.coefficients();
    std::size_t k = static_cast<std::size_t>(model.blowup_count());

    // Descending b = ascending E-coefficients. Selection sort taking the
    // first occurrence of each minimum keeps ties in input order, so the
    // recorded trace is deterministic.
    auto sort_descending = [&]() {
        for (std::size_t pos = 1; pos + 1 <= k; ++pos) {
            std::size_t best = pos;
            for (std::size_t q = pos + 1; q <= k; ++q)
                if (c[q] < c[best]) best = q;
            if (best != pos) {
                std::swap(c[pos], c[best]);
                trace.moves.push_back(
                    CremonaMove::swap_e(static_cast<int64_t>(pos), static_cast<int64_t>(best)));
            }
        }
    };

    const int64_t divergence_cap = 1000;
    if (k >= 3) {
        try {
            for (int64_t steps = 0;; ++steps) {
                if (steps > divergence_cap)
                    throw BoundError(
                        "cremona_reduce did not stabilize within " +
                        std::to_string(divergence_cap) +
                        " reflections; the class has no reduced form (possible for k >= 9)");
                sort_descending();
                int64_t top = checked_add(checked_add(checked_neg(c[1]), checked_neg(c[2])),
                                          checked_neg(c[3]));
                if (top <= c[0]) break;
                CremonaMove move = CremonaMove::reflect(1, 2, 3);
                DivisorClass image = apply_move(model, DivisorClass{c}, move);
                c = image.coefficients();
                trace.moves.push_back(move);
                ++trace.reflect_count;
            }
        } catch (const ArithmeticError&) {
            // Escaping classes blow through the 64-bit range well before the
            // step cap; report them the same way.
            throw BoundError(
                "cremona_reduce coefficients left the 64-bit range; the class has no "
                "reduced form (possible for k >= 9)");
        }
    } else {
        sort_descending();
    }

    trace.reduced = DivisorClass{std::move(c)};
    return trace;
}

// Replays a trace's moves on its input; must reproduce `reduced` bit-exactly.
inline DivisorClass replay(const SurfaceModel& model, const ReductionTrace& trace) {
    DivisorClass e = trace.input;
    for (const CremonaMove& m : trace.moves) e = apply_move(model, e, m);
    return e;
}

// Weyl orbit of e under the simple generators (adjacent transpositions and
// the reflection in H - E1 - E2 - E3), computed by breadth-first closure.
// Raises OrbitBoundError with the partial size if the orbit exceeds the cap.
inline std::set<DivisorClass> weyl_orbit(const SurfaceModel& model, const DivisorClass& e,
                                         std::size_t size_bound) {
    if (model.kind() != SurfaceKind::RationalBlowup)
        throw ModelError("weyl_orbit acts on rational blowups only");
    if (size_bound == 0) throw BoundError("orbit size bound must be positive");
    require_rank(model, e);

    std::vector<CremonaMove> generators;
    int64_t k = model.blowup_count();
    for (int64_t i = 1; i < k; ++i) generators.push_back(CremonaMove::swap_e(i, i + 1));
    if (k >= 3) generators.push_back(CremonaMove::reflect(1, 2, 3));

    std::set<DivisorClass> orbit{e};
    std::vector<DivisorClass> frontier{e};
    while (!frontier.empty()) {
        std::vector<DivisorClass> next;
        for (const DivisorClass& x : frontier) {
            for (const CremonaMove& g : generators) {
                DivisorClass y = apply_move(model, x, g);
                if (orbit.insert(y).second) {
                    if (orbit.size() > size_bound)
                        throw OrbitBoundError("Weyl orbit exceeded size bound " +
                                                  std::to_string(size_bound),
                                              orbit.size());
                    next.push_back(std::move(y));
                }
            }
        }
        frontier = std::move(next);
    }
    return orbit;
}

// Equivalence test. Reduced forms agreeing up to an E-index permutation
// decide positively; differing numerical invariants decide negatively.
// Otherwise a bounded orbit search runs, and the verdict may remain
// Unknown if the orbit exceeds the bound.
enum class Equivalence { Yes, No, Unknown };

struct EquivalenceWitness {
    Equivalence verdict = Equivalence::Unknown;
    ReductionTrace trace_a;
    ReductionTrace trace_b;
    std::string reason;
};

inline EquivalenceWitness cremona_equivalent(const SurfaceModel& model, const DivisorClass& e1,
                                             const DivisorClass& e2,
                                             std::size_t orbit_bound = 100000) {
    EquivalenceWitness w;
    if (self_pair(model, e1) != self_pair(model, e2)) {
        w.verdict = Equivalence::No;
        w.reason = "self-intersections differ";
        return w;
    }
    if (pair(model, model.canonical_class(), e1) != pair(model, model.canonical_class(), e2)) {
        w.verdict = Equivalence::No;
        w.reason = "K-pairings differ";
        return w;
    }
    bool reduced_both = false;
    try {
        w.trace_a = cremona_reduce(model, e1);
        w.trace_b = cremona_reduce(model, e2);
        reduced_both = true;
    } catch (const BoundError&) {
        // At least one class has no reduced form; only the orbit search can
        // still decide.
    }

    auto permutation_normal = [&](const DivisorClass& e) {
        std::vector<int64_t> c = e.coefficients();
        std::sort(c.begin() + 1, c.end());
        return c;
    };
    if (reduced_both &&
        permutation_normal(w.trace_a.reduced) == permutation_normal(w.trace_b.reduced)) {
        w.verdict = Equivalence::Yes;
        w.reason = "reduced forms agree up to E-index permutation";
        return w;
    }

    // Reduced forms need not be unique; fall back to an orbit search.
    try {
        std::set<DivisorClass> orbit = weyl_orbit(model, e1, orbit_bound);
        w.verdict = orbit.count(e2) ? Equivalence::Yes : Equivalence::No;
        w.reason = w.verdict == Equivalence::Yes ? "orbit search found the class"
                                                 : "full orbit enumerated without the class";
    } catch (const OrbitBoundError&) {
        w.verdict = Equivalence::Unknown;
        w.reason = "unknown within orbit bound " + std::to_string(orbit_bound);
    } catch (const ArithmeticError&) {
        w.verdict = Equivalence::Unknown;
        w.reason = "orbit coefficients left the 64-bit range before the bound";
    }
    return w;
}

}  // namespace curveclass
