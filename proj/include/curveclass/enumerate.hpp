#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "curveclass/errors.hpp"
#include "curveclass/invariants.hpp"
#include "curveclass/surface.hpp"

namespace curveclass {

enum class ClassFamily {
    Exceptional,
    MinusTwoSphere,
    RuledNegativeRational,
    SphericalCanonicalForm,
};

inline const char* family_name(ClassFamily f) {
    switch (f) {
        case ClassFamily::Exceptional: return "exceptional";
        case ClassFamily::MinusTwoSphere: return "minus_two_sphere";
        case ClassFamily::RuledNegativeRational: return "ruled_negative_rational";
        case ClassFamily::SphericalCanonicalForm: return "spherical_canonical_form";
    }
    return "?";
}

struct EnumerationResult {
    ClassFamily family;
    std::vector<DivisorClass> classes;  // canonically sorted, pairwise distinct
    bool complete = false;              // provably finite and fully enumerated
    std::optional<int64_t> bound_used;
};

namespace detail {

inline int64_t isqrt(int64_t n) {
    if (n < 0) return -1;
    int64_t r = static_cast<int64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

// All non-increasing integer vectors of given length with prescribed sum and
// sum of squares. The Cauchy-Schwarz cutoff (S - v)^2 <= (r - 1)(Q - v^2)
// prunes infeasible tails; values may be negative.
inline void multisets_with_sum_and_square(int64_t length, int64_t sum, int64_t square_sum,
                                          std::vector<int64_t>& stack,
                                          std::vector<std::vector<int64_t>>& out) {
    if (length == 0) {
        if (sum == 0 && square_sum == 0) out.push_back(stack);
        return;
    }
    if (square_sum < 0) return;
    int64_t cap = isqrt(square_sum);
    int64_t hi = stack.empty() ? cap : std::min<int64_t>(cap, stack.back());
    // Remaining values are all <= v, hence sum <= length * v.
    int64_t lo = -cap;
    for (int64_t v = hi; v >= lo; --v) {
        if (checked_mul(length, v) < sum) break;  // even length copies of v fall short
        int64_t rest_sum = checked_sub(sum, v);
        int64_t rest_sq = checked_sub(square_sum, checked_mul(v, v));
        if (rest_sq < 0) continue;
        if (length > 1) {
            // Cauchy-Schwarz feasibility of the remaining tail.
            if (checked_mul(rest_sum, rest_sum) > checked_mul(length - 1, rest_sq)) continue;
        } else if (rest_sum != 0 || rest_sq != 0) {
            continue;
        }
        stack.push_back(v);
        multisets_with_sum_and_square(length - 1, rest_sum, rest_sq, stack, out);
        stack.pop_back();
    }
}

// Solutions of the rational-blowup system  a^2 - sum b_i^2 = square,
// -3a + sum b_i = k_pairing  for one fixed a, emitted as coefficient vectors
// (a; -b_1, ..., -b_k) over all distinct permutations of each multiset.
inline void rational_blowup_solutions(const SurfaceModel& model, int64_t a, int64_t square,
                                      int64_t k_pairing, std::vector<DivisorClass>& out) {
    int64_t k = model.blowup_count();
    int64_t target_sum = checked_add(checked_mul(3, a), k_pairing);
    int64_t target_sq = checked_sub(checked_mul(a, a), square);
    if (target_sq < 0) return;
    if (k == 0) {
        if (target_sum == 0 && target_sq == 0)
            out.push_back(DivisorClass(std::vector<int64_t>{a}));
        return;
    }
    std::vector<std::vector<int64_t>> multisets;
    std::vector<int64_t> stack;
    multisets_with_sum_and_square(k, target_sum, target_sq, stack, multisets);
    for (auto& b : multisets) {
        std::sort(b.begin(), b.end());
        do {
            std::vector<int64_t> coeffs;
            coeffs.reserve(1 + k);
            coeffs.push_back(a);
            for (int64_t bi : b) coeffs.push_back(checked_neg(bi));
            out.push_back(DivisorClass(std::move(coeffs)));
        } while (std::next_permutation(b.begin(), b.end()));
    }
}

// Runs fn(a) over the given degree values, optionally split across workers.
// Each worker owns a deterministic slice; results are merged in slice order
// and sorted afterwards, so the output is schedule-independent.
inline std::vector<DivisorClass> scan_degrees(const std::vector<int64_t>& degrees, int workers,
                                              const SurfaceModel& model, int64_t square,
                                              int64_t k_pairing) {
    if (workers < 1) workers = 1;
    std::vector<std::vector<DivisorClass>> buckets(static_cast<std::size_t>(workers));
    auto run = [&](int w) {
        for (std::size_t i = static_cast<std::size_t>(w); i < degrees.size();
             i += static_cast<std::size_t>(workers))
            rational_blowup_solutions(model, degrees[i], square, k_pairing, buckets[w]);
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& t : pool) t.join();
    }
    std::vector<DivisorClass> all;
    for (auto& b : buckets) all.insert(all.end(), b.begin(), b.end());
    std::sort(all.begin(), all.end());
    return all;
}

inline void verify_family(const SurfaceModel& model, const std::vector<DivisorClass>& classes,
                          int64_t square, int64_t k_pairing) {
    for (std::size_t i = 0; i < classes.size(); ++i) {
        if (i > 0 && !(classes[i - 1] < classes[i]))
            throw InternalError("enumerated family is not strictly sorted");
        if (self_pair(model, classes[i]) != square ||
            pair(model, model.canonical_class(), classes[i]) != k_pairing)
            throw InternalError("enumerated class fails its defining equations");
    }
}

}  // namespace detail

// All classes with e*e = K*e = -1. On a rational blowup with k <= 8 the
// family is finite and fully enumerated ((3a - 1)^2 <= k(a^2 + 1) bounds the
// degree); k >= 9 requires an explicit bound on the H-coefficient. On ruled
// models the search runs in the U-degree-zero sublattice, where it is finite.
inline EnumerationResult exceptional_classes(const SurfaceModel& model,
                                             std::optional<int64_t> degree_bound = std::nullopt,
                                             int workers = 1) {
    EnumerationResult result;
    result.family = ClassFamily::Exceptional;
    result.bound_used = degree_bound;

    switch (model.kind()) {
        case SurfaceKind::RationalBlowup: {
            int64_t k = model.blowup_count();
            std::vector<int64_t> degrees;
            if (k <= 8) {
                // Feasibility interval of (3a-1)^2 <= k(a^2+1) lies inside [-2, 8].
                for (int64_t a = -2; a <= 8; ++a)
                    if (checked_mul(3 * a - 1, 3 * a - 1) <= checked_mul(k, a * a + 1))
                        degrees.push_back(a);
                result.complete = true;
            } else {
                if (!degree_bound)
                    throw BoundError(
                        "exceptional classes form an infinite family for k >= 9 "
                        "(the E8 bound); pass a degree bound on the H-coefficient");
                for (int64_t a = -*degree_bound; a <= *degree_bound; ++a)
                    if (checked_mul(3 * a - 1, 3 * a - 1) <= checked_mul(k, a * a + 1))
                        degrees.push_back(a);
                result.complete = false;
            }
            result.classes = detail::scan_degrees(degrees, workers, model, -1, -1);
            break;
        }
        case SurfaceKind::SphereProduct:
            // e*e = 2xy is even, never -1.
            result.complete = true;
            break;
        case SurfaceKind::RuledTrivialBlowup: {
            // U-degree 0: e = bT + sum c_i E_i with -sum c_i^2 = -1 forces a
            // single c_j = +-1, and K*e = -2b - sum c_i = -1 pins b.
            int64_t k = model.blowup_count();
            for (int64_t j = 0; j < k; ++j) {
                for (int64_t s : {1, -1}) {
                    int64_t b2 = checked_sub(1, s);  // -2b - s = -1
                    if (b2 % 2 != 0) continue;
                    std::vector<int64_t> coeffs(model.rank(), 0);
                    coeffs[1] = b2 / 2;
                    coeffs[2 + static_cast<std::size_t>(j)] = s;
                    result.classes.push_back(DivisorClass(std::move(coeffs)));
                }
            }
            std::sort(result.classes.begin(), result.classes.end());
            result.complete = true;
            break;
        }
        case SurfaceKind::RuledNontrivial:
            // U-degree 0 classes bT have square 0, never -1.
            result.complete = true;
            break;
    }
    detail::verify_family(model, result.classes, -1, -1);
    return result;
}

// The 240 classes with r*r = -2 and K*r = 0 on the eight-point blowup: the
// E8 root system.
inline EnumerationResult minus_two_sphere_classes(const SurfaceModel& model, int workers = 1) {
    if (model.kind() != SurfaceKind::RationalBlowup || model.blowup_count() != 8)
        throw ModelError("minus_two_sphere_classes expects the rational blowup with k = 8");
    EnumerationResult result;
    result.family = ClassFamily::MinusTwoSphere;
    std::vector<int64_t> degrees;
    for (int64_t a = -4; a <= 4; ++a)
        if (checked_mul(9, a * a) <= checked_mul(8, a * a + 2)) degrees.push_back(a);
    result.classes = detail::scan_degrees(degrees, workers, model, -2, 0);
    result.complete = true;
    detail::verify_family(model, result.classes, -2, 0);
    if (result.classes.size() != 240)
        throw InternalError("root enumeration produced " + std::to_string(result.classes.size()) +
                            " classes instead of 240");
    return result;
}

// Classes bT + sum c_i E_i (U-degree zero) with g_J = 0 and negative square,
// enumerated over |b|, |c_i| <= bound. As a side check, the classes in the
// same box with square >= 0 and g_J = 0 must be exactly {T}.
inline EnumerationResult ruled_negative_rational_classes(const SurfaceModel& model, int64_t bound) {
    if (!model.is_ruled())
        throw ModelError("ruled_negative_rational_classes expects a ruled model");
    if (bound < 1) throw BoundError("bound must be at least 1");

    int64_t k = model.kind() == SurfaceKind::RuledTrivialBlowup ? model.blowup_count() : 0;
    double box = 1;
    for (int64_t i = 0; i < k + 1; ++i) box *= static_cast<double>(2 * bound + 1);
    if (box > static_cast<double>(std::size_t{1} << 26))
        throw BoundError("search box too large; lower the bound");

    EnumerationResult result;
    result.family = ClassFamily::RuledNegativeRational;
    result.bound_used = bound;
    result.complete = false;

    std::vector<DivisorClass> nonnegative;
    std::vector<int64_t> coeffs(model.rank(), 0);
    // Odometer over (b, c_1, ..., c_k).
    std::vector<int64_t> digits(static_cast<std::size_t>(k) + 1, -bound);
    for (;;) {
        coeffs[1] = digits[0];
        for (int64_t i = 0; i < k; ++i) coeffs[2 + static_cast<std::size_t>(i)] = digits[static_cast<std::size_t>(i) + 1];
        DivisorClass e{coeffs};
        if (!e.is_zero() && adjunction_number(model, e) == -2) {
            if (self_pair(model, e) < 0)
                result.classes.push_back(e);
            else
                nonnegative.push_back(e);
        }
        std::size_t d = 0;
        while (d < digits.size() && ++digits[d] > bound) digits[d++] = -bound;
        if (d == digits.size()) break;
    }
    std::sort(result.classes.begin(), result.classes.end());

    if (nonnegative.size() != 1 || nonnegative[0] != model.basis_class("T"))
        throw InternalError(
            "rational classes of nonnegative square in the fiber-degree-zero sublattice "
            "must be exactly {T}");
    return result;
}

// The canonical-form list for spherical classes of nonnegative square up to
// Cremona equivalence: H - E1, 2H, H, (n+1)H - nE1 and (n+1)H - nE1 - E2.
struct SphericalForm {
    std::string name;
    bool parametric;
    int64_t h_coeff;   // H-coefficient for n = parameter (coefficient of n plus constant below)
    int64_t h_const;   // H-coefficient = h_coeff * n + h_const
    int64_t e1_coeff;  // E1-coefficient = e1_coeff * n + e1_const
    int64_t e1_const;
    int64_t e2_const;  // E2-coefficient (constant)

    DivisorClass instantiate(const SurfaceModel& model, int64_t n = 1) const {
        if (model.kind() != SurfaceKind::RationalBlowup)
            throw ModelError("spherical canonical forms live on rational blowups");
        if (parametric && n < 1) throw BoundError("template parameter n must be >= 1");
        int64_t need = e2_const != 0 ? 2 : (e1_coeff != 0 || e1_const != 0 ? 1 : 0);
        if (model.blowup_count() < need)
            throw ModelError("model has too few exceptional classes for template " + name);
        std::vector<int64_t> coeffs(model.rank(), 0);
        int64_t m = parametric ? n : 0;
        coeffs[0] = checked_add(checked_mul(h_coeff, m), h_const);
        if (need >= 1) coeffs[1] = checked_add(checked_mul(e1_coeff, m), e1_const);
        if (need >= 2) coeffs[2] = e2_const;
        return DivisorClass(std::move(coeffs));
    }
};

inline std::vector<SphericalForm> spherical_canonical_forms() {
    return {
        {"H - E1", false, 0, 1, 0, -1, 0},
        {"2H", false, 0, 2, 0, 0, 0},
        {"H", false, 0, 1, 0, 0, 0},
        {"(n+1)H - nE1", true, 1, 1, -1, 0, 0},
        {"(n+1)H - nE1 - E2", true, 1, 1, -1, 0, -1},
    };
}

}  // namespace curveclass
