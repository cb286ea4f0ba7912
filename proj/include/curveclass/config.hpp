#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "curveclass/expr.hpp"
#include "curveclass/invariants.hpp"
#include "curveclass/surface.hpp"

namespace curveclass {

// A weighted list of pairwise-distinct divisor classes standing in for the
// components of a subvariety, with the weighted total cached.
struct ConfigComponent {
    DivisorClass cls;
    int64_t multiplicity = 1;
    int64_t genus = 0;  // g_J of the class
};

struct SubvarietyConfig {
    std::vector<ConfigComponent> components;
    DivisorClass total;
};

inline SubvarietyConfig make_config(const SurfaceModel& model,
                                    std::vector<std::pair<DivisorClass, int64_t>> parts) {
    SubvarietyConfig config;
    config.total = model.zero_class();
    for (auto& [cls, mult] : parts) {
        require_rank(model, cls);
        if (cls.is_zero())
            throw InvalidConfigurationError("the zero class cannot be a component");
        if (mult < 1)
            throw InvalidConfigurationError("component multiplicity must be >= 1");
        for (const ConfigComponent& existing : config.components)
            if (existing.cls == cls)
                throw InvalidConfigurationError("component classes must be pairwise distinct");
        config.total = config.total + mult * cls;
        config.components.push_back({cls, mult, j_genus(model, cls)});
    }
    return config;
}

// Intersection multigraph: one vertex per component, pair(e_i, e_j) parallel
// edges between distinct components. Homology pairings upper-bound and
// generically equal geometric intersection counts; that proxy is all that is
// computable at class level.
struct IntersectionGraph {
    std::size_t vertices = 0;
    // (i, j, multiplicity) for i < j with positive pairing.
    std::vector<std::tuple<std::size_t, std::size_t, int64_t>> edges;
    std::size_t graph_components = 0;
    bool connected = false;
    int64_t first_betti = 0;
    int64_t edge_count = 0;  // counted with multiplicity
};

inline IntersectionGraph build_graph(const SurfaceModel& model, const SubvarietyConfig& config) {
    IntersectionGraph g;
    g.vertices = config.components.size();

    std::vector<std::size_t> parent(g.vertices);
    for (std::size_t i = 0; i < g.vertices; ++i) parent[i] = i;
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };

    for (std::size_t i = 0; i < g.vertices; ++i) {
        for (std::size_t j = i + 1; j < g.vertices; ++j) {
            int64_t p = pair(model, config.components[i].cls, config.components[j].cls);
            if (p < 0)
                throw InvalidConfigurationError(
                    "distinct components '" + format_class(model, config.components[i].cls) +
                    "' and '" + format_class(model, config.components[j].cls) +
                    "' pair negatively; no subvariety carries this configuration");
            if (p > 0) {
                g.edges.emplace_back(i, j, p);
                g.edge_count = checked_add(g.edge_count, p);
                parent[find(i)] = find(j);
            }
        }
    }

    for (std::size_t i = 0; i < g.vertices; ++i)
        if (find(i) == i) ++g.graph_components;
    g.connected = g.vertices == 0 || g.graph_components == 1;
    // Multigraph identity b1 = E - V + C.
    g.first_betti = g.edge_count - static_cast<int64_t>(g.vertices) +
                    static_cast<int64_t>(g.graph_components);
    return g;
}

// Genus bound g_J(e) >= sum_i g_J(e_i) for a connected configuration.
struct GenusBoundResult {
    int64_t genus_target = 0;
    int64_t genus_sum = 0;
    int64_t slack = 0;  // genus_target - genus_sum
    bool pass = false;
};

inline GenusBoundResult genus_bound_check(const SurfaceModel& model, const DivisorClass& e,
                                          const SubvarietyConfig& config) {
    if (config.total != e)
        throw InvalidConfigurationError("configuration total does not match the target class");
    IntersectionGraph g = build_graph(model, config);
    if (!g.connected)
        throw InvalidConfigurationError(
            "genus bound is stated for connected configurations only");
    GenusBoundResult r;
    r.genus_target = j_genus(model, e);
    for (const ConfigComponent& c : config.components)
        r.genus_sum = checked_add(r.genus_sum, c.genus);
    r.slack = checked_sub(r.genus_target, r.genus_sum);
    r.pass = r.slack >= 0;
    return r;
}

// Dimension bound sum m_i l_{e_i} <= l_e - 1, with the per-component
// connectivity pairings e_i . (e - m_i e_i) reported alongside.
struct DimensionBoundResult {
    int64_t l_target = 0;
    int64_t sum_l = 0;
    int64_t weighted_sum_l = 0;
    bool pass = false;
    std::vector<int64_t> connectivity_pairings;
};

inline DimensionBoundResult dimension_bound_check(const SurfaceModel& model,
                                                  const DivisorClass& e,
                                                  const SubvarietyConfig& config) {
    if (config.total != e)
        throw InvalidConfigurationError("configuration total does not match the target class");
    DimensionBoundResult r;
    r.l_target = expected_dimension(model, e).l;
    for (const ConfigComponent& c : config.components) {
        int64_t l = expected_dimension(model, c.cls).l;
        r.sum_l = checked_add(r.sum_l, l);
        r.weighted_sum_l = checked_add(r.weighted_sum_l, checked_mul(c.multiplicity, l));
        r.connectivity_pairings.push_back(
            pair(model, c.cls, e - c.multiplicity * c.cls));
    }
    r.pass = r.weighted_sum_l <= r.l_target - 1;
    return r;
}

// For a configuration of -2 roots, -(sum m_i e_i)^2 = 2 sum m_i^2
// - 2 sum_{i<j} m_i m_j e_i.e_j is an even nonnegative-trace identity; both
// routes are computed and compared, and the common value returned.
struct RootParityResult {
    int64_t value = 0;           // -(total)^2
    int64_t via_expansion = 0;   // 2 sum m_i^2 - 2 sum m_i m_j e_i.e_j
    bool even = false;
};

inline RootParityResult parity_check_roots(const SurfaceModel& model,
                                           const SubvarietyConfig& config) {
    if (model.kind() != SurfaceKind::RationalBlowup)
        throw ModelError("parity_check_roots expects a rational blowup");
    for (const ConfigComponent& c : config.components) {
        if (self_pair(model, c.cls) != -2 ||
            pair(model, model.canonical_class(), c.cls) != 0)
            throw InvalidConfigurationError("component '" + format_class(model, c.cls) +
                                            "' is not a -2 root");
    }
    RootParityResult r;
    r.value = checked_neg(self_pair(model, config.total));
    int64_t expansion = 0;
    for (std::size_t i = 0; i < config.components.size(); ++i) {
        const auto& ci = config.components[i];
        expansion = checked_add(expansion, checked_mul(2, checked_mul(ci.multiplicity,
                                                                      ci.multiplicity)));
        for (std::size_t j = i + 1; j < config.components.size(); ++j) {
            const auto& cj = config.components[j];
            int64_t term = checked_mul(checked_mul(ci.multiplicity, cj.multiplicity),
                                       pair(model, ci.cls, cj.cls));
            expansion = checked_sub(expansion, checked_mul(2, term));
        }
    }
    r.via_expansion = expansion;
    if (r.value != r.via_expansion)
        throw InternalError("root parity expansion disagrees with the direct square");
    r.even = r.value % 2 == 0;
    return r;
}

// Positivity counting for prescribed weighted points: two distinct
// subvarieties in a genus-zero class e through common points of total
// weight d would intersect at least d times, so d < l_e is forced.
struct WeightedPointBound {
    int64_t l_target = 0;
    int64_t total_weight = 0;
    bool pass = false;  // total_weight < l_target
};

inline WeightedPointBound weighted_points_bound(const SurfaceModel& model, const DivisorClass& e,
                                                const std::vector<int64_t>& weights) {
    WeightedPointBound r;
    r.l_target = expected_dimension(model, e).l;
    for (int64_t d : weights) {
        if (d < 1) throw InvalidConfigurationError("point weights must be >= 1");
        r.total_weight = checked_add(r.total_weight, d);
    }
    r.pass = r.total_weight < r.l_target;
    return r;
}

// Arithmetic skeleton of the uniqueness argument for reducible subvarieties:
// after cancelling common components, the residual class e0 must satisfy
// e.e0 >= e0^2, strictly when a common component survived the cancellation.
struct ResidualIntersectionCheck {
    int64_t pairing = 0;      // e . e0
    int64_t self_square = 0;  // e0^2
    bool holds = false;       // pairing >= self_square
    bool holds_strictly = false;
};

inline ResidualIntersectionCheck residual_intersection_check(const SurfaceModel& model,
                                                             const DivisorClass& e,
                                                             const DivisorClass& residual) {
    ResidualIntersectionCheck r;
    r.pairing = pair(model, e, residual);
    r.self_square = self_pair(model, residual);
    r.holds = r.pairing >= r.self_square;
    r.holds_strictly = r.pairing > r.self_square;
    return r;
}

struct DecompositionConstraints {
    bool connected = false;
    bool all_rational = false;
    int64_t max_multiplicity = 8;
};

// All multisets sum m_i e_i = e with e_i drawn from the pool, multiplicities
// in 1..max_multiplicity, filtered by the constraints. Bounded knapsack over
// the canonically sorted pool with a per-coordinate reachability prune.
inline std::vector<SubvarietyConfig> enumerate_decompositions(
    const SurfaceModel& model, const DivisorClass& e, std::vector<DivisorClass> pool,
    DecompositionConstraints constraints = {}) {
    require_rank(model, e);
    if (constraints.max_multiplicity < 1)
        throw BoundError("max_multiplicity must be >= 1");
    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
    std::erase_if(pool, [](const DivisorClass& c) { return c.is_zero(); });

    std::size_t n = pool.size(), rank = model.rank();
    // suffix_lo/hi[i][d]: reachable range of coordinate d using pool[i..].
    std::vector<std::vector<int64_t>> lo(n + 1, std::vector<int64_t>(rank, 0));
    std::vector<std::vector<int64_t>> hi(n + 1, std::vector<int64_t>(rank, 0));
    for (std::size_t i = n; i-- > 0;) {
        for (std::size_t d = 0; d < rank; ++d) {
            int64_t c = checked_mul(constraints.max_multiplicity, pool[i][d]);
            lo[i][d] = checked_add(lo[i + 1][d], std::min<int64_t>(c, 0));
            hi[i][d] = checked_add(hi[i + 1][d], std::max<int64_t>(c, 0));
        }
    }

    std::vector<SubvarietyConfig> results;
    std::vector<std::pair<DivisorClass, int64_t>> chosen;

    auto emit = [&](const std::vector<std::pair<DivisorClass, int64_t>>& parts) {
        SubvarietyConfig config = make_config(model, parts);
        if (constraints.all_rational)
            for (const ConfigComponent& c : config.components)
                if (c.genus != 0) return;
        if (constraints.connected) {
            try {
                if (!build_graph(model, config).connected) return;
            } catch (const InvalidConfigurationError&) {
                return;  // negatively pairing distinct components
            }
        }
        results.push_back(std::move(config));
    };

    auto dfs = [&](auto&& self, std::size_t i, DivisorClass remaining) -> void {
        if (i == n) {
            // The empty multiset only ever decomposes the zero class.
            if (remaining.is_zero()) emit(chosen);
            return;
        }
        for (std::size_t d = 0; d < rank; ++d)
            if (remaining[d] < lo[i][d] || remaining[d] > hi[i][d]) return;
        // Skip pool[i].
        self(self, i + 1, remaining);
        DivisorClass rest = remaining;
        for (int64_t m = 1; m <= constraints.max_multiplicity; ++m) {
            rest = rest - pool[i];
            chosen.emplace_back(pool[i], m);
            self(self, i + 1, rest);
            chosen.pop_back();
        }
    };
    dfs(dfs, 0, e);

    std::sort(results.begin(), results.end(),
              [](const SubvarietyConfig& a, const SubvarietyConfig& b) {
                  if (a.components.size() != b.components.size())
                      return a.components.size() < b.components.size();
                  for (std::size_t i = 0; i < a.components.size(); ++i) {
                      if (a.components[i].cls != b.components[i].cls)
                          return a.components[i].cls < b.components[i].cls;
                      if (a.components[i].multiplicity != b.components[i].multiplicity)
                          return a.components[i].multiplicity < b.components[i].multiplicity;
                  }
                  return false;
              });
    return results;
}

}  // namespace curveclass
