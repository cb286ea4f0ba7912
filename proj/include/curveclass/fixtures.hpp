#pragma once

#include <string>
#include <vector>

#include "curveclass/config.hpp"
#include "curveclass/cremona.hpp"
#include "curveclass/enumerate.hpp"
#include "curveclass/expr.hpp"
#include "curveclass/invariants.hpp"

namespace curveclass {

struct FixtureCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct FixtureReport {
    std::vector<FixtureCheck> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

namespace detail {

inline void record(FixtureReport& report, const std::string& name, bool pass,
                   const std::string& detail = "") {
    report.checks.push_back({name, pass, detail});
}

}  // namespace detail

// Built-in worked examples: a connected subvariety with a genus-3 component
// in an exceptional class, its genus-1 companion, the exceptional class that
// reduces to a basis class, and the fiber-class decomposition arithmetic on
// ruled surfaces.
inline FixtureReport verify_fixtures() {
    FixtureReport report;

    {
        // (i) Connected genus-3 configuration in an exceptional class.
        SurfaceModel m = SurfaceModel::rational_blowup(11);
        DivisorClass e = parse_class(
            m, "8H - E1 - 4E2 - 4E3 - 4E4 - 2E5 - 2E6 - 2E7 - E8 - E9 - E10 - E11");
        DivisorClass c0 = parse_class(
            m, "4H - E1 - E2 - E3 - E4 - E5 - E6 - E7 - E8 - E9 - E10 - E11");
        DivisorClass c1 = parse_class(m, "H - E2 - E3 - E4");
        DivisorClass c2 = parse_class(m, "H - E5 - E6 - E7");

        detail::record(report, "connectedgenus3: E^2 = -1", self_pair(m, e) == -1);
        detail::record(report, "connectedgenus3: K.E = -1",
                       pair(m, m.canonical_class(), e) == -1);
        detail::record(report, "connectedgenus3: C0 + 3C1 + C2 = E",
                       c0 + 3 * c1 + c2 == e);
        detail::record(report, "connectedgenus3: g(C0) = 3", j_genus(m, c0) == 3);
        detail::record(report, "connectedgenus3: C0^2 = 5", self_pair(m, c0) == 5);
        detail::record(report, "connectedgenus3: K.C0 = -1",
                       pair(m, m.canonical_class(), c0) == -1);

        SubvarietyConfig config = make_config(m, {{c0, 1}, {c1, 3}, {c2, 1}});
        IntersectionGraph g = build_graph(m, config);
        detail::record(report, "connectedgenus3: triangle graph",
                       g.edge_count == 3 && g.connected,
                       "edges " + std::to_string(g.edge_count));
        detail::record(report, "connectedgenus3: first betti 1 (loop)", g.first_betti == 1);

        GenusBoundResult gb = genus_bound_check(m, e, config);
        detail::record(report, "connectedgenus3: genus bound fails with slack -3",
                       !gb.pass && gb.slack == -3, "slack " + std::to_string(gb.slack));
    }

    {
        // (ii) Genus-1 class with a genus-3 component.
        SurfaceModel m = SurfaceModel::rational_blowup(11);
        DivisorClass t = parse_class(
            m, "6H - E1 - 3E2 - 3E3 - 3E4 - E5 - E6 - E7 - E8 - E9 - E10 - E11");
        DivisorClass c0 = parse_class(
            m, "4H - E1 - E2 - E3 - E4 - E5 - E6 - E7 - E8 - E9 - E10 - E11");
        DivisorClass c1 = parse_class(m, "H - E2 - E3 - E4");
        detail::record(report, "genus1 example: g_J(T') = 1", j_genus(m, t) == 1);
        detail::record(report, "genus1 example: C0 + 2C1 = T'", c0 + 2 * c1 == t);
        SubvarietyConfig config = make_config(m, {{c0, 1}, {c1, 2}});
        detail::record(report, "genus1 example: connected with genus 3 > 1",
                       build_graph(m, config).connected && j_genus(m, c0) == 3);
    }

    {
        // (iii) The exceptional class 3H - E2 - E3 - 2E4 - E5 - ... - E8.
        SurfaceModel m = SurfaceModel::rational_blowup(8);
        DivisorClass e = parse_class(m, "3H - E2 - E3 - 2E4 - E5 - E6 - E7 - E8");
        detail::record(report, "T2comp class: E^2 = -1", self_pair(m, e) == -1);
        detail::record(report, "T2comp class: K.E = -1",
                       pair(m, m.canonical_class(), e) == -1);
        EquivalenceWitness w = cremona_equivalent(m, e, m.basis_class("E1"));
        detail::record(report, "T2comp class: Cremona equivalent to E1",
                       w.verdict == Equivalence::Yes, w.reason);
    }

    {
        // (iv) Fiber-class decompositions on a ruled surface: T = E_i + (T - E_i),
        // the inequality chain 0 = T^2 >= T.e > e^2, and tree graphs.
        SurfaceModel m = SurfaceModel::ruled_trivial_blowup(2, 3);
        DivisorClass t = m.basis_class("T");
        EnumerationResult exceptional = exceptional_classes(m);
        std::vector<SubvarietyConfig> decs =
            enumerate_decompositions(m, t, exceptional.classes, {true, true, 8});
        detail::record(report, "red-1: exactly k fiber decompositions",
                       decs.size() == 3, std::to_string(decs.size()) + " configs");
        bool chain_ok = true, trees_ok = true, dim_ok = true;
        for (const SubvarietyConfig& config : decs) {
            for (const ConfigComponent& c : config.components) {
                int64_t td = pair(m, t, c.cls);
                if (!(0 >= td && td > self_pair(m, c.cls))) chain_ok = false;
            }
            if (build_graph(m, config).first_betti != 0) trees_ok = false;
            DimensionBoundResult db = dimension_bound_check(m, t, config);
            if (!(db.pass && db.weighted_sum_l == 0 && db.l_target == 1)) dim_ok = false;
        }
        detail::record(report, "red-1: chain 0 = T^2 >= T.e > e^2", chain_ok);
        detail::record(report, "red-1: decomposition graphs are trees", trees_ok);
        detail::record(report, "red-1: sum m_i l_i = 0 = l_T - 1", dim_ok);
    }

    return report;
}

}  // namespace curveclass
