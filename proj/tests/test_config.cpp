#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "curveclass/config.hpp"
#include "curveclass/enumerate.hpp"
#include "curveclass/expr.hpp"
#include "curveclass/fixtures.hpp"

using namespace curveclass;

TEST_CASE("config construction validates inputs") {
    SurfaceModel m = SurfaceModel::rational_blowup(3);
    SubvarietyConfig c =
        make_config(m, {{parse_class(m, "E1"), 2}, {parse_class(m, "H - E1 - E2"), 1}});
    CHECK(c.total == parse_class(m, "H + E1 - E2"));
    CHECK(c.components[0].genus == 0);

    CHECK_THROWS_AS(make_config(m, {{parse_class(m, "E1"), 0}}), InvalidConfigurationError);
    CHECK_THROWS_AS(make_config(m, {{parse_class(m, "E1"), 1}, {parse_class(m, "E1"), 2}}),
                    InvalidConfigurationError);
    CHECK_THROWS_AS(make_config(m, {{m.zero_class(), 1}}), InvalidConfigurationError);
}

TEST_CASE("zero classes are dropped from decomposition pools") {
    SurfaceModel m = SurfaceModel::rational_blowup(2);
    auto decs = enumerate_decompositions(m, parse_class(m, "E1"),
                                         {m.zero_class(), parse_class(m, "E1")});
    REQUIRE(decs.size() == 1);
    CHECK(decs[0].components.size() == 1);
}

TEST_CASE("intersection graph fixtures") {
    // Triangle with a loop.
    SurfaceModel m = SurfaceModel::rational_blowup(11);
    DivisorClass c0 =
        parse_class(m, "4H - E1 - E2 - E3 - E4 - E5 - E6 - E7 - E8 - E9 - E10 - E11");
    DivisorClass c1 = parse_class(m, "H - E2 - E3 - E4");
    DivisorClass c2 = parse_class(m, "H - E5 - E6 - E7");
    CHECK(pair(m, c0, c1) == 1);
    CHECK(pair(m, c0, c2) == 1);
    CHECK(pair(m, c1, c2) == 1);
    IntersectionGraph g = build_graph(m, make_config(m, {{c0, 1}, {c1, 3}, {c2, 1}}));
    CHECK(g.vertices == 3);
    CHECK(g.edge_count == 3);
    CHECK(g.connected);
    CHECK(g.first_betti == 1);

    // Fiber decomposition: one edge, no cycle.
    SurfaceModel ruled = SurfaceModel::ruled_trivial_blowup(1, 2);
    IntersectionGraph g2 = build_graph(
        ruled, make_config(ruled, {{parse_class(ruled, "E1"), 1},
                                   {parse_class(ruled, "T - E1"), 1}}));
    CHECK(g2.edge_count == 1);
    CHECK(g2.connected);
    CHECK(g2.first_betti == 0);

    // Single component.
    IntersectionGraph g3 = build_graph(ruled, make_config(ruled, {{parse_class(ruled, "T"), 1}}));
    CHECK(g3.connected);
    CHECK(g3.first_betti == 0);

    // Negative pairing between distinct classes is rejected.
    SurfaceModel rb2 = SurfaceModel::rational_blowup(2);
    CHECK_THROWS_AS(build_graph(rb2, make_config(rb2, {{parse_class(rb2, "E1"), 1},
                                                       {parse_class(rb2, "2E1"), 1}})),
                    InvalidConfigurationError);
}

TEST_CASE("genus bound check") {
    SurfaceModel m = SurfaceModel::rational_blowup(11);
    DivisorClass e = parse_class(
        m, "8H - E1 - 4E2 - 4E3 - 4E4 - 2E5 - 2E6 - 2E7 - E8 - E9 - E10 - E11");
    DivisorClass c0 =
        parse_class(m, "4H - E1 - E2 - E3 - E4 - E5 - E6 - E7 - E8 - E9 - E10 - E11");
    DivisorClass c1 = parse_class(m, "H - E2 - E3 - E4");
    DivisorClass c2 = parse_class(m, "H - E5 - E6 - E7");
    GenusBoundResult r = genus_bound_check(m, e, make_config(m, {{c0, 1}, {c1, 3}, {c2, 1}}));
    CHECK(!r.pass);
    CHECK(r.genus_target == 0);
    CHECK(r.genus_sum == 3);
    CHECK(r.slack == -3);

    SurfaceModel ruled = SurfaceModel::ruled_trivial_blowup(2, 1);
    GenusBoundResult r2 = genus_bound_check(
        ruled, ruled.basis_class("T"),
        make_config(ruled, {{parse_class(ruled, "E1"), 1}, {parse_class(ruled, "T - E1"), 1}}));
    CHECK(r2.pass);
    CHECK(r2.slack == 0);

    // -K on the 8-point blowup versus an all-rational configuration.
    SurfaceModel rb8 = SurfaceModel::rational_blowup(8);
    DivisorClass anti_k = -rb8.canonical_class();
    SubvarietyConfig conf = make_config(
        rb8, {{parse_class(rb8, "H - E1"), 1},
              {parse_class(rb8, "2H - E2 - E3 - E4 - E5 - E6 - E7 - E8"), 1}});
    GenusBoundResult r3 = genus_bound_check(rb8, anti_k, conf);
    CHECK(r3.pass);
    CHECK(r3.slack == 1);

    // Mismatched total and disconnected configs are rejected.
    CHECK_THROWS_AS(genus_bound_check(rb8, rb8.basis_class("H"), conf),
                    InvalidConfigurationError);
    SubvarietyConfig disconnected =
        make_config(rb8, {{parse_class(rb8, "E1"), 1}, {parse_class(rb8, "E2"), 1}});
    CHECK_THROWS_AS(genus_bound_check(rb8, parse_class(rb8, "E1 + E2"), disconnected),
                    InvalidConfigurationError);
}

TEST_CASE("dimension bound check") {
    SurfaceModel ruled = SurfaceModel::ruled_trivial_blowup(2, 1);
    DivisorClass t = ruled.basis_class("T");
    SubvarietyConfig conf = make_config(
        ruled, {{parse_class(ruled, "E1"), 1}, {parse_class(ruled, "T - E1"), 1}});
    DimensionBoundResult r = dimension_bound_check(ruled, t, conf);
    CHECK(r.pass);
    CHECK(r.l_target == 1);
    CHECK(r.sum_l == 0);
    CHECK(r.weighted_sum_l == 0);

    // The (1 > 0 + 0) arithmetic: a square-0 genus-0 component with m = 1 in
    // -K has l = 1 and connectivity pairing 2, so the bound fails.
    SurfaceModel rb8 = SurfaceModel::rational_blowup(8);
    DivisorClass anti_k = -rb8.canonical_class();
    DivisorClass e1cls = parse_class(rb8, "H - E1");
    DivisorClass rest = parse_class(rb8, "2H - E2 - E3 - E4 - E5 - E6 - E7 - E8");
    DimensionBoundResult r2 =
        dimension_bound_check(rb8, anti_k, make_config(rb8, {{e1cls, 1}, {rest, 1}}));
    CHECK(!r2.pass);
    CHECK(r2.l_target == 1);
    CHECK(r2.weighted_sum_l == 1);
    REQUIRE(r2.connectivity_pairings.size() == 2);
    CHECK(r2.connectivity_pairings[0] == 2);  // e_1 . (e - e_1) = 2

    // l_e = 0 forces failure for any nonempty configuration.
    SurfaceModel rb2 = SurfaceModel::rational_blowup(2);
    DivisorClass e1 = parse_class(rb2, "E1");
    DimensionBoundResult r3 = dimension_bound_check(rb2, e1, make_config(rb2, {{e1, 1}}));
    CHECK(!r3.pass);
}

TEST_CASE("root parity check") {
    SurfaceModel m = SurfaceModel::rational_blowup(8);
    RootParityResult r =
        parity_check_roots(m, make_config(m, {{parse_class(m, "E1 - E2"), 1}}));
    CHECK(r.value == 2);
    CHECK(r.even);

    r = parity_check_roots(m, make_config(m, {{parse_class(m, "E1 - E2"), 1},
                                              {parse_class(m, "E2 - E3"), 1}}));
    CHECK(r.value == 2);
    CHECK(r.via_expansion == 2);
    CHECK(r.even);

    r = parity_check_roots(m, make_config(m, {{parse_class(m, "H - E1 - E2 - E3"), 2}}));
    CHECK(r.value == 8);
    CHECK(r.even);

    CHECK_THROWS_AS(parity_check_roots(m, make_config(m, {{parse_class(m, "E1"), 1}})),
                    InvalidConfigurationError);
}

TEST_CASE("root parity property over seeded random root configurations") {
    SurfaceModel m = SurfaceModel::rational_blowup(8);
    EnumerationResult roots = minus_two_sphere_classes(m);
    std::mt19937 rng(616);
    for (int t = 0; t < 1000; ++t) {
        std::size_t n = 1 + rng() % 4;
        std::vector<std::pair<DivisorClass, int64_t>> parts;
        std::set<std::size_t> used;
        while (parts.size() < n) {
            std::size_t i = rng() % roots.classes.size();
            if (!used.insert(i).second) continue;
            parts.emplace_back(roots.classes[i], 1 + static_cast<int64_t>(rng() % 4));
        }
        RootParityResult r = parity_check_roots(m, make_config(m, parts));
        CHECK(r.even);
        CHECK(r.value == r.via_expansion);
    }
}

TEST_CASE("decomposition enumeration: fiber class") {
    for (int64_t h : {1, 2}) {
        SurfaceModel m = SurfaceModel::ruled_trivial_blowup(h, 4);
        DivisorClass t = m.basis_class("T");
        std::vector<DivisorClass> pool = exceptional_classes(m).classes;
        auto decs = enumerate_decompositions(m, t, pool);
        REQUIRE(decs.size() == 4);
        for (const auto& config : decs) {
            REQUIRE(config.components.size() == 2);
            CHECK(config.total == t);
            CHECK(config.components[0].multiplicity == 1);
            CHECK(config.components[1].multiplicity == 1);
        }
    }
}

TEST_CASE("decomposition enumeration: connectedgenus3 pool") {
    SurfaceModel m = SurfaceModel::rational_blowup(11);
    DivisorClass e = parse_class(
        m, "8H - E1 - 4E2 - 4E3 - 4E4 - 2E5 - 2E6 - 2E7 - E8 - E9 - E10 - E11");
    std::vector<DivisorClass> pool = {
        parse_class(m, "4H - E1 - E2 - E3 - E4 - E5 - E6 - E7 - E8 - E9 - E10 - E11"),
        parse_class(m, "H - E2 - E3 - E4"), parse_class(m, "H - E5 - E6 - E7")};
    auto decs = enumerate_decompositions(m, e, pool);
    REQUIRE(decs.size() == 1);
    REQUIRE(decs[0].components.size() == 3);
    // Sorted canonically; multiplicities are 1, 3, 1 in pool order.
    for (const auto& c : decs[0].components) {
        if (c.cls == pool[1])
            CHECK(c.multiplicity == 3);
        else
            CHECK(c.multiplicity == 1);
    }
}

TEST_CASE("decomposition enumeration: corner cases and filters") {
    SurfaceModel m = SurfaceModel::rational_blowup(2);
    // Zero class: only the empty configuration.
    auto decs = enumerate_decompositions(m, m.zero_class(),
                                         {parse_class(m, "E1"), parse_class(m, "H")});
    REQUIRE(decs.size() == 1);
    CHECK(decs[0].components.empty());

    // Empty pool with a nonzero class: empty result, not an error.
    CHECK(enumerate_decompositions(m, m.basis_class("H"), {}).empty());

    // all_rational filters out higher-genus components.
    SurfaceModel rb8 = SurfaceModel::rational_blowup(8);
    DivisorClass anti_k = -rb8.canonical_class();
    std::vector<DivisorClass> pool = {anti_k, parse_class(rb8, "H - E1"),
                                      parse_class(rb8, "2H - E2 - E3 - E4 - E5 - E6 - E7 - E8")};
    auto all = enumerate_decompositions(rb8, anti_k, pool);
    CHECK(all.size() == 2);  // {-K} itself and the two-component split
    DecompositionConstraints rational_only;
    rational_only.all_rational = true;
    auto filtered = enumerate_decompositions(rb8, anti_k, pool, rational_only);
    REQUIRE(filtered.size() == 1);
    CHECK(filtered[0].components.size() == 2);

    // Re-verification: totals match and components re-sum.
    for (const auto& config : all) {
        DivisorClass sum = rb8.zero_class();
        for (const auto& c : config.components) sum = sum + c.multiplicity * c.cls;
        CHECK(sum == anti_k);
    }
}

TEST_CASE("weighted point bound and residual intersection checks") {
    SurfaceModel ruled = SurfaceModel::ruled_trivial_blowup(2, 1);
    DivisorClass t = ruled.basis_class("T");
    // l_T = 1: no weighted point set survives two distinct subvarieties.
    WeightedPointBound wb = weighted_points_bound(ruled, t, {1});
    CHECK(wb.l_target == 1);
    CHECK(wb.total_weight == 1);
    CHECK(!wb.pass);
    CHECK_THROWS_AS(weighted_points_bound(ruled, t, {0}), InvalidConfigurationError);

    SurfaceModel rb0 = SurfaceModel::rational_blowup(0);
    DivisorClass two_h = parse_class(rb0, "2H");
    // l_{2H} = 5: four simple points leave room, five do not.
    CHECK(weighted_points_bound(rb0, two_h, {1, 1, 1, 1}).pass);
    CHECK(!weighted_points_bound(rb0, two_h, {1, 1, 1, 1, 1}).pass);
    CHECK(weighted_points_bound(rb0, two_h, {2, 2}).pass);

    // Residual chain of the fiber-class uniqueness argument:
    // 0 = T^2 >= T.e0 > e0^2 for e0 = E1.
    ResidualIntersectionCheck rc = residual_intersection_check(ruled, t, parse_class(ruled, "E1"));
    CHECK(rc.pairing == 0);
    CHECK(rc.self_square == -1);
    CHECK(rc.holds);
    CHECK(rc.holds_strictly);
    rc = residual_intersection_check(ruled, t, t);
    CHECK(rc.holds);
    CHECK(!rc.holds_strictly);
}

TEST_CASE("fixture suite passes") {
    FixtureReport report = verify_fixtures();
    for (const auto& check : report.checks) {
        INFO(check.name, " ", check.detail);
        CHECK(check.pass);
    }
    CHECK(report.all_pass());
    CHECK(report.checks.size() >= 15);
}
