#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "curveclass/expr.hpp"
#include "curveclass/invariants.hpp"
#include "curveclass/surface.hpp"

using namespace curveclass;

namespace {

DivisorClass random_class(const SurfaceModel& model, std::mt19937& rng, int64_t spread = 6) {
    std::vector<int64_t> c(model.rank());
    for (auto& x : c) x = static_cast<int64_t>(rng() % (2 * spread + 1)) - spread;
    return DivisorClass(std::move(c));
}

DivisorClass random_even_class(const SurfaceModel& model, std::mt19937& rng) {
    for (;;) {
        DivisorClass e = random_class(model, rng);
        if (adjunction_number(model, e) % 2 == 0) return e;
    }
}

}  // namespace

TEST_CASE("pairing on basis classes") {
    SurfaceModel rb2 = SurfaceModel::rational_blowup(2);
    CHECK(pair(rb2, rb2.basis_class("H"), rb2.basis_class("H")) == 1);
    CHECK(pair(rb2, rb2.basis_class("E1"), rb2.basis_class("E1")) == -1);
    CHECK(pair(rb2, rb2.basis_class("H"), rb2.basis_class("E2")) == 0);

    SurfaceModel ruled = SurfaceModel::ruled_trivial_blowup(1, 0);
    CHECK(pair(ruled, ruled.basis_class("U"), ruled.basis_class("T")) == 1);
    CHECK(self_pair(ruled, ruled.basis_class("U")) == 0);
    CHECK(self_pair(ruled, ruled.basis_class("T")) == 0);

    SurfaceModel rb8 = SurfaceModel::rational_blowup(8);
    DivisorClass anti_k = -rb8.canonical_class();
    CHECK(format_class(rb8, anti_k) == "3H - E1 - E2 - E3 - E4 - E5 - E6 - E7 - E8");
    CHECK(self_pair(rb8, anti_k) == 1);  // 9 - 8
}

TEST_CASE("canonical classes of the presets") {
    SurfaceModel rb8 = SurfaceModel::rational_blowup(8);
    CHECK(rb8.canonical_class() ==
          DivisorClass({-3, 1, 1, 1, 1, 1, 1, 1, 1}));

    SurfaceModel nt2 = SurfaceModel::ruled_nontrivial(2);
    CHECK(format_class(nt2, nt2.canonical_class()) == "3T - 2U");
    CHECK(nt2.canonical_class() == DivisorClass({-2, 3}));

    SurfaceModel rb0 = SurfaceModel::rational_blowup(0);
    CHECK(rb0.canonical_class() == DivisorClass({-3}));

    SurfaceModel s2 = SurfaceModel::sphere_product();
    CHECK(s2.canonical_class() == DivisorClass({-2, -2}));
}

TEST_CASE("canonical class squared closed forms") {
    for (int64_t k = 0; k <= 10; ++k) {
        SurfaceModel m = SurfaceModel::rational_blowup(k);
        CHECK(self_pair(m, m.canonical_class()) == 9 - k);
    }
    for (int64_t h = 1; h <= 4; ++h) {
        for (int64_t k = 0; k <= 5; ++k) {
            SurfaceModel m = SurfaceModel::ruled_trivial_blowup(h, k);
            CHECK(self_pair(m, m.canonical_class()) == 8 * (1 - h) - k);
        }
        SurfaceModel n = SurfaceModel::ruled_nontrivial(h);
        CHECK(self_pair(n, n.canonical_class()) == 8 * (1 - h));
    }
    SurfaceModel s2 = SurfaceModel::sphere_product();
    CHECK(self_pair(s2, s2.canonical_class()) == 8);
}

TEST_CASE("parse_class") {
    SurfaceModel rb8 = SurfaceModel::rational_blowup(8);
    CHECK(parse_class(rb8, "3H - E1 - E2 - E3 - E4 - E5 - E6 - E7 - E8") ==
          DivisorClass({3, -1, -1, -1, -1, -1, -1, -1, -1}));

    SurfaceModel ruled = SurfaceModel::ruled_trivial_blowup(1, 0);
    CHECK(parse_class(ruled, "U + 2T") == DivisorClass({1, 2}));

    SurfaceModel rb11 = SurfaceModel::rational_blowup(11);
    CHECK(parse_class(rb11, "8H - E1 - 4E2 - 4E3 - 4E4 - 2E5 - 2E6 - 2E7 - E8 - E9 - E10 - E11") ==
          DivisorClass({8, -1, -4, -4, -4, -2, -2, -2, -1, -1, -1, -1}));

    CHECK(parse_class(rb8, "0") == rb8.zero_class());
    CHECK(parse_class(rb8, "  -E1+ E2 ") == DivisorClass({0, -1, 1, 0, 0, 0, 0, 0, 0}));
    CHECK(parse_class(rb8, "2H - H") == DivisorClass({1, 0, 0, 0, 0, 0, 0, 0, 0}));

    CHECK_THROWS_AS(parse_class(rb8, "U"), ParseError);
    CHECK_THROWS_AS(parse_class(rb8, "E9"), ParseError);
    CHECK_THROWS_AS(parse_class(rb8, "3"), ParseError);
    CHECK_THROWS_AS(parse_class(rb8, "H +"), ParseError);
    CHECK_THROWS_AS(parse_class(rb8, "H E1"), ParseError);
    CHECK_THROWS_AS(parse_class(rb8, ""), ParseError);
    CHECK_THROWS_AS(parse_class(rb8, "9223372036854775808H"), ArithmeticError);
}

TEST_CASE("format_class normalization") {
    SurfaceModel rb1 = SurfaceModel::rational_blowup(1);
    CHECK(format_class(rb1, DivisorClass({1, 0})) == "H");
    CHECK(format_class(rb1, DivisorClass({0, 0})) == "0");

    SurfaceModel rb2 = SurfaceModel::rational_blowup(2);
    CHECK(format_class(rb2, DivisorClass({0, -1, 1})) == "E2 - E1");
    CHECK(format_class(rb2, rb2.canonical_class()) == "E1 + E2 - 3H");

    SurfaceModel s2 = SurfaceModel::sphere_product();
    CHECK(format_class(s2, s2.canonical_class()) == "-2A - 2B");
}

TEST_CASE("parse/format round trip on random classes") {
    std::mt19937 rng(20240811);
    std::vector<SurfaceModel> models = {
        SurfaceModel::rational_blowup(0), SurfaceModel::rational_blowup(3),
        SurfaceModel::rational_blowup(8), SurfaceModel::sphere_product(),
        SurfaceModel::ruled_trivial_blowup(2, 3), SurfaceModel::ruled_nontrivial(1)};
    for (const auto& m : models) {
        for (int t = 0; t < 200; ++t) {
            DivisorClass e = random_class(m, rng, 9);
            CHECK(parse_class(m, format_class(m, e)) == e);
        }
    }
}

TEST_CASE("pair is symmetric and bilinear") {
    std::mt19937 rng(7);
    std::vector<SurfaceModel> models = {SurfaceModel::rational_blowup(5),
                                        SurfaceModel::sphere_product(),
                                        SurfaceModel::ruled_trivial_blowup(3, 2),
                                        SurfaceModel::ruled_nontrivial(2)};
    for (const auto& m : models) {
        for (int t = 0; t < 100; ++t) {
            DivisorClass x = random_class(m, rng);
            DivisorClass y = random_class(m, rng);
            DivisorClass z = random_class(m, rng);
            int64_t lambda = static_cast<int64_t>(rng() % 9) - 4;
            CHECK(pair(m, x, y) == pair(m, y, x));
            CHECK(pair(m, x + z, y) == pair(m, x, y) + pair(m, z, y));
            CHECK(pair(m, lambda * x, y) == lambda * pair(m, x, y));
        }
    }
}

TEST_CASE("pairing errors") {
    SurfaceModel rb2 = SurfaceModel::rational_blowup(2);
    SurfaceModel rb3 = SurfaceModel::rational_blowup(3);
    CHECK_THROWS_AS(pair(rb2, rb3.basis_class("H"), rb2.basis_class("H")), DimensionError);
    DivisorClass huge({int64_t{3037000500}, 0, 0});
    CHECK_THROWS_AS(pair(rb2, huge, huge), ArithmeticError);
    DivisorClass big({int64_t{1} << 62, 0, 0});
    CHECK_THROWS_AS(big + big, ArithmeticError);
}

TEST_CASE("j_genus examples") {
    SurfaceModel rt2 = SurfaceModel::ruled_trivial_blowup(2, 0);
    CHECK(j_genus(rt2, rt2.basis_class("T")) == 0);

    SurfaceModel rb8 = SurfaceModel::rational_blowup(8);
    CHECK(j_genus(rb8, -rb8.canonical_class()) == 1);

    SurfaceModel rb11 = SurfaceModel::rational_blowup(11);
    DivisorClass tprime = parse_class(rb11, "6H - E1 - 3E2 - 3E3 - 3E4 - E5 - E6 - E7 - E8 - E9 - E10 - E11");
    CHECK(j_genus(rb11, tprime) == 1);

    // U on the nontrivial bundle at h = 1 has even adjunction number 0, genus 1.
    SurfaceModel nt1 = SurfaceModel::ruled_nontrivial(1);
    CHECK(adjunction_number(nt1, nt1.basis_class("U")) == 0);
    CHECK(j_genus(nt1, nt1.basis_class("U")) == 1);

}

TEST_CASE("adjunction number is even for every class on every preset") {
    // K is characteristic in each preset lattice, so e*e + K*e is always
    // even and the parity guard can only fire on a corrupted model.
    std::mt19937 rng(4242);
    std::vector<SurfaceModel> models = {
        SurfaceModel::rational_blowup(0), SurfaceModel::rational_blowup(7),
        SurfaceModel::sphere_product(), SurfaceModel::ruled_trivial_blowup(1, 3),
        SurfaceModel::ruled_trivial_blowup(4, 0), SurfaceModel::ruled_nontrivial(2)};
    for (const auto& m : models)
        for (int t = 0; t < 300; ++t)
            CHECK(adjunction_number(m, random_class(m, rng, 20)) % 2 == 0);
}

TEST_CASE("sw_dimension examples") {
    SurfaceModel rt3 = SurfaceModel::ruled_trivial_blowup(3, 0);
    CHECK(sw_dimension(rt3, parse_class(rt3, "U + 3T")) == 8);
    for (int64_t h = 1; h <= 5; ++h) {
        SurfaceModel m = SurfaceModel::ruled_trivial_blowup(h, 2);
        DivisorClass a = parse_class(m, "U + " + std::to_string(h) + "T");
        CHECK(sw_dimension(m, a) == 2 * h + 2);
    }
    for (const auto& m : {SurfaceModel::rational_blowup(4), SurfaceModel::sphere_product(),
                          SurfaceModel::ruled_nontrivial(2)})
        CHECK(sw_dimension(m, m.canonical_class()) == 0);
    SurfaceModel rt1 = SurfaceModel::ruled_trivial_blowup(1, 0);
    CHECK(sw_dimension(rt1, rt1.basis_class("T")) == 2);
}

TEST_CASE("expected_dimension examples") {
    SurfaceModel rt2 = SurfaceModel::ruled_trivial_blowup(2, 0);
    ExpectedDimension d = expected_dimension(rt2, rt2.basis_class("T"));
    CHECK(d.iota == 1);
    CHECK(d.l == 1);

    SurfaceModel rb8 = SurfaceModel::rational_blowup(8);
    d = expected_dimension(rb8, -rb8.canonical_class());
    CHECK(d.iota == 1);
    CHECK(d.l == 1);

    SurfaceModel rb1 = SurfaceModel::rational_blowup(1);
    d = expected_dimension(rb1, rb1.basis_class("E1"));
    CHECK(d.iota == 0);
    CHECK(d.l == 0);

    // Negative iota clamps to l = 0.
    SurfaceModel rb2 = SurfaceModel::rational_blowup(2);
    d = expected_dimension(rb2, parse_class(rb2, "E1 - E2"));
    CHECK(d.iota == -1);
    CHECK(d.l == 0);
}

TEST_CASE("adjunction_number examples") {
    SurfaceModel rb2 = SurfaceModel::rational_blowup(2);
    CHECK(adjunction_number(rb2, parse_class(rb2, "E2 - E1")) == -2);

    SurfaceModel rb11 = SurfaceModel::rational_blowup(11);
    DivisorClass c0 = parse_class(rb11, "4H - E1 - E2 - E3 - E4 - E5 - E6 - E7 - E8 - E9 - E10 - E11");
    CHECK(self_pair(rb11, c0) == 5);
    CHECK(adjunction_number(rb11, c0) == 4);
    CHECK(j_genus(rb11, c0) == 3);
}

TEST_CASE("sheaf euler characteristic") {
    SurfaceModel rb0 = SurfaceModel::rational_blowup(0);
    CHECK(sheaf_euler_characteristic(rb0, rb0.basis_class("H")) == 3);
    CHECK(sheaf_euler_characteristic(rb0, rb0.zero_class()) == 1);
    CHECK(sheaf_euler_characteristic(rb0, parse_class(rb0, "2H")) == 6);
    SurfaceModel ruled = SurfaceModel::ruled_trivial_blowup(1, 0);
    CHECK_THROWS_AS(sheaf_euler_characteristic(ruled, ruled.basis_class("T")), ModelError);
}

TEST_CASE("dual_class") {
    SurfaceModel rb1 = SurfaceModel::rational_blowup(1);
    DivisorClass h = rb1.basis_class("H");
    DivisorClass he = parse_class(rb1, "H - E1");
    DivisorClass dual = dual_class(rb1, h, he);
    CHECK(dual == parse_class(rb1, "2H - E1"));
    CHECK(pair(rb1, dual, h) == 2);

    // g_J(U) = 1 on the nontrivial bundle at h = 1, so U is rejected as dual input.
    SurfaceModel nt1 = SurfaceModel::ruled_nontrivial(1);
    CHECK_THROWS_AS(dual_class(nt1, nt1.basis_class("T"), nt1.basis_class("U")),
                    PreconditionError);

    SurfaceModel s2 = SurfaceModel::sphere_product();
    DivisorClass ab = dual_class(s2, s2.basis_class("A"), s2.basis_class("B"));
    CHECK(ab == parse_class(s2, "A + B"));
    CHECK(pair(s2, ab, s2.basis_class("A")) == 1);
}

TEST_CASE("pencil singular count") {
    CHECK(pencil_singular_count(SurfaceModel::rational_blowup(9)) == 12);
    CHECK(pencil_singular_count(SurfaceModel::rational_blowup(0)) == 3);
    for (int64_t k = 0; k <= 12; ++k)
        CHECK(pencil_singular_count(SurfaceModel::rational_blowup(k)) == k + 3);
    CHECK_THROWS_AS(pencil_singular_count(SurfaceModel::sphere_product()), ModelError);
}

TEST_CASE("invariant identities on random classes") {
    std::mt19937 rng(99);
    std::vector<SurfaceModel> models = {SurfaceModel::rational_blowup(6),
                                        SurfaceModel::sphere_product(),
                                        SurfaceModel::ruled_trivial_blowup(2, 2),
                                        SurfaceModel::ruled_nontrivial(3)};
    for (const auto& m : models) {
        int64_t k_sq = self_pair(m, m.canonical_class());
        for (int t = 0; t < 150; ++t) {
            DivisorClass e = random_even_class(m, rng);
            CHECK(2 * j_genus(m, e) - 2 == adjunction_number(m, e));
            CHECK(sw_dimension(m, e) == adjunction_number(m, -e));
            if (j_genus(m, e) == 0)
                CHECK(expected_dimension(m, e).iota == self_pair(m, e) + 1);
            DivisorClass ke = m.canonical_class() - e;
            CHECK(j_genus(m, e) + j_genus(m, ke) == k_sq + 2 + sw_dimension(m, e));
        }
    }
}

TEST_CASE("invariant report bundles the numbers") {
    SurfaceModel rt2 = SurfaceModel::ruled_trivial_blowup(2, 0);
    InvariantReport r = invariant_report(rt2, rt2.basis_class("T"));
    CHECK(r.self_intersection == 0);
    CHECK(r.k_pairing == -2);
    CHECK(r.j_genus == 0);
    CHECK(r.iota == 1);
    CHECK(r.l == 1);
    CHECK(r.sw_dim == 2);
    CHECK(r.adjunction == -2);
}
