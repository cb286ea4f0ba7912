// curveclass: exact divisor-class computations on rational and ruled
// surfaces. Every subcommand prints one deterministic JSON document on
// stdout; domain errors exit 1 with a structured error object, usage errors
// exit 2.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "curveclass/cache.hpp"
#include "curveclass/json_io.hpp"
#include "curveclass/version.hpp"

using namespace curveclass;

namespace {

struct GlobalOptions {
    int json_indent = 2;
    std::string cache_dir;
    bool verify_cache = false;
    int workers = 1;
};

std::string dump(const GlobalOptions& g, const Json& j) {
    return j.dump(g.json_indent) + "\n";
}

// --surface accepts inline JSON or a file path.
SurfaceModel load_surface(const std::string& spec) {
    std::string text = spec;
    if (!spec.empty() && spec[0] != '{') {
        std::ifstream in(spec);
        if (!in) throw ParseError("cannot open surface file '" + spec + "'");
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
    Json j;
    try {
        j = Json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("invalid surface JSON: ") + e.what());
    }
    return surface_from_json(j);
}

Json load_json_arg(const std::string& spec, const char* what) {
    std::string text = spec;
    if (!spec.empty() && spec[0] != '{' && spec[0] != '[' && spec[0] != '"') {
        std::ifstream in(spec);
        if (!in) throw ParseError(std::string("cannot open ") + what + " file '" + spec + "'");
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
    try {
        return Json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("invalid ") + what + " JSON: " + e.what());
    }
}

std::optional<ResultCache> open_cache(const GlobalOptions& g) {
    std::string dir = g.cache_dir;
    if (dir.empty())
        if (const char* env = std::getenv("CURVECLASS_CACHE_DIR")) dir = env;
    if (dir.empty()) {
        if (g.verify_cache) throw ParseError("--verify-cache requires a cache directory");
        return std::nullopt;
    }
    return ResultCache(dir, g.verify_cache);
}

std::string cached(const GlobalOptions& g, const std::string& request,
                   const std::function<std::string()>& compute) {
    auto cache = open_cache(g);
    if (!cache) return compute();
    return cache->get_or_compute(request, compute);
}

WeierstrassCubic parse_curve(const std::string& spec) {
    std::size_t comma = spec.find(',');
    if (comma == std::string::npos)
        throw ParseError("--curve expects \"a,b\" with exact rational entries");
    return WeierstrassCubic(Rational::from_string(spec.substr(0, comma)),
                            Rational::from_string(spec.substr(comma + 1)));
}

std::vector<CubicPoint> parse_cubic_points(const Json& j) {
    if (!j.is_array()) throw ParseError("--points expects a JSON array");
    std::vector<CubicPoint> out;
    for (const auto& item : j) out.push_back(cubic_point_from_json(item));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact divisor-class toolkit for rational and ruled surfaces"};
    app.set_version_flag("--version", std::string("curveclass ") + kToolkitVersion);
    app.require_subcommand(1);

    GlobalOptions global;
    app.add_option("--json-indent", global.json_indent, "indentation of JSON output")
        ->capture_default_str();
    app.add_option("--cache-dir", global.cache_dir,
                   "cache directory (default: CURVECLASS_CACHE_DIR)");
    app.add_flag("--verify-cache", global.verify_cache,
                 "recompute cached results and fail on mismatch");
    app.add_option("--workers", global.workers, "worker threads for enumerations")
        ->check(CLI::Range(1, 64));

    std::string surface_spec, class_expr, class_a, class_b, pool_spec, targets_spec,
        axioms_spec, curve_spec, points_spec, zero_spec = "\"inf\"";
    std::optional<int64_t> max_degree;
    int64_t bound = 6, max_size = 100000, max_multiplicity = 8, form_n = 1;
    bool want_connected = false, want_all_rational = false, jsonl = false;

    std::string output;

    // surface
    auto* cmd_surface = app.add_subcommand("surface", "describe a surface model");
    cmd_surface->add_option("--surface", surface_spec, "surface JSON or file")->required();
    cmd_surface->callback([&] {
        SurfaceModel m = load_surface(surface_spec);
        Json j = surface_to_json(m);
        j["basis"] = m.basis();
        j["rank"] = m.rank();
        j["canonical_class"] = format_class(m, m.canonical_class());
        j["k_squared"] = self_pair(m, m.canonical_class());
        Json gram = Json::array();
        for (std::size_t i = 0; i < m.rank(); ++i) {
            Json row = Json::array();
            for (std::size_t jj = 0; jj < m.rank(); ++jj) row.push_back(m.gram(i, jj));
            gram.push_back(std::move(row));
        }
        j["gram"] = std::move(gram);
        j["signature"] = signature_to_json(gram_signature(m));
        output = dump(global, j);
    });

    // invariants
    auto* cmd_inv = app.add_subcommand("invariants", "numerical invariants of a class");
    cmd_inv->add_option("--surface", surface_spec)->required();
    cmd_inv->add_option("--class", class_expr)->required();
    cmd_inv->callback([&] {
        SurfaceModel m = load_surface(surface_spec);
        DivisorClass e = parse_class(m, class_expr);
        Json j = invariant_report_to_json(m, invariant_report(m, e));
        j["surface"] = surface_to_json(m);
        output = dump(global, j);
    });

    // enumerate
    auto* cmd_enum = app.add_subcommand("enumerate", "enumerate distinguished class families");
    cmd_enum->require_subcommand(1);
    // With --jsonl the classes stream one JSON document per line, followed
    // by a summary line; the default is a single object.
    auto render_enumeration = [&](const SurfaceModel& m, const EnumerationResult& r) {
        if (!jsonl) return dump(global, enumeration_to_json(m, r));
        std::string lines;
        for (const DivisorClass& e : r.classes)
            lines += Json{{"class", format_class(m, e)}}.dump(-1) + "\n";
        Json summary{{"family", family_name(r.family)},
                     {"count", r.classes.size()},
                     {"complete", r.complete}};
        summary["bound_used"] = r.bound_used ? Json(*r.bound_used) : Json(nullptr);
        return lines + summary.dump(-1) + "\n";
    };

    auto* enum_exc = cmd_enum->add_subcommand("exceptional", "classes with e*e = K*e = -1");
    enum_exc->add_option("--surface", surface_spec)->required();
    enum_exc->add_option("--max-degree", max_degree, "H-degree bound (required for k >= 9)");
    enum_exc->add_flag("--jsonl", jsonl, "stream one class per line");
    enum_exc->callback([&] {
        SurfaceModel m = load_surface(surface_spec);
        Json request{{"op", "enumerate_exceptional"},
                     {"surface", surface_to_json(m)},
                     {"max_degree", max_degree ? Json(*max_degree) : Json(nullptr)},
                     {"jsonl", jsonl},
                     {"indent", global.json_indent}};
        output = cached(global, request.dump(), [&] {
            return render_enumeration(m, exceptional_classes(m, max_degree, global.workers));
        });
    });
    auto* enum_roots =
        cmd_enum->add_subcommand("roots", "the 240 classes with r*r = -2, K*r = 0");
    enum_roots->add_option("--surface", surface_spec)->required();
    enum_roots->add_flag("--jsonl", jsonl, "stream one class per line");
    enum_roots->callback([&] {
        SurfaceModel m = load_surface(surface_spec);
        Json request{{"op", "enumerate_roots"},
                     {"surface", surface_to_json(m)},
                     {"jsonl", jsonl},
                     {"indent", global.json_indent}};
        output = cached(global, request.dump(), [&] {
            return render_enumeration(m, minus_two_sphere_classes(m, global.workers));
        });
    });
    auto* enum_neg = cmd_enum->add_subcommand(
        "ruled-negative", "negative rational classes of fiber degree zero");
    enum_neg->add_option("--surface", surface_spec)->required();
    enum_neg->add_option("--bound", bound, "coefficient bound")->capture_default_str();
    enum_neg->callback([&] {
        SurfaceModel m = load_surface(surface_spec);
        output =
            dump(global, enumeration_to_json(m, ruled_negative_rational_classes(m, bound)));
    });
    auto* enum_forms =
        cmd_enum->add_subcommand("spherical-forms", "canonical forms of spherical classes");
    enum_forms->add_option("--n", form_n, "parameter for the two parametric templates")
        ->capture_default_str();
    enum_forms->callback([&] {
        SurfaceModel sample = SurfaceModel::rational_blowup(2);
        Json forms = Json::array();
        for (const SphericalForm& f : spherical_canonical_forms()) {
            forms.push_back(Json{{"template", f.name},
                                 {"parametric", f.parametric},
                                 {"instance_n", f.parametric ? Json(form_n) : Json(nullptr)},
                                 {"instance",
                                  format_class(sample, f.instantiate(sample, form_n))}});
        }
        output = dump(global, Json{{"forms", std::move(forms)}});
    });

    // cremona
    auto* cmd_crem = app.add_subcommand("cremona", "Cremona reduction, equivalence and orbits");
    cmd_crem->require_subcommand(1);
    auto* crem_reduce = cmd_crem->add_subcommand("reduce", "reduce a class to canonical form");
    crem_reduce->add_option("--surface", surface_spec)->required();
    crem_reduce->add_option("--class", class_expr)->required();
    crem_reduce->callback([&] {
        SurfaceModel m = load_surface(surface_spec);
        output = dump(global, trace_to_json(m, cremona_reduce(m, parse_class(m, class_expr))));
    });
    auto* crem_eq = cmd_crem->add_subcommand("equivalent", "test Cremona equivalence");
    crem_eq->add_option("--surface", surface_spec)->required();
    crem_eq->add_option("--class-a", class_a)->required();
    crem_eq->add_option("--class-b", class_b)->required();
    crem_eq->add_option("--max-size", max_size, "orbit bound for the fallback search")
        ->capture_default_str();
    crem_eq->callback([&] {
        SurfaceModel m = load_surface(surface_spec);
        EquivalenceWitness w =
            cremona_equivalent(m, parse_class(m, class_a), parse_class(m, class_b),
                               static_cast<std::size_t>(max_size));
        output = dump(global, equivalence_to_json(m, w));
    });
    auto* crem_orbit = cmd_crem->add_subcommand("orbit", "Weyl orbit of a class");
    crem_orbit->add_option("--surface", surface_spec)->required();
    crem_orbit->add_option("--class", class_expr)->required();
    crem_orbit->add_option("--max-size", max_size, "orbit size bound")->capture_default_str();
    crem_orbit->callback([&] {
        SurfaceModel m = load_surface(surface_spec);
        Json request{{"op", "weyl_orbit"},
                     {"surface", surface_to_json(m)},
                     {"class", class_expr},
                     {"max_size", max_size},
                     {"indent", global.json_indent}};
        output = cached(global, request.dump(), [&] {
            auto orbit = weyl_orbit(m, parse_class(m, class_expr),
                                    static_cast<std::size_t>(max_size));
            Json classes = Json::array();
            for (const DivisorClass& e : orbit) classes.push_back(format_class(m, e));
            return dump(global, Json{{"class", class_expr},
                                     {"count", orbit.size()},
                                     {"orbit", std::move(classes)},
                                     {"surface", surface_to_json(m)}});
        });
    });

    // sw
    auto* cmd_sw = app.add_subcommand("sw", "wall crossing and nonvanishing deduction");
    cmd_sw->require_subcommand(1);
    auto* sw_wall = cmd_sw->add_subcommand("wallcross", "wall-crossing number of a class");
    sw_wall->add_option("--surface", surface_spec)->required();
    sw_wall->add_option("--class", class_expr)->required();
    sw_wall->callback([&] {
        SurfaceModel m = load_surface(surface_spec);
        DivisorClass e = parse_class(m, class_expr);
        DegreeB1WallCross d = degree_b1_wallcross(m, e);
        output = dump(global, Json{{"class", class_expr},
                                   {"wall_crossing_number", wall_crossing_number(m, e)},
                                   {"sw_dim", sw_dimension(m, e)},
                                   {"degree_b1",
                                    Json{{"applicable", d.applicable},
                                         {"b1", d.b1},
                                         {"difference", d.difference}}}});
    });
    auto* sw_deduce = cmd_sw->add_subcommand("deduce", "run the nonvanishing rules to fixpoint");
    sw_deduce->add_option("--surface", surface_spec)->required();
    sw_deduce->add_option("--targets", targets_spec, "JSON array of class expressions")
        ->required();
    sw_deduce->add_option("--axioms", axioms_spec, "JSON axiom object")->required();
    sw_deduce->callback([&] {
        SurfaceModel m = load_surface(surface_spec);
        std::vector<DivisorClass> targets =
            classes_from_json(m, load_json_arg(targets_spec, "targets"));
        AxiomSet axioms = axioms_from_json(m, load_json_arg(axioms_spec, "axioms"));
        Json facts = Json::array();
        for (const SWFact& f : deduce(m, targets, axioms))
            facts.push_back(sw_fact_to_json(m, f));
        output = dump(global, Json{{"facts", std::move(facts)}});
    });

    // nef
    auto* cmd_nef = app.add_subcommand("nef", "nefness obstruction search");
    cmd_nef->require_subcommand(1);
    auto* nef_check = cmd_nef->add_subcommand("check", "search for violating classes");
    nef_check->add_option("--surface", surface_spec)->required();
    nef_check->add_option("--class", class_expr)->required();
    nef_check->add_option("--pool", pool_spec, "JSON array of known nonzero classes");
    nef_check->add_option("--bound", bound, "coefficient bound")->capture_default_str();
    nef_check->callback([&] {
        SurfaceModel m = load_surface(surface_spec);
        std::vector<DivisorClass> pool;
        if (!pool_spec.empty()) pool = classes_from_json(m, load_json_arg(pool_spec, "pool"));
        SearchBounds bounds;
        bounds.coefficient_bound = bound;
        NefnessReport r = obstruction_search(m, parse_class(m, class_expr), pool, bounds);
        output = dump(global, nefness_report_to_json(m, r));
    });

    // decompose
    auto* cmd_dec = app.add_subcommand("decompose", "enumerate subvariety decompositions");
    cmd_dec->add_option("--surface", surface_spec)->required();
    cmd_dec->add_option("--class", class_expr)->required();
    cmd_dec->add_option("--pool", pool_spec, "JSON array of component classes")->required();
    cmd_dec->add_flag("--connected", want_connected, "keep connected configurations only");
    cmd_dec->add_flag("--all-rational", want_all_rational, "keep genus-zero components only");
    cmd_dec->add_option("--max-multiplicity", max_multiplicity)->capture_default_str();
    cmd_dec->callback([&] {
        SurfaceModel m = load_surface(surface_spec);
        DecompositionConstraints constraints{want_connected, want_all_rational,
                                             max_multiplicity};
        auto decs = enumerate_decompositions(
            m, parse_class(m, class_expr),
            classes_from_json(m, load_json_arg(pool_spec, "pool")), constraints);
        Json out = Json::array();
        for (const SubvarietyConfig& c : decs) {
            Json j = config_to_json(m, c);
            try {
                j["graph"] = graph_to_json(build_graph(m, c));
            } catch (const InvalidConfigurationError&) {
                j["graph"] = nullptr;
            }
            out.push_back(std::move(j));
        }
        output = dump(global, Json{{"class", class_expr},
                                   {"count", decs.size()},
                                   {"decompositions", std::move(out)}});
    });

    // fixtures
    auto* cmd_fix = app.add_subcommand("fixtures", "built-in worked examples");
    auto* fix_run = cmd_fix->add_subcommand("run", "run the fixture suite");
    fix_run->callback(
        [&] { output = dump(global, fixture_report_to_json(verify_fixtures())); });
    cmd_fix->require_subcommand(1);

    // cubic
    auto* cmd_cubic = app.add_subcommand("cubic", "exact plane-cubic constructions");
    cmd_cubic->require_subcommand(1);
    auto* cubic_third = cmd_cubic->add_subcommand("third", "third intersection of a chord");
    cubic_third->add_option("--curve", curve_spec, "\"a,b\" for y^2 = x^3 + ax + b")->required();
    cubic_third->add_option("--points", points_spec, "JSON array of two points")->required();
    cubic_third->callback([&] {
        WeierstrassCubic c = parse_curve(curve_spec);
        auto pts = parse_cubic_points(load_json_arg(points_spec, "points"));
        if (pts.size() != 2) throw ParseError("cubic third expects exactly two points");
        output = dump(
            global,
            Json{{"third", cubic_point_to_json(third_intersection(c, pts[0], pts[1]))}});
    });
    auto* cubic_add = cmd_cubic->add_subcommand("add", "chord-tangent addition");
    cubic_add->add_option("--curve", curve_spec)->required();
    cubic_add->add_option("--points", points_spec, "JSON array of two points")->required();
    cubic_add->add_option("--zero", zero_spec, "zero point (default \"inf\")")
        ->capture_default_str();
    cubic_add->callback([&] {
        WeierstrassCubic c = parse_curve(curve_spec);
        auto pts = parse_cubic_points(load_json_arg(points_spec, "points"));
        if (pts.size() != 2) throw ParseError("cubic add expects exactly two points");
        CubicPoint zero = cubic_point_from_json(load_json_arg(zero_spec, "zero"));
        output =
            dump(global, Json{{"sum", cubic_point_to_json(add(c, zero, pts[0], pts[1]))}});
    });
    auto* cubic_conic6 = cmd_cubic->add_subcommand(
        "conic6", "conic through five curve points and the sixth intersection");
    cubic_conic6->add_option("--curve", curve_spec)->required();
    cubic_conic6->add_option("--points", points_spec, "JSON array of five points")->required();
    cubic_conic6->callback([&] {
        WeierstrassCubic c = parse_curve(curve_spec);
        auto pts = parse_cubic_points(load_json_arg(points_spec, "points"));
        if (pts.size() != 5) throw ParseError("cubic conic6 expects exactly five points");
        std::vector<PlanePoint> plane;
        for (const auto& p : pts) plane.push_back(p.plane());
        PlaneConic conic = conic_through_five(plane);
        CubicPoint sixth = sixth_intersection(c, conic, pts);
        output = dump(global, Json{{"conic", conic_to_json(conic)},
                                   {"sixth", cubic_point_to_json(sixth)}});
    });
    auto* cubic_cb = cmd_cubic->add_subcommand("cb", "ninth base point of a cubic pencil");
    cubic_cb->add_option("--points", points_spec, "JSON array of eight plane points")
        ->required();
    cubic_cb->callback([&] {
        Json j = load_json_arg(points_spec, "points");
        if (!j.is_array() || j.size() != 8)
            throw ParseError("cubic cb expects exactly eight plane points");
        std::vector<PlanePoint> pts;
        for (const auto& item : j) pts.push_back(plane_point_from_json(item));
        CayleyBacharachResult res = cayley_bacharach_check(pts);
        output = dump(global, Json{{"ninth", plane_point_to_json(res.ninth)}});
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const Error& e) {
        std::cout << Json{{"error", e.name()}, {"message", e.what()}}.dump(global.json_indent)
                  << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cout << Json{{"error", "internal_error"}, {"message", e.what()}}.dump(
                         global.json_indent)
                  << "\n";
        return 1;
    }

    std::cout << output;
    return 0;
}
