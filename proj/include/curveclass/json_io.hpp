#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "curveclass/config.hpp"
#include "curveclass/cremona.hpp"
#include "curveclass/cubic.hpp"
#include "curveclass/enumerate.hpp"
#include "curveclass/expr.hpp"
#include "curveclass/fixtures.hpp"
#include "curveclass/invariants.hpp"
#include "curveclass/linalg.hpp"
#include "curveclass/nef.hpp"
#include "curveclass/surface.hpp"
#include "curveclass/sw.hpp"

namespace curveclass {

// nlohmann::json keeps object keys sorted, so every dump is deterministic.
using Json = nlohmann::json;

inline Json surface_to_json(const SurfaceModel& model) {
    Json j;
    switch (model.kind()) {
        case SurfaceKind::RationalBlowup:
            j["kind"] = "rational_blowup";
            j["k"] = model.blowup_count();
            break;
        case SurfaceKind::SphereProduct:
            j["kind"] = "sphere_product";
            break;
        case SurfaceKind::RuledTrivialBlowup:
            j["kind"] = "ruled_trivial_blowup";
            j["h"] = model.base_genus();
            j["k"] = model.blowup_count();
            break;
        case SurfaceKind::RuledNontrivial:
            j["kind"] = "ruled_nontrivial";
            j["h"] = model.base_genus();
            break;
    }
    return j;
}

inline SurfaceModel surface_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw ParseError("surface descriptor must be an object with a 'kind' string");
    std::string kind = j["kind"];
    auto integer_field = [&](const char* name) -> int64_t {
        if (!j.contains(name) || !j[name].is_number_integer())
            throw ParseError(std::string("surface descriptor needs integer field '") + name +
                             "'");
        return j[name].get<int64_t>();
    };
    if (kind == "rational_blowup") return SurfaceModel::rational_blowup(integer_field("k"));
    if (kind == "sphere_product") return SurfaceModel::sphere_product();
    if (kind == "ruled_trivial_blowup")
        return SurfaceModel::ruled_trivial_blowup(integer_field("h"), integer_field("k"));
    if (kind == "ruled_nontrivial") return SurfaceModel::ruled_nontrivial(integer_field("h"));
    throw ParseError("unknown surface kind '" + kind + "'");
}

inline Json invariant_report_to_json(const SurfaceModel& model, const InvariantReport& r) {
    return Json{{"class", format_class(model, r.cls)},
                {"self_intersection", r.self_intersection},
                {"k_pairing", r.k_pairing},
                {"j_genus", r.j_genus},
                {"iota", r.iota},
                {"l", r.l},
                {"sw_dim", r.sw_dim},
                {"adjunction", r.adjunction}};
}

inline Json enumeration_to_json(const SurfaceModel& model, const EnumerationResult& r) {
    Json classes = Json::array();
    for (const DivisorClass& e : r.classes) classes.push_back(format_class(model, e));
    Json j{{"family", family_name(r.family)},
           {"count", r.classes.size()},
           {"complete", r.complete},
           {"classes", std::move(classes)},
           {"surface", surface_to_json(model)}};
    j["bound_used"] = r.bound_used ? Json(*r.bound_used) : Json(nullptr);
    return j;
}

inline Json move_to_json(const CremonaMove& m) {
    if (m.kind == CremonaMove::Kind::Reflect)
        return Json{{"kind", "reflect"}, {"i", m.i}, {"j", m.j}, {"k", m.k}};
    return Json{{"kind", "swap_e"}, {"i", m.i}, {"j", m.j}};
}

inline Json trace_to_json(const SurfaceModel& model, const ReductionTrace& t) {
    Json moves = Json::array();
    for (const CremonaMove& m : t.moves) moves.push_back(move_to_json(m));
    return Json{{"input", format_class(model, t.input)},
                {"moves", std::move(moves)},
                {"reduced", format_class(model, t.reduced)},
                {"reflect_count", t.reflect_count}};
}

inline Json equivalence_to_json(const SurfaceModel& model, const EquivalenceWitness& w) {
    const char* verdict = w.verdict == Equivalence::Yes  ? "yes"
                          : w.verdict == Equivalence::No ? "no"
                                                         : "unknown";
    return Json{{"verdict", verdict},
                {"reason", w.reason},
                {"trace_a", trace_to_json(model, w.trace_a)},
                {"trace_b", trace_to_json(model, w.trace_b)}};
}

inline Json sw_fact_to_json(const SurfaceModel& model, const SWFact& f) {
    Json chain = Json::array();
    for (const RuleApplication& app : f.justification) {
        Json premises = Json::array();
        for (const DivisorClass& p : app.premises) premises.push_back(format_class(model, p));
        chain.push_back(Json{{"rule", app.rule},
                             {"subject", format_class(model, app.subject)},
                             {"conclusion", status_name(app.conclusion)},
                             {"premises", std::move(premises)},
                             {"numbers", app.numbers}});
    }
    return Json{{"class", format_class(model, f.cls)},
                {"status", status_name(f.status)},
                {"justification", std::move(chain)}};
}

inline Json fiber_certificate_to_json(const FiberNefCertificate& c) {
    return Json{{"base_genus", c.base_genus},
                {"certified", c.certified},
                {"kneser_form", c.kneser_form},
                {"wall_crossing_form", c.wall_crossing_form},
                {"pairing_form", c.pairing_form},
                {"tameness_certificate",
                 Json::array({c.tameness_b_coefficient, c.tameness_pool_coefficient})}};
}

inline Json nefness_report_to_json(const SurfaceModel& model, const NefnessReport& r) {
    Json violators = Json::array();
    for (const Violator& v : r.violators) {
        Json combo = Json::array();
        for (const auto& [cls, coeff] : v.combination)
            combo.push_back(Json{{"class", format_class(model, cls)}, {"coefficient", coeff}});
        violators.push_back(Json{{"class", format_class(model, v.cls)},
                                 {"evidence", evidence_name(v.evidence)},
                                 {"combination", std::move(combo)},
                                 {"note", v.note}});
    }
    Json j{{"target", format_class(model, r.target)},
           {"violators", std::move(violators)},
           {"unresolved_count", r.unresolved_count()},
           {"pool_warning", r.pool_warning},
           {"bounds",
            Json{{"coefficient_bound", r.bounds.coefficient_bound},
                 {"tameness_coefficient_bound", r.bounds.tameness_coefficient_bound},
                 {"tameness_max_support", r.bounds.tameness_max_support}}}};
    j["fiber_certificate"] =
        r.fiber_certificate ? fiber_certificate_to_json(*r.fiber_certificate) : Json(nullptr);
    return j;
}

inline Json config_to_json(const SurfaceModel& model, const SubvarietyConfig& c) {
    Json components = Json::array();
    for (const ConfigComponent& part : c.components)
        components.push_back(Json{{"class", format_class(model, part.cls)},
                                  {"multiplicity", part.multiplicity},
                                  {"genus", part.genus}});
    return Json{{"components", std::move(components)},
                {"total", format_class(model, c.total)}};
}

inline Json graph_to_json(const IntersectionGraph& g) {
    Json edges = Json::array();
    for (const auto& [i, j, mult] : g.edges) edges.push_back(Json::array({i, j, mult}));
    return Json{{"vertices", g.vertices},
                {"edges", std::move(edges)},
                {"edge_count", g.edge_count},
                {"components", g.graph_components},
                {"connected", g.connected},
                {"first_betti", g.first_betti}};
}

inline Json fixture_report_to_json(const FixtureReport& r) {
    Json checks = Json::array();
    for (const FixtureCheck& c : r.checks)
        checks.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    return Json{{"checks", std::move(checks)}, {"all_pass", r.all_pass()}};
}

inline AxiomSet axioms_from_json(const SurfaceModel& model, const Json& j) {
    AxiomSet axioms;
    if (!j.is_object()) throw ParseError("axiom file must hold a JSON object");
    if (j.contains("positive_curve_classes"))
        for (const auto& s : j["positive_curve_classes"])
            axioms.positive_curve_classes.push_back(parse_class(model, s.get<std::string>()));
    if (j.contains("known_nonzero"))
        for (const auto& s : j["known_nonzero"])
            axioms.known_nonzero.push_back(parse_class(model, s.get<std::string>()));
    return axioms;
}

inline std::vector<DivisorClass> classes_from_json(const SurfaceModel& model, const Json& j) {
    if (!j.is_array()) throw ParseError("expected a JSON array of class expressions");
    std::vector<DivisorClass> out;
    for (const auto& s : j) out.push_back(parse_class(model, s.get<std::string>()));
    return out;
}

// Cubic points serialize as "inf" or a pair of exact rational strings.
inline CubicPoint cubic_point_from_json(const Json& j) {
    if (j.is_string() && j.get<std::string>() == "inf") return CubicPoint::at_infinity();
    if (!j.is_array() || j.size() != 2)
        throw ParseError("cubic point must be \"inf\" or [\"x\", \"y\"]");
    return CubicPoint::affine(Rational::from_string(j[0].get<std::string>()),
                              Rational::from_string(j[1].get<std::string>()));
}

inline Json cubic_point_to_json(const CubicPoint& p) {
    if (p.is_infinity()) return Json("inf");
    return Json::array({p.x().to_string(), p.y().to_string()});
}

inline PlanePoint plane_point_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 3)
        throw ParseError("plane point must be [\"X\", \"Y\", \"Z\"]");
    return PlanePoint(Rational::from_string(j[0].get<std::string>()),
                      Rational::from_string(j[1].get<std::string>()),
                      Rational::from_string(j[2].get<std::string>()));
}

inline Json plane_point_to_json(const PlanePoint& p) {
    return Json::array({p.x.to_string(), p.y.to_string(), p.z.to_string()});
}

inline Json conic_to_json(const PlaneConic& c) {
    Json coeffs = Json::array();
    for (const Rational& v : c.coeffs) coeffs.push_back(v.to_string());
    return Json{{"coefficients", std::move(coeffs)}, {"degenerate", c.degenerate()}};
}

inline Json signature_to_json(const Signature& s) {
    return Json{{"positive", s.positive}, {"negative", s.negative}, {"zero", s.zero}};
}

}  // namespace curveclass
