#ifndef BRAMSEY_JSON_IO_HPP
#define BRAMSEY_JSON_IO_HPP

#include <json.hpp>

#include "bramsey/cycle.hpp"
#include "bramsey/embed.hpp"
#include "bramsey/matching.hpp"
#include "bramsey/ramsey.hpp"
#include "bramsey/regularity.hpp"

// JSON shapes mirror the domain types; all vertex references use the
// side-tagged naming ("x3", "y0"). Wall-clock fields stay out of these
// artifacts so that fixed seeds give byte-identical output.
namespace bramsey {

using json = nlohmann::ordered_json;

inline json to_json(const std::vector<Vertex>& vs) {
    json a = json::array();
    for (const auto& v : vs) a.push_back(v.str());
    return a;
}

inline json vertex_set_json(const Bits& xs, const Bits& ys) {
    json a = json::array();
    xs.for_each([&](int i) { a.push_back(Vertex{Side::X, i}.str()); });
    ys.for_each([&](int i) { a.push_back(Vertex{Side::Y, i}.str()); });
    return a;
}

inline json to_json(const CycleCertificate& c) {
    return json{{"color", c.color}, {"vertices", to_json(c.vertices)}, {"length", c.length()}};
}

inline CycleCertificate cycle_from_json(const json& j) {
    CycleCertificate c;
    c.color = j.at("color").get<int>();
    for (const auto& s : j.at("vertices")) c.vertices.push_back(Vertex::parse(s.get<std::string>()));
    if (j.contains("length") && j["length"].get<int>() != c.length())
        throw Error("certificate length field disagrees with its vertex list");
    return c;
}

inline json to_json(const Matching& m) {
    json edges = json::array();
    for (auto [x, y] : m.edges)
        edges.push_back(json::array({Vertex{Side::X, x}.str(), Vertex{Side::Y, y}.str()}));
    return json{{"edges", edges}, {"saturated", m.saturated()}};
}

inline json to_json(const ConnectedMatchingCertificate& c) {
    return json{{"color", c.color},
                {"component_id", c.component_id},
                {"component", vertex_set_json(c.component.xs, c.component.ys)},
                {"matching", to_json(c.matching)},
                {"saturated", c.saturated}};
}

inline json to_json(const TutteDecomposition& d) {
    return json{{"S", vertex_set_json(d.s_x, d.s_y)},
                {"T", vertex_set_json(d.t_x, d.t_y)},
                {"U", vertex_set_json(d.u_x, d.u_y)},
                {"alpha", d.alpha}};
}

inline json to_json(const Rat& r) {
    return json{{"num", r.num}, {"den", r.den}};
}

inline const char* outcome_name(RamseyOutcome o) {
    switch (o) {
        case RamseyOutcome::AllColoringsHit: return "all_colorings_hit";
        case RamseyOutcome::GoodColoring: return "good_coloring";
        default: return "budget_exhausted";
    }
}

inline json to_json(const RamseyVerdict& v) {
    json j{{"kind", "ramsey_verdict"},
           {"N", v.N},
           {"lengths", v.lengths},
           {"outcome", outcome_name(v.outcome)},
           {"nodes_explored", v.nodes_explored}};
    if (v.good_coloring) j["good_coloring"] = v.good_coloring->to_text();
    if (!v.resume_state.empty()) j["resume_state"] = v.resume_state;
    return j;
}

inline json to_json(const BramseyResult& b) {
    json j{{"kind", "ramsey_value"},
           {"lengths", b.lengths},
           {"lo", b.lo},
           {"nodes_explored", b.nodes_explored}};
    if (b.value) j["value"] = *b.value;
    if (b.hi) j["hi"] = *b.hi;
    if (b.certificate) j["certificate"] = b.certificate->to_text();
    json scan = json::array();
    for (auto [N, o] : b.scan)
        scan.push_back(json{{"N", N}, {"outcome", outcome_name(RamseyOutcome(o))}});
    j["scan"] = scan;
    return j;
}

inline json to_json(const PipelineResult& p) {
    json stages = json::array();
    for (const auto& s : p.stages)
        stages.push_back(json{{"stage", s.stage}, {"ok", s.ok}, {"detail", s.detail}});
    json j{{"kind", "pipeline_run"},
           {"success", p.success},
           {"n", p.n},
           {"k", p.k},
           {"m", p.m},
           {"regular_pairs", p.regular_pairs},
           {"irregular_pairs", p.irregular_pairs},
           {"unknown_pairs", p.unknown_pairs},
           {"saturated_per_color", p.saturated_per_color},
           {"stages", stages}};
    if (p.success) {
        j["color"] = p.color;
        j["target"] = p.target;
        j["walk_t"] = p.walk_t;
        j["step_lengths"] = p.step_lengths;
        j["length_chain_holds"] = p.length_chain_holds;
        j["certificate"] = to_json(p.certificate);
    } else {
        j["failure_stage"] = p.failure_stage;
    }
    return j;
}

} // namespace bramsey

#endif
