// document.hpp -- JSON serialization: triplet documents, validation reports,
// enumeration records
//
// Rationals travel as "p" / "p/q" strings, never as floats.  Documents
// round-trip losslessly through parse -> serialize.
#ifndef DELPEZZO_DOCUMENT_HPP
#define DELPEZZO_DOCUMENT_HPP

#include <json.hpp>

#include "delpezzo/classify.hpp"

namespace delpezzo {

using json = nlohmann::ordered_json;

struct DocumentError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace doc {

inline json rational_to_json(const Rational& r) { return r.str(); }

inline Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        const auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return Rational(std::stoll(s));
            return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
        } catch (const std::exception&) {
            throw DocumentError("malformed rational: " + s);
        }
    }
    throw DocumentError("rational must be an integer or a \"p/q\" string");
}

inline json surface_to_json(const SurfaceModel& s) {
    json j;
    j["kind"] = s.is_p2() ? "P2" : "F";
    if (!s.is_p2()) j["n"] = s.n;
    return j;
}

inline SurfaceModel surface_from_json(const json& j) {
    if (!j.contains("kind")) throw DocumentError("surface needs a kind");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "P2") return SurfaceModel::p2();
    if (kind == "F") {
        if (!j.contains("n")) throw DocumentError("Hirzebruch surface needs n");
        return SurfaceModel::fn(j.at("n").get<int>());
    }
    throw DocumentError("unknown surface kind: " + kind);
}

inline json role_to_json(const CurveRole& r, const SurfaceModel& s) {
    json j;
    switch (r.kind) {
        case CurveRole::Kind::Line: j["role"] = "line"; break;
        case CurveRole::Kind::MinimalSection: j["role"] = "sigma"; break;
        case CurveRole::Kind::Fiber: j["role"] = "fiber"; break;
        case CurveRole::Kind::SectionAtInfinity: j["role"] = "sigma_inf"; break;
        case CurveRole::Kind::IrreducibleMember: {
            j["role"] = "member";
            json cls;
            if (s.is_p2()) {
                cls["line"] = rational_to_json(r.member_class.c0);
            } else {
                cls["sigma"] = rational_to_json(r.member_class.c0);
                cls["fiber"] = rational_to_json(r.member_class.c1);
            }
            j["class"] = cls;
            break;
        }
    }
    return j;
}

}  // namespace doc

inline json triplet_to_json(const TripletConfig& t) {
    json j;
    j["index"] = {{"a", t.index.a}, {"b", t.index.b}};
    j["surface"] = doc::surface_to_json(t.config.surface);
    json comps = json::array();
    for (const auto& c : t.config.components) {
        json e = doc::role_to_json(c.role, t.config.surface);
        e["name"] = c.role.str();
        e["coeff"] = doc::rational_to_json(c.coeff);
        comps.push_back(e);
    }
    j["components"] = comps;
    json pts = json::array();
    for (const auto& p : t.delta) {
        json e;
        switch (p.location) {
            case SubschemePoint::Location::OnCurve:
                e["location"] = "on";
                e["components"] = {t.config.components[p.comp_a].role.str()};
                break;
            case SubschemePoint::Location::AtIntersection:
                e["location"] = "node";
                e["components"] = {t.config.components[p.comp_a].role.str(),
                                   t.config.components[p.comp_b].role.str()};
                break;
            case SubschemePoint::Location::GenericOnSurface:
                e["location"] = "generic";
                e["components"] = json::array();
                break;
        }
        e["degree"] = p.degree;
        json contacts;
        for (auto [c, l] : p.contacts) contacts[t.config.components[c].role.str()] = l;
        e["contacts"] = contacts;
        pts.push_back(e);
    }
    j["points"] = pts;
    return j;
}

inline TripletConfig triplet_from_json(const json& j) {
    try {
        const MultiIndex idx(j.at("index").at("a").get<std::int64_t>(),
                             j.at("index").at("b").get<std::int64_t>());
        const SurfaceModel surface = doc::surface_from_json(j.at("surface"));

        std::vector<WeightedComponent> comps;
        std::vector<std::string> names;
        int fiber_id = 0, line_id = 0;
        for (const auto& e : j.at("components")) {
            const std::string role = e.at("role").get<std::string>();
            CurveRole r;
            if (role == "line")
                r = CurveRole::line(line_id++);
            else if (role == "sigma")
                r = CurveRole::minimal_section();
            else if (role == "fiber")
                r = CurveRole::fiber(fiber_id++);
            else if (role == "sigma_inf")
                r = CurveRole::section_at_infinity();
            else if (role == "member") {
                const auto& cls = e.at("class");
                DivisorClass d =
                    surface.is_p2()
                        ? DivisorClass::line(surface, doc::rational_from_json(cls.at("line")))
                        : DivisorClass::on_fn(surface, doc::rational_from_json(cls.at("sigma")),
                                              doc::rational_from_json(cls.at("fiber")));
                r = CurveRole::member(d);
            } else {
                throw DocumentError("unknown role: " + role);
            }
            comps.push_back({r, doc::rational_from_json(e.at("coeff"))});
            names.push_back(e.contains("name") ? e.at("name").get<std::string>() : r.str());
        }
        WeightedConfig cfg(surface, comps);

        auto find_comp = [&](const std::string& name) {
            for (size_t i = 0; i < names.size(); ++i)
                if (names[i] == name) return static_cast<int>(i);
            for (size_t i = 0; i < comps.size(); ++i)
                if (comps[i].role.str() == name) return static_cast<int>(i);
            throw DocumentError("point references unknown component: " + name);
        };

        std::vector<SubschemePoint> pts;
        for (const auto& e : j.at("points")) {
            const std::string loc = e.at("location").get<std::string>();
            const int degree = e.at("degree").get<int>();
            if (loc == "generic") {
                pts.push_back(SubschemePoint::generic(degree));
            } else if (loc == "on") {
                const std::string cname = e.at("components").at(0).get<std::string>();
                const int c = find_comp(cname);
                int contact = degree;
                if (e.contains("contacts") && !e.at("contacts").empty()) {
                    const auto& cm = e.at("contacts");
                    if (cm.size() != 1 || !(cm.contains(cname) || cm.contains(names[c])))
                        throw DocumentError(
                            "interior point contacts must name exactly its component");
                    contact = cm.contains(cname) ? cm.at(cname).get<int>()
                                                 : cm.at(names[c]).get<int>();
                }
                pts.push_back(SubschemePoint::on_curve(c, degree, contact));
            } else if (loc == "node") {
                const int ca = find_comp(e.at("components").at(0).get<std::string>());
                const int cb = find_comp(e.at("components").at(1).get<std::string>());
                const auto& contacts = e.at("contacts");
                const int la = contacts.at(names[ca]).get<int>();
                const int lb = contacts.at(names[cb]).get<int>();
                pts.push_back(SubschemePoint::at_intersection(ca, cb, degree, la, lb));
            } else {
                throw DocumentError("unknown point location: " + loc);
            }
        }
        return TripletConfig(idx, cfg, pts);
    } catch (const json::exception& e) {
        throw DocumentError(std::string("malformed document: ") + e.what());
    }
}

inline json report_to_json(const ValidationReport& rep) {
    json j;
    j["valid"] = rep.valid;
    if (rep.fundamental) {
        json L;
        if (rep.fundamental->surface.is_p2()) {
            L["line"] = doc::rational_to_json(rep.fundamental->c0);
        } else {
            L["sigma"] = doc::rational_to_json(rep.fundamental->c0);
            L["fiber"] = doc::rational_to_json(rep.fundamental->c1);
        }
        j["fundamental_divisor"] = L;
    }
    json conds = json::array();
    for (const auto& c : rep.conditions) {
        json e;
        e["id"] = c.id;
        e["ok"] = c.ok;
        e["rule"] = c.rule;
        if (!c.detail.empty()) e["detail"] = c.detail;
        conds.push_back(e);
    }
    j["conditions"] = conds;
    return j;
}

inline json graph_to_json(const DualGraph& g) {
    json j;
    json vs = json::array();
    for (size_t i = 0; i < g.vertices.size(); ++i)
        vs.push_back({{"id", i},
                      {"self_int", g.vertices[i].self_int},
                      {"curve", g.vertices[i].label}});
    j["vertices"] = vs;
    json es = json::array();
    for (auto [a, b] : g.edges) es.push_back({a, b});
    j["edges"] = es;
    return j;
}

inline json record_to_json(const TypeRecord& r) {
    json j;
    j["label"] = r.label;
    json params = json::object();
    if (r.param_kind != 0) params[std::string(1, r.param_kind)] = r.param;
    j["family_params"] = params;
    j["index"] = {{"a", r.index.a}, {"b", r.index.b}};
    j["index_value"] = r.index.ratio().str();
    j["cartier_multiplier"] = r.multiplier;
    j["classified"] = r.classified;
    j["triplet"] = triplet_to_json(r.rep);
    j["dual_graph"] = graph_to_json(r.graph);
    return j;
}

}  // namespace delpezzo

#endif
