#include "modr/json_io.hpp"

#include <algorithm>

#include "modr/errors.hpp"

namespace modr {

namespace {

const Json& require(const Json& doc, const std::string& key) {
    if (!doc.is_object() || !doc.contains(key))
        throw ArgumentError("missing field: " + key);
    return doc.at(key);
}

Int require_int(const Json& doc, const std::string& key) {
    const Json& v = require(doc, key);
    if (!v.is_number_integer())
        throw ArgumentError("field " + key + " must be an integer");
    return v.get<Int>();
}

std::string require_str(const Json& doc, const std::string& key) {
    const Json& v = require(doc, key);
    if (!v.is_string()) throw ArgumentError("field " + key + " must be a string");
    return v.get<std::string>();
}

std::map<std::string, Int> slope_map(const Json& v) {
    if (!v.is_object()) throw ArgumentError("slope map must be an object");
    std::map<std::string, Int> out;
    for (auto it = v.begin(); it != v.end(); ++it) {
        if (!it.value().is_number_integer())
            throw ArgumentError("slope for edge " + it.key() + " must be an integer");
        out[it.key()] = it.value().get<Int>();
    }
    return out;
}

}  // namespace

Rat parse_rational(const Json& value) {
    if (value.is_number_integer()) return Rat(value.get<Int>());
    if (value.is_string()) {
        const std::string s = value.get<std::string>();
        try {
            auto slash = s.find('/');
            if (slash == std::string::npos) return Rat(BigInt(s));
            return Rat(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
        } catch (const std::exception&) {
            throw ArgumentError("malformed rational: " + s);
        }
    }
    throw ArgumentError("rational must be an integer or a \"p/q\" string");
}

std::string format_rational(const Rat& q) { return q.str(); }

ProblemFile problem_from_json(const Json& doc) {
    ProblemFile pf;
    const Json& contact = require(doc, "contact");
    pf.contact.d = require_int(contact, "d");
    pf.contact.g = require_int(contact, "g");
    for (const Json& leg : require(contact, "legs")) {
        ContactLeg cl;
        cl.s = require_int(leg, "s");
        cl.a = parse_rational(require(leg, "a"));
        pf.contact.legs.push_back(cl);
    }

    const Json& graph = require(doc, "graph");
    for (const Json& v : require(graph, "vertices")) {
        Vertex vx;
        vx.id = require_str(v, "id");
        vx.genus = require_int(v, "genus");
        vx.degree = require_int(v, "degree");
        std::string cone = require_str(v, "cone");
        if (cone == "External")
            vx.cone = Cone::External;
        else if (cone == "Internal")
            vx.cone = Cone::Internal;
        else
            throw ArgumentError("cone must be External or Internal, got " + cone);
        pf.graph.vertices.push_back(std::move(vx));
    }
    for (const Json& e : require(graph, "edges"))
        pf.graph.edges.push_back({require_str(e, "id"), require_str(e, "source"),
                                  require_str(e, "target")});
    if (graph.contains("legs"))
        for (const Json& l : graph.at("legs"))
            pf.graph.legs.push_back({require_str(l, "id"), require_str(l, "vertex"),
                                     require_int(l, "leg_index")});

    pf.r = require_int(doc, "r");
    if (pf.r < 1) throw ArgumentError("r must be positive");
    if (doc.contains("weighting")) pf.weighting = slope_map(doc.at("weighting"));
    if (doc.contains("islope")) pf.islope = slope_map(doc.at("islope"));
    pf.graph.check_structure();
    return pf;
}

ProblemFile parse_problem(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const std::exception& e) {
        throw ArgumentError(std::string("invalid JSON: ") + e.what());
    }
    return problem_from_json(doc);
}

Json problem_to_json(const ProblemFile& pf) {
    Json doc;
    Json legs = Json::array();
    for (const auto& leg : pf.contact.legs)
        legs.push_back({{"s", leg.s}, {"a", format_rational(leg.a)}});
    doc["contact"] = {{"legs", legs}, {"d", pf.contact.d}, {"g", pf.contact.g}};

    Json vertices = Json::array();
    for (const auto& v : pf.graph.vertices)
        vertices.push_back({{"id", v.id},
                            {"genus", v.genus},
                            {"degree", v.degree},
                            {"cone", v.cone == Cone::External ? "External" : "Internal"}});
    Json edges = Json::array();
    for (const auto& e : pf.graph.edges)
        edges.push_back({{"id", e.id}, {"source", e.source}, {"target", e.target}});
    Json glegs = Json::array();
    for (const auto& l : pf.graph.legs)
        glegs.push_back({{"id", l.id}, {"vertex", l.vertex}, {"leg_index", l.leg_index}});
    doc["graph"] = {{"vertices", vertices}, {"edges", edges}, {"legs", glegs}};
    doc["r"] = pf.r;
    if (pf.weighting) {
        Json w = Json::object();
        std::vector<std::string> ids;
        for (const auto& [id, m] : *pf.weighting) ids.push_back(id);
        std::sort(ids.begin(), ids.end());
        for (const auto& id : ids) w[id] = pf.weighting->at(id);
        doc["weighting"] = w;
    }
    if (pf.islope) {
        Json w = Json::object();
        for (const auto& [id, m] : *pf.islope) w[id] = m;
        doc["islope"] = w;
    }
    return doc;
}

Json weighting_to_json(const ModRType& T) {
    Json w = Json::object();
    std::vector<std::string> ids;
    for (const auto& e : T.graph.edges) ids.push_back(e.id);
    std::sort(ids.begin(), ids.end());
    for (const auto& id : ids)
        w[id] = rep_mod(T.slope.count(id) ? T.slope.at(id) : 0, T.r);
    return w;
}

ModRType problem_to_type(const ProblemFile& pf) {
    if (!pf.weighting) throw ArgumentError("problem file has no weighting");
    ModRType T;
    T.graph = pf.graph;
    T.contact = pf.contact;
    T.r = pf.r;
    for (const auto& e : pf.graph.edges) {
        if (!pf.weighting->count(e.id))
            throw ArgumentError("weighting misses edge " + e.id);
        T.slope[e.id] = rep_mod(pf.weighting->at(e.id), pf.r);
    }
    return T;
}

ZhatType problem_to_zhat(const ProblemFile& pf) {
    if (!pf.islope) throw ArgumentError("problem file has no islope");
    ZhatType Z;
    Z.graph = pf.graph;
    Z.contact = pf.contact;
    for (const auto& e : pf.graph.edges) {
        if (!pf.islope->count(e.id))
            throw ArgumentError("islope misses edge " + e.id);
        Z.islope[e.id] = pf.islope->at(e.id);
    }
    return Z;
}

Json report_to_json(const ValidationReport& rep) {
    Json items = Json::array();
    for (const auto& it : rep.items) {
        Json j = {{"check", it.name}, {"ok", it.ok}};
        if (!it.detail.empty()) j["detail"] = it.detail;
        items.push_back(j);
    }
    return {{"items", items}, {"ok", rep.ok()}, {"partial", rep.partial}};
}

}  // namespace modr
