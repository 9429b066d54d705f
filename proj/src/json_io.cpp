#include "tvw/json_io.hpp"

#include <nlohmann/json.hpp>

namespace tvw {

using json = nlohmann::json;

namespace {

json rat_to_j(const Rat& r) { return rat_to_string(r); }

Rat rat_from_j(const json& j) {
    if (!j.is_string()) throw ParseError("rational must be a \"num/den\" string");
    try {
        return rat_from_string(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

json point2_to_j(const Point2& p) { return json::array({rat_to_j(p.x), rat_to_j(p.y)}); }

Point2 point2_from_j(const json& j) {
    if (!j.is_array() || j.size() != 2) throw ParseError("point must be a 2-element array");
    return Point2{rat_from_j(j[0]), rat_from_j(j[1])};
}

json parse_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("malformed JSON");
    return j;
}

const json& field(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(std::string("missing field \"") + key + "\"");
    return *it;
}

int int_field(const json& j, const char* key) {
    const json& f = field(j, key);
    if (!f.is_number_integer()) throw ParseError(std::string("field \"") + key + "\" must be an integer");
    return f.get<int>();
}

std::pair<int, int> edge_from_j(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
        throw ParseError("edge must be a 2-element integer array");
    return {j[0].get<int>(), j[1].get<int>()};
}

std::string dump(const json& j, int indent) {
    return j.dump(indent) + "\n";
}

} // namespace

std::string configuration_to_json(const PointConfiguration& c, int indent) {
    json j;
    j["type"] = "configuration";
    j["d"] = c.d;
    json pts = json::array();
    for (const PointD& p : c.points) {
        json row = json::array();
        for (const Rat& x : p) row.push_back(rat_to_j(x));
        pts.push_back(std::move(row));
    }
    j["points"] = std::move(pts);
    return dump(j, indent);
}

PointConfiguration configuration_from_json(const std::string& text) {
    json j = parse_text(text);
    PointConfiguration c;
    c.d = int_field(j, "d");
    const json& pts = field(j, "points");
    if (!pts.is_array()) throw ParseError("\"points\" must be an array");
    for (const json& row : pts) {
        if (!row.is_array()) throw ParseError("each point must be an array of rationals");
        PointD p;
        for (const json& x : row) p.push_back(rat_from_j(x));
        c.points.push_back(std::move(p));
    }
    try {
        validate_config(c);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    return c;
}

std::string drawing_to_json(const Drawing& d, int indent,
                            const std::vector<std::pair<int, int>>& extra_star) {
    json j;
    j["type"] = "drawing";
    j["n"] = d.graph.n;
    json edges = json::array();
    for (const auto& [u, v] : d.graph.edges) edges.push_back(json::array({u, v}));
    j["edges"] = std::move(edges);
    json placement = json::array();
    for (const Point2& p : d.placement) placement.push_back(point2_to_j(p));
    j["placement"] = std::move(placement);
    json routes = json::array();
    for (const auto& [e, poly] : d.routes) {
        json r;
        r["edge"] = json::array({e.first, e.second});
        json pts = json::array();
        for (const Point2& p : poly.pts) pts.push_back(point2_to_j(p));
        r["points"] = std::move(pts);
        routes.push_back(std::move(r));
    }
    j["routes"] = std::move(routes);
    if (!extra_star.empty()) {
        json star = json::array();
        for (const auto& [u, v] : extra_star) star.push_back(json::array({u, v}));
        j["deleted_star"] = std::move(star);
    }
    return dump(j, indent);
}

Drawing drawing_from_json(const std::string& text) {
    json j = parse_text(text);
    int n = int_field(j, "n");
    const json& ej = field(j, "edges");
    if (!ej.is_array()) throw ParseError("\"edges\" must be an array");
    std::vector<std::pair<int, int>> edges;
    for (const json& e : ej) edges.push_back(edge_from_j(e));

    Drawing d;
    try {
        d.graph = make_graph(n, edges);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    const json& pj = field(j, "placement");
    if (!pj.is_array() || static_cast<int>(pj.size()) != n)
        throw ParseError("\"placement\" must list one point per vertex");
    for (const json& p : pj) d.placement.push_back(point2_from_j(p));

    const json& rj = field(j, "routes");
    if (!rj.is_array()) throw ParseError("\"routes\" must be an array");
    for (const json& r : rj) {
        auto e = edge_from_j(field(r, "edge"));
        const json& pts = field(r, "points");
        if (!pts.is_array()) throw ParseError("route \"points\" must be an array");
        Polyline poly;
        for (const json& p : pts) poly.pts.push_back(point2_from_j(p));
        auto key = normalized_edge(e.first, e.second);
        if (e.first > e.second) std::reverse(poly.pts.begin(), poly.pts.end());
        if (d.routes.count(key)) throw ParseError("duplicate route");
        d.routes.emplace(key, std::move(poly));
    }
    try {
        validate_drawing_structure(d);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    return d;
}

std::string tverberg_certificate_to_json(const TverbergCertificate& c, int indent) {
    json j;
    j["type"] = "tverberg_certificate";
    j["partition"] = c.partition;
    json w = json::array();
    for (const Rat& x : c.witness) w.push_back(rat_to_j(x));
    j["witness"] = std::move(w);
    json coeffs = json::array();
    for (const auto& part : c.coefficients) {
        json row = json::array();
        for (const Rat& x : part) row.push_back(rat_to_j(x));
        coeffs.push_back(std::move(row));
    }
    j["coefficients"] = std::move(coeffs);
    return dump(j, indent);
}

TverbergCertificate tverberg_certificate_from_json(const std::string& text) {
    json j = parse_text(text);
    TverbergCertificate c;
    const json& pj = field(j, "partition");
    if (!pj.is_array()) throw ParseError("\"partition\" must be an array");
    for (const json& part : pj) {
        if (!part.is_array()) throw ParseError("each part must be an integer array");
        std::vector<int> p;
        for (const json& x : part) {
            if (!x.is_number_integer()) throw ParseError("labels must be integers");
            p.push_back(x.get<int>());
        }
        c.partition.push_back(std::move(p));
    }
    for (const json& x : field(j, "witness")) c.witness.push_back(rat_from_j(x));
    for (const json& row : field(j, "coefficients")) {
        if (!row.is_array()) throw ParseError("coefficients rows must be arrays");
        std::vector<Rat> r;
        for (const json& x : row) r.push_back(rat_from_j(x));
        c.coefficients.push_back(std::move(r));
    }
    return c;
}

namespace {

const char* face_kind_name(Face::Kind k) {
    switch (k) {
        case Face::Kind::vertex: return "vertex";
        case Face::Kind::edge: return "edge";
        case Face::Kind::path: return "path";
        case Face::Kind::cycle: return "cycle";
    }
    return "vertex";
}

Face::Kind face_kind_from(const std::string& s) {
    if (s == "vertex") return Face::Kind::vertex;
    if (s == "edge") return Face::Kind::edge;
    if (s == "path") return Face::Kind::path;
    if (s == "cycle") return Face::Kind::cycle;
    throw ParseError("unknown face kind \"" + s + "\"");
}

} // namespace

std::string winding_certificate_to_json(const WindingCertificate& c, int indent) {
    json j;
    j["type"] = "winding_certificate";
    json pt;
    pt["where"] = point2_to_j(c.point.where);
    if (c.point.kind == CandidatePoint::Kind::vertex) {
        pt["kind"] = "vertex";
        pt["vertex"] = c.point.vertex;
    } else {
        pt["kind"] = "crossing";
        pt["e1"] = json::array({c.point.e1.first, c.point.e1.second});
        pt["e2"] = json::array({c.point.e2.first, c.point.e2.second});
    }
    j["point"] = std::move(pt);
    json faces = json::array();
    for (const Face& f : c.faces) {
        json fj;
        fj["kind"] = face_kind_name(f.kind);
        fj["vertices"] = f.vertices;
        faces.push_back(std::move(fj));
    }
    j["faces"] = std::move(faces);
    json ev = json::array();
    for (const WindingEvidence& e : c.evidence) {
        json ej;
        if (e.kind == WindingEvidence::Kind::containment) {
            ej["kind"] = "containment";
        } else {
            ej["kind"] = "winding";
            ej["winding"] = e.winding;
        }
        ev.push_back(std::move(ej));
    }
    j["evidence"] = std::move(ev);
    return dump(j, indent);
}

WindingCertificate winding_certificate_from_json(const std::string& text) {
    json j = parse_text(text);
    WindingCertificate c;
    const json& pt = field(j, "point");
    const json& kind = field(pt, "kind");
    if (!kind.is_string()) throw ParseError("point \"kind\" must be a string");
    c.point.where = point2_from_j(field(pt, "where"));
    if (kind.get<std::string>() == "vertex") {
        c.point.kind = CandidatePoint::Kind::vertex;
        c.point.vertex = int_field(pt, "vertex");
    } else if (kind.get<std::string>() == "crossing") {
        c.point.kind = CandidatePoint::Kind::crossing;
        c.point.e1 = edge_from_j(field(pt, "e1"));
        c.point.e2 = edge_from_j(field(pt, "e2"));
    } else {
        throw ParseError("unknown point kind");
    }
    for (const json& fj : field(j, "faces")) {
        Face f;
        const json& fk = field(fj, "kind");
        if (!fk.is_string()) throw ParseError("face \"kind\" must be a string");
        f.kind = face_kind_from(fk.get<std::string>());
        for (const json& v : field(fj, "vertices")) {
            if (!v.is_number_integer()) throw ParseError("face vertices must be integers");
            f.vertices.push_back(v.get<int>());
        }
        c.faces.push_back(std::move(f));
    }
    for (const json& ej : field(j, "evidence")) {
        const json& ek = field(ej, "kind");
        if (!ek.is_string()) throw ParseError("evidence \"kind\" must be a string");
        WindingEvidence e;
        if (ek.get<std::string>() == "containment") {
            e.kind = WindingEvidence::Kind::containment;
        } else if (ek.get<std::string>() == "winding") {
            e.kind = WindingEvidence::Kind::winding;
            e.winding = field(ej, "winding").get<long>();
        } else {
            throw ParseError("unknown evidence kind");
        }
        c.evidence.push_back(e);
    }
    if (c.evidence.size() != c.faces.size())
        throw ParseError("evidence must align with faces");
    return c;
}

std::string sniff_json_kind(const std::string& text) {
    json j = parse_text(text);
    const json& t = field(j, "type");
    if (!t.is_string()) throw ParseError("\"type\" must be a string");
    return t.get<std::string>();
}

} // namespace tvw
