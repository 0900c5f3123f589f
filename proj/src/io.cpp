#include "covario/io.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

namespace covario {

using nlohmann::json;

namespace {

json vec_to_json(const Vec& v) {
    json a = json::array();
    for (int i = 0; i < v.size(); ++i) a.push_back(v[i]);
    return a;
}

Vec vec_from_json(const json& j, int dim) {
    if (!j.is_array() || static_cast<int>(j.size()) != dim)
        throw std::invalid_argument("expected an array of " + std::to_string(dim) + " numbers");
    Vec v(dim);
    for (int i = 0; i < dim; ++i) v[i] = j[i].get<double>();
    return v;
}

json smoothness_to_json(const Smoothness& s) {
    if (s.kind == Smoothness::Polytope) return "polytope";
    return json{{"strictly_convex_approx", s.approx_order}};
}

Smoothness smoothness_from_json(const json& j) {
    if (j.is_string() && j.get<std::string>() == "polytope") return Smoothness::polytope();
    if (j.is_object() && j.contains("strictly_convex_approx"))
        return Smoothness::strictly_convex(j["strictly_convex_approx"].get<int>());
    throw std::invalid_argument("invalid smoothness tag");
}

ConvexBody body_from_generator(int dim, const json& g, Smoothness smoothness) {
    const std::string name = g.at("name").get<std::string>();
    if (name == "box") {
        return make_box(vec_from_json(g.at("lo"), dim), vec_from_json(g.at("hi"), dim));
    }
    if (name == "regular_polygon" || name == "disk_approx") {
        const int k = g.at("k").get<int>();
        const double radius = g.at("radius").get<double>();
        const Vec center = g.contains("center") ? vec_from_json(g.at("center"), 2) : vec2(0, 0);
        return name == "disk_approx" ? make_disk_approx(k, radius, center)
                                     : make_regular_polygon(k, radius, center);
    }
    if (name == "simplex") {
        const double scale = g.contains("scale") ? g.at("scale").get<double>() : 1.0;
        return make_simplex(dim, scale);
    }
    if (name == "cone_fixture") {
        const double size = g.contains("size") ? g.at("size").get<double>() : 1.0;
        const double o = g.contains("orientation") ? g.at("orientation").get<double>() : 1.0;
        std::vector<Vec> pts = {vec2(0, 0), vec2(o * 8 * size, 8 * size),
                                vec2(o * 8 * size, -8 * size)};
        return ConvexBody::from_points(2, pts, smoothness);
    }
    if (name == "cylinder_fixture") {
        const double hl = g.contains("half_length") ? g.at("half_length").get<double>() : 5.0;
        const double height = g.contains("height") ? g.at("height").get<double>() : 1.0;
        return make_box(vec2(-hl, 0), vec2(hl, height));
    }
    throw std::invalid_argument("unknown generator: " + name);
}

}  // namespace

json body_to_json(const ConvexBody& body) {
    json data = json::array();
    for (const Vec& v : body.vertices()) data.push_back(vec_to_json(v));
    return json{{"dim", body.dim()},
                {"kind", "vertices"},
                {"data", data},
                {"smoothness", smoothness_to_json(body.smoothness())}};
}

ConvexBody body_from_json(const json& j) {
    const int dim = j.at("dim").get<int>();
    const std::string kind = j.at("kind").get<std::string>();
    const Smoothness smoothness =
        j.contains("smoothness") ? smoothness_from_json(j["smoothness"]) : Smoothness::polytope();

    if (kind == "vertices") {
        std::vector<Vec> pts;
        for (const json& p : j.at("data")) pts.push_back(vec_from_json(p, dim));
        return ConvexBody::from_points(dim, pts, smoothness);
    }
    if (kind == "halfspaces") {
        std::vector<Halfspace> hs;
        for (const json& h : j.at("data"))
            hs.push_back({vec_from_json(h.at("normal"), dim), h.at("offset").get<double>()});
        return ConvexBody::from_halfspaces(dim, hs, smoothness);
    }
    if (kind == "generator") return body_from_generator(dim, j.at("data"), smoothness);
    throw std::invalid_argument("unknown body kind: " + kind);
}

ConvexBody load_body(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open body file: " + path);
    json j;
    in >> j;
    return body_from_json(j);
}

void save_body(const ConvexBody& body, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write body file: " + path);
    out << body_to_json(body).dump(2) << "\n";
}

Vec parse_vec(const std::string& csv, int expected_dim) {
    std::vector<double> vals;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t pos = 0;
        const double v = std::stod(tok, &pos);
        while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
        if (pos != tok.size()) throw std::invalid_argument("malformed vector: " + csv);
        vals.push_back(v);
    }
    if (vals.size() != 2 && vals.size() != 3)
        throw std::invalid_argument("vector must have 2 or 3 components: " + csv);
    if (expected_dim > 0 && static_cast<int>(vals.size()) != expected_dim)
        throw std::invalid_argument("dimension mismatch");
    Vec v(static_cast<int>(vals.size()));
    for (size_t i = 0; i < vals.size(); ++i) v[i] = vals[i];
    return v;
}

json to_json(const ConcavityReport& rep) {
    return json{{"classification", to_string(rep.classification)},
                {"slope_beta", rep.slope_beta},
                {"max_second_difference", rep.max_second_difference},
                {"min_second_difference", rep.min_second_difference},
                {"strictness_margin", rep.strictness_margin},
                {"tolerance", rep.tol},
                {"in_support_samples", rep.in_support_samples}};
}

json to_json(const HomothetyWitness& w) {
    return json{{"lambda", w.lambda},
                {"v", vec_to_json(w.v)},
                {"t_plus", w.t_plus},
                {"max_residual", w.max_residual}};
}

json to_json(const ReconstructionReport& rep) {
    json per_t = json::array();
    for (const auto& [t, sd] : rep.per_t_symdiff) per_t.push_back(json{{"t", t}, {"symdiff", sd}});
    return json{{"kind", rep.kind == ReconstructionReport::Cylinder ? "Cylinder" : "Cone"},
                {"max_symdiff", rep.max_symdiff},
                {"per_t_symdiff", per_t}};
}

json to_json(const MaxResult& res) {
    return json{{"argmax", vec_to_json(res.argmax)},
                {"value", res.value},
                {"certificate", to_string(res.certificate)},
                {"restarts_agreed", res.restarts_agreed},
                {"spread", res.spread}};
}

json to_json(const LevelSetReport& rep) {
    return json{{"h", rep.h},
                {"chords", rep.chords},
                {"max_value", rep.max_value},
                {"argmax", vec_to_json(rep.argmax)},
                {"min_midpoint_excess", rep.min_midpoint_excess},
                {"plateau_detected", rep.plateau_detected}};
}

void write_profile_csv(std::ostream& out, const SegmentProfile& profile) {
    out << "t,g,g_root\n";
    out.precision(17);
    for (const SegmentSample& s : profile.samples)
        out << s.t << "," << s.g << "," << s.g_root << "\n";
}

}  // namespace covario
