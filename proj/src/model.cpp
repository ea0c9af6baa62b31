#include "tubeways/model.hpp"

#include "tubeways/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>

namespace tubeways {

using nlohmann::json;

Tube tube_from_segments(const VSeg& left, const VSeg& right) {
    if (left.x == right.x)
        raise(Errc::SameX, "tube segments share x = " + left.x.to_string());
    if (left.x > right.x)
        return tube_from_segments(right, left);
    if (left.y_lo > left.y_hi || right.y_lo > right.y_hi)
        raise(Errc::ParseError, "segment with y_lo > y_hi");
    if (left.is_point() && right.is_point())
        raise(Errc::DegenerateTube, "both segments are points; the hull has no area");
    Polygon region;
    region.push_back(Point{left.x, left.y_lo});
    region.push_back(Point{right.x, right.y_lo});
    if (!right.is_point())
        region.push_back(Point{right.x, right.y_hi});
    if (!left.is_point())
        region.push_back(Point{left.x, left.y_hi});
    return Tube{left, right, std::move(region)};
}

namespace {

Rational rational_field(const json& j, const char* key) {
    if (!j.contains(key))
        raise(Errc::ParseError, std::string("missing field: ") + key);
    const json& v = j.at(key);
    if (!v.is_string())
        raise(Errc::ParseError, std::string("rational fields must be strings (\"p\" or \"p/q\"): ") + key);
    return Rational::from_string(v.get<std::string>());
}

json rational_json(const Rational& r) { return json(r.to_string()); }

VSeg parse_vseg(const json& j) {
    VSeg s{rational_field(j, "x"), rational_field(j, "ylo"), rational_field(j, "yhi")};
    if (s.y_lo > s.y_hi)
        raise(Errc::ParseError, "segment with ylo > yhi");
    return s;
}

json vseg_json(const VSeg& s) {
    return json{{"x", rational_json(s.x)}, {"ylo", rational_json(s.y_lo)}, {"yhi", rational_json(s.y_hi)}};
}

} // namespace

Instance parse_instance(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        raise(Errc::ParseError, e.what());
    }
    if (!doc.is_object() || !doc.contains("tubes") || !doc["tubes"].is_array())
        raise(Errc::ParseError, "instance document needs a \"tubes\" array");
    Instance inst;
    for (const json& jt : doc["tubes"]) {
        if (!jt.contains("left") || !jt.contains("right"))
            raise(Errc::ParseError, "tube needs \"left\" and \"right\" segments");
        inst.tubes.push_back(tube_from_segments(parse_vseg(jt["left"]), parse_vseg(jt["right"])));
    }
    std::set<Rational> xs;
    for (const Tube& t : inst.tubes) {
        for (const Rational& x : {t.left.x, t.right.x}) {
            if (!xs.insert(x).second)
                raise(Errc::GeneralPositionViolation, "duplicate segment x-coordinate " + x.to_string());
        }
    }
    return inst;
}

std::string serialize_instance(const Instance& inst) {
    json tubes = json::array();
    for (const Tube& t : inst.tubes)
        tubes.push_back(json{{"left", vseg_json(t.left)}, {"right", vseg_json(t.right)}});
    return json{{"tubes", tubes}}.dump();
}

Solution parse_solution(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        raise(Errc::ParseError, e.what());
    }
    if (!doc.is_object() || !doc.contains("paths") || !doc["paths"].is_array())
        raise(Errc::ParseError, "solution document needs a \"paths\" array");
    Solution sol;
    for (const json& jp : doc["paths"]) {
        if (!jp.is_array())
            raise(Errc::ParseError, "each path must be an array of [x, y] pairs");
        Polyline line;
        for (const json& jv : jp) {
            if (!jv.is_array() || jv.size() != 2 || !jv[0].is_string() || !jv[1].is_string())
                raise(Errc::ParseError, "path vertices are [\"x\", \"y\"] string pairs");
            line.vertices.push_back(Point{Rational::from_string(jv[0].get<std::string>()),
                                          Rational::from_string(jv[1].get<std::string>())});
        }
        sol.paths.push_back(std::move(line));
    }
    return sol;
}

std::string serialize_solution(const Solution& sol) {
    json paths = json::array();
    for (const Polyline& line : sol.paths) {
        json jp = json::array();
        for (const Point& p : line.vertices)
            jp.push_back(json::array({p.x.to_string(), p.y.to_string()}));
        paths.push_back(jp);
    }
    return json{{"paths", paths}}.dump();
}

const char* path_mode_name(PathMode m) {
    switch (m) {
    case PathMode::Straight: return "straight";
    case PathMode::Monotone: return "monotone";
    case PathMode::Arbitrary: return "arbitrary";
    }
    return "?";
}

namespace {

bool point_on_vseg(const Point& p, const VSeg& s) {
    return p.x == s.x && s.y_lo <= p.y && p.y <= s.y_hi;
}

// Pairwise disjointness of two polylines as closed point sets. Distinguishes
// a proper crossing from a mere touch so the report can say which happened.
void check_pair(const Polyline& pa, const Polyline& pb, int ia, int ib, ValidationReport& rep) {
    bool crossing = false, touching = false;
    for (std::size_t i = 0; i + 1 < pa.vertices.size() && !crossing; ++i) {
        Segment sa{pa.vertices[i], pa.vertices[i + 1]};
        for (std::size_t j = 0; j + 1 < pb.vertices.size(); ++j) {
            Segment sb{pb.vertices[j], pb.vertices[j + 1]};
            if (segments_properly_cross(sa, sb)) {
                crossing = true;
                break;
            }
            if (segments_intersect_closed(sa, sb))
                touching = true;
        }
    }
    if (crossing)
        rep.violations.push_back({Violation::Kind::PathsCross, ia, ib, "paths properly cross"});
    else if (touching)
        rep.violations.push_back({Violation::Kind::PathsTouch, ia, ib, "paths share a point"});
}

} // namespace

ValidationReport validate_solution(const Instance& inst, const Solution& sol, PathMode mode) {
    ValidationReport rep;
    if (sol.paths.size() != inst.tubes.size()) {
        rep.violations.push_back({Violation::Kind::PathCount, -1, -1,
                                  "expected " + std::to_string(inst.tubes.size()) + " paths, got " +
                                      std::to_string(sol.paths.size())});
        return rep;
    }
    for (std::size_t i = 0; i < sol.paths.size(); ++i) {
        const Polyline& line = sol.paths[i];
        const Tube& tube = inst.tubes[i];
        int ii = static_cast<int>(i);
        if (line.vertices.size() < 2) {
            rep.violations.push_back({Violation::Kind::TooFewVertices, ii, -1, "path needs >= 2 vertices"});
            continue;
        }
        for (std::size_t k = 0; k + 1 < line.vertices.size(); ++k) {
            if (line.vertices[k] == line.vertices[k + 1]) {
                rep.violations.push_back({Violation::Kind::RepeatedVertex, ii, -1,
                                          "vertex " + std::to_string(k) + " repeats"});
            }
        }
        if (mode == PathMode::Straight && line.vertices.size() != 2)
            rep.violations.push_back({Violation::Kind::WrongVertexCount, ii, -1,
                                      "straight mode requires exactly 2 vertices"});
        if (!point_on_vseg(line.vertices.front(), tube.left))
            rep.violations.push_back({Violation::Kind::EndpointOffSegment, ii, -1, "first vertex off left segment"});
        if (!point_on_vseg(line.vertices.back(), tube.right))
            rep.violations.push_back({Violation::Kind::EndpointOffSegment, ii, -1, "last vertex off right segment"});
        if (mode == PathMode::Monotone) {
            for (std::size_t k = 0; k + 1 < line.vertices.size(); ++k) {
                if (line.vertices[k + 1].x < line.vertices[k].x) {
                    rep.violations.push_back({Violation::Kind::NotMonotone, ii, -1,
                                              "x decreases at vertex " + std::to_string(k + 1)});
                    break;
                }
            }
        }
        // containment: the region is convex, so vertex containment suffices
        for (std::size_t k = 0; k < line.vertices.size(); ++k) {
            if (point_in_polygon(line.vertices[k], tube.region) == Containment::Outside) {
                rep.violations.push_back({Violation::Kind::OutsideTube, ii, -1,
                                          "vertex " + std::to_string(k) + " outside the tube"});
            }
        }
    }
    for (std::size_t i = 0; i < sol.paths.size(); ++i)
        for (std::size_t j = i + 1; j < sol.paths.size(); ++j)
            check_pair(sol.paths[i], sol.paths[j], static_cast<int>(i), static_cast<int>(j), rep);
    return rep;
}

void check_instance_general_position(const Instance& inst) {
    for (std::size_t i = 0; i < inst.tubes.size(); ++i)
        for (std::size_t j = i + 1; j < inst.tubes.size(); ++j)
            check_pair_general_position(inst.tubes[i].region, inst.tubes[j].region);
}

std::string violation_to_string(const Violation& v) {
    std::string who;
    if (v.path_a >= 0)
        who = "path " + std::to_string(v.path_a);
    if (v.path_b >= 0)
        who += " vs " + std::to_string(v.path_b);
    const char* kind = "";
    switch (v.kind) {
    case Violation::Kind::PathCount: kind = "path-count"; break;
    case Violation::Kind::TooFewVertices: kind = "too-few-vertices"; break;
    case Violation::Kind::RepeatedVertex: kind = "repeated-vertex"; break;
    case Violation::Kind::EndpointOffSegment: kind = "endpoint-off-segment"; break;
    case Violation::Kind::OutsideTube: kind = "outside-tube"; break;
    case Violation::Kind::WrongVertexCount: kind = "wrong-vertex-count"; break;
    case Violation::Kind::NotMonotone: kind = "not-monotone"; break;
    case Violation::Kind::PathsCross: kind = "paths-cross"; break;
    case Violation::Kind::PathsTouch: kind = "paths-touch"; break;
    }
    return std::string(kind) + (who.empty() ? "" : " [" + who + "]") + ": " + v.detail;
}

} // namespace tubeways
