#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "apollonian.hpp"

namespace polypack::io {

using json = nlohmann::json;

// ---------------------------------------------------------------------------------------
// Scalars: exact values are "p/q" or ["a", "b"] meaning a + b sqrt(field); floats are plain numbers.

inline std::int64_t field_of(const Exact& x) { return x.m(); }
inline std::int64_t field_of(double) { return 0; }

template <class S>
std::int64_t field_of(const Vec<S>& v) {
    std::int64_t m = 0;
    for (auto& x : v)
        if (auto f = field_of(x)) {
            if (m && m != f) throw field_error("coordinates mix two quadratic fields");
            m = f;
        }
    return m;
}

template <class S>
json to_json(const S& x) {
    if constexpr (std::is_same_v<S, double>)
        return x;
    else if (x.is_rational())
        return x.a().str();
    else
        return json::array({x.a().str(), x.b().str()});
}

inline Rational parse_rational(const json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_number_float()) {
        double v = j.get<double>();
        if (v != std::floor(v) || std::abs(v) > 9e15) throw std::invalid_argument("exact mode needs rational values, got a float");
        return Rational(static_cast<std::int64_t>(v));
    }
    throw std::invalid_argument("expected a rational, got " + j.dump());
}

template <class S>
S scalar_from_json(const json& j, std::int64_t field) {
    if constexpr (std::is_same_v<S, double>) {
        if (j.is_number()) return j.get<double>();
        auto a = j.is_array() ? parse_rational(j.at(0)) : parse_rational(j);
        double v = a.to_double();
        if (j.is_array() && j.size() > 1) v += parse_rational(j.at(1)).to_double() * std::sqrt(double(field));
        return v;
    } else {
        if (!j.is_array()) return Exact(parse_rational(j));
        if (j.size() == 1) return Exact(parse_rational(j.at(0)));
        if (j.size() != 2) throw std::invalid_argument("exact scalar must be [a, b]");
        auto b = parse_rational(j.at(1));
        if (b.is_zero()) return Exact(parse_rational(j.at(0)));
        if (field <= 1) throw field_error("irrational coordinate but no field given");
        return Exact(parse_rational(j.at(0)), b, field);
    }
}

template <class S>
Vec<S> vec_from_json(const json& j, std::int64_t field) {
    Vec<S> v;
    for (auto& e : j) v.push_back(scalar_from_json<S>(e, field));
    return v;
}

template <class S>
json to_json(const Vec<S>& v) {
    json a = json::array();
    for (auto& x : v) a.push_back(to_json(x));
    return a;
}

// ---------------------------------------------------------------------------------------
// Balls and packings

template <class S>
json to_json(const Ball<S>& b) {
    json j{{"dim", b.dim()}, {"coords", to_json(b.x)}};
    if constexpr (!std::is_same_v<S, double>) j["field"] = field_of(b.x);
    return j;
}

// Accepts {"coords": …}, {"center": …, "radius": r[, "exterior": true]} or {"normal": …, "offset": δ}.
template <class S>
Ball<S> ball_from_json(const json& j, std::int64_t field = 0) {
    field = j.value("field", field);
    Ball<S> b;
    if (j.contains("coords")) {
        b = Ball<S>(vec_from_json<S>(j.at("coords"), field));
    } else if (j.contains("center")) {
        b = ball_from_sphere(vec_from_json<S>(j.at("center"), field), scalar_from_json<S>(j.at("radius"), field),
                             j.value("exterior", false));
    } else if (j.contains("normal")) {
        b = ball_from_halfspace(vec_from_json<S>(j.at("normal"), field), scalar_from_json<S>(j.at("offset"), field));
    } else {
        throw std::invalid_argument("ball needs coords, center/radius or normal/offset");
    }
    if (j.contains("dim") && j.at("dim").get<std::size_t>() != b.dim()) throw std::invalid_argument("ball dimension mismatch");
    if (!is_unit(b)) throw std::invalid_argument("ball does not have unit self-product");
    return b;
}

template <class S>
json to_json(const Packing<S>& p) {
    json balls = json::array();
    std::int64_t m = 0;
    for (auto& b : p.balls) {
        balls.push_back(json{{"coords", to_json(b.x)}, {"curvature", to_json(curvature(b))}});
        if (auto f = field_of(b.x)) m = f;
    }
    json j{{"dim", p.dim()}, {"balls", balls}};
    if constexpr (!std::is_same_v<S, double>) j["field"] = m;
    if (!p.tag.empty()) j["tag"] = p.tag;
    if (!p.facets.empty()) j["facets"] = p.facets;
    return j;
}

template <class S>
Packing<S> packing_from_json(const json& j, std::int64_t field = 0) {
    field = j.value("field", field);
    std::vector<Ball<S>> balls;
    for (auto& b : j.at("balls")) balls.push_back(ball_from_json<S>(b, field));
    if (!is_packing(balls)) throw std::invalid_argument("balls overlap: not a packing");
    auto p = make_packing(std::move(balls), j.value("tag", std::string{}));
    if (j.contains("facets")) p.facets = j.at("facets").get<std::vector<std::vector<int>>>();
    return p;
}

// ---------------------------------------------------------------------------------------
// Orbit reports and censuses

template <class S>
std::string curvature_key(const S& k) {
    return num::str(k);
}

template <class S>
json census_json(const Census<S>& c) {
    json counts = json::object();
    for (auto& [k, n] : c.counts) counts[curvature_key(k)] = n;
    return counts;
}

template <class S>
json to_json(const OrbitReport<S>& r, bool with_balls = true) {
    json seed = json::array();
    for (auto& b : r.seed) seed.push_back(to_json(b.x));
    json bound{{"depth", r.bound.depth}};
    bound["max_curvature"] = r.bound.max_curvature ? json(*r.bound.max_curvature) : json(nullptr);
    json j{{"seed", seed}, {"bound", bound}, {"engine", r.engine}, {"size", r.size()}, {"per_depth", r.per_depth}};
    if constexpr (!std::is_same_v<S, double>) {
        std::int64_t m = 0;
        for (auto& b : r.seed)
            if (auto f = field_of(b.x)) m = f;
        j["field"] = m;
    }
    if (with_balls) {
        json balls = json::array();
        for (std::size_t i = 0; i < r.size(); ++i)
            balls.push_back(json{{"coords", to_json(r.ball(i).x)},
                                 {"depth", r.entries[i].depth},
                                 {"curvature", to_json(r.entries[i].curvature)}});
        j["balls"] = balls;
    }
    double lo = -std::numeric_limits<double>::infinity(), hi = std::numeric_limits<double>::infinity();
    auto c = curvature_census(r, lo, hi);
    j["census"] = census_json(c);
    j["all_integral"] = r.all_integral();
    return j;
}

template <class S>
std::string census_csv(const Census<S>& c) {
    std::ostringstream os;
    os << "curvature,count\n";
    for (auto& [k, n] : c.counts) os << num::str(k) << ',' << n << '\n';
    return os.str();
}

// ---------------------------------------------------------------------------------------
// SVG rendering

struct RenderSpec {
    double cx = 0, cy = 0, half_width = 2;  // viewport in Euclidean units
    int pixels = 800;
    double max_curvature = 1e9;  // balls beyond this are skipped
    double label_below = 0;      // label curvatures up to this value; 0 disables labels
    bool depth_colors = false;
    std::string stroke = "#202020";
    std::string fill = "#dfe8f4";
};

namespace detail {

inline std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    std::string s = buf;
    if (s == "-0.0000") s = "0.0000";
    return s;
}

inline const char* depth_color(int depth) {
    static const char* palette[] = {"#f4d35e", "#ee964b", "#f95738", "#0d3b66", "#3c6e71", "#7b2cbf", "#2a9d8f", "#8d99ae"};
    return palette[std::min(depth, 7)];
}

// Sutherland-Hodgman clip of the viewport square against n.p >= off.
inline std::vector<std::pair<double, double>> clip_halfplane(const RenderSpec& s, double nx, double ny, double off) {
    double w = s.half_width;
    std::vector<std::pair<double, double>> poly{{s.cx - w, s.cy - w}, {s.cx + w, s.cy - w}, {s.cx + w, s.cy + w}, {s.cx - w, s.cy + w}};
    std::vector<std::pair<double, double>> out;
    auto inside = [&](std::pair<double, double> p) { return nx * p.first + ny * p.second >= off; };
    for (std::size_t i = 0; i < poly.size(); ++i) {
        auto a = poly[i], b = poly[(i + 1) % poly.size()];
        bool ia = inside(a), ib = inside(b);
        if (ia) out.push_back(a);
        if (ia != ib) {
            double fa = nx * a.first + ny * a.second - off, fb = nx * b.first + ny * b.second - off;
            double t = fa / (fa - fb);
            out.push_back({a.first + t * (b.first - a.first), a.second + t * (b.second - a.second)});
        }
    }
    return out;
}

}  // namespace detail

// Disks are drawn directly; spheres as their silhouettes on {z = 0}, largest first.
template <class S>
std::string render_svg(const std::vector<Ball<S>>& balls, const RenderSpec& spec, const std::vector<int>& depths = {}) {
    struct Item {
        double k;
        std::size_t index;
    };
    std::vector<Item> items;
    for (std::size_t i = 0; i < balls.size(); ++i) {
        double k = num::to_double(curvature(balls[i]));
        if (std::abs(k) > spec.max_curvature) continue;
        items.push_back({k, i});
    }
    // painter order: half-spaces and exterior balls first, then by decreasing radius
    std::stable_sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
        auto rank = [](double k) { return k < -1e-12 ? 0 : (std::abs(k) <= 1e-12 ? 1 : 2); };
        if (rank(a.k) != rank(b.k)) return rank(a.k) < rank(b.k);
        return a.k < b.k;
    });
    double scale = spec.pixels / (2 * spec.half_width);
    auto px = [&](double x) { return (x - (spec.cx - spec.half_width)) * scale; };
    auto py = [&](double y) { return ((spec.cy + spec.half_width) - y) * scale; };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.pixels << "\" height=\"" << spec.pixels
       << "\" viewBox=\"0 0 " << spec.pixels << ' ' << spec.pixels << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    std::ostringstream labels;
    for (auto& it : items) {
        const auto& b = balls[it.index];
        std::string fill = spec.depth_colors && it.index < depths.size() ? detail::depth_color(depths[it.index]) : spec.fill;
        std::vector<double> x;
        for (auto& c : b.x) x.push_back(num::to_double(c));
        std::size_t d = b.dim();
        if (std::abs(it.k) <= 1e-12) {
            double nx = x[0], ny = d >= 2 ? x[1] : 0, off = x[d];
            double nn = std::hypot(nx, ny);
            if (nn < 1e-12) continue;  // boundary parallel to the drawing plane
            auto poly = detail::clip_halfplane(spec, nx / nn, ny / nn, off / nn);
            if (poly.size() < 3) continue;
            os << "<polygon points=\"";
            for (std::size_t i = 0; i < poly.size(); ++i)
                os << (i ? " " : "") << detail::fmt(px(poly[i].first)) << ',' << detail::fmt(py(poly[i].second));
            os << "\" fill=\"" << fill << "\" stroke=\"" << spec.stroke << "\" stroke-width=\"1\"/>\n";
            continue;
        }
        double cx = x[0] / it.k, cy = d >= 2 ? x[1] / it.k : 0, r = 1 / std::abs(it.k);
        if (std::abs(cx - spec.cx) - r > spec.half_width || std::abs(cy - spec.cy) - r > spec.half_width) continue;
        if (it.k < 0) {
            os << "<rect width=\"100%\" height=\"100%\" fill=\"" << fill << "\"/>\n";
            os << "<circle cx=\"" << detail::fmt(px(cx)) << "\" cy=\"" << detail::fmt(py(cy)) << "\" r=\"" << detail::fmt(r * scale)
               << "\" fill=\"white\" stroke=\"" << spec.stroke << "\" stroke-width=\"1\"/>\n";
        } else {
            os << "<circle cx=\"" << detail::fmt(px(cx)) << "\" cy=\"" << detail::fmt(py(cy)) << "\" r=\"" << detail::fmt(r * scale)
               << "\" fill=\"" << fill << "\" stroke=\"" << spec.stroke << "\" stroke-width=\"1\"/>\n";
        }
        if (spec.label_below > 0 && it.k > 0 && it.k <= spec.label_below) {
            double font = std::max(6.0, std::min(24.0, r * scale * 0.6));
            labels << "<text x=\"" << detail::fmt(px(cx)) << "\" y=\"" << detail::fmt(py(cy) + font * 0.35) << "\" font-size=\""
                   << detail::fmt(font) << "\" text-anchor=\"middle\" font-family=\"sans-serif\">" << num::str(curvature(b))
                   << "</text>\n";
        }
    }
    os << labels.str() << "</svg>\n";
    return os.str();
}

}  // namespace polypack::io
