#pragma once

#include <string>
#include <utility>
#include <vector>

#include "linalg.hpp"

namespace polypack {

// Oriented d-ball in inversive coordinates (kappa*c, (cobar-kappa)/2, (cobar+kappa)/2).
template <class S>
struct Ball {
    Vec<S> x;

    Ball() = default;
    explicit Ball(Vec<S> v) : x(std::move(v)) {}
    Ball(std::initializer_list<std::int64_t> v) {
        for (auto c : v) x.push_back(num::from_int<S>(c));
    }

    std::size_t dim() const { return x.size() - 2; }
    const S& operator[](std::size_t i) const { return x[i]; }
    friend bool operator==(const Ball& a, const Ball& b) { return vec_eq(a.x, b.x); }
};

template <class S>
using LorentzMap = Matrix<S>;

template <class S>
S inner(const Vec<S>& x, const Vec<S>& y) {
    if (x.size() != y.size()) throw std::invalid_argument("inversive product of vectors of different dimension");
    S s = num::from_int<S>(0);
    std::size_t n = x.size();
    for (std::size_t i = 0; i + 1 < n; ++i) s += x[i] * y[i];
    s -= x[n - 1] * y[n - 1];
    return s;
}

template <class S>
S inner(const Ball<S>& a, const Ball<S>& b) {
    return inner(a.x, b.x);
}

template <class S>
S curvature(const Vec<S>& x) {
    return x[x.size() - 1] - x[x.size() - 2];
}
template <class S>
S curvature(const Ball<S>& b) {
    return curvature(b.x);
}
template <class S>
S cocurvature(const Ball<S>& b) {
    return b.x[b.x.size() - 1] + b.x[b.x.size() - 2];
}

// Q = diag(1, ..., 1, -1)
template <class S>
Matrix<S> lorentz_form(std::size_t n) {
    auto q = Matrix<S>::identity(n);
    q(n - 1, n - 1) = num::from_int<S>(-1);
    return q;
}

template <class S>
Ball<S> ball_from_sphere(const Vec<S>& center, const S& radius, bool exterior = false) {
    if (num::sign(radius) <= 0) throw std::invalid_argument("radius must be positive");
    S one = num::from_int<S>(1);
    S k = exterior ? -(one / radius) : one / radius;
    S cc = num::from_int<S>(0);
    for (auto& c : center) cc += c * c;
    S kbar = k * (cc - radius * radius);
    Vec<S> x;
    for (auto& c : center) x.push_back(k * c);
    x.push_back((kbar - k) / num::from_int<S>(2));
    x.push_back((kbar + k) / num::from_int<S>(2));
    return Ball<S>(std::move(x));
}

// half-space {p : n.p >= offset}
template <class S>
Ball<S> ball_from_halfspace(const Vec<S>& normal, const S& offset) {
    if (!num::eq(dot(normal, normal), num::from_int<S>(1))) throw std::invalid_argument("normal must be a unit vector");
    Vec<S> x = normal;
    x.push_back(offset);
    x.push_back(offset);
    return Ball<S>(std::move(x));
}

template <class S>
struct Geometry {
    bool halfspace = false;
    bool exterior = false;  // negative curvature: complement of a closed sphere interior
    Vec<S> point;           // center, or unit normal for half-spaces
    S value{};              // radius, or offset for half-spaces
};

template <class S>
Geometry<S> geometry_of(const Ball<S>& b) {
    std::size_t d = b.dim();
    Geometry<S> g;
    S k = curvature(b);
    if (num::is_zero(k)) {
        g.halfspace = true;
        g.point.assign(b.x.begin(), b.x.begin() + d);
        g.value = b.x[d];
        return g;
    }
    g.exterior = num::sign(k) < 0;
    for (std::size_t i = 0; i < d; ++i) g.point.push_back(b.x[i] / k);
    g.value = num::from_int<S>(1) / (g.exterior ? -k : k);
    return g;
}

template <class S>
bool is_unit(const Ball<S>& b) {
    return num::eq(inner(b, b), num::from_int<S>(1));
}

template <class S>
LorentzMap<S> reflection(const Ball<S>& b) {
    if (!is_unit(b)) throw std::invalid_argument("reflection needs a unit ball vector");
    std::size_t n = b.x.size();
    auto m = Matrix<S>::identity(n);
    S two = num::from_int<S>(2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            S qj = j + 1 == n ? -b.x[j] : b.x[j];
            m(i, j) -= two * b.x[i] * qj;
        }
    return m;
}

template <class S>
bool preserves_form(const Matrix<S>& m) {
    if (m.rows() != m.cols()) return false;
    auto q = lorentz_form<S>(m.rows());
    return m.transpose() * q * m == q;
}

// M^T Q M = Q and the future cone is mapped to itself.
template <class S>
bool is_lorentz(const Matrix<S>& m) {
    return preserves_form(m) && num::sign(m(m.rows() - 1, m.cols() - 1)) > 0;
}

template <class S>
Ball<S> apply(const LorentzMap<S>& m, const Ball<S>& b) {
    return Ball<S>(m * b.x);
}

template <class S>
Matrix<S> gram(const std::vector<Ball<S>>& balls) {
    Matrix<S> g(balls.size(), balls.size());
    for (std::size_t i = 0; i < balls.size(); ++i)
        for (std::size_t j = i; j < balls.size(); ++j) g(i, j) = g(j, i) = inner(balls[i], balls[j]);
    return g;
}

template <class S>
std::vector<std::pair<int, int>> tangency_edges(const std::vector<Ball<S>>& balls) {
    std::vector<std::pair<int, int>> e;
    S minus_one = num::from_int<S>(-1);
    for (std::size_t i = 0; i < balls.size(); ++i)
        for (std::size_t j = i + 1; j < balls.size(); ++j)
            if (num::eq(inner(balls[i], balls[j]), minus_one)) e.emplace_back(int(i), int(j));
    return e;
}

template <class S>
struct Packing {
    std::vector<Ball<S>> balls;
    std::vector<std::pair<int, int>> edges;
    std::string tag;
    std::vector<std::vector<int>> facets;  // vertex sets of the tangency polytope's facets, if known

    std::size_t size() const { return balls.size(); }
    std::size_t dim() const { return balls.empty() ? 0 : balls[0].dim(); }
    const Ball<S>& operator[](std::size_t i) const { return balls[i]; }
};

template <class S>
Packing<S> make_packing(std::vector<Ball<S>> balls, std::string tag = {}) {
    Packing<S> p;
    p.edges = tangency_edges(balls);
    p.balls = std::move(balls);
    p.tag = std::move(tag);
    return p;
}

template <class S>
Matrix<S> gram(const Packing<S>& p) {
    return gram(p.balls);
}

// Interiors pairwise disjoint or tangent.
template <class S>
bool is_packing(const std::vector<Ball<S>>& balls) {
    S minus_one = num::from_int<S>(-1);
    for (std::size_t i = 0; i < balls.size(); ++i)
        for (std::size_t j = i + 1; j < balls.size(); ++j) {
            S v = inner(balls[i], balls[j]);
            if (!num::eq(v, minus_one) && num::sign(v - minus_one) > 0) return false;
        }
    return true;
}

template <class S>
Packing<S> apply(const LorentzMap<S>& m, const Packing<S>& p) {
    Packing<S> q = p;
    for (auto& b : q.balls) b = apply(m, b);
    return q;
}

template <class S>
Vec<S> lorentz_barycenter(const std::vector<Ball<S>>& balls, const std::vector<int>& members) {
    Vec<S> x(balls.at(0).x.size(), num::from_int<S>(0));
    for (int i : members)
        for (std::size_t k = 0; k < x.size(); ++k) x[k] += balls[i].x[k];
    S n = num::from_int<S>(static_cast<std::int64_t>(members.size()));
    for (auto& v : x) v = v / n;
    return x;
}

// Euclidean similarities as Lorentz maps.

template <class S>
LorentzMap<S> translation(const Vec<S>& t) {
    std::size_t d = t.size(), n = d + 2;
    auto m = Matrix<S>::identity(n);
    S tt = dot(t, t);
    S half = num::rational<S>(1, 2);
    std::size_t a = d, e = d + 1;
    for (std::size_t i = 0; i < d; ++i) {
        m(i, a) = -t[i];
        m(i, e) = t[i];
        m(a, i) = t[i];
        m(e, i) = t[i];
    }
    m(a, a) = num::from_int<S>(1) - half * tt;
    m(a, e) = half * tt;
    m(e, a) = -half * tt;
    m(e, e) = num::from_int<S>(1) + half * tt;
    return m;
}

// p -> s p about the origin
template <class S>
LorentzMap<S> scaling(std::size_t d, const S& s) {
    std::size_t n = d + 2, a = d, e = d + 1;
    auto m = Matrix<S>::identity(n);
    S half = num::rational<S>(1, 2);
    S inv = num::from_int<S>(1) / s;
    // kappa' = kappa / s, cobar' = s cobar
    m(a, a) = half * (s + inv);
    m(a, e) = half * (s - inv);
    m(e, a) = half * (s - inv);
    m(e, e) = half * (s + inv);
    return m;
}

// orthogonal linear map of R^d (given as a d x d matrix) acting on the balls
template <class S>
LorentzMap<S> orthogonal(const Matrix<S>& r) {
    std::size_t d = r.rows();
    auto m = Matrix<S>::identity(d + 2);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) m(i, j) = r(i, j);
    return m;
}

template <class S>
Vec<S> curvature_functional(std::size_t n) {
    Vec<S> k(n, num::from_int<S>(0));
    k[n - 2] = num::from_int<S>(-1);
    k[n - 1] = num::from_int<S>(1);
    return k;
}

template <class T, class S>
Ball<T> convert(const Ball<S>& b) {
    Ball<T> r;
    for (auto& v : b.x) {
        if constexpr (std::is_same_v<T, double>)
            r.x.push_back(num::to_double(v));
        else
            r.x.push_back(T(v));
    }
    return r;
}

template <class T, class S>
Packing<T> convert(const Packing<S>& p) {
    Packing<T> q;
    for (auto& b : p.balls) q.balls.push_back(convert<T>(b));
    q.edges = p.edges;
    q.tag = p.tag;
    q.facets = p.facets;
    return q;
}

template <class T, class S>
Matrix<T> convert(const Matrix<S>& m) {
    Matrix<T> r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if constexpr (std::is_same_v<T, double>)
                r(i, j) = num::to_double(m(i, j));
            else
                r(i, j) = T(m(i, j));
        }
    return r;
}

}  // namespace polypack
