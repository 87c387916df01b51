#pragma once

#include <algorithm>
#include <map>
#include <set>

#include "inversive.hpp"

namespace polypack {

// Rows b_i^T Q, so that (rows * x)_i = <b_i, x>.
template <class S>
Matrix<S> product_rows(const std::vector<Vec<S>>& vs) {
    std::size_t n = vs.at(0).size();
    Matrix<S> a(vs.size(), n);
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = j + 1 == n ? -vs[i][j] : vs[i][j];
    return a;
}

template <class S>
std::vector<Vec<S>> coords_of(const std::vector<Ball<S>>& balls, const std::vector<int>& idx) {
    std::vector<Vec<S>> out;
    for (int i : idx) out.push_back(balls.at(i).x);
    return out;
}

template <class S>
void orient(Vec<S>& v, const Vec<S>* reference) {
    int s = 0;
    if (reference) s = num::sign(inner(v, *reference));
    if (s == 0)
        for (auto& c : v)
            if (!num::is_zero(c)) {
                s = -num::sign(c);  // first nonzero coordinate positive
                break;
            }
    if (s > 0)
        for (auto& c : v) c = -c;
}

// Spacelike vector orthogonal to every given ball, not normalized. Oriented so that
// <v, reference> < 0 when a reference timelike vector is supplied.
template <class S>
Vec<S> dual_vector(const std::vector<Vec<S>>& facet, const Vec<S>* reference = nullptr) {
    auto ns = nullspace(product_rows(facet));
    if (ns.size() != 1) throw std::invalid_argument("degenerate facet: orthogonal complement is not a line");
    auto v = ns[0];
    make_primitive(v);
    if (num::sign(inner(v, v)) <= 0) throw std::invalid_argument("facet has no dual ball");
    orient(v, reference);
    return v;
}

template <class S>
Ball<S> dual_ball(const std::vector<Vec<S>>& facet, const Vec<S>* reference = nullptr) {
    auto v = dual_vector(facet, reference);
    S n = num::sqrt_or_throw(inner(v, v));
    for (auto& c : v) c = c / n;
    return Ball<S>(std::move(v));
}

template <class S>
Ball<S> dual_ball(const std::vector<Ball<S>>& facet, const Vec<S>* reference = nullptr) {
    std::vector<Vec<S>> vs;
    for (auto& b : facet) vs.push_back(b.x);
    return dual_ball(vs, reference);
}

// Reflection through the hyperplane orthogonal to a spacelike vector of any length.
template <class S>
LorentzMap<S> reflection_in(Vec<S> v) {
    make_primitive(v);
    S vv = inner(v, v);
    if (num::sign(vv) <= 0) throw std::invalid_argument("reflection vector must be spacelike");
    std::size_t n = v.size();
    auto m = Matrix<S>::identity(n);
    S c = num::from_int<S>(2) / vv;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            S qj = j + 1 == n ? -v[j] : v[j];
            m(i, j) -= c * v[i] * qj;
        }
    return m;
}

// Both solutions x of <x, b_i> = -1 (all i), <x, x> = -1 for a cross-polytope facet,
// sorted by curvature then coordinates.
template <class S>
std::vector<Vec<S>> facet_center_vectors(const std::vector<Vec<S>>& facet) {
    std::size_t n = facet.at(0).size();
    if (facet.size() + 1 != n) throw std::invalid_argument("cross-polytope facet needs d+1 balls");
    auto rows = product_rows(facet);
    auto base = solve(rows, Vec<S>(facet.size(), num::from_int<S>(-1)));
    auto ns = nullspace(rows);
    if (!base || ns.size() != 1) throw std::invalid_argument("degenerate facet");
    // <base + t w, base + t w> = -1
    const auto& w = ns[0];
    S a = inner(w, w), b = num::from_int<S>(2) * inner(*base, w), c = inner(*base, *base) + num::from_int<S>(1);
    std::vector<S> ts;
    if (num::is_zero(a)) {
        if (num::is_zero(b)) throw std::invalid_argument("facet center is not determined");
        ts.push_back(-c / b);
    } else {
        S disc = b * b - num::from_int<S>(4) * a * c;
        if (num::sign(disc) < 0) throw std::invalid_argument("no real facet center: not a cross-polytope facet");
        S r = num::sqrt_or_throw(disc);
        ts.push_back((-b + r) / (num::from_int<S>(2) * a));
        if (!num::is_zero(r)) ts.push_back((-b - r) / (num::from_int<S>(2) * a));
    }
    std::vector<Vec<S>> out;
    for (auto& t : ts) {
        Vec<S> x = *base;
        for (std::size_t i = 0; i < n; ++i) x[i] += t * w[i];
        if (num::sign(x[n - 1]) <= 0) continue;  // keep the future sheet
        out.push_back(std::move(x));
    }
    if (out.empty()) throw std::invalid_argument("no future-pointing facet center");
    std::sort(out.begin(), out.end(), [](const Vec<S>& x, const Vec<S>& y) {
        S kx = curvature(x), ky = curvature(y);
        if (!num::eq(kx, ky)) return num::sign(kx - ky) < 0;
        for (std::size_t i = 0; i < x.size(); ++i)
            if (!num::eq(x[i], y[i])) return num::sign(x[i] - y[i]) < 0;
        return false;
    });
    return out;
}

template <class S>
Vec<S> facet_center_vector(const std::vector<Vec<S>>& facet) {
    return facet_center_vectors(facet).front();
}

// Facets of a polytopal packing: maximal sets of balls spanning a hyperplane of Lorentz
// space with every other ball strictly on one side. Computed in floating point.
template <class S>
std::vector<std::vector<int>> detect_facets(const std::vector<Ball<S>>& balls, double tol = 1e-7) {
    std::size_t nb = balls.size();
    if (nb == 0) return {};
    std::size_t n = balls[0].x.size();  // d + 2
    std::size_t d = n - 2;
    std::vector<Vec<double>> xs;
    for (auto& b : balls) xs.push_back(to_double(b.x));
    std::vector<std::vector<int>> nbrs(nb);
    for (std::size_t i = 0; i < nb; ++i)
        for (std::size_t j = 0; j < nb; ++j)
            if (i != j && std::abs(inner(xs[i], xs[j]) + 1) < tol) nbrs[i].push_back(int(j));

    double saved = float_eps();
    float_eps() = tol;
    std::set<std::vector<int>> found;
    for (std::size_t v = 0; v < nb; ++v) {
        const auto& nv = nbrs[v];
        if (nv.size() < d) continue;
        std::vector<int> pick(d);
        // iterate over d-subsets of the neighbours
        std::vector<bool> sel(nv.size(), false);
        std::fill(sel.begin(), sel.begin() + d, true);
        do {
            std::vector<Vec<double>> span{xs[v]};
            for (std::size_t k = 0; k < nv.size(); ++k)
                if (sel[k]) span.push_back(xs[nv[k]]);
            auto ns = nullspace(product_rows(span));
            if (ns.size() != 1) continue;
            auto w = ns[0];
            double scale = 0;
            for (auto c : w) scale = std::max(scale, std::abs(c));
            for (auto& c : w) c /= scale;
            std::vector<int> on;
            int side = 0;
            bool ok = true;
            for (std::size_t j = 0; j < nb && ok; ++j) {
                double p = inner(w, xs[j]);
                if (std::abs(p) < tol) {
                    on.push_back(int(j));
                    continue;
                }
                int s = p > 0 ? 1 : -1;
                if (side == 0) side = s;
                ok = s == side;
            }
            if (ok && on.size() >= d + 1) found.insert(on);
        } while (std::prev_permutation(sel.begin(), sel.end()));
    }
    float_eps() = saved;
    return {found.begin(), found.end()};
}

}  // namespace polypack
