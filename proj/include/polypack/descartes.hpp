#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "polytopes.hpp"

namespace polypack {

struct not_realizable : std::domain_error {
    using std::domain_error::domain_error;
};

// Coefficient schedule L(0..n) of the flag form of a regular n-polytope:
// L(0) = -1, L(1) = 0, L(i) = (midsphere ratio of its i-faces)^-2.
template <class S>
Vec<S> flag_schedule(PolytopeId id) {
    int n = id.n;
    auto phi = [] { return golden<S>(); };
    auto simplexL = [](int i) { return num::rational<S>(i - 1, i + 1); };
    auto pentagonL = [] { return num::from_int<S>(1) + num::from_int<S>(2) / num::root<S>(5); };
    Vec<S> L{num::from_int<S>(-1), num::from_int<S>(0)};
    for (int i = 2; i <= n; ++i) {
        S v;
        switch (id.family) {
            case Family::Simplex: v = simplexL(i); break;
            case Family::Orthoplex: v = i < n ? simplexL(i) : num::from_int<S>(1); break;
            case Family::Cube: v = num::from_int<S>(i - 1); break;
            case Family::Icosahedron: v = i == 2 ? simplexL(2) : phi() * phi(); break;
            case Family::Dodecahedron: v = i == 2 ? pentagonL() : phi() * phi() * phi() * phi(); break;
            case Family::Cell24: v = i == 2 ? simplexL(2) : i == 3 ? num::from_int<S>(1) : num::from_int<S>(3); break;
            case Family::Cell600: {
                auto p3 = phi() * phi() * phi();
                v = i == 2 ? simplexL(2) : i == 3 ? simplexL(3) : num::root<S>(5) * p3;
                break;
            }
            case Family::Cell120: {
                auto p2 = phi() * phi();
                v = i == 2 ? pentagonL() : i == 3 ? p2 * p2 : num::from_int<S>(3) * p2 * p2 * p2;
                break;
            }
        }
        L.push_back(v);
    }
    return L;
}

template <class S>
struct FlagForm {
    PolytopeId id;
    Vec<S> L;

    std::size_t arity() const { return L.size(); }

    S operator()(const Vec<S>& x) const {
        if (x.size() != L.size()) throw std::invalid_argument("flag form expects " + std::to_string(L.size()) + " values");
        S s = num::from_int<S>(0);
        for (std::size_t i = 0; i + 1 < x.size(); ++i) {
            S diff = x[i] - x[i + 1];
            s += diff * diff / (L[i] - L[i + 1]);
        }
        s += x.back() * x.back() / L.back();
        return s;
    }
};

template <class S>
FlagForm<S> flag_form(PolytopeId id) {
    return {id, flag_schedule<S>(id)};
}

template <class S>
FlagForm<S> flag_form(const std::string& name, int n = 0) {
    return flag_form<S>(polytope_id(name, n));
}

namespace detail {

template <class S>
void require_arity(const Vec<S>& u, std::size_t n, const char* what) {
    if (u.size() != n) throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(n) + " arguments");
}

template <class S>
S sum(const Vec<S>& u, std::size_t from = 0, std::size_t to = SIZE_MAX) {
    S s = num::from_int<S>(0);
    for (std::size_t i = from; i < std::min(to, u.size()); ++i) s += u[i];
    return s;
}

template <class S>
S sum_sq(const Vec<S>& u, std::size_t from = 0, std::size_t to = SIZE_MAX) {
    S s = num::from_int<S>(0);
    for (std::size_t i = from; i < std::min(to, u.size()); ++i) s += u[i] * u[i];
    return s;
}

}  // namespace detail

// Simplicial form of index d+1 (d+2 arguments): ((sum u)^2 / d - sum u^2) / 2
template <class S>
S simplicial(const Vec<S>& u) {
    if (u.size() < 3) throw std::invalid_argument("simplicial form needs at least 3 arguments");
    S d = num::from_int<S>(std::int64_t(u.size()) - 2);
    S s = detail::sum(u);
    return (s * s / d - detail::sum_sq(u)) / num::from_int<S>(2);
}

// Hyperoctahedral form: u_{d+2}^2 - (1/2) sum_{i<=d+1} (u_i - u_{d+2})^2
template <class S>
S hyperoctahedral(const Vec<S>& u) {
    if (u.size() < 3) throw std::invalid_argument("hyperoctahedral form needs at least 3 arguments");
    const S& last = u.back();
    S s = num::from_int<S>(0);
    for (std::size_t i = 0; i + 1 < u.size(); ++i) s += (u[i] - last) * (u[i] - last);
    return last * last - s / num::from_int<S>(2);
}

// Hypercubical form: ((u_1 + u_{d+2})^2 / d - sum_{i<=d+1} (u_i - u_{i+1})^2) / 4
template <class S>
S hypercubical(const Vec<S>& u) {
    if (u.size() < 3) throw std::invalid_argument("hypercubical form needs at least 3 arguments");
    S d = num::from_int<S>(std::int64_t(u.size()) - 2);
    S ends = u.front() + u.back();
    S s = num::from_int<S>(0);
    for (std::size_t i = 0; i + 1 < u.size(); ++i) s += (u[i] - u[i + 1]) * (u[i] - u[i + 1]);
    return (ends * ends / d - s) / num::from_int<S>(4);
}

// The flag-form arguments each specialized form stands for.
template <class S>
Vec<S> simplicial_flag(const Vec<S>& u) {
    Vec<S> x;
    S run = num::from_int<S>(0);
    for (std::size_t i = 0; i < u.size(); ++i) {
        run += u[i];
        x.push_back(run / num::from_int<S>(std::int64_t(i) + 1));
    }
    return x;
}
template <class S>
Vec<S> hyperoctahedral_flag(const Vec<S>& u) {
    Vec<S> x = simplicial_flag(Vec<S>(u.begin(), u.end() - 1));
    x.push_back(u.back());
    return x;
}
template <class S>
Vec<S> hypercubical_flag(const Vec<S>& u) {
    Vec<S> x{u[0]};
    for (std::size_t i = 1; i < u.size(); ++i) x.push_back((u[0] + u[i]) / num::from_int<S>(2));
    return x;
}

template <class S>
bool soddy_gosset_check(const Vec<S>& k) {
    if (k.size() < 3) throw std::invalid_argument("need d+2 >= 3 curvatures");
    S d = num::from_int<S>(std::int64_t(k.size()) - 2);
    S s = detail::sum(k);
    return num::eq(d * detail::sum_sq(k), s * s);
}

template <class S>
bool octahedral_check(const Vec<S>& k, const S& center) {
    S s = num::from_int<S>(0);
    for (auto& v : k) s += (v - center) * (v - center);
    return num::eq(s, num::from_int<S>(2) * center * center);
}

template <class S>
bool cubical_check(const Vec<S>& k) {
    if (k.size() < 3) throw std::invalid_argument("need d+2 >= 3 curvatures");
    S d = num::from_int<S>(std::int64_t(k.size()) - 2);
    S s = num::from_int<S>(0);
    for (std::size_t i = 0; i + 1 < k.size(); ++i) s += (k[i] - k[i + 1]) * (k[i] - k[i + 1]);
    S ends = k.front() + k.back();
    return num::eq(d * s, ends * ends);
}

// Both roots of (d-1) x^2 - 2 S x + sum k^2 = 0, smaller first.
template <class S>
std::pair<S, S> solve_octahedral_center(const Vec<S>& k) {
    if (k.size() < 2) throw std::invalid_argument("need d+1 >= 2 curvatures");
    S a = num::from_int<S>(std::int64_t(k.size()) - 2);
    S b = num::from_int<S>(-2) * detail::sum(k);
    S c = detail::sum_sq(k);
    if (num::is_zero(a)) {
        S r = -c / b;
        return {r, r};
    }
    S disc = b * b - num::from_int<S>(4) * a * c;
    if (num::sign(disc) < 0) throw not_realizable("negative discriminant: curvatures not realizable");
    S r = num::sqrt_or_throw(disc);
    S two_a = num::from_int<S>(2) * a;
    S x1 = (-b - r) / two_a, x2 = (-b + r) / two_a;
    if (num::sign(x2 - x1) < 0) std::swap(x1, x2);
    return {x1, x2};
}

template <class S>
S cubical_fourth(const S& k1, const S& k2, const S& k3) {
    return k1 + k3 - k2;
}

// Curvatures of the two polytopal packings sharing the facet f (glueing formula):
// (l_f/l_P)^2 k_f +- l_P^-2 sqrt((l_f^2 - l_P^2) Phi_f)
template <class S>
std::pair<S, S> glueing_curvatures(const S& kappa_f, const S& phi_f, const S& ell_f, const S& ell_P) {
    S lf2 = ell_f * ell_f, lp2 = ell_P * ell_P;
    S base = lf2 / lp2 * kappa_f;
    S rad = (lf2 - lp2) * phi_f;
    if (num::sign(rad) < 0) throw not_realizable("negative radicand in glueing formula");
    S r = num::sqrt_or_throw(rad) / lp2;
    return {base - r, base + r};
}

// Curvatures along a flag: (kappa_{f_0}, ..., kappa_{f_d}, kappa_P).
template <class S>
Vec<S> flag_curvatures(const Packing<S>& p, const FaceLattice& fl, const std::vector<int>& flag) {
    Vec<S> out;
    for (std::size_t k = 0; k < flag.size(); ++k) out.push_back(face_curvature(p, fl.faces[k][flag[k]]));
    out.push_back(face_curvature(p, all_indices(p)));
    return out;
}

// Diophantine equations produced by the three families of identities:
//   simplicial:   d * sum m_i^2 = n^2   (d+2 values)
//   octahedral:   sum m_i^2 = 2 n^2     (d+1 values)
//   cubical:      d * sum m_i^2 = n^2   (d+1 values)
enum class DiophantineKind { Simplicial, Octahedral, Cubical };

inline const char* kind_name(DiophantineKind k) {
    switch (k) {
        case DiophantineKind::Simplicial: return "simplicial";
        case DiophantineKind::Octahedral: return "octahedral";
        case DiophantineKind::Cubical: return "cubical";
    }
    return "?";
}

struct DiophantineSolution {
    DiophantineKind equation;
    int d;
    std::vector<std::int64_t> m;
    std::int64_t n;
};

inline bool verify(const DiophantineSolution& s) {
    using detail::i128;
    i128 sq = 0;
    for (auto v : s.m) sq += i128(v) * v;
    i128 nn = i128(s.n) * s.n;
    switch (s.equation) {
        case DiophantineKind::Simplicial: return s.m.size() == std::size_t(s.d + 2) && i128(s.d) * sq == nn;
        case DiophantineKind::Octahedral: return s.m.size() == std::size_t(s.d + 1) && sq == 2 * nn;
        case DiophantineKind::Cubical: return s.m.size() == std::size_t(s.d + 1) && i128(s.d) * sq == nn;
    }
    return false;
}

inline bool nontrivial(const DiophantineSolution& s) {
    return s.n != 0;
}

namespace detail {

template <class S>
std::int64_t as_integer(const S& v) {
    if (!num::is_integer(v)) throw std::invalid_argument("non-integral curvature " + num::str(v));
    if constexpr (std::is_same_v<S, double>)
        return static_cast<std::int64_t>(std::llround(v));
    else
        return v.a().num();
}

}  // namespace detail

// All shortest paths between pairs of members at maximal distance in the induced tangency
// graph; for a cube packing these join antipodal vertices.
inline std::vector<std::vector<int>> antipodal_geodesics(std::size_t n, const std::vector<std::pair<int, int>>& edges,
                                                         const std::vector<int>& members) {
    std::vector<char> in(n, 0);
    for (int m : members) in[m] = 1;
    std::vector<std::vector<int>> adj(n);
    for (auto [a, b] : edges)
        if (in[a] && in[b]) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
    auto bfs = [&](int src) {
        std::vector<int> dist(n, -1);
        std::vector<int> queue{src};
        dist[src] = 0;
        for (std::size_t q = 0; q < queue.size(); ++q)
            for (int w : adj[queue[q]])
                if (dist[w] < 0) {
                    dist[w] = dist[queue[q]] + 1;
                    queue.push_back(w);
                }
        return dist;
    };
    std::vector<std::vector<int>> dist(n);
    int diameter = 0;
    for (int m : members) {
        dist[m] = bfs(m);
        for (int o : members) diameter = std::max(diameter, dist[m][o]);
    }
    std::vector<std::vector<int>> out;
    for (int a : members)
        for (int b : members) {
            if (a >= b || dist[a][b] != diameter) continue;
            std::vector<int> path{a};
            std::function<void(int)> walk = [&](int v) {
                if (v == b) {
                    out.push_back(path);
                    return;
                }
                for (int w : adj[v])
                    if (dist[a][w] == dist[a][v] + 1 && dist[b][w] == dist[b][v] - 1) {
                        path.push_back(w);
                        walk(w);
                        path.pop_back();
                    }
            };
            walk(a);
        }
    return out;
}

// From d+2 mutually tangent curvatures.
template <class S>
DiophantineSolution soddy_gosset_solution(const Vec<S>& k) {
    DiophantineSolution s{DiophantineKind::Simplicial, int(k.size()) - 2, {}, 0};
    for (auto& v : k) {
        s.m.push_back(detail::as_integer(v));
        s.n += s.m.back();
    }
    return s;
}

// From d+1 curvatures of a cross-polytope facet and the packing's center curvature.
template <class S>
DiophantineSolution octahedral_solution(const Vec<S>& k, const S& center) {
    DiophantineSolution s{DiophantineKind::Octahedral, int(k.size()) - 1, {}, detail::as_integer(center)};
    for (auto& v : k) s.m.push_back(detail::as_integer(v) - s.n);
    return s;
}

// From d+2 curvatures along a geodesic path joining antipodal cube vertices.
template <class S>
DiophantineSolution cubical_solution(const Vec<S>& k) {
    DiophantineSolution s{DiophantineKind::Cubical, int(k.size()) - 2, {}, 0};
    std::vector<std::int64_t> ki;
    for (auto& v : k) ki.push_back(detail::as_integer(v));
    for (std::size_t i = 0; i + 1 < ki.size(); ++i) s.m.push_back(ki[i] - ki[i + 1]);
    s.n = ki.front() + ki.back();
    return s;
}

}  // namespace polypack
