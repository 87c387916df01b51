#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "duality.hpp"

namespace polypack {

enum class Family { Simplex, Orthoplex, Cube, Icosahedron, Dodecahedron, Cell24, Cell600, Cell120 };

struct PolytopeId {
    Family family;
    int n;  // dimension of the polytope (d + 1)
};

inline PolytopeId polytope_id(const std::string& name, int n = 0) {
    static const std::map<std::string, Family> names{
        {"simplex", Family::Simplex},          {"orthoplex", Family::Orthoplex},  {"cross-polytope", Family::Orthoplex},
        {"cube", Family::Cube},                {"hypercube", Family::Cube},       {"icosahedron", Family::Icosahedron},
        {"dodecahedron", Family::Dodecahedron}, {"24-cell", Family::Cell24},      {"600-cell", Family::Cell600},
        {"120-cell", Family::Cell120}};
    auto it = names.find(name);
    if (it == names.end()) throw std::invalid_argument("unknown polytope: " + name);
    switch (it->second) {
        case Family::Icosahedron:
        case Family::Dodecahedron:
            return {it->second, 3};
        case Family::Cell24:
        case Family::Cell600:
        case Family::Cell120:
            return {it->second, 4};
        default:
            if (n < 2) throw std::invalid_argument(name + " needs a dimension of at least 2");
            return {it->second, n};
    }
}

inline std::string polytope_name(PolytopeId id) {
    switch (id.family) {
        case Family::Simplex: return "simplex" + std::to_string(id.n);
        case Family::Orthoplex: return "orthoplex" + std::to_string(id.n);
        case Family::Cube: return "cube" + std::to_string(id.n);
        case Family::Icosahedron: return "icosahedron";
        case Family::Dodecahedron: return "dodecahedron";
        case Family::Cell24: return "24-cell";
        case Family::Cell600: return "600-cell";
        case Family::Cell120: return "120-cell";
    }
    return {};
}

template <class S>
S golden() {
    return (num::from_int<S>(1) + num::root<S>(5)) / num::from_int<S>(2);
}

// Half edge length over midsphere radius.
template <class S>
S midsphere_ratio(PolytopeId id) {
    int d = id.n - 1;
    auto one = num::from_int<S>(1);
    switch (id.family) {
        case Family::Simplex: return num::sqrt_or_throw(num::rational<S>(d + 2, d));
        case Family::Orthoplex: return one;
        case Family::Cube: return one / num::root<S>(d);
        case Family::Icosahedron: return one / golden<S>();
        case Family::Dodecahedron: return one / (golden<S>() * golden<S>());
        case Family::Cell24: return one / num::root<S>(3);
        case Family::Cell600: {
            auto p = golden<double>();
            if constexpr (std::is_same_v<S, double>) return std::pow(5.0, -0.25) * std::pow(p, -1.5);
            throw field_error("the 600-cell needs float mode");
        }
        case Family::Cell120: {
            if constexpr (std::is_same_v<S, double>) return 1 / (std::sqrt(3.0) * std::pow(golden<double>(), 3));
            throw field_error("the 120-cell needs float mode");
        }
    }
    return one;
}

// Faces by dimension; faces[k] holds sorted vertex sets, faces[0][v] == {v}.
struct FaceLattice {
    std::vector<std::vector<std::vector<int>>> faces;
    std::vector<std::vector<std::vector<int>>> sub;  // sub[k][i]: indices of (k-1)-faces inside faces[k][i]

    int dim() const { return int(faces.size()); }  // polytope dimension
    const std::vector<std::vector<int>>& facets() const { return faces.back(); }

    // maximal chains (f_0, ..., f_{dim-1}) given as face indices per level
    std::vector<std::vector<int>> flags() const {
        std::vector<std::vector<int>> out;
        std::vector<int> chain(faces.size());
        std::function<void(int, int)> rec = [&](int k, int i) {
            chain[k] = i;
            if (k == 0) {
                out.push_back(chain);
                return;
            }
            for (int j : sub[k][i]) rec(k - 1, j);
        };
        int top = int(faces.size()) - 1;
        for (int i = 0; i < int(faces[top].size()); ++i) rec(top, i);
        return out;
    }
};

inline FaceLattice face_lattice(std::size_t nverts, std::vector<std::vector<int>> facets, int polytope_dim) {
    FaceLattice fl;
    fl.faces.resize(polytope_dim);
    fl.sub.resize(polytope_dim);
    for (auto& f : facets) std::sort(f.begin(), f.end());
    std::sort(facets.begin(), facets.end());
    fl.faces[polytope_dim - 1] = facets;
    for (int k = polytope_dim - 1; k >= 1; --k) {
        std::map<std::vector<int>, int> index;
        std::vector<std::vector<int>> level;
        std::vector<std::vector<std::vector<int>>> members(fl.faces[k].size());
        for (std::size_t i = 0; i < fl.faces[k].size(); ++i) {
            const auto& f = fl.faces[k][i];
            std::set<std::vector<int>> cands;
            for (const auto& g : facets) {
                std::vector<int> inter;
                std::set_intersection(f.begin(), f.end(), g.begin(), g.end(), std::back_inserter(inter));
                if (!inter.empty() && inter.size() < f.size()) cands.insert(inter);
            }
            for (const auto& c : cands) {
                bool maximal = true;
                for (const auto& o : cands)
                    if (o.size() > c.size() && std::includes(o.begin(), o.end(), c.begin(), c.end())) {
                        maximal = false;
                        break;
                    }
                if (maximal) members[i].push_back(c);
            }
            for (auto& c : members[i]) index.emplace(c, 0);
        }
        for (auto& [key, idx] : index) {
            idx = int(level.size());
            level.push_back(key);
        }
        fl.faces[k - 1] = level;
        fl.sub[k].resize(fl.faces[k].size());
        for (std::size_t i = 0; i < members.size(); ++i)
            for (auto& c : members[i]) fl.sub[k][i].push_back(index[c]);
    }
    if (fl.faces[0].size() != nverts) throw std::logic_error("face lattice does not reach every vertex");
    return fl;
}

template <class S>
struct RegularPolytope {
    PolytopeId id;
    std::vector<Vec<S>> vertices;
    S ell;  // midsphere ratio
    FaceLattice lattice;
    std::vector<int> antipode;  // -1 when not centrally symmetric

    int dim() const { return id.n; }
    std::string name() const { return polytope_name(id); }
};

namespace detail {

template <class S>
std::vector<Vec<S>> signed_patterns(const Vec<S>& base) {
    // all sign choices on the nonzero entries
    std::vector<Vec<S>> out{base};
    for (std::size_t i = 0; i < base.size(); ++i) {
        if (num::is_zero(base[i])) continue;
        std::size_t m = out.size();
        for (std::size_t k = 0; k < m; ++k) {
            auto v = out[k];
            v[i] = -v[i];
            out.push_back(v);
        }
    }
    return out;
}

template <class S>
std::vector<Vec<S>> cyclic(const Vec<S>& v) {
    return {v, {v[1], v[2], v[0]}, {v[2], v[0], v[1]}};
}

template <class S>
void scale_all(std::vector<Vec<S>>& vs, const S& s) {
    for (auto& v : vs)
        for (auto& c : v) c = c * s;
}

inline std::vector<std::array<int, 4>> even_permutations4() {
    std::vector<std::array<int, 4>> out;
    std::array<int, 4> p{0, 1, 2, 3};
    do {
        int inv = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) inv += p[i] > p[j];
        if (inv % 2 == 0) out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

// 600-cell with circumradius 1 (edge 1/phi)
inline std::vector<Vec<double>> hexacosichoron_unit() {
    std::vector<Vec<double>> vs;
    for (int i = 0; i < 4; ++i)
        for (int s : {1, -1}) {
            Vec<double> v(4, 0.0);
            v[i] = s;
            vs.push_back(v);
        }
    for (auto& v : signed_patterns<double>({0.5, 0.5, 0.5, 0.5})) vs.push_back(v);
    double p = golden<double>();
    std::array<double, 4> base{p / 2, 0.5, 1 / (2 * p), 0.0};
    for (auto& perm : even_permutations4()) {
        Vec<double> v(4);
        for (int i = 0; i < 4; ++i) v[perm[i]] = base[i];
        for (auto& w : signed_patterns<double>(v)) vs.push_back(w);
    }
    return vs;
}

// 120-cell directions: centroids of the 600 tetrahedral cells of the 600-cell
inline std::vector<Vec<double>> hecatonicosachoron_directions() {
    auto vs = hexacosichoron_unit();
    std::size_t n = vs.size();
    double e2 = 1 / std::pow(golden<double>(), 2);
    auto adj = [&](std::size_t i, std::size_t j) {
        double s = 0;
        for (int k = 0; k < 4; ++k) s += (vs[i][k] - vs[j][k]) * (vs[i][k] - vs[j][k]);
        return std::abs(s - e2) < 1e-9;
    };
    std::vector<std::vector<bool>> a(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = i != j && adj(i, j);
    std::vector<Vec<double>> out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!a[i][j]) continue;
            for (std::size_t k = j + 1; k < n; ++k) {
                if (!a[i][k] || !a[j][k]) continue;
                for (std::size_t l = k + 1; l < n; ++l) {
                    if (!a[i][l] || !a[j][l] || !a[k][l]) continue;
                    Vec<double> c(4);
                    for (int t = 0; t < 4; ++t) c[t] = vs[i][t] + vs[j][t] + vs[k][t] + vs[l][t];
                    out.push_back(c);
                }
            }
        }
    return out;
}

// rescale so that edges (closest vertex pairs) touch the unit sphere
inline void edge_scribe(std::vector<Vec<double>>& vs) {
    double best = 1e300;
    std::size_t bi = 0, bj = 1;
    for (std::size_t j = 1; j < vs.size(); ++j) {
        double s = 0;
        for (std::size_t k = 0; k < vs[0].size(); ++k) s += (vs[0][k] - vs[j][k]) * (vs[0][k] - vs[j][k]);
        if (s < best) {
            best = s;
            bj = j;
        }
    }
    double m = 0;
    for (std::size_t k = 0; k < vs[0].size(); ++k) m += std::pow((vs[bi][k] + vs[bj][k]) / 2, 2);
    double scale = 1 / std::sqrt(m);
    scale_all(vs, scale);
}

template <class S>
std::vector<Vec<S>> simplex_vertices(int n) {
    if constexpr (std::is_same_v<S, double>) {
        // e_1..e_n and a point on the diagonal, centered
        std::vector<Vec<double>> vs;
        for (int i = 0; i < n; ++i) {
            Vec<double> v(n, 0.0);
            v[i] = 1;
            vs.push_back(v);
        }
        double alpha = (1 - std::sqrt(double(n + 1))) / n;
        vs.push_back(Vec<double>(n, alpha));
        Vec<double> c(n, 0.0);
        for (auto& v : vs)
            for (int i = 0; i < n; ++i) c[i] += v[i] / (n + 1);
        for (auto& v : vs)
            for (int i = 0; i < n; ++i) v[i] -= c[i];
        edge_scribe(vs);
        return vs;
    } else {
        if (n == 3) {
            return {{S(1), S(1), S(1)}, {S(1), S(-1), S(-1)}, {S(-1), S(1), S(-1)}, {S(-1), S(-1), S(1)}};
        }
        if (n == 2) {
            auto r3 = num::root<S>(3);
            return {{S(0), S(2)}, {r3, S(-1)}, {-r3, S(-1)}};
        }
        throw field_error("simplex of dimension " + std::to_string(n) + " needs float mode");
    }
}

}  // namespace detail

template <class S>
std::vector<Vec<S>> polytope_vertices(PolytopeId id) {
    using namespace detail;
    int n = id.n;
    auto zero = num::from_int<S>(0), one = num::from_int<S>(1);
    std::vector<Vec<S>> vs;
    switch (id.family) {
        case Family::Simplex:
            return simplex_vertices<S>(n);
        case Family::Orthoplex: {
            auto r2 = num::root<S>(2);
            for (int s : {1, -1})
                for (int i = 0; i < n; ++i) {
                    Vec<S> v(n, zero);
                    v[i] = s > 0 ? r2 : -r2;
                    vs.push_back(v);
                }
            return vs;
        }
        case Family::Cube: {
            auto s = one / num::root<S>(n - 1);
            // binary order: bit i set means coordinate i negative
            for (int mask = 0; mask < (1 << n); ++mask) {
                Vec<S> v(n);
                for (int i = 0; i < n; ++i) v[i] = (mask >> i & 1) ? -s : s;
                vs.push_back(v);
            }
            return vs;
        }
        case Family::Icosahedron: {
            auto p = golden<S>();
            for (auto& c : cyclic<S>({zero, one, p}))
                for (auto& v : signed_patterns(c)) vs.push_back(v);
            scale_all(vs, one / p);
            return vs;
        }
        case Family::Dodecahedron: {
            auto p = golden<S>();
            for (auto& v : signed_patterns<S>({one, one, one})) vs.push_back(v);
            for (auto& c : cyclic<S>({zero, one / p, p}))
                for (auto& v : signed_patterns(c)) vs.push_back(v);
            scale_all(vs, one / p);
            return vs;
        }
        case Family::Cell24: {
            auto half = num::rational<S>(1, 2);
            for (int i = 0; i < 4; ++i)
                for (int s : {1, -1}) {
                    Vec<S> v(4, zero);
                    v[i] = num::from_int<S>(s);
                    vs.push_back(v);
                }
            for (auto& v : signed_patterns<S>({half, half, half, half})) vs.push_back(v);
            scale_all(vs, num::from_int<S>(2) / num::root<S>(3));
            return vs;
        }
        case Family::Cell600:
        case Family::Cell120: {
            if constexpr (std::is_same_v<S, double>) {
                vs = id.family == Family::Cell600 ? hexacosichoron_unit() : hecatonicosachoron_directions();
                edge_scribe(vs);
                return vs;
            }
            throw field_error(polytope_name(id) + " needs float mode");
        }
    }
    return vs;
}

// Ball-arrangement projection: vertex v -> (v, 1) / sqrt(|v|^2 - 1).
template <class S>
Ball<S> vertex_ball(const Vec<S>& v) {
    S n2 = dot(v, v) - num::from_int<S>(1);
    if (num::sign(n2) <= 0) throw std::invalid_argument("vertex inside or on the unit sphere");
    S inv = num::from_int<S>(1) / num::sqrt_or_throw(n2);
    Vec<S> x;
    for (auto& c : v) x.push_back(c * inv);
    x.push_back(inv);
    return Ball<S>(std::move(x));
}

template <class S>
std::vector<Ball<S>> project_vertices(const std::vector<Vec<S>>& vs) {
    std::vector<Ball<S>> out;
    for (auto& v : vs) out.push_back(vertex_ball(v));
    return out;
}

template <class S>
RegularPolytope<S> edge_scribed(PolytopeId id) {
    RegularPolytope<S> p;
    p.id = id;
    p.vertices = polytope_vertices<S>(id);
    p.ell = midsphere_ratio<S>(id);
    std::vector<Vec<double>> dv;
    for (auto& v : p.vertices) dv.push_back(to_double(v));
    auto balls = project_vertices(dv);
    p.lattice = face_lattice(dv.size(), detect_facets(balls), id.n);
    p.antipode.assign(dv.size(), -1);
    for (std::size_t i = 0; i < dv.size(); ++i)
        for (std::size_t j = 0; j < dv.size(); ++j) {
            double s = 0;
            for (std::size_t k = 0; k < dv[i].size(); ++k) s += std::abs(dv[i][k] + dv[j][k]);
            if (s < 1e-9) p.antipode[i] = int(j);
        }
    return p;
}

template <class S>
RegularPolytope<S> edge_scribed(const std::string& name, int n = 0) {
    return edge_scribed<S>(polytope_id(name, n));
}

template <class S>
Packing<S> ball_projection(const RegularPolytope<S>& p) {
    auto pk = make_packing(project_vertices(p.vertices), p.name());
    pk.facets = p.lattice.facets();
    return pk;
}

// Proper rotation taking the unit vector c to the last axis.
inline Matrix<double> rotation_to_north(Vec<double> c) {
    std::size_t n = c.size();
    double len = std::sqrt(dot(c, c));
    for (auto& v : c) v /= len;
    auto id = Matrix<double>::identity(n);
    Vec<double> u = c;
    u[n - 1] -= 1;
    double uu = dot(u, u);
    if (uu < 1e-24) return id;
    Matrix<double> h = id;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) h(i, j) -= 2 * u[i] * u[j] / uu;
    // compose with a mirror fixing the last axis so the determinant is +1
    for (std::size_t j = 0; j < n; ++j) h(0, j) = -h(0, j);
    return h;
}

struct CbpLayer {
    int count;
    double coefficient;  // curvature = kappa_P + coefficient * h
    double curvature;
};

struct CbpTable {
    int face_dim;
    double kappa_P;
    double h;
    std::vector<CbpLayer> layers;
};

struct CbpResult {
    Packing<double> packing;
    CbpTable table;
    std::vector<int> face;  // the centered face
};

template <class S>
CbpResult cbp_projection(const RegularPolytope<S>& p, int i) {
    if (i < 0 || i >= p.dim()) throw std::invalid_argument("face dimension out of range");
    const auto& face = p.lattice.faces[i].front();
    std::vector<Vec<double>> dv;
    for (auto& v : p.vertices) dv.push_back(to_double(v));
    Vec<double> c(dv[0].size(), 0.0);
    for (int v : face)
        for (std::size_t k = 0; k < c.size(); ++k) c[k] += dv[v][k];
    auto r = rotation_to_north(c);
    for (auto& v : dv) v = r * v;
    CbpResult res;
    res.face = face;
    res.packing = make_packing(project_vertices(dv), p.name());
    res.packing.facets = p.lattice.facets();

    double ell = num::to_double(p.ell);
    double kp = 1 / ell;
    double tmin = 1e300;
    for (auto& v : dv) {
        double t = v.back();
        if (std::abs(t) > 1e-9) tmin = std::min(tmin, std::abs(t));
    }
    res.table.face_dim = i;
    res.table.kappa_P = kp;
    res.table.h = kp * tmin;
    std::vector<double> ks;
    for (auto& b : res.packing.balls) ks.push_back(curvature(b));
    std::sort(ks.begin(), ks.end());
    for (double k : ks) {
        if (!res.table.layers.empty() && std::abs(res.table.layers.back().curvature - k) < 1e-9) {
            res.table.layers.back().count++;
            continue;
        }
        res.table.layers.push_back({1, (k - kp) / res.table.h, k});
    }
    return res;
}

struct SpectrumEntry {
    double value;
    int multiplicity;
    bool exact;  // value is an integer certified by exact rank computation
};

// Eigenvalues of the Gram matrix. Integer eigenvalues are certified exactly whenever the
// Gram matrix is exact (or snaps to integers in float mode).
template <class S>
std::vector<SpectrumEntry> mobius_spectrum(const Packing<S>& p) {
    auto g = gram(p);
    std::size_t n = g.rows();
    Eigen::MatrixXd m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = num::to_double(g(i, j));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
    auto ev = es.eigenvalues();
    std::vector<SpectrumEntry> out;
    for (Eigen::Index k = 0; k < ev.size(); ++k) {
        double v = ev[k];
        if (!out.empty() && std::abs(out.back().value - v) < 1e-6 * std::max(1.0, std::abs(v))) {
            out.back().multiplicity++;
            continue;
        }
        out.push_back({v, 1, false});
    }

    // exact Gram: either native exact scalars or an integer matrix in float mode
    std::optional<Matrix<Exact>> ge;
    if constexpr (std::is_same_v<S, double>) {
        Matrix<Exact> t(n, n);
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = 0; j < n && ok; ++j) {
                double r = std::round(g(i, j));
                ok = std::abs(g(i, j) - r) < 1e-9;
                t(i, j) = Exact(static_cast<std::int64_t>(r));
            }
        if (ok) ge = t;
    } else {
        ge = g;
    }
    for (auto& e : out) {
        double r = std::round(e.value);
        if (std::abs(e.value - r) > 1e-6 || !ge) continue;
        auto shifted = *ge;
        for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= Exact(static_cast<std::int64_t>(r));
        if (rank(shifted) + std::size_t(e.multiplicity) == n) {
            e.value = r;
            e.exact = true;
        }
    }
    return out;
}

// kappa_f = -<x_N, x_f> with x_N = e_{d+1} + e_{d+2}; equals the mean member curvature.
template <class S>
S face_curvature(const Packing<S>& p, const std::vector<int>& face) {
    auto xf = lorentz_barycenter(p.balls, face);
    Vec<S> xn(xf.size(), num::from_int<S>(0));
    xn[xn.size() - 2] = num::from_int<S>(1);
    xn[xn.size() - 1] = num::from_int<S>(1);
    return -inner(xn, xf);
}

template <class S>
std::vector<std::vector<int>> facets_of(const Packing<S>& p) {
    return p.facets.empty() ? detect_facets(p.balls) : p.facets;
}

template <class S>
std::vector<int> all_indices(const Packing<S>& p) {
    std::vector<int> v(p.size());
    std::iota(v.begin(), v.end(), 0);
    return v;
}

// One dual ball per facet, oriented against the packing's barycenter.
template <class S>
std::vector<Ball<S>> dual_packing(const Packing<S>& p) {
    auto center = lorentz_barycenter(p.balls, all_indices(p));
    std::vector<Ball<S>> out;
    for (auto& f : facets_of(p)) out.push_back(dual_ball(coords_of(p.balls, f), &center));
    return out;
}

// Antipodal partner from the Gram pattern (value -3), -1 if none.
template <class S>
std::vector<int> gram_antipodes(const Packing<S>& p) {
    std::vector<int> a(p.size(), -1);
    auto g = gram(p);
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < p.size(); ++j)
            if (i != j && num::eq(g(i, j), num::from_int<S>(-3))) a[i] = int(j);
    return a;
}

template <class S>
bool is_orthoplicial(const Packing<S>& p) {
    if (p.size() != 8 || p.dim() != 3) return false;
    auto g = gram(p);
    for (int i = 0; i < 8; ++i) {
        int minus3 = 0, minus1 = 0;
        for (int j = 0; j < 8; ++j) {
            if (i == j) {
                if (!num::eq(g(i, j), num::from_int<S>(1))) return false;
            } else if (num::eq(g(i, j), num::from_int<S>(-1)))
                ++minus1;
            else if (num::eq(g(i, j), num::from_int<S>(-3)))
                ++minus3;
        }
        if (minus1 != 6 || minus3 != 1) return false;
    }
    return true;
}

// Splits the 16 dual balls of an orthoplicial packing by the parity of their facet words.
template <class S>
std::pair<Packing<S>, Packing<S>> trinity(const Packing<S>& p) {
    if (!is_orthoplicial(p)) throw std::invalid_argument("trinity needs an orthoplicial packing");
    auto anti = gram_antipodes(p);
    std::vector<int> rep;  // first member of each antipodal pair
    for (int i = 0; i < 8; ++i)
        if (anti[i] > i) rep.push_back(i);
    auto center = lorentz_barycenter(p.balls, all_indices(p));
    std::vector<Ball<S>> even, odd;
    for (int mask = 0; mask < 16; ++mask) {
        std::vector<int> facet;
        for (int k = 0; k < 4; ++k) facet.push_back(mask >> k & 1 ? anti[rep[k]] : rep[k]);
        auto b = dual_ball(coords_of(p.balls, facet), &center);
        (__builtin_popcount(mask) % 2 == 0 ? even : odd).push_back(b);
    }
    auto a = make_packing(even, "orthoplex4"), b = make_packing(odd, "orthoplex4");
    return {a, b};
}

}  // namespace polypack
