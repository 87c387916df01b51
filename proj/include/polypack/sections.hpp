#pragma once

#include <algorithm>
#include <set>
#include <unordered_set>

#include "apollonian.hpp"

namespace polypack {

enum class SectionKind { Tetrahedral, Octahedral, Cubical };

inline std::string kind_name(SectionKind k) {
    switch (k) {
        case SectionKind::Tetrahedral: return "tetra";
        case SectionKind::Octahedral: return "octa";
        case SectionKind::Cubical: return "cubic";
    }
    return "?";
}

inline SectionKind parse_kind(const std::string& s) {
    if (s == "tetra" || s == "tetrahedral" || s == "T") return SectionKind::Tetrahedral;
    if (s == "octa" || s == "octahedral" || s == "O") return SectionKind::Octahedral;
    if (s == "cubic" || s == "cubical" || s == "C") return SectionKind::Cubical;
    throw std::invalid_argument("unknown section kind: " + s);
}

// Euclidean motion taking the plane with ball vector h onto {x_1 = 0} (oriented by +e_1).
template <class S>
LorentzMap<S> plane_frame(const Vec<S>& h) {
    std::size_t n = h.size(), d = n - 2;
    if (!num::is_zero(curvature(h))) throw std::invalid_argument("section plane must have curvature 0");
    S norm = num::sqrt_or_throw(inner(h, h));
    Vec<S> u(n);
    for (std::size_t i = 0; i < n; ++i) u[i] = h[i] / norm;
    Vec<S> normal(u.begin(), u.begin() + d), shift(d);
    for (std::size_t i = 0; i < d; ++i) shift[i] = -u[d] * normal[i];
    auto m = translation(shift);
    Vec<S> v = normal;
    v[0] -= num::from_int<S>(1);
    if (!num::is_zero(dot(v, v))) {
        auto r = Matrix<S>::identity(d);
        S vv = dot(v, v);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) r(i, j) -= num::from_int<S>(2) * v[i] * v[j] / vv;
        m = orthogonal(r) * m;
    }
    return m;
}

// Intersection of a ball orthogonal to the plane h with that plane, in the plane's coordinates.
template <class S>
Ball<S> cross_section(const Ball<S>& b, const Vec<S>& h) {
    if (!num::is_zero(inner(b.x, h))) throw std::invalid_argument("ball is not orthogonal to the section plane");
    auto y = plane_frame(h) * b.x;
    return Ball<S>(Vec<S>(y.begin() + 1, y.end()));
}

template <class S>
Ball<S> embed_in_plane(const Ball<S>& b) {
    Vec<S> x{num::from_int<S>(0)};
    x.insert(x.end(), b.x.begin(), b.x.end());
    return Ball<S>(std::move(x));
}

// diag(1, A)
template <class S>
LorentzMap<S> embed_map(const LorentzMap<S>& a) {
    std::size_t n = a.rows() + 1;
    Matrix<S> m(n, n);
    m(0, 0) = num::from_int<S>(1);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i + 1, j + 1) = a(i, j);
    return m;
}

// ---------------------------------------------------------------------------------------
// Cubical lift: b -> lambda((eps, x_b) / sqrt2), lambda the homothety of ratio 1/sqrt2.

template <class S>
LorentzMap<S> cubical_rescale() {
    return scaling<S>(3, num::from_int<S>(1) / num::root<S>(2));
}

template <class S>
Ball<S> cubical_lift_ball(const Ball<S>& disk, int eps) {
    S r = num::from_int<S>(1) / num::root<S>(2);
    Vec<S> x{eps > 0 ? r : -r};
    for (auto& v : disk.x) x.push_back(v * r);
    return Ball<S>(cubical_rescale<S>() * x);
}

template <class S>
Ball<S> cubical_project(const Ball<S>& ball) {
    auto y = scaling<S>(3, num::root<S>(2)) * ball.x;
    S s = num::root<S>(2);
    Vec<S> x;
    for (std::size_t i = 1; i < y.size(); ++i) x.push_back(y[i] * s);
    return Ball<S>(std::move(x));
}

template <class S>
int cubical_sign(const Ball<S>& ball) {
    return num::sign(ball.x[0]) >= 0 ? 1 : -1;
}

// ---------------------------------------------------------------------------------------
// Sections of orthoplicial clusters. Seeds are in canonical order b1 b2 b3 b4 b-1 b-2 b-3 b-4.

template <class S>
struct Section {
    SectionKind kind;
    Packing<S> seed;
    ApollonianGroup<S> gamma;
    std::vector<int> X;
    Vec<S> plane;          // tetra/octa
    std::vector<int> eps;  // cubic, per seed ball
    ApollonianGroup<S> extra;  // octa: the sign pattern absent from the generating list
};

namespace detail {

inline std::string pattern_str(const std::array<int, 3>& s) {
    std::string out;
    for (int k = 0; k < 3; ++k) {
        if (s[k] < 0) out += '-';
        out += char('1' + k);
    }
    return out;
}

}  // namespace detail

inline std::vector<std::array<int, 3>> octahedral_patterns() {
    return {{1, 1, 1}, {-1, 1, 1}, {1, -1, 1}, {1, 1, -1}, {-1, -1, 1}, {1, -1, -1}, {-1, 1, -1}};
}
inline std::array<int, 3> octahedral_missing_pattern() { return {-1, -1, -1}; }

// t_ijk = s_{ijk4} s_{ijk-4}
template <class S>
LorentzMap<S> octahedral_generator(const ApollonianGroup<S>& g, const std::array<int, 3>& s) {
    FacetWord a, b;
    for (int k = 0; k < 3; ++k) a.sign[k] = b.sign[k] = s[k];
    a.sign[3] = 1;
    b.sign[3] = -1;
    return g.product(a.str(), b.str());
}

template <class S>
Section<S> tetrahedral_section(const Packing<S>& p, Vec<S> plane) {
    Section<S> s{SectionKind::Tetrahedral, p, {}, {0, 1, 2, 3}, std::move(plane), {}, {}};
    auto g = generators(p);
    for (std::size_t i = 0; i < g.size(); ++i)
        if (FacetWord::parse(g.labels[i]).bars() == 1) s.gamma.add(g.gens[i], g.labels[i], g.facets[i]);
    return s;
}

template <class S>
Section<S> octahedral_section(const Packing<S>& p, Vec<S> plane) {
    Section<S> s{SectionKind::Octahedral, p, {}, {0, 1, 2, 4, 5, 6}, std::move(plane), {}, {}};
    auto g = generators(p);
    for (auto& pat : octahedral_patterns()) s.gamma.add(octahedral_generator(g, pat), "t" + detail::pattern_str(pat));
    auto m = octahedral_missing_pattern();
    s.extra.add(octahedral_generator(g, m), "t" + detail::pattern_str(m));
    return s;
}

template <class S>
Section<S> cubical_section(const Packing<S>& p) {
    Section<S> s{SectionKind::Cubical, p, {}, {0, 1, 2, 3, 4, 5, 6, 7}, {}, {}, {}};
    auto g = generators(p);
    for (std::size_t i = 0; i < g.size(); ++i)
        if (FacetWord::parse(g.labels[i]).bars() == 2) s.gamma.add(g.gens[i], g.labels[i], g.facets[i]);
    for (auto& b : p.balls) s.eps.push_back(cubical_sign(b));
    return s;
}

template <class S>
Section<S> section_tetrahedral() {
    return tetrahedral_section(standard_orthoplicial<S>(), Vec<S>{0, 1, 0, 1, 1});
}

template <class S>
Section<S> section_octahedral() {
    return octahedral_section(standard_orthoplicial<S>(), Vec<S>{1, -1, 0, 0, 0});
}

// Seed: the orthoplicial packing of the ridge-scribed 4-cube, shrunk by 1/sqrt2 so that the
// projection preserves curvature.
template <class S>
Section<S> section_cubical() {
    auto b = cubical_orthoplicial<S>();
    return cubical_section(apply(cubical_rescale<S>(), b));
}

// The disks the section corresponds to, in the order of X.
template <class S>
Packing<S> section_disks(const Section<S>& s) {
    std::vector<Ball<S>> out;
    for (int i : s.X)
        out.push_back(s.kind == SectionKind::Cubical ? cubical_project(s.seed.balls[i])
                                                     : cross_section(s.seed.balls[i], s.plane));
    return make_packing(std::move(out), kind_name(s.kind));
}

// ---------------------------------------------------------------------------------------
// Standard planar packings and realization from curvatures.

// tetra: 4 disks; octa: d1 d2 d3 d-1 d-2 d-3; cubic: b1..b4 of one bipartition class, then antipodes
template <class S>
Packing<S> standard_disk_packing(SectionKind k) {
    switch (k) {
        case SectionKind::Tetrahedral: return section_disks(section_tetrahedral<S>());
        case SectionKind::Octahedral: return section_disks(section_octahedral<S>());
        case SectionKind::Cubical: {
            auto r2 = num::root<S>(2);
            const int signs[8][3] = {{1, 1, 1},    {-1, 1, -1}, {-1, -1, 1}, {1, -1, -1},
                                     {-1, -1, -1}, {1, -1, 1},  {1, 1, -1},  {-1, 1, 1}};
            std::vector<Ball<S>> b;
            for (auto& s : signs) b.push_back(Ball<S>(Vec<S>{num::from_int<S>(s[0]), num::from_int<S>(s[1]),
                                                             num::from_int<S>(s[2]), r2}));
            return make_packing(std::move(b), "cubic");
        }
    }
    throw std::invalid_argument("unknown section kind");
}

// A Lorentz image of `ref` whose balls idx[i] have curvature kappa[i]. When the curvatures
// leave one degree of freedom both completions are tried; the one with the lexicographically
// smaller curvature vector is returned.
template <class S>
Packing<S> realize_curvatures(const Packing<S>& ref, const std::vector<int>& idx, const Vec<S>& kappa) {
    std::size_t n = ref.balls.at(0).x.size();
    if (idx.size() != kappa.size()) throw std::invalid_argument("one curvature per selected ball");
    Matrix<S> rows(idx.size(), n);
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) rows(i, j) = ref.balls[idx[i]].x[j];
    auto base = solve(rows, kappa);
    if (!base) throw not_realizable("curvatures inconsistent with the configuration");
    auto ns = nullspace(rows);
    std::vector<Vec<S>> ws;
    if (ns.empty()) {
        if (!num::is_zero(inner(*base, *base))) throw not_realizable("curvatures violate the quadratic relation");
        ws.push_back(*base);
    } else if (ns.size() == 1) {
        const auto& z = ns[0];
        S a = inner(z, z), b = num::from_int<S>(2) * inner(*base, z), c = inner(*base, *base);
        std::vector<S> ts;
        if (num::is_zero(a)) {
            if (num::is_zero(b)) {
                if (!num::is_zero(c)) throw not_realizable("curvatures violate the quadratic relation");
                ts.push_back(num::from_int<S>(0));
            } else {
                ts.push_back(-c / b);
            }
        } else {
            S disc = b * b - num::from_int<S>(4) * a * c;
            if (num::sign(disc) < 0) throw not_realizable("negative discriminant: curvatures not realizable");
            S r = num::sqrt_or_throw(disc);
            ts.push_back((-b - r) / (num::from_int<S>(2) * a));
            if (!num::is_zero(r)) ts.push_back((-b + r) / (num::from_int<S>(2) * a));
        }
        for (auto& t : ts) {
            Vec<S> w = *base;
            for (std::size_t j = 0; j < n; ++j) w[j] += t * z[j];
            ws.push_back(std::move(w));
        }
    } else {
        throw std::invalid_argument("too few curvatures to fix the packing");
    }
    auto lorentz = lorentz_form<S>(n);
    Vec<S> v = lorentz * curvature_functional<S>(n);
    std::optional<Packing<S>> best;
    Vec<S> best_k;
    for (auto& w : ws) {
        Vec<S> u = lorentz * w;
        Vec<S> diff(n);
        for (std::size_t j = 0; j < n; ++j) diff[j] = u[j] - v[j];
        LorentzMap<S> m = vec_eq(u, v) ? Matrix<S>::identity(n) : reflection_in(diff);
        if (num::sign(m(n - 1, n - 1)) <= 0) continue;  // would reverse every orientation
        auto p = apply(m, ref);
        Vec<S> k;
        for (auto& b : p.balls) k.push_back(curvature(b));
        bool better = !best;
        if (best)
            for (std::size_t j = 0; j < k.size(); ++j)
                if (!num::eq(k[j], best_k[j])) {
                    better = num::sign(k[j] - best_k[j]) < 0;
                    break;
                }
        if (better) {
            best = std::move(p);
            best_k = std::move(k);
        }
    }
    if (!best) throw not_realizable("curvatures only realizable with reversed orientation");
    best->tag = ref.tag;
    return *best;
}

// Disks of the standard packing that realize() prescribes curvatures for.
inline std::vector<int> input_indices(SectionKind k) {
    switch (k) {
        case SectionKind::Tetrahedral: return {0, 1, 2, 3};
        case SectionKind::Octahedral: return {0, 1, 2};
        case SectionKind::Cubical: return {0, 5, 2, 7};
    }
    throw std::invalid_argument("unknown section kind");
}

// tetra: four curvatures; octa: three of a face, optional center curvature (default: the
// smaller root); cubic: three along a path, the middle disk tangent to both others.
template <class S>
Packing<S> realize(SectionKind k, const Vec<S>& kappa, std::optional<S> center = {}) {
    auto ref = standard_disk_packing<S>(k);
    switch (k) {
        case SectionKind::Tetrahedral:
            detail::require_arity(kappa, 4, "tetrahedral realization");
            if (num::sign(simplicial(kappa)) != 0) throw not_realizable("not a Descartes quadruple");
            return realize_curvatures(ref, {0, 1, 2, 3}, kappa);
        case SectionKind::Octahedral: {
            detail::require_arity(kappa, 3, "octahedral realization");
            if (!center) center = solve_octahedral_center(kappa).first;
            Vec<S> full = kappa;
            for (auto& v : kappa) full.push_back(num::from_int<S>(2) * *center - v);
            return realize_curvatures(ref, {0, 1, 2, 3, 4, 5}, full);
        }
        case SectionKind::Cubical: {
            detail::require_arity(kappa, 3, "cubical realization");
            if (num::sign(hypercubical(kappa)) < 0) throw not_realizable("negative radicand: cubical triple not realizable");
            Vec<S> face = kappa;
            face.push_back(cubical_fourth(kappa[0], kappa[1], kappa[2]));
            return realize_curvatures(ref, input_indices(k), face);
        }
    }
    throw std::invalid_argument("unknown section kind");
}

// ---------------------------------------------------------------------------------------
// Lifts of planar packings to orthoplicial sphere packings.

template <class S>
struct Lift {
    SectionKind kind;
    Packing<S> planar;   // canonical order (see standard_disk_packing)
    Packing<S> ambient;  // canonical orthoplicial order
    std::vector<int> image;  // ambient index of each planar disk
    Section<S> section;
    // one entry per planar facet: its reflection, the ambient element it corresponds to, and
    // the ambient word
    std::vector<LorentzMap<S>> planar_gens;
    std::vector<LorentzMap<S>> ambient_gens;
    std::vector<std::string> words;
    std::vector<std::vector<int>> planar_facets;
};

namespace detail {

template <class S>
void require_gram(const std::vector<Ball<S>>& b, int i, int j, std::int64_t v, const char* what) {
    if (!num::eq(inner(b[i], b[j]), num::from_int<S>(v))) throw std::invalid_argument(what);
}

template <class S>
LorentzMap<S> facet_reflection(const std::vector<Ball<S>>& balls, const std::vector<int>& facet) {
    auto center = lorentz_barycenter(balls, [&] {
        std::vector<int> all(balls.size());
        std::iota(all.begin(), all.end(), 0);
        return all;
    }());
    return reflection_in(dual_vector(coords_of(balls, facet), &center));
}

template <class S>
void attach_generators(Lift<S>& l) {
    auto g = generators(l.ambient);
    std::vector<int> pre(8, -1);
    for (std::size_t i = 0; i < l.image.size(); ++i) pre[l.image[i]] = int(i);
    auto planar_facet = [&](const FacetWord& w) {
        std::vector<int> f;
        for (int b : w.balls())
            if (pre[b] >= 0) f.push_back(pre[b]);
        std::sort(f.begin(), f.end());
        return f;
    };
    switch (l.kind) {
        case SectionKind::Tetrahedral:
            for (auto& w : all_facet_words())
                if (w.bars() == 1) {
                    l.planar_facets.push_back(planar_facet(w));
                    l.ambient_gens.push_back(g.by_label(w.str()));
                    l.words.push_back(w.str());
                }
            break;
        case SectionKind::Octahedral: {
            auto pats = octahedral_patterns();
            pats.push_back(octahedral_missing_pattern());
            for (auto& s : pats) {
                FacetWord w;
                for (int k = 0; k < 3; ++k) w.sign[k] = s[k];
                l.planar_facets.push_back(planar_facet(w));
                l.ambient_gens.push_back(octahedral_generator(g, s));
                l.words.push_back("t" + pattern_str(s));
            }
            break;
        }
        case SectionKind::Cubical:
            for (auto& w : all_facet_words())
                if (w.bars() == 2) {
                    l.planar_facets.push_back(planar_facet(w));
                    l.ambient_gens.push_back(g.by_label(w.str()));
                    l.words.push_back(w.str());
                }
            break;
    }
    // conjugate the reference reflections: direct ones have large intermediate terms
    auto ref = standard_disk_packing<S>(l.kind);
    auto f = frame_between(ref.balls, l.planar.balls);
    for (auto& facet : l.planar_facets) {
        if (f) {
            auto q = lorentz_form<S>(f->rows());
            l.planar_gens.push_back(*f * facet_reflection(ref.balls, facet) * (q * f->transpose() * q));
        } else {
            l.planar_gens.push_back(facet_reflection(l.planar.balls, facet));
        }
    }
}

}  // namespace detail

template <class S>
Lift<S> lift_tetrahedral(const Packing<S>& planar) {
    const auto& d = planar.balls;
    if (d.size() != 4 || d[0].dim() != 2) throw std::invalid_argument("tetrahedral lift needs 4 disks");
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) detail::require_gram(d, i, j, -1, "disks are not mutually tangent");
    Vec<S> k;
    for (auto& b : d) k.push_back(curvature(b));
    if (!num::is_zero(simplicial(k))) throw std::invalid_argument("not a Descartes quadruple");
    std::vector<Vec<S>> up;
    for (auto& b : d) up.push_back(embed_in_plane(b).x);
    auto xp = facet_center_vector(up);
    std::vector<Ball<S>> balls;
    for (auto& u : up) balls.emplace_back(u);
    for (auto& u : up) {
        Vec<S> v(u.size());
        for (std::size_t i = 0; i < u.size(); ++i) v[i] = num::from_int<S>(2) * xp[i] - u[i];
        balls.emplace_back(std::move(v));
    }
    Lift<S> l{SectionKind::Tetrahedral, make_packing(d, "tetra"), make_packing(std::move(balls), "orthoplex4"),
              {0, 1, 2, 3}, {}, {}, {}, {}, {}};
    for (auto& w : all_facet_words()) l.ambient.facets.push_back(w.balls());
    Vec<S> e0(5, num::from_int<S>(0));
    e0[0] = num::from_int<S>(1);
    l.section = tetrahedral_section(l.ambient, e0);
    detail::attach_generators(l);
    return l;
}

namespace detail {

// Reorder 6 disks as d1 d2 d3 d-1 d-2 d-3 (antipodes have product -3).
template <class S>
std::vector<Ball<S>> octahedral_order(const std::vector<Ball<S>>& d) {
    if (d.size() != 6 || d[0].dim() != 2) throw std::invalid_argument("octahedral lift needs 6 disks");
    std::vector<int> anti(6, -1);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            if (i == j) continue;
            S v = inner(d[i], d[j]);
            if (num::eq(v, num::from_int<S>(-3))) {
                if (anti[i] >= 0) throw std::invalid_argument("not an octahedral disk packing");
                anti[i] = j;
            } else if (!num::eq(v, num::from_int<S>(-1))) {
                throw std::invalid_argument("not an octahedral disk packing");
            }
        }
    std::vector<int> first;
    for (int i = 0; i < 6; ++i) {
        if (anti[i] < 0) throw std::invalid_argument("not an octahedral disk packing");
        if (anti[i] > i) first.push_back(i);
    }
    std::vector<Ball<S>> out;
    for (int i : first) out.push_back(d[i]);
    for (int i : first) out.push_back(d[anti[i]]);
    return out;
}

// Reorder 8 disks as one bipartition class (input order, starting with the first disk)
// followed by the antipode of each.
template <class S>
std::vector<Ball<S>> cubical_order(const std::vector<Ball<S>>& d) {
    if (d.size() != 8 || d[0].dim() != 2) throw std::invalid_argument("cubical lift needs 8 disks");
    std::vector<int> color(8, 0), anti(8, -1);
    std::vector<std::vector<int>> adj(8);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            if (i == j) continue;
            S v = inner(d[i], d[j]);
            if (num::eq(v, num::from_int<S>(-1)))
                adj[i].push_back(j);
            else if (num::eq(v, num::from_int<S>(-5)))
                anti[i] = j;
            else if (!num::eq(v, num::from_int<S>(-3)))
                throw std::invalid_argument("not a cubical disk packing");
        }
    std::vector<int> queue{0};
    color[0] = 1;
    for (std::size_t q = 0; q < queue.size(); ++q)
        for (int j : adj[queue[q]]) {
            if (color[j] == 0) {
                color[j] = -color[queue[q]];
                queue.push_back(j);
            } else if (color[j] == color[queue[q]]) {
                throw std::invalid_argument("tangency graph is not bipartite");
            }
        }
    for (int i = 0; i < 8; ++i)
        if (adj[i].size() != 3 || anti[i] < 0 || color[i] == 0 || color[anti[i]] == color[i])
            throw std::invalid_argument("not a cubical disk packing");
    std::vector<Ball<S>> out;
    for (int i = 0; i < 8; ++i)
        if (color[i] > 0) out.push_back(d[i]);
    for (int i = 0; i < 8; ++i)
        if (color[i] > 0) out.push_back(d[anti[i]]);
    return out;
}

}  // namespace detail

// Both solutions of <x, b_j> = -1 over the six lifted disks with <x, x> = 1 are kept: they
// become b4 and b-4.
template <class S>
Lift<S> lift_octahedral(const Packing<S>& planar) {
    auto d = detail::octahedral_order(planar.balls);
    std::vector<Vec<S>> up;
    for (auto& b : d) up.push_back(embed_in_plane(b).x);
    auto rows = product_rows(up);
    auto base = solve(rows, Vec<S>(6, num::from_int<S>(-1)));
    auto ns = nullspace(rows);
    if (!base || ns.size() != 1) throw std::invalid_argument("octahedral completion is inconsistent");
    const auto& z = ns[0];
    S a = inner(z, z), b = num::from_int<S>(2) * inner(*base, z), c = inner(*base, *base) - num::from_int<S>(1);
    if (num::is_zero(a)) throw std::invalid_argument("octahedral completion is degenerate");
    S disc = b * b - num::from_int<S>(4) * a * c;
    if (num::sign(disc) <= 0) throw std::invalid_argument("octahedral completion has no pair of solutions");
    S r = num::sqrt_or_throw(disc);
    auto at = [&](const S& t) {
        Vec<S> x = *base;
        for (std::size_t i = 0; i < x.size(); ++i) x[i] += t * z[i];
        return Ball<S>(std::move(x));
    };
    auto p = at((-b - r) / (num::from_int<S>(2) * a)), q = at((-b + r) / (num::from_int<S>(2) * a));
    if (num::sign(p.x[0] - q.x[0]) < 0) std::swap(p, q);
    std::vector<Ball<S>> balls{Ball<S>(up[0]), Ball<S>(up[1]), Ball<S>(up[2]), p,
                               Ball<S>(up[3]), Ball<S>(up[4]), Ball<S>(up[5]), q};
    Lift<S> l{SectionKind::Octahedral, make_packing(d, "octa"), make_packing(std::move(balls), "orthoplex4"),
              {0, 1, 2, 4, 5, 6}, {}, {}, {}, {}, {}};
    for (auto& w : all_facet_words()) l.ambient.facets.push_back(w.balls());
    Vec<S> e0(5, num::from_int<S>(0));
    e0[0] = num::from_int<S>(1);
    l.section = octahedral_section(l.ambient, e0);
    detail::attach_generators(l);
    return l;
}

// eps is +1 on the bipartition class of the first disk.
template <class S>
Lift<S> lift_cubical(const Packing<S>& planar) {
    auto d = detail::cubical_order(planar.balls);
    std::vector<Ball<S>> balls;
    for (int i = 0; i < 8; ++i) balls.push_back(cubical_lift_ball(d[i], i < 4 ? 1 : -1));
    Lift<S> l{SectionKind::Cubical, make_packing(d, "cubic"), make_packing(std::move(balls), "orthoplex4"),
              {0, 1, 2, 3, 4, 5, 6, 7}, {}, {}, {}, {}, {}};
    for (auto& w : all_facet_words()) l.ambient.facets.push_back(w.balls());
    l.section = cubical_section(l.ambient);
    detail::attach_generators(l);
    return l;
}

template <class S>
Lift<S> lift(SectionKind k, const Packing<S>& planar) {
    switch (k) {
        case SectionKind::Tetrahedral: return lift_tetrahedral(planar);
        case SectionKind::Octahedral: return lift_octahedral(planar);
        case SectionKind::Cubical: return lift_cubical(planar);
    }
    throw std::invalid_argument("unknown section kind");
}

// The planar disks recovered from the lifted packing.
template <class S>
Packing<S> unlift(const Lift<S>& l) {
    std::vector<Ball<S>> out;
    for (int i : l.image) {
        const auto& b = l.ambient.balls[i];
        out.push_back(l.kind == SectionKind::Cubical ? cubical_project(b) : Ball<S>(Vec<S>(b.x.begin() + 1, b.x.end())));
    }
    return make_packing(std::move(out), kind_name(l.kind));
}

// Curvatures of the four pairwise tangent spheres b1..b4.
template <class S>
Vec<S> seed_quadruple(const Lift<S>& l) {
    Vec<S> k;
    for (int i = 0; i < 4; ++i) k.push_back(curvature(l.ambient.balls[i]));
    return k;
}

// Sorted curvatures of the first ambient facet containing the images of the given planar
// disks: the sphere quadruple that seeds the lifted cluster.
template <class S>
Vec<S> lifted_seed(const Lift<S>& l, const std::vector<Ball<S>>& disks) {
    std::set<int> want;
    for (auto& d : disks) {
        auto it = std::find(l.planar.balls.begin(), l.planar.balls.end(), d);
        if (it == l.planar.balls.end()) throw std::invalid_argument("disk is not part of the lifted packing");
        want.insert(l.image[it - l.planar.balls.begin()]);
    }
    for (auto& w : all_facet_words()) {
        auto f = w.balls();
        if (!std::all_of(want.begin(), want.end(), [&](int i) { return std::count(f.begin(), f.end(), i); })) continue;
        Vec<S> k;
        for (int i : f) k.push_back(curvature(l.ambient.balls[i]));
        std::sort(k.begin(), k.end(), [](const S& a, const S& b) { return num::sign(a - b) < 0; });
        return k;
    }
    throw std::invalid_argument("disks do not lie in a common facet");
}

template <class S>
Vec<S> lifted_seed(const Lift<S>& l, const Packing<S>& realized) {
    std::vector<Ball<S>> d;
    for (int i : input_indices(l.kind)) d.push_back(realized.balls.at(i));
    return lifted_seed(l, d);
}

// Does every ambient generator act on the section like its planar counterpart?
template <class S>
bool generators_restrict(const Lift<S>& l) {
    for (std::size_t j = 0; j < l.planar_gens.size(); ++j)
        for (std::size_t i = 0; i < l.planar.size(); ++i) {
            auto a = l.ambient_gens[j] * l.ambient.balls[l.image[i]].x;
            auto p = l.planar_gens[j] * l.planar.balls[i].x;
            Ball<S> expect = l.kind == SectionKind::Cubical ? Ball<S>(a) : embed_in_plane(Ball<S>(p));
            if (l.kind == SectionKind::Cubical) {
                if (!vec_eq(cubical_project(Ball<S>(a)).x, p)) return false;
            } else if (!vec_eq(a, expect.x)) {
                return false;
            }
        }
    return true;
}

// ---------------------------------------------------------------------------------------
// Finite-depth certification of arithmetic equivalence.

struct EquivalenceReport {
    std::string kind;
    int depth = 0;
    std::size_t checked_words = 0;  // (word, seed disk) pairs evaluated
    std::size_t planar_balls = 0;
    std::vector<std::string> mismatches;
    bool generators_restrict = false;
    bool containment = false;       // planar curvatures among the ambient cluster's
    int ambient_depth = 0;
    std::size_t ambient_balls = 0;
    bool ok() const { return mismatches.empty() && containment && generators_restrict; }
};

namespace detail {

template <class S>
std::string word_string(const std::vector<std::string>& names, const std::vector<int>& word) {
    std::string s;
    for (int g : word) s += (s.empty() ? "" : "*") + names[g];
    return s.empty() ? "id" : s;
}

}  // namespace detail

// Breadth-first over pairs (planar disk, ambient sphere) moved by corresponding generators.
// Each planar disk must always meet the same sphere, of the same curvature. Planar curvatures
// must then all occur in the ambient orbit enumerated to the matching word length (twice the
// depth for the octahedral kind, whose generators are products of two reflections).
template <class S>
EquivalenceReport verify_arithmetic_equivalence(const Lift<S>& l, int depth, std::optional<double> max_curvature = {},
                                                OrbitOptions opt = {}) {
    if (depth < 0) throw std::invalid_argument("depth must be non-negative");
    EquivalenceReport rep;
    rep.kind = kind_name(l.kind);
    rep.depth = depth;
    rep.generators_restrict = generators_restrict(l);
    struct Node {
        Vec<S> planar, ambient;
        int parent, gen;
    };
    std::vector<Node> nodes;
    std::unordered_map<Vec<S>, int, detail::VecHash<S>, detail::VecEq<S>> seen;
    auto word_of = [&](int i) {
        std::vector<int> w;
        for (; nodes[i].parent >= 0; i = nodes[i].parent) w.push_back(nodes[i].gen);
        return w;
    };
    auto note = [&](const std::string& what, int parent, int gen) {
        if (rep.mismatches.size() >= 50) return;
        auto w = word_of(parent);
        w.insert(w.begin(), gen);
        int root = parent;
        while (nodes[root].parent >= 0) root = nodes[root].parent;
        rep.mismatches.push_back(what + " at " + detail::word_string<S>(l.words, w) + " on disk " + std::to_string(root));
    };
    for (std::size_t i = 0; i < l.planar.size(); ++i) {
        const auto& p = l.planar.balls[i].x;
        const auto& a = l.ambient.balls[l.image[i]].x;
        ++rep.checked_words;
        if (!num::eq(curvature(p), curvature(a))) rep.mismatches.push_back("seed disk " + std::to_string(i) + " curvature differs");
        if (seen.emplace(p, int(nodes.size())).second) nodes.push_back({p, a, -1, -1});
    }
    double cap = max_curvature ? *max_curvature + 1e-9 : std::numeric_limits<double>::infinity();
    std::size_t lo = 0;
    for (int dep = 0; dep < depth; ++dep) {
        std::size_t hi = nodes.size();
        for (std::size_t i = lo; i < hi; ++i)
            for (std::size_t g = 0; g < l.planar_gens.size(); ++g) {
                if (int(g) == nodes[i].gen) continue;
                auto p = l.planar_gens[g] * nodes[i].planar;
                if (std::abs(num::to_double(curvature(p))) > cap) continue;
                auto a = l.ambient_gens[g] * nodes[i].ambient;
                ++rep.checked_words;
                if (!num::eq(curvature(p), curvature(a))) note("curvature mismatch", int(i), int(g));
                auto it = seen.find(p);
                if (it != seen.end()) {
                    if (!vec_eq(nodes[it->second].ambient, a)) note("disk meets two spheres", int(i), int(g));
                    continue;
                }
                seen.emplace(p, int(nodes.size()));
                nodes.push_back({std::move(p), std::move(a), int(i), int(g)});
            }
        lo = hi;
    }
    rep.planar_balls = nodes.size();

    double kmax = 0;
    std::vector<S> planar_k;
    for (auto& n : nodes) {
        planar_k.push_back(curvature(n.planar));
        kmax = std::max(kmax, std::abs(num::to_double(planar_k.back())));
    }
    // Shallowest ambient depth that already shows every planar curvature, up to the word
    // length of the corresponding ambient elements.
    int limit = l.kind == SectionKind::Octahedral ? 2 * depth : depth;
    auto ambient_g = generators(l.ambient);
    std::vector<S> missing;
    for (int dep = depth; dep <= limit; ++dep) {
        auto amb = orbit(l.ambient, ambient_g, OrbitBound{dep, kmax}, opt);
        rep.ambient_depth = dep;
        rep.ambient_balls = amb.size();
        std::unordered_set<S> ks;
        for (auto& e : amb.entries) ks.insert(e.curvature);
        missing.clear();
        for (auto& k : planar_k)
            if (!ks.count(k)) missing.push_back(k);
        if (missing.empty()) break;
    }
    rep.containment = missing.empty();
    for (auto& k : missing)
        if (rep.mismatches.size() < 50) rep.mismatches.push_back("curvature " + num::str(k) + " missing from ambient orbit");
    return rep;
}

struct EighthPatternReport {
    int depth = 0;
    std::size_t with_listed = 0, with_all = 0;
    bool changes = false;
};

// Does adding the missing sign pattern to the octahedral section's generators change Gamma.X?
template <class S>
EighthPatternReport eighth_pattern_report(const Section<S>& s, int depth = 4, OrbitOptions opt = {}) {
    if (s.kind != SectionKind::Octahedral) throw std::invalid_argument("octahedral sections only");
    std::vector<Ball<S>> seeds;
    for (int i : s.X) seeds.push_back(s.seed.balls[i]);
    auto gens = s.gamma.gens;
    auto a = orbit(seeds, gens, OrbitBound{depth, std::nullopt}, opt);
    gens.insert(gens.end(), s.extra.gens.begin(), s.extra.gens.end());
    auto b = orbit(seeds, gens, OrbitBound{depth, std::nullopt}, opt);
    EighthPatternReport r;
    r.depth = depth;
    r.with_listed = a.size();
    r.with_all = b.size();
    r.changes = orbit_key_set(a) != orbit_key_set(b);
    return r;
}

// 24-cell packing from an edge-centered projection rescaled so its curvatures are 0..6.
template <class S>
Packing<S> r4_packing() {
    auto p = edge_scribed<S>("24-cell");
    auto cbp = cbp_projection(p, 1);
    Vec<S> k;
    std::vector<int> idx;
    for (std::size_t i = 0; i < cbp.packing.size(); ++i) {
        k.push_back(num::from_int<S>(std::llround(curvature(cbp.packing.balls[i]) * std::sqrt(3.0))));
        idx.push_back(int(i));
    }
    auto r = realize_curvatures(ball_projection(p), idx, k);
    r.tag = "24-cell";
    return r;
}

}  // namespace polypack
