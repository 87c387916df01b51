#pragma once

// Certification suites shared by the acceptance binary and `polypack verify`.

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include <polypack/sections.hpp>

namespace polypack::checks {

struct Result {
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

struct Check {
    std::string suite;
    std::function<Result()> run;
};

namespace detail {

class Timer {
public:
    double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count(); }

private:
    std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

template <class S>
std::string join(const Vec<S>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + num::str(v[i]);
    return s + ")";
}

inline Vec<Exact> ints(std::initializer_list<std::int64_t> v) {
    Vec<Exact> out;
    for (auto x : v) out.push_back(Exact(x));
    return out;
}

template <class S>
std::set<std::string> coord_set(const std::vector<Ball<S>>& bs) {
    std::set<std::string> out;
    for (auto& b : bs) {
        std::string s;
        for (auto& c : b.x) s += num::str(c) + ",";
        out.insert(s);
    }
    return out;
}

// Products of at most `depth` generators, identity first.
template <class S>
std::vector<LorentzMap<S>> words_up_to(const std::vector<LorentzMap<S>>& gens, int depth) {
    std::vector<LorentzMap<S>> out{LorentzMap<S>::identity(gens.at(0).rows())};
    std::vector<std::pair<LorentzMap<S>, int>> layer{{out[0], -1}};
    for (int k = 0; k < depth; ++k) {
        std::vector<std::pair<LorentzMap<S>, int>> next;
        for (auto& [m, last] : layer)
            for (int g = 0; g < int(gens.size()); ++g)
                if (g != last) {
                    next.push_back({gens[g] * m, g});
                    out.push_back(next.back().first);
                }
        layer = std::move(next);
    }
    return out;
}

template <class S>
Vec<S> curvatures_of(const std::vector<Ball<S>>& bs, const std::vector<int>& idx) {
    Vec<S> k;
    for (int i : idx) k.push_back(curvature(bs[i]));
    return k;
}

}  // namespace detail

// ---------------------------------------------------------------------------------------
// 1. The 16 orthoplicial matrices.

inline Result matrices() {
    detail::Timer t;
    Result r{"orthoplicial generator matrices", true, {}, 0};
    const auto& computed = generators(standard_orthoplicial<Exact>());
    auto printed = orthoplicial_generators();
    auto q = lorentz_form<Exact>(5);
    auto id = Matrix<Exact>::identity(5);
    int equal = 0, lorentz = 0, r1 = 0, r2 = 0, r2_total = 0, conj = 0, conj_total = 0;
    std::map<std::string, Matrix<Exact>> by_label;
    for (auto& g : printed) by_label.emplace(g.label, g.matrix);
    for (auto& g : printed) {
        auto word = printed_to_standard(FacetWord::parse(g.label)).str();
        if (computed.by_label(word) == g.matrix) ++equal;
        if (g.matrix.transpose() * q * g.matrix == q && is_lorentz(g.matrix)) ++lorentz;
        if (g.matrix * g.matrix == id) ++r1;
        if (g.conjugator) {
            ++conj_total;
            auto c = symmetry_matrix(g.conjugator);
            if (c * by_label.at(g.source) * c == g.matrix) ++conj;
        }
    }
    for (std::size_t i = 0; i < printed.size(); ++i)
        for (std::size_t j = i + 1; j < printed.size(); ++j) {
            if (FacetWord::parse(printed[i].label).differing(FacetWord::parse(printed[j].label)) != 1) continue;
            ++r2_total;
            auto p = printed[i].matrix * printed[j].matrix;
            if (p * p == id) ++r2;
        }
    std::ostringstream os;
    os << equal << "/16 rebuilt entrywise, " << lorentz << "/16 Lorentz, R1 " << r1 << "/16, R2 " << r2 << "/" << r2_total
       << ", conjugations " << conj << "/" << conj_total;
    r.pass = equal == 16 && lorentz == 16 && r1 == 16 && r2 == r2_total && r2_total == 32 && conj == conj_total &&
             conj_total == 15;
    r.detail = os.str();
    r.seconds = t.seconds();
    return r;
}

// ---------------------------------------------------------------------------------------
// 2. Coxeter relations of the symmetrized group.

inline Result coxeter() {
    detail::Timer t;
    Result r{"symmetrized group Coxeter orders", true, {}, 0};
    auto gens = symmetrized_generators();
    const int expected[5][5] = {{1, 3, 2, 2, 2}, {3, 1, 3, 2, 2}, {2, 3, 1, 4, 2}, {2, 2, 4, 1, 4}, {2, 2, 2, 4, 1}};
    std::ostringstream os;
    int bad = 0;
    for (int i = 0; i < 5; ++i) {
        if (matrix_order(gens[i].second) != 2 || !is_lorentz(gens[i].second)) ++bad;
        for (int j = i + 1; j < 5; ++j) {
            int o = matrix_order(gens[i].second * gens[j].second);
            if (o != expected[i][j]) ++bad;
            if (j == i + 1) os << gens[i].first << gens[j].first << ":" << o << " ";
        }
    }
    os << "other pairs 2";
    r.pass = bad == 0;
    r.detail = bad ? os.str() + ", " + std::to_string(bad) + " mismatches" : os.str();
    r.seconds = t.seconds();
    return r;
}

// ---------------------------------------------------------------------------------------
// 3. Mobius spectra.

struct SpectrumRow {
    std::string name;
    int n;
    std::vector<std::pair<double, int>> values;
    bool rational;
};

inline std::vector<SpectrumRow> spectrum_table() {
    double p = golden<double>();
    std::vector<SpectrumRow> rows;
    for (int d = 2; d <= 4; ++d) {
        double two = std::pow(2.0, d + 1);
        rows.push_back({"simplex", d + 1, {{-double(d), 1}, {2, d + 1}}, true});
        rows.push_back({"orthoplex", d + 1, {{-2.0 * (d + 1), 1}, {4, d + 1}, {0, d}}, true});
        rows.push_back({"cube", d + 1, {{-two * d, 1}, {two, d + 1}, {0, int(two) - d - 2}}, true});
    }
    rows.push_back({"icosahedron", 3, {{-12 * p * p, 1}, {4 * (p * p + 1), 3}, {0, 8}}, false});
    rows.push_back({"dodecahedron", 3, {{-20 * std::pow(p, 4), 1}, {20 * p * p, 3}, {0, 16}}, false});
    rows.push_back({"24-cell", 4, {{-72, 1}, {24, 4}, {0, 19}}, true});
    return rows;
}

inline std::vector<SpectrumEntry> spectrum_of(const std::string& name, int n) {
    try {
        return mobius_spectrum(ball_projection(edge_scribed<Exact>(name, n)));
    } catch (const field_error&) {
        return mobius_spectrum(ball_projection(edge_scribed<double>(name, n)));
    }
}

inline Result spectra() {
    detail::Timer t;
    Result r{"Mobius spectra", true, {}, 0};
    int ok = 0, total = 0;
    std::string bad;
    for (auto& row : spectrum_table()) {
        ++total;
        auto got = spectrum_of(row.name, row.n);
        std::vector<std::pair<double, int>> want = row.values;
        std::sort(want.begin(), want.end());
        bool good = got.size() == want.size();
        for (std::size_t i = 0; good && i < got.size(); ++i) {
            good = got[i].multiplicity == want[i].second && std::abs(got[i].value - want[i].first) <= 1e-9;
            if (row.rational) good = good && got[i].exact && got[i].value == want[i].first;
        }
        if (good)
            ++ok;
        else
            bad += " " + polytope_name(polytope_id(row.name, row.n));
    }
    r.pass = ok == total;
    r.detail = std::to_string(ok) + "/" + std::to_string(total) + " spectra match" + (bad.empty() ? "" : "; failing:" + bad);
    r.seconds = t.seconds();
    return r;
}

// ---------------------------------------------------------------------------------------
// 4. CBP layer tables.

struct CbpColumn {
    std::string polytope;
    int face;
    double kappa;                                // printed
    double h;                                    // printed
    std::vector<std::pair<int, double>> head;    // printed leading layers (count, coefficient of h)
    std::pair<int, double> last;                 // printed final layer
    int layers;                                  // total number of layers
    std::vector<std::string> overrides;          // printed values replaced by the computed ones
};

inline std::vector<CbpColumn> cbp_table() {
    const double p = golden<double>(), p2 = p * p, p3 = p2 * p, p4 = p3 * p, p5 = p4 * p, p6 = p5 * p;
    const double s3 = std::sqrt(3.0);
    std::vector<CbpColumn> c;
    double kt = std::sqrt(3.0 / 5);
    c.push_back({"simplex", 0, kt, std::sqrt(0.1), {{1, -4}, {4, 1}}, {4, 1}, 2, {}});
    // printed h_1 = h_2 = sqrt(2/15); the printed coefficients need sqrt(4/15)
    const char* ht = "simplex h_1 = h_2 = sqrt(4/15) (reference table: sqrt(2/15))";
    c.push_back({"simplex", 1, kt, std::sqrt(4.0 / 15), {{2, -1.5}, {3, 1}}, {3, 1}, 2, {ht}});
    c.push_back({"simplex", 2, kt, std::sqrt(4.0 / 15), {{3, -1}, {2, 1.5}}, {2, 1.5}, 2, {ht}});
    c.push_back({"simplex", 3, kt, std::sqrt(0.1), {{4, -1}, {1, 4}}, {1, 4}, 2, {}});
    c.push_back({"orthoplex", 0, 1, std::sqrt(2.0), {{1, -1}, {6, 0}, {1, 1}}, {1, 1}, 3,
                 {"orthoplex vertex column: middle layer count 6 (reference table: 4)"}});
    c.push_back({"orthoplex", 1, 1, 1, {{2, -1}, {4, 0}, {2, 1}}, {2, 1}, 3, {}});
    c.push_back({"orthoplex", 2, 1, std::sqrt(2.0 / 3), {{3, -1}, {2, 0}, {3, 1}}, {3, 1}, 3, {}});
    c.push_back({"orthoplex", 3, 1, std::sqrt(0.5), {{4, -1}, {4, 1}}, {4, 1}, 2, {}});
    c.push_back({"cube", 0, s3, 1, {{1, -2}, {4, -1}, {6, 0}, {4, 1}, {1, 2}}, {1, 2}, 5, {}});
    c.push_back({"cube", 1, s3, std::sqrt(1.0 / 3), {{2, -3}, {6, -1}, {6, 1}, {2, 3}}, {2, 3}, 4, {}});
    c.push_back({"cube", 2, s3, std::sqrt(2.0), {{4, -1}, {8, 0}, {4, 1}}, {4, 1}, 3, {}});
    c.push_back({"cube", 3, s3, 1, {{8, -1}, {8, 1}}, {8, 1}, 2, {}});
    c.push_back({"24-cell", 0, s3, 1, {{1, -2}, {8, -1}, {6, 0}, {8, 1}, {1, 2}}, {1, 2}, 5, {}});
    c.push_back({"24-cell", 1, s3, std::sqrt(1.0 / 3), {{2, -3}, {3, -2}, {6, -1}, {2, 0}, {6, 1}, {3, 2}, {2, 3}}, {2, 3}, 7, {}});
    c.push_back({"24-cell", 2, s3, std::sqrt(2.0 / 3), {{3, -2}, {6, -1}, {6, 0}, {6, 1}, {3, 2}}, {3, 2}, 5, {}});
    c.push_back({"24-cell", 3, s3, std::sqrt(2.0), {{6, -1}, {12, 0}, {6, 1}}, {6, 1}, 3, {}});

    // printed: sqrt5 * phi^(3/2); the reciprocal midsphere ratio is 5^(1/4) phi^(3/2)
    double k600 = std::pow(5.0, 0.25) * std::pow(p, 1.5);
    const char* k600_note = "600-cell kappa_P: 5^(1/4) phi^(3/2) (reference table: sqrt5 phi^(3/2))";
    c.push_back({"600-cell", 0, k600, 1,
                 {{1, -2 * p}, {12, -p2}, {20, -p}, {12, -1}, {30, 0}, {12, 1}, {20, p}, {12, p2}, {1, 2 * p}}, {1, 2 * p}, 9,
                 {k600_note}});
    c.push_back({"600-cell", 1, k600, 1 / std::sqrt(p2 + 1),
                 {{2, -(p3 + p)}, {5, -(p3 + 1)}, {10, -p3}, {2, -(p2 + 1)}, {5, -(p3 - 1)}, {10, -p2}, {10, -p}, {10, -1}, {12, 0}, {10, 1}},
                 {2, p3 + p}, 17, {k600_note}});
    c.push_back({"600-cell", 2, k600, 1 / std::sqrt(p4 + 1),
                 {{3, -(p4 + p)}, {2, -(p4 + 1)}, {6, -p4}, {6, -(p3 + p)}, {6, -(p3 + 1)}, {6, -p3}, {3, -(p3 - 1)}, {12, -p2},
                  {6, -p}, {6, -1}, {8, 0}, {6, 1}},
                 {3, p4 + p}, 21, {k600_note, "600-cell ridge layer 5 coefficient phi^3+1 (reference table: (phi^3+1)phi)"}});
    c.push_back({"600-cell", 3, k600, 1 / std::sqrt(p3 + 1),
                 {{4, -p4}, {4, -(p3 + p)}, {6, -(p3 + 1)}, {12, -p3}, {12, -p2}, {12, -p}, {4, -1}, {12, 0}, {4, 1}}, {4, p4}, 15,
                 {k600_note}});

    double k120 = p3 * s3;
    c.push_back({"120-cell", 0, k120, std::sqrt(0.5),
                 {{1, -(p5 - 1 / p)}, {4, -(p5 - 1)}, {12, -(p4 + p2)}, {24, -(p4 + p)}, {12, -(p4 + 1)}, {4, -(p4 + 1 / p)},
                  {24, -p4}, {24, -(p3 + p)}, {32, -(p3 + 1)}, {24, -p3}, {12, -(p2 + 1)}, {24, -(p2 + 1 / p)}, {28, -p2},
                  {24, -p}, {24, -1}, {54, 0}, {24, 1}},
                 {1, p5 - 1 / p}, 31, {}});
    c.push_back({"120-cell", 1, k120, 1 / std::sqrt(p4 + 1),
                 {{2, -(p6 + p2)}, {6, -(p6 + p)}, {3, -(p6 + 1)}, {12, -p6}, {6, -(p6 - 1)}, {12, -(p6 - p)}, {18, -(p5 + p3)},
                  {12, -(p5 + p2)}, {14, -(p5 + p)}, {12, -(p5 + 1)}, {18, -p5}, {6, -(p5 - 1)}, {24, -(p4 + p2)}, {15, -(p4 + p)},
                  {2, -(p4 + 1)}, {24, -p4}, {18, -(p3 + p)}, {12, -(p3 + 1)}, {18, -p3}, {24, -p2}, {18, -p}, {12, -1}, {24, 0},
                  {12, 1}},
                 {2, p6 + p2}, 45, {}});
    c.push_back({"120-cell", 2, k120, 1 / std::sqrt(p2 + 1),
                 {{5, -(p5 + p2)}, {10, -(p5 + p)}, {10, -(p5 + 1)}, {20, -p5}, {10, -(p5 - 1)}, {20, -(p4 + p2)}, {20, -(p4 + p)},
                  {10, -(p4 + 1)}, {30, -p4}, {20, -(p3 + p)}, {20, -(p3 + 1)}, {30, -p3}, {5, -(p3 - 1)}, {30, -p2}, {30, -p},
                  {20, -1}, {20, 0}, {20, 1}},
                 {5, p5 + p2}, 33, {}});
    c.push_back({"120-cell", 3, k120, 1,
                 {{20, -p4}, {20, -(p3 + p)}, {30, -(p3 + 1)}, {60, -p3}, {60, -p2}, {60, -p}, {20, -1}, {60, 0}, {20, 1}}, {20, p4},
                 15, {}});
    return c;
}

inline Result cbp_tables() {
    detail::Timer t;
    Result r{"CBP layer tables", true, {}, 0};
    int ok = 0, total = 0;
    double worst = 0;
    std::string bad;
    std::set<std::string> notes;
    std::map<std::string, RegularPolytope<double>> cache;
    for (auto& col : cbp_table()) {
        ++total;
        int n = col.polytope == "simplex" || col.polytope == "orthoplex" || col.polytope == "cube" ? 4 : 0;
        auto it = cache.find(col.polytope);
        if (it == cache.end()) it = cache.emplace(col.polytope, edge_scribed<double>(col.polytope, n)).first;
        auto res = cbp_projection(it->second, col.face);
        const auto& tb = res.table;
        double err = std::max(std::abs(tb.kappa_P - col.kappa), std::abs(tb.h - col.h));
        bool good = int(tb.layers.size()) == col.layers && col.head.size() <= tb.layers.size();
        int count = 0;
        for (std::size_t i = 0; good && i < tb.layers.size(); ++i) {
            count += tb.layers[i].count;
            if (it->second.antipode.empty() || it->second.antipode[0] < 0) continue;
            // centrally symmetric: layers mirror about kappa_P
            const auto& mirror = tb.layers[tb.layers.size() - 1 - i];
            good = mirror.count == tb.layers[i].count;
            err = std::max(err, std::abs(mirror.coefficient + tb.layers[i].coefficient) * tb.h);
        }
        for (std::size_t i = 0; good && i < col.head.size(); ++i) {
            good = tb.layers[i].count == col.head[i].first;
            err = std::max(err, std::abs(tb.layers[i].curvature - (col.kappa + col.head[i].second * col.h)));
        }
        if (good) {
            good = tb.layers.back().count == col.last.first;
            err = std::max(err, std::abs(tb.layers.back().curvature - (col.kappa + col.last.second * col.h)));
        }
        good = good && count == int(it->second.vertices.size()) && err <= 1e-9;
        worst = std::max(worst, err);
        if (good)
            ++ok;
        else
            bad += " " + col.polytope + "/" + std::to_string(col.face);
        notes.insert(col.overrides.begin(), col.overrides.end());
    }
    std::ostringstream os;
    os << ok << "/" << total << " columns, max deviation " << std::scientific << std::setprecision(1) << worst;
    if (!bad.empty()) os << "; failing:" << bad;
    for (auto& n : notes) os << "; override " << n;
    r.pass = ok == total;
    r.detail = os.str();
    r.seconds = t.seconds();
    return r;
}

// ---------------------------------------------------------------------------------------
// 5. Descartes-type identities.

inline Result descartes_identities() {
    detail::Timer t;
    Result r{"Descartes identities", true, {}, 0};
    std::ostringstream os;
    bool pass = true;

    // every flag of every CBP projection
    std::size_t flags = 0;
    double worst = 0;
    std::vector<std::pair<std::string, int>> polys{{"simplex", 3},  {"orthoplex", 3}, {"cube", 3},     {"icosahedron", 0},
                                                   {"dodecahedron", 0}, {"simplex", 4}, {"orthoplex", 4}, {"cube", 4},
                                                   {"24-cell", 0},  {"600-cell", 0},  {"120-cell", 0}};
    for (auto& [name, n] : polys) {
        auto poly = edge_scribed<double>(name, n);
        auto form = flag_form<double>(poly.id);
        auto all_flags = poly.lattice.flags();
        for (int i = 0; i < poly.dim(); ++i) {
            auto pk = cbp_projection(poly, i).packing;
            for (auto& f : all_flags) {
                auto x = flag_curvatures(pk, poly.lattice, f);
                double scale = 1;
                for (double v : x) scale = std::max(scale, v * v);
                worst = std::max(worst, std::abs(form(x)) / scale);
                ++flags;
            }
        }
    }
    bool flags_ok = worst <= 1e-9;
    os << flags << " flags, max |Phi| " << std::scientific << std::setprecision(1) << worst << std::defaultfloat;

    // standard seed tuples
    bool simp = soddy_gosset_check(detail::ints({-1, 2, 2, 3}));
    bool octa = octahedral_check(detail::ints({-2, 4, 5}), Exact(5));
    auto face = detail::ints({5, -3, 12, 20});
    bool cube = cubical_check(detail::ints({5, -3, 12})) && cubical_check(detail::ints({5, 20, 12}));
    bool tuples = simp && octa && cube && num::is_zero(cubical_fourth(face[0], face[1], face[2]) - face[3]);
    os << "; seed tuples: simplicial " << (simp ? "ok" : "FAIL") << ", octahedral " << (octa ? "ok" : "FAIL")
       << ", cubical " << (cube ? "ok" : "FAIL");

    // substitutions, exact
    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<int> num_d(-40, 40), den_d(1, 9), dim_d(2, 5);
    int sub_ok = 0;
    const int trials = 1000;
    for (int k = 0; k < trials; ++k) {
        int n = dim_d(rng);
        Vec<Exact> u;
        for (int i = 0; i <= n; ++i) u.push_back(Exact(Rational(num_d(rng), den_d(rng))));
        auto T = flag_form<Exact>("simplex", n), O = flag_form<Exact>("orthoplex", n), C = flag_form<Exact>("cube", n);
        if (simplicial(u) == T(simplicial_flag(u)) && hyperoctahedral(u) == O(hyperoctahedral_flag(u)) &&
            hypercubical(u) == C(hypercubical_flag(u)))
            ++sub_ok;
    }
    os << "; substitutions " << sub_ok << "/" << trials;
    pass = flags_ok && tuples && sub_ok == trials;
    r.pass = pass;
    r.detail = os.str();
    r.seconds = t.seconds();
    return r;
}

// ---------------------------------------------------------------------------------------
// 6. Lifting pipeline with finite-depth equivalence.

inline Result lifting_pipeline(int depth = 3) {
    detail::Timer t;
    Result r{"lifting pipeline", true, {}, 0};
    std::ostringstream os;
    bool pass = true;
    struct Case {
        SectionKind kind;
        Vec<Exact> input;
        Vec<Exact> expected;
        std::int64_t root;
    };
    std::vector<Case> cases{{SectionKind::Tetrahedral, detail::ints({-1, 2, 2, 3}), detail::ints({-1, 2, 2, 3}), 0},
                            {SectionKind::Octahedral, detail::ints({-2, 4, 5}), detail::ints({-2, 4, 5, 5}), 1},
                            {SectionKind::Cubical, detail::ints({5, -3, 12}), detail::ints({-3, 5, 12, 20}), 0}};
    for (auto& c : cases) {
        auto planar = realize(c.kind, c.input);
        auto l = lift(c.kind, planar);
        auto seed = lifted_seed(l, planar);
        bool seed_ok = vec_eq(seed, c.expected);
        bool integral = is_integral_orthoplicial(seed) && simplicial(seed) == Exact(c.root * c.root);
        auto eq = verify_arithmetic_equivalence(l, depth);
        bool ok = seed_ok && integral && eq.ok() && is_orthoplicial(l.ambient);
        pass = pass && ok;
        os << kind_name(c.kind) << " " << detail::join(c.input) << "->" << detail::join(seed) << " sqrtT3=" << c.root << " "
           << eq.checked_words << " words " << eq.mismatches.size() << " mismatches" << (ok ? "" : " FAIL") << "; ";
    }
    auto eighth = eighth_pattern_report(section_octahedral<Exact>(), 4);
    os << "eighth pattern at depth 4: " << eighth.with_listed << " vs " << eighth.with_all << " balls ("
       << (eighth.changes ? "changes" : "no change") << ", informational)";
    r.pass = pass;
    r.detail = os.str();
    r.seconds = t.seconds();
    return r;
}

// ---------------------------------------------------------------------------------------
// 7. Integral orbits of the three lifted seeds and containment.

inline Result integral_orbits(int depth = 6, double cap = 1000) {
    detail::Timer t;
    Result r{"integral orbits", true, {}, 0};
    std::ostringstream os;
    os << "depth " << depth << ", |kappa|<=" << cap << ": ";
    bool pass = true;
    std::vector<std::pair<SectionKind, Vec<Exact>>> seeds{{SectionKind::Tetrahedral, detail::ints({-1, 2, 2, 3})},
                                                          {SectionKind::Octahedral, detail::ints({-2, 4, 5})},
                                                          {SectionKind::Cubical, detail::ints({5, -3, 12})}};
    for (auto& [kind, k] : seeds) {
        auto l = lift(kind, realize(kind, k));
        auto amb = orbit(l.ambient, generators(l.ambient), {depth, cap});
        ApollonianGroup<Exact> pg;
        for (std::size_t i = 0; i < l.planar_gens.size(); ++i) pg.add(l.planar_gens[i], l.words[i]);
        auto pl = orbit(l.planar, pg, {depth, cap});
        std::unordered_set<Exact> ks;
        for (auto& e : amb.entries) ks.insert(e.curvature);
        std::size_t missing = 0;
        for (auto& e : pl.entries) missing += !ks.count(e.curvature);
        bool ok = amb.all_integral() && pl.all_integral() && missing == 0;
        pass = pass && ok;
        os << kind_name(kind) << " " << amb.size() << " spheres/" << pl.size() << " disks integral, " << missing
           << " planar curvatures missing" << (ok ? "" : " FAIL") << "; ";
    }
    r.pass = pass;
    r.detail = os.str();
    r.seconds = t.seconds();
    return r;
}

// ---------------------------------------------------------------------------------------
// 8. Breadth-first engine against all-words enumeration.

inline Result orbit_oracle(int depth = 2) {
    detail::Timer t;
    Result r{"orbit oracle", true, {}, 0};
    std::ostringstream os;
    bool pass = true;
    auto check = [&](const std::string& name, const Packing<Exact>& p) {
        auto g = generators(p);
        auto bfs = orbit(p, g, {depth, std::nullopt});
        auto brute = brute_force_orbit(p.balls, g.gens, depth);
        bool ok = orbit_key_set(bfs) == brute;
        pass = pass && ok;
        os << name << " " << bfs.size() << (ok ? "=" : "!=") << brute.size() << "; ";
    };
    check("B0", standard_orthoplicial<Exact>());
    check("tetra", realize(SectionKind::Tetrahedral, detail::ints({-1, 2, 2, 3})));
    check("octa", realize(SectionKind::Octahedral, detail::ints({-2, 4, 5})));
    os << "depth <= " << depth;
    r.pass = pass;
    r.detail = os.str();
    r.seconds = t.seconds();
    return r;
}

// ---------------------------------------------------------------------------------------
// 9. Trinity of the standard packing.

inline Result trinity_check() {
    detail::Timer t;
    Result r{"orthoplicial trinity", true, {}, 0};
    auto b0 = standard_orthoplicial<Exact>();
    auto [a, b] = trinity(b0);
    auto pattern = [](const Packing<Exact>& p) {
        auto g = gram(p);
        auto anti = gram_antipodes(p);
        for (std::size_t i = 0; i < p.size(); ++i)
            for (std::size_t j = 0; j < p.size(); ++j) {
                int dist = i == j ? 0 : (anti[i] == int(j) ? 2 : 1);
                if (g(i, j) != Exact(1 - 2 * dist)) return false;
            }
        return true;
    };
    auto quarter = [&](int axis) {
        Matrix<Exact> rot = Matrix<Exact>::identity(3);
        int u = axis == 0 ? 1 : 0, v = 2;
        rot(u, u) = rot(v, v) = Exact(0);
        rot(u, v) = Exact(-1);
        rot(v, u) = Exact(1);
        return detail::coord_set(apply(orthogonal(rot), b0).balls);
    };
    auto sa = detail::coord_set(a.balls), sb = detail::coord_set(b.balls);
    auto rx = quarter(0), ry = quarter(1);
    bool rotations = (sa == rx && sb == ry) || (sa == ry && sb == rx);
    // each member's dual is the union of the other two
    auto dual_union = [](const Packing<Exact>& p) { return detail::coord_set(dual_packing(p)); };
    auto unite = [](std::set<std::string> x, const std::set<std::string>& y) {
        x.insert(y.begin(), y.end());
        return x;
    };
    auto s0 = detail::coord_set(b0.balls);
    bool duals = dual_union(b0) == unite(sa, sb) && dual_union(a) == unite(s0, sb) && dual_union(b) == unite(s0, sa);
    bool grams = pattern(a) && pattern(b);
    r.pass = grams && rotations && duals;
    r.detail = std::string("Gram pattern ") + (grams ? "ok" : "FAIL") + ", quarter-turns about x and y " +
               (rotations ? "ok" : "FAIL") + ", duals of all three members " + (duals ? "ok" : "FAIL");
    r.seconds = t.seconds();
    return r;
}

// ---------------------------------------------------------------------------------------
// 10. Diophantine tuples from the standard seeds.

struct DiophantineRun {
    std::vector<DiophantineSolution> solutions;
    std::size_t verified = 0;
};

inline DiophantineRun diophantine_solutions() {
    DiophantineRun run;
    std::set<std::pair<DiophantineKind, std::vector<std::int64_t>>> seen;
    auto emit = [&](DiophantineSolution s) {
        auto key = s.m;
        key.push_back(s.n);
        key.push_back(s.d);
        if (!seen.insert({s.equation, key}).second) return;
        run.verified += verify(s);
        run.solutions.push_back(std::move(s));
    };
    auto rounded = [](const Vec<double>& k) {
        Vec<Exact> out;
        for (double v : k) {
            if (std::abs(v - std::round(v)) > 1e-6) throw std::runtime_error("non-integral curvature in float realization");
            out.push_back(Exact(std::llround(v)));
        }
        return out;
    };

    // simplicial, d = 2: Descartes quadruples of the tetrahedral cluster
    auto tet = realize(SectionKind::Tetrahedral, detail::ints({-1, 2, 2, 3}));
    for (auto& m : detail::words_up_to(generators(tet).gens, 2))
        emit(soddy_gosset_solution(detail::curvatures_of(apply(m, tet).balls, {0, 1, 2, 3})));

    // simplicial, d = 3: five mutually tangent spheres, realized on the 4-simplex packing
    {
        auto ref = ball_projection(edge_scribed<double>("simplex", 4));
        auto p = realize_curvatures(ref, {0, 1, 2, 3, 4}, Vec<double>{-1, 2, 2, 3, 3});
        for (auto& m : detail::words_up_to(generators(p).gens, 1))
            emit(soddy_gosset_solution(rounded(detail::curvatures_of(apply(m, p).balls, {0, 1, 2, 3, 4}))));
    }

    // octahedral, d = 2 and 3: faces of the octahedral cluster and facets of its lift
    auto oct = realize(SectionKind::Octahedral, detail::ints({-2, 4, 5}));
    auto oct_facets = facets_of(oct);
    for (auto& m : detail::words_up_to(generators(oct).gens, 1)) {
        auto img = apply(m, oct);
        Exact center = face_curvature(img, all_indices(img));
        for (auto& f : oct_facets) emit(octahedral_solution(detail::curvatures_of(img.balls, f), center));
    }
    auto lo = lift(SectionKind::Octahedral, oct);
    for (auto& m : detail::words_up_to(generators(lo.ambient).gens, 1)) {
        auto img = apply(m, lo.ambient);
        Exact center = face_curvature(img, all_indices(img));
        for (auto& f : lo.ambient.facets) emit(octahedral_solution(detail::curvatures_of(img.balls, f), center));
    }

    // cubical, d = 2: antipodal paths of the cubical cluster
    auto cub = realize(SectionKind::Cubical, detail::ints({5, -3, 12}));
    auto cube_paths = antipodal_geodesics(cub.size(), cub.edges, all_indices(cub));
    for (auto& m : detail::words_up_to(generators(cub).gens, 1)) {
        auto img = apply(m, cub);
        for (auto& path : cube_paths) emit(cubical_solution(detail::curvatures_of(img.balls, path)));
    }

    // cubical, d = 3: the tesseract spanned by the half-integer vertices of the 24-cell packing
    {
        auto r4 = r4_packing<Exact>();
        std::vector<int> tess;
        for (int i = 8; i < 24; ++i) tess.push_back(i);
        for (auto& path : antipodal_geodesics(r4.size(), r4.edges, tess))
            emit(cubical_solution(detail::curvatures_of(r4.balls, path)));
    }
    return run;
}

inline Result diophantine() {
    detail::Timer t;
    Result r{"Diophantine tuples", true, {}, 0};
    auto run = diophantine_solutions();
    std::map<std::pair<DiophantineKind, int>, std::pair<int, int>> per;  // (kind, d) -> (count, nontrivial)
    for (auto& s : run.solutions) {
        auto& e = per[{s.equation, s.d}];
        e.first++;
        e.second += nontrivial(s);
    }
    std::ostringstream os;
    bool pass = run.verified == run.solutions.size();
    for (auto eq : {DiophantineKind::Simplicial, DiophantineKind::Octahedral, DiophantineKind::Cubical})
        for (int d : {2, 3}) {
            auto it = per.find({eq, d});
            int c = it == per.end() ? 0 : it->second.first, nt = it == per.end() ? 0 : it->second.second;
            pass = pass && nt > 0;
            os << kind_name(eq) << "/d" << d << ":" << c << " ";
        }
    os << "; " << run.verified << "/" << run.solutions.size() << " re-verified";
    r.pass = pass;
    r.detail = os.str();
    r.seconds = t.seconds();
    return r;
}

// ---------------------------------------------------------------------------------------
// 11. 24-cell census probe.

struct ProbeReport {
    std::size_t balls = 0;
    std::size_t non_integral = 0;
    std::vector<std::int64_t> missing;
    std::vector<std::size_t> per_depth;
    Census<Exact> census;
};

inline ProbeReport probe_r4(int depth, double cap, OrbitOptions opt = {}) {
    auto p = r4_packing<Exact>();
    auto rep = orbit(p, generators(p), {depth, cap}, opt);
    ProbeReport out;
    out.balls = rep.size();
    out.census = curvature_census(rep, 0, cap);
    out.missing = out.census.missing;
    out.per_depth = rep.per_depth;
    for (auto& e : rep.entries) out.non_integral += !num::is_integer(e.curvature);
    return out;
}

inline Result probe(int depth = 6, double cap = 200) {
    detail::Timer t;
    Result r{"24-cell census probe", true, {}, 0};
    auto seed = r4_packing<Exact>();
    std::map<std::int64_t, int> initial;
    for (auto& b : seed.balls) initial[std::llround(num::to_double(curvature(b)))]++;
    bool seed_ok = initial == std::map<std::int64_t, int>{{0, 2}, {1, 3}, {2, 6}, {3, 2}, {4, 6}, {5, 3}, {6, 2}};
    auto rep = probe_r4(depth, cap);
    std::ostringstream os;
    os << "depth " << depth << ", kappa<=" << cap << ": " << rep.balls << " balls, " << rep.non_integral
       << " non-integral, coverage " << (std::llround(cap) + 1 - std::int64_t(rep.missing.size())) << "/" << std::llround(cap) + 1
       << ", missing " << rep.missing.size() << " (informational)";
    r.pass = seed_ok && rep.non_integral == 0;
    if (!seed_ok) os << "; seed curvatures wrong";
    r.detail = os.str();
    r.seconds = t.seconds();
    return r;
}

// ---------------------------------------------------------------------------------------

inline std::vector<Check> all_checks() {
    return {{"matrices", [] { return matrices(); }},
            {"coxeter", [] { return coxeter(); }},
            {"spectra", [] { return spectra(); }},
            {"cbp", [] { return cbp_tables(); }},
            {"descartes", [] { return descartes_identities(); }},
            {"sections", [] { return lifting_pipeline(); }},
            {"orbits", [] { return integral_orbits(); }},
            {"oracle", [] { return orbit_oracle(); }},
            {"trinity", [] { return trinity_check(); }},
            {"diophantine", [] { return diophantine(); }},
            {"probe", [] { return probe(); }}};
}

}  // namespace polypack::checks
