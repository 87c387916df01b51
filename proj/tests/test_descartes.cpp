#include <gtest/gtest.h>

#include <random>

#include <polypack/sections.hpp>

using namespace polypack;
using E = Exact;

namespace {

Vec<E> ints(std::initializer_list<std::int64_t> v) {
    Vec<E> out;
    for (auto x : v) out.push_back(E(x));
    return out;
}

}  // namespace

TEST(Descartes, FormsOnKnownTuples) {
    EXPECT_EQ(simplicial(ints({-1, 2, 2, 3})), E(0));
    EXPECT_EQ(simplicial(ints({-2, 4, 5, 5})), E(1));
    EXPECT_EQ(E(2) * hypercubical(ints({5, -3, 12})), E(0));
    EXPECT_EQ(flag_form<E>("orthoplex", 4)(Vec<E>(5, E(0))), E(0));
}

TEST(Descartes, IdentityChecks) {
    EXPECT_TRUE(soddy_gosset_check(ints({-1, 2, 2, 3})));
    EXPECT_FALSE(soddy_gosset_check(ints({1, 2, 2, 3})));
    EXPECT_TRUE(octahedral_check(ints({-2, 4, 5}), E(5)));
    EXPECT_FALSE(octahedral_check(ints({-2, 4, 5}), E(6)));
    auto r6 = E::root(6);
    EXPECT_TRUE(octahedral_check(ints({1, 1, 1}), E(3) + r6));
    EXPECT_TRUE(octahedral_check(ints({1, 1, 1}), E(3) - r6));
    EXPECT_TRUE(cubical_check(ints({5, -3, 12})));
}

TEST(Descartes, Solvers) {
    auto [lo, hi] = solve_octahedral_center(ints({-2, 4, 5}));
    EXPECT_EQ(lo, E(5));
    EXPECT_EQ(hi, E(9));
    auto [a, b] = solve_octahedral_center(ints({1, 1, 1}));
    EXPECT_EQ(a, E(3) - E::root(6));
    EXPECT_EQ(b, E(3) + E::root(6));
    auto o4 = solve_octahedral_center(ints({0, 0, 1, 1}));
    EXPECT_TRUE(o4.first == E(1) || o4.second == E(1));
    EXPECT_EQ(cubical_fourth(E(5), E(-3), E(12)), E(20));
    EXPECT_EQ(cubical_fourth(E(7), E(7), E(7)), E(7));
    EXPECT_EQ(cubical_fourth(E(0), E(0), E(1)), E(1));
    EXPECT_THROW(solve_octahedral_center(ints({1, -5, 1})), not_realizable);
}

TEST(Descartes, SimplexClosedForm) {
    // -sum C(i+2,2)(x_i - x_{i+1})^2 + ((d+2)/d) x_{d+1}^2
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> v(-9, 9);
    for (int d = 1; d <= 4; ++d) {
        auto phi = flag_form<E>("simplex", d + 1);
        for (int t = 0; t < 20; ++t) {
            Vec<E> x;
            for (int i = 0; i <= d + 1; ++i) x.push_back(E(v(rng)));
            E want = E(Rational(d + 2, d)) * x[d + 1] * x[d + 1];
            for (int i = 0; i <= d; ++i) want -= E((i + 2) * (i + 1) / 2) * (x[i] - x[i + 1]) * (x[i] - x[i + 1]);
            EXPECT_EQ(phi(x), want) << "d=" << d;
        }
    }
}

TEST(Descartes, FlagFormVanishesOnStandardPacking) {
    auto p = standard_orthoplicial<E>();
    auto phi = flag_form<E>("orthoplex", 4);
    // B0 uses the orthoplex's combinatorics: antipodes i, i+4
    FaceLattice fl = face_lattice(8, facets_of(p), 4);
    int n = 0;
    for (auto& f : fl.flags()) {
        EXPECT_EQ(phi(flag_curvatures(p, fl, f)), E(0));
        ++n;
    }
    EXPECT_EQ(n, 384);
}

TEST(Descartes, GlueingGivesBothNeighbours) {
    auto p = convert<double>(realize(SectionKind::Tetrahedral, ints({-1, 2, 2, 3})));
    std::vector<int> facet{1, 2, 3};
    double x0 = curvature(p.balls[1]);
    double x1 = face_curvature(p, {1, 2});
    double x2 = face_curvature(p, facet);
    double phi_f = flag_form<double>("simplex", 2)(Vec<double>{x0, x1, x2});
    auto [lo, hi] = glueing_curvatures(x2, phi_f, std::sqrt(3.0), std::sqrt(2.0));
    // this packing, and its image under the reflection that swaps -1 for 15
    EXPECT_NEAR(lo, (-1 + 2 + 2 + 3) / 4.0, 1e-12);
    EXPECT_NEAR(hi, (15 + 2 + 2 + 3) / 4.0, 1e-12);
}

TEST(Descartes, DiophantineFromSeeds) {
    auto s = soddy_gosset_solution(ints({-1, 2, 2, 3}));
    EXPECT_EQ(s.equation, DiophantineKind::Simplicial);
    EXPECT_TRUE(verify(s));
    EXPECT_TRUE(nontrivial(s));
    auto o = octahedral_solution(ints({-2, 4, 5}), E(5));
    EXPECT_EQ(o.m, (std::vector<std::int64_t>{-7, -1, 0}));
    EXPECT_EQ(o.n, 5);
    EXPECT_TRUE(verify(o));
    auto c = cubical_solution(ints({5, -3, 12}));
    EXPECT_TRUE(verify(c));
    EXPECT_EQ(c.n, 17);
    EXPECT_THROW(cubical_solution(Vec<E>{E(Rational(1, 2)), E(1), E(2)}), std::invalid_argument);
}

TEST(Descartes, AntipodalGeodesicsOfASquare) {
    std::vector<std::pair<int, int>> e{{0, 1}, {1, 2}, {2, 3}, {3, 0}};
    auto paths = antipodal_geodesics(4, e, {0, 1, 2, 3});
    EXPECT_EQ(paths.size(), 4u);  // two pairs, two routes each
    for (auto& p : paths) EXPECT_EQ(p.size(), 3u);
}
