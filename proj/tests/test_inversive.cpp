#include <gtest/gtest.h>

#include <random>

#include <polypack/inversive.hpp>

using namespace polypack;
using B = Ball<Exact>;

namespace {

// Standard orthoplicial packing, order b1 b2 b3 b4 b-1 b-2 b-3 b-4.
std::vector<B> b0() {
    return {{0, 0, 1, 1, 1}, {0, 0, -1, 1, 1}, {1, 1, 0, 0, 1},  {-1, 1, 0, 0, 1},
            {0, 0, -1, -1, 1}, {0, 0, 1, -1, 1}, {-1, -1, 0, 0, 1}, {1, -1, 0, 0, 1}};
}

}  // namespace

TEST(Inversive, ProductExamples) {
    B b1{0, 0, 1, 1, 1}, b2{0, 0, -1, 1, 1}, bm1{0, 0, -1, -1, 1};
    EXPECT_EQ(inner(b1, b1), Exact(1));
    EXPECT_EQ(inner(b1, b2), Exact(-1));
    EXPECT_EQ(inner(b1, bm1), Exact(-3));
    EXPECT_THROW(inner(b1.x, Vec<Exact>{1, 2, 3}), std::invalid_argument);
}

TEST(Inversive, StandardOrthoplexGramIsOneMinusTwiceDistance) {
    auto bs = b0();
    auto g = gram(bs);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            int dist = i == j ? 0 : ((i % 4) == (j % 4) ? 2 : 1);
            EXPECT_EQ(g(i, j), Exact(1 - 2 * dist)) << i << "," << j;
        }
    EXPECT_EQ(tangency_edges(bs).size(), 24u);
    EXPECT_TRUE(is_packing(bs));
}

TEST(Inversive, Curvatures) {
    EXPECT_EQ(curvature(B{0, 0, 1, 1, 1}), Exact(0));
    EXPECT_EQ(curvature(B{1, 1, 0, 0, 1}), Exact(1));
    EXPECT_EQ(curvature(B{0, 0, -1, -1, 1}), Exact(2));
}

TEST(Inversive, FromGeometry) {
    auto h = ball_from_halfspace<Exact>({0, 0, 1}, Exact(1));
    EXPECT_EQ(h, (B{0, 0, 1, 1, 1}));
    auto s = ball_from_sphere<Exact>({1, 1, 0}, Exact(1));
    EXPECT_EQ(s, (B{1, 1, 0, 0, 1}));
    auto u = ball_from_sphere<Exact>({0, 0, 0}, Exact(1));
    EXPECT_EQ(u, (B{0, 0, 0, -1, 0}));
    EXPECT_EQ(inner(u, u), Exact(1));
    EXPECT_THROW(ball_from_sphere<Exact>({0, 0, 0}, Exact(0)), std::invalid_argument);
    EXPECT_THROW(ball_from_halfspace<Exact>({0, 1, 1}, Exact(0)), std::invalid_argument);

    auto g = geometry_of(ball_from_sphere<Exact>({Rational(1, 3), 2, -1}, Exact(Rational(2, 7))));
    EXPECT_FALSE(g.halfspace);
    EXPECT_EQ(g.value, Exact(Rational(2, 7)));
    EXPECT_EQ(g.point[0], Exact(Rational(1, 3)));
    auto ext = geometry_of(ball_from_sphere<Exact>({0, 0}, Exact(2), true));
    EXPECT_TRUE(ext.exterior);
    EXPECT_EQ(ext.value, Exact(2));
}

TEST(Inversive, ReflectionInDualOfFirstFacetIsS) {
    LorentzMap<Exact> s{{1, 0, 0, 0, 0}, {0, -1, 0, -2, 2}, {0, 0, 1, 0, 0}, {0, -2, 0, -1, 2}, {0, -2, 0, -2, 3}};
    B h{0, 1, 0, 1, 1};
    auto r = reflection(h);
    EXPECT_EQ(r, s);
    EXPECT_TRUE(is_lorentz(r));
    EXPECT_TRUE(is_lorentz(LorentzMap<Exact>::identity(5)));
    EXPECT_EQ(apply(r, h), (B{0, -1, 0, -1, -1}));
    // a ball orthogonal to h is fixed
    B fixed{0, 0, 1, 1, 1};
    EXPECT_EQ(inner(fixed, h), Exact(0));
    EXPECT_EQ(apply(r, fixed), fixed);
    EXPECT_THROW(reflection(B{0, 0, 1, 1, 2}), std::invalid_argument);
}

TEST(Inversive, RandomReflectionsAreInvolutionsAndIsometries) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> coord(-6, 6), rad(1, 4);
    auto random_ball = [&] {
        Vec<Exact> c{Exact(Rational(coord(rng), rad(rng))), Exact(Rational(coord(rng), rad(rng))),
                     Exact(Rational(coord(rng), rad(rng)))};
        return ball_from_sphere(c, Exact(Rational(rad(rng), rad(rng))), coord(rng) < 0);
    };
    auto id = LorentzMap<Exact>::identity(5);
    for (int trial = 0; trial < 1000; ++trial) {
        auto b = random_ball();
        ASSERT_EQ(inner(b, b), Exact(1));
        auto r = reflection(b);
        ASSERT_EQ(r * r, id);
        ASSERT_TRUE(is_lorentz(r));
        auto x = random_ball(), y = random_ball();
        ASSERT_EQ(inner(apply(r, x), apply(r, y)), inner(x, y));
        auto k = curvature_functional<Exact>(5);
        ASSERT_EQ(curvature(apply(r, x)), dot(k, r * x.x));
    }
}

TEST(Inversive, SimilarityMaps) {
    auto b = ball_from_sphere<Exact>({1, 2, 3}, Exact(2));
    auto t = translation<Exact>({Exact(1), Exact(-1), Exact(Rational(1, 2))});
    EXPECT_TRUE(is_lorentz(t));
    EXPECT_EQ(apply(t, b), ball_from_sphere<Exact>({2, 1, Exact(Rational(7, 2))}, Exact(2)));
    auto h = ball_from_halfspace<Exact>({0, 0, 1}, Exact(1));
    EXPECT_EQ(apply(t, h), ball_from_halfspace<Exact>({0, 0, 1}, Exact(Rational(3, 2))));
    auto s = scaling<Exact>(3, Exact(3));
    EXPECT_TRUE(is_lorentz(s));
    EXPECT_EQ(apply(s, b), ball_from_sphere<Exact>({3, 6, 9}, Exact(6)));
}
