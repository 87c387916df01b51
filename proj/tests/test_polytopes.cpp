#include <gtest/gtest.h>

#include <polypack/polytopes.hpp>

using namespace polypack;

namespace {

std::size_t count_faces(const FaceLattice& fl, int k) { return fl.faces[k].size(); }

}  // namespace

TEST(Polytopes, FaceCounts) {
    struct Row {
        const char* name;
        int n;
        std::vector<std::size_t> f;
    };
    std::vector<Row> rows{{"simplex", 4, {5, 10, 10, 5}},   {"orthoplex", 4, {8, 24, 32, 16}},
                          {"cube", 4, {16, 32, 24, 8}},      {"24-cell", 0, {24, 96, 96, 24}},
                          {"icosahedron", 0, {12, 30, 20}},  {"dodecahedron", 0, {20, 30, 12}},
                          {"600-cell", 0, {120, 720, 1200, 600}}, {"120-cell", 0, {600, 1200, 720, 120}},
                          {"cube", 5, {32, 80, 80, 40, 10}}};
    for (auto& r : rows) {
        auto p = edge_scribed<double>(r.name, r.n);
        ASSERT_EQ(std::size_t(p.lattice.dim()), r.f.size()) << r.name;
        for (std::size_t k = 0; k < r.f.size(); ++k) EXPECT_EQ(count_faces(p.lattice, int(k)), r.f[k]) << r.name << " k=" << k;
    }
}

TEST(Polytopes, BallProjectionIsEdgeTangent) {
    for (auto [name, n] : std::vector<std::pair<const char*, int>>{{"orthoplex", 3}, {"cube", 4}, {"24-cell", 0}, {"icosahedron", 0}}) {
        auto p = ball_projection(edge_scribed<Exact>(name, n));
        auto edges = edge_scribed<Exact>(name, n).lattice.faces[1];
        EXPECT_TRUE(is_packing(p.balls)) << name;
        EXPECT_EQ(tangency_edges(p.balls).size(), edges.size()) << name;
    }
}

TEST(Polytopes, ExactFieldsAndFloatOnly) {
    EXPECT_NO_THROW(edge_scribed<Exact>("24-cell"));
    EXPECT_NO_THROW(edge_scribed<Exact>("dodecahedron"));
    EXPECT_THROW(edge_scribed<Exact>("600-cell"), field_error);
    EXPECT_THROW(polytope_id("tesseractoid"), std::invalid_argument);
    EXPECT_THROW(polytope_id("cube", 1), std::invalid_argument);
}

TEST(Polytopes, MeanCurvatureIsReciprocalMidsphereRatio) {
    for (auto [name, n] : std::vector<std::pair<const char*, int>>{{"simplex", 4}, {"orthoplex", 4}, {"cube", 3}, {"120-cell", 0}}) {
        auto p = edge_scribed<double>(name, n);
        for (int i = 0; i < p.dim(); ++i) {
            auto res = cbp_projection(p, i);
            double mean = 0;
            for (auto& b : res.packing.balls) mean += curvature(b);
            mean /= double(res.packing.size());
            EXPECT_NEAR(mean, 1 / p.ell, 1e-9) << name << " face " << i;
            EXPECT_NEAR(face_curvature(res.packing, all_indices(res.packing)), mean, 1e-9);
        }
    }
}

TEST(Polytopes, OrthoplexEdgeCenteredCurvatures) {
    auto res = cbp_projection(edge_scribed<double>("orthoplex", 4), 1);
    std::vector<double> k;
    for (auto& b : res.packing.balls) k.push_back(curvature(b));
    std::sort(k.begin(), k.end());
    std::vector<double> want{0, 0, 1, 1, 1, 1, 2, 2};
    for (int i = 0; i < 8; ++i) EXPECT_NEAR(k[i], want[i], 1e-12);
}

TEST(Polytopes, SpectrumOfOctahedron) {
    auto s = mobius_spectrum(ball_projection(edge_scribed<Exact>("orthoplex", 3)));
    ASSERT_EQ(s.size(), 3u);
    EXPECT_EQ(s[0].value, -6);
    EXPECT_EQ(s[0].multiplicity, 1);
    EXPECT_EQ(s[1].value, 0);
    EXPECT_EQ(s[1].multiplicity, 2);
    EXPECT_EQ(s[2].value, 4);
    EXPECT_EQ(s[2].multiplicity, 3);
    EXPECT_TRUE(s[0].exact && s[1].exact && s[2].exact);
}

TEST(Polytopes, TrinityOfAnOrthoplicialPacking) {
    auto p = ball_projection(edge_scribed<Exact>("orthoplex", 4));
    ASSERT_TRUE(is_orthoplicial(p));
    auto [a, b] = trinity(p);
    EXPECT_TRUE(is_orthoplicial(a));
    EXPECT_TRUE(is_orthoplicial(b));
    EXPECT_THROW(trinity(ball_projection(edge_scribed<Exact>("cube", 3))), std::invalid_argument);
}

TEST(Polytopes, DualBallsAreOrthogonalToTheirFacet) {
    auto p = ball_projection(edge_scribed<Exact>("cube", 3));
    auto facets = facets_of(p);
    auto duals = dual_packing(p);
    ASSERT_EQ(duals.size(), facets.size());
    for (std::size_t i = 0; i < facets.size(); ++i)
        for (int v : facets[i]) EXPECT_EQ(inner(duals[i], p.balls[v]), Exact(0));
}
