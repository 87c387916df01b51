#include <gtest/gtest.h>

#include <polypack/io.hpp>
#include <polypack/sections.hpp>

using namespace polypack;
using E = Exact;
using io::json;

TEST(Io, ScalarsRoundTrip) {
    for (auto x : {E(Rational(-7, 3)), E(0), E::root(2) * E(Rational(3, 5)) + E(1)}) {
        auto j = io::to_json(x);
        EXPECT_EQ(io::scalar_from_json<E>(j, io::field_of(x)), x) << j.dump();
    }
    EXPECT_EQ(io::scalar_from_json<E>(json("5/10"), 0), E(Rational(1, 2)));
    EXPECT_EQ(io::scalar_from_json<E>(json(3), 0), E(3));
    EXPECT_EQ(io::to_json(E(4)), json("4"));
}

TEST(Io, PackingRoundTripKeepsGramExactly) {
    for (auto p : {standard_orthoplicial<E>(), ball_projection(edge_scribed<E>("24-cell")),
                   realize(SectionKind::Cubical, Vec<E>{E(5), E(-3), E(12)})}) {
        auto text = io::to_json(p).dump();
        auto q = io::packing_from_json<E>(json::parse(text));
        ASSERT_EQ(q.size(), p.size());
        EXPECT_EQ(gram(q), gram(p));
        EXPECT_EQ(q.facets, p.facets);
    }
}

TEST(Io, BallFormats) {
    auto s = io::ball_from_json<E>(json::parse(R"({"center": [1, 1, 0], "radius": 1})"));
    EXPECT_EQ(s, (Ball<E>{1, 1, 0, 0, 1}));
    auto h = io::ball_from_json<E>(json::parse(R"({"normal": [0, 0, 1], "offset": 1})"));
    EXPECT_EQ(h, (Ball<E>{0, 0, 1, 1, 1}));
    EXPECT_THROW(io::ball_from_json<E>(json::parse(R"({"coords": [1, 1, 1, 1, 1]})")), std::invalid_argument);
    EXPECT_THROW(io::ball_from_json<E>(json::parse(R"({"radius": 1})")), std::invalid_argument);
}

TEST(Io, OverlappingBallsRejected) {
    auto j = json::parse(R"({"balls": [{"center": [0, 0], "radius": 1}, {"center": [1, 0], "radius": 1}]})");
    EXPECT_THROW(io::packing_from_json<E>(j), std::invalid_argument);
}

TEST(Io, OrbitReportAndCensus) {
    auto p = standard_orthoplicial<E>();
    auto rep = orbit(p, generators(p), {2, std::nullopt});
    auto j = io::to_json(rep);
    EXPECT_EQ(j.at("size").get<std::size_t>(), 872u);
    EXPECT_EQ(j.at("balls").size(), 872u);
    EXPECT_TRUE(j.at("all_integral").get<bool>());
    EXPECT_FALSE(io::to_json(rep, false).contains("balls"));
    auto csv = io::census_csv(curvature_census(rep, 0, 3));
    EXPECT_EQ(csv.rfind("curvature,count\n0,", 0), 0u);
}

TEST(Io, SvgIsDeterministicAndClipsHalfPlanes) {
    auto p = realize(SectionKind::Tetrahedral, Vec<E>{E(0), E(0), E(1), E(1)});
    io::RenderSpec spec;
    spec.label_below = 5;
    auto a = io::render_svg(p.balls, spec), b = io::render_svg(p.balls, spec);
    EXPECT_EQ(a, b);
    EXPECT_NE(a.find("<polygon"), std::string::npos);
    EXPECT_NE(a.find("<circle"), std::string::npos);
    EXPECT_NE(a.find(">1</text>"), std::string::npos);
    spec.max_curvature = 0.5;
    EXPECT_EQ(io::render_svg(p.balls, spec).find("<circle"), std::string::npos);
}
