#include <gtest/gtest.h>

#include <polypack/sections.hpp>

using namespace polypack;
using E = Exact;

TEST(Apollonian, FacetWords) {
    auto w = FacetWord::parse("1-23-4");
    EXPECT_EQ(w.str(), "1-23-4");
    EXPECT_EQ(w.bars(), 2);
    EXPECT_EQ(w.balls(), (std::vector<int>{0, 2, 5, 7}));
    EXPECT_THROW(FacetWord::parse("1243"), std::invalid_argument);
    EXPECT_THROW(FacetWord::parse("123"), std::invalid_argument);
    EXPECT_EQ(all_facet_words().size(), 16u);
}

TEST(Apollonian, StandardGeneratorsAreIntegerInvolutions) {
    auto g = generators(standard_orthoplicial<E>());
    ASSERT_EQ(g.size(), 16u);
    auto id = Matrix<E>::identity(5);
    for (auto& m : g.gens) {
        EXPECT_EQ(m * m, id);
        EXPECT_TRUE(is_lorentz(m));
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = 0; j < 5; ++j) EXPECT_TRUE(num::is_integer(m(i, j)));
    }
}

TEST(Apollonian, PrintedLabelsMapToStandardBalls) {
    auto w = printed_to_standard(FacetWord::parse("-1234"));
    EXPECT_EQ(w.str(), "12-34");
}

TEST(Apollonian, StandardOrbitCounts) {
    auto p = standard_orthoplicial<E>();
    auto rep = orbit(p, generators(p), {4, std::nullopt});
    std::vector<std::size_t> cumulative;
    std::size_t total = 0;
    for (auto n : rep.per_depth) cumulative.push_back(total += n);
    EXPECT_EQ(cumulative, (std::vector<std::size_t>{8, 72, 872, 10984, 138952}));
    EXPECT_EQ(rep.engine, "lattice");
    EXPECT_TRUE(rep.all_integral());
}

TEST(Apollonian, EnginesAgree) {
    auto p = standard_orthoplicial<E>();
    auto lattice = orbit(p, generators(p), {3, 50.0});
    auto exact = orbit(p, generators(p), {3, 50.0}, {0, false});
    EXPECT_EQ(exact.engine, "exact");
    EXPECT_EQ(orbit_key_set(lattice), orbit_key_set(exact));
    auto pf = convert<double>(p);
    auto fl = orbit(pf, generators(pf), {3, 50.0});
    EXPECT_EQ(fl.size(), exact.size());
}

TEST(Apollonian, ThreadCountDoesNotChangeTheResult) {
    auto p = standard_orthoplicial<E>();
    auto one = orbit(p, generators(p), {4, 200.0}, {1, true});
    auto many = orbit(p, generators(p), {4, 200.0}, {8, true});
    ASSERT_EQ(one.size(), many.size());
    for (std::size_t i = 0; i < one.size(); ++i) {
        EXPECT_EQ(one.ball(i), many.ball(i));
        EXPECT_EQ(one.entries[i].depth, many.entries[i].depth);
    }
}

TEST(Apollonian, WordsReproduceBalls) {
    auto p = standard_orthoplicial<E>();
    auto g = generators(p);
    auto rep = orbit(p, g, {3, std::nullopt});
    for (std::size_t i = 0; i < rep.size(); i += 97) {
        auto w = rep.word(i);
        std::size_t root = i;
        while (rep.entries[root].parent >= 0) root = std::size_t(rep.entries[root].parent);
        Vec<E> x = rep.ball(root).x;
        for (auto it = w.rbegin(); it != w.rend(); ++it) x = g.gens[*it] * x;
        EXPECT_TRUE(vec_eq(x, rep.ball(i).x)) << i;
        EXPECT_EQ(int(w.size()), rep.entries[i].depth);
    }
}

TEST(Apollonian, CensusAndIntegrality) {
    auto p = standard_orthoplicial<E>();
    auto rep = orbit(p, generators(p), {3, 20.0});
    auto c = curvature_census(rep, 0, 20);
    EXPECT_EQ(c.non_integral, 0u);
    std::size_t total = 0;
    for (auto& [k, n] : c.counts) total += n;
    EXPECT_EQ(total, rep.size());
    EXPECT_TRUE(is_integral_orthoplicial(Vec<E>{E(-2), E(4), E(5), E(5)}));
    EXPECT_TRUE(is_integral_orthoplicial(Vec<E>{E(-1), E(2), E(3), E(4)}));
    EXPECT_FALSE(is_integral_orthoplicial(Vec<E>{E(-1), E(2), E(3), E(5)}));
    EXPECT_TRUE(is_integral_tetrahedral(Vec<E>{E(-1), E(2), E(2), E(3)}));
}

TEST(Apollonian, CoxeterOrders) {
    auto gens = symmetrized_generators();
    ASSERT_EQ(gens.size(), 5u);
    EXPECT_EQ(matrix_order(gens[0].second * gens[1].second), 3);
    EXPECT_EQ(matrix_order(gens[2].second * gens[3].second), 4);
    EXPECT_EQ(matrix_order(gens[0].second * gens[4].second), 2);
}

TEST(Apollonian, ConjugatedProductMatchesDirectProduct) {
    auto lift_ = lift(SectionKind::Octahedral, realize(SectionKind::Octahedral, Vec<E>{E(-2), E(4), E(5)}));
    auto g = generators(lift_.ambient);
    ASSERT_TRUE(g.frame.has_value());
    EXPECT_EQ(g.product("1234", "123-4"), g.by_label("1234") * g.by_label("123-4"));
}
