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

Vec<E> curvs(const Packing<E>& p, const std::vector<int>& idx) {
    Vec<E> k;
    for (int i : idx) k.push_back(curvature(p.balls[i]));
    return k;
}

bool input_integral(SectionKind kind, const Vec<E>& k) {
    switch (kind) {
        case SectionKind::Tetrahedral: return is_integral_tetrahedral(k);
        case SectionKind::Octahedral: return is_integral_octahedral(k);
        case SectionKind::Cubical: return is_integral_cubical(k);
    }
    return false;
}

const std::vector<int>& prescribed(SectionKind kind) {
    static const std::vector<int> t{0, 1, 2, 3}, o{0, 1, 2}, c{0, 5, 2};
    return kind == SectionKind::Tetrahedral ? t : kind == SectionKind::Octahedral ? o : c;
}

// Inputs reached from a seed by a random word in the planar group.
Vec<E> random_descendant(SectionKind kind, const Vec<E>& seed, std::mt19937& rng) {
    auto planar = realize(kind, seed);
    auto l = lift(kind, planar);
    std::uniform_int_distribution<std::size_t> pick(0, l.planar_gens.size() - 1);
    std::uniform_int_distribution<int> len(1, 3);
    for (;;) {
        auto m = LorentzMap<E>::identity(l.planar_gens[0].rows());
        for (int i = len(rng); i > 0; --i) m = l.planar_gens[pick(rng)] * m;
        // l.planar is canonical; realize() order matches it for the prescribed disks
        auto k = curvs(apply(m, l.planar), prescribed(kind));
        bool small = true;
        for (auto& v : k) small = small && std::abs(num::to_double(v)) <= 1000;
        if (small) return k;
    }
}

}  // namespace

TEST(Sections, StandardSeedsLift) {
    auto t = lift(SectionKind::Tetrahedral, realize(SectionKind::Tetrahedral, ints({-1, 2, 2, 3})));
    EXPECT_TRUE(vec_eq(lifted_seed(t, realize(SectionKind::Tetrahedral, ints({-1, 2, 2, 3}))), ints({-1, 2, 2, 3})));

    auto op = realize(SectionKind::Octahedral, ints({-2, 4, 5}));
    auto o = lift(SectionKind::Octahedral, op);
    EXPECT_TRUE(vec_eq(lifted_seed(o, op), ints({-2, 4, 5, 5})));
    EXPECT_EQ(simplicial(lifted_seed(o, op)), E(1));

    auto cp = realize(SectionKind::Cubical, ints({5, -3, 12}));
    auto c = lift(SectionKind::Cubical, cp);
    EXPECT_TRUE(vec_eq(lifted_seed(c, cp), ints({-3, 5, 12, 20})));
    EXPECT_EQ(simplicial(lifted_seed(c, cp)), E(0));
}

TEST(Sections, OctahedralCompletion) {
    auto p = realize(SectionKind::Octahedral, ints({-2, 4, 5}));
    auto k = curvs(p, all_indices(p));
    EXPECT_TRUE(vec_eq(k, ints({-2, 4, 5, 12, 6, 5})));
    EXPECT_TRUE(is_integral_octahedral(ints({-2, 4, 5})));
}

TEST(Sections, CubicalRealization) {
    auto p = realize(SectionKind::Cubical, ints({5, -3, 12}));
    EXPECT_TRUE(vec_eq(curvs(p, all_indices(p)), ints({5, 37, 12, 14, 29, -3, 22, 20})));
    EXPECT_TRUE(is_integral_cubical(ints({5, -3, 12})));
}

TEST(Sections, LiftThenSectionIsIdentity) {
    std::vector<std::pair<SectionKind, Vec<E>>> seeds{{SectionKind::Tetrahedral, ints({-1, 2, 2, 3})},
                                                      {SectionKind::Octahedral, ints({-2, 4, 5})},
                                                      {SectionKind::Cubical, ints({5, -3, 12})},
                                                      {SectionKind::Tetrahedral, ints({0, 0, 1, 1})}};
    for (auto& [kind, k] : seeds) {
        auto l = lift(kind, realize(kind, k));
        auto back = unlift(l);
        ASSERT_EQ(back.size(), l.planar.size());
        for (std::size_t i = 0; i < back.size(); ++i) EXPECT_TRUE(vec_eq(back.balls[i].x, l.planar.balls[i].x)) << kind_name(kind);
        EXPECT_TRUE(is_orthoplicial(l.ambient));
        EXPECT_TRUE(generators_restrict(l));
    }
}

TEST(Sections, EquivalenceDepthTwo) {
    for (auto kind : {SectionKind::Tetrahedral, SectionKind::Octahedral, SectionKind::Cubical}) {
        Vec<E> k = kind == SectionKind::Tetrahedral   ? ints({-1, 2, 2, 3})
                   : kind == SectionKind::Octahedral ? ints({-2, 4, 5})
                                                     : ints({5, -3, 12});
        auto rep = verify_arithmetic_equivalence(lift(kind, realize(kind, k)), 2);
        EXPECT_TRUE(rep.ok()) << kind_name(kind) << ": " << (rep.mismatches.empty() ? "" : rep.mismatches[0]);
        EXPECT_GT(rep.checked_words, 0u);
    }
}

TEST(Sections, EighthOctahedralPatternIsReported) {
    auto r = eighth_pattern_report(section_octahedral<E>(), 2);
    EXPECT_GT(r.with_listed, 0u);
    EXPECT_GE(r.with_all, r.with_listed);
}

TEST(Sections, RejectsBadInput) {
    EXPECT_THROW(realize(SectionKind::Tetrahedral, ints({1, 1, 1, 1})), not_realizable);
    EXPECT_THROW(realize(SectionKind::Octahedral, ints({1, 2})), std::invalid_argument);
    EXPECT_THROW(parse_kind("dodeca"), std::invalid_argument);
}

// Input integral iff lifted seed integral, on random integral and non-integral seeds.
TEST(Sections, IntegralityTransfer) {
    std::mt19937 rng(7);
    std::vector<std::pair<SectionKind, Vec<E>>> seeds{{SectionKind::Tetrahedral, ints({-1, 2, 2, 3})},
                                                       {SectionKind::Octahedral, ints({-2, 4, 5})},
                                                       {SectionKind::Cubical, ints({5, -3, 12})}};
    for (auto& [kind, seed] : seeds) {
        std::vector<Vec<E>> inputs{seed};
        for (int i = 0; i < 50; ++i) inputs.push_back(random_descendant(kind, seed, rng));
        // non-integral counterparts: halve
        std::size_t integral_count = inputs.size();
        for (std::size_t i = 0; i < integral_count; ++i) {
            Vec<E> h;
            for (auto& v : inputs[i]) h.push_back(v * E(Rational(1, 2)));
            inputs.push_back(h);
        }
        // integer inputs whose completion may leave the rationals
        if (kind != SectionKind::Tetrahedral) {
            std::uniform_int_distribution<int> v(1, 60);
            for (int added = 0; added < 20;) {
                auto k = ints({v(rng), v(rng), v(rng)});
                try {
                    realize(kind, k);
                } catch (const std::exception&) {
                    continue;
                }
                inputs.push_back(k);
                ++added;
            }
        }
        int positives = 0, negatives = 0;
        for (std::size_t i = 0; i < inputs.size(); ++i) {
            const auto& k = inputs[i];
            SCOPED_TRACE(kind_name(kind) + " " + std::to_string(i) + " " + num::str(k[0]) + "," + num::str(k[1]) + "," + num::str(k[2]));
            Packing<E> planar;
            Lift<E> l;
            try {
                planar = realize(kind, k);
                l = lift(kind, planar);
            } catch (const std::exception& e) {
                ADD_FAILURE() << e.what();
                continue;
            }
            bool in = input_integral(kind, k);
            bool out = is_integral_orthoplicial(lifted_seed(l, planar));
            EXPECT_EQ(in, out) << kind_name(kind) << " input #" << i;
            if (i < integral_count) {
                EXPECT_TRUE(in) << kind_name(kind) << " descendant #" << i;
            }
            (in ? positives : negatives)++;
        }
        EXPECT_GE(positives, 51);
        EXPECT_GT(negatives, 0);
    }
}
