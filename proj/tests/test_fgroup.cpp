#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "tate/group.hpp"

using namespace tate;

namespace {

int order_of(const FiniteGroup& G, Elt g) {
    int k = 1;
    for (Elt p = g; p != 0; p = G.mul(p, g)) ++k;
    return k;
}

Elt first_of_order(const FiniteGroup& G, int k) {
    for (int g = 0; g < G.order(); ++g)
        if (order_of(G, static_cast<Elt>(g)) == k) return static_cast<Elt>(g);
    return 0;
}

std::vector<std::vector<Elt>> sequences(int order, int n) {
    std::vector<std::vector<Elt>> out{{}};
    for (int k = 0; k < n; ++k) {
        std::vector<std::vector<Elt>> next;
        for (const auto& s : out)
            for (int g = 0; g < order; ++g) {
                auto t = s;
                t.push_back(static_cast<Elt>(g));
                next.push_back(t);
            }
        out = next;
    }
    return out;
}

const std::vector<std::string> kSmall = {"trivial", "Z2", "Z3", "Z4", "Z2xZ2", "S3", "Z6"};

}  // namespace

TEST(Group, CyclicTwoFromTable) {
    auto G = FiniteGroup::from_table({{0, 1}, {1, 0}}, "Z2");
    EXPECT_EQ(G.order(), 2);
    EXPECT_EQ(G.inv(1), 1);
}

TEST(Group, TableWithoutInverseRejected) { EXPECT_THROW(FiniteGroup::from_table({{0, 1}, {1, 1}}, "bad"), GroupError); }

TEST(Group, MalformedTablesRejected) {
    EXPECT_THROW(FiniteGroup::from_table({}, "empty"), GroupError);
    EXPECT_THROW(FiniteGroup::from_table({{0, 1}, {1}}, "ragged"), GroupError);
    EXPECT_THROW(FiniteGroup::from_table({{0, 2}, {1, 0}}, "range"), GroupError);
    EXPECT_THROW(FiniteGroup::from_table({{1, 0}, {0, 1}}, "identity elsewhere"), GroupError);
    // a loop that is not associative
    std::vector<std::vector<int>> loop = {{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
    EXPECT_THROW(FiniteGroup::from_table(loop, "loop"), GroupError);
    EXPECT_THROW(FiniteGroup::preset("Z0x"), GroupError);
}

TEST(Group, SymmetricGroupIsNonabelian) {
    auto G = FiniteGroup::preset("S3");
    EXPECT_EQ(G.order(), 6);
    bool commute = true;
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) commute = commute && G.mul(a, b) == G.mul(b, a);
    EXPECT_FALSE(commute);
    EXPECT_FALSE(G.is_abelian());
}

TEST(Group, KleinTable) {
    auto G = FiniteGroup::preset("Z2xZ2");
    EXPECT_EQ(G.mul(1, 2), 3);
    EXPECT_EQ(G.mul(2, 3), 1);
    EXPECT_EQ(G.mul(1, 3), 2);
    for (Elt g = 1; g < 4; ++g) EXPECT_EQ(G.mul(g, g), 0);
}

TEST(Group, CyclicFourIndexedByExponent) {
    auto G = FiniteGroup::preset("Z4");
    Elt p = 0;
    for (int k = 0; k < 4; ++k) {
        EXPECT_EQ(p, k);
        p = G.mul(p, 1);
    }
    EXPECT_EQ(p, 0);
}

TEST(Group, PresetsAreGroups) {
    for (const auto& name : {"trivial", "Z2", "Z3", "Z4", "Z2xZ2", "S3", "Z6", "D4", "Q8", "product(Z2,S3)"}) {
        auto G = FiniteGroup::preset(name);
        for (int a = 0; a < G.order(); ++a) {
            EXPECT_EQ(G.mul(G.inv(a), a), 0) << name;
            EXPECT_EQ(G.mul(0, a), a) << name;
            for (int b = 0; b < G.order(); ++b)
                for (int c = 0; c < G.order(); ++c) EXPECT_EQ(G.mul(G.mul(a, b), c), G.mul(a, G.mul(b, c))) << name;
        }
    }
    EXPECT_EQ(FiniteGroup::preset("product(Z2,S3)").order(), 12);
    EXPECT_EQ(FiniteGroup::preset("D4").order(), 8);
}

TEST(Conjugacy, SymmetricGroupClassSizes) {
    auto G = FiniteGroup::preset("S3");
    ConjugacyData cd(G);
    std::multiset<int> sizes;
    for (int c = 0; c < cd.num_classes(); ++c) sizes.insert(cd.class_size(c));
    EXPECT_EQ(sizes, (std::multiset<int>{1, 2, 3}));
}

TEST(Conjugacy, TranspositionCentralizer) {
    auto G = FiniteGroup::preset("S3");
    ConjugacyData cd(G);
    Elt t = first_of_order(G, 2);
    int c = cd.class_of(t);
    EXPECT_EQ(cd.centralizer(c).size(), 2u);
    EXPECT_EQ(cd.class_size(c), 3);
}

TEST(Conjugacy, TrivialGroupHasOneClass) {
    auto G = FiniteGroup::preset("trivial");
    ConjugacyData cd(G);
    EXPECT_EQ(cd.num_classes(), 1);
    EXPECT_EQ(cd.rep(0), 0);
    EXPECT_EQ(cd.coset_reps(0), std::vector<Elt>{0});
}

TEST(Conjugacy, AbelianClassesAreSingletons) {
    for (const auto& name : {"Z2", "Z3", "Z4", "Z2xZ2", "Z6"}) {
        auto G = FiniteGroup::preset(name);
        ConjugacyData cd(G);
        EXPECT_EQ(cd.num_classes(), G.order());
        for (int c = 0; c < cd.num_classes(); ++c) {
            EXPECT_EQ(cd.class_size(c), 1);
            EXPECT_EQ(static_cast<int>(cd.centralizer(c).size()), G.order());
            EXPECT_EQ(cd.coset_reps(c), std::vector<Elt>{0});
        }
    }
}

TEST(ConjugacyProperties, PartitionAndOrbitStabilizer) {
    for (const auto& name : {"trivial", "Z2", "Z3", "Z4", "Z2xZ2", "S3", "Z6", "D4", "Q8"}) {
        auto G = FiniteGroup::preset(name);
        ConjugacyData cd(G);
        std::vector<int> seen(G.order(), 0);
        for (int c = 0; c < cd.num_classes(); ++c) {
            const auto& xs = cd.conjugates(c);
            const auto& gam = cd.coset_reps(c);
            EXPECT_EQ(static_cast<int>(cd.centralizer(c).size()) * cd.class_size(c), G.order()) << name;
            EXPECT_EQ(gam[0], 0) << name;
            EXPECT_EQ(xs[0], cd.rep(c)) << name;
            for (std::size_t i = 0; i < xs.size(); ++i) {
                ++seen[xs[i]];
                EXPECT_EQ(xs[i], G.mul(G.mul(G.inv(gam[i]), cd.rep(c)), gam[i])) << name;
                EXPECT_EQ(cd.position(xs[i]), static_cast<int>(i)) << name;
                EXPECT_EQ(cd.class_of(xs[i]), c) << name;
            }
            // classes are ordered by least element
            if (c > 0) EXPECT_LT(cd.rep(c - 1), cd.rep(c)) << name;
            EXPECT_EQ(cd.rep(c), *std::min_element(xs.begin(), xs.end())) << name;
        }
        for (int g = 0; g < G.order(); ++g) EXPECT_EQ(seen[g], 1) << name;
    }
}

TEST(ConjugacyProperties, CosetIndexRoundTrip) {
    for (const auto& name : kSmall) {
        auto G = FiniteGroup::preset(name);
        ConjugacyData cd(G);
        for (int c = 0; c < cd.num_classes(); ++c) {
            std::set<std::pair<int, Elt>> images;
            for (int g = 0; g < G.order(); ++g) {
                auto [i, h] = cd.coset_index(c, static_cast<Elt>(g));
                EXPECT_TRUE(cd.centralizes(c, h));
                EXPECT_EQ(G.mul(h, cd.coset_reps(c)[i]), g) << name;
                images.insert({i, h});
            }
            EXPECT_EQ(static_cast<int>(images.size()), G.order());
        }
    }
}

TEST(Spade, AbelianIsIdentity) {
    for (const auto& name : {"Z2", "Z4", "Z2xZ2", "Z6"}) {
        auto G = FiniteGroup::preset(name);
        ConjugacyData cd(G);
        for (int c = 0; c < cd.num_classes(); ++c)
            for (int n = 0; n <= 3; ++n)
                for (const auto& seq : sequences(G.order(), n)) {
                    auto r = spadesuit(cd, c, 0, seq);
                    EXPECT_EQ(r.h, seq);
                    EXPECT_EQ(r.final_index, 0);
                }
    }
}

TEST(Spade, EmptySequenceKeepsIndex) {
    auto G = FiniteGroup::preset("S3");
    ConjugacyData cd(G);
    for (int c = 0; c < cd.num_classes(); ++c)
        for (int i = 0; i < cd.class_size(c); ++i) {
            auto r = spadesuit(cd, c, i, {});
            EXPECT_TRUE(r.h.empty());
            EXPECT_EQ(r.final_index, i);
        }
    EXPECT_THROW(spadesuit(cd, 0, 1, {}), std::out_of_range);
}

TEST(Spade, TranspositionSecondCoset) {
    auto G = FiniteGroup::preset("S3");
    ConjugacyData cd(G);
    Elt t = first_of_order(G, 2);
    Elt r = first_of_order(G, 3);
    int c = cd.class_of(t);
    std::vector<Elt> seq = {r, t};
    auto res = spadesuit(cd, c, 1, seq);
    // re-multiply the chain step by step
    const auto& gam = cd.coset_reps(c);
    int cur = 1;
    for (std::size_t k = 0; k < seq.size(); ++k) {
        int next = -1;
        for (int j = 0; j < cd.class_size(c); ++j) {
            Elt h = G.mul(G.mul(gam[cur], seq[k]), G.inv(gam[j]));
            if (cd.centralizes(c, h)) next = j;
        }
        ASSERT_GE(next, 0);
        EXPECT_EQ(res.h[k], G.mul(G.mul(gam[cur], seq[k]), G.inv(gam[next])));
        cur = next;
    }
    EXPECT_EQ(res.final_index, cur);
}

TEST(SpadeProperties, ProductIdentityExhaustive) {
    for (const auto& name : kSmall) {
        auto G = FiniteGroup::preset(name);
        ConjugacyData cd(G);
        for (int c = 0; c < cd.num_classes(); ++c) {
            const auto& gam = cd.coset_reps(c);
            for (int i = 0; i < cd.class_size(c); ++i)
                for (int n = 0; n <= 3; ++n)
                    for (const auto& seq : sequences(G.order(), n)) {
                        auto r = spadesuit(cd, c, i, seq);
                        ASSERT_EQ(r.h.size(), seq.size());
                        for (Elt h : r.h) EXPECT_TRUE(cd.centralizes(c, h));
                        Elt lhs = G.mul(gam[i], G.product(seq.data(), n));
                        Elt rhs = G.mul(G.product(r.h.data(), n), gam[r.final_index]);
                        EXPECT_EQ(lhs, rhs) << name;
                    }
        }
    }
}

TEST(Club, EmptySequences) {
    auto G = FiniteGroup::preset("S3");
    for (int x = 0; x < 6; ++x)
        for (int g = 0; g < 6; ++g)
            EXPECT_EQ(clubsuit(G, x, g, {}, {}), std::vector<Elt>{G.mul(G.inv(g), x)});
}

TEST(Club, AbelianSubstitution) {
    auto G = FiniteGroup::preset("Z4");
    // (h, g'^-1 g^-1 x, g) with x = 3, g = 1, h = 2, g' = 2
    EXPECT_EQ(clubsuit(G, 3, 2, {1}, {2}), (std::vector<Elt>{2, 0, 1}));
    EXPECT_EQ(clubsuit(G, 1, 1, {1}, {3}), (std::vector<Elt>{3, 3, 1}));
}

TEST(Club, SymmetricSubstitution) {
    auto G = FiniteGroup::preset("S3");
    for (int x = 0; x < 6; ++x)
        for (int g = 0; g < 6; ++g)
            for (int a = 1; a < 6; ++a)
                for (int b = 1; b < 6; ++b) {
                    auto out = clubsuit(G, x, g, {static_cast<Elt>(a), static_cast<Elt>(b)}, {static_cast<Elt>(b)});
                    ASSERT_EQ(out.size(), 4u);
                    EXPECT_EQ(out[0], b);
                    // g_1 g_2 g * middle = x
                    EXPECT_EQ(G.mul(G.mul(G.mul(a, b), g), out[1]), x);
                    EXPECT_EQ(out[2], a);
                    EXPECT_EQ(out[3], b);
                }
}
