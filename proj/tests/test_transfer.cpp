#include <gtest/gtest.h>

#include "support.hpp"
#include "tate/abelian.hpp"
#include "tate/m2_oracle.hpp"
#include "tate/transfer.hpp"
#include "tate/verify.hpp"

using namespace tate;
using namespace tate::testing;

namespace {

const Field Q = Field::rationals();

DecomposedElement as_decomposed(const AnyElement& a) { return std::get<DecomposedElement>(a); }

}  // namespace

TEST(Transfer, CorollaIsCaseOneOracle) {
    auto G = FiniteGroup::preset("S3");
    ConjugacyData cd(G);
    TransferEngine engine(cd);
    M2Oracle oracle(cd, Q);
    auto corolla = PlanarTree::parse("(.,.)");
    for (const auto& a : decomposed_elements(cd, Q, 1))
        for (const auto& b : decomposed_elements(cd, Q, 1)) {
            DecomposedElement want = oracle(1, a.terms[0].first, 1, b.terms[0].first);
            EXPECT_EQ(engine.eval_tree(corolla, {a, b}), want);
            EXPECT_EQ(engine.mhat({a, b}), want);
        }
}

TEST(Transfer, AbelianTreesWithInternalEdgeVanish) {
    auto G = FiniteGroup::preset("Z4");
    ConjugacyData cd(G);
    TransferEngine engine(cd);
    std::vector<DecomposedElement> basis;
    for (int d = -2; d <= 2; ++d)
        for (const auto& e : decomposed_elements(cd, Q, d)) basis.push_back(e);
    for (int n = 3; n <= 4; ++n)
        for (const auto& t : enumerate_trees(n)) {
            if (t.internal_edges() == 0) continue;
            for (std::size_t k = 0; k < 300; ++k) {
                std::vector<DecomposedElement> in;
                for (int i = 0; i < n; ++i) in.push_back(basis[(k * 7 + i * 13 + k * i) % basis.size()]);
                EXPECT_TRUE(engine.eval_tree(t, in).is_zero()) << t.encode();
            }
        }
}

TEST(Transfer, TernaryCorollaOnCyclicTwoIsClosedForm) {
    auto G = FiniteGroup::preset("Z2");
    ConjugacyData cd(G);
    TransferEngine engine(cd);
    auto ternary = PlanarTree::parse("(.,.,.)");
    for (int m = 0; m <= 3; ++m)
        for (int r = -3; r <= -1; ++r)
            for (int n = 0; n <= 3; ++n) {
                Word wm, wr, wn;
                for (int i = 0; i < m; ++i) wm.push(1);
                for (int i = 0; i < -r - 1; ++i) wr.push(1);
                for (int i = 0; i < n; ++i) wn.push(1);
                auto phi = AbelianCochain::basis(m, Q, wm), alpha = AbelianCochain::basis(r, Q, wr),
                     psi = AbelianCochain::basis(n, Q, wn);
                for (Elt x = 0; x < 2; ++x) {
                    auto [z, v] = tensor_structure(G, 3, {{x, phi}, {1, alpha}, {0, psi}});
                    DecomposedElement got = engine.eval_tree(
                        ternary, {to_decomposed(cd, x, phi), to_decomposed(cd, 1, alpha), to_decomposed(cd, 0, psi)});
                    EXPECT_EQ(got, to_decomposed(cd, z, v)) << m << " " << r << " " << n;
                }
            }
}

TEST(Transfer, UnaryOperationSquaresToZero) {
    auto G = FiniteGroup::preset("S3");
    ConjugacyData cd(G);
    TransferEngine engine(cd);
    for (int d = -3; d <= 3; ++d)
        for (const auto& e : decomposed_elements(cd, Q, d)) {
            DecomposedElement once = engine.mhat({e});
            EXPECT_EQ(once, decomposed_diff(cd, e));
            EXPECT_TRUE(engine.mhat({once}).is_zero());
        }
}

TEST(Transfer, AbelianArityFourVanishes) {
    auto G = FiniteGroup::preset("Z2xZ2");
    ConjugacyData cd(G);
    TransferEngine engine(cd);
    std::vector<DecomposedElement> basis;
    for (int d = -1; d <= 1; ++d)
        for (const auto& e : decomposed_elements(cd, Q, d)) basis.push_back(e);
    for (const auto& a : basis)
        for (const auto& b : basis)
            for (std::size_t k = 0; k < basis.size(); k += 3)
                for (std::size_t l = 0; l < basis.size(); l += 5)
                    EXPECT_TRUE(engine.mhat({a, b, basis[k], basis[l]}).is_zero());
}

TEST(LocalOps, ParseAndName) {
    auto k = LocalKind::parse("beta(0-,1+,1-,-)");
    EXPECT_FALSE(k.alpha);
    EXPECT_EQ(k.lifted, (std::vector<bool>{false, true, true}));
    EXPECT_EQ(k.slot_signs, (std::vector<int>{-1, 1, -1}));
    EXPECT_EQ(k.out_sign, -1);
    EXPECT_EQ(k.name(), "beta(0-,1+,1-,-)");
    EXPECT_EQ(LocalKind::parse("alpha(1+,1+,+)").name(), "alpha(1+,1+,+)");
    EXPECT_THROW(LocalKind::parse("gamma(1+,1+,+)"), std::invalid_argument);
    EXPECT_THROW(LocalKind::parse("alpha(1+,+)"), std::invalid_argument);
    EXPECT_THROW(LocalKind::parse("alpha(2+,1+,+)"), std::invalid_argument);
    EXPECT_THROW(LocalKind::parse("alpha(1+,1+,+"), std::invalid_argument);
}

TEST(LocalOps, AlphaOnCohomologyIsMhatTwo) {
    auto G = FiniteGroup::preset("S3");
    ConjugacyData cd(G);
    TransferEngine engine(cd);
    auto kind = LocalKind::parse("alpha(1+,1+,+)");
    for (int da = 0; da <= 1; ++da)
        for (int db = 0; db <= 1; ++db)
            for (const auto& a : decomposed_elements(cd, Q, da))
                for (const auto& b : decomposed_elements(cd, Q, db))
                    EXPECT_EQ(as_decomposed(engine.local_op(kind, {a, b})), engine.mhat({a, b}));
}

TEST(LocalOps, AlphaOnChainsIsCaseTwoOracle) {
    auto G = FiniteGroup::preset("S3");
    ConjugacyData cd(G);
    TransferEngine engine(cd);
    M2Oracle oracle(cd, Q);
    auto kind = LocalKind::parse("alpha(1-,1-,-)");
    for (int da = -3; da <= -1; ++da)
        for (int db = -2; db <= -1; ++db)
            for (const auto& a : decomposed_elements(cd, Q, da))
                for (const auto& b : decomposed_elements(cd, Q, db)) {
                    DecomposedElement got = as_decomposed(engine.local_op(kind, {a, b}));
                    DecomposedElement want = oracle(da, a.terms[0].first, db, b.terms[0].first);
                    EXPECT_EQ(got, want) << describe(a) << " ; " << describe(b);
                }
}

TEST(LocalOps, BetaVanishesOnAbelianGroups) {
    auto G = FiniteGroup::preset("Z4");
    ConjugacyData cd(G);
    TransferEngine engine(cd);
    for (const auto& a : decomposed_elements(cd, Q, 1))
        for (const auto& b : decomposed_elements(cd, Q, -2)) {
            auto v = engine.local_op(LocalKind::parse("beta(1+,1-,-)"), {a, b});
            EXPECT_TRUE(std::get<TateElement>(v).is_zero());
            auto w = engine.local_op(LocalKind::parse("beta(1+,1-,1+,-)"), {a, b, a});
            EXPECT_TRUE(std::get<TateElement>(w).is_zero());
        }
}

TEST(LocalOps, SlotChecks) {
    auto G = FiniteGroup::preset("S3");
    ConjugacyData cd(G);
    TransferEngine engine(cd);
    auto a = decomposed(1, Q, Word{0, 1});
    EXPECT_THROW(engine.local_op(LocalKind::parse("alpha(1-,1+,+)"), {a, a}), DegreeError);
    EXPECT_THROW(engine.local_op(LocalKind::parse("alpha(0+,1+,+)"), {a, a}), DegreeError);
    EXPECT_THROW(engine.local_op(LocalKind::parse("alpha(1+,1+,-)"), {a, a}), DegreeError);
    EXPECT_THROW(engine.local_op(LocalKind::parse("alpha(1+,1+,1+,+)"), {a, a}), std::invalid_argument);
}

TEST(Transfer, TreesAgreeWithLocalChains) {
    auto G = FiniteGroup::preset("S3");
    CheckOptions opt;
    opt.lo = -1;
    opt.hi = 1;
    opt.samples = 60;
    Report r = check_composites(G, opt);
    for (const auto& i : r.identities) EXPECT_TRUE(i.pass()) << i.name << ": " << i.witness;
}

TEST(TransferControls, OtherSignPoliciesBreakStasheff) {
    auto G = FiniteGroup::preset("S3");
    CheckOptions opt;
    opt.lo = -1;
    opt.hi = 1;
    opt.samples = 40;
    for (const auto& [name, policy] : {std::pair{"shifted", shifted_sign_policy()}, std::pair{"map", map_sign_policy()}}) {
        Report r = check_stasheff_transferred(G, opt, 3, 3, policy, name);
        EXPECT_FALSE(r.pass()) << name;
    }
    Report ok = check_stasheff_transferred(G, opt, 3, 3);
    for (const auto& i : ok.identities) EXPECT_TRUE(i.pass()) << i.name << ": " << i.witness;
}
