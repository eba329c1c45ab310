#include <gtest/gtest.h>

#include <algorithm>

#include "support.hpp"
#include "tate/io.hpp"

using namespace tate;
using namespace tate::testing;

namespace {

const Field Q = Field::rationals();
const Field F3 = Field::prime(3);

}  // namespace

TEST(JsonScalars, Encoding) {
    EXPECT_EQ(to_json(Scalar::parse(Q, "-6/4")), Json("-3/2"));
    EXPECT_EQ(to_json(Scalar(Q, 5)), Json("5/1"));
    EXPECT_EQ(to_json(Scalar(F3, -1)), Json(2));
    EXPECT_EQ(scalar_from_json(Q, Json("-3/2")), Scalar::parse(Q, "-3/2"));
    EXPECT_EQ(scalar_from_json(Q, Json(4)), Scalar(Q, 4));
    EXPECT_EQ(scalar_from_json(F3, Json(5)), Scalar(F3, 2));
    EXPECT_THROW(scalar_from_json(Q, Json(1.5)), FormatError);
    EXPECT_THROW(scalar_from_json(Q, Json::array()), FormatError);
}

TEST(JsonGroups, RoundTrip) {
    for (const auto& name : {"Z2", "Z4", "Z2xZ2", "S3", "Q8"}) {
        auto G = FiniteGroup::preset(name);
        auto H = group_from_json(to_json(G));
        EXPECT_EQ(H.order(), G.order());
        EXPECT_EQ(H.table(), G.table());
    }
    EXPECT_EQ(group_from_json(Json("S3")).order(), 6);
    EXPECT_EQ(group_from_json(Json{{"name", "D4"}}).order(), 8);
    EXPECT_THROW(group_from_json(Json::object()), FormatError);
    EXPECT_THROW(group_from_json(Json{{"order", 3}, {"table", {{0, 1}, {1, 0}}}}), FormatError);
    EXPECT_ANY_THROW(group_from_json(Json{{"table", {{0, 1}, {0, 1}}}}));
}

TEST(JsonGroups, Conjugacy) {
    auto G = FiniteGroup::preset("S3");
    ConjugacyData cd(G);
    Json j = conjugacy_json(cd);
    EXPECT_EQ(j["order"], 6);
    EXPECT_EQ(j["abelian"], false);
    ASSERT_EQ(j["classes"].size(), 3u);
    std::vector<int> sizes;
    for (const auto& c : j["classes"]) {
        sizes.push_back(c["size"].get<int>());
        EXPECT_EQ(c["size"].get<int>() * c["centralizer"].size(), 6u);
        EXPECT_EQ(c["coset_reps"].size(), c["elements"].size());
    }
    std::sort(sizes.begin(), sizes.end());
    EXPECT_EQ(sizes, (std::vector<int>{1, 2, 3}));
}

TEST(JsonElements, TateRoundTrip) {
    auto G = FiniteGroup::preset("S3");
    for (int d = -3; d <= 2; ++d) {
        auto basis = tate_elements(G, Q, d);
        TateElement e = TateElement::zero(d, Q);
        for (std::size_t i = 0; i < basis.size(); i += 7)
            e = add_scaled(e, Scalar::parse(Q, std::to_string(i + 1) + "/3"), basis[i]);
        Json j = to_json(e);
        EXPECT_EQ(element_kind(j), "tate");
        EXPECT_EQ(tate_from_json(G, j, F3), e) << d;
        // through text as well
        EXPECT_EQ(tate_from_json(G, Json::parse(j.dump()), F3), e) << d;
    }
}

TEST(JsonElements, CochainValuesAreGrouped) {
    auto G = FiniteGroup::preset("S3");
    TateElement e = tel(1, Q, Word{1, 0}) + tel(1, Q, Word{1, 2}, 3);
    Json j = to_json(e);
    ASSERT_EQ(j["terms"].size(), 1u);
    EXPECT_EQ(j["terms"][0]["key"], Json::array({1}));
    EXPECT_EQ(j["terms"][0]["value"].size(), 2u);
}

TEST(JsonElements, DecomposedAndAbelianRoundTrip) {
    auto G = FiniteGroup::preset("Z4");
    ConjugacyData cd(G);
    for (int d = -3; d <= 2; ++d) {
        auto basis = decomposed_elements(cd, F3, d);
        DecomposedElement e = DecomposedElement::zero(d, F3);
        for (std::size_t i = 0; i < basis.size(); i += 5) e = add_scaled(e, Scalar(F3, static_cast<std::int64_t>(i % 2 + 1)), basis[i]);
        EXPECT_EQ(decomposed_from_json(cd, to_json(e), Q), e);
        AbelianCochain a = AbelianCochain::basis(d, Q, d >= 0 ? Word(std::vector<Elt>(d, 3)) : Word(std::vector<Elt>(-d - 1, 2)));
        EXPECT_EQ(abelian_from_json(G, to_json(a), F3), a);
    }
}

TEST(JsonElements, FieldFallback) {
    auto G = FiniteGroup::preset("Z2");
    Json j{{"degree", -2}, {"terms", {{{"key", {0, 1}}, {"coeff", 4}}}}};
    TateElement e = tate_from_json(G, j, F3);
    EXPECT_EQ(e.field, F3);
    EXPECT_EQ(e.coeff(Word{0, 1}), Scalar(F3, 1));
    j["field"] = "Q";
    EXPECT_EQ(tate_from_json(G, j, F3).field, Q);
}

TEST(JsonElements, KindInference) {
    EXPECT_EQ(element_kind(Json{{"degree", 0}, {"terms", {{{"class", 1}, {"key", Json::array()}, {"coeff", 1}}}}}), "decomposed");
    EXPECT_EQ(element_kind(Json{{"degree", 0}, {"terms", Json::array()}}), "tate");
    EXPECT_THROW(element_kind(Json{{"kind", "other"}}), FormatError);
    EXPECT_THROW(element_kind(Json::array()), FormatError);
}

TEST(JsonValidation, Errors) {
    auto G = FiniteGroup::preset("S3");
    ConjugacyData cd(G);
    auto chain = [](Json key) { return Json{{"kind", "tate"}, {"degree", -2}, {"terms", {{{"key", key}, {"coeff", 1}}}}}; };
    EXPECT_NO_THROW(tate_from_json(G, chain({0, 1}), Q));
    EXPECT_THROW(tate_from_json(G, chain({0, 0}), Q), FormatError);  // identity in barred slot
    EXPECT_THROW(tate_from_json(G, chain({0, 9}), Q), FormatError);  // outside the group
    EXPECT_THROW(tate_from_json(G, chain({0, 1, 2}), Q), FormatError);  // wrong length
    EXPECT_THROW(tate_from_json(G, chain("x"), Q), FormatError);
    EXPECT_THROW(tate_from_json(G, Json{{"degree", "1"}, {"terms", Json::array()}}, Q), FormatError);
    EXPECT_THROW(tate_from_json(G, Json{{"degree", 1}}, Q), FormatError);
    EXPECT_THROW(tate_from_json(G, Json{{"degree", 1}, {"terms", {{{"key", {1}}, {"coeff", 1}}}}}, Q), FormatError);
    EXPECT_THROW(decomposed_from_json(cd, to_json(tel(0, Q, Word{1})), Q), FormatError);

    auto dec = [](int c, Json key) {
        return Json{{"kind", "decomposed"}, {"degree", 1}, {"terms", {{{"class", c}, {"key", key}, {"coeff", 1}}}}};
    };
    EXPECT_THROW(decomposed_from_json(cd, dec(7, {1}), Q), FormatError);
    // rep of the transposition class is centralized only by itself and 1
    int transposition_class = -1;
    for (int c = 0; c < cd.num_classes(); ++c)
        if (cd.class_size(c) == 3) transposition_class = c;
    ASSERT_GE(transposition_class, 0);
    Elt other = 0;
    for (int g = 1; g < 6; ++g)
        if (!cd.centralizes(transposition_class, static_cast<Elt>(g))) other = static_cast<Elt>(g);
    EXPECT_THROW(decomposed_from_json(cd, dec(transposition_class, {other}), Q), FormatError);
    EXPECT_NO_THROW(decomposed_from_json(cd, dec(transposition_class, {cd.rep(transposition_class)}), Q));
}

TEST(JsonReports, ShapeAndTiming) {
    Report r;
    r.check = "demo";
    r.group = "S3";
    r.field = "Q";
    r.lo = -1;
    r.hi = 2;
    r.seed = 9;
    r.seconds = 1.5;
    auto& i = r.add("identity");
    i.checked = 4;
    Json j = to_json(r);
    EXPECT_EQ(j["check"], "demo");
    EXPECT_EQ(j["pass"], true);
    EXPECT_EQ(j["window"], Json::array({-1, 2}));
    EXPECT_FALSE(j.contains("seconds"));
    EXPECT_TRUE(to_json(r, ReportFormat{true}).contains("seconds"));
    Json all = to_json(std::vector<Report>{r});
    EXPECT_EQ(all["pass"], true);
    EXPECT_EQ(to_json(std::vector<Report>{})["pass"], false);
}
