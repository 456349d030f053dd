#include <gtest/gtest.h>

#include <random>

#include "hkannuli/classify.hpp"
#include "oracles.hpp"

using namespace hka;

TEST(FiveTwo, Outcomes) {
    TypeKParams k = five_two_params();
    EXPECT_EQ(classify_typeK_annulus(k, 5).verdict, Verdict::Type41Certified);

    auto o0 = classify_typeK_annulus(k, 0);
    EXPECT_EQ(o0.verdict, Verdict::Inconclusive);
    EXPECT_EQ(*o0.witness, Word::u());

    auto o1 = classify_typeK_annulus(k, 1);
    EXPECT_EQ(o1.verdict, Verdict::Inconclusive);
    EXPECT_EQ(*o1.witness, parse_word("v u^2"));

    auto om1 = classify_typeK_annulus(k, -1);
    EXPECT_EQ(om1.verdict, Verdict::Inconclusive);
    EXPECT_EQ(*om1.witness, Word::v(-1));

    auto om2 = classify_typeK_annulus(k, -2);
    EXPECT_EQ(om2.verdict, Verdict::Inconclusive);
    EXPECT_EQ(*om2.witness, parse_word("v^-2 u^-1"));
}

TEST(FiveTwo, InconclusiveSetExact) {
    TypeKParams k = five_two_params();
    std::set<std::int64_t> inc;
    for (std::int64_t n = -100; n <= 100; ++n)
        if (classify_typeK_annulus(k, n).verdict == Verdict::Inconclusive) inc.insert(n);
    EXPECT_EQ(inc, (std::set<std::int64_t>{-2, -1, 0, 1}));
    EXPECT_EQ(nonType41_window(k), inc);
    for (auto [n, t] : five_two_known_types()) EXPECT_TRUE(inc.count(n));
}

TEST(FiveTwo, CensusAttainsBound) {
    auto r = typeK_census(five_two_params(), 100);
    EXPECT_EQ(r.inconclusive, 4);
    EXPECT_EQ(r.total_non_certified, 5);
    EXPECT_EQ(r.certified, 201 - 4);
    EXPECT_TRUE(r.window_covers_inconclusive);
}

TEST(Classify, OutcomeInvariants) {
    std::mt19937_64 rng(61);
    for (int i = 0; i < 100; ++i) {
        TypeKParams k = oracle::random_params(rng, 20, 10, 10, 5, 10);
        for (std::int64_t n = -20; n <= 20; ++n) {
            auto o = classify_typeK_annulus(k, n);
            Word w = boundary_word(k, n);
            if (o.verdict == Verdict::Type41Certified) {
                EXPECT_TRUE(o.criterion == "cho-koda" || o.criterion == "whitehead-oracle");
                EXPECT_FALSE(is_power_of_primitive(w));
            } else if (o.criterion == "trivial-word") {
                EXPECT_TRUE(w.is_identity());
            } else {
                ASSERT_TRUE(o.witness);
                EXPECT_TRUE(is_primitive(*o.witness));
                EXPECT_EQ(o.witness->pow(o.power), w);
            }
        }
    }
}

TEST(Window, SoundAndBounded) {
    std::mt19937_64 rng(67);
    for (int i = 0; i < 200; ++i) {
        TypeKParams k = oracle::random_params(rng, 20, 10, 10, 5, 10);
        auto win = nonType41_window(k);
        EXPECT_LE(win.size(), 4u);
        for (std::int64_t n = -60; n <= 60; ++n)
            if (!win.count(n)) EXPECT_EQ(classify_typeK_annulus(k, n).verdict, Verdict::Type41Certified) << n;
    }
}

TEST(Window, PositiveBetaWithLargeQ) {
    std::mt19937_64 rng(71);
    int seen = 0;
    while (seen < 100) {
        TypeKParams k = oracle::random_params(rng, 20, 10, 10, 1, 5, 10);
        if (k.q < 2) continue;
        ++seen;
        EXPECT_LE(nonType41_window(k).size(), 2u);
    }
}

TEST(Window, NegativeBetaRouted) {
    std::mt19937_64 rng(73);
    for (int i = 0; i < 100; ++i) {
        TypeKParams k = oracle::random_params(rng, 20, 10, 10, -5, -1, 10);
        auto win = nonType41_window(k);
        EXPECT_LE(win.size(), 4u);
        for (std::int64_t n = -40; n <= 40; ++n)
            if (!win.count(n)) EXPECT_EQ(classify_typeK_annulus(k, n).verdict, Verdict::Type41Certified);
    }
}

TEST(TypeM, Endpoints) {
    for (int p = -50; p <= 50; ++p)
        EXPECT_EQ(classify_typeM(p), (p == 0 || p == -1) ? AnnulusType::T3_2ii : AnnulusType::T3_2i);
    EXPECT_EQ(classify_typeM(BigInt("-100000000000000000000000")), AnnulusType::T3_2i);
}

TEST(TypeS, Examples) {
    auto a = classify_typeS(3, 2, std::nullopt);
    EXPECT_EQ(a.first, AnnulusType::T3_2ii);
    EXPECT_EQ(a.second, AnnulusType::T3_2i);
    auto b = classify_typeS(2, 1, true);
    EXPECT_EQ(b.first, AnnulusType::T3_2ii);
    EXPECT_EQ(b.second, AnnulusType::T3_2ii);
    auto c = classify_typeS(2, 1, false);
    EXPECT_EQ(c.first, AnnulusType::T3_2i);
    EXPECT_EQ(c.second, AnnulusType::T3_2i);
    EXPECT_THROW(classify_typeS(2, 1, std::nullopt), MissingFact);
    EXPECT_THROW(classify_typeS(1, 2, std::nullopt), std::invalid_argument);
}

TEST(Em, Examples) {
    EXPECT_EQ(em_jsj_graph({3, 1, 0, 1}, EmSide::Plus).shape, JsjShape::GraphM);
    auto inv = em_invariants({3, 1, 0, 1});
    EXPECT_EQ(inv.o_alpha, 3);
    EXPECT_EQ(inv.o_beta, 1);
    EXPECT_EQ(em_jsj_graph({2, 5, 1, 7}, EmSide::Plus).shape, JsjShape::GraphK);
    EXPECT_EQ(em_jsj_graph({-2, 5, 1, 7}, EmSide::Plus).shape, JsjShape::GraphK);
    EXPECT_EQ(em_jsj_graph({3, 1, 0, 1}, EmSide::Minus).shape, JsjShape::GraphK);
    EXPECT_FALSE(em_jsj_graph({3, 1, 0, 1}, EmSide::Plus).warnings.empty());
}

TEST(Em, PolynomialIdentityAndShape) {
    for (int l = -10; l <= 10; ++l)
        for (int m = -10; m <= 10; ++m)
            for (int n = -10; n <= 10; ++n)
                for (int p = -10; p <= 10; ++p) {
                    long stated = 2L * m * p * l - 2L * p - p * l - m * l + 1;
                    long proof = 2L * l * m * p - l * p - l * m - 2L * p + 1;
                    ASSERT_EQ(stated, proof);
                    EmParams e{l, m, n, p};
                    auto inv = em_invariants(e);
                    EXPECT_EQ(inv.o_alpha, std::abs(l));
                    EXPECT_EQ(inv.o_beta, std::abs(proof));
                    bool m_shape = std::abs(l) != 2 && std::abs(stated) != 2;
                    EXPECT_EQ(em_jsj_graph(e, EmSide::Plus).shape == JsjShape::GraphM, m_shape);
                }
}

TEST(AnnulusTypes, Names) {
    EXPECT_EQ(to_string(AnnulusType::T3_2ii), "T3_2ii");
    EXPECT_EQ(display_name(AnnulusType::T3_2ii), "3-2ii");
    EXPECT_EQ(parse_annulus_type("3-2ii"), AnnulusType::T3_2ii);
    EXPECT_EQ(parse_annulus_type("T4_1"), AnnulusType::T4_1);
    EXPECT_FALSE(parse_annulus_type("5-1"));
}

TEST(Census, RejectsInvalid) {
    EXPECT_THROW(typeK_census({1, 1, 0, 0, 0, 0, 0}, 5), InvalidParams);
}
