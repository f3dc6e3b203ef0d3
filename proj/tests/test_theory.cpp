#include <gtest/gtest.h>

#include "syzygy/theory.hpp"

using namespace syzygy;

TEST(Ell, Values) {
    EXPECT_EQ(ell_ceil(2, 2), 3);
    EXPECT_EQ(ell_ceil(5, 3), 3);
    EXPECT_EQ(ell_floor(5, 3), 3);
    EXPECT_EQ(ell_ceil(4, 4), 2);
    EXPECT_EQ(ell_floor(4, 4), 1);
    EXPECT_THROW(ell_ceil(2, 1), DimensionTooSmall);
    EXPECT_THROW(ell_floor(2, 0), DimensionTooSmall);
}

TEST(Ell, CeilFloorGap) {
    for (std::int64_t n = 2; n <= 10; ++n) {
        for (std::int64_t q = 1; q <= 40; ++q) {
            const auto gap = ell_ceil(q, n) - ell_floor(q, n);
            EXPECT_TRUE(gap == 0 || gap == 1);
        }
    }
}

TEST(PredictMultiple, Examples) {
    auto a = predict_multiple(2, 3, 3, 0);
    EXPECT_EQ(*a.min_ell, 4);
    EXPECT_EQ(*a.weak_ell, ell_ceil(3, 2));
    EXPECT_EQ(*predict_multiple(2, 2, 2, 2).min_ell, 2);
    EXPECT_EQ(*predict_multiple(3, 3, 4, 2).min_ell, 2);
    EXPECT_THROW(predict_multiple(2, 3, 4, 0), HypothesisViolation);
}

TEST(PredictM2, Examples) {
    EXPECT_TRUE(*predict_m2_surface(9, 4, 3).verdict);
    EXPECT_TRUE(*predict_m2_surface(8, 4, 4).verdict);
    EXPECT_FALSE(*predict_m2_surface(8, 4, 3).verdict);
}

TEST(AdjointNef, Examples) {
    NefData d;
    d.n = 2;
    EXPECT_EQ(*predict_adjoint_nef(d, 4).min_ell, 6);
    d.B2 = 10;
    EXPECT_EQ(*predict_adjoint_nef(d, 4).min_ell, 3);
    d.B2 = 1;
    EXPECT_FALSE(predict_adjoint_nef(d, 4).applicable);
    NefData three;
    three.n = 3;
    EXPECT_EQ(*predict_adjoint_nef(three, 5).min_ell, 4);
    NefData frac;
    frac.d = Rational(3, 2);
    EXPECT_EQ(*predict_adjoint_nef(frac, 1).min_ell, 4);
}

TEST(Surfaces, EnriquesAbelian) {
    EXPECT_EQ(*enriques_bound(4, 6).min_ell, 3);
    EXPECT_EQ(*enriques_bound(4, std::nullopt).min_ell, 6);
    EXPECT_FALSE(enriques_bound(4, 5).applicable);
    EXPECT_FALSE(abelian_bound(3, 4).applicable);
    EXPECT_EQ(*abelian_bound(3, 5).min_ell, 2);
    EXPECT_EQ(*abelian_bound(3, std::nullopt).min_ell, 4);
}

TEST(Rational, Cases) {
    EXPECT_TRUE(*rational_criterion(6, 3, 3).verdict);
    EXPECT_FALSE(*rational_criterion(6, 4, 3).verdict);
    EXPECT_TRUE(*rational_criterion(5, 4, 6).verdict);
    EXPECT_FALSE(*rational_criterion(5, 4, 6, {true, false}).verdict);
    EXPECT_FALSE(*rational_criterion(4, 4, 6, {false, true}).verdict);
    EXPECT_TRUE(*rational_criterion(4, 4, 6).verdict);
    EXPECT_FALSE(rational_criterion(3, 4, 6).applicable);
    EXPECT_FALSE(rational_criterion(2, 2, 6).applicable); // case (3) needs q >= 3
    EXPECT_FALSE(rational_criterion(9, 2, 1, {}, 0).applicable);
}

TEST(Rational, CaseOneIgnoresFlags) {
    for (std::int64_t q = 2; q <= 8; ++q) {
        for (std::int64_t gon = 1; gon <= 8; ++gon) {
            const auto plain = rational_criterion(q + 2, q, gon);
            const auto flagged = rational_criterion(q + 2, q, gon, {true, true});
            EXPECT_EQ(*plain.verdict, q <= gon);
            EXPECT_EQ(*flagged.verdict, *plain.verdict);
        }
    }
}

TEST(Rational, VeryAmpleNote) {
    const auto rep = rational_criterion(8, 3, 3);
    ASSERT_FALSE(rep.notes.empty());
    EXPECT_NE(rep.notes[0].find("1-very ample"), std::string::npos);
}

TEST(Fano, Examples) {
    // needs (B^n) >= (q-n+4)/(lambda-n+2) = 5
    EXPECT_FALSE(*fano_criterion({3, 2, 3, 3}, 4).verdict);
    EXPECT_TRUE(*fano_criterion({3, 2, 5, 3}, 4).verdict);
    EXPECT_FALSE(*fano_criterion({3, 2, 2, 3}, 4).verdict);
    EXPECT_FALSE(*fano_criterion({3, 3, 5, 2}, 4).verdict);
    EXPECT_THROW(fano_criterion({4, 2, 5, 3}, 4), HypothesisViolation);
}

TEST(Ruled, Examples) {
    EXPECT_FALSE(*ruled_mq_bound({2, 0, 0, Rational(0), 3, 3}, 3).verdict);
    EXPECT_TRUE(*ruled_mq_bound({2, 0, 0, Rational(0), 4, 4}, 3).verdict);
    EXPECT_FALSE(*ruled_mq_bound({2, 0, 0, Rational(0), 2, 1}, 2).verdict);
    EXPECT_FALSE(ruled_mq_bound({2, 0, 0, Rational(0), 2, 1}, 5).applicable);
    EXPECT_EQ(RuledData({2, 0, 0, Rational(0), 3, 3}).k_L(), 3);
    // b + a mu + 1 = 1 + 3 * mu + 1 against ell_ceil = 3, on the boundary
    EXPECT_TRUE(*ruled_mq_bound({2, 0, 0, Rational(1, 3), 3, 1}, 2).verdict);
    EXPECT_FALSE(*ruled_mq_bound({2, 0, 0, Rational(33, 100), 3, 1}, 2).verdict);
}

TEST(Butler, Examples) {
    EXPECT_TRUE(*butler_multiple(8, 2, 3).verdict);
    EXPECT_TRUE(*butler_multiple(6, 3, 3).verdict);
    EXPECT_FALSE(*butler_multiple(3, 2, 3).verdict);
    EXPECT_TRUE(*butler_adjoint(8, 2, 3, 0, 0).verdict);
    EXPECT_FALSE(*butler_adjoint(7, 2, 3, 0, 0).verdict);
    EXPECT_FALSE(butler_multiple(8, 2, 3, 1).applicable);
}

TEST(Appendix, Examples) {
    NefData a;
    a.d = 1;
    a.twist = 1;
    EXPECT_EQ(*appendix_normal_generation(a).min_ell, 2);
    NefData b;
    b.d = 1;
    EXPECT_EQ(*appendix_normal_generation(b).min_ell, 3);
    NefData c;
    c.d = 2;
    EXPECT_EQ(*appendix_normal_generation(c).min_ell, 4);
    NefData border;
    border.d = 1;
    border.twist = 0;
    border.h0_lambda = 4;
    EXPECT_EQ(*appendix_normal_generation(border).min_ell, 2);
    border.h0_lambda = 3;
    EXPECT_EQ(*appendix_normal_generation(border).min_ell, 3);
}

TEST(Gon, Values) {
    EXPECT_EQ(gon_max(Variety::projective(2), DivisorClass::degree(4)), 3);
    EXPECT_EQ(gon_max(Variety::hirzebruch(0), DivisorClass::of(2, 5)), 2);
    EXPECT_EQ(gon_max(Variety::hirzebruch(0), DivisorClass::of(3, 3)), 3);
    EXPECT_EQ(gon_max(Variety::hirzebruch(0), DivisorClass::of(5, 2)), 2);
    EXPECT_EQ(gon_max(Variety::hirzebruch(2), DivisorClass::of(3, 7)), 3);
    EXPECT_THROW(gon_max(Variety::projective(3), DivisorClass::degree(2)), DimensionMismatch);
    EXPECT_THROW(gon_max(Variety::projective(2), DivisorClass::degree(-1)), EmptySystem);
}

TEST(ConjectureDelta, Examples) {
    EXPECT_EQ(conjecture_delta(Variety::projective(2), DivisorClass::degree(4)).delta, 1);
    EXPECT_EQ(conjecture_delta(Variety::hirzebruch(0), DivisorClass::of(2, 5)).delta, 3);
    const auto p = conjecture_delta(Variety::hirzebruch(0), DivisorClass::of(3, 4));
    EXPECT_EQ(p.delta, 4);
    EXPECT_EQ(p.p_max, 11);
    EXPECT_EQ(*p.closed_p_max, 11);
}

TEST(ConjectureDelta, ClosedFormIdentity) {
    for (std::int64_t a = 1; a <= 10; ++a) {
        for (std::int64_t b = 1; b <= 10; ++b) {
            const auto p = conjecture_delta(Variety::hirzebruch(0), DivisorClass::of(a, b));
            EXPECT_EQ(p.delta, *p.closed_delta) << a << "," << b;
            EXPECT_EQ(p.p_max, *p.closed_p_max) << a << "," << b;
        }
    }
}

TEST(Monotone, Thresholds) {
    for (std::int64_t q = 1; q < 20; ++q) {
        EXPECT_LE(*predict_multiple(2, q, 3, 1).min_ell, *predict_multiple(2, q + 1, 3, 1).min_ell);
        NefData d;
        EXPECT_LE(*predict_adjoint_nef(d, q).min_ell, *predict_adjoint_nef(d, q + 1).min_ell);
        NefData d3;
        d3.n = 3;
        EXPECT_LE(*predict_adjoint_nef(d3, q).min_ell, *predict_adjoint_nef(d3, q + 1).min_ell);
    }
    for (std::int64_t t = 1; t < 30; ++t) {
        if (*butler_multiple(t, 2, 3).verdict) EXPECT_TRUE(*butler_multiple(t + 1, 2, 3).verdict);
        if (*butler_adjoint(t, 2, 3, 1, 0).verdict) EXPECT_TRUE(*butler_adjoint(t + 1, 2, 3, 1, 0).verdict);
    }
    for (std::int64_t bn = 1; bn < 12; ++bn) {
        if (*fano_criterion({3, 2, bn, 3}, 4).verdict) EXPECT_TRUE(*fano_criterion({3, 2, bn + 1, 3}, 4).verdict);
    }
}

TEST(Regularity, ToricModels) {
    const auto P2 = Variety::projective(2);
    EXPECT_EQ(toric_regularity(P2, DivisorClass{}, DivisorClass::degree(1)), 0);
    EXPECT_EQ(toric_regularity(P2, canonical_class(P2), DivisorClass::degree(1)), 3);
    const auto F0 = Variety::hirzebruch(0);
    EXPECT_EQ(toric_regularity(F0, DivisorClass{}, DivisorClass::of(1, 1)), 1);
    EXPECT_EQ(toric_regularity(F0, canonical_class(F0), DivisorClass::of(1, 1)), 3);
}

TEST(Verify, RefusesUncertified) {
    BettiTable t;
    EXPECT_THROW(verify_instances(t, Variety::projective(2), DivisorClass::degree(2)), UncertifiedTable);
}
