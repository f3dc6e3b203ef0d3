#include <gtest/gtest.h>

#include "oracle.hpp"
#include "syzygy/variety.hpp"

using namespace syzygy;

TEST(Variety, ConstructionAndTags) {
    EXPECT_EQ(Variety::projective(2).tag(), "P:2");
    EXPECT_EQ(Variety::hirzebruch(1).tag(), "F:1");
    EXPECT_EQ(Variety::hirzebruch(3).dimension(), 2);
    EXPECT_EQ(Variety::projective(4).lattice_rank(), 5);
    EXPECT_THROW(Variety::projective(0), DimensionMismatch);
    EXPECT_THROW(Variety::hirzebruch(-1), DimensionMismatch);
}

TEST(Variety, H0MatchesBasisSize) {
    for (int n = 1; n <= 4; ++n) {
        const auto X = Variety::projective(n);
        for (int d = 0; d <= 5; ++d) {
            EXPECT_EQ(h0(X, DivisorClass::degree(d)), section_basis(X, DivisorClass::degree(d)).size());
            EXPECT_EQ(section_basis(X, DivisorClass::degree(d)).size(), oracle::projective_points(n, d).size());
        }
    }
    for (int e = 0; e <= 3; ++e) {
        const auto X = Variety::hirzebruch(e);
        for (int a = 0; a <= 4; ++a) {
            for (int b = a * e; b <= a * e + 4; ++b) {
                const auto D = DivisorClass::of(a, b);
                EXPECT_EQ(h0(X, D), section_basis(X, D).size());
                EXPECT_EQ(h0(X, D), oracle::hirzebruch_points(e, a, b).size());
            }
        }
    }
}

TEST(Variety, KnownSectionCounts) {
    EXPECT_EQ(h0(Variety::projective(2), DivisorClass::degree(2)), 6u);
    EXPECT_EQ(h0(Variety::projective(2), DivisorClass::degree(4)), 15u);
    EXPECT_EQ(h0(Variety::hirzebruch(0), DivisorClass::of(2, 3)), 12u);
    EXPECT_EQ(h0(Variety::hirzebruch(1), DivisorClass::of(1, 2)), 5u);
    EXPECT_EQ(h0(Variety::projective(2), DivisorClass::degree(-1)), 0u);
}

TEST(Variety, BasisOrderIsFrozen) {
    const auto b = section_basis(Variety::projective(2), DivisorClass::degree(2));
    ASSERT_EQ(b.size(), 6u);
    EXPECT_EQ(b.points.front(), (LatticePoint{2, 0, 0}));
    EXPECT_EQ(b.points[1], (LatticePoint{1, 1, 0}));
    EXPECT_EQ(b.points.back(), (LatticePoint{0, 0, 2}));
    const auto f = section_basis(Variety::hirzebruch(1), DivisorClass::of(1, 2));
    EXPECT_EQ(f.points.front(), (LatticePoint{0, 0}));
    EXPECT_EQ(f.points.back(), (LatticePoint{1, 1}));
}

TEST(Variety, PositivityTests) {
    const auto F1 = Variety::hirzebruch(1);
    EXPECT_TRUE(is_base_point_free(F1, DivisorClass::of(1, 1)));
    EXPECT_FALSE(is_ample(F1, DivisorClass::of(1, 1)));
    EXPECT_TRUE(is_ample(F1, DivisorClass::of(1, 2)));
    EXPECT_FALSE(is_base_point_free(F1, DivisorClass::of(2, 1)));
    EXPECT_THROW(section_basis(F1, DivisorClass::of(2, 1)), NotBasePointFree);
    EXPECT_FALSE(is_ample(Variety::projective(2), DivisorClass::degree(0)));
}

TEST(Variety, MultiplyAndMembership) {
    const auto X = Variety::projective(2);
    const auto p = multiply(X, {1, 0, 0}, {0, 1, 1});
    EXPECT_EQ(p, (LatticePoint{1, 1, 1}));
    EXPECT_TRUE(in_basis(X, DivisorClass::degree(3), p));
    EXPECT_FALSE(in_basis(X, DivisorClass::degree(2), p));
    EXPECT_THROW(multiply(X, {1, 0}, {0, 1}), DimensionMismatch);
    const auto F2 = Variety::hirzebruch(2);
    EXPECT_TRUE(in_basis(F2, DivisorClass::of(1, 3), {1, 1}));
    EXPECT_FALSE(in_basis(F2, DivisorClass::of(1, 3), {1, 2}));
}

TEST(Variety, IntersectionAndGenus) {
    const auto F0 = Variety::hirzebruch(0);
    const auto K = canonical_class(F0);
    EXPECT_EQ(K, DivisorClass::of(-2, -2));
    EXPECT_EQ(-intersect(F0, K, DivisorClass::of(2, 3)), 10);
    EXPECT_EQ(-intersect(F0, K, DivisorClass::of(2, 2)), 8);
    EXPECT_EQ(genus_in_system(F0, DivisorClass::of(2, 3)), 2);
    EXPECT_EQ(genus_in_system(F0, DivisorClass::of(2, 2)), 1);
    const auto P2 = Variety::projective(2);
    EXPECT_EQ(-intersect(P2, canonical_class(P2), DivisorClass::degree(4)), 12);
    EXPECT_EQ(genus_in_system(P2, DivisorClass::degree(4)), 3);
    EXPECT_EQ(genus_in_system(P2, DivisorClass::degree(2)), 0);
    const auto F1 = Variety::hirzebruch(1);
    EXPECT_EQ(intersect(F1, DivisorClass::of(1, 0), DivisorClass::of(1, 0)), -1);
    EXPECT_THROW(intersect(Variety::projective(3), DivisorClass::degree(1), DivisorClass::degree(1)),
                 DimensionMismatch);
    EXPECT_THROW(genus_in_system(F0, DivisorClass::of(-1, 0)), EmptySystem);
}

TEST(Variety, HilbertNumeratorOfConic) {
    // 1 - 6t^2 + 8t^3 - 3t^4
    EXPECT_EQ(hilbert_numerator(Variety::projective(2), DivisorClass::degree(2)),
              (std::vector<std::int64_t>{1, 0, -6, 8, -3}));
}

TEST(Variety, HilbertNumeratorAgainstOracle) {
    struct Case {
        Variety X;
        DivisorClass D;
    };
    const std::vector<Case> cases{{Variety::projective(2), DivisorClass::degree(3)},
                                  {Variety::projective(2), DivisorClass::degree(4)},
                                  {Variety::projective(3), DivisorClass::degree(2)},
                                  {Variety::hirzebruch(0), DivisorClass::of(2, 3)},
                                  {Variety::hirzebruch(1), DivisorClass::of(2, 5)}};
    for (const auto& c : cases) {
        const auto N = hilbert_numerator(c.X, c.D);
        const int r = static_cast<int>(h0(c.X, c.D)) - 1;
        std::vector<mpz_class> h;
        for (int k = 0; k < 60; ++k) {
            std::size_t count = c.X.is_projective_space()
                                    ? oracle::projective_points(c.X.parameter(), static_cast<int>(c.D.a * k)).size()
                                    : oracle::hirzebruch_points(c.X.parameter(), static_cast<int>(c.D.a * k),
                                                                static_cast<int>(c.D.b * k))
                                          .size();
            h.emplace_back(static_cast<unsigned long>(count));
        }
        const auto want = oracle::numerator_from_hilbert(h, r);
        for (std::size_t k = 0; k < want.size(); ++k) {
            const mpz_class got = k < N.size() ? mpz_class(static_cast<long>(N[k])) : mpz_class(0);
            EXPECT_EQ(got, want[k]) << c.X.tag() << " " << bundle_tag(c.X, c.D) << " k=" << k;
        }
    }
}

TEST(Variety, HilbertNumeratorF0TwoThree) {
    // H(t) = sum (2k+1)(3k+1) t^k
    std::vector<mpz_class> h;
    for (long k = 0; k < 20; ++k) h.emplace_back((2 * k + 1) * (3 * k + 1));
    const auto want = oracle::numerator_from_hilbert(h, 11);
    const auto N = hilbert_numerator(Variety::hirzebruch(0), DivisorClass::of(2, 3));
    ASSERT_LE(N.size(), want.size());
    for (std::size_t k = 0; k < want.size(); ++k) {
        EXPECT_EQ(mpz_class(static_cast<long>(k < N.size() ? N[k] : 0)), want[k]);
    }
}

TEST(Variety, HilbertNumeratorErrors) {
    EXPECT_THROW(hilbert_numerator(Variety::hirzebruch(1), DivisorClass::of(2, 1)), NotBasePointFree);
    EXPECT_THROW(hilbert_numerator(Variety::hirzebruch(1), DivisorClass::of(1, 1)), NotAmple);
    EXPECT_THROW(hilbert_numerator(Variety::projective(2), DivisorClass::degree(4), 3), NonPolynomialHilbert);
}
