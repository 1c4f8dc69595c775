#include "mdslab/error.hpp"
#include "mdslab/profile.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace mdslab;

namespace {

Slopes S(const char* text) { return Slopes::parse(text); }
Rational R(const char* s) { return Rational::parse(s); }

// Random in-scope slopes with small denominators.
Slopes random_slopes(std::mt19937_64& rng) {
    for (;;) {
        auto frac = [&](long lo, long hi, long maxden) {
            long d = 1 + static_cast<long>(rng() % maxden);
            long n = lo * d + static_cast<long>(rng() % ((hi - lo) * d + 1));
            return Rational(BigInt(n), BigInt(d));
        };
        Rational s2 = frac(-2, 2, 7);
        Rational g1 = frac(1, 5, 6), g2 = frac(1, 5, 6);
        if (g1 <= Rational(1) || g2 <= Rational(1)) continue;
        Slopes s{s2 - g1, s2, s2 + g2};
        if (width(s) >= Rational(1)) continue;
        if (good_multiplier(s) > 400) continue;  // keep the Bezout checks cheap
        return s;
    }
}

} // namespace

TEST(Width, Values) {
    EXPECT_EQ(width(S("-3/4,1,9/2")), R("6/7"));
    // 1/(1/2 + 10/11) + 1/(4 - 1/2) = 22/31 + 2/7
    EXPECT_EQ(width(S("-10/11,1/2,4")), R("216/217"));
    EXPECT_EQ(width(S("-13/11,1/2,3")), R("184/185"));
    EXPECT_EQ(width(S("-7/3,3/7,2")), R("637/638"));
    EXPECT_THROW(require_in_scope(S("1,2,3")), PreconditionError);
    EXPECT_THROW(width(S("1,1,3")), PreconditionError);
    EXPECT_THROW(S("1,2"), ParseError);
    EXPECT_THROW(S("1,x,3"), ParseError);
}

TEST(GoodTriangle, FigureOne) {
    auto t = smallest_good_triangle(S("-3/4,1,9/2"));
    EXPECT_EQ(t.m, 7);
    EXPECT_EQ(t.p, (LatticePoint{-4, 3}));
    EXPECT_EQ(t.q, (LatticePoint{2, 9}));
}

TEST(GoodTriangle, LargeMultiplier) {
    auto t = smallest_good_triangle(S("-7/3,3/7,2"));
    EXPECT_EQ(t.m, 638);
    EXPECT_EQ(t.p, (LatticePoint{-231, 539}));
    EXPECT_EQ(t.q, (LatticePoint{406, 812}));
}

TEST(GoodTriangle, WidthOneIsRejectedButMultiplierExists) {
    // x1 = -1/2, y1 = 1, x2 = 1/2, y2 = 1
    EXPECT_EQ(good_multiplier(S("-2,0,2")), 2);
    EXPECT_THROW(smallest_good_triangle(S("-2,0,2")), PreconditionError);
}

TEST(Columns, FigureOneCounts) {
    Slopes s = S("-3/4,1,9/2");
    EXPECT_EQ(left_count(s, 1), 2);
    EXPECT_EQ(right_count(s, 1), 4);
    EXPECT_EQ(left_count(s, 2), 4);
    EXPECT_EQ(right_count(s, 2), 8);
    auto cols = triangle_columns(s, 1);
    ASSERT_EQ(cols.size(), 7u);
    std::vector<long> interior;
    for (size_t i = 1; i + 1 < cols.size(); ++i) interior.push_back(cols[i].count());
    EXPECT_EQ(interior, (std::vector<long>{2, 4, 6, 8, 4}));
    EXPECT_EQ(cols.front().count(), 1);
    EXPECT_EQ(cols.back().count(), 1);
    // Pick: area 21, 8 boundary points, 18 interior
    EXPECT_EQ(triangle_points(s, 1).size(), 26u);
}

TEST(Columns, FigureOneCumulativeTable) {
    Slopes s = S("-3/4,1,9/2");
    std::vector<long> want{0, 0, 1, 1, 3, 3, 4, 4, 5};
    for (long n = 0; n <= 8; ++n) EXPECT_EQ(column_count_at_most(s, n), want[n]) << n;
}

TEST(Pi, FigureOne) {
    Slopes s = S("-3/4,1,9/2");
    std::vector<long> want{0, 0, 1, 1, 3, 3, 4, 4};
    for (long n = 0; n <= 7; ++n) EXPECT_EQ(pi(s, n), want[n]) << n;
    // l_4 = r_2 = 8 are both the column x = 0, which the sequences count twice
    EXPECT_EQ(pi(s, 8), 6);
}

TEST(Degrees, Values) {
    EXPECT_EQ(reduced_degree(S("-3/4,1,9/2")), 0);
    EXPECT_EQ(minimal_degree(S("-3/4,1,9/2")), 0);
    EXPECT_EQ(reduced_degree(S("-13/11,1/2,3")), 8);
    // pi(n) = n exactly at n = 0, 5, 30, 63 here, so d' = 5 but d = 63
    EXPECT_EQ(reduced_degree(S("-7/3,3/7,2")), 63);
    EXPECT_EQ(pi(S("-7/3,3/7,2"), 30), 30);
    EXPECT_EQ(minimal_degree(S("-7/3,3/7,2")), 5);
    EXPECT_EQ(minimal_degree(S("-10/11,1/2,4")), 1);
}

TEST(Gamma, Values) {
    EXPECT_EQ(gamma_of(S("-5/4,1/2,3")), 4);
    EXPECT_EQ(gamma_of(S("-3,1/3,2")), 9);
    EXPECT_EQ(gamma_of(S("-3,3/4,2")), 16);
}

TEST(Shape, Partitions) {
    auto sh = shape_partition(S("-7/3,3/7,2"));
    ASSERT_TRUE(sh.has_value());
    EXPECT_EQ(sh->S, (std::vector<long>{3}));
    EXPECT_EQ(sh->T, (std::vector<long>{2, 4}));
    // first left column 3 points, right columns 2 and 3
    Slopes gk = S("-29/10,3/5,12/5");
    EXPECT_EQ(minimal_degree(gk), 3);
    auto g = shape_partition(gk);
    ASSERT_TRUE(g.has_value());
    EXPECT_TRUE(g->S.empty());
    EXPECT_EQ(g->T, (std::vector<long>{2}));
    EXPECT_FALSE(shape_partition(S("-10/11,1/2,4")).has_value());
    EXPECT_FALSE(shape_partition(S("-3/4,1,9/2")).has_value());
}

TEST(Transforms, ShearAndReflect) {
    Slopes s = S("-7/3,3/7,2");
    EXPECT_EQ(shear(s, 2), S("-1/3,17/7,4"));
    EXPECT_EQ(reflect(s), S("-2,-3/7,7/3"));
    auto p = column_profile(s), q = column_profile(reflect(s));
    EXPECT_EQ(p.d, q.d);
    EXPECT_EQ(p.shape->S, q.shape->T);
    EXPECT_EQ(p.shape->T, q.shape->S);
}

TEST(Peeling, FigureOne) {
    auto tr = bezout_peel(S("-3/4,1,9/2"), 1);
    EXPECT_EQ(tr.start_degree, 5);
    EXPECT_EQ(tr.removed.size(), 5u);
    EXPECT_EQ(tr.final_degree, 0);
    EXPECT_EQ(tr.removed.front().count, 8);
}

// ---------------------------------------------------------------------------
// Seeded property suites, >= 100 triples each.

TEST(ProfileProperties, PiBoundsAndPeriodicity) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 120; ++trial) {
        Slopes s = random_slopes(rng);
        Rational w = width(s);
        auto t = smallest_good_triangle(s);
        long mw = to_long((Rational(t.m) * w).num());
        for (long n = 0; n <= std::min(2 * mw, 40L); ++n) {
            long p = pi(s, n);
            EXPECT_LE(p, n) << s.str();
            EXPECT_LT(Rational(p), w * Rational(n + 1)) << s.str();
            // the shift identity needs n >= 1: at n = 0 the two copies of column x = 0 are missing
            if (n >= 1) EXPECT_EQ(pi(s, n + to_long(t.m)), p + mw) << s.str() << " n=" << n;
        }
    }
}

TEST(ProfileProperties, DegreeBounds) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 150; ++trial) {
        Slopes s = random_slopes(rng);
        auto p = column_profile(s);
        Rational w = p.w;
        EXPECT_LT(Rational(p.d), w / (Rational(1) - w)) << s.str();
        if (w <= R("1/2")) EXPECT_EQ(p.d, 0) << s.str();
        if (s.s2.is_integer()) EXPECT_EQ(p.d, 0) << s.str();
        EXPECT_EQ(p.d == 0, p.d_min == 0) << s.str();
        EXPECT_LE(p.d_min, p.d);
        bool one = (left_count(s, 1) == 1) != (right_count(s, 1) == 1);
        EXPECT_EQ(p.d_min == 1, one) << s.str();
        if (p.d_min >= 2) EXPECT_TRUE(p.shape.has_value());
    }
}

TEST(ProfileProperties, IntegerMiddleSlopeGivesZero) {
    std::mt19937_64 rng(13);
    int n = 0;
    while (n < 100) {
        Slopes s = random_slopes(rng);
        s = shear(s, 0);
        Rational shift = Rational(s.s2.ceil()) - s.s2;
        Slopes t{s.s1 + shift, s.s2 + shift, s.s3 + shift};
        ASSERT_TRUE(t.s2.is_integer());
        EXPECT_EQ(reduced_degree(t), 0) << t.str();
        ++n;
    }
}

TEST(ProfileProperties, ColumnGrowth) {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 120; ++trial) {
        Slopes s = random_slopes(rng);
        long l1 = left_count(s, 1), r1 = right_count(s, 1);
        for (long k = 2; k <= 12; ++k) {
            long lk = left_count(s, k), lp = left_count(s, k - 1);
            long rk = right_count(s, k), rp = right_count(s, k - 1);
            EXPECT_GE(lk, lp);
            EXPECT_GE(rk, rp);
            if (l1 != 1) EXPECT_GT(lk, lp);
            if (r1 != 1) EXPECT_GT(rk, rp);
            EXPECT_GE(lk - lp, l1 - 1);
            EXPECT_GE(lk, k * l1 - (k - 1));
            EXPECT_GE(rk, k * r1 - (k - 1));
        }
        for (long n = 1; n <= 4; ++n)
            for (long k = 1; k <= 4; ++k) EXPECT_GE(left_count(s, n * k), k * left_count(s, n) - (k - 1));
    }
}

TEST(ProfileProperties, PeelingMatchesReducedDegree) {
    std::mt19937_64 rng(15);
    for (int trial = 0; trial < 100; ++trial) {
        Slopes s = random_slopes(rng);
        long d = reduced_degree(s);
        for (long k = 1; k <= 5; ++k) EXPECT_EQ(bezout_peel(s, k).final_degree, d) << s.str() << " k=" << k;
    }
}

TEST(ProfileProperties, ShearAndReflectInvariance) {
    std::mt19937_64 rng(16);
    for (int trial = 0; trial < 120; ++trial) {
        Slopes s = random_slopes(rng);
        auto p = column_profile(s);
        long t = static_cast<long>(rng() % 9) - 4;
        auto q = column_profile(shear(s, t));
        auto r = column_profile(reflect(s));
        EXPECT_EQ(p.d, q.d);
        EXPECT_EQ(p.d_min, q.d_min);
        EXPECT_EQ(p.d, r.d);
        EXPECT_EQ(p.d_min, r.d_min);
        EXPECT_EQ(p.tri.m, q.tri.m);
    }
}
