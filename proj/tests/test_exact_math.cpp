#include "mdslab/bivariate.hpp"
#include "mdslab/combinatorics.hpp"
#include "mdslab/error.hpp"
#include "mdslab/linalg.hpp"
#include "mdslab/rational.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace mdslab;

namespace {

Rational R(const char* s) { return Rational::parse(s); }

Rational random_rational(std::mt19937_64& rng, long span = 40, long den = 9) {
    std::uniform_int_distribution<long> n(-span, span), d(1, den);
    return Rational(BigInt(n(rng)), BigInt(d(rng)));
}

// Cofactor expansion, only for tiny matrices.
Rational det_cofactor(const RatMatrix& m) {
    const size_t n = m.size();
    if (n == 1) return m[0][0];
    Rational acc = 0;
    for (size_t c = 0; c < n; ++c) {
        RatMatrix minor;
        for (size_t i = 1; i < n; ++i) {
            std::vector<Rational> row;
            for (size_t j = 0; j < n; ++j)
                if (j != c) row.push_back(m[i][j]);
            minor.push_back(row);
        }
        Rational t = m[0][c] * det_cofactor(minor);
        acc += (c % 2 == 0) ? t : -t;
    }
    return acc;
}

} // namespace

TEST(Rational, NormalizesAndFormats) {
    EXPECT_EQ(R("6/8").str(), "3/4");
    EXPECT_EQ(R("-10/5").str(), "-2");
    EXPECT_EQ(R("0/7").str(), "0");
    EXPECT_EQ(R(" 4 ").str(), "4");
    EXPECT_THROW(R("1.5"), ParseError);
    EXPECT_THROW(R("3/0"), ParseError);
    EXPECT_THROW(R("3/-4"), ParseError);
    EXPECT_THROW(R(""), ParseError);
}

TEST(Rational, FloorCeilFrac) {
    EXPECT_EQ(R("-7/3").floor(), -3);
    EXPECT_EQ(R("-7/3").ceil(), -2);
    EXPECT_EQ(R("-7/3").frac(), R("2/3"));
    EXPECT_EQ(R("5").frac(), R("0"));
    EXPECT_EQ(R("9/2").floor(), 4);
}

TEST(FallingFactorial, SpecValues) {
    EXPECT_EQ(falling_factorial(R("5"), 2), R("20"));
    EXPECT_EQ(falling_factorial(R("7/2"), 0), R("1"));
    EXPECT_EQ(falling_factorial(R("3/2"), -2), R("4/35"));
    EXPECT_THROW(falling_factorial(R("-1"), -1), PoleError);
    EXPECT_THROW(falling_factorial(R("-3"), -4), PoleError);
    EXPECT_EQ(falling_factorial(R("3"), 5), R("0"));
}

TEST(FallingFactorial, RecurrenceProperty) {
    std::mt19937_64 rng(20240611);
    int checked = 0;
    for (int trial = 0; trial < 300; ++trial) {
        Rational x = random_rational(rng);
        long n = static_cast<long>(rng() % 13) - 6;
        try {
            Rational lhs = falling_factorial(x, n);
            Rational rhs = (x - Rational(n) + 1) * falling_factorial(x, n - 1);
            EXPECT_EQ(lhs, rhs) << x << " " << n;
            ++checked;
        } catch (const PoleError&) {
        }
    }
    EXPECT_GE(checked, 100);
}

TEST(FallingFactorial, ForwardDifferenceProperty) {
    std::mt19937_64 rng(77);
    int checked = 0;
    for (int trial = 0; trial < 300; ++trial) {
        Rational x = random_rational(rng);
        long n = static_cast<long>(rng() % 13) - 6;
        if (n == 0) continue;
        try {
            Rational lhs = falling_factorial(x + 1, n) - falling_factorial(x, n);
            Rational rhs = Rational(n) * falling_factorial(x, n - 1);
            EXPECT_EQ(lhs, rhs) << x << " " << n;
            ++checked;
        } catch (const PoleError&) {
        }
    }
    EXPECT_GE(checked, 100);
}

TEST(FallingFactorial, AlternatingSumKillsLowDegree) {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 120; ++trial) {
        long n = 1 + static_cast<long>(rng() % 8);
        long deg = static_cast<long>(rng() % n);  // deg < n
        std::vector<Rational> coeffs;
        for (long k = 0; k <= deg; ++k) coeffs.push_back(random_rational(rng));
        Rational acc = 0;
        for (long i = 0; i <= n; ++i) {
            Rational p = 0;
            for (long k = deg; k >= 0; --k) p = p * Rational(i) + coeffs[k];
            Rational term = Rational(binomial(n, i)) * p;
            acc += (i % 2 == 0) ? term : -term;
        }
        EXPECT_TRUE(acc.is_zero()) << "n=" << n << " deg=" << deg;
    }
}

TEST(FallingFactorial, ReciprocalSum) {
    std::mt19937_64 rng(4242);
    int checked = 0;
    for (int trial = 0; trial < 200; ++trial) {
        Rational x = random_rational(rng, 30, 7);
        long n = 1 + static_cast<long>(rng() % 7);
        try {
            Rational acc = 0;
            for (long i = 0; i <= n; ++i) {
                Rational term = Rational(binomial(n, i)) / (x + Rational(i));
                acc += (i % 2 == 0) ? term : -term;
            }
            EXPECT_EQ(acc, Rational(factorial(n)) * falling_factorial(x - 1, -n - 1));
            ++checked;
        } catch (const PoleError&) {
        }
    }
    EXPECT_GE(checked, 100);
}

TEST(FallingFactorial, MomentSumsClosedForms) {
    std::mt19937_64 rng(99);
    int checked = 0;
    for (int trial = 0; trial < 200; ++trial) {
        Rational x = random_rational(rng, 50, 11);
        long n = 1 + static_cast<long>(rng() % 6);
        long m = 1 + static_cast<long>(rng() % 6);
        try {
            Rational g[3] = {0, 0, 0};
            for (long i = 0; i <= n; ++i) {
                Rational base = Rational(binomial(n, i)) * falling_factorial(x - Rational(i), -m);
                if (i % 2) base = -base;
                Rational ip(i);
                g[0] += base;
                g[1] += base * ip;
                g[2] += base * ip * ip;
            }
            Rational sign = (n % 2 == 0) ? Rational(1) : Rational(-1);
            Rational head = sign * falling_factorial(x - Rational(n), -n - m);
            Rational nn(n), mm(m);
            EXPECT_EQ(g[0], head * falling_factorial(Rational(n + m - 1), n));
            EXPECT_EQ(g[1], head * falling_factorial(Rational(n + m - 2), n - 1) * nn * (x + mm));
            if (!(n == 1 && m == 1))  // closed form has a pole there
                EXPECT_EQ(g[2], head * falling_factorial(Rational(n + m - 3), n - 2) * nn * (x + mm) *
                                    ((nn - 1) * x + mm * nn - 1));
            ++checked;
        } catch (const PoleError&) {
        }
    }
    EXPECT_GE(checked, 100);
}

TEST(FallingFactorial, ShiftedVandermondeInverse) {
    std::mt19937_64 rng(555);
    int checked = 0;
    for (int trial = 0; trial < 150; ++trial) {
        Rational x = random_rational(rng, 40, 5);
        long n = 1 + static_cast<long>(rng() % 5);
        long m = 1 + static_cast<long>(rng() % 5);
        try {
            RatMatrix u(n + 1, std::vector<Rational>(n + 1));
            std::vector<Rational> sigma(n + 1);
            for (long i = 0; i <= n; ++i)
                for (long j = 0; j <= n; ++j) u[i][j] = falling_factorial(x - Rational(m + j), i);
            for (long j = 0; j <= n; ++j) {
                Rational v = Rational(binomial(n, j)) * falling_factorial(Rational(n + m), n + 1) /
                             (Rational(factorial(n)) * Rational(m + j));
                sigma[j] = (j % 2 == 0) ? v : -v;
            }
            auto got = mat_vec(u, sigma);
            for (long i = 0; i <= n; ++i) EXPECT_EQ(got[i], falling_factorial(x, i));
            ++checked;
        } catch (const PoleError&) {
        }
    }
    EXPECT_GE(checked, 100);
}

TEST(FallingFactorial, StirlingVandermondeNonsingular) {
    std::mt19937_64 rng(8080);
    for (int trial = 0; trial < 120; ++trial) {
        size_t n = 1 + rng() % 6;
        std::vector<Rational> a;
        while (a.size() < n) {
            Rational c = random_rational(rng, 20, 4);
            if (std::find(a.begin(), a.end(), c) == a.end()) a.push_back(c);
        }
        RatMatrix u(n, std::vector<Rational>(n));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) u[i][j] = falling_factorial(a[i], static_cast<long>(j));
        // falling factorials are a unitriangular change of basis from monomials,
        // so the determinant is the ordinary Vandermonde product
        Rational vdm = 1;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j) vdm *= a[j] - a[i];
        EXPECT_EQ(det_rational(u), vdm);
        EXPECT_FALSE(vdm.is_zero());
    }
}

TEST(Stirling, ValuesAndExpansion) {
    EXPECT_EQ(stirling2(4, 2), 7);
    EXPECT_EQ(stirling2(5, 3), 25);
    EXPECT_EQ(stirling2(0, 0), 1);
    EXPECT_EQ(stirling2(3, 0), 0);
    auto t = stirling2_table(8);
    for (long x = -5; x <= 9; ++x)
        for (long n = 0; n <= 8; ++n) {
            Rational acc = 0;
            for (long k = 0; k <= n; ++k) acc += Rational(t[n][k]) * falling_factorial(Rational(x), k);
            BigInt p;
            mpz_pow_ui(p.get_mpz_t(), BigInt(x).get_mpz_t(), n);
            EXPECT_EQ(acc, Rational(p));
        }
}

TEST(Crt, SpecValues) {
    EXPECT_EQ(*crt_solve({{1, 2}, {2, 3}}), 5);
    EXPECT_FALSE(crt_solve({{0, 4}, {2, 4}}).has_value());
    EXPECT_EQ(*crt_solve({{2, 3}, {2, 3}}), 2);
    EXPECT_EQ(*crt_solve({{3, 4}, {1, 6}}), 7);
    EXPECT_EQ(*crt_solve({{-1, 5}}), 4);
}

TEST(Crt, AgreesWithBruteForce) {
    std::mt19937_64 rng(1234);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<std::pair<BigInt, BigInt>> sys;
        size_t k = 1 + rng() % 3;
        long L = 1;
        std::vector<std::pair<long, long>> raw;
        for (size_t i = 0; i < k; ++i) {
            long m = 1 + static_cast<long>(rng() % 12);
            long r = static_cast<long>(rng() % 30) - 10;
            raw.push_back({r, m});
            sys.push_back({BigInt(r), BigInt(m)});
            L = std::lcm(L, m);
        }
        std::optional<long> brute;
        for (long x = 0; x < L && !brute; ++x) {
            bool ok = true;
            for (auto [r, m] : raw) ok = ok && ((x - r) % m == 0);
            if (ok) brute = x;
        }
        auto got = crt_solve(sys);
        ASSERT_EQ(got.has_value(), brute.has_value());
        if (got) EXPECT_EQ(*got, *brute);
    }
}

TEST(Interpolation, ConsecutiveNodes) {
    // 3x^2 - x/2 + 7 sampled at -2..1
    std::vector<Rational> vals;
    for (long x = -2; x <= 1; ++x) vals.push_back(Rational(3 * x * x) - Rational(x) / 2 + 7);
    auto c = interpolate_consecutive(vals, -2);
    ASSERT_EQ(c.size(), 4u);
    EXPECT_EQ(c[0], R("7"));
    EXPECT_EQ(c[1], R("-1/2"));
    EXPECT_EQ(c[2], R("3"));
    EXPECT_EQ(c[3], R("0"));
}

TEST(Bivariate, ReconstructSpecExamples) {
    auto ab = bivariate_reconstruct([](const Rational& a, const Rational& b) { return a * b; }, 1, 1);
    EXPECT_EQ(ab.str(), "AB");
    auto seven = bivariate_reconstruct([](const Rational&, const Rational&) { return Rational(7); }, 0, 0);
    EXPECT_EQ(seven.str(), "7");
    auto lin = bivariate_reconstruct(
        [](const Rational& a, const Rational& b) { return Rational(8) * a + Rational(5) * b - 24; }, 1, 1);
    EXPECT_EQ(lin.str(), "8A+5B-24");
}

TEST(Bivariate, ReconstructRandomRoundTrip) {
    std::mt19937_64 rng(2718);
    for (int trial = 0; trial < 100; ++trial) {
        BivariatePoly p;
        int da = static_cast<int>(rng() % 5), db = static_cast<int>(rng() % 4);
        for (int i = 0; i <= da; ++i)
            for (int j = 0; j <= db; ++j)
                if (rng() % 3) p.add_term(i, j, random_rational(rng, 20, 6));
        auto q = bivariate_reconstruct([&](const Rational& a, const Rational& b) { return p.eval(a, b); }, da, db);
        EXPECT_EQ(q, p);
    }
}

TEST(Bivariate, ReconstructShiftsAroundPoles) {
    // 1/(a+1) style oracle that is polynomial away from a = 0: pole at the origin only
    auto oracle = [](const Rational& a, const Rational& b) {
        if (a.is_zero() && b.is_zero()) throw PoleError("origin");
        return a * a + b;
    };
    auto q = bivariate_reconstruct(oracle, 2, 1);
    EXPECT_EQ(q.str(), "A^2+B");
}

TEST(Bivariate, ReconstructDetectsTooSmallBounds) {
    auto oracle = [](const Rational& a, const Rational& b) { return a * a * a + b; };
    EXPECT_THROW(bivariate_reconstruct(oracle, 2, 1), ReconstructionError);
}

TEST(Bivariate, FactorLinear) {
    auto A = BivariatePoly::var_a();
    auto one = BivariatePoly::constant(1);
    BivariatePoly p = BivariatePoly::constant(-360) * (A - one * Rational(2)) * (A + one).pow(2) * A *
                      BivariatePoly::linear(3, 2, -1);
    auto f = factor_linear(p);
    EXPECT_EQ(f.str(), "-2^3*3^2*5*(A-2)*A*(A+1)^2*(3A+2B-1)");
    EXPECT_EQ(f.expand(), p);
    // rational root 1/2 folds its denominator into the content
    BivariatePoly q = (A - one * R("1/2")) * BivariatePoly::var_b();
    auto g = factor_linear(q);
    EXPECT_EQ(g.expand(), q);
    EXPECT_EQ(g.str(), "(1)/(2)*(2A-1)*B");
}

TEST(Linalg, BareissMatchesCofactor) {
    std::mt19937_64 rng(16);
    for (int trial = 0; trial < 120; ++trial) {
        size_t n = 1 + rng() % 5;
        RatMatrix m(n, std::vector<Rational>(n));
        for (auto& row : m)
            for (auto& x : row) x = (rng() % 4 == 0) ? Rational(0) : random_rational(rng, 9, 3);
        EXPECT_EQ(det_rational(m), det_cofactor(m));
    }
}

TEST(Linalg, RankAndSpan) {
    IntMatrix m{{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
    EXPECT_EQ(rank_bareiss(m), 2u);
    auto in = span_test(m, {1, 3, 4});
    EXPECT_EQ(in.rank, 2u);
    EXPECT_TRUE(in.in_span);
    auto out = span_test(m, {0, 0, 1});
    EXPECT_FALSE(out.in_span);
    // a zero leading column must not confuse the pivot search
    IntMatrix z{{0, 0, 5}, {0, 3, 1}};
    EXPECT_EQ(rank_bareiss(z), 2u);
}
