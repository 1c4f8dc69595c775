#include "mdslab/combinatorics.hpp"

#include "mdslab/error.hpp"

namespace mdslab {

Rational falling_factorial(const Rational& x, long n) {
    if (n >= 0) {
        mpq_class acc(1);
        mpq_class f = x.raw();
        for (long i = 0; i < n; ++i) {
            acc *= f;
            f -= 1;
        }
        return Rational(acc);
    }
    mpq_class acc(1);
    mpq_class f = x.raw();
    for (long i = 1; i <= -n; ++i) {
        f += 1;
        if (sgn(f) == 0)
            throw PoleError("falling factorial (" + x.str() + ")_" + std::to_string(n) + " has a pole");
        acc *= f;
    }
    return Rational(mpq_class(1) / acc);
}

BigInt falling_factorial_int(const BigInt& x, long n) {
    if (n < 0) throw PreconditionError("falling_factorial_int needs n >= 0");
    BigInt acc = 1;
    BigInt f = x;
    for (long i = 0; i < n; ++i) {
        acc *= f;
        if (acc == 0) return acc;
        f -= 1;
    }
    return acc;
}

BigInt binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

BigInt factorial(long n) {
    if (n < 0) throw PreconditionError("factorial of a negative number");
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

std::vector<std::vector<BigInt>> stirling2_table(long n) {
    if (n < 0) throw PreconditionError("stirling2_table needs n >= 0");
    std::vector<std::vector<BigInt>> s(n + 1, std::vector<BigInt>(n + 1, 0));
    s[0][0] = 1;
    for (long i = 1; i <= n; ++i)
        for (long j = 1; j <= i; ++j)
            s[i][j] = BigInt(j) * s[i - 1][j] + s[i - 1][j - 1];
    return s;
}

BigInt stirling2(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    return stirling2_table(n)[n][k];
}

std::optional<BigInt> crt_solve(const std::vector<std::pair<BigInt, BigInt>>& system) {
    BigInt x = 0, mod = 1;
    for (const auto& [res, m0] : system) {
        if (m0 == 0) throw PreconditionError("crt_solve: zero modulus");
        BigInt m = abs(m0);
        BigInt r = floor_div(res, m);
        r = res - r * m;
        // x + mod*t = r (mod m)  ->  mod*t = r - x (mod m)
        BigInt g = gcd(mod, m);
        BigInt diff = r - x;
        if (diff % g != 0) return std::nullopt;
        BigInt mg = m / g;
        BigInt inv;
        BigInt a = (mod / g) % mg;
        if (mg == 1) {
            inv = 0;
        } else if (mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), mg.get_mpz_t()) == 0) {
            throw InternalError("crt_solve: inverse does not exist");
        }
        BigInt t = (diff / g) * inv;
        t = t - floor_div(t, mg) * mg;
        x += mod * t;
        mod *= mg;
        x = x - floor_div(x, mod) * mod;
    }
    return x;
}

} // namespace mdslab
