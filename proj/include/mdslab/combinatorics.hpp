#pragma once

#include "mdslab/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace mdslab {

/// (x)_n. For n >= 0 this is x(x-1)...(x-n+1); for n < 0 it is
/// 1/((x+1)(x+2)...(x-n)). Throws PoleError on a zero factor.
Rational falling_factorial(const Rational& x, long n);

/// Integer-only fast path of falling_factorial for n >= 0.
BigInt falling_factorial_int(const BigInt& x, long n);

BigInt binomial(long n, long k);
BigInt factorial(long n);

/// Stirling numbers of the second kind S(n, k) from the usual recurrence.
BigInt stirling2(long n, long k);

/// Table S(i, j) for 0 <= i, j <= n.
std::vector<std::vector<BigInt>> stirling2_table(long n);

/// Solves x = r_i mod m_i (moduli need not be coprime).
/// Returns the least solution in [0, lcm) or nothing if inconsistent.
std::optional<BigInt> crt_solve(const std::vector<std::pair<BigInt, BigInt>>& system);

} // namespace mdslab
