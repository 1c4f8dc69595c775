#pragma once

#include "mdslab/rational.hpp"

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace mdslab {

// Polynomial in two variables A and B with rational coefficients.
// Keys are exponent pairs (i, j) for A^i B^j; zero coefficients are never stored.
class BivariatePoly {
public:
    using Key = std::pair<int, int>;

    BivariatePoly() = default;
    static BivariatePoly constant(const Rational& c);
    static BivariatePoly var_a();
    static BivariatePoly var_b();
    /// p*A + q*B + r
    static BivariatePoly linear(const Rational& p, const Rational& q, const Rational& r);

    void add_term(int i, int j, const Rational& c);
    Rational coeff(int i, int j) const;
    const std::map<Key, Rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    int deg_a() const;
    int deg_b() const;
    int total_degree() const;

    Rational eval(const Rational& a, const Rational& b) const;

    /// Coefficient of B^j as a univariate polynomial in A (index = power of A).
    std::vector<Rational> coeff_in_a(int j) const;
    std::vector<Rational> coeff_in_b(int i) const;

    BivariatePoly& operator+=(const BivariatePoly& o);
    BivariatePoly& operator-=(const BivariatePoly& o);
    BivariatePoly& operator*=(const Rational& c);
    friend BivariatePoly operator+(BivariatePoly a, const BivariatePoly& b) { return a += b; }
    friend BivariatePoly operator-(BivariatePoly a, const BivariatePoly& b) { return a -= b; }
    friend BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b);
    friend BivariatePoly operator*(BivariatePoly a, const Rational& c) { return a *= c; }
    friend bool operator==(const BivariatePoly& a, const BivariatePoly& b) { return a.terms_ == b.terms_; }

    BivariatePoly pow(int e) const;

    /// "8A+5B-24" style; terms by decreasing total degree, then decreasing A power.
    std::string str() const;

    /// Leading coefficient in the str() ordering.
    Rational leading_coeff() const;

private:
    std::map<Key, Rational> terms_;
};

using BivariateOracle = std::function<Rational(const Rational&, const Rational&)>;

/// Coefficients (lowest power first) of the polynomial of degree <= n taking
/// values[k] at x0 + k, k = 0..n.
std::vector<Rational> interpolate_consecutive(const std::vector<Rational>& values, long x0);

struct ReconstructOptions {
    long origin_a = 0;
    long origin_b = 0;
    int max_shifts = 8;
    unsigned threads = 0;  // 0 = MDSLAB_THREADS or hardware default
};

/// Recovers a polynomial with deg_A <= deg_a and deg_B <= deg_b from exact
/// evaluations on an integer grid, then checks it at a fresh point.
BivariatePoly bivariate_reconstruct(const BivariateOracle& oracle, int deg_a, int deg_b,
                                    const ReconstructOptions& opts = {});

struct LinearFactor {
    BivariatePoly poly;
    int multiplicity = 1;
};

// content * prod(factor.poly ^ factor.multiplicity)
struct FactoredPoly {
    Rational content;
    std::vector<LinearFactor> factors;

    BivariatePoly expand() const;
    std::string str() const;
    std::string content_str() const;
};

/// Pulls out the rational content and every factor (A - c) or (B - c) with
/// rational c found by a rational-root search; what is left stays expanded.
FactoredPoly factor_linear(const BivariatePoly& p);

/// "-2^10*3^3*5" style prime factorization (trial division, leftovers kept whole).
std::string format_factored_integer(const BigInt& n);

} // namespace mdslab
