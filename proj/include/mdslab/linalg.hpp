#pragma once

#include "mdslab/rational.hpp"

#include <cstddef>
#include <vector>

namespace mdslab {

using IntMatrix = std::vector<std::vector<BigInt>>;
using RatMatrix = std::vector<std::vector<Rational>>;

/// Bareiss fraction-free determinant. The matrix is taken by value and destroyed.
BigInt det_bareiss(IntMatrix m);

Rational det_rational(const RatMatrix& m);

/// Rank via fraction-free elimination, pivoting on the first nonzero entry
/// in column order.
std::size_t rank_bareiss(IntMatrix m);

struct SpanTest {
    std::size_t rank = 0;     // rank of the base rows
    bool in_span = false;     // extra row lies in their row space
};

/// Eliminates with `rows` only and reports whether `extra` reduces to zero.
SpanTest span_test(IntMatrix rows, std::vector<BigInt> extra);

/// A * x for exact rationals.
std::vector<Rational> mat_vec(const RatMatrix& a, const std::vector<Rational>& x);

} // namespace mdslab
