#pragma once

#include "mdslab/rational.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mdslab {

struct Slopes {
    Rational s1, s2, s3;

    /// "s1,s2,s3", each a fraction "p/q" or an integer.
    static Slopes parse(std::string_view text);
    std::string str() const;
    friend bool operator==(const Slopes&, const Slopes&) = default;
};

/// 1/(s2-s1) + 1/(s3-s2). Requires s1 < s2 < s3.
Rational width(const Slopes& s);

/// Throws PreconditionError unless s1 < s2 < s3 and the width is < 1.
void require_in_scope(const Slopes& s);

/// Adds t to every slope: the shear (x, y) -> (x, y + t x).
Slopes shear(const Slopes& s, const BigInt& t);
/// (x, y) -> (-x, y): slopes become (-s3, -s2, -s1).
Slopes reflect(const Slopes& s);

struct LatticePoint {
    BigInt x, y;
    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

// Delta_1 = m * Delta_0 with vertices (0,0), p, q.
struct GoodTriangle {
    BigInt m;
    LatticePoint p, q;
};

/// Least m with m*x1, m*y1, m*x2, m*y2 integral; no width restriction.
BigInt good_multiplier(const Slopes& s);

/// Smallest good lattice triangle. Requires width < 1; cross-checks m
/// against lcm(alpha (s2 - s1), beta (s3 - s2)).
GoodTriangle smallest_good_triangle(const Slopes& s);

/// l_k = floor(k s2) - ceil(k s1) + 1
long left_count(const Slopes& s, long k);
/// r_k = floor(k s3) - ceil(k s2) + 1
long right_count(const Slopes& s, long k);

/// Number of entries <= n in the two infinite sequences l_k and r_k.
long pi(const Slopes& s, long n);

/// Largest n worth scanning for d: below w/(1-w) and below m w.
long degree_search_bound(const Slopes& s);

long reduced_degree(const Slopes& s);
long minimal_degree(const Slopes& s);

/// Least gamma >= 1 with gamma s2^2, gamma s3, gamma s2 s3 all integers.
BigInt gamma_of(const Slopes& s);

struct Shape {
    std::vector<long> S;  // left column sizes below d'
    std::vector<long> T;  // right column sizes below d'
    friend bool operator==(const Shape&, const Shape&) = default;
};

/// Only defined for d' >= 2.
std::optional<Shape> shape_partition(const Slopes& s);

struct Column {
    BigInt x;
    BigInt y_lo, y_hi;
    long count() const;
};

/// Every column of k * Delta_1, left vertex to right vertex inclusive.
std::vector<Column> triangle_columns(const Slopes& s, long k);

/// Points of k * Delta_1, column by column, bottom to top.
std::vector<LatticePoint> triangle_points(const Slopes& s, long k);

/// Interior columns of Delta_1 with at most n points, counted directly.
long column_count_at_most(const Slopes& s, long n);

struct PeelStep {
    BigInt x;
    long count;
    long degree_before;
};

struct PeelTrace {
    long start_degree = 0;
    std::vector<PeelStep> removed;
    long final_degree = 0;
    std::vector<Column> remaining;  // interior columns that survived
};

/// Repeatedly deletes an interior column of k * Delta_1 holding more points
/// than the current degree, lowering the degree by one each time.
PeelTrace bezout_peel(const Slopes& s, long k);

// Everything the classifier needs about one slope triple.
struct ColumnProfile {
    Slopes slopes;
    Rational w;
    GoodTriangle tri;
    long d = 0;
    long d_min = 0;
    BigInt gamma;
    std::optional<Shape> shape;
    std::vector<long> left;   // l_1.. within Delta_1 while <= search bound + 1
    std::vector<long> right;
};

ColumnProfile column_profile(const Slopes& s);

long to_long(const BigInt& v);

} // namespace mdslab
