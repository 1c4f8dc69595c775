#pragma once

#include "mdslab/bivariate.hpp"
#include "mdslab/linalg.hpp"
#include "mdslab/profile.hpp"
#include "mdslab/rational.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace mdslab {

// a^{\uparrow u}: a vertical run of `count` points starting at height `offset`.
struct Run {
    long count = 0;
    long offset = 0;
    friend bool operator==(const Run&, const Run&) = default;
};

using IntPoint = std::pair<long, long>;
using Exponent = std::pair<int, int>;  // (u, v) for (x)_u (y)_v

// Dumnicki set: run i sits on the line x = i (0-based).
struct LatticeSet {
    std::vector<Run> runs;

    static LatticeSet parse(const std::string& text);  // "2^2,1^1,1^0"
    std::vector<IntPoint> points() const;
    std::size_t size() const;
    std::string str() const;  // "(2^2,1^1,1^0)"
};

LatticeSet dumnicki_set(std::vector<Run> runs);

/// Full degree-d staircase minus I_plus. Throws PreconditionError when I_plus
/// is not a staircase anchored at height 0.
std::vector<Exponent> staircase_basis(const LatticeSet& i_plus, long d);

// Corner problem: I_minus hangs off the symbolic left vertex (A, B), I_plus
// sits at the right corner with kq = (t, 0).
struct CornerFrame {
    long dprime = 0;
    long s = 0;  // left columns next to (A, B)
    long t = 0;  // right columns, kq excluded
    LatticeSet i_minus;  // relative to (A, B); run 0 is the vertex itself
    LatticeSet i_plus;
    std::vector<Exponent> basis;

    /// Rows of M: left columns outward from the vertex, each top to bottom,
    /// then the vertex itself.
    std::vector<IntPoint> minus_offsets() const;
    std::string describe() const;
};

/// (1^0, n^{-n-1}) + (A, B) against (n^0, ..., 1^0).
CornerFrame gk_corner_frame(long n);

/// Frame read off an actual triangle: shear so that 0 <= s3 < 1 and take
/// the columns with at most d' points. Needs d' >= 1.
CornerFrame corner_frame_from_slopes(const Slopes& s);

/// The d' = 5, 7, 9 frames (shapes S = {3,5,..}, T = {2,4,..}), read off a
/// concrete slope triple of that shape.
CornerFrame shape_corner_frame(long dprime);
Slopes shape_frame_witness(long dprime);

/// Symbolic M: entry (A+i)_u (B+j)_v.
std::vector<std::vector<BivariatePoly>> build_symbolic_matrix(const CornerFrame& f);
RatMatrix build_matrix(const std::vector<std::pair<Rational, Rational>>& points, const std::vector<Exponent>& basis);
RatMatrix frame_matrix(const CornerFrame& f, const Rational& A, const Rational& B);
IntMatrix frame_matrix_int(const CornerFrame& f, long A, long B);

Rational det_exact(const RatMatrix& m);
/// det M at integer (A, B), integer arithmetic throughout.
BigInt frame_det(const CornerFrame& f, long A, long B);

struct SymbolicDet {
    BivariatePoly poly;
    FactoredPoly factored;
    int deg_bound_a = 0;
    int deg_bound_b = 0;
};

SymbolicDet det_symbolic(const CornerFrame& f, unsigned threads = 0);

/// xi_i = (-1)^i C(n,i) (A+1-n+i)_i (B-2-i)_{n-i}, i = 0..n.
std::vector<BivariatePoly> gk_kernel_vector(long n);
/// M_1: rows (A+1, B-2-j), j < n; columns (x)_{n-i} (y)_i.
RatMatrix gk_m1(long n, const Rational& A, const Rational& B);

// Curve-existence oracle.

struct CurveQuery {
    std::vector<LatticePoint> points;
    LatticePoint avoid;
    long degree = 0;
};

struct CurveAnswer {
    bool exists = false;
    std::size_t rank_points = 0;
    std::size_t rank_with_avoid = 0;
    std::size_t unknowns = 0;
    std::size_t rows_used = 0;
};

/// Exact rank comparison in the falling-factorial basis anchored at the
/// bounding box corner. Points on one vertical line beyond degree+1 are
/// dropped first: their rows are fixed combinations of degree+1 others.
CurveAnswer curve_exists(const CurveQuery& q, std::size_t max_unknowns = 2000);

std::vector<LatticePoint> read_point_list(const std::string& text);

struct ReductionReport {
    long k = 0;
    long d = 0;
    long big_degree = 0;
    bool full_left = false, reduced_left = false;    // omit kp
    bool full_right = false, reduced_right = false;  // omit kq
    bool equivalent() const { return full_left == reduced_left && full_right == reduced_right; }
};

/// Full problem (degree kmw-1, all of k Delta_1 but one vertex) against the
/// reduced one (degree d, small columns plus the other vertex).
ReductionReport reduction_equivalence(const Slopes& s, long k, std::size_t max_unknowns = 2000);

/// Reduced problem only, which stays small even when kmw is large.
bool reduced_problem(const Slopes& s, long k, bool omit_left);

/// Fixed slope triples for the full-against-reduced comparison.
const std::vector<std::string>& reduction_corpus();

} // namespace mdslab
