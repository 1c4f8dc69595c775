#include "mdslab/interpolation.hpp"

#include "mdslab/combinatorics.hpp"
#include "mdslab/error.hpp"
#include "mdslab/parallel.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace mdslab {

// ---------------------------------------------------------------------------
// Lattice sets

LatticeSet dumnicki_set(std::vector<Run> runs) {
    for (const auto& r : runs)
        if (r.count <= 0) throw PreconditionError("Dumnicki set counts must be positive");
    return LatticeSet{std::move(runs)};
}

LatticeSet LatticeSet::parse(const std::string& text) {
    std::string t;
    for (char c : text)
        if (c != ' ' && c != '(' && c != ')') t += c;
    std::vector<Run> runs;
    std::stringstream ss(t);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto hat = item.find('^');
        try {
            std::size_t used = 0;
            Run r;
            if (hat == std::string::npos) {
                r.count = std::stol(item, &used);
                if (used != item.size()) throw ParseError("bad run '" + item + "'");
            } else {
                std::string a = item.substr(0, hat), b = item.substr(hat + 1);
                r.count = std::stol(a, &used);
                if (used != a.size()) throw ParseError("bad run '" + item + "'");
                r.offset = std::stol(b, &used);
                if (used != b.size()) throw ParseError("bad run '" + item + "'");
            }
            runs.push_back(r);
        } catch (const std::logic_error&) {
            throw ParseError("bad run '" + item + "'");
        }
    }
    if (runs.empty()) throw ParseError("empty lattice set");
    for (const auto& r : runs)
        if (r.count <= 0) throw ParseError("run counts must be positive");
    return LatticeSet{std::move(runs)};
}

std::vector<IntPoint> LatticeSet::points() const {
    std::vector<IntPoint> out;
    for (std::size_t i = 0; i < runs.size(); ++i)
        for (long j = 0; j < runs[i].count; ++j) out.emplace_back(static_cast<long>(i), runs[i].offset + j);
    return out;
}

std::size_t LatticeSet::size() const {
    std::size_t n = 0;
    for (const auto& r : runs) n += static_cast<std::size_t>(r.count);
    return n;
}

std::string LatticeSet::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < runs.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(runs[i].count) + "^" + std::to_string(runs[i].offset);
    }
    return out + ")";
}

std::vector<Exponent> staircase_basis(const LatticeSet& i_plus, long d) {
    if (d < 0) throw PreconditionError("staircase degree must be >= 0");
    long prev = d + 2;
    for (std::size_t x = 0; x < i_plus.runs.size(); ++x) {
        const Run& r = i_plus.runs[x];
        if (r.offset != 0) throw PreconditionError("malformed staircase: I+ columns must start at height 0");
        if (r.count > prev || r.count > d + 1 - static_cast<long>(x))
            throw PreconditionError("malformed staircase: I+ " + i_plus.str() + " does not fit degree " +
                                    std::to_string(d));
        prev = r.count;
    }
    std::vector<Exponent> out;
    for (long tot = d; tot >= 0; --tot)
        for (long u = tot; u >= 0; --u) {
            long v = tot - u;
            long have = u < static_cast<long>(i_plus.runs.size()) ? i_plus.runs[u].count : 0;
            if (v >= have) out.emplace_back(static_cast<int>(u), static_cast<int>(v));
        }
    return out;
}

// ---------------------------------------------------------------------------
// Corner frames

std::vector<IntPoint> CornerFrame::minus_offsets() const {
    std::vector<IntPoint> out;
    for (std::size_t i = 1; i < i_minus.runs.size(); ++i) {
        const Run& r = i_minus.runs[i];
        for (long j = r.count - 1; j >= 0; --j) out.emplace_back(static_cast<long>(i), r.offset + j);
    }
    // the vertex row goes last; this only fixes the overall sign
    for (long j = i_minus.runs[0].count - 1; j >= 0; --j) out.emplace_back(0L, i_minus.runs[0].offset + j);
    return out;
}

std::string CornerFrame::describe() const {
    std::ostringstream os;
    os << "d'=" << dprime << " I-=" << i_minus.str() << "+(A,B) I+=" << i_plus.str() << " s=" << s << " t=" << t;
    return os.str();
}

namespace {

CornerFrame finish_frame(long dprime, std::vector<Run> minus, std::vector<Run> plus) {
    CornerFrame f;
    f.dprime = dprime;
    f.s = static_cast<long>(minus.size()) - 1;
    f.t = static_cast<long>(plus.size()) - 1;
    f.i_minus = dumnicki_set(std::move(minus));
    f.i_plus = dumnicki_set(std::move(plus));
    f.basis = staircase_basis(f.i_plus, dprime);
    if (f.basis.size() != f.i_minus.size())
        throw PreconditionError("corner frame is not square: |I-| = " + std::to_string(f.i_minus.size()) +
                                ", basis " + std::to_string(f.basis.size()));
    return f;
}

} // namespace

CornerFrame gk_corner_frame(long n) {
    if (n < 1) throw PreconditionError("gk_corner_frame needs n >= 1");
    std::vector<Run> minus{{1, 0}, {n, -n - 1}};
    std::vector<Run> plus;
    for (long c = n; c >= 1; --c) plus.push_back({c, 0});
    return finish_frame(n, std::move(minus), std::move(plus));
}

CornerFrame corner_frame_from_slopes(const Slopes& s) {
    require_in_scope(s);
    long dp = minimal_degree(s);
    if (dp < 1) throw PreconditionError("corner frame needs d' >= 1, got " + std::to_string(dp));
    Slopes sh = shear(s, -s.s3.floor());
    const long cap = 4 * dp + 8;

    std::vector<Run> minus{{1, 0}};
    for (long j = 1;; ++j) {
        if (j > cap) throw InternalError("left columns never exceed d'");
        BigInt lo = (Rational(j) * sh.s1).ceil(), hi = (Rational(j) * sh.s2).floor();
        long cnt = to_long(hi - lo + 1);
        if (cnt != left_count(s, j)) throw InternalError("sheared left column disagrees with l_j");
        if (cnt > dp) break;
        minus.push_back({cnt, to_long(lo)});
    }
    std::vector<long> r;
    for (long j = 1;; ++j) {
        if (j > cap) throw InternalError("right columns never exceed d'");
        long cnt = right_count(s, j);
        if (cnt > dp) break;
        r.push_back(cnt);
    }
    long t = static_cast<long>(r.size());
    // bottoms of the right columns all at height 0 iff 0 <= s3' < 1/t
    for (long j = 1; j <= t; ++j)
        if ((Rational(-j) * sh.s3).ceil() != 0)
            throw PreconditionError("right corner of " + s.str() + " is not a staircase after shearing");
    std::vector<Run> plus;
    for (long j = t; j >= 1; --j) plus.push_back({r[static_cast<std::size_t>(j - 1)], 0});
    plus.push_back({1, 0});
    return finish_frame(dp, std::move(minus), std::move(plus));
}

Slopes shape_frame_witness(long dprime) {
    if (dprime != 5 && dprime != 7 && dprime != 9)
        throw PreconditionError("unsupported d' " + std::to_string(dprime) + " (expected 5, 7 or 9)");
    long n = (dprime - 1) / 2;
    Rational eps(BigInt(1), BigInt(10 * n * (n + 1)));
    Rational s1 = Rational(-2) - Rational(BigInt(1), BigInt(n)) + eps;
    Rational s2 = (Rational(BigInt(1), BigInt(n + 1)) + Rational(BigInt(1), BigInt(n))) / Rational(2);
    Rational s3 = Rational(2) + Rational(BigInt(1), BigInt(n + 1)) - eps;
    return Slopes{s1, s2, s3};
}

CornerFrame shape_corner_frame(long dprime) {
    Slopes s = shape_frame_witness(dprime);
    CornerFrame f = corner_frame_from_slopes(s);
    if (f.dprime != dprime) throw InternalError("witness " + s.str() + " has the wrong d'");
    return f;
}

// ---------------------------------------------------------------------------
// Matrices

namespace {

// (A + i)_u as a polynomial in A
BivariatePoly falling_poly(bool in_a, long shift, int u) {
    BivariatePoly out = BivariatePoly::constant(Rational(1));
    for (int r = 0; r < u; ++r) {
        BivariatePoly f = in_a ? BivariatePoly::linear(Rational(1), Rational(0), Rational(shift - r))
                               : BivariatePoly::linear(Rational(0), Rational(1), Rational(shift - r));
        out = out * f;
    }
    return out;
}

} // namespace

std::vector<std::vector<BivariatePoly>> build_symbolic_matrix(const CornerFrame& f) {
    std::vector<std::vector<BivariatePoly>> m;
    for (const auto& [i, j] : f.minus_offsets()) {
        std::vector<BivariatePoly> row;
        for (const auto& [u, v] : f.basis) row.push_back(falling_poly(true, i, u) * falling_poly(false, j, v));
        m.push_back(std::move(row));
    }
    return m;
}

RatMatrix build_matrix(const std::vector<std::pair<Rational, Rational>>& points, const std::vector<Exponent>& basis) {
    RatMatrix m;
    for (const auto& [x, y] : points) {
        std::vector<Rational> row;
        for (const auto& [u, v] : basis) {
            if (u < 0 || v < 0) throw PreconditionError("negative basis exponent");
            Rational a = 1, b = 1;
            for (int r = 0; r < u; ++r) a *= x - Rational(r);
            for (int r = 0; r < v; ++r) b *= y - Rational(r);
            row.push_back(a * b);
        }
        m.push_back(std::move(row));
    }
    return m;
}

RatMatrix frame_matrix(const CornerFrame& f, const Rational& A, const Rational& B) {
    std::vector<std::pair<Rational, Rational>> pts;
    for (const auto& [i, j] : f.minus_offsets()) pts.emplace_back(A + Rational(i), B + Rational(j));
    return build_matrix(pts, f.basis);
}

IntMatrix frame_matrix_int(const CornerFrame& f, long A, long B) {
    IntMatrix m;
    for (const auto& [i, j] : f.minus_offsets()) {
        std::vector<BigInt> row;
        row.reserve(f.basis.size());
        for (const auto& [u, v] : f.basis)
            row.push_back(falling_factorial_int(BigInt(A + i), u) * falling_factorial_int(BigInt(B + j), v));
        m.push_back(std::move(row));
    }
    return m;
}

Rational det_exact(const RatMatrix& m) { return det_rational(m); }

BigInt frame_det(const CornerFrame& f, long A, long B) { return det_bareiss(frame_matrix_int(f, A, B)); }

SymbolicDet det_symbolic(const CornerFrame& f, unsigned threads) {
    SymbolicDet out;
    for (const auto& [u, v] : f.basis) {
        out.deg_bound_a += u;
        out.deg_bound_b += v;
    }
    ReconstructOptions opts;
    // centred grid keeps the evaluations small
    opts.origin_a = -out.deg_bound_a / 2;
    opts.origin_b = -out.deg_bound_b / 2;
    opts.threads = threads;
    auto oracle = [&f](const Rational& a, const Rational& b) {
        return Rational(frame_det(f, to_long(a.num()), to_long(b.num())));
    };
    out.poly = bivariate_reconstruct(oracle, out.deg_bound_a, out.deg_bound_b, opts);
    out.factored = factor_linear(out.poly);
    return out;
}

// ---------------------------------------------------------------------------
// The n-point corner kernel

std::vector<BivariatePoly> gk_kernel_vector(long n) {
    if (n < 1) throw PreconditionError("gk_kernel_vector needs n >= 1");
    std::vector<BivariatePoly> xi;
    for (long i = 0; i <= n; ++i) {
        BivariatePoly p = falling_poly(true, 1 - n + i, static_cast<int>(i)) *
                          falling_poly(false, -2 - i, static_cast<int>(n - i));
        Rational c(binomial(n, i));
        if (i % 2) c = -c;
        xi.push_back(p * c);
    }
    return xi;
}

RatMatrix gk_m1(long n, const Rational& A, const Rational& B) {
    std::vector<std::pair<Rational, Rational>> pts;
    for (long j = 0; j < n; ++j) pts.emplace_back(A + Rational(1), B - Rational(2 + j));
    std::vector<Exponent> basis;
    for (long i = 0; i <= n; ++i) basis.emplace_back(static_cast<int>(n - i), static_cast<int>(i));
    return build_matrix(pts, basis);
}

// ---------------------------------------------------------------------------
// Curve existence

CurveAnswer curve_exists(const CurveQuery& q, std::size_t max_unknowns) {
    for (const auto& p : q.points)
        if (p == q.avoid) throw PreconditionError("the avoided point is one of the interpolation points");
    CurveAnswer ans;
    if (q.degree < 0) return ans;
    const long D = q.degree;
    ans.unknowns = static_cast<std::size_t>((D + 1) * (D + 2) / 2);
    if (ans.unknowns > max_unknowns)
        throw PreconditionError("degree " + std::to_string(D) + " needs " + std::to_string(ans.unknowns) +
                                " unknowns, over the limit " + std::to_string(max_unknowns));

    // dedupe, then keep at most D+1 points per vertical line
    std::map<BigInt, std::set<BigInt>> lines;
    for (const auto& p : q.points) lines[p.x].insert(p.y);
    BigInt x0 = q.avoid.x, y0 = q.avoid.y;
    for (const auto& [x, ys] : lines) {
        x0 = std::min(x0, x);
        y0 = std::min(y0, *ys.begin());
    }
    std::vector<Exponent> basis;
    for (long u = D; u >= 0; --u)
        for (long v = D - u; v >= 0; --v) basis.emplace_back(static_cast<int>(u), static_cast<int>(v));

    // binomial basis C(x-x0, u) C(y-y0, v): integer entries, same span as falling factorials
    auto row_of = [&](const BigInt& x, const BigInt& y) {
        std::vector<BigInt> cx(D + 1), cy(D + 1);
        BigInt i = x - x0, j = y - y0;
        cx[0] = cy[0] = 1;
        for (long r = 1; r <= D; ++r) {
            cx[r] = cx[r - 1] * (i - (r - 1)) / r;
            cy[r] = cy[r - 1] * (j - (r - 1)) / r;
        }
        std::vector<BigInt> row;
        row.reserve(basis.size());
        for (const auto& [u, v] : basis) row.push_back(cx[u] * cy[v]);
        return row;
    };
    IntMatrix rows;
    for (auto it = lines.rbegin(); it != lines.rend(); ++it) {
        long kept = 0;
        for (auto y = it->second.rbegin(); y != it->second.rend() && kept <= D; ++y, ++kept)
            rows.push_back(row_of(it->first, *y));
    }
    ans.rows_used = rows.size();
    auto st = span_test(std::move(rows), row_of(q.avoid.x, q.avoid.y));
    ans.rank_points = st.rank;
    ans.rank_with_avoid = st.rank + (st.in_span ? 0 : 1);
    ans.exists = !st.in_span;
    return ans;
}

std::vector<LatticePoint> read_point_list(const std::string& text) {
    std::vector<LatticePoint> out;
    std::istringstream in(text);
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::string t;
        for (char c : line)
            if (c != ' ' && c != '\t' && c != '\r') t += c;
        if (t.empty()) continue;
        auto comma = t.find(',');
        if (comma == std::string::npos || t.find(',', comma + 1) != std::string::npos)
            throw ParseError("line " + std::to_string(lineno) + ": expected 'x,y'");
        try {
            out.push_back({parse_bigint(t.substr(0, comma)), parse_bigint(t.substr(comma + 1))});
        } catch (const ParseError&) {
            throw ParseError("line " + std::to_string(lineno) + ": expected integers 'x,y'");
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Full against reduced interpolation

namespace {

struct TriangleParts {
    LatticePoint left, right;
    std::vector<Column> cols;  // interior columns only
};

TriangleParts parts(const Slopes& s, long k) {
    auto cols = triangle_columns(s, k);
    if (cols.size() < 2) throw InternalError("triangle with fewer than two columns");
    TriangleParts t;
    if (cols.front().count() != 1 || cols.back().count() != 1)
        throw InternalError("vertex columns should hold one point");
    t.left = {cols.front().x, cols.front().y_lo};
    t.right = {cols.back().x, cols.back().y_lo};
    t.cols.assign(cols.begin() + 1, cols.end() - 1);
    return t;
}

void add_column(std::vector<LatticePoint>& pts, const Column& c) {
    for (BigInt y = c.y_lo; y <= c.y_hi; ++y) pts.push_back({c.x, y});
}

} // namespace

bool reduced_problem(const Slopes& s, long k, bool omit_left) {
    require_in_scope(s);
    long d = reduced_degree(s);
    auto t = parts(s, k);
    std::vector<LatticePoint> pts;
    for (const auto& c : t.cols)
        if (c.count() <= d) add_column(pts, c);
    pts.push_back(omit_left ? t.right : t.left);
    return curve_exists({pts, omit_left ? t.left : t.right, d}).exists;
}

ReductionReport reduction_equivalence(const Slopes& s, long k, std::size_t max_unknowns) {
    require_in_scope(s);
    if (k < 1) throw PreconditionError("k must be >= 1");
    ReductionReport rep;
    rep.k = k;
    rep.d = reduced_degree(s);
    auto tri = smallest_good_triangle(s);
    Rational kmw = Rational(BigInt(k)) * Rational(tri.m) * width(s);
    rep.big_degree = to_long(kmw.num()) - 1;
    if (rep.big_degree + 1 < rep.d + 2)
        throw PreconditionError("k m w = " + kmw.str() + " is below d + 2 = " + std::to_string(rep.d + 2));
    auto t = parts(s, k);
    for (bool omit_left : {true, false}) {
        std::vector<LatticePoint> pts;
        for (const auto& c : t.cols) add_column(pts, c);
        pts.push_back(omit_left ? t.right : t.left);
        bool full = curve_exists({pts, omit_left ? t.left : t.right, rep.big_degree}, max_unknowns).exists;
        bool red = reduced_problem(s, k, omit_left);
        (omit_left ? rep.full_left : rep.full_right) = full;
        (omit_left ? rep.reduced_left : rep.reduced_right) = red;
    }
    return rep;
}

const std::vector<std::string>& reduction_corpus() {
    // w < 1 and m w <= 14 throughout; the second block all have d > 0
    static const std::vector<std::string> corpus{
        "-3/4,1,9/2",
        "-2,1/2,3",
        "-5/2,1/2,7/2",
        "-3/2,1/2,9/2",
        "-7/2,1/2,5/2",
        "-1,1/2,5",
        "-4,1/2,2",
        "-11/3,1/3,7/3",
        "-5/3,1/3,13/3",
        "-3/2,1/2,7/2",
        "-5/2,1/2,5/2",
        "-13/6,1/2,19/6",
        "-17/6,1/2,23/6",
        "-3/2,1/2,19/6",
        "-5/2,1/2,9/2",
        "-3,0,3",
        "-2,0,4",
        "-2,0,3",
        "-2,0,8/3",
        "-2,0,7/2",
        "-2,0,9/2",
        "-11/6,1/2,17/6",
        "-7/4,1/2,11/4",
        "-5/3,1/2,8/3",
        "-4/3,1/3,11/3",
        "-11/6,1/3,5/2",
        "-8/3,2/3,7/3",
        "-3/2,2/3,17/6",
        "-3,1/4,15/8",
        "-11/8,1/4,7/2",
        "-5/2,3/4,19/8",
        "-7/8,3/4,4",
        "-9/5,2/5,13/5",
        "-8/5,3/5,14/5",
        "-13/7,2/7,17/7",
        "-12/7,3/7,18/7",
        "-13/7,3/7,19/7",
        "-11/7,4/7,19/7",
        "-12/7,4/7,20/7",
        "-10/7,5/7,20/7"};
    return corpus;
}

} // namespace mdslab
