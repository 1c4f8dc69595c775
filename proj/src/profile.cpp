#include "mdslab/profile.hpp"

#include "mdslab/error.hpp"

#include <algorithm>
#include <sstream>

namespace mdslab {

long to_long(const BigInt& v) {
    if (!v.fits_slong_p()) throw PreconditionError("integer " + v.get_str() + " is too large for this operation");
    return v.get_si();
}

Slopes Slopes::parse(std::string_view text) {
    std::vector<std::string_view> parts;
    size_t start = 0;
    for (;;) {
        size_t comma = text.find(',', start);
        parts.push_back(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    if (parts.size() != 3) throw ParseError("expected three slopes 's1,s2,s3', got '" + std::string(text) + "'");
    return Slopes{Rational::parse(parts[0]), Rational::parse(parts[1]), Rational::parse(parts[2])};
}

std::string Slopes::str() const { return s1.str() + "," + s2.str() + "," + s3.str(); }

Rational width(const Slopes& s) {
    if (!(s.s1 < s.s2 && s.s2 < s.s3))
        throw PreconditionError("slopes must be strictly increasing: " + s.str());
    return Rational(1) / (s.s2 - s.s1) + Rational(1) / (s.s3 - s.s2);
}

void require_in_scope(const Slopes& s) {
    Rational w = width(s);
    if (w >= Rational(1)) throw PreconditionError("width " + w.str() + " >= 1 for slopes " + s.str());
}

Slopes shear(const Slopes& s, const BigInt& t) {
    Rational r(t);
    return Slopes{s.s1 + r, s.s2 + r, s.s3 + r};
}

Slopes reflect(const Slopes& s) { return Slopes{-s.s3, -s.s2, -s.s1}; }

namespace {

struct Vertices {
    Rational x1, y1, x2, y2;
};

Vertices unit_vertices(const Slopes& s) {
    Rational x1 = Rational(1) / (s.s1 - s.s2);
    Rational x2 = Rational(1) / (s.s3 - s.s2);
    return Vertices{x1, s.s1 * x1, x2, s.s3 * x2};
}

} // namespace

BigInt good_multiplier(const Slopes& s) {
    width(s);  // ordering check
    Vertices v = unit_vertices(s);
    BigInt m = 1;
    for (const auto* r : {&v.x1, &v.y1, &v.x2, &v.y2}) m = lcm(m, r->den());
    return m;
}

GoodTriangle smallest_good_triangle(const Slopes& s) {
    require_in_scope(s);
    Vertices v = unit_vertices(s);
    BigInt m = good_multiplier(s);
    BigInt alpha = lcm(s.s1.den(), s.s2.den());
    BigInt beta = lcm(s.s2.den(), s.s3.den());
    Rational left = Rational(alpha) * (s.s2 - s.s1);
    Rational right = Rational(beta) * (s.s3 - s.s2);
    if (!left.is_integer() || !right.is_integer() || lcm(left.num(), right.num()) != m)
        throw InternalError("good triangle multiplier cross-check failed for " + s.str());
    Rational mr(m);
    GoodTriangle t;
    t.m = m;
    t.p = LatticePoint{(mr * v.x1).num(), (mr * v.y1).num()};
    t.q = LatticePoint{(mr * v.x2).num(), (mr * v.y2).num()};
    return t;
}

long left_count(const Slopes& s, long k) {
    Rational kr(k);
    return to_long((kr * s.s2).floor() - (kr * s.s1).ceil() + 1);
}

long right_count(const Slopes& s, long k) {
    Rational kr(k);
    return to_long((kr * s.s3).floor() - (kr * s.s2).ceil() + 1);
}

long pi(const Slopes& s, long n) {
    width(s);
    long total = 0;
    for (long k = 1;; ++k) {
        if (left_count(s, k) > n) break;
        ++total;
    }
    for (long k = 1;; ++k) {
        if (right_count(s, k) > n) break;
        ++total;
    }
    return total;
}

long degree_search_bound(const Slopes& s) {
    require_in_scope(s);
    Rational w = width(s);
    BigInt n1 = (w / (Rational(1) - w)).ceil() - 1;
    GoodTriangle t = smallest_good_triangle(s);
    Rational mw = Rational(t.m) * w;
    if (!mw.is_integer()) throw InternalError("m*w is not an integer");
    BigInt n2 = mw.num() - 1;
    return to_long(std::min(n1, n2));
}

BigInt gamma_of(const Slopes& s) {
    BigInt g = (s.s2 * s.s2).den();
    g = lcm(g, s.s3.den());
    g = lcm(g, (s.s2 * s.s3).den());
    return g;
}

long Column::count() const { return to_long(y_hi - y_lo + 1); }

namespace {

Column column_at(const Slopes& s, const BigInt& km, const BigInt& x) {
    Rational xr(x);
    Column c;
    c.x = x;
    c.y_hi = (Rational(km) + s.s2 * xr).floor();
    if (x < 0) c.y_lo = (s.s1 * xr).ceil();
    else if (x > 0) c.y_lo = (s.s3 * xr).ceil();
    else c.y_lo = 0;
    return c;
}

} // namespace

std::vector<Column> triangle_columns(const Slopes& s, long k) {
    if (k <= 0) throw PreconditionError("multiple k must be positive");
    GoodTriangle t = smallest_good_triangle(s);
    BigInt km = t.m * k;
    BigInt xl = t.p.x * k, xr = t.q.x * k;
    std::vector<Column> out;
    for (BigInt x = xl; x <= xr; ++x) out.push_back(column_at(s, km, x));
    return out;
}

std::vector<LatticePoint> triangle_points(const Slopes& s, long k) {
    std::vector<LatticePoint> pts;
    for (const auto& c : triangle_columns(s, k))
        for (BigInt y = c.y_lo; y <= c.y_hi; ++y) pts.push_back({c.x, y});
    return pts;
}

namespace {

// Column sizes of Delta_1 read inward from each vertex, stopping once a
// column holds more than `limit` points (sizes only grow inward).
void direct_columns(const Slopes& s, const GoodTriangle& t, long limit, std::vector<long>& left,
                    std::vector<long>& right) {
    left.clear();
    right.clear();
    for (BigInt x = t.p.x + 1; x <= 0; ++x) {
        long c = column_at(s, t.m, x).count();
        if (c > limit) break;
        left.push_back(c);
    }
    for (BigInt x = t.q.x - 1; x > 0; --x) {
        long c = column_at(s, t.m, x).count();
        if (c > limit) break;
        right.push_back(c);
    }
}

} // namespace

long column_count_at_most(const Slopes& s, long n) {
    GoodTriangle t = smallest_good_triangle(s);
    std::vector<long> l, r;
    direct_columns(s, t, n, l, r);
    return static_cast<long>(l.size() + r.size());
}

ColumnProfile column_profile(const Slopes& s) {
    require_in_scope(s);
    ColumnProfile p;
    p.slopes = s;
    p.w = width(s);
    p.tri = smallest_good_triangle(s);
    p.gamma = gamma_of(s);
    const long bound = degree_search_bound(s);

    // Sequences l_k, r_k up to the first value past the bound.
    for (long k = 1;; ++k) {
        long v = left_count(s, k);
        if (v > bound) break;
        p.left.push_back(v);
    }
    for (long k = 1;; ++k) {
        long v = right_count(s, k);
        if (v > bound) break;
        p.right.push_back(v);
    }
    std::vector<long> hist(bound + 2, 0);
    for (long v : p.left) ++hist[v];
    for (long v : p.right) ++hist[v];

    std::vector<long> dl, dr;
    direct_columns(s, p.tri, bound, dl, dr);
    std::vector<long> dhist(bound + 2, 0);
    for (long v : dl) ++dhist[v];
    for (long v : dr) ++dhist[v];

    long pin = 0, direct = 0;
    p.d = 0;
    p.d_min = 0;
    for (long n = 0; n <= bound; ++n) {
        pin += hist[n];
        direct += dhist[n];
        if (pin != direct)
            throw InternalError("column count and pi disagree at n=" + std::to_string(n) + " for " + s.str());
        if (pin > n) throw InternalError("pi(n) > n for " + s.str());
        if (pin == n && n >= 1) {
            if (p.d_min == 0) p.d_min = n;
            p.d = n;
        }
    }

    if (p.d_min >= 2) {
        Shape sh;
        for (long v : dl)
            if (v < p.d_min) sh.S.push_back(v);
        for (long v : dr)
            if (v < p.d_min) sh.T.push_back(v);
        std::vector<long> all(sh.S);
        all.insert(all.end(), sh.T.begin(), sh.T.end());
        std::sort(all.begin(), all.end());
        std::vector<long> want;
        for (long v = 2; v < p.d_min; ++v) want.push_back(v);
        if (all != want) throw InternalError("shape partition is not {2..d'-1} for " + s.str());
        p.shape = sh;
    }
    return p;
}

long reduced_degree(const Slopes& s) { return column_profile(s).d; }
long minimal_degree(const Slopes& s) { return column_profile(s).d_min; }
std::optional<Shape> shape_partition(const Slopes& s) { return column_profile(s).shape; }

PeelTrace bezout_peel(const Slopes& s, long k) {
    auto cols = triangle_columns(s, k);
    PeelTrace tr;
    // drop the two vertex columns
    std::vector<Column> interior(cols.begin() + 1, cols.end() - 1);
    tr.start_degree = static_cast<long>(cols.size()) - 2;  // W - 1
    long deg = tr.start_degree;
    for (;;) {
        auto best = interior.end();
        for (auto it = interior.begin(); it != interior.end(); ++it)
            if (it->count() > deg && (best == interior.end() || it->count() > best->count())) best = it;
        if (best == interior.end()) break;
        tr.removed.push_back({best->x, best->count(), deg});
        interior.erase(best);
        --deg;
    }
    tr.final_degree = deg;
    if (deg != static_cast<long>(interior.size()))
        throw InternalError("peeling degree does not match the surviving column count");
    tr.remaining = std::move(interior);
    return tr;
}

} // namespace mdslab
