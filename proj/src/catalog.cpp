#include "mdslab/catalog.hpp"

#include "mdslab/error.hpp"
#include "mdslab/parallel.hpp"

#include <json.hpp>

#include <algorithm>
#include <numeric>
#include <regex>
#include <sstream>
#include <tuple>

namespace mdslab {

std::string phi_kind_name(PhiKind k) {
    switch (k) {
    case PhiKind::D0:
        return "d0";
    case PhiKind::D1:
        return "d1";
    case PhiKind::Ge2:
        return "ge2";
    }
    return "ge2";
}

PhiKind parse_phi_kind(const std::string& text) {
    if (text == "d0") return PhiKind::D0;
    if (text == "d1") return PhiKind::D1;
    if (text == "ge2" || text == "d2") return PhiKind::Ge2;
    throw ParseError("unknown class '" + text + "' (expected d0, d1 or ge2)");
}

bool RhoInterval::contains(const Rational& rho) const {
    bool lo_ok = lo_closed ? rho >= lo : rho > lo;
    bool hi_ok = hi_closed ? rho <= hi : rho < hi;
    return lo_ok && hi_ok;
}

bool RhoInterval::empty() const { return lo > hi || (lo == hi && !(lo_closed && hi_closed)); }

std::string RhoInterval::str() const {
    if (all) return "All";
    return lo.str() + (lo_closed ? " <= " : " < ") + "b/c" + (hi_closed ? " <= " : " < ") + hi.str();
}

std::string PhiClass::key() const {
    return "(" + std::to_string(a) + "; " + std::to_string(f) + ", " + std::to_string(g) + "; " + std::to_string(r) +
           ")";
}

std::string PhiClass::divisibility() const {
    std::string fb = f == 1 ? "b" : std::to_string(f) + "b";
    std::string gc = g == 1 ? "c" : std::to_string(g) + "c";
    return std::to_string(a) + " | " + gc + " - " + fb;
}

PhiKind kind_of(const Slopes& s) {
    long dm = minimal_degree(s);
    if (dm == 0) return PhiKind::D0;
    if (dm == 1) return PhiKind::D1;
    return PhiKind::Ge2;
}

namespace {

void check_params(long a, long f, long g, long r) {
    if (a < 1 || f < 1 || g < 1 || r < 1 || r > g)
        throw PreconditionError("class parameters need a, f, g >= 1 and 1 <= r <= g");
    if ((f * r + a) % g != 0) throw PreconditionError("g does not divide f r + a");
}

// rho = b/c as a function of s1 with s2 = r/g fixed
Rational rho_of(long a, long f, long g, const Rational& s2, const Rational& s1) {
    Rational u = s2 - s1;
    Rational g2(g * g);
    return u * g2 / (Rational(a) + u * Rational(g * f));
}

// Some (b, c) residue pair modulo a g meets the congruences of the class:
// a | c g - b f, gcd(e, f, g) = 1, g | e r - b and gcd(a, b) = 1. With
// `coprime` also gcd(a, c) = 1 and no prime of g dividing both b and c.
bool residues_feasible(long a, long f, long g, long r, bool coprime) {
    const long M = a * g;
    for (long b0 = 0; b0 < M; ++b0) {
        if (std::gcd(b0, a) != 1) continue;
        for (long c0 = 0; c0 < M; ++c0) {
            if (coprime && std::gcd(c0, a) != 1) continue;
            long E = ((c0 * g - b0 * f) % M + M) % M;
            if (E % a != 0) continue;
            long e0 = (E / a) % g;
            if (std::gcd(std::gcd(e0, f), g) != 1) continue;
            if (((e0 * r - b0) % g + g) % g != 0) continue;
            if (coprime && std::gcd(std::gcd(b0, c0), g) != 1) continue;
            return true;
        }
    }
    return false;
}

// s1-side interval; no lower end means -infinity
struct S1Range {
    std::optional<Rational> lo;
    Rational hi;
    bool lo_closed = false, hi_closed = false;
};

PhiClass make_class(long a, long f, long g, long r, PhiKind kind) {
    PhiClass p;
    p.a = a;
    p.f = f;
    p.g = g;
    p.r = r;
    p.kind = kind;
    p.s2 = Rational(BigInt(r), BigInt(g));
    p.s3 = Rational(BigInt(f * r + a), BigInt(f * g));
    return p;
}

RhoInterval full_range(long a, long f, long g) {
    RhoInterval iv;
    iv.lo = Rational(BigInt(g * g), BigInt(a));
    iv.hi = Rational(BigInt(g), BigInt(f));
    iv.all = true;
    return iv;
}

// Largest s1 among j/k (k <= K) in [lo, hi] with d = 0, assuming d = 0 is a
// down-set in s1. Used only when condition (4) fails.
Rational bisect_d0(const Rational& s2, const Rational& s3, const Rational& lo, const Rational& hi) {
    auto zero = [&](const Rational& s1) { return reduced_degree(Slopes{s1, s2, s3}) == 0; };
    Rational a = lo, b = hi;
    if (!zero(a)) throw InternalError("d0 bisection: d != 0 at the lower probe " + a.str());
    for (int it = 0; it < 60; ++it) {
        Rational mid = (a + b) / Rational(2);
        (zero(mid) ? a : b) = mid;
    }
    // snap to the breakpoint with smallest denominator in [a, b]
    for (long k = 1; k <= 100000; ++k) {
        BigInt j = (a * Rational(k)).ceil();
        Rational cand(j, BigInt(k));
        if (cand <= b) {
            if (zero(cand)) return cand;
            Rational below(j - 1, BigInt(k));
            if (below >= a && zero(below)) return below;
        }
    }
    throw InternalError("d0 bisection did not settle");
}

} // namespace

Slopes phi_slopes(long a, long f, long g, long r, const Rational& rho) {
    check_params(a, f, g, r);
    Rational lo{BigInt(g * g), BigInt(a)}, hi{BigInt(g), BigInt(f)};
    if (!(rho > lo && rho < hi)) throw PreconditionError("b/c = " + rho.str() + " outside the w < 1 range");
    return Slopes{ratio_to_s1(a, f, g, r, rho), Rational(BigInt(r), BigInt(g)),
                  Rational(BigInt(f * r + a), BigInt(f * g))};
}

std::optional<PhiClass> phi_interval(long a, long f, long g, long r, PhiKind kind, bool verify) {
    check_params(a, f, g, r);
    if (f * g >= a) return std::nullopt;  // s3 - s2 = a/(f g) must exceed 1
    if (!residues_feasible(a, f, g, r, false)) return std::nullopt;

    PhiClass p = make_class(a, f, g, r, kind);
    p.realizable = residues_feasible(a, f, g, r, true);
    const Rational s2 = p.s2, s3 = p.s3;
    const Rational gap = s3 - s2;
    const Rational s1_star = s2 - gap / (gap - Rational(1));  // w = 1
    const Rational B1 = Rational(s2.floor()) - Rational(1);   // l1 >= 2 iff s1 <= B1

    Rational rep_s1 = std::min(s1_star, B1) - Rational(1);
    Slopes rep{rep_s1, s2, s3};
    const long r1 = right_count(rep, 1);
    MainTwoCheck m2 = prop_main02_check(rep);
    p.c4 = m2.c4;

    std::optional<Rational> T0;
    if (r1 != 1) {
        if (m2.c4) {
            bool c2_infinite = m2.gamma > 1 && !m2.c2_bound.has_value();
            if (!c2_infinite) {
                Rational t = std::min(B1, m2.c3_bound);
                if (m2.c2_bound) t = std::min(t, *m2.c2_bound);
                T0 = t;
            }
        } else {
            p.bisected = true;
            Rational top = std::min(B1, s1_star);
            Rational probe = top - Rational(1);
            for (int i = 0; i < 64 && reduced_degree(Slopes{probe, s2, s3}) != 0; ++i)
                probe = probe - (top - probe);
            if (reduced_degree(Slopes{probe, s2, s3}) == 0) {
                Rational t = bisect_d0(s2, s3, probe, top);
                if (t >= s1_star) t = s1_star;  // whole range
                T0 = t;
            }
        }
    }

    std::optional<S1Range> rg;
    const bool b1_inside = B1 < s1_star;
    switch (kind) {
    case PhiKind::D0:
        if (T0) {
            if (*T0 < s1_star)
                rg = S1Range{std::nullopt, *T0, false, true};
            else
                rg = S1Range{std::nullopt, s1_star, false, false};
        }
        break;
    case PhiKind::D1:
        if (r1 != 1) {
            if (b1_inside) rg = S1Range{B1, s1_star, false, false};
        } else {
            rg = b1_inside ? S1Range{std::nullopt, B1, false, true} : S1Range{std::nullopt, s1_star, false, false};
        }
        break;
    case PhiKind::Ge2:
        if (r1 != 1) {
            S1Range x{std::nullopt, b1_inside ? B1 : s1_star, false, b1_inside};
            if (T0) {
                x.lo = *T0;
                x.lo_closed = false;
                if (!(*T0 < x.hi)) break;
            }
            rg = x;
        } else if (b1_inside) {
            rg = S1Range{B1, s1_star, false, false};
        }
        break;
    }
    if (!rg) return std::nullopt;

    RhoInterval iv;
    const RhoInterval full = full_range(a, f, g);
    if (rg->hi == s1_star && !rg->hi_closed) {
        iv.lo = full.lo;
        iv.lo_closed = false;
    } else {
        iv.lo = rho_of(a, f, g, s2, rg->hi);
        iv.lo_closed = rg->hi_closed;
    }
    if (rg->lo) {
        iv.hi = rho_of(a, f, g, s2, *rg->lo);
        iv.hi_closed = rg->lo_closed;
    } else {
        iv.hi = full.hi;
        iv.hi_closed = false;
    }
    if (rho_of(a, f, g, s2, s1_star) != full.lo) throw InternalError("w = 1 endpoint mismatch for " + p.key());
    iv.all = iv.lo == full.lo && iv.hi == full.hi && !iv.lo_closed && !iv.hi_closed;
    if (iv.empty()) return std::nullopt;
    p.interval = iv;
    if (verify) verify_phi_class(p);
    return p;
}

void verify_phi_class(const PhiClass& p, int samples) {
    const Rational lo = p.interval.lo, hi = p.interval.hi;
    const Rational dom_lo{BigInt(p.g * p.g), BigInt(p.a)}, dom_hi{BigInt(p.g), BigInt(p.f)};
    auto kind_at = [&](const Rational& rho) { return kind_of(phi_slopes(p.a, p.f, p.g, p.r, rho)); };
    auto fail = [&](const Rational& rho, const std::string& what) {
        throw InternalError(p.key() + " " + phi_kind_name(p.kind) + ": b/c = " + rho.str() + " " + what);
    };
    const Rational span = hi - lo;
    for (int i = 1; i <= samples; ++i) {
        Rational rho = lo + span * Rational(BigInt(i), BigInt(samples + 1));
        if (kind_at(rho) != p.kind) fail(rho, "lands in another class");
    }
    const Rational delta = span / Rational(256);
    for (int side = 0; side < 2; ++side) {
        const Rational end = side == 0 ? lo : hi;
        const bool closed = side == 0 ? p.interval.lo_closed : p.interval.hi_closed;
        const Rational in = side == 0 ? end + delta : end - delta;
        const Rational out = side == 0 ? end - delta : end + delta;
        if (kind_at(in) != p.kind) fail(in, "just inside lands in another class");
        bool end_in_domain = end > dom_lo && end < dom_hi;
        if (end_in_domain && ((kind_at(end) == p.kind) != closed)) fail(end, "endpoint flag disagrees");
        if (out > dom_lo && out < dom_hi && kind_at(out) == p.kind) fail(out, "just outside is still in the class");
    }
}

PhiTables generate_tables(long a_max, bool verify, unsigned threads) {
    if (a_max < 5) throw PreconditionError("a_max must be at least 5");
    struct Key {
        long a, f, g, r;
    };
    std::vector<Key> keys;
    for (long a = 5; a <= a_max; ++a)
        for (long g = 1; g < a; ++g)
            for (long f = 1; f * g < a; ++f)
                for (long r = 1; r <= g; ++r)
                    if ((f * r + a) % g == 0) keys.push_back({a, f, g, r});
    std::vector<std::optional<PhiClass>> d1(keys.size()), d2(keys.size());
    parallel_for(
        keys.size(),
        [&](std::size_t i) {
            const Key& k = keys[i];
            d1[i] = phi_interval(k.a, k.f, k.g, k.r, PhiKind::D1, verify);
            d2[i] = phi_interval(k.a, k.f, k.g, k.r, PhiKind::Ge2, verify);
        },
        threads);
    PhiTables out;
    for (std::size_t i = 0; i < keys.size(); ++i) {
        if (d1[i]) out.d1.push_back(*d1[i]);
        if (d2[i]) out.d2.push_back(*d2[i]);
    }
    auto by_key = [](const PhiClass& x, const PhiClass& y) {
        return std::tie(x.a, x.g, x.f, x.r) < std::tie(y.a, y.g, y.f, y.r);
    };
    std::sort(out.d1.begin(), out.d1.end(), by_key);
    std::sort(out.d2.begin(), out.d2.end(), by_key);
    return out;
}

std::vector<PhiTriple> enumerate_triples(const PhiClass& p, long limit, long c_max) {
    if (limit < 1) throw PreconditionError("limit must be at least 1");
    std::vector<PhiTriple> out;
    const BigInt A(p.a), F(p.f), G(p.g), R(p.r);
    for (long c = 1; c <= c_max && static_cast<long>(out.size()) < limit; ++c) {
        const BigInt C(c);
        BigInt b_lo = (p.interval.lo * Rational(C)).floor();
        BigInt b_hi = (p.interval.hi * Rational(C)).ceil();
        for (BigInt b = std::max(b_lo, BigInt(1)); b <= b_hi && static_cast<long>(out.size()) < limit; ++b) {
            if (!p.interval.contains(Rational(b, C))) continue;
            Triple t{A, b, C};
            if (!pairwise_coprime(t)) continue;
            BigInt num = C * G - b * F;
            if (num <= 0 || num % A != 0) continue;
            BigInt e = num / A;
            if (gcd(gcd(e, F), G) != 1) continue;
            if (residue_r(A, b, e, F, G) != R) continue;
            Relation rel{A, b, C, e, F, G, R, Rational(C * G * G, A * b)};
            if (kind_of(relation_slopes(rel)) != p.kind)
                throw InternalError(t.str() + " sits in " + p.key() + " but its relation gives another class");
            Classification v = classify_triple(t);
            if ((p.kind == PhiKind::D1 && v.verdict == Verdict::MDS) ||
                (p.kind == PhiKind::D0 && v.verdict == Verdict::NotMDS))
                throw InternalError(t.str() + ": verdict " + verdict_name(v.verdict) + " contradicts class " +
                                    phi_kind_name(p.kind));
            out.push_back(PhiTriple{t, e, std::move(v)});
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// table formats

namespace {

PhiClass rebuild(long a, long f, long g, long r, PhiKind kind, const RhoInterval& iv) {
    check_params(a, f, g, r);
    PhiClass p = make_class(a, f, g, r, kind);
    p.interval = iv;
    return p;
}

long to_long_checked(const std::string& s) {
    try {
        std::size_t pos = 0;
        long v = std::stol(s, &pos);
        if (pos != s.size()) throw ParseError("bad integer '" + s + "'");
        return v;
    } catch (const std::logic_error&) {
        throw ParseError("bad integer '" + s + "'");
    }
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(cur);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

bool parse_bool(const std::string& s) {
    if (s == "1" || s == "true") return true;
    if (s == "0" || s == "false") return false;
    throw ParseError("bad flag '" + s + "'");
}

} // namespace

std::string table_markdown(const std::vector<PhiClass>& rows, PhiKind kind) {
    std::ostringstream os;
    os << "class: " << phi_kind_name(kind) << "\n\n";
    os << "| (a; f, g; r) | range of b/c |\n| --- | --- |\n";
    for (const auto& p : rows) {
        if (p.kind != kind) throw PreconditionError("row " + p.key() + " has another class");
        os << "| " << p.key() << " | " << p.interval.str() << " |\n";
    }
    return os.str();
}

std::vector<PhiClass> read_table_markdown(const std::string& text) {
    static const std::regex cls_re(R"(^class:\s*(\w+)\s*$)");
    static const std::regex row_re(R"(^\|\s*\((\d+);\s*(\d+),\s*(\d+);\s*(\d+)\)\s*\|\s*(.*?)\s*\|\s*$)");
    static const std::regex range_re(R"(^(\S+)\s*(<=?)\s*b/c\s*(<=?)\s*(\S+)$)");
    std::optional<PhiKind> kind;
    std::vector<PhiClass> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::smatch m;
        if (std::regex_match(line, m, cls_re)) {
            kind = parse_phi_kind(m[1]);
        } else if (std::regex_match(line, m, row_re)) {
            if (!kind) throw ParseError("table row before the class line");
            long a = to_long_checked(m[1]), f = to_long_checked(m[2]), g = to_long_checked(m[3]),
                 r = to_long_checked(m[4]);
            std::string range = m[5];
            RhoInterval iv;
            std::smatch rm;
            if (range == "All") {
                iv = full_range(a, f, g);
            } else if (std::regex_match(range, rm, range_re)) {
                iv.lo = Rational::parse(rm[1].str());
                iv.lo_closed = rm[2] == "<=";
                iv.hi_closed = rm[3] == "<=";
                iv.hi = Rational::parse(rm[4].str());
            } else {
                throw ParseError("bad range '" + range + "'");
            }
            out.push_back(rebuild(a, f, g, r, *kind, iv));
        } else if (!line.empty() && line.rfind("| (a;", 0) != 0 && line.rfind("| ---", 0) != 0) {
            throw ParseError("unexpected table line '" + line + "'");
        }
    }
    return out;
}

std::string table_csv(const std::vector<PhiClass>& rows) {
    std::ostringstream os;
    os << "a,f,g,r,class,lo,lo_closed,hi,hi_closed,all\n";
    for (const auto& p : rows)
        os << p.a << ',' << p.f << ',' << p.g << ',' << p.r << ',' << phi_kind_name(p.kind) << ',' << p.interval.lo
           << ',' << int(p.interval.lo_closed) << ',' << p.interval.hi << ',' << int(p.interval.hi_closed) << ','
           << int(p.interval.all) << '\n';
    return os.str();
}

std::vector<PhiClass> read_table_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "a,f,g,r,class,lo,lo_closed,hi,hi_closed,all")
        throw ParseError("missing table csv header");
    std::vector<PhiClass> out;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto f = split(line, ',');
        if (f.size() != 10) throw ParseError("table csv row needs 10 fields: '" + line + "'");
        RhoInterval iv;
        iv.lo = Rational::parse(f[5]);
        iv.lo_closed = parse_bool(f[6]);
        iv.hi = Rational::parse(f[7]);
        iv.hi_closed = parse_bool(f[8]);
        iv.all = parse_bool(f[9]);
        out.push_back(rebuild(to_long_checked(f[0]), to_long_checked(f[1]), to_long_checked(f[2]),
                              to_long_checked(f[3]), parse_phi_kind(f[4]), iv));
    }
    return out;
}

std::string table_json(const std::vector<PhiClass>& rows) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& p : rows) {
        nlohmann::ordered_json j;
        j["a"] = p.a;
        j["f"] = p.f;
        j["g"] = p.g;
        j["r"] = p.r;
        j["class"] = phi_kind_name(p.kind);
        j["range"] = p.interval.str();
        j["lo"] = p.interval.lo.str();
        j["lo_closed"] = p.interval.lo_closed;
        j["hi"] = p.interval.hi.str();
        j["hi_closed"] = p.interval.hi_closed;
        j["all"] = p.interval.all;
        j["divisibility"] = p.divisibility();
        j["condition4"] = p.c4;
        j["bisected"] = p.bisected;
        arr.push_back(j);
    }
    return arr.dump(2) + "\n";
}

std::vector<PhiClass> read_table_json(const std::string& text) {
    nlohmann::json arr;
    try {
        arr = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("table json: ") + e.what());
    }
    if (!arr.is_array()) throw ParseError("table json must be an array");
    std::vector<PhiClass> out;
    try {
        for (const auto& j : arr) {
            RhoInterval iv;
            iv.lo = Rational::parse(j.at("lo").get<std::string>());
            iv.lo_closed = j.at("lo_closed").get<bool>();
            iv.hi = Rational::parse(j.at("hi").get<std::string>());
            iv.hi_closed = j.at("hi_closed").get<bool>();
            iv.all = j.at("all").get<bool>();
            PhiClass p = rebuild(j.at("a").get<long>(), j.at("f").get<long>(), j.at("g").get<long>(),
                                 j.at("r").get<long>(), parse_phi_kind(j.at("class").get<std::string>()), iv);
            if (j.contains("condition4")) p.c4 = j["condition4"].get<bool>();
            if (j.contains("bisected")) p.bisected = j["bisected"].get<bool>();
            out.push_back(p);
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("table json: ") + e.what());
    }
    return out;
}

// ---------------------------------------------------------------------------
// grid

std::string grid_category_name(GridCategory c) {
    switch (c) {
    case GridCategory::BGtC:
        return "b-gt-c-excluded";
    case GridCategory::CutkoskyBig:
        return "cutkosky-big";
    case GridCategory::NotCoprime:
        return "not-coprime";
    case GridCategory::NoRelation:
        return "no-relation";
    case GridCategory::AnticanonicalBig:
        return "anticanonical-big";
    case GridCategory::GkNonexample:
        return "gk-nonexample";
    case GridCategory::Rest:
        return "rest";
    }
    return "rest";
}

GridCategory parse_grid_category(const std::string& text) {
    for (auto c : {GridCategory::BGtC, GridCategory::CutkoskyBig, GridCategory::NotCoprime, GridCategory::NoRelation,
                   GridCategory::AnticanonicalBig, GridCategory::GkNonexample, GridCategory::Rest})
        if (grid_category_name(c) == text) return c;
    throw ParseError("unknown grid category '" + text + "'");
}

namespace {

GridCell classify_cell(long a, long b, long c) {
    GridCell cell;
    cell.b = b;
    cell.c = c;
    Triple t{BigInt(a), BigInt(b), BigInt(c)};
    if (b > c) {
        cell.category = GridCategory::BGtC;
        return cell;
    }
    if (cutkosky_big(t)) {
        cell.category = GridCategory::CutkoskyBig;
        return cell;
    }
    if (!pairwise_coprime(t)) {
        cell.category = GridCategory::NotCoprime;
        return cell;
    }
    auto rels = find_relations(t);
    if (rels.empty()) {
        cell.category = GridCategory::NoRelation;
        return cell;
    }
    auto canon = *canonical_relation(rels);
    auto prof = column_profile(relation_slopes(canon));
    cell.d = prof.d;
    cell.d_min = prof.d_min;
    if (std::any_of(rels.begin(), rels.end(), [](const Relation& r) { return anticanonical_big(r); })) {
        cell.category = GridCategory::AnticanonicalBig;
        return cell;
    }
    for (const auto& r : rels) {
        Slopes s = relation_slopes(r);
        auto n = gk_pattern_match(s);
        if (n && !(Rational(*n) * s.s2).is_integer()) {
            cell.category = GridCategory::GkNonexample;
            cell.gk_n = *n;
            return cell;
        }
    }
    cell.category = GridCategory::Rest;
    return cell;
}

} // namespace

std::vector<GridCell> grid_classification(long a, long max_bc, unsigned threads) {
    if (a < 1) throw PreconditionError("a must be positive");
    if (max_bc < a) throw PreconditionError("max must be at least a");
    const long n = max_bc - a + 1;
    std::vector<GridCell> cells(static_cast<std::size_t>(n * n));
    parallel_for(
        cells.size(),
        [&](std::size_t i) {
            long b = a + static_cast<long>(i) / n, c = a + static_cast<long>(i) % n;
            cells[i] = classify_cell(a, b, c);
        },
        threads);
    return cells;
}

std::map<GridCategory, long> grid_counts(const std::vector<GridCell>& cells) {
    std::map<GridCategory, long> out;
    for (const auto& c : cells) ++out[c.category];
    return out;
}

std::string grid_csv(const std::vector<GridCell>& cells) {
    std::ostringstream os;
    os << "b,c,category,d,d_min,gk_n\n";
    for (const auto& c : cells) {
        os << c.b << ',' << c.c << ',' << grid_category_name(c.category) << ',';
        if (c.d) os << *c.d;
        os << ',';
        if (c.d_min) os << *c.d_min;
        os << ',' << c.gk_n << '\n';
    }
    return os.str();
}

std::vector<GridCell> read_grid_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "b,c,category,d,d_min,gk_n") throw ParseError("missing grid csv header");
    std::vector<GridCell> out;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto f = split(line, ',');
        if (f.size() != 6) throw ParseError("grid csv row needs 6 fields: '" + line + "'");
        GridCell c;
        c.b = to_long_checked(f[0]);
        c.c = to_long_checked(f[1]);
        c.category = parse_grid_category(f[2]);
        if (!f[3].empty()) c.d = to_long_checked(f[3]);
        if (!f[4].empty()) c.d_min = to_long_checked(f[4]);
        c.gk_n = to_long_checked(f[5]);
        out.push_back(c);
    }
    return out;
}

std::string grid_svg(const std::vector<GridCell>& cells, long a, long max_bc) {
    static const std::map<GridCategory, std::string> palette{
        {GridCategory::BGtC, "#ffffff"},          {GridCategory::CutkoskyBig, "#4575b4"},
        {GridCategory::NotCoprime, "#bdbdbd"},    {GridCategory::NoRelation, "#91bfdb"},
        {GridCategory::AnticanonicalBig, "#e0f3f8"}, {GridCategory::GkNonexample, "#d73027"},
        {GridCategory::Rest, "#fee090"}};
    const long unit = 10, n = max_bc - a + 1, margin = 40, legend = 190;
    const long side = n * unit;
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << side + 2 * margin + legend << "\" height=\""
       << side + 2 * margin << "\">\n";
    os << "<rect x=\"0\" y=\"0\" width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
    for (const auto& c : cells) {
        // b runs right, c runs up
        long x = margin + (c.b - a) * unit;
        long y = margin + (max_bc - c.c) * unit;
        os << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << unit << "\" height=\"" << unit << "\" fill=\""
           << palette.at(c.category) << "\" stroke=\"#999999\" stroke-width=\"0.2\"><title>(" << a << ',' << c.b
           << ',' << c.c << ") " << grid_category_name(c.category) << "</title></rect>\n";
    }
    os << "<text x=\"" << margin + side / 2 << "\" y=\"" << side + margin + 28 << "\" font-size=\"12\">b</text>\n";
    os << "<text x=\"12\" y=\"" << margin + side / 2 << "\" font-size=\"12\">c</text>\n";
    long ly = margin;
    for (const auto& [cat, color] : palette) {
        os << "<rect x=\"" << side + margin + 20 << "\" y=\"" << ly << "\" width=\"12\" height=\"12\" fill=\"" << color
           << "\" stroke=\"#000000\" stroke-width=\"0.5\"/>\n";
        os << "<text x=\"" << side + margin + 38 << "\" y=\"" << ly + 10 << "\" font-size=\"11\">"
           << grid_category_name(cat) << "</text>\n";
        ly += 18;
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace mdslab
