#include "mdslab/relation.hpp"

#include "mdslab/combinatorics.hpp"
#include "mdslab/error.hpp"

#include <algorithm>
#include <array>
#include <tuple>

namespace mdslab {

Triple Triple::parse(std::string_view text) {
    std::vector<std::string_view> parts;
    size_t start = 0;
    for (;;) {
        size_t comma = text.find(',', start);
        parts.push_back(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    if (parts.size() != 3) throw ParseError("expected a triple 'a,b,c', got '" + std::string(text) + "'");
    Triple t{parse_bigint(parts[0]), parse_bigint(parts[1]), parse_bigint(parts[2])};
    if (t.a <= 0 || t.b <= 0 || t.c <= 0) throw ParseError("weights must be positive: " + std::string(text));
    return t;
}

std::string Triple::str() const { return a.get_str() + "," + b.get_str() + "," + c.get_str(); }

bool pairwise_coprime(const Triple& t) {
    return gcd(t.a, t.b) == 1 && gcd(t.a, t.c) == 1 && gcd(t.b, t.c) == 1;
}

Relation Relation::mirror() const { return Relation{b, a, c, f, e, g, g - r == 0 ? g : g - r, w}; }

namespace {

// Solutions of x*r = y (mod g), as a congruence r = res (mod mod).
std::pair<BigInt, BigInt> linear_congruence(const BigInt& x, const BigInt& y, const BigInt& g) {
    BigInt d = gcd(x, g);
    if (y % d != 0) throw InternalError("no residue r: congruence has no solution");
    BigInt mod = g / d;
    if (mod == 1) return {0, 1};
    BigInt xr = x / d, yr = y / d;
    BigInt xm = xr - floor_div(xr, mod) * mod;
    BigInt inv;
    if (mpz_invert(inv.get_mpz_t(), xm.get_mpz_t(), mod.get_mpz_t()) == 0)
        throw InternalError("no inverse in residue computation");
    BigInt res = yr * inv;
    res -= floor_div(res, mod) * mod;
    return {res, mod};
}

} // namespace

BigInt residue_r(const BigInt& a, const BigInt& b, const BigInt& e, const BigInt& f, const BigInt& g) {
    if (g <= 0) throw PreconditionError("g must be positive");
    auto c1 = linear_congruence(e, b, g);
    auto c2 = linear_congruence(f, BigInt(-a), g);
    auto sol = crt_solve({c1, c2});
    if (!sol) throw InternalError("residue congruences are inconsistent");
    BigInt L = lcm(c1.second, c2.second);
    if (L != g) throw InternalError("residue r is not unique modulo g");
    BigInt r = *sol;
    if (r == 0) r = g;
    return r;
}

Slopes relation_slopes(const Relation& rel) {
    Rational eg(rel.e * rel.g), fg(rel.f * rel.g);
    Slopes s{Rational(rel.e * rel.r - rel.b) / eg, Rational(rel.r, rel.g), Rational(rel.f * rel.r + rel.a) / fg};
    Rational expect(rel.c * rel.g * rel.g, rel.a * rel.b);
    if (width(s) != expect) throw InternalError("relation slopes have width " + width(s).str() + ", expected " + expect.str());
    return s;
}

std::vector<Relation> find_relations(const Triple& t) {
    if (!pairwise_coprime(t)) throw PreconditionError("weights " + t.str() + " are not pairwise coprime");
    std::vector<Relation> out;
    const std::array<BigInt, 3> w{t.a, t.b, t.c};
    const std::array<std::array<int, 3>, 6> perms{{{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 0, 1}, {1, 2, 0}, {2, 1, 0}}};
    for (const auto& pm : perms) {
        const BigInt &A = w[pm[0]], &B = w[pm[1]], &C = w[pm[2]];
        BigInt inv = 0;
        if (B > 1 && mpz_invert(inv.get_mpz_t(), BigInt(A % B).get_mpz_t(), B.get_mpz_t()) == 0)
            throw InternalError("weights not coprime");
        for (BigInt g = 1; C * g * g < A * B; ++g) {
            BigInt e0 = 0;
            if (B > 1) {
                e0 = (C * g % B) * inv % B;
            }
            if (e0 <= 0) e0 += B;
            for (BigInt e = e0; A * e < C * g; e += B) {
                BigInt f = (C * g - A * e) / B;
                if (f < 1) continue;
                if (gcd(gcd(e, f), g) != 1) continue;
                Relation rel{A, B, C, e, f, g, residue_r(A, B, e, f, g), Rational(C * g * g, A * B)};
                out.push_back(rel);
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const Relation& x, const Relation& y) {
        return std::tie(x.g, x.e, x.f, x.a, x.b, x.c) < std::tie(y.g, y.e, y.f, y.a, y.b, y.c);
    });
    return out;
}

std::optional<Relation> canonical_relation(const std::vector<Relation>& rels) {
    if (rels.empty()) return std::nullopt;
    return *std::min_element(rels.begin(), rels.end(), [](const Relation& x, const Relation& y) {
        return std::tie(x.g, x.e, x.f, x.a, x.b) < std::tie(y.g, y.e, y.f, y.a, y.b);
    });
}

bool essentially_different(const Relation& x, const Relation& y) {
    auto same = [](const Relation& p, const Relation& q) {
        return p.a == q.a && p.b == q.b && p.c == q.c && p.e == q.e && p.f == q.f && p.g == q.g;
    };
    return !same(x, y) && !same(x.mirror(), y);
}

Rational ratio_to_s1(const BigInt& a, const BigInt& f, const BigInt& g, const BigInt& r, const Rational& rho) {
    Rational gr(g);
    Rational denom = gr * (gr - Rational(f) * rho);
    if (denom.is_zero()) throw PoleError("ratio_to_s1: f*rho equals g");
    return Rational(r, g) - Rational(a) * rho / denom;
}

bool cutkosky_big(const Triple& t) {
    BigInt s = t.a + t.b + t.c;
    return s * s > t.a * t.b * t.c;
}

bool anticanonical_big(const Relation& rel) { return rel.c * rel.g < rel.a + rel.b + rel.c; }

} // namespace mdslab
