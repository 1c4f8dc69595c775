#include "mdslab/bivariate.hpp"

#include "mdslab/combinatorics.hpp"
#include "mdslab/error.hpp"
#include "mdslab/parallel.hpp"

#include <algorithm>
#include <sstream>

namespace mdslab {

BivariatePoly BivariatePoly::constant(const Rational& c) {
    BivariatePoly p;
    p.add_term(0, 0, c);
    return p;
}

BivariatePoly BivariatePoly::var_a() {
    BivariatePoly p;
    p.add_term(1, 0, 1);
    return p;
}

BivariatePoly BivariatePoly::var_b() {
    BivariatePoly p;
    p.add_term(0, 1, 1);
    return p;
}

BivariatePoly BivariatePoly::linear(const Rational& p, const Rational& q, const Rational& r) {
    BivariatePoly out;
    out.add_term(1, 0, p);
    out.add_term(0, 1, q);
    out.add_term(0, 0, r);
    return out;
}

void BivariatePoly::add_term(int i, int j, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find({i, j});
    if (it == terms_.end()) {
        terms_.emplace(Key{i, j}, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Rational BivariatePoly::coeff(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? Rational(0) : it->second;
}

int BivariatePoly::deg_a() const {
    int d = terms_.empty() ? -1 : 0;
    for (const auto& [k, c] : terms_) d = std::max(d, k.first);
    return d;
}

int BivariatePoly::deg_b() const {
    int d = terms_.empty() ? -1 : 0;
    for (const auto& [k, c] : terms_) d = std::max(d, k.second);
    return d;
}

int BivariatePoly::total_degree() const {
    int d = terms_.empty() ? -1 : 0;
    for (const auto& [k, c] : terms_) d = std::max(d, k.first + k.second);
    return d;
}

Rational BivariatePoly::eval(const Rational& a, const Rational& b) const {
    // Horner in A for each power of B, then Horner in B.
    int db = deg_b();
    if (db < 0) return 0;
    Rational acc = 0;
    for (int j = db; j >= 0; --j) {
        auto ca = coeff_in_a(j);
        Rational inner = 0;
        for (size_t i = ca.size(); i-- > 0;) inner = inner * a + ca[i];
        acc = acc * b + inner;
    }
    return acc;
}

std::vector<Rational> BivariatePoly::coeff_in_a(int j) const {
    std::vector<Rational> out(std::max(deg_a(), 0) + 1, Rational(0));
    for (const auto& [k, c] : terms_)
        if (k.second == j) out[k.first] = c;
    while (out.size() > 1 && out.back().is_zero()) out.pop_back();
    return out;
}

std::vector<Rational> BivariatePoly::coeff_in_b(int i) const {
    std::vector<Rational> out(std::max(deg_b(), 0) + 1, Rational(0));
    for (const auto& [k, c] : terms_)
        if (k.first == i) out[k.second] = c;
    while (out.size() > 1 && out.back().is_zero()) out.pop_back();
    return out;
}

BivariatePoly& BivariatePoly::operator+=(const BivariatePoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
}

BivariatePoly& BivariatePoly::operator-=(const BivariatePoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
    return *this;
}

BivariatePoly& BivariatePoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
}

BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) {
    BivariatePoly out;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_)
            out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return out;
}

BivariatePoly BivariatePoly::pow(int e) const {
    BivariatePoly out = constant(1);
    for (int i = 0; i < e; ++i) out = out * *this;
    return out;
}

namespace {

std::vector<std::pair<BivariatePoly::Key, Rational>> ordered_terms(
    const std::map<BivariatePoly::Key, Rational>& terms) {
    std::vector<std::pair<BivariatePoly::Key, Rational>> v(terms.begin(), terms.end());
    std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) {
        int dx = x.first.first + x.first.second, dy = y.first.first + y.first.second;
        if (dx != dy) return dx > dy;
        return x.first.first > y.first.first;
    });
    return v;
}

} // namespace

Rational BivariatePoly::leading_coeff() const {
    if (terms_.empty()) return 0;
    return ordered_terms(terms_).front().second;
}

std::string BivariatePoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : ordered_terms(terms_)) {
        bool neg = c.sign() < 0;
        Rational mag = c.abs();
        if (neg) os << '-';
        else if (!first) os << '+';
        first = false;
        bool mono = k.first > 0 || k.second > 0;
        if (!mono || mag != Rational(1)) os << mag.str();
        if (k.first > 0) {
            os << 'A';
            if (k.first > 1) os << '^' << k.first;
        }
        if (k.second > 0) {
            os << 'B';
            if (k.second > 1) os << '^' << k.second;
        }
    }
    return os.str();
}

std::vector<Rational> interpolate_consecutive(const std::vector<Rational>& values, long x0) {
    if (values.empty()) return {};
    const long n = static_cast<long>(values.size()) - 1;
    BigInt scale = 1;
    for (const auto& v : values) scale = lcm(scale, v.den());
    std::vector<BigInt> d(values.size());
    for (size_t i = 0; i < values.size(); ++i) d[i] = values[i].num() * (scale / values[i].den());
    // forward differences: d[k] becomes Delta^k f(x0)
    for (long k = 1; k <= n; ++k)
        for (long i = n; i >= k; --i) d[i] -= d[i - 1];

    // Q(x) = sum_k d[k] * (n!/k!) * prod_{i<k} (x - x0 - i); answer is Q / (n! * scale).
    std::vector<BigInt> q(n + 1, 0);
    std::vector<BigInt> basis{1};  // prod_{i<k}(x - x0 - i)
    BigInt nfact = factorial(n);
    BigInt ratio = nfact;  // n!/k!
    for (long k = 0; k <= n; ++k) {
        if (k > 0) {
            BigInt shift = BigInt(x0 + k - 1);
            std::vector<BigInt> next(basis.size() + 1, 0);
            for (size_t i = 0; i < basis.size(); ++i) {
                next[i + 1] += basis[i];
                next[i] -= shift * basis[i];
            }
            basis = std::move(next);
            ratio /= BigInt(k);
        }
        if (d[k] != 0) {
            BigInt mult = d[k] * ratio;
            for (size_t i = 0; i < basis.size(); ++i) q[i] += mult * basis[i];
        }
    }
    BigInt denom = nfact * scale;
    std::vector<Rational> out;
    out.reserve(q.size());
    for (auto& c : q) out.emplace_back(c, denom);
    return out;
}

BivariatePoly bivariate_reconstruct(const BivariateOracle& oracle, int deg_a, int deg_b,
                                    const ReconstructOptions& opts) {
    if (deg_a < 0 || deg_b < 0) throw PreconditionError("degree bounds must be nonnegative");
    long oa = opts.origin_a, ob = opts.origin_b;
    const size_t na = deg_a + 1, nb = deg_b + 1;
    std::vector<Rational> grid;
    for (int attempt = 0;; ++attempt) {
        grid.assign(na * nb, Rational(0));
        try {
            parallel_for(
                na * nb,
                [&](size_t idx) {
                    size_t i = idx % na, j = idx / na;
                    grid[idx] = oracle(Rational(oa + static_cast<long>(i)), Rational(ob + static_cast<long>(j)));
                },
                opts.threads);
            break;
        } catch (const PoleError&) {
            if (attempt + 1 >= opts.max_shifts) throw;
            oa += static_cast<long>(na) + 1;
            ob += static_cast<long>(nb) + 1;
        }
    }

    std::vector<std::vector<Rational>> by_b(nb);
    for (size_t j = 0; j < nb; ++j) {
        std::vector<Rational> row(grid.begin() + j * na, grid.begin() + (j + 1) * na);
        by_b[j] = interpolate_consecutive(row, oa);
    }
    BivariatePoly out;
    for (size_t i = 0; i < na; ++i) {
        std::vector<Rational> col(nb);
        for (size_t j = 0; j < nb; ++j) col[j] = by_b[j][i];
        auto cb = interpolate_consecutive(col, ob);
        for (size_t j = 0; j < cb.size(); ++j) out.add_term(static_cast<int>(i), static_cast<int>(j), cb[j]);
    }

    // Self-check away from the grid.
    for (long probe = 0; probe < 6; ++probe) {
        Rational a(oa + static_cast<long>(na) + 2 + probe), b(ob - 3 - 2 * probe);
        Rational expect;
        try {
            expect = oracle(a, b);
        } catch (const PoleError&) {
            continue;
        }
        if (out.eval(a, b) != expect)
            throw ReconstructionError("reconstruction mismatch at (" + a.str() + "," + b.str() + ")");
        return out;
    }
    throw ReconstructionError("no pole-free verification point found");
}

// ---------------------------------------------------------------------------
// factoring helpers

namespace {

std::vector<BigInt> small_divisors(const BigInt& n, long bound) {
    std::vector<BigInt> out;
    BigInt a = abs(n);
    if (a == 0) return out;
    for (long d = 1; d <= bound; ++d) {
        if (BigInt(d) > a) break;
        if (mpz_divisible_ui_p(a.get_mpz_t(), static_cast<unsigned long>(d))) out.emplace_back(d);
    }
    return out;
}

std::vector<BigInt> integerize(const std::vector<Rational>& poly) {
    BigInt l = 1;
    for (const auto& c : poly) l = lcm(l, c.den());
    std::vector<BigInt> out;
    for (const auto& c : poly) out.push_back(c.num() * (l / c.den()));
    return out;
}

bool is_root(const std::vector<BigInt>& poly, const BigInt& p, const BigInt& q) {
    // q^n * u(p/q) with Horner
    BigInt acc = 0;
    BigInt qpow = 1;
    const size_t n = poly.size() - 1;
    // evaluate sum a_i p^i q^(n-i)
    for (size_t i = poly.size(); i-- > 0;) {
        acc = acc * p + poly[i] * qpow;
        if (i > 0) qpow *= q;
    }
    (void)n;
    return acc == 0;
}

std::vector<Rational> rational_roots(const std::vector<Rational>& u) {
    std::vector<Rational> roots;
    auto a = integerize(u);
    while (a.size() > 1 && a.back() == 0) a.pop_back();
    if (a.size() <= 1) return roots;
    size_t low = 0;
    while (low < a.size() && a[low] == 0) ++low;
    if (low > 0) roots.emplace_back(0);
    std::vector<BigInt> b(a.begin() + low, a.end());
    if (b.size() <= 1) return roots;
    constexpr long kBound = 20000;
    auto ps = small_divisors(b.front(), kBound);
    auto qs = small_divisors(b.back(), kBound);
    for (const auto& q : qs)
        for (const auto& p : ps) {
            if (gcd(p, q) != 1) continue;
            for (int s : {1, -1}) {
                BigInt sp = p * s;
                if (is_root(b, sp, q)) roots.emplace_back(sp, q);
            }
        }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

// Divides p by (X - c) where X is A (in_a) or B; empty optional if not exact.
bool divide_linear(const BivariatePoly& p, const Rational& c, bool in_a, BivariatePoly& quotient) {
    BivariatePoly q;
    int outer = in_a ? p.deg_b() : p.deg_a();
    for (int j = 0; j <= outer; ++j) {
        auto u = in_a ? p.coeff_in_a(j) : p.coeff_in_b(j);
        // synthetic division of u by (x - c)
        std::vector<Rational> quo(u.size() > 1 ? u.size() - 1 : 0, Rational(0));
        Rational carry = 0;
        for (size_t i = u.size(); i-- > 0;) {
            Rational cur = u[i] + carry * c;
            if (i == 0) {
                if (!cur.is_zero()) return false;
            } else {
                quo[i - 1] = cur;
            }
            carry = cur;
        }
        for (size_t i = 0; i < quo.size(); ++i) {
            if (in_a) q.add_term(static_cast<int>(i), j, quo[i]);
            else q.add_term(j, static_cast<int>(i), quo[i]);
        }
    }
    quotient = std::move(q);
    return true;
}

Rational content_of(const BivariatePoly& p) {
    BigInt g = 0, l = 1;
    for (const auto& [k, c] : p.terms()) {
        g = gcd(g, c.num());
        l = lcm(l, c.den());
    }
    if (g == 0) return 0;
    return Rational(g, l);
}

std::vector<Rational> candidate_roots(const BivariatePoly& p, bool in_a) {
    int outer = in_a ? p.deg_b() : p.deg_a();
    const std::vector<Rational>* best = nullptr;
    std::vector<std::vector<Rational>> polys;
    for (int j = 0; j <= outer; ++j) polys.push_back(in_a ? p.coeff_in_a(j) : p.coeff_in_b(j));
    for (const auto& u : polys) {
        bool zero = u.size() == 1 && u[0].is_zero();
        if (zero) continue;
        if (u.size() == 1) return {};  // nonzero constant coefficient: no roots possible
        if (!best || u.size() < best->size()) best = &u;
    }
    if (!best) return {};
    return rational_roots(*best);
}

} // namespace

FactoredPoly factor_linear(const BivariatePoly& p) {
    FactoredPoly out;
    if (p.is_zero()) {
        out.content = 0;
        return out;
    }
    BivariatePoly rest = p;
    struct Found {
        Rational root;
        bool in_a;
        int mult;
    };
    std::vector<Found> found;
    for (bool in_a : {true, false}) {
        for (const auto& c : candidate_roots(rest, in_a)) {
            int mult = 0;
            BivariatePoly q;
            while (divide_linear(rest, c, in_a, q)) {
                rest = std::move(q);
                ++mult;
            }
            if (mult > 0) found.push_back({c, in_a, mult});
        }
    }
    // (X - p/q) = (qX - p)/q, so fold 1/q^mult into the content.
    Rational scale = 1;
    std::stable_sort(found.begin(), found.end(), [](const Found& x, const Found& y) {
        if (x.in_a != y.in_a) return x.in_a;
        return x.root > y.root;
    });
    for (const auto& f : found) {
        BigInt qd = f.root.den(), pn = f.root.num();
        BivariatePoly lin = f.in_a ? BivariatePoly::linear(Rational(qd), 0, Rational(BigInt(-pn)))
                                   : BivariatePoly::linear(0, Rational(qd), Rational(BigInt(-pn)));
        for (int i = 0; i < f.mult; ++i) scale /= Rational(qd);
        out.factors.push_back({lin, f.mult});
    }
    Rational c = content_of(rest);
    BivariatePoly prim = rest * (Rational(1) / c);
    if (prim.leading_coeff().sign() < 0) {
        c = -c;
        prim *= Rational(-1);
    }
    out.content = c * scale;
    if (!(prim == BivariatePoly::constant(1))) out.factors.push_back({prim, 1});
    return out;
}

BivariatePoly FactoredPoly::expand() const {
    BivariatePoly acc = BivariatePoly::constant(content);
    for (const auto& f : factors) acc = acc * f.poly.pow(f.multiplicity);
    return acc;
}

std::string format_factored_integer(const BigInt& n) {
    if (n == 0) return "0";
    std::ostringstream os;
    BigInt a = abs(n);
    if (n < 0) os << '-';
    if (a == 1) {
        os << '1';
        return os.str();
    }
    bool first = true;
    auto emit = [&](const std::string& base, long e) {
        if (!first) os << '*';
        first = false;
        os << base;
        if (e > 1) os << '^' << e;
    };
    for (long p = 2; p <= 1000000 && a > 1; ++p) {
        if (BigInt(p) * BigInt(p) > a) break;
        long e = 0;
        while (mpz_divisible_ui_p(a.get_mpz_t(), static_cast<unsigned long>(p))) {
            a /= BigInt(p);
            ++e;
        }
        if (e > 0) emit(std::to_string(p), e);
    }
    if (a > 1) emit(a.get_str(), 1);
    return os.str();
}

std::string FactoredPoly::content_str() const {
    if (content.is_integer()) return format_factored_integer(content.num());
    std::string num = format_factored_integer(content.num());
    return "(" + num + ")/(" + format_factored_integer(content.den()) + ")";
}

std::string FactoredPoly::str() const {
    std::ostringstream os;
    os << content_str();
    for (const auto& f : factors) {
        os << '*';
        const auto& t = f.poly.terms();
        bool bare = t.size() == 1 && t.begin()->second == Rational(1) &&
                    t.begin()->first.first + t.begin()->first.second == 1;
        if (bare) os << f.poly.str();
        else os << '(' << f.poly.str() << ')';
        if (f.multiplicity > 1) os << '^' << f.multiplicity;
    }
    return os.str();
}

} // namespace mdslab
