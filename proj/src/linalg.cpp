#include "mdslab/linalg.hpp"

#include "mdslab/error.hpp"

#include <utility>

namespace mdslab {

namespace {

// One Bareiss step on row i against pivot row r, columns [c+1, ncols).
// row_i[j] = (piv * row_i[j] - row_i[c] * row_r[j]) / prev
void bareiss_update(std::vector<BigInt>& ri, const std::vector<BigInt>& rr, std::size_t c,
                    const BigInt& prev, BigInt& tmp) {
    const BigInt& piv = rr[c];
    const BigInt lead = ri[c];
    const std::size_t n = ri.size();
    for (std::size_t j = c + 1; j < n; ++j) {
        mpz_mul(ri[j].get_mpz_t(), ri[j].get_mpz_t(), piv.get_mpz_t());
        mpz_mul(tmp.get_mpz_t(), lead.get_mpz_t(), rr[j].get_mpz_t());
        mpz_sub(ri[j].get_mpz_t(), ri[j].get_mpz_t(), tmp.get_mpz_t());
        if (prev != 1) mpz_divexact(ri[j].get_mpz_t(), ri[j].get_mpz_t(), prev.get_mpz_t());
    }
    ri[c] = 0;
}

} // namespace

BigInt det_bareiss(IntMatrix m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw PreconditionError("determinant of a non-square matrix");
    if (n == 0) return 1;
    BigInt prev = 1, tmp;
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && m[p][k] == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            std::swap(m[p], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m[i][k] == 0) {
                // still must rescale: row_i = piv*row_i / prev
                for (std::size_t j = k + 1; j < n; ++j) {
                    mpz_mul(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), m[k][k].get_mpz_t());
                    if (prev != 1) mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
                }
                continue;
            }
            bareiss_update(m[i], m[k], k, prev, tmp);
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : BigInt(-m[n - 1][n - 1]);
}

Rational det_rational(const RatMatrix& m) {
    const std::size_t n = m.size();
    IntMatrix im(n);
    BigInt scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) throw PreconditionError("determinant of a non-square matrix");
        BigInt l = 1;
        for (const auto& x : m[i]) l = lcm(l, x.den());
        scale *= l;
        im[i].reserve(n);
        for (const auto& x : m[i]) im[i].push_back(x.num() * (l / x.den()));
    }
    return Rational(det_bareiss(std::move(im)), scale);
}

namespace {

// Echelonizes rows[0..nbase) in place; extra rows after nbase are reduced
// alongside but never chosen as pivots. Returns the rank of the base rows.
std::size_t echelon(IntMatrix& m, std::size_t nbase) {
    if (m.empty()) return 0;
    const std::size_t ncols = m.front().size();
    BigInt prev = 1, tmp;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < nbase; ++c) {
        std::size_t p = r;
        while (p < nbase && m[p][c] == 0) ++p;
        if (p == nbase) continue;
        if (p != r) std::swap(m[p], m[r]);
        for (std::size_t i = r + 1; i < m.size(); ++i) {
            if (m[i][c] == 0) {
                for (std::size_t j = c + 1; j < ncols; ++j) {
                    if (m[i][j] == 0) continue;
                    mpz_mul(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), m[r][c].get_mpz_t());
                    if (prev != 1) mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
                }
                continue;
            }
            bareiss_update(m[i], m[r], c, prev, tmp);
        }
        prev = m[r][c];
        ++r;
    }
    return r;
}

} // namespace

std::size_t rank_bareiss(IntMatrix m) {
    std::size_t n = m.size();
    return echelon(m, n);
}

namespace {

void make_primitive(std::vector<BigInt>& row, std::size_t from) {
    BigInt g = 0;
    for (std::size_t j = from; j < row.size(); ++j) {
        if (row[j] == 0) continue;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), row[j].get_mpz_t());
        if (g == 1) return;
    }
    if (g <= 1) return;
    for (std::size_t j = from; j < row.size(); ++j)
        if (row[j] != 0) mpz_divexact(row[j].get_mpz_t(), row[j].get_mpz_t(), g.get_mpz_t());
}

// Integer elimination that only touches rows with a nonzero lead and keeps
// every row primitive. Row spaces over Q are unchanged at each step.
std::size_t echelon_primitive(IntMatrix& m, std::size_t nbase) {
    if (m.empty()) return 0;
    const std::size_t ncols = m.front().size();
    for (auto& row : m) make_primitive(row, 0);
    BigInt tmp, a, b, g;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < nbase; ++c) {
        // smallest nonzero lead as pivot keeps growth down
        std::size_t p = nbase;
        for (std::size_t i = r; i < nbase; ++i)
            if (m[i][c] != 0 && (p == nbase || mpz_cmpabs(m[i][c].get_mpz_t(), m[p][c].get_mpz_t()) < 0)) p = i;
        if (p == nbase) continue;
        if (p != r) std::swap(m[p], m[r]);
        const auto& pr = m[r];
        for (std::size_t i = r + 1; i < m.size(); ++i) {
            auto& ri = m[i];
            if (ri[c] == 0) continue;
            mpz_gcd(g.get_mpz_t(), pr[c].get_mpz_t(), ri[c].get_mpz_t());
            mpz_divexact(a.get_mpz_t(), pr[c].get_mpz_t(), g.get_mpz_t());
            mpz_divexact(b.get_mpz_t(), ri[c].get_mpz_t(), g.get_mpz_t());
            for (std::size_t j = c + 1; j < ncols; ++j) {
                if (pr[j] == 0) {
                    if (ri[j] != 0) mpz_mul(ri[j].get_mpz_t(), ri[j].get_mpz_t(), a.get_mpz_t());
                    continue;
                }
                mpz_mul(ri[j].get_mpz_t(), ri[j].get_mpz_t(), a.get_mpz_t());
                mpz_mul(tmp.get_mpz_t(), b.get_mpz_t(), pr[j].get_mpz_t());
                mpz_sub(ri[j].get_mpz_t(), ri[j].get_mpz_t(), tmp.get_mpz_t());
            }
            ri[c] = 0;
            make_primitive(ri, c + 1);
        }
        ++r;
    }
    return r;
}

} // namespace

SpanTest span_test(IntMatrix rows, std::vector<BigInt> extra) {
    const std::size_t nbase = rows.size();
    if (!rows.empty() && rows.front().size() != extra.size())
        throw PreconditionError("span_test: column count mismatch");
    rows.push_back(std::move(extra));
    SpanTest out;
    out.rank = echelon_primitive(rows, nbase);
    out.in_span = true;
    for (const auto& x : rows.back())
        if (x != 0) {
            out.in_span = false;
            break;
        }
    return out;
}

std::vector<Rational> mat_vec(const RatMatrix& a, const std::vector<Rational>& x) {
    std::vector<Rational> out;
    out.reserve(a.size());
    for (const auto& row : a) {
        if (row.size() != x.size()) throw PreconditionError("mat_vec: size mismatch");
        Rational acc = 0;
        for (std::size_t j = 0; j < row.size(); ++j) acc += row[j] * x[j];
        out.push_back(acc);
    }
    return out;
}

} // namespace mdslab
