#pragma once

#include "mdslab/classifier.hpp"
#include "mdslab/rational.hpp"
#include "mdslab/relation.hpp"

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mdslab {

enum class PhiKind { D0, D1, Ge2 };

std::string phi_kind_name(PhiKind k);  // d0, d1, ge2
PhiKind parse_phi_kind(const std::string& text);

// Interval of rho = b/c; endpoints are always finite here.
struct RhoInterval {
    Rational lo, hi;
    bool lo_closed = false, hi_closed = false;
    bool all = false;  // the whole w < 1 range (g^2/a, g/f)

    bool contains(const Rational& rho) const;
    bool empty() const;
    /// "4/5 < b/c < 17/21", or "All"
    std::string str() const;
    friend bool operator==(const RhoInterval&, const RhoInterval&) = default;
};

struct PhiClass {
    long a = 0, f = 0, g = 0, r = 0;
    PhiKind kind = PhiKind::Ge2;
    RhoInterval interval;
    Rational s2, s3;
    bool c4 = true;         // condition (4) held; thresholds are closed form
    bool bisected = false;  // d0 boundary found by direct search instead
    bool realizable = true; // some pairwise coprime triple satisfies the congruences

    /// "(5; 1, 2; 1)"
    std::string key() const;
    /// "5 | 2c - b"
    std::string divisibility() const;
    friend bool operator==(const PhiClass& x, const PhiClass& y) {
        return x.a == y.a && x.f == y.f && x.g == y.g && x.r == y.r && x.kind == y.kind && x.interval == y.interval;
    }
};

/// Minimal degree class of one slope triple: 0 -> d0, 1 -> d1, else ge2.
PhiKind kind_of(const Slopes& s);

/// Slopes of the class at rho. Requires rho strictly inside (g^2/a, g/f).
Slopes phi_slopes(long a, long f, long g, long r, const Rational& rho);

/// Interval for one class, or empty when no triple can land in it.
/// Throws PreconditionError on parameters that do not describe a class.
std::optional<PhiClass> phi_interval(long a, long f, long g, long r, PhiKind kind, bool verify = true);

/// Re-derives the class at sample rhos inside the interval and just past
/// each endpoint; throws InternalError on a mismatch.
void verify_phi_class(const PhiClass& p, int samples = 20);

struct PhiTables {
    std::vector<PhiClass> d1;
    std::vector<PhiClass> d2;
};

/// Every nonempty d1 and ge2 class with 5 <= a <= a_max, sorted by (a, g, f, r).
PhiTables generate_tables(long a_max, bool verify = true, unsigned threads = 0);

struct PhiTriple {
    Triple t;
    BigInt e;
    Classification verdict;
};

/// Triples of the class ordered by c then b. Each one is pushed through
/// classify_triple; InternalError if the verdict contradicts the class.
std::vector<PhiTriple> enumerate_triples(const PhiClass& p, long limit, long c_max = 1000000);

// Table output; all formats read back with the matching reader.
std::string table_markdown(const std::vector<PhiClass>& rows, PhiKind kind);
std::string table_csv(const std::vector<PhiClass>& rows);
std::string table_json(const std::vector<PhiClass>& rows);
std::vector<PhiClass> read_table_markdown(const std::string& text);
std::vector<PhiClass> read_table_csv(const std::string& text);
std::vector<PhiClass> read_table_json(const std::string& text);

enum class GridCategory { BGtC, CutkoskyBig, NotCoprime, NoRelation, AnticanonicalBig, GkNonexample, Rest };

std::string grid_category_name(GridCategory c);
GridCategory parse_grid_category(const std::string& text);

struct GridCell {
    long b = 0, c = 0;
    GridCategory category = GridCategory::Rest;
    std::optional<long> d, d_min;  // canonical relation, when there is one
    long gk_n = 0;                 // gk-nonexample only
    friend bool operator==(const GridCell&, const GridCell&) = default;
};

/// Every (b, c) with a <= b, c <= max_bc, row-major in b then c.
std::vector<GridCell> grid_classification(long a, long max_bc, unsigned threads = 0);

std::map<GridCategory, long> grid_counts(const std::vector<GridCell>& cells);

std::string grid_csv(const std::vector<GridCell>& cells);
std::vector<GridCell> read_grid_csv(const std::string& text);
std::string grid_svg(const std::vector<GridCell>& cells, long a, long max_bc);

} // namespace mdslab
