#pragma once

#include "mdslab/profile.hpp"
#include "mdslab/rational.hpp"
#include "mdslab/relation.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mdslab {

enum class Verdict { MDS, NotMDS, Unknown };

std::string verdict_name(Verdict v);

struct Classification {
    Verdict verdict = Verdict::Unknown;
    std::string rule;                // deciding statement
    std::vector<std::string> rules;  // every rule that applied, primary first
    std::string pattern;             // gk-pattern / main04-pattern when one matched
    long d = 0;
    long d_min = 0;
    std::optional<Slopes> slopes;
    std::optional<Rational> w;
    std::optional<BigInt> m;
    std::optional<BigInt> gamma;
    std::optional<Shape> shape;
    std::optional<Relation> relation;
    std::map<std::string, std::string> evidence;
    std::vector<std::string> warnings;
};

struct MainTwoCheck {
    bool c1 = false, c2 = false, c3 = false, c4 = false;
    bool d_zero_certified = false;
    bool d_nonzero_certified = false;
    BigInt gamma;
    std::optional<Rational> c2_max;     // unset when gamma = 1 or some r_t = t
    std::vector<long> c2_argmax;        // maximizing t in [1, gamma-1]
    std::optional<Rational> c2_bound;   // (2) reads s1 <= c2_bound
    Rational c3_bound;                  // (3) reads s1 <= c3_bound
};

/// The three sufficient conditions for d = 0 plus the converse hypothesis.
/// Throws InternalError if a certificate contradicts reduced_degree.
MainTwoCheck prop_main02_check(const Slopes& s);

/// n when the first left column has n points and the i-th right column
/// i+1 points (i < n), as given or after reflecting.
std::optional<long> gk_pattern_match(const Slopes& s);

/// 5, 7 or 9 when some shear (and possibly a reflection) puts the slopes
/// inside the matching inequality system.
std::optional<long> main04_pattern_match(const Slopes& s);

/// d' * s2 in Z
bool dprime_s2_integral(const Slopes& s, long dprime);

Classification classify_slopes(const Slopes& s);

Classification classify_triple(const Triple& t);

} // namespace mdslab
