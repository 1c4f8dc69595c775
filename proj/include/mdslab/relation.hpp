#pragma once

#include "mdslab/profile.hpp"
#include "mdslab/rational.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mdslab {

// Weights of P(a, b, c).
struct Triple {
    BigInt a, b, c;

    /// "a,b,c" with positive integers.
    static Triple parse(std::string_view text);
    std::string str() const;
    friend bool operator==(const Triple&, const Triple&) = default;
};

bool pairwise_coprime(const Triple& t);

// a e + b f = c g with gcd(e, f, g) = 1 and w = c g^2 / (a b) < 1.
struct Relation {
    BigInt a, b, c;
    BigInt e, f, g;
    BigInt r;  // 1 <= r <= g with g | e r - b and g | f r + a
    Rational w;

    /// Same relation read with the first two weights swapped.
    Relation mirror() const;
    friend bool operator==(const Relation&, const Relation&) = default;
};

/// Residue r from the reduced congruences e r = b and f r = -a (mod g).
BigInt residue_r(const BigInt& a, const BigInt& b, const BigInt& e, const BigInt& f, const BigInt& g);

/// Every relation with w < 1 over all orderings; mirrors both appear.
std::vector<Relation> find_relations(const Triple& t);

/// Lexicographically least (g, e, f); empty if there is none.
std::optional<Relation> canonical_relation(const std::vector<Relation>& rels);

/// True when two relations are not mirrors of each other.
bool essentially_different(const Relation& x, const Relation& y);

/// s1 = (e r - b)/(e g), s2 = r/g, s3 = (f r + a)/(f g); checks the width.
Slopes relation_slopes(const Relation& rel);

/// s1 as a function of rho = b/c inside the class (a; f, g; r).
Rational ratio_to_s1(const BigInt& a, const BigInt& f, const BigInt& g, const BigInt& r, const Rational& rho);

/// (a + b + c)^2 > a b c
bool cutkosky_big(const Triple& t);
/// c g < a + b + c
bool anticanonical_big(const Relation& rel);

} // namespace mdslab
