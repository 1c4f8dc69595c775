#include "mdslab/classifier.hpp"

#include "mdslab/error.hpp"

#include <algorithm>

namespace mdslab {

std::string verdict_name(Verdict v) {
    switch (v) {
    case Verdict::MDS:
        return "MDS";
    case Verdict::NotMDS:
        return "NotMDS";
    case Verdict::Unknown:
        return "Unknown";
    }
    return "Unknown";
}

MainTwoCheck prop_main02_check(const Slopes& s) {
    require_in_scope(s);
    MainTwoCheck out;
    const Rational s1 = s.s1, s2 = s.s2, s3 = s.s3;
    out.gamma = gamma_of(s);
    const Rational g(out.gamma);
    const long gl = to_long(out.gamma);

    out.c1 = left_count(s, 1) != 1 && right_count(s, 1) != 1;

    // (2): s2 - s1 >= max_t (r_t + {(r_t - t) s2}) / (r_t - t); r_t = t counts as +infinity
    bool infinite = false;
    std::vector<long> inf_ts;
    for (long t = 1; t < gl; ++t) {
        long rt = right_count(s, t);
        if (rt < t) throw InternalError("r_t < t although w < 1");
        if (rt == t) {
            infinite = true;
            inf_ts.push_back(t);
            continue;
        }
        Rational val = (Rational(rt) + (Rational(rt - t) * s2).frac()) / Rational(rt - t);
        if (!out.c2_max || val > *out.c2_max) {
            out.c2_max = val;
            out.c2_argmax = {t};
        } else if (val == *out.c2_max) {
            out.c2_argmax.push_back(t);
        }
    }
    if (gl <= 1) {
        out.c2 = true;
    } else if (infinite) {
        out.c2 = false;
        out.c2_max.reset();
        out.c2_argmax = inf_ts;
    } else {
        out.c2_bound = s2 - *out.c2_max;
        out.c2 = s2 - s1 >= *out.c2_max;
    }

    Rational need3 = (g * (s3 - s2) + Rational(1) + s2.frac()) / (g * (s3 - s2 - Rational(1)) + Rational(1));
    out.c3_bound = s2 - need3;
    out.c3 = s2 - s1 >= need3;

    // (4) at some maximizing t; nothing to check when gamma = 1
    if (gl <= 1) {
        out.c4 = true;
    } else {
        for (long t : out.c2_argmax) {
            long rt = right_count(s, t);
            Rational lhs = g * (s3 - s2 - Rational(1)) * (Rational(rt - 1) + (Rational(rt - t) * s2).frac()) -
                           Rational(rt - t) * (g * (s3 - s2) + Rational(1));
            if (lhs <= Rational(0)) {
                out.c4 = true;
                break;
            }
        }
    }
    bool all = out.c1 && out.c2 && out.c3;
    out.d_zero_certified = all;
    out.d_nonzero_certified = out.c4 && !all;

    long d = reduced_degree(s);
    if (out.d_zero_certified && d != 0)
        throw InternalError("conditions (1)-(3) hold for " + s.str() + " but d = " + std::to_string(d));
    if (out.d_nonzero_certified && d == 0)
        throw InternalError("conditions certify d != 0 for " + s.str() + " but d = 0");
    return out;
}

namespace {

std::optional<long> gk_one_side(const Slopes& s) {
    long n = left_count(s, 1);
    if (n < 1) return std::nullopt;
    for (long i = 1; i < n; ++i)
        if (right_count(s, i) != i + 1) return std::nullopt;
    return n;
}

bool in_system(const Slopes& s, long n) {
    Rational N(n);
    Rational inv_n = Rational(1) / N, inv_n1 = Rational(1) / Rational(n + 1);
    return Rational(-2) - inv_n < s.s1 && s.s1 <= Rational(-2) && inv_n1 < s.s2 && s.s2 < inv_n &&
           Rational(2) <= s.s3 && s.s3 < Rational(2) + inv_n1;
}

} // namespace

std::optional<long> gk_pattern_match(const Slopes& s) {
    require_in_scope(s);
    auto a = gk_one_side(s);
    auto b = gk_one_side(reflect(s));
    if (a && b) return std::min(*a, *b);
    return a ? a : b;
}

std::optional<long> main04_pattern_match(const Slopes& s) {
    require_in_scope(s);
    for (const Slopes& o : {s, reflect(s)}) {
        if (o.s2.is_integer()) continue;
        Slopes sh = shear(o, -o.s2.floor());
        for (long dp : {5, 7, 9})
            if (in_system(sh, (dp - 1) / 2)) return dp;
    }
    return std::nullopt;
}

bool dprime_s2_integral(const Slopes& s, long dprime) { return (Rational(dprime) * s.s2).is_integer(); }

Classification classify_slopes(const Slopes& s) {
    require_in_scope(s);
    auto p = column_profile(s);
    Classification c;
    c.slopes = s;
    c.d = p.d;
    c.d_min = p.d_min;
    c.w = p.w;
    c.m = p.tri.m;
    c.gamma = p.gamma;
    c.shape = p.shape;

    auto m2 = prop_main02_check(s);
    c.evidence["l1"] = std::to_string(left_count(s, 1));
    c.evidence["r1"] = std::to_string(right_count(s, 1));
    c.evidence["main02"] = std::string(m2.c1 ? "1" : "0") + (m2.c2 ? "1" : "0") + (m2.c3 ? "1" : "0") +
                           (m2.c4 ? "1" : "0");
    bool integral = dprime_s2_integral(s, p.d_min);
    c.evidence["dprime_s2"] = (Rational(p.d_min) * s.s2).str();
    c.evidence["dprime_s2_integral"] = integral ? "true" : "false";

    if (p.d == 0) {
        c.verdict = Verdict::MDS;
        c.rules.push_back("thm-main01-1");
        if (s.s2.is_integer()) c.rules.push_back("cor-zs2");
        if (m2.d_zero_certified) c.rules.push_back("prop-main02");
    } else if (p.d_min == 1) {
        c.verdict = Verdict::NotMDS;
        c.rules.push_back("thm-main01-2");
        if (auto gk = gk_pattern_match(s); gk && *gk == 1) c.pattern = "gk-pattern";
    } else if (p.d_min >= 2 && p.d_min <= 9 && !integral) {
        auto gk = gk_pattern_match(s);
        auto m4 = main04_pattern_match(s);
        if (gk && *gk == p.d_min) {
            c.pattern = "gk-pattern";
            c.evidence["gk_n"] = std::to_string(*gk);
        } else if (m4 && *m4 == p.d_min) {
            c.pattern = "main04-pattern";
            c.evidence["main04_dprime"] = std::to_string(*m4);
        }
        if (c.pattern.empty()) {
            c.verdict = Verdict::Unknown;
            c.rules.push_back("unmatched-shape");
            c.warnings.push_back("2 <= d' <= 9 with d' s2 not integral, but neither corner pattern matched");
        } else {
            c.verdict = Verdict::NotMDS;
            c.rules.push_back("thm-main03");
        }
    } else {
        c.verdict = Verdict::Unknown;
        if (p.d_min > 9)
            c.rules.push_back("dprime-above-9");
        else
            c.rules.push_back("dprime-s2-integral");
        if (m2.d_nonzero_certified) c.evidence["main02_d_nonzero"] = "true";
    }
    c.rule = c.rules.front();
    return c;
}

namespace {

Classification triple_base(const Triple& t) {
    Classification c;
    c.evidence["triple"] = t.str();
    return c;
}

} // namespace

Classification classify_triple(const Triple& t) {
    if (!pairwise_coprime(t)) throw PreconditionError("weights " + t.str() + " are not pairwise coprime");
    if (cutkosky_big(t)) {
        Classification c = triple_base(t);
        c.verdict = Verdict::MDS;
        c.rule = "cutkosky";
        c.rules = {"cutkosky"};
        return c;
    }
    auto rels = find_relations(t);
    auto canon = canonical_relation(rels);
    if (!canon) {
        Classification c = triple_base(t);
        c.verdict = Verdict::Unknown;
        c.rule = "no-relation";
        c.rules = {"no-relation"};
        return c;
    }
    Slopes s = relation_slopes(*canon);
    if (anticanonical_big(*canon)) {
        Classification c = triple_base(t);
        c.verdict = Verdict::MDS;
        c.rule = "anticanonical-big";
        c.rules = {"anticanonical-big"};
        if (canon->g == 1) c.rules.push_back("cor-g1");
        c.relation = canon;
        c.slopes = s;
        c.w = canon->w;
        return c;
    }
    Classification c = classify_slopes(s);
    c.relation = canon;
    c.evidence["triple"] = t.str();
    if (canon->g == 1) c.rules.push_back("cor-g1");

    Relation mir = canon->mirror();
    if (std::find(rels.begin(), rels.end(), mir) != rels.end()) {
        Classification other = classify_slopes(relation_slopes(mir));
        if (other.verdict != c.verdict || other.d != c.d || other.d_min != c.d_min)
            throw InternalError("mirror relation of " + t.str() + " classifies differently");
        c.evidence["mirror_checked"] = "true";
    }
    return c;
}

} // namespace mdslab
