#include "cli.hpp"

#include "mdslab/catalog.hpp"
#include "mdslab/classifier.hpp"
#include "mdslab/error.hpp"
#include "mdslab/interpolation.hpp"
#include "mdslab/render.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace mdslab {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kVersion = "mdslab 1.0.0";

// Bad file paths count as input errors.
class IoError : public ParseError {
public:
    using ParseError::ParseError;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    out << text;
    if (!out) throw IoError("write failed for " + path);
}

json slopes_json(const Slopes& s) { return json::array({s.s1.str(), s.s2.str(), s.s3.str()}); }

json relation_json(const Relation& r) {
    json j;
    j["a"] = r.a.get_str();
    j["b"] = r.b.get_str();
    j["c"] = r.c.get_str();
    j["e"] = r.e.get_str();
    j["f"] = r.f.get_str();
    j["g"] = r.g.get_str();
    j["r"] = r.r.get_str();
    j["w"] = r.w.str();
    return j;
}

json verdict_json(const Classification& c) {
    json j;
    j["verdict"] = verdict_name(c.verdict);
    j["rule"] = c.rule;
    j["rules"] = c.rules;
    if (!c.pattern.empty()) j["pattern"] = c.pattern;
    j["d"] = c.d;
    j["d_min"] = c.d_min;
    if (c.w) j["w"] = c.w->str();
    if (c.slopes) j["s"] = slopes_json(*c.slopes);
    if (c.gamma) j["gamma"] = c.gamma->get_str();
    if (c.m) j["m"] = c.m->get_str();
    if (c.shape) j["shape"] = json{{"S", c.shape->S}, {"T", c.shape->T}};
    if (c.relation) j["relation"] = relation_json(*c.relation);
    j["evidence"] = c.evidence;
    if (!c.warnings.empty()) j["warnings"] = c.warnings;
    return j;
}

LatticePoint parse_point(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos) throw ParseError("point must be x,y: '" + text + "'");
    return LatticePoint{parse_bigint(text.substr(0, comma)), parse_bigint(text.substr(comma + 1))};
}

void check_format(const std::string& f, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed)
        if (f == a) return;
    throw ParseError("unsupported format '" + f + "'");
}

// --- subcommands -----------------------------------------------------------

struct ClassifyArgs {
    std::string slopes, triple, format = "json";
};

int do_classify(const ClassifyArgs& a, std::ostream& out) {
    if (a.slopes.empty() == a.triple.empty()) throw ParseError("give exactly one of --slopes or --triple");
    check_format(a.format, {"json", "text"});
    Classification c = a.slopes.empty() ? classify_triple(Triple::parse(a.triple))
                                        : classify_slopes(Slopes::parse(a.slopes));
    if (a.format == "json") {
        out << verdict_json(c).dump(2) << "\n";
    } else {
        out << verdict_name(c.verdict) << " (" << c.rule;
        if (!c.pattern.empty()) out << ", " << c.pattern;
        out << ") d=" << c.d << " d'=" << c.d_min;
        if (c.slopes) out << " s=" << c.slopes->str();
        if (c.w) out << " w=" << c.w->str();
        out << "\n";
        for (const auto& w : c.warnings) out << "warning: " << w << "\n";
    }
    return 0;
}

int do_relation(const std::string& triple, std::ostream& out) {
    Triple t = Triple::parse(triple);
    auto rels = find_relations(t);
    auto canon = canonical_relation(rels);
    json arr = json::array();
    for (const auto& r : rels) {
        json j = relation_json(r);
        j["s"] = slopes_json(relation_slopes(r));
        j["canonical"] = canon && *canon == r;
        arr.push_back(j);
    }
    out << arr.dump(2) << "\n";
    return 0;
}

struct TableArgs {
    long a_max = 15;
    std::string cls = "all", format = "md";
    bool no_verify = false;
};

int do_table(const TableArgs& a, std::ostream& out) {
    check_format(a.format, {"md", "csv", "json"});
    if (a.cls != "all" && a.cls != "d1" && a.cls != "d2" && a.cls != "ge2")
        throw ParseError("--class must be d1, d2 or all");
    PhiTables t = generate_tables(a.a_max, !a.no_verify);
    bool d1 = a.cls == "all" || a.cls == "d1";
    bool d2 = a.cls == "all" || a.cls == "d2" || a.cls == "ge2";
    if (a.format == "md") {
        if (d1) out << table_markdown(t.d1, PhiKind::D1);
        if (d1 && d2) out << "\n";
        if (d2) out << table_markdown(t.d2, PhiKind::Ge2);
        return 0;
    }
    std::vector<PhiClass> rows;
    if (d1) rows.insert(rows.end(), t.d1.begin(), t.d1.end());
    if (d2) rows.insert(rows.end(), t.d2.begin(), t.d2.end());
    out << (a.format == "csv" ? table_csv(rows) : table_json(rows));
    return 0;
}

struct PhiArgs {
    std::vector<long> afgr;
    std::string cls = "ge2", format = "json";
    long limit = 5;
};

int do_phi(const PhiArgs& a, std::ostream& out) {
    check_format(a.format, {"json", "text"});
    if (a.afgr.size() != 4) throw ParseError("phi needs a f g r");
    auto p = phi_interval(a.afgr[0], a.afgr[1], a.afgr[2], a.afgr[3], parse_phi_kind(a.cls));
    if (!p) {
        if (a.format == "json")
            out << json{{"class", a.cls}, {"empty", true}}.dump(2) << "\n";
        else
            out << "empty\n";
        return 0;
    }
    auto list = enumerate_triples(*p, a.limit);
    if (a.format == "text") {
        out << p->key() << " " << phi_kind_name(p->kind) << ": " << p->interval.str() << " and " << p->divisibility()
            << "\n";
        for (const auto& t : list)
            out << "(" << t.t.str() << ") " << verdict_name(t.verdict.verdict) << " d'=" << t.verdict.d_min << "\n";
        return 0;
    }
    json j;
    j["key"] = p->key();
    j["class"] = phi_kind_name(p->kind);
    j["range"] = p->interval.str();
    j["lo"] = p->interval.lo.str();
    j["lo_closed"] = p->interval.lo_closed;
    j["hi"] = p->interval.hi.str();
    j["hi_closed"] = p->interval.hi_closed;
    j["all"] = p->interval.all;
    j["divisibility"] = p->divisibility();
    j["condition4"] = p->c4;
    j["bisected"] = p->bisected;
    j["realizable"] = p->realizable;
    json arr = json::array();
    for (const auto& t : list) {
        json x;
        x["triple"] = json::array({t.t.a.get_str(), t.t.b.get_str(), t.t.c.get_str()});
        x["e"] = t.e.get_str();
        x["verdict"] = verdict_name(t.verdict.verdict);
        x["rule"] = t.verdict.rule;
        x["d_min"] = t.verdict.d_min;
        arr.push_back(x);
    }
    j["triples"] = arr;
    out << j.dump(2) << "\n";
    return 0;
}

struct GridArgs {
    long a = 7, max = 70;
    std::string format = "csv", out_path;
};

int do_grid(const GridArgs& a, std::ostream& out) {
    check_format(a.format, {"csv", "svg", "summary"});
    auto cells = grid_classification(a.a, a.max);
    std::string text;
    if (a.format == "csv") {
        text = grid_csv(cells);
    } else if (a.format == "svg") {
        text = grid_svg(cells, a.a, a.max);
    } else {
        std::ostringstream os;
        for (const auto& [k, v] : grid_counts(cells)) os << grid_category_name(k) << "," << v << "\n";
        text = os.str();
    }
    if (a.out_path.empty())
        out << text;
    else
        write_file(a.out_path, text);
    return 0;
}

int do_detm(long dprime, bool expanded, std::ostream& out) {
    if (dprime != 5 && dprime != 7 && dprime != 9) throw ParseError("--dprime must be 5, 7 or 9");
    CornerFrame f = shape_corner_frame(dprime);
    SymbolicDet d = det_symbolic(f);
    out << "frame: " << f.describe() << "\n";
    out << "det = " << d.factored.str() << "\n";
    if (expanded) out << "expanded = " << d.poly.str() << "\n";
    return 0;
}

struct OracleArgs {
    std::string points, avoid;
    long degree = -1;
    std::size_t max_unknowns = 2000;
};

int do_oracle(const OracleArgs& a, std::ostream& out) {
    if (a.degree < 0) throw ParseError("--degree must be non-negative");
    CurveQuery q;
    q.points = read_point_list(read_file(a.points));
    q.avoid = parse_point(a.avoid);
    q.degree = a.degree;
    CurveAnswer ans = curve_exists(q, a.max_unknowns);
    json j;
    j["exists"] = ans.exists;
    j["points"] = q.points.size();
    j["degree"] = q.degree;
    j["unknowns"] = ans.unknowns;
    j["rank_points"] = ans.rank_points;
    j["rank_with_avoid"] = ans.rank_with_avoid;
    j["rows_used"] = ans.rows_used;
    out << j.dump(2) << "\n";
    return 0;
}

struct TriangleArgs {
    std::string slopes, out_path;
    long k = 1;
};

int do_triangle(const TriangleArgs& a, std::ostream& out) {
    TriangleFigure fig = render_triangle(Slopes::parse(a.slopes), a.k);
    if (a.out_path.empty()) {
        out << fig.svg;
        return 0;
    }
    write_file(a.out_path, fig.svg);
    out << "points " << fig.points.size() << ", d' " << fig.dprime << ", highlighted columns";
    for (const auto& c : fig.highlighted) out << " " << c.x.get_str() << ":" << c.count();
    out << "\n";
    return 0;
}

struct ReduceArgs {
    std::string slopes, format = "text";
    long k = 1;
    bool check = false;
};

int do_reduce(const ReduceArgs& a, std::ostream& out) {
    check_format(a.format, {"json", "text"});
    if (a.k < 1) throw ParseError("k must be a positive integer");
    Slopes s = Slopes::parse(a.slopes);
    require_in_scope(s);
    PeelTrace tr = bezout_peel(s, a.k);
    std::optional<ReductionReport> rep;
    if (a.check) rep = reduction_equivalence(s, a.k);
    if (a.format == "json") {
        json j;
        j["k"] = a.k;
        j["start_degree"] = tr.start_degree;
        json steps = json::array();
        for (const auto& st : tr.removed)
            steps.push_back(json{{"x", st.x.get_str()}, {"count", st.count}, {"degree_before", st.degree_before}});
        j["removed"] = steps;
        j["final_degree"] = tr.final_degree;
        json rem = json::array();
        for (const auto& c : tr.remaining) rem.push_back(json{{"x", c.x.get_str()}, {"count", c.count()}});
        j["remaining"] = rem;
        if (rep) {
            j["equivalence"] = json{{"full_left", rep->full_left},   {"reduced_left", rep->reduced_left},
                                    {"full_right", rep->full_right}, {"reduced_right", rep->reduced_right},
                                    {"equivalent", rep->equivalent()}};
        }
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "start degree " << tr.start_degree << "\n";
    for (const auto& st : tr.removed)
        out << "  drop column x=" << st.x.get_str() << " (" << st.count << " points > degree " << st.degree_before
            << ")\n";
    out << "final degree " << tr.final_degree << ", remaining columns";
    for (const auto& c : tr.remaining) out << " " << c.x.get_str() << ":" << c.count();
    out << "\n";
    if (rep)
        out << "full/reduced omit kp: " << rep->full_left << "/" << rep->reduced_left
            << ", omit kq: " << rep->full_right << "/" << rep->reduced_right
            << (rep->equivalent() ? " equivalent" : " NOT equivalent") << "\n";
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Mori dream space checks for blow-ups of toric surfaces", "mdslab"};
    app.require_subcommand(1);
    bool verbose = false;
    app.add_flag("--verbose", verbose, "Print the version on stderr");

    ClassifyArgs ca;
    auto* classify = app.add_subcommand("classify", "Classify slopes or a weight triple");
    auto* o_s = classify->add_option("--slopes", ca.slopes, "s1,s2,s3");
    auto* o_t = classify->add_option("--triple", ca.triple, "a,b,c");
    o_s->excludes(o_t);
    classify->add_option("--format", ca.format, "json or text");

    std::string rel_triple;
    auto* relation = app.add_subcommand("relation", "List relations with w < 1");
    relation->add_option("triple", rel_triple, "a,b,c")->required();

    TableArgs ta;
    auto* table = app.add_subcommand("table", "Nonempty classes with d' = 1 and d' >= 2");
    table->add_option("--a-max", ta.a_max, "Largest a");
    table->add_option("--class", ta.cls, "d1, d2 or all");
    table->add_option("--format", ta.format, "md, csv or json");
    table->add_flag("--no-verify", ta.no_verify, "Skip the sampled re-check of each interval");

    PhiArgs pa;
    auto* phi = app.add_subcommand("phi", "One class: interval and smallest triples");
    phi->add_option("afgr", pa.afgr, "a f g r")->required()->expected(4);
    phi->add_option("--class", pa.cls, "d0, d1 or ge2");
    phi->add_option("--limit", pa.limit, "Number of triples")->check(CLI::PositiveNumber);
    phi->add_option("--format", pa.format, "json or text");

    GridArgs ga;
    auto* grid = app.add_subcommand("grid", "Categories of (a,b,c) for a <= b, c <= max");
    grid->add_option("--a", ga.a, "Fixed weight");
    grid->add_option("--max", ga.max, "Largest b and c");
    grid->add_option("--format", ga.format, "csv, svg or summary");
    grid->add_option("--out", ga.out_path, "Output file");

    long dprime = 0;
    bool expanded = false;
    auto* detm = app.add_subcommand("detm", "Symbolic corner determinant");
    detm->add_option("--dprime", dprime, "5, 7 or 9")->required();
    detm->add_flag("--expanded", expanded, "Also print the expanded polynomial");

    OracleArgs oa;
    auto* oracle = app.add_subcommand("oracle", "Is there a curve through the points missing one more?");
    oracle->add_option("--points", oa.points, "File with x,y per line")->required();
    oracle->add_option("--avoid", oa.avoid, "x,y")->required();
    oracle->add_option("--degree", oa.degree, "Curve degree")->required();
    oracle->add_option("--max-unknowns", oa.max_unknowns, "Refuse larger systems");

    TriangleArgs tra;
    auto* triangle = app.add_subcommand("triangle", "Draw k Delta_1 as SVG");
    triangle->add_option("--slopes", tra.slopes, "s1,s2,s3")->required();
    triangle->add_option("--k", tra.k, "Multiple");
    triangle->add_option("--out", tra.out_path, "SVG file");

    ReduceArgs ra;
    auto* reduce = app.add_subcommand("reduce", "Bezout column peeling trace");
    reduce->add_option("--slopes", ra.slopes, "s1,s2,s3")->required();
    reduce->add_option("--k", ra.k, "Multiple");
    reduce->add_option("--format", ra.format, "json or text");
    reduce->add_flag("--check", ra.check, "Also compare full and reduced interpolation");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }
    if (verbose) err << kVersion << "\n";

    try {
        if (*classify) return do_classify(ca, out);
        if (*relation) return do_relation(rel_triple, out);
        if (*table) return do_table(ta, out);
        if (*phi) return do_phi(pa, out);
        if (*grid) return do_grid(ga, out);
        if (*detm) return do_detm(dprime, expanded, out);
        if (*oracle) return do_oracle(oa, out);
        if (*triangle) return do_triangle(tra, out);
        if (*reduce) return do_reduce(ra, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 4;
    }
    return 2;
}

} // namespace mdslab
