#include "mdslab/render.hpp"

#include "mdslab/error.hpp"

#include <algorithm>
#include <sstream>

namespace mdslab {

namespace {

constexpr long kUnit = 32;
constexpr long kMargin = 48;

std::string pt(const LatticePoint& p) { return "(" + p.x.get_str() + "," + p.y.get_str() + ")"; }

std::string label(long k, const char* v) { return k == 1 ? std::string(v) : std::to_string(k) + v; }

} // namespace

TriangleFigure render_triangle(const Slopes& s, long k) {
    if (k < 1) throw ParseError("k must be a positive integer");
    require_in_scope(s);
    TriangleFigure fig;
    GoodTriangle tri = smallest_good_triangle(s);
    fig.origin = LatticePoint{0, 0};
    fig.kp = LatticePoint{tri.p.x * k, tri.p.y * k};
    fig.kq = LatticePoint{tri.q.x * k, tri.q.y * k};
    fig.points = triangle_points(s, k);
    fig.dprime = minimal_degree(s);
    auto cols = triangle_columns(s, k);
    if (fig.dprime > 0)
        for (std::size_t i = 1; i + 1 < cols.size(); ++i)
            if (cols[i].count() <= fig.dprime) fig.highlighted.push_back(cols[i]);

    BigInt xmin = fig.kp.x, xmax = fig.kq.x;
    BigInt ymin = std::min({BigInt(0), fig.kp.y, fig.kq.y}), ymax = std::max({BigInt(0), fig.kp.y, fig.kq.y});
    for (const auto& p : fig.points) {
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
    auto px = [&](const BigInt& x) { return BigInt((x - xmin) * kUnit + kMargin).get_str(); };
    auto py = [&](const BigInt& y) { return BigInt((ymax - y) * kUnit + kMargin).get_str(); };
    BigInt width = (xmax - xmin) * kUnit + 2 * kMargin, height = (ymax - ymin) * kUnit + 2 * kMargin;

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width.get_str() << "\" height=\""
       << height.get_str() << "\">\n";
    os << "<rect x=\"0\" y=\"0\" width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
    for (const auto& c : fig.highlighted) {
        os << "<rect class=\"column\" x=\"" << BigInt((c.x - xmin) * kUnit + kMargin - kUnit / 4).get_str()
           << "\" y=\"" << BigInt((ymax - c.y_hi) * kUnit + kMargin - kUnit / 4).get_str() << "\" width=\""
           << kUnit / 2 << "\" height=\"" << BigInt((c.y_hi - c.y_lo) * kUnit + kUnit / 2).get_str()
           << "\" fill=\"#fdd49e\"/>\n";
    }
    os << "<polygon points=\"" << px(0) << ',' << py(0) << ' ' << px(fig.kp.x) << ',' << py(fig.kp.y) << ' '
       << px(fig.kq.x) << ',' << py(fig.kq.y) << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1.5\"/>\n";
    for (const auto& p : fig.points)
        os << "<circle cx=\"" << px(p.x) << "\" cy=\"" << py(p.y) << "\" r=\"4\" fill=\"#000000\"/>\n";
    os << "<text x=\"" << px(fig.kp.x) << "\" y=\"" << py(fig.kp.y) << "\" dx=\"-40\" dy=\"-8\" font-size=\"14\">"
       << label(k, "p") << ' ' << pt(fig.kp) << "</text>\n";
    os << "<text x=\"" << px(fig.kq.x) << "\" y=\"" << py(fig.kq.y) << "\" dx=\"6\" dy=\"-8\" font-size=\"14\">"
       << label(k, "q") << ' ' << pt(fig.kq) << "</text>\n";
    os << "<text x=\"" << px(0) << "\" y=\"" << py(0) << "\" dx=\"6\" dy=\"16\" font-size=\"14\">0</text>\n";
    os << "</svg>\n";
    fig.svg = os.str();
    return fig;
}

} // namespace mdslab
