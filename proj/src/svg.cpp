#include "gfc/svg.hpp"

#include "gfc/enumerate.hpp"
#include "gfc/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace gfc::svg {
namespace {

struct Pt {
    double x{0}, y{0};
};

Pt to_pt(const Vec2E& e) { return {e.x.to_double(), e.y.to_double()}; }

Pt euclid(const rootdata::RootDatum& datum, const Vec2Q& lattice) {
    return to_pt(rootdata::to_euclidean(datum, lattice));
}

Pt unit(const Pt& v) {
    const double len = std::hypot(v.x, v.y);
    return {v.x / len, v.y / len};
}

/// Euclid-plane -> pixel-plane map (y axis flipped for SVG).
struct Mapper {
    double min_x, max_y, scale, margin;
    double X(const Pt& p) const { return margin + (p.x - min_x) * scale; }
    double Y(const Pt& p) const { return margin + (max_y - p.y) * scale; }
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    std::string s = buf;
    if (s == "-0.00") s = "0.00";
    return s;
}

void line(std::ostringstream& out, const Mapper& m, const Pt& a, const Pt& b,
          const char* style) {
    out << "    <line x1=\"" << fmt(m.X(a)) << "\" y1=\"" << fmt(m.Y(a)) << "\" x2=\""
        << fmt(m.X(b)) << "\" y2=\"" << fmt(m.Y(b)) << "\" " << style << "/>\n";
}

/// Arrow from a to b: shaft plus a filled triangular head.
void arrow(std::ostringstream& out, const Mapper& m, const Pt& a, const Pt& b,
           const char* color) {
    const double x1 = m.X(a), y1 = m.Y(a), x2 = m.X(b), y2 = m.Y(b);
    double dx = x2 - x1, dy = y2 - y1;
    const double len = std::hypot(dx, dy);
    if (len < 1e-9) return;
    dx /= len;
    dy /= len;
    const double head = std::min(8.0, 0.35 * len);
    const double bx = x2 - head * dx, by = y2 - head * dy;  // base of the head
    const double px = -dy, py = dx;
    out << "    <line x1=\"" << fmt(x1) << "\" y1=\"" << fmt(y1) << "\" x2=\"" << fmt(bx)
        << "\" y2=\"" << fmt(by) << "\" stroke=\"" << color << "\" stroke-width=\"1.6\"/>\n";
    out << "    <path d=\"M " << fmt(x2) << ' ' << fmt(y2) << " L "
        << fmt(bx + 0.45 * head * px) << ' ' << fmt(by + 0.45 * head * py) << " L "
        << fmt(bx - 0.45 * head * px) << ' ' << fmt(by - 0.45 * head * py) << " Z\" fill=\""
        << color << "\"/>\n";
}

/// Extreme ray directions of the positive chamber, Euclidean doubles.
std::array<Pt, 2> chamber_ray_dirs(const rootdata::RootDatum& datum) {
    std::array<Pt, 2> dirs;
    for (int i = 0; i < 2; ++i) {
        Vec2I r = rot_plus90(datum.wall_normals[i]);
        if (dot(datum.wall_normals[1 - i], r) < 0) r = -r;
        dirs[i] = unit(euclid(datum, r.to_rational()));
    }
    return dirs;
}

}  // namespace

std::string render_case(const rootdata::RootDatum& datum,
                        const classify::ClassificationRecord& record) {
    const exactgeom::Polygon& polygon = record.polygon;

    std::vector<Pt> poly;
    for (const Vec2Q& v : polygon.vertices) poly.push_back(euclid(datum, v));
    const Pt apex = euclid(datum, datum.two_rho);
    const Pt bary = euclid(datum, record.barycenter);
    std::vector<Pt> roots;
    for (const Vec2Q& alpha : datum.positive_roots) roots.push_back(euclid(datum, alpha));

    // Figure extent in Euclid units, before adding rays.
    double lo_x = 0, hi_x = 0, lo_y = 0, hi_y = 0;
    auto grow = [&](const Pt& p) {
        lo_x = std::min(lo_x, p.x);
        hi_x = std::max(hi_x, p.x);
        lo_y = std::min(lo_y, p.y);
        hi_y = std::max(hi_y, p.y);
    };
    for (const Pt& p : poly) grow(p);
    for (const Pt& p : roots) grow(p);
    grow(apex);
    const double diam = std::hypot(hi_x - lo_x, hi_y - lo_y);

    // Dashed cone 2rho + cone(-alpha1, -alpha2), rays clipped to fixed length.
    const double cone_len = 0.55 * diam;
    std::array<Pt, 2> cone_end;
    for (int i = 0; i < 2; ++i) {
        const Pt d = unit(euclid(datum, Rat(-1) * datum.simple_roots[i]));
        cone_end[i] = {apex.x + cone_len * d.x, apex.y + cone_len * d.y};
        grow(cone_end[i]);
    }
    // Weyl wall rays from the origin, slightly past the polytope.
    const double wall_len = 1.1 * diam;
    std::array<Pt, 2> wall_end;
    const std::array<Pt, 2> rays = chamber_ray_dirs(datum);
    for (int i = 0; i < 2; ++i) {
        wall_end[i] = {wall_len * rays[i].x, wall_len * rays[i].y};
        grow(wall_end[i]);
    }

    const double margin = 40.0;
    const double scale = (640.0 - 2 * margin) / std::max(hi_x - lo_x, 1e-9);
    const double width = 640.0;
    const double height = (hi_y - lo_y) * scale + 2 * margin;
    const Mapper m{lo_x, hi_y, scale, margin};

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\""
        << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << ' ' << fmt(height) << "\">\n";
    out << "  <title>" << datum.name << ' '
        << (record.case_label.empty() ? "moment polytope" : record.case_label + " moment polytope")
        << "</title>\n";
    out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    const Pt origin{0, 0};
    out << "  <g id=\"walls\">\n";
    for (int i = 0; i < 2; ++i)
        line(out, m, origin, wall_end[i], "stroke=\"#9a9a9a\" stroke-width=\"1\"");
    out << "  </g>\n";

    out << "  <g id=\"polytope\">\n    <path d=\"";
    for (std::size_t i = 0; i < poly.size(); ++i)
        out << (i == 0 ? "M " : " L ") << fmt(m.X(poly[i])) << ' ' << fmt(m.Y(poly[i]));
    out << " Z\" fill=\"#dbe7f5\" fill-opacity=\"0.75\" stroke=\"#2b5b8f\" "
           "stroke-width=\"2\"/>\n";
    for (const Pt& p : poly)
        out << "    <rect x=\"" << fmt(m.X(p) - 2.4) << "\" y=\"" << fmt(m.Y(p) - 2.4)
            << "\" width=\"4.8\" height=\"4.8\" fill=\"#2b5b8f\"/>\n";
    out << "  </g>\n";

    out << "  <g id=\"roots\">\n";
    for (const Pt& r : roots) arrow(out, m, origin, r, "#b03030");
    out << "  </g>\n";

    out << "  <g id=\"cone2rho\">\n";
    out << "    <path d=\"M " << fmt(m.X(cone_end[0])) << ' ' << fmt(m.Y(cone_end[0])) << " L "
        << fmt(m.X(apex)) << ' ' << fmt(m.Y(apex)) << " L " << fmt(m.X(cone_end[1])) << ' '
        << fmt(m.Y(cone_end[1])) << " Z\" fill=\"#f3e2c3\" fill-opacity=\"0.5\" "
           "stroke=\"none\"/>\n";
    for (int i = 0; i < 2; ++i)
        line(out, m, apex, cone_end[i],
             "stroke=\"#6b5310\" stroke-width=\"1.6\" stroke-dasharray=\"6 4\"");
    out << "    <rect x=\"" << fmt(m.X(apex) - 3) << "\" y=\"" << fmt(m.Y(apex) - 3)
        << "\" width=\"6\" height=\"6\" fill=\"#6b5310\"/>\n";
    out << "  </g>\n";

    out << "  <g id=\"barycenter\">\n";
    out << "    <circle cx=\"" << fmt(m.X(bary)) << "\" cy=\"" << fmt(m.Y(bary))
        << "\" r=\"4.5\" fill=\"#1a7f37\" stroke=\"white\" stroke-width=\"1\"/>\n";
    out << "  </g>\n";

    out << "</svg>\n";
    return out.str();
}

std::string render_indexed(const rootdata::RootDatum& datum, int index, int bound) {
    const enumerate::EnumerationResult enumeration =
        enumerate::enumerate_polytopes(datum, bound);
    if (index < 0 || index >= static_cast<int>(enumeration.polytopes.size()))
        throw std::out_of_range("render: index " + std::to_string(index) + " outside census of " +
                                std::to_string(enumeration.polytopes.size()));
    const std::string& key = enumeration.polytopes[static_cast<std::size_t>(index)].key;

    const std::vector<classify::ClassificationRecord> records =
        classify::classify_group(datum, bound);
    for (const classify::ClassificationRecord& rec : records)
        if (enumerate::canonical_key(datum, rec.polygon) == key) return render_case(datum, rec);
    throw std::logic_error("render: enumerated case missing from classification");
}

}  // namespace gfc::svg
