#include "gfc/geometry.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace gfc::exactgeom {

namespace {

int half_of(const Vec2Q& d) { return (d.y > 0 || (d.y == 0 && d.x > 0)) ? 0 : 1; }

/// Strict CCW angular order of direction vectors, starting just above the
/// positive x-axis.  Total on sets of pairwise non-parallel directions.
bool angular_less(const Vec2Q& dp, const Vec2Q& dq) {
    int hp = half_of(dp), hq = half_of(dq);
    if (hp != hq) return hp < hq;
    return cross(dp, dq) > 0;
}

/// Exact feasibility of a deduplicated system by eliminating y
/// (Fourier-Motzkin); used only when the system exposes no vertex.
bool feasible_by_elimination(const std::vector<HalfPlane>& cs) {
    std::vector<std::pair<Rat, Rat>> xcons;  // c * x <= r
    std::vector<const HalfPlane*> uppers, lowers;
    for (const auto& c : cs) {
        if (c.normal.y == 0) xcons.emplace_back(Rat(c.normal.x), c.rhs);
        else if (c.normal.y > 0) uppers.push_back(&c);
        else lowers.push_back(&c);
    }
    for (const auto* u : uppers)
        for (const auto* l : lowers) {
            // Positive multipliers -l.y and u.y cancel the y coefficient.
            Rat mu(-l->normal.y), ml(u->normal.y);
            xcons.emplace_back(mu * u->normal.x + ml * l->normal.x, mu * u->rhs + ml * l->rhs);
        }
    std::optional<Rat> lo, hi;
    for (const auto& [c, r] : xcons) {
        if (c == 0) {
            if (r < 0) return false;
        } else if (c > 0) {
            Rat b = r / c;
            if (!hi || b < *hi) hi = b;
        } else {
            Rat b = r / c;
            if (!lo || b > *lo) lo = b;
        }
    }
    return !(lo && hi && *lo > *hi);
}

}  // namespace

HalfPlane normalized(const HalfPlane& hp) {
    Vec2I p = primitive(hp.normal);  // throws on a zero normal
    std::int64_t g = (p.x != 0) ? hp.normal.x / p.x : hp.normal.y / p.y;
    return {p, hp.rhs / g};
}

Rat Polygon::area() const {
    Rat s(0);
    for (std::size_t i = 0; i < vertices.size(); ++i)
        s += cross(vertices[i], vertices[(i + 1) % vertices.size()]);
    return s / 2;
}

Vec2Q Polygon::centroid() const {
    Rat cx(0), cy(0);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const Vec2Q& a = vertices[i];
        const Vec2Q& b = vertices[(i + 1) % vertices.size()];
        Rat w = cross(a, b);
        cx += (a.x + b.x) * w;
        cy += (a.y + b.y) * w;
    }
    Rat a6 = 6 * area();
    return {cx / a6, cy / a6};
}

bool Polygon::contains(const Vec2Q& p) const {
    return std::all_of(facets.begin(), facets.end(),
                       [&](const HalfPlane& f) { return dot(f.normal, p) <= f.rhs; });
}

bool Polygon::strictly_contains(const Vec2Q& p) const {
    return std::all_of(facets.begin(), facets.end(),
                       [&](const HalfPlane& f) { return dot(f.normal, p) < f.rhs; });
}

bool Region::strictly_contains(const Vec2Q& p) const {
    return std::all_of(facets.begin(), facets.end(),
                       [&](const HalfPlane& f) { return dot(f.normal, p) < f.rhs; });
}

Polygon Region::to_polygon() const {
    if (!bounded()) throw std::logic_error("Region::to_polygon: region is unbounded");
    return Polygon{vertices, facets};
}

BuiltRegion build_region(const std::vector<HalfPlane>& constraints) {
    // Normalize to primitive normals; keep the tightest bound per direction.
    std::map<Vec2I, Rat> tight;
    for (const auto& c : constraints) {
        if (c.normal.x == 0 && c.normal.y == 0) {
            if (c.rhs < 0) return {};  // 0 <= negative: empty
            continue;                  // trivially true
        }
        HalfPlane n = normalized(c);
        auto [it, fresh] = tight.emplace(n.normal, n.rhs);
        if (!fresh && n.rhs < it->second) it->second = n.rhs;
    }
    std::vector<HalfPlane> cs;
    cs.reserve(tight.size());
    for (const auto& [n, r] : tight) cs.push_back({n, r});
    if (cs.empty()) return {BuildKind::Unpointed, {}};

    auto feasible = [&](const Vec2Q& p) {
        return std::all_of(cs.begin(), cs.end(),
                           [&](const HalfPlane& c) { return dot(c.normal, p) <= c.rhs; });
    };

    // Extreme points: feasible intersections of two independent constraint lines.
    std::set<Vec2Q> vset;
    for (std::size_t i = 0; i < cs.size(); ++i)
        for (std::size_t j = i + 1; j < cs.size(); ++j) {
            std::int64_t det = cross(cs[i].normal, cs[j].normal);
            if (det == 0) continue;
            Rat d(det);
            Vec2Q p{(cs[i].rhs * cs[j].normal.y - cs[j].rhs * cs[i].normal.y) / d,
                    (Rat(cs[i].normal.x) * cs[j].rhs - Rat(cs[j].normal.x) * cs[i].rhs) / d};
            if (feasible(p)) vset.insert(p);
        }

    if (vset.empty()) {
        if (!feasible_by_elimination(cs)) return {};
        // Nonempty with no extreme point: plane, half-plane, strip — or a pure
        // line when some slab is pinched tight (the only degenerate case here).
        for (const auto& [n, r] : tight) {
            auto op = tight.find(-n);
            if (op != tight.end() && r + op->second == 0) return {BuildKind::Degenerate, {}};
        }
        return {BuildKind::Unpointed, {}};
    }

    // Recession rays: directions perpendicular to some constraint that every
    // constraint tolerates.  With an extreme point present the cone is pointed
    // and these are exactly its extreme rays.
    std::set<Vec2I> rset;
    for (const auto& c : cs)
        for (const Vec2I& t : {rot_plus90(c.normal), rot_minus90(c.normal)}) {
            bool ok = std::all_of(cs.begin(), cs.end(),
                                  [&](const HalfPlane& k) { return dot(k.normal, t) <= 0; });
            if (ok) rset.insert(t);
        }
    std::vector<Vec2I> rays(rset.begin(), rset.end());
    for (const auto& r : rays)
        if (rset.count(-r)) throw std::logic_error("build_region: line direction alongside an extreme point");
    if (rays.size() > 2) throw std::logic_error("build_region: pointed cone with more than two extreme rays");

    // Full dimension: rank 2 among vertex differences and rays.
    std::vector<Vec2Q> dirs;
    const Vec2Q& v0 = *vset.begin();
    for (const auto& v : vset)
        if (!(v == v0)) dirs.push_back(v - v0);
    for (const auto& r : rays) dirs.push_back(r.to_rational());
    bool fulldim = false;
    for (std::size_t i = 0; i < dirs.size() && !fulldim; ++i)
        for (std::size_t j = i + 1; j < dirs.size() && !fulldim; ++j)
            if (cross(dirs[i], dirs[j]) != 0) fulldim = true;
    if (!fulldim) return {BuildKind::Degenerate, {}};

    // CCW order around the vertex centroid (interior for >= 3 vertices).
    std::vector<Vec2Q> verts(vset.begin(), vset.end());
    Vec2Q ctr{Rat(0), Rat(0)};
    for (const auto& v : verts) ctr = ctr + v;
    ctr = Rat(1, static_cast<unsigned long>(verts.size())) * ctr;
    std::sort(verts.begin(), verts.end(),
              [&](const Vec2Q& p, const Vec2Q& q) { return angular_less(p - ctr, q - ctr); });

    // Facets: constraints whose active face is one-dimensional.
    std::vector<HalfPlane> facets;
    for (const auto& c : cs) {
        int av = 0, ar = 0;
        for (const auto& v : verts)
            if (dot(c.normal, v) == c.rhs) ++av;
        for (const auto& r : rays)
            if (dot(c.normal, r) == 0) ++ar;
        if (av >= 2 || (av == 1 && ar >= 1)) facets.push_back(c);
    }

    Region reg;
    reg.rays = rays;
    if (!rays.empty()) {
        reg.vertices = std::move(verts);
        reg.facets = std::move(facets);
        return {BuildKind::UnboundedPointed, std::move(reg)};
    }

    // Bounded: start at the lexicographic minimum and align facets with edges.
    std::size_t lo = 0;
    for (std::size_t i = 1; i < verts.size(); ++i)
        if (verts[i] < verts[lo]) lo = i;
    std::rotate(verts.begin(), verts.begin() + static_cast<std::ptrdiff_t>(lo), verts.end());
    const std::size_t n = verts.size();
    if (facets.size() != n) throw std::logic_error("build_region: facet/vertex count mismatch");
    reg.vertices = verts;
    reg.facets.resize(n);
    std::vector<bool> used(facets.size(), false);
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2Q& a = verts[i];
        const Vec2Q& b = verts[(i + 1) % n];
        bool found = false;
        for (std::size_t k = 0; k < facets.size(); ++k) {
            if (used[k]) continue;
            if (dot(facets[k].normal, a) == facets[k].rhs && dot(facets[k].normal, b) == facets[k].rhs) {
                reg.facets[i] = facets[k];
                used[k] = true;
                found = true;
                break;
            }
        }
        if (!found) throw std::logic_error("build_region: missing edge facet");
    }
    return {BuildKind::Bounded, std::move(reg)};
}

bool supports_edge(const Region& region, const HalfPlane& hp) {
    HalfPlane n = normalized(hp);
    int av = 0, ar = 0;
    for (const auto& v : region.vertices)
        if (dot(n.normal, v) == n.rhs) ++av;
    for (const auto& r : region.rays)
        if (dot(n.normal, r) == 0) ++ar;
    return av >= 2 || (av == 1 && ar >= 1);
}

IntersectionResult intersect_halfplanes(const std::vector<HalfPlane>& constraints) {
    BuiltRegion b = build_region(constraints);
    switch (b.kind) {
        case BuildKind::Empty:
        case BuildKind::Degenerate:
            return {RegionKind::Empty, std::nullopt};
        case BuildKind::Unpointed:
        case BuildKind::UnboundedPointed:
            return {RegionKind::Unbounded, std::nullopt};
        case BuildKind::Bounded:
            return {RegionKind::Bounded, b.region.to_polygon()};
    }
    throw std::logic_error("intersect_halfplanes: unreachable");
}

Polygon polygon_from_vertices(const std::vector<Vec2Q>& points) {
    std::vector<Vec2Q> pts = points;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3)
        throw std::invalid_argument("polygon_from_vertices: fewer than three distinct points");

    auto build_chain = [](auto begin, auto end) {
        std::vector<Vec2Q> chain;
        for (auto it = begin; it != end; ++it) {
            while (chain.size() >= 2 &&
                   cross(chain.back() - chain[chain.size() - 2], *it - chain.back()) <= 0)
                chain.pop_back();
            chain.push_back(*it);
        }
        return chain;
    };
    std::vector<Vec2Q> hull = build_chain(pts.begin(), pts.end());
    std::vector<Vec2Q> upper = build_chain(pts.rbegin(), pts.rend());
    hull.pop_back();
    hull.insert(hull.end(), upper.begin(), upper.end() - 1);
    if (hull.size() < 3) throw std::invalid_argument("polygon_from_vertices: points are collinear");

    Polygon poly;
    poly.vertices = std::move(hull);
    const std::size_t n = poly.vertices.size();
    poly.facets.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Vec2I dir = primitive(poly.vertices[(i + 1) % n] - poly.vertices[i]);
        Vec2I nrm = rot_minus90(dir);
        poly.facets.push_back({nrm, dot(nrm, poly.vertices[i])});
    }
    return poly;
}

Region minkowski_sum_with_cone(const Polygon& p, const std::vector<Vec2I>& rays_in) {
    std::set<Vec2I> rset;
    for (const auto& r : rays_in) rset.insert(primitive(r));
    std::vector<Vec2I> rays(rset.begin(), rset.end());
    if (rays.empty()) return Region{p.vertices, {}, p.facets};
    if (rays.size() > 2)
        throw std::invalid_argument("minkowski_sum_with_cone: more than two cone generators");
    if (rays.size() == 2 && cross(rays[0], rays[1]) == 0)
        throw std::invalid_argument("minkowski_sum_with_cone: opposite cone generators");

    // The sum's facet normals are the polygon facets every ray tolerates plus
    // one side facet perpendicular to each extreme ray, offset to the farthest
    // vertex.
    std::vector<HalfPlane> hs;
    for (const auto& f : p.facets) {
        bool keep = true;
        for (const auto& r : rays)
            if (dot(f.normal, r) > 0) { keep = false; break; }
        if (keep) hs.push_back(f);
    }
    auto push_side = [&](const Vec2I& n) {
        Rat best = dot(n, p.vertices[0]);
        for (const auto& v : p.vertices) {
            Rat d = dot(n, v);
            if (d > best) best = d;
        }
        hs.push_back({n, best});
    };
    if (rays.size() == 1) {
        push_side(rot_plus90(rays[0]));
        push_side(rot_minus90(rays[0]));
    } else {
        for (int i = 0; i < 2; ++i) {
            const Vec2I& r = rays[static_cast<std::size_t>(i)];
            const Vec2I& other = rays[static_cast<std::size_t>(1 - i)];
            for (const Vec2I& n : {rot_plus90(r), rot_minus90(r)})
                if (dot(n, other) < 0) push_side(n);
        }
    }
    BuiltRegion b = build_region(hs);
    if (b.kind != BuildKind::UnboundedPointed)
        throw std::logic_error("minkowski_sum_with_cone: unexpected region kind");
    return std::move(b.region);
}

std::optional<Rat> ray_exit(const Region& region, const Vec2Q& origin, const Vec2Q& dir) {
    if (dir.x == 0 && dir.y == 0) throw std::invalid_argument("ray_exit: zero direction");
    if (!region.strictly_contains(origin)) throw std::domain_error("ray_exit: origin is not interior");
    std::optional<Rat> best;
    for (const auto& f : region.facets) {
        Rat nd = dot(f.normal, dir);
        if (nd > 0) {
            Rat s = (f.rhs - dot(f.normal, origin)) / nd;
            if (!best || s < *best) best = s;
        }
    }
    return best;  // nullopt: dir lies in the recession cone
}

Polygon toric_polytope(const Polygon& p, const std::vector<Mat2I>& weyl) {
    std::vector<Vec2Q> orbit;
    orbit.reserve(p.vertices.size() * weyl.size());
    for (const auto& w : weyl)
        for (const auto& v : p.vertices) orbit.push_back(w.apply(v));
    Polygon hull = polygon_from_vertices(orbit);
    // The reflected copies tile the hull exactly iff their union is convex.
    if (hull.area() != Rat(static_cast<unsigned long>(weyl.size())) * p.area())
        throw std::runtime_error("toric_polytope: Weyl orbit union is not convex");
    return hull;
}

std::vector<VertexDelzant> delzant_at_vertices(const Polygon& p, const Mat2I& m_basis) {
    if (m_basis.det() != 1 && m_basis.det() != -1)
        throw std::invalid_argument("delzant_at_vertices: basis is not unimodular");
    const std::int64_t s = m_basis.det();  // inverse = adjugate / det, det = +-1
    const Mat2I inv{s * m_basis.d, -s * m_basis.b, -s * m_basis.c, s * m_basis.a};
    const std::size_t n = p.vertices.size();
    std::vector<VertexDelzant> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Vec2Q to_next = p.vertices[(i + 1) % n] - p.vertices[i];
        Vec2Q to_prev = p.vertices[(i + n - 1) % n] - p.vertices[i];
        Vec2I d1 = inv.apply(primitive(to_next));
        Vec2I d2 = inv.apply(primitive(to_prev));
        out.push_back({p.vertices[i], d1, d2, cross(d1, d2)});
    }
    return out;
}

}  // namespace gfc::exactgeom
