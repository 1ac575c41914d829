#include "gfc/rootdata.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace gfc::rootdata {

namespace {

/// Everything about the underlying rank-two root system, written in the
/// fundamental-weight basis of the simply-connected form.
struct SystemData {
    Mat2Q cartan;                      // columns = simple roots in the weight basis
    std::vector<Vec2Q> positive_roots; // weight basis
    Mat2Q gram;                        // kappa in the weight basis (classical realization)
    Mat2E euclid;                      // weight basis -> Euclidean plane of the tables
};

const SystemData& system_data(RootSystem s) {
    static const std::map<RootSystem, SystemData> table = [] {
        std::map<RootSystem, SystemData> t;
        const Rat h(1, 2);
        t[RootSystem::A1xA1] = {
            Mat2Q{2, 0, 0, 2},
            {{Rat(2), Rat(0)}, {Rat(0), Rat(2)}},
            Mat2Q{1, 0, 0, 1},
            Mat2E{QuadExt(1), QuadExt(0), QuadExt(0), QuadExt(1)},
        };
        t[RootSystem::A2] = {
            Mat2Q{2, -1, -1, 2},
            {{Rat(2), Rat(-1)}, {Rat(-1), Rat(2)}, {Rat(1), Rat(1)}},
            Mat2Q{1, h, h, 1},
            Mat2E{QuadExt(1), QuadExt(h), QuadExt(0), QuadExt::sqrt3(h)},
        };
        t[RootSystem::B2] = {
            Mat2Q{2, -2, -1, 2},
            {{Rat(2), Rat(-1)}, {Rat(-2), Rat(2)}, {Rat(0), Rat(1)}, {Rat(2), Rat(0)}},
            Mat2Q{h, h, h, 1},
            Mat2E{QuadExt(h), QuadExt(0), QuadExt(h), QuadExt(1)},
        };
        t[RootSystem::G2] = {
            Mat2Q{2, -3, -1, 2},
            {{Rat(2), Rat(-1)},
             {Rat(-3), Rat(2)},
             {Rat(-1), Rat(1)},
             {Rat(1), Rat(0)},
             {Rat(3), Rat(-1)},
             {Rat(0), Rat(1)}},
            Mat2Q{1, Rat(3, 2), Rat(3, 2), 3},
            Mat2E{QuadExt(h), QuadExt(0), QuadExt::sqrt3(h), QuadExt::sqrt3()},
        };
        return t;
    }();
    return table.at(s);
}

Vec2I to_integer_vec(const Vec2Q& v, const char* what) {
    if (!rat_is_integer(v.x) || !rat_is_integer(v.y))
        throw std::logic_error(std::string("root datum: expected integer vector in ") + what);
    return {rat_to_int(v.x).convert_to<std::int64_t>(), rat_to_int(v.y).convert_to<std::int64_t>()};
}

Mat2I to_integer_mat(const Mat2Q& m, const char* what) {
    if (!rat_is_integer(m.a) || !rat_is_integer(m.b) || !rat_is_integer(m.c) || !rat_is_integer(m.d))
        throw std::logic_error(std::string("root datum: expected integer matrix in ") + what);
    return {rat_to_int(m.a).convert_to<std::int64_t>(), rat_to_int(m.b).convert_to<std::int64_t>(),
            rat_to_int(m.c).convert_to<std::int64_t>(), rat_to_int(m.d).convert_to<std::int64_t>()};
}

Mat2E euclid_compose(const Mat2E& e, const Mat2Q& b) {
    // e * b with b rational.
    return {b.a * e.a + b.c * e.b, b.b * e.a + b.d * e.b,
            b.a * e.c + b.c * e.d, b.b * e.c + b.d * e.d};
}

struct GroupSpec {
    RootSystem system;
    Mat2Q basis_M;       // weight-basis columns
    bool swap_symmetry;  // factor swap (A1xA1 family) or diagram flip (A2 family)
};

GroupSpec group_spec(Group g) {
    switch (g) {
        case Group::SL2xSL2:   return {RootSystem::A1xA1, Mat2Q{1, 0, 0, 1}, true};
        case Group::PSL2xPSL2: return {RootSystem::A1xA1, Mat2Q{2, 0, 0, 2}, true};
        case Group::SL2xPSL2:  return {RootSystem::A1xA1, Mat2Q{1, 0, 0, 2}, false};
        case Group::SO4:       return {RootSystem::A1xA1, Mat2Q{1, -1, 1, 1}, true};
        case Group::SL3:       return {RootSystem::A2, Mat2Q{1, 0, 0, 1}, true};
        case Group::PSL3:      return {RootSystem::A2, Mat2Q{2, -1, -1, 2}, true};
        case Group::Sp4:       return {RootSystem::B2, Mat2Q{1, 0, 0, 1}, false};
        case Group::SO5:       return {RootSystem::B2, Mat2Q{2, -2, -1, 2}, false};
        case Group::G2:        return {RootSystem::G2, Mat2Q{1, 0, 0, 1}, false};
    }
    throw std::logic_error("group_spec: unknown group");
}

bool is_root(const RootDatum& d, const Vec2Q& v) {
    for (const auto& r : d.positive_roots)
        if (v == r || v == Vec2Q{-r.x, -r.y}) return true;
    return false;
}

void validate(const RootDatum& d) {
    const char* name = d.name.c_str();
    auto fail = [&](const std::string& msg) {
        throw std::logic_error("root datum " + std::string(name) + ": " + msg);
    };

    // 2*rho really is the sum of the positive roots.
    Vec2Q sum{Rat(0), Rat(0)};
    for (const auto& r : d.positive_roots) sum = sum + r;
    if (sum != d.two_rho) fail("two_rho is not the sum of positive roots");

    // Cartan integers from the gram matrix: <ai_vee, aj> = 2 k(ai,aj)/k(ai,ai).
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            Rat cij = 2 * d.kappa(d.simple_roots[i], d.simple_roots[j]) /
                      d.kappa(d.simple_roots[i], d.simple_roots[i]);
            Rat paired = dot(d.wall_normals[i], d.simple_roots[j]);
            if (cij != paired) fail("coroot pairing disagrees with gram matrix");
        }

    // Weyl group: expected order, permutes the roots, preserves kappa.
    static const std::map<RootSystem, size_t> orders = {{RootSystem::A1xA1, 4},
                                                        {RootSystem::A2, 6},
                                                        {RootSystem::B2, 8},
                                                        {RootSystem::G2, 12}};
    if (d.weyl.size() != orders.at(d.system)) fail("unexpected Weyl group order");
    for (const auto& w : d.weyl) {
        if (w.det() != 1 && w.det() != -1) fail("Weyl element not unimodular");
        for (const auto& r : d.positive_roots)
            if (!is_root(d, w.apply(r))) fail("Weyl element does not permute roots");
        Mat2Q wq = w.to_rational();
        Mat2Q g2 = wq.transpose() * d.gram * wq;
        if (!(g2 == d.gram)) fail("Weyl element does not preserve kappa");
    }

    // Dedup automorphisms: lattice maps fixing the chamber and permuting the
    // positive roots.
    for (const auto& a : d.automorphisms) {
        if (a.det() != 1 && a.det() != -1) fail("automorphism not unimodular");
        for (const auto& r : d.positive_roots) {
            Vec2Q img = a.apply(r);
            if (!std::count(d.positive_roots.begin(), d.positive_roots.end(), img))
                fail("automorphism does not permute positive roots");
        }
        Mat2Q aq = a.to_rational();
        if (!(aq.transpose() * d.gram * aq == d.gram)) fail("automorphism does not preserve kappa");
    }

    // Perfect pairing between the stored bases (in the reference bases the
    // pairing matrix is cartan^-1).
    const auto& sys = system_data(d.system);
    Mat2Q pairing = d.basis_N.transpose() * sys.cartan.inverse() * d.basis_M;
    if (!(pairing == Mat2Q::identity())) fail("basis_N / basis_M pairing is not perfect");
}

RootDatum build(Group g) {
    GroupSpec spec = group_spec(g);
    const SystemData& sys = system_data(spec.system);
    const Mat2Q& B = spec.basis_M;
    Mat2Q Binv = B.inverse();

    RootDatum d;
    d.group = g;
    d.system = spec.system;
    d.name = group_name(g);
    d.basis_M = B;
    d.basis_N = sys.cartan.transpose() * Binv.transpose();
    to_integer_mat(d.basis_N, "basis_N");  // integrality check only

    for (const auto& r : sys.positive_roots) d.positive_roots.push_back(Binv.apply(r));
    d.simple_roots = {Binv.apply(sys.cartan.column(0)), Binv.apply(sys.cartan.column(1))};
    d.two_rho = {Rat(0), Rat(0)};
    for (const auto& r : d.positive_roots) d.two_rho = d.two_rho + r;

    // <ai_vee, m> in M-coordinates is row i of basis_M (the coroots are the
    // dual basis of the reference weights).
    d.wall_normals = {to_integer_vec({B.a, B.b}, "wall normal 1"),
                      to_integer_vec({B.c, B.d}, "wall normal 2")};

    d.gram = B.transpose() * sys.gram * B;

    // Simple reflections: s_i(x) = x - <ai_vee, x> a_i, conjugated into
    // M-lattice coordinates.
    for (int i = 0; i < 2; ++i) {
        Vec2Q alpha = sys.cartan.column(i);
        Mat2Q refl{1, 0, 0, 1};
        if (i == 0) {
            refl.a -= alpha.x;
            refl.c -= alpha.y;
        } else {
            refl.b -= alpha.x;
            refl.d -= alpha.y;
        }
        d.simple_reflections[i] = to_integer_mat(Binv * refl * B, "simple reflection");
    }

    d.weyl = weyl_group(d);

    if (spec.swap_symmetry) {
        Mat2Q swap{0, 1, 1, 0};  // factor swap / diagram flip in the weight basis
        d.automorphisms.push_back(to_integer_mat(Binv * swap * B, "automorphism"));
    }

    d.euclid_embed = euclid_compose(sys.euclid, B);

    validate(d);
    return d;
}

}  // namespace

std::string group_name(Group g) {
    switch (g) {
        case Group::SL2xSL2:   return "SL2xSL2";
        case Group::PSL2xPSL2: return "PSL2xPSL2";
        case Group::SL2xPSL2:  return "SL2xPSL2";
        case Group::SO4:       return "SO4";
        case Group::SL3:       return "SL3";
        case Group::PSL3:      return "PSL3";
        case Group::Sp4:       return "Sp4";
        case Group::SO5:       return "SO5";
        case Group::G2:        return "G2";
    }
    throw std::logic_error("group_name: unknown group");
}

std::optional<Group> group_from_name(const std::string& name) {
    for (Group g : kAllGroups)
        if (group_name(g) == name) return g;
    return std::nullopt;
}

Rat RootDatum::kappa(const Vec2Q& u, const Vec2Q& v) const {
    Vec2Q gv = gram.apply(v);
    return dot(u, gv);
}

const RootDatum& root_datum(Group g) {
    static const std::map<Group, RootDatum> cache = [] {
        std::map<Group, RootDatum> c;
        for (Group g : kAllGroups) c.emplace(g, build(g));
        return c;
    }();
    return cache.at(g);
}

std::vector<Mat2I> weyl_group(const RootDatum& datum) {
    std::vector<Mat2I> elements{Mat2I::identity()};
    std::set<Mat2I> seen{Mat2I::identity()};
    for (size_t i = 0; i < elements.size(); ++i) {
        for (const auto& s : datum.simple_reflections) {
            Mat2I next = s * elements[i];
            if (seen.insert(next).second) {
                elements.push_back(next);
                if (elements.size() > 48)
                    throw std::runtime_error("weyl_group: closure exceeds rank-two bound");
            }
        }
    }
    return elements;
}

Vec2E to_euclidean(const RootDatum& datum, const Vec2Q& lattice_point) {
    return datum.euclid_embed.apply_rational(lattice_point.x, lattice_point.y);
}

std::array<Rat, 2> positive_cone_coords(const RootDatum& datum, const Vec2Q& v) {
    Mat2Q roots = Mat2Q::from_columns(datum.simple_roots[0], datum.simple_roots[1]);
    Vec2Q c = roots.inverse().apply(v);
    return {c.x, c.y};
}

RootDatum with_scaled_gram(const RootDatum& datum, const Rat& c) {
    if (c <= 0) throw std::invalid_argument("with_scaled_gram: scale must be positive");
    RootDatum d = datum;
    d.gram = {c * datum.gram.a, c * datum.gram.b, c * datum.gram.c, c * datum.gram.d};
    return d;
}

}  // namespace gfc::rootdata
