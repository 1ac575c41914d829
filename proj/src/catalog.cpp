#include "gfc/catalog.hpp"

#include "gfc/enumerate.hpp"
#include "gfc/geometry.hpp"

#include <map>
#include <utility>

namespace gfc::catalog {
namespace {

using rootdata::Group;

Rat q(long long num, long long den = 1) { return Rat(num, den); }

std::optional<Vec2E> bc(Rat x, Rat y) {
    return Vec2E{QuadExt(std::move(x)), QuadExt(std::move(y))};
}

/// Barycenter of the form (x, c*sqrt(3)) — the A2 and G2 Euclidean frames.
std::optional<Vec2E> bc3(Rat x, Rat c) {
    return Vec2E{QuadExt(std::move(x)), QuadExt::sqrt3(std::move(c))};
}

std::vector<CaseEntry> build_entries() {
    const std::optional<Vec2E> nb;   // barycenter not published (homogeneous cases)
    const std::optional<Rat> r1;     // Ricci bound 1 (not stored)
    const Rat h72 = q(7, 2), h32 = q(3, 2), h52 = q(5, 2), h112 = q(11, 2);

    std::vector<CaseEntry> t;
    t.reserve(60);

    // SL2 x SL2: fifteen cases.
    t.push_back({Group::SL2xSL2, 1, "I.1.1", {{0, 0}, {0, 3}, {1, 3}, {7, 0}}, false, false,
                 bc(q(11427, 3794), q(5661, 3794)), r1});
    t.push_back({Group::SL2xSL2, 2, "I.1.1.a", {{0, 0}, {0, 3}, {1, 3}, {3, 2}, {5, 0}}, false,
                 false, bc(q(174753, 72086), q(119919, 72086)), r1});
    t.push_back({Group::SL2xSL2, 3, "I.1.1.b", {{0, 0}, {0, 3}, {1, 3}, {3, 2}, {3, 0}}, false,
                 false, bc(q(106833, 52486), q(4233, 2282)), r1});
    t.push_back({Group::SL2xSL2, 4, "I.1.2", {{0, 0}, {0, 3}, {1, 3}, {4, 1}, {5, 0}}, false,
                 false, bc(q(130089, 55657), q(87441, 55657)), r1});
    t.push_back({Group::SL2xSL2, 5, "I.1.3", {{0, 0}, {0, 3}, {1, 3}, {5, 0}}, false, false,
                 bc(q(243, 112), q(177, 112)), r1});
    t.push_back({Group::SL2xSL2, 6, "I.2.1", {{0, 0}, {0, 3}, {2, 3}, {5, 0}}, false, false,
                 bc(q(1569, 665), q(1233, 665)), r1});
    t.push_back({Group::SL2xSL2, 7, "I.2.1.a", {{0, 0}, {0, 3}, {2, 3}, {3, 2}, {3, 0}}, true,
                 true, bc(q(28779, 14035), q(28779, 14035)), r1});
    t.push_back({Group::SL2xSL2, 8, "I.2.2", {{0, 0}, {0, 3}, {2, 3}, {3, 0}}, false, false,
                 bc(q(2817, 1631), q(3411, 1631)), r1});
    t.push_back({Group::SL2xSL2, 9, "I.3", {{0, 0}, {0, 3}, {3, 3}, {3, 0}}, true, true,
                 bc(q(9, 4), q(9, 4)), r1});
    t.push_back({Group::SL2xSL2, 10, "II.1", {{0, 0}, {0, 5}, {5, 0}}, false, true,
                 bc(q(15, 7), q(15, 7)), r1});
    t.push_back({Group::SL2xSL2, 11, "II.2.1", {{0, 0}, {0, 3}, {9, 0}}, false, false,
                 bc(q(27, 7), q(9, 7)), r1});
    t.push_back({Group::SL2xSL2, 12, "II.2.1.a", {{0, 0}, {0, 3}, {3, 2}, {7, 0}}, false, false,
                 bc(q(293793, 93989), q(131547, 93989)), r1});
    t.push_back({Group::SL2xSL2, 13, "II.2.1.b", {{0, 0}, {0, 3}, {3, 2}, {5, 0}}, false, false,
                 bc(q(160017, 63637), q(98619, 63637)), r1});
    t.push_back({Group::SL2xSL2, 14, "II.2.2", {{0, 0}, {0, 3}, {5, 1}, {7, 0}}, false, false,
                 bc(q(245313, 77896), q(101469, 77896)), r1});
    t.push_back({Group::SL2xSL2, 15, "II.2.3", {{0, 0}, {0, 3}, {7, 0}}, false, false,
                 bc(q(3), q(9, 7)), r1});

    // PSL2 x PSL2: seven cases (Euclidean frame doubles the lattice frame).
    t.push_back({Group::PSL2xPSL2, 1, "I.1.1", {{0, 0}, {0, 2}, {1, 2}, {3, 0}}, false, true,
                 bc(q(783, 287), q(678, 287)), r1});
    t.push_back({Group::PSL2xPSL2, 2, "I.1.1.a", {{0, 0}, {0, 2}, {1, 2}, {2, 1}, {2, 0}}, true,
                 true, bc(q(10254, 4081), q(10254, 4081)), r1});
    t.push_back({Group::PSL2xPSL2, 3, "I.1.2", {{0, 0}, {0, 2}, {1, 2}, {2, 0}}, false, true,
                 bc(q(99, 49), q(128, 49)), r1});
    t.push_back({Group::PSL2xPSL2, 4, "I.2", {{0, 0}, {0, 2}, {2, 2}, {2, 0}}, true, true,
                 bc(q(3), q(3)), r1});
    t.push_back({Group::PSL2xPSL2, 5, "II.1", {{0, 0}, {0, 3}, {3, 0}}, false, true,
                 bc(q(18, 7), q(18, 7)), r1});
    t.push_back({Group::PSL2xPSL2, 6, "II.2.1", {{0, 0}, {0, 2}, {4, 0}}, false, false,
                 bc(q(24, 7), q(12, 7)), r1});
    t.push_back({Group::PSL2xPSL2, 7, "II.2.1.a", {{0, 0}, {0, 2}, {2, 1}, {3, 0}}, false, false,
                 bc(q(8418, 2863), q(5346, 2863)), r1});

    // SL2 x PSL2: fourteen cases (Euclidean frame doubles the second factor).
    t.push_back({Group::SL2xPSL2, 1, "I.1.1", {{0, 0}, {0, 2}, {1, 2}, {5, 0}}, false, true,
                 bc(q(243, 112), q(59, 28)), r1});
    t.push_back({Group::SL2xPSL2, 2, "I.1.1.a", {{0, 0}, {0, 2}, {1, 2}, {3, 1}, {4, 0}}, false,
                 true, bc(q(12069, 6034), q(13383, 6034)), r1});
    t.push_back({Group::SL2xPSL2, 3, "I.1.1.b", {{0, 0}, {0, 2}, {1, 2}, {3, 1}, {3, 0}}, false,
                 false, bc(q(2067, 1099), q(2550, 1099)), r1});
    t.push_back({Group::SL2xPSL2, 4, "I.1.2", {{0, 0}, {0, 2}, {1, 2}, {4, 0}}, false, false,
                 bc(q(1797, 1022), q(1128, 511)), r1});
    t.push_back({Group::SL2xPSL2, 5, "I.2.1", {{0, 0}, {0, 2}, {2, 2}, {4, 0}}, false, true,
                 bc(q(99, 49), q(128, 49)), r1});
    t.push_back({Group::SL2xPSL2, 6, "I.2.1.a", {{0, 0}, {0, 2}, {2, 2}, {3, 1}, {3, 0}}, true,
                 false, bc(q(17274, 8869), q(23943, 8869)), q(8869, 9333)});
    t.push_back({Group::SL2xPSL2, 7, "I.2.2", {{0, 0}, {0, 2}, {2, 2}, {3, 0}}, false, false,
                 bc(q(2817, 1631), q(4548, 1631)), r1});
    t.push_back({Group::SL2xPSL2, 8, "I.3", {{0, 0}, {0, 2}, {3, 2}, {3, 0}}, true, true,
                 bc(q(9, 4), q(3)), r1});
    t.push_back({Group::SL2xPSL2, 9, "II.1", {{0, 0}, {0, 6}, {3, 0}}, false, false,
                 bc(q(9, 7), q(36, 7)), r1});
    t.push_back({Group::SL2xPSL2, 10, "II.2.1", {{0, 0}, {0, 4}, {4, 0}}, false, false,
                 bc(q(12, 7), q(24, 7)), r1});
    t.push_back({Group::SL2xPSL2, 11, "II.2.1.a", {{0, 0}, {0, 4}, {3, 1}, {3, 0}}, false, false,
                 bc(q(846, 511), q(1797, 511)), r1});
    t.push_back({Group::SL2xPSL2, 12, "II.2.1.b", {{0, 0}, {0, 4}, {2, 2}, {3, 0}}, false, false,
                 bc(q(4209, 2863), q(10692, 2863)), r1});
    t.push_back({Group::SL2xPSL2, 13, "II.2.1.c", {{0, 0}, {0, 4}, {1, 3}, {3, 0}}, false, false,
                 bc(q(10887, 8288), q(30927, 8288)), r1});
    t.push_back({Group::SL2xPSL2, 14, "II.2.2", {{0, 0}, {0, 4}, {3, 0}}, false, false,
                 bc(q(9, 7), q(24, 7)), r1});

    // SO4: six cases (Euclidean frame (a,b) -> (a-b, a+b)).
    t.push_back({Group::SO4, 1, "I.1.1", {{0, 0}, {h32, h32}, {2, 1}, {5, -5}}, false, false,
                 bc(q(8229, 1918), q(1368, 959)), r1});
    t.push_back({Group::SO4, 2, "I.1.2", {{0, 0}, {h32, h32}, {2, 1}, {3, -1}, {3, -3}}, true,
                 false, bc(q(467331, 150514), q(125928, 75257)), q(75257, 99843)});
    t.push_back({Group::SO4, 3, "I.1.3", {{0, 0}, {h32, h32}, {2, 1}, {3, -3}}, false, false,
                 bc(q(1341, 518), q(396, 259)), r1});
    t.push_back({Group::SO4, 4, "I.2.1", {{0, 0}, {h32, h32}, {3, 0}, {3, -3}}, true, false,
                 bc(q(297, 98), q(96, 49)), q(49, 51)});
    t.push_back({Group::SO4, 5, "I.2.2", {{0, 0}, {h32, h32}, {3, 0}, {h32, -h32}}, false, true,
                 bc(q(9, 4), q(9, 4)), r1});
    t.push_back({Group::SO4, 6, "II", {{0, 0}, {3, 3}, {3, -3}}, true, true,
                 bc(q(18, 7), q(18, 7)), r1});

    // SL3: five cases (Euclidean frame (x, c*sqrt(3))).
    t.push_back({Group::SL3, 1, "II", {{0, 0}, {5, 0}, {0, 5}}, true, true,
                 bc3(q(10, 3), q(10, 9)), r1});
    t.push_back({Group::SL3, 2, "I.2", {{0, 0}, {0, h72}, {3, 2}, {5, 0}}, true, false,
                 bc3(q(156038947, 45427872), q(16309243, 19469088)), q(1419621, 1493483)});
    t.push_back({Group::SL3, 3, "I.3.2", {{0, 0}, {0, h72}, {1, 3}, {4, 1}, {5, 0}}, true, false,
                 bc3(q(2234103775, 675213408), q(527459083, 675213408)),
                 q(21100419, 28437901)});
    t.push_back({Group::SL3, 4, "I.1", {{0, 0}, {0, h72}, {7, 0}}, false, true,
                 bc3(q(1183, 288), q(203, 288)), r1});
    t.push_back({Group::SL3, 5, "I.3.1", {{0, 0}, {0, h72}, {1, 3}, {5, 0}}, false, false,
                 bc3(q(1580795359, 507050784), q(402732299, 507050784)), r1});

    // PSL3: three cases (all smooth with a Kaehler--Einstein metric).
    t.push_back({Group::PSL3, 1, "I.3", {{0, 0}, {h32, 3}, {6, 3}}, true, true, nb, r1});
    t.push_back({Group::PSL3, 2, "I.2", {{0, 0}, {h32, 3}, {3, 3}, {3, h32}}, true, true,
                 bc3(q(24641, 6592), q(24641, 19776)), r1});
    t.push_back({Group::PSL3, 3, "I.1", {{0, 0}, {h32, 3}, {2, 3}, {3, 2}, {3, h32}}, true, true,
                 bc3(q(189565091, 57005952), q(189565091, 171017856)), r1});

    // Sp4: four cases.
    t.push_back({Group::Sp4, 1, "I.3", {{0, 0}, {0, h72}, {7, 0}}, true, true, nb, r1});
    t.push_back({Group::Sp4, 2, "I.2", {{0, 0}, {0, h72}, {3, 2}, {5, 0}}, true, true,
                 bc(q(135148980025, 104829824704), q(5019760035, 1637966011)), r1});
    t.push_back({Group::Sp4, 3, "I.1.2", {{0, 0}, {0, h72}, {1, 3}, {4, 1}, {5, 0}}, true, false,
                 bc(q(27756440595, 22318407232), q(3043253830, 1046175339)),
                 q(1046175339, 1236719713)});
    t.push_back({Group::Sp4, 4, "I.1.1", {{0, 0}, {0, h72}, {1, 3}, {5, 0}}, false, false,
                 bc(q(53741124025, 47717371328), q(192699595, 67780357)), r1});

    // SO5: four cases.
    t.push_back({Group::SO5, 1, "I.2", {{0, 0}, {4, 4}, {8, 4}}, true, true, nb, r1});
    t.push_back({Group::SO5, 2, "I.1", {{0, 0}, {4, 4}, {5, 4}, {5, h52}}, true, true,
                 bc(q(6332682925, 5547479872), q(18534175955, 5547479872)), r1});
    t.push_back({Group::SO5, 3, "II.1", {{0, 0}, {5, 5}, {5, h52}}, false, true,
                 bc(q(725, 704), q(225, 64)), r1});
    t.push_back({Group::SO5, 4, "II.2", {{0, 0}, {4, 4}, {5, 3}, {5, h52}}, false, true,
                 bc(q(1110073615, 943350848), q(8612750675, 2830052544)), r1});

    // G2: two cases.
    t.push_back({Group::G2, 1, "I.1", {{0, 0}, {0, h72}, {1, 3}, {h112, 0}}, true, true,
                 bc3(q(32567112922303267, 27292859194142720),
                     q(247470028273390111, 81878577582428160)),
                 r1});
    t.push_back({Group::G2, 2, "I.2", {{0, 0}, {0, h72}, {7, 0}}, true, true,
                 bc3(q(139601, 79360), q(49, 15)), r1});

    return t;
}

}  // namespace

const std::vector<CaseEntry>& entries() {
    static const std::vector<CaseEntry> all = build_entries();
    return all;
}

std::vector<const CaseEntry*> entries_for(rootdata::Group group) {
    std::vector<const CaseEntry*> out;
    for (const CaseEntry& e : entries())
        if (e.group == group) out.push_back(&e);
    return out;
}

const CaseEntry* find_by_key(const rootdata::RootDatum& datum, const std::string& key) {
    using MapKey = std::pair<rootdata::Group, std::string>;
    static const std::map<MapKey, const CaseEntry*> by_key = [] {
        std::map<MapKey, const CaseEntry*> m;
        for (const CaseEntry& e : entries()) {
            const rootdata::RootDatum& d = rootdata::root_datum(e.group);
            exactgeom::Polygon poly = exactgeom::polygon_from_vertices(e.vertices);
            m.emplace(MapKey{e.group, enumerate::canonical_key(d, poly)}, &e);
        }
        return m;
    }();
    auto it = by_key.find(MapKey{datum.group, key});
    return it == by_key.end() ? nullptr : it->second;
}

}  // namespace gfc::catalog
