#include "spinrep/maps.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "spinrep/parallel.hpp"

namespace spinrep {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x)
    {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

void checkMatching(const PolygonCollection& pc, const std::vector<int>& partner)
{
    const int n = pc.slotCount();
    if (static_cast<int>(partner.size()) != n)
        throw std::invalid_argument("matching has the wrong number of slots");
    for (int a = 0; a < n; ++a) {
        const int b = partner[static_cast<std::size_t>(a)];
        if (b < 0 || b >= n || b == a || partner[static_cast<std::size_t>(b)] != a)
            throw std::invalid_argument("matching is not a perfect matching of the edge slots");
    }
}

// Extends a partial matching (-1 = unmatched) in smallest-unmatched-first order.
void extend(const PolygonCollection& pc, std::vector<int>& partner, const std::function<void(const GluedMap&)>& visit)
{
    const auto first = std::find(partner.begin(), partner.end(), -1);
    if (first == partner.end()) {
        visit(glue(pc, partner));
        return;
    }
    const int a = static_cast<int>(first - partner.begin());
    for (int b = a + 1; b < pc.slotCount(); ++b) {
        if (partner[static_cast<std::size_t>(b)] != -1)
            continue;
        partner[static_cast<std::size_t>(a)] = b;
        partner[static_cast<std::size_t>(b)] = a;
        extend(pc, partner, visit);
        partner[static_cast<std::size_t>(a)] = -1;
        partner[static_cast<std::size_t>(b)] = -1;
    }
}

} // namespace

int PolygonCollection::whiteCorner(int slot) const
{
    const int poly = polygonOf[static_cast<std::size_t>(slot)];
    const int sides = 2 * faceType[static_cast<std::size_t>(poly)];
    const int j = localSlot(slot);
    return offset[static_cast<std::size_t>(poly)] + (j % 2 == 0 ? j : (j + 1) % sides);
}

int PolygonCollection::blackCorner(int slot) const
{
    const int poly = polygonOf[static_cast<std::size_t>(slot)];
    const int sides = 2 * faceType[static_cast<std::size_t>(poly)];
    const int j = localSlot(slot);
    return offset[static_cast<std::size_t>(poly)] + (j % 2 == 0 ? (j + 1) % sides : j);
}

int PolygonCollection::labelledSlot(int x) const
{
    const auto it = std::find(label.begin(), label.end(), x);
    if (it == label.end())
        throw std::invalid_argument("no edge carries label " + std::to_string(x));
    return static_cast<int>(it - label.begin());
}

PolygonCollection buildPolygons(const Partition& pi)
{
    PolygonCollection pc;
    pc.faceType = pi;
    int slot = 0;
    int point = 0;
    for (int i = 0; i < pi.length(); ++i) {
        pc.offset.push_back(slot);
        for (int j = 0; j < 2 * pi[static_cast<std::size_t>(i)]; ++j) {
            pc.polygonOf.push_back(i);
            pc.label.push_back(j % 2 == 0 ? point++ : -1);
        }
        slot += 2 * pi[static_cast<std::size_t>(i)];
    }
    return pc;
}

GluedMap glue(const PolygonCollection& pc, const std::vector<int>& partner)
{
    checkMatching(pc, partner);
    const int n = pc.slotCount();
    UnionFind corners(n);
    UnionFind faces(pc.polygonCount());
    for (int a = 0; a < n; ++a) {
        const int b = partner[static_cast<std::size_t>(a)];
        if (b < a)
            continue;
        corners.unite(pc.whiteCorner(a), pc.whiteCorner(b));
        corners.unite(pc.blackCorner(a), pc.blackCorner(b));
        faces.unite(pc.polygonOf[static_cast<std::size_t>(a)], pc.polygonOf[static_cast<std::size_t>(b)]);
    }

    GluedMap m;
    m.partner = partner;
    m.edges = n / 2;
    std::vector<int> idOfRoot(static_cast<std::size_t>(n), -1);
    m.vertexOfCorner.resize(static_cast<std::size_t>(n));
    for (int c = 0; c < n; ++c) {
        const int r = corners.find(c);
        if (idOfRoot[static_cast<std::size_t>(r)] == -1) {
            idOfRoot[static_cast<std::size_t>(r)] = static_cast<int>(m.vertexIsWhite.size());
            const bool white = pc.localSlot(c) % 2 == 0; // corner c shares its local index with slot c
            m.vertexIsWhite.push_back(white);
            ++(white ? m.whiteVertices : m.blackVertices);
        }
        m.vertexOfCorner[static_cast<std::size_t>(c)] = idOfRoot[static_cast<std::size_t>(r)];
    }

    std::vector<int> compOfRoot(static_cast<std::size_t>(pc.polygonCount()), -1);
    for (int i = 0; i < pc.polygonCount(); ++i) {
        const int r = faces.find(i);
        if (compOfRoot[static_cast<std::size_t>(r)] == -1)
            compOfRoot[static_cast<std::size_t>(r)] = m.components++;
        m.componentOfPolygon.push_back(compOfRoot[static_cast<std::size_t>(r)]);
    }
    m.eulerPerComponent.assign(static_cast<std::size_t>(m.components), 0);
    std::vector<bool> seen(m.vertexIsWhite.size(), false);
    for (int c = 0; c < n; ++c) {
        const int comp = m.componentOfPolygon[static_cast<std::size_t>(pc.polygonOf[static_cast<std::size_t>(c)])];
        const int v = m.vertexOfCorner[static_cast<std::size_t>(c)];
        if (!seen[static_cast<std::size_t>(v)]) {
            seen[static_cast<std::size_t>(v)] = true;
            ++m.eulerPerComponent[static_cast<std::size_t>(comp)];
        }
        if (partner[static_cast<std::size_t>(c)] > c)
            --m.eulerPerComponent[static_cast<std::size_t>(comp)];
    }
    for (int i = 0; i < pc.polygonCount(); ++i)
        ++m.eulerPerComponent[static_cast<std::size_t>(m.componentOfPolygon[static_cast<std::size_t>(i)])];
    m.orientablePerComponent.assign(static_cast<std::size_t>(m.components), true);
    const std::vector<bool> ok = orientablePolygons(pc, partner);
    for (int i = 0; i < pc.polygonCount(); ++i)
        if (!ok[static_cast<std::size_t>(i)])
            m.orientablePerComponent[static_cast<std::size_t>(m.componentOfPolygon[static_cast<std::size_t>(i)])] = false;
    m.orientable = std::all_of(m.orientablePerComponent.begin(), m.orientablePerComponent.end(), [](bool b) { return b; });
    return m;
}

void enumerateGluings(const PolygonCollection& pc, const std::function<void(const GluedMap&)>& visit)
{
    std::vector<int> partner(static_cast<std::size_t>(pc.slotCount()), -1);
    if (partner.empty()) {
        visit(glue(pc, partner));
        return;
    }
    extend(pc, partner, visit);
}

std::uint64_t gluingCount(const PolygonCollection& pc)
{
    std::uint64_t count = 1;
    for (int m = pc.slotCount() - 1; m > 1; m -= 2)
        count *= static_cast<std::uint64_t>(m);
    return count;
}

bool isOrientable(const PolygonCollection& pc, const GluedMap& m)
{
    const int faces = pc.polygonCount();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << faces); ++mask) {
        auto dir = [&](int slot) {
            const bool flip = (mask >> pc.polygonOf[static_cast<std::size_t>(slot)]) & 1U;
            return flip ? -pc.direction(slot) : pc.direction(slot);
        };
        bool ok = true;
        for (int a = 0; a < pc.slotCount() && ok; ++a)
            ok = dir(a) == -dir(m.partner[static_cast<std::size_t>(a)]);
        if (ok)
            return true;
    }
    return false;
}

std::vector<bool> orientablePolygons(const PolygonCollection& pc, const std::vector<int>& partner)
{
    // Node 2i means "polygon i keeps its reference direction", 2i+1 "flipped".
    const int faces = pc.polygonCount();
    UnionFind uf(2 * faces);
    for (int a = 0; a < pc.slotCount(); ++a) {
        const int b = partner[static_cast<std::size_t>(a)];
        if (b < a)
            continue;
        const int i = pc.polygonOf[static_cast<std::size_t>(a)];
        const int j = pc.polygonOf[static_cast<std::size_t>(b)];
        // d_i s(a) = -d_j s(b): equal directions when s(a) = -s(b).
        const bool same = pc.direction(a) == -pc.direction(b);
        uf.unite(2 * i, 2 * j + (same ? 0 : 1));
        uf.unite(2 * i + 1, 2 * j + (same ? 1 : 0));
    }
    // A contradiction in one polygon spreads to its whole component.
    std::vector<bool> ok(static_cast<std::size_t>(faces), true);
    UnionFind comp(faces);
    for (int a = 0; a < pc.slotCount(); ++a)
        comp.unite(pc.polygonOf[static_cast<std::size_t>(a)],
                   pc.polygonOf[static_cast<std::size_t>(partner[static_cast<std::size_t>(a)])]);
    std::vector<bool> badRoot(static_cast<std::size_t>(faces), false);
    for (int i = 0; i < faces; ++i)
        if (uf.find(2 * i) == uf.find(2 * i + 1))
            badRoot[static_cast<std::size_t>(comp.find(i))] = true;
    for (int i = 0; i < faces; ++i)
        ok[static_cast<std::size_t>(i)] = !badRoot[static_cast<std::size_t>(comp.find(i))];
    return ok;
}

bool isOrientableFast(const PolygonCollection& pc, const std::vector<int>& partner)
{
    const auto ok = orientablePolygons(pc, partner);
    return std::all_of(ok.begin(), ok.end(), [](bool b) { return b; });
}

BicoloredGraph underlyingGraph(const PolygonCollection& pc, const GluedMap& m)
{
    std::vector<int> local(m.vertexIsWhite.size());
    BicoloredGraph g;
    for (std::size_t v = 0; v < m.vertexIsWhite.size(); ++v)
        local[v] = m.vertexIsWhite[v] ? g.white++ : g.black++;
    for (int a = 0; a < pc.slotCount(); ++a)
        if (m.partner[static_cast<std::size_t>(a)] > a)
            g.edges.emplace_back(local[static_cast<std::size_t>(m.vertexOfCorner[static_cast<std::size_t>(pc.whiteCorner(a))])],
                                 local[static_cast<std::size_t>(m.vertexOfCorner[static_cast<std::size_t>(pc.blackCorner(a))])]);
    return g;
}

Integer underlyingGraphColorings(const PolygonCollection& pc, const GluedMap& m, const Partition& lambda)
{
    return coloringCountGraph(underlyingGraph(pc, m), lambda);
}

Rational spinStanleyViaMaps(const Partition& pi, const StrictPartition& xi)
{
    if (!pi.isOdd())
        throw std::invalid_argument("map formula needs an odd partition, got " + toString(pi));
    const PolygonCollection pc = buildPolygons(pi);
    const Partition d = doubleOf(xi);
    auto termOf = [&](const GluedMap& m) -> Integer {
        if (!m.orientable)
            return 0;
        const Integer n = underlyingGraphColorings(pc, m, d);
        return (pi.size() - m.whiteVertices) % 2 == 0 ? n : Integer(-n);
    };
    Integer sum = 0;
    if (pc.slotCount() == 0) {
        enumerateGluings(pc, [&](const GluedMap& m) { sum += termOf(m); });
    } else {
        // One task per partner of slot 0.
        sum = parallelReduce<Integer>(
            static_cast<std::uint64_t>(pc.slotCount() - 1),
            [&](std::uint64_t first, std::uint64_t last) {
                Integer acc = 0;
                for (std::uint64_t t = first; t < last; ++t) {
                    std::vector<int> partner(static_cast<std::size_t>(pc.slotCount()), -1);
                    partner[0] = static_cast<int>(t) + 1;
                    partner[t + 1] = 0;
                    extend(pc, partner, [&](const GluedMap& m) { acc += termOf(m); });
                }
                return acc;
            },
            [](Integer& acc, const Integer& part) { acc += part; }, Integer(0));
    }
    return Rational(sum) * powerOfTwo(-pi.length());
}

GluedMap orientedMap(const PolygonCollection& pc, const Permutation& s1, const Permutation& s2)
{
    const Permutation pi = s1 * s2;
    if (pi != Permutation::fromCycleType(pc.faceType))
        throw std::invalid_argument("σ1 σ2 does not match the block form of the face type");
    const Permutation g = s2.inverse();
    std::vector<int> partner(static_cast<std::size_t>(pc.slotCount()), -1);
    for (int x = 0; x < pi.size(); ++x) {
        const int a = pc.labelledSlot(x);
        const int b = pc.unlabelledSlotAfter(g(x));
        partner[static_cast<std::size_t>(a)] = b;
        partner[static_cast<std::size_t>(b)] = a;
    }
    return glue(pc, partner);
}

std::vector<int> projectivePlaneExample()
{
    // Slots 0..9 are the sides 1..10 of the first polygon, 10..13 the sides A..D of the second.
    const std::vector<std::pair<int, int>> pairs{{0, 2}, {1, 9}, {3, 8}, {4, 13}, {5, 12}, {6, 11}, {7, 10}};
    std::vector<int> partner(14, -1);
    for (auto [a, b] : pairs) {
        partner[static_cast<std::size_t>(a)] = b;
        partner[static_cast<std::size_t>(b)] = a;
    }
    return partner;
}

nlohmann::json mapsCensus(const Partition& pi)
{
    const PolygonCollection pc = buildPolygons(pi);
    nlohmann::json rows = nlohmann::json::array();
    std::uint64_t id = 0;
    enumerateGluings(pc, [&](const GluedMap& m) {
        rows.push_back({{"matching_id", id++},
                        {"components", m.components},
                        {"white_vertices", m.whiteVertices},
                        {"orientable", m.orientable},
                        {"euler_per_component", m.eulerPerComponent}});
    });
    return rows;
}

} // namespace spinrep
