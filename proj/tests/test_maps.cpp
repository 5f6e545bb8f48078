#include <doctest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "spinrep/characters.hpp"
#include "spinrep/maps.hpp"

using namespace spinrep;

namespace {

std::vector<int> rotatePolygon(const PolygonCollection& pc, const std::vector<int>& partner, int polygon)
{
    // Shift every slot of one polygon by two local positions; colours are kept.
    const int off = pc.offset[static_cast<std::size_t>(polygon)];
    const int len = 2 * pc.faceType[polygon];
    auto move = [&](int s) {
        if (pc.polygonOf[static_cast<std::size_t>(s)] != polygon)
            return s;
        return off + (s - off + 2) % len;
    };
    std::vector<int> out(partner.size());
    for (std::size_t s = 0; s < partner.size(); ++s)
        out[static_cast<std::size_t>(move(static_cast<int>(s)))] = move(partner[s]);
    return out;
}

} // namespace

TEST_CASE("polygon collections")
{
    const PolygonCollection pc = buildPolygons(Partition{2, 1});
    CHECK(pc.slotCount() == 6);
    CHECK(pc.polygonCount() == 2);
    CHECK(pc.offset == std::vector<int>{0, 4});
    CHECK(pc.label == std::vector<int>{0, -1, 1, -1, 2, -1});
    CHECK(pc.labelledSlot(1) == 2);
    CHECK(pc.unlabelledSlotAfter(2) == 5);
    CHECK(pc.direction(0) == 1);
    CHECK(pc.direction(3) == -1);
}

TEST_CASE("gluing counts")
{
    CHECK(gluingCount(buildPolygons(Partition{1})) == 1);
    CHECK(gluingCount(buildPolygons(Partition{2})) == 3);
    CHECK(gluingCount(buildPolygons(Partition{5, 2})) == 135135);
    std::uint64_t visited = 0;
    enumerateGluings(buildPolygons(Partition{2, 1}), [&](const GluedMap&) { ++visited; });
    CHECK(visited == 15);
}

TEST_CASE("digon glued to itself")
{
    const PolygonCollection pc = buildPolygons(Partition{1});
    const GluedMap m = glue(pc, {1, 0});
    CHECK(m.whiteVertices == 1);
    CHECK(m.blackVertices == 1);
    CHECK(m.edges == 1);
    CHECK(m.components == 1);
    CHECK(m.eulerPerComponent == std::vector<int>{2});
    CHECK(m.orientable);
    CHECK(underlyingGraphColorings(pc, m, Partition{3, 1}) == 4);
    CHECK_THROWS_AS(glue(pc, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(glue(pc, {1}), std::invalid_argument);
}

TEST_CASE("projective plane")
{
    const PolygonCollection pc = buildPolygons(Partition{5, 2});
    const std::vector<int> partner = projectivePlaneExample();
    const GluedMap m = glue(pc, partner);
    CHECK(m.components == 1);
    CHECK(m.whiteVertices == 3);
    CHECK(m.blackVertices == 3);
    CHECK(m.eulerPerComponent == std::vector<int>{1});
    CHECK_FALSE(m.orientable);
    CHECK_FALSE(isOrientable(pc, m));
    CHECK_FALSE(isOrientableFast(pc, partner));
}

TEST_CASE("orientability and Euler characteristic")
{
    for (const Partition& pi : {Partition{3}, Partition{2, 1}, Partition{1, 1, 1}, Partition{2, 2}, Partition{3, 1}}) {
        const PolygonCollection pc = buildPolygons(pi);
        std::uint64_t orientableCount = 0;
        enumerateGluings(pc, [&](const GluedMap& m) {
            CHECK(isOrientable(pc, m) == m.orientable);
            CHECK(isOrientableFast(pc, m.partner) == m.orientable);
            int euler = 0;
            for (std::size_t c = 0; c < m.eulerPerComponent.size(); ++c) {
                const int e = m.eulerPerComponent[c];
                CHECK(e <= 2);
                if (m.orientablePerComponent[c])
                    CHECK(e % 2 == 0);
                euler += e;
            }
            CHECK(euler == m.whiteVertices + m.blackVertices - m.edges + pi.length());
            CHECK(m.edges == pi.size());
            if (m.orientable)
                ++orientableCount;
            for (int i = 0; i < pi.length(); ++i) {
                const GluedMap r = glue(pc, rotatePolygon(pc, m.partner, i));
                CHECK(r.orientable == m.orientable);
                CHECK(r.whiteVertices == m.whiteVertices);
                CHECK(r.blackVertices == m.blackVertices);
                CHECK(r.eulerPerComponent == m.eulerPerComponent);
            }
        });
        std::uint64_t expected = 0;
        for (const auto& [a, b] : factorizationsOf(Permutation::fromCycleType(pi)))
            expected += std::uint64_t{1} << (pi.length() - orbitCount(a, b));
        CHECK(orientableCount == expected);
    }
}

TEST_CASE("oriented maps of factorizations")
{
    for (int k = 1; k <= 4; ++k)
        for (const auto& pi : partitionsOf(k)) {
            const PolygonCollection pc = buildPolygons(pi);
            for (const auto& [a, b] : factorizationsOf(Permutation::fromCycleType(pi))) {
                const GluedMap m = orientedMap(pc, a, b);
                CHECK(m.orientable);
                CHECK(m.whiteVertices == a.cycleCount());
                CHECK(m.blackVertices == b.cycleCount());
                CHECK(m.components == orbitCount(a, b));
                for (const Partition& lambda : {Partition{3, 1}, Partition{2, 2, 1}, Partition{4}})
                    CHECK(underlyingGraphColorings(pc, m, lambda) == oracle::coloringCount(a, b, lambda));
            }
        }
    const PolygonCollection pc = buildPolygons(Partition{2});
    CHECK_THROWS_AS(orientedMap(pc, Permutation::identity(2), Permutation::identity(2)), std::invalid_argument);
}

TEST_CASE("spin characters through maps")
{
    for (int n = 0; n <= 5; ++n)
        for (const auto& xi : strictPartitionsOf(n)) {
            CHECK(spinStanleyViaMaps(Partition{1}, xi) == n);
            CHECK(spinStanleyViaMaps(Partition{1, 1}, xi) == Rational(fallingFactorial(n, 2)));
            for (const Partition& pi : {Partition{3}, Partition{1, 1, 1}, Partition{3, 1}})
                CHECK(spinStanleyViaMaps(pi, xi) == chSpinNormalized(pi, xi));
        }
    CHECK_THROWS_AS(spinStanleyViaMaps(Partition{2}, StrictPartition{2}), std::invalid_argument);
}

TEST_CASE("census")
{
    const auto rows = mapsCensus(Partition{2});
    REQUIRE(rows.size() == 3);
    int orientable = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i]["matching_id"] == i);
        CHECK(rows[i]["components"] == 1);
        orientable += rows[i]["orientable"].get<bool>() ? 1 : 0;
    }
    CHECK(orientable == 2);
}
