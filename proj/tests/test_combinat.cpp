#include <doctest.h>

#include <set>
#include <stdexcept>

#include "oracles.hpp"
#include "spinrep/partition.hpp"
#include "spinrep/permutation.hpp"

using namespace spinrep;

TEST_CASE("partition invariants")
{
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(StrictPartition({2, 2}), std::invalid_argument);
    CHECK(Partition::fromUnsorted({1, 0, 3, 1}) == Partition{3, 1, 1});
    CHECK(Partition{3, 1, 1}.multiplicity(1) == 2);
    CHECK(Partition{5, 3, 1}.isOdd());
    CHECK_FALSE(Partition{2, 1}.isOdd());
    CHECK(Partition{3, 1}.join(Partition{2, 1}) == Partition{3, 2, 1, 1});
    CHECK(Partition{3}.withOnes(2) == Partition{3, 1, 1});
    CHECK(Partition{3, 1, 1}.withoutOnes() == Partition{3});
}

TEST_CASE("conjugate")
{
    CHECK(Partition{3, 1}.conjugate() == Partition{2, 1, 1});
    CHECK(Partition().conjugate() == Partition());
    CHECK(Partition{7, 7, 5, 3, 2, 2}.conjugate() == Partition{6, 6, 4, 3, 3, 2, 2});
    for (int n = 0; n <= 10; ++n)
        for (const auto& p : partitionsOf(n))
            CHECK(p.conjugate().conjugate() == p);
}

TEST_CASE("zee")
{
    CHECK(zee(Partition{1}) == 1);
    CHECK(zee(Partition{2, 2, 1}) == 8);
    CHECK(zee(Partition{3, 1, 1}) == 6);
    // Σ_{μ ⊢ n} n!/z_μ = n!
    for (int n = 1; n <= 8; ++n) {
        Rational s = 0;
        for (const auto& mu : partitionsOf(n))
            s += Rational(1) / Rational(zee(mu));
        CHECK(s == 1);
    }
}

TEST_CASE("enumeration counts")
{
    const int p[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
    const int q[] = {1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10, 12, 15};
    for (int n = 0; n <= 12; ++n) {
        CHECK(partitionsOf(n).size() == static_cast<std::size_t>(p[n]));
        CHECK(strictPartitionsOf(n).size() == static_cast<std::size_t>(q[n]));
        CHECK(oddPartitionsOf(n).size() == static_cast<std::size_t>(q[n]));
    }
    const auto ps = partitionsOf(5);
    CHECK(ps.front() == Partition{5});
    CHECK(ps.back() == Partition{1, 1, 1, 1, 1});
}

TEST_CASE("frobenius round trip")
{
    for (int n = 0; n <= 9; ++n)
        for (const auto& p : partitionsOf(n))
            CHECK(fromFrobenius(frobenius(p)) == p);
    CHECK(frobenius(Partition{3, 1}) == Frobenius{{2}, {1}});
}

TEST_CASE("double and overlap double")
{
    CHECK(doubleOf(StrictPartition{6, 5, 2}) == Partition{7, 7, 5, 3, 2, 2});
    CHECK(doubleOf(StrictPartition()) == Partition());
    CHECK(doubleOf(StrictPartition{2, 1}) == Partition{3, 3});
    CHECK(doubleOf(StrictPartition{1}) == Partition{2});
    CHECK(overlapDoubleOf(StrictPartition{6, 5, 2}) == Partition{6, 6, 4, 3, 2, 2});
    CHECK(overlapDoubleOf(StrictPartition{1}) == Partition{1});
    CHECK(overlapDoubleOf(StrictPartition{2, 1}) == Partition{2, 2});
    for (int n = 0; n <= 12; ++n)
        for (const auto& xi : strictPartitionsOf(n)) {
            CHECK(doubleOf(xi) == oracle::doubleByBoxes(xi));
            CHECK(overlapDoubleOf(xi) == oracle::overlapDoubleByBoxes(xi));
            CHECK(doubleOf(xi).size() == 2 * n);
            CHECK(overlapDoubleOf(xi).size() == 2 * n - xi.length());
        }
}

TEST_CASE("class splitting")
{
    CHECK(splitsInSpinGroup(Partition{3, 1, 1}));
    CHECK_FALSE(splitsInSpinGroup(Partition{2, 2}));
    CHECK(splitsInSpinGroup(Partition{2, 1}));
    CHECK(splitsInSpinGroup(Partition{3, 2}));
    CHECK_FALSE(splitsInSpinGroup(Partition{4, 2}));
}

TEST_CASE("printing and parsing")
{
    CHECK(toString(Partition{7, 7, 5, 3, 2, 2}) == "7,7,5,3,2,2");
    CHECK(toString(Partition()) == "-");
    CHECK(parsePartition(" 3, 1 ") == Partition{3, 1});
    CHECK(parsePartition("-") == Partition());
    CHECK_THROWS_AS(parsePartition("3,x"), std::invalid_argument);
    CHECK_THROWS_AS(parsePartition("1,3"), std::invalid_argument);
    CHECK_THROWS_AS(parsePartition("3,"), std::invalid_argument);
    CHECK_THROWS_AS(parseStrictPartition("2,2"), std::invalid_argument);
    for (int n = 0; n <= 8; ++n)
        for (const auto& p : partitionsOf(n))
            CHECK(parsePartition(toString(p)) == p);
}

TEST_CASE("permutations")
{
    const Permutation s1 = Permutation::fromCycles(5, {{1, 5, 4, 2}, {3}});
    const Permutation s2 = Permutation::fromCycles(5, {{2, 3, 5}, {1, 4}});
    CHECK(orbitCount(s1, s2) == 1);
    CHECK(orbitCount(Permutation::identity(4), Permutation::identity(4)) == 4);
    CHECK(orbitCount(Permutation::fromCycles(4, {{1, 2}}), Permutation::fromCycles(4, {{3, 4}})) == 2);
    CHECK(toString(s1) == "(1,5,4,2)(3)");
    CHECK(s1.cycleType() == Partition{4, 1});
    CHECK(Permutation::fromCycleType(Partition{2, 1}).images() == std::vector<int>{1, 0, 2});
    CHECK_THROWS_AS(Permutation({0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(compose(s1, Permutation::identity(3)), std::invalid_argument);
    CHECK((s1 * s1.inverse()) == Permutation::identity(5));
}

TEST_CASE("sign is a homomorphism")
{
    for (std::uint64_t a = 0; a < 24; ++a)
        for (std::uint64_t b = 0; b < 24; ++b) {
            const Permutation x = unrankPermutation(4, a), y = unrankPermutation(4, b);
            CHECK((x * y).sign() == x.sign() * y.sign());
        }
}

TEST_CASE("factorizations")
{
    const auto one = factorizationsOf(Permutation::identity(1));
    REQUIRE(one.size() == 1);
    CHECK(one[0].first == Permutation::identity(1));
    for (int k = 1; k <= 6; ++k)
        for (const auto& type : partitionsOf(k)) {
            const Permutation pi = Permutation::fromCycleType(type);
            std::set<Permutation> firsts;
            std::size_t count = 0;
            forEachFactorization(pi, [&](const Permutation& a, const Permutation& b) {
                CHECK(a * b == pi);
                firsts.insert(a);
                ++count;
            });
            CHECK(count == factorialU64(k));
            CHECK(firsts.size() == count);
        }
    // Slices concatenate to the full stream.
    const Permutation pi = Permutation::fromCycleType(Partition{3, 2});
    const auto all = factorizationsOf(pi);
    std::vector<std::pair<Permutation, Permutation>> pieces;
    for (std::uint64_t first = 0; first < 120; first += 17)
        forEachFactorization(pi, first, std::min<std::uint64_t>(first + 17, 120),
                             [&](const Permutation& a, const Permutation& b) { pieces.emplace_back(a, b); });
    CHECK(pieces == all);
}

TEST_CASE("set partitions")
{
    const std::size_t bell[] = {1, 1, 2, 5, 15, 52, 203, 877};
    for (int n = 0; n <= 7; ++n)
        CHECK(setPartitionsOf(n).size() == bell[n]);
    CHECK(setPartitionsOf(0).front().blockCount() == 0);
    for (int n = 1; n <= 7; ++n)
        for (int k = 1; k <= n; ++k) {
            std::size_t withK = 0;
            for (const auto& s : setPartitionsOf(n))
                withK += s.blockCount() == k;
            CHECK(Integer(static_cast<long>(withK)) == stirling2(n, k));
        }
    Integer total = 0;
    for (int k = 0; k <= 6; ++k)
        total += stirling1(6, k);
    CHECK(total == 720);
}

TEST_CASE("stirling identity")
{
    CHECK(stirlingIdentityCheck(1) == Rational(1, 2));
    CHECK(stirlingIdentityCheck(2) == Rational(1, 4));
    CHECK(stirlingIdentityCheck(5) == Rational(1, 32));
    for (int m = 1; m <= 12; ++m)
        CHECK(stirlingIdentityCheck(m) == powerOfTwo(-m));
    CHECK_THROWS_AS(stirlingIdentityCheck(0), std::invalid_argument);
}
