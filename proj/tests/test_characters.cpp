#include <doctest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "spinrep/characters.hpp"
#include "spinrep/stanley.hpp"
#include "spinrep/symfunc.hpp"

using namespace spinrep;

TEST_CASE("chi basics")
{
    for (int n = 1; n <= 7; ++n)
        for (const auto& pi : partitionsOf(n)) {
            CHECK(chi(Partition{n}, pi) == 1);
            CHECK(chi(Partition::ones(n), pi) == ((n - pi.length()) % 2 == 0 ? 1 : -1));
        }
    CHECK(chi(Partition{2, 1}, Partition{3}) == -1);
    CHECK(chi(Partition{3, 1}, Partition{3, 1}) == 0);
    CHECK_THROWS_AS(chi(Partition{2}, Partition{1}), std::invalid_argument);
}

TEST_CASE("character table orthogonality")
{
    for (int n = 1; n <= 8; ++n) {
        const auto ps = partitionsOf(n);
        for (const auto& mu : ps)
            for (const auto& nu : ps) {
                Integer s = 0;
                for (const auto& lambda : ps)
                    s += chi(lambda, mu) * chi(lambda, nu);
                CHECK(s == (mu == nu ? zee(mu) : Integer(0)));
            }
    }
}

TEST_CASE("dimensions")
{
    CHECK(fDim(Partition{5}) == 1);
    CHECK(fDim(Partition{3, 3}) == 5);
    CHECK(fDim(Partition{2, 1}) == 2);
    CHECK(gDim(StrictPartition{4}) == 1);
    CHECK(gDim(StrictPartition{2, 1}) == 1);
    CHECK(gDim(StrictPartition{3, 2, 1}) == 2);
    for (int n = 1; n <= 10; ++n) {
        for (const auto& lambda : partitionsOf(n))
            CHECK(fDim(lambda) == oracle::standardCount(lambda.parts()));
        for (const auto& xi : strictPartitionsOf(n))
            CHECK(gDim(xi) == oracle::shiftedStandardCount(xi.parts()));
    }
}

TEST_CASE("spin characters")
{
    CHECK(spinX(StrictPartition{5}, Partition::ones(5)) == 1);
    CHECK(spinX(StrictPartition{2, 1}, Partition{1, 1, 1}) == 1);
    for (int n = 1; n <= 8; ++n)
        for (const auto& xi : strictPartitionsOf(n)) {
            CHECK(spinX(xi, Partition::ones(n)) == gDim(xi));
            for (const auto& nu : oddPartitionsOf(n))
                CHECK(Rational(spinX(xi, nu)) == oracle::spinXFromQ(xi, nu));
        }
    // p_π = Σ_ξ X^ξ(π) P_ξ
    for (int n = 1; n <= 7; ++n)
        for (const auto& pi : oddPartitionsOf(n)) {
            SymFunc sum;
            for (const auto& xi : strictPartitionsOf(n))
                sum += schurP(xi) * Rational(spinX(xi, pi));
            CHECK(sum == SymFunc::powerSum(pi));
        }
    CHECK_THROWS_AS(spinX(StrictPartition{2}, Partition{2}), std::invalid_argument);
}

TEST_CASE("normalized characters")
{
    for (int n = 0; n <= 6; ++n)
        for (const auto& lambda : partitionsOf(n))
            CHECK(chNormalized(Partition{1}, lambda) == n);
    CHECK(chNormalized(Partition{2}, Partition{2, 1}) == 0);
    CHECK(chNormalized(Partition{3}, Partition{3, 1}) == 0);
    CHECK(chNormalized(Partition{2}, Partition{3}) == 6);
    CHECK(chNormalized(Partition{3, 1}, Partition{2}) == 0);
    for (int n = 0; n <= 8; ++n)
        for (const auto& xi : strictPartitionsOf(n)) {
            for (int m = 1; m <= 4; ++m)
                CHECK(chSpinNormalized(Partition::ones(m), xi) == Rational(fallingFactorial(n, m)));
            for (int k = 1; k <= 7; k += 2)
                CHECK(2 * chSpinNormalized(Partition{k}, xi) == Rational(chNormalized(Partition{k}, doubleOf(xi))));
            CHECK(chSpinNormalized(Partition{3, 3, 3}, xi) == 0);
        }
    CHECK_THROWS_AS(chSpinNormalized(Partition{2}, StrictPartition{3}), std::invalid_argument);
}

TEST_CASE("pullback along the double")
{
    const auto size = pullbackDouble([](const Partition& p) { return Rational(p.size()); });
    const auto constant = pullbackDouble([](const Partition&) { return Rational(7, 3); });
    const auto ch3 = pullbackDouble([](const Partition& p) { return Rational(chNormalized(Partition{3}, p)); });
    for (int n = 0; n <= 7; ++n)
        for (const auto& xi : strictPartitionsOf(n)) {
            CHECK(size(xi) == 2 * n);
            CHECK(constant(xi) == Rational(7, 3));
            CHECK(ch3(xi) == 2 * chSpinNormalized(Partition{3}, xi));
        }
}

TEST_CASE("conjugation invariance")
{
    // A second representative: relabel the block form by a fixed shuffle.
    for (int k = 1; k <= 6; ++k) {
        const Permutation shuffle = unrankPermutation(k, (factorialU64(k) / 2 + 1) % factorialU64(k));
        for (const auto& type : partitionsOf(k)) {
            const Permutation block = Permutation::fromCycleType(type);
            const Permutation other = shuffle * block * shuffle.inverse();
            REQUIRE(other.cycleType() == type);
            for (int n = 0; n <= 6; ++n)
                for (const auto& lambda : partitionsOf(n)) {
                    CHECK(chStanleyLinear(other, lambda) == chNormalized(type, lambda));
                    CHECK(chStanleyLinear(other, lambda) == chStanleyLinear(block, lambda));
                }
            if (!type.isOdd())
                continue;
            for (int n = 0; n <= 5; ++n)
                for (const auto& xi : strictPartitionsOf(n))
                    CHECK(chStanleySpin(other, xi) == chStanleySpin(block, xi));
        }
    }
}

TEST_CASE("character tables")
{
    const CharacterTable t = linearCharacterTable(4);
    CHECK(t.rows.size() == 5);
    CHECK(t.values.front() == std::vector<Integer>(5, 1));
    const CharacterTable s = spinCharacterTable(4);
    CHECK(s.rows.size() == 2);
    CHECK(s.cols.size() == 2);
    const auto j = toJson(s);
    CHECK(j["kind"] == "spin");
    CHECK(j["values"][1][1] == "2");
}
