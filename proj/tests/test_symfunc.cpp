#include <doctest.h>

#include "oracles.hpp"
#include "spinrep/characters.hpp"
#include "spinrep/symfunc.hpp"

using namespace spinrep;

namespace {
SymFunc p(std::initializer_list<int> mu, const Rational& c = 1) { return SymFunc::powerSum(Partition(mu), c); }
} // namespace

TEST_CASE("power-sum arithmetic")
{
    CHECK(p({3}) * p({3, 1}) == p({3, 3, 1}));
    CHECK((p({1}) + p({2})) * (p({1}) - p({2})) == p({1, 1}) - p({2, 2}));
    CHECK((p({2}) - p({2})).isZero());
    CHECK(p({3, 1}).degree() == 4);
    CHECK((p({3, 1}) + p({1})).isHomogeneous() == false);
    CHECK((p({3, 1}) + p({1})).homogeneousPart(1) == p({1}));
}

TEST_CASE("schur functions")
{
    CHECK(schurS(Partition{1}) == p({1}));
    CHECK(schurS(Partition{2}) == p({1, 1}, Rational(1, 2)) + p({2}, Rational(1, 2)));
    CHECK(schurS(Partition{1, 1}) == p({1, 1}, Rational(1, 2)) - p({2}, Rational(1, 2)));
}

TEST_CASE("schur polynomials against semistandard tableaux")
{
    for (int n = 1; n <= 5; ++n)
        for (const auto& mu : partitionsOf(n))
            for (int vars = 1; vars <= 4; ++vars)
                CHECK(expandInVariables(schurS(mu), vars) == oracle::ssytPolynomial(mu, vars));
    Polynomial s2(2);
    s2.addTerm({2, 0}, 1);
    s2.addTerm({1, 1}, 1);
    s2.addTerm({0, 2}, 1);
    CHECK(expandInVariables(schurS(Partition{2}), 2) == s2);
    Polynomial p1(2);
    p1.addTerm({1, 0}, 1);
    p1.addTerm({0, 1}, 1);
    CHECK(expandInVariables(p({1}), 2) == p1);
}

TEST_CASE("one-row Q")
{
    CHECK(schurQOneRow(0) == SymFunc::one());
    CHECK(schurQOneRow(1) == p({1}, 2));
    CHECK(schurQOneRow(2) == p({1, 1}, 2));
    for (int a = 1; a <= 9; a += 2)
        CHECK(schurP(StrictPartition{a}).coefficient(Partition{a}) == Rational(1, a));
}

TEST_CASE("Q functions against marked shifted tableaux")
{
    for (int n = 1; n <= 5; ++n)
        for (const auto& xi : strictPartitionsOf(n))
            for (int vars = 1; vars <= 3; ++vars)
                CHECK(expandInVariables(schurQ(xi), vars) == oracle::markedShiftedPolynomial(xi, vars));
    CHECK(expandInVariables(schurQ(StrictPartition{4, 2, 1}), 4) ==
          oracle::markedShiftedPolynomial(StrictPartition{4, 2, 1}, 4));
}

TEST_CASE("Q and P structure")
{
    for (int n = 1; n <= 8; ++n)
        for (const auto& xi : strictPartitionsOf(n)) {
            const SymFunc q = schurQ(xi);
            CHECK(q.isHomogeneous());
            CHECK(q.degree() == n);
            CHECK(q.inOddSubalgebra());
            CHECK(schurP(xi) == q * powerOfTwo(-xi.length()));
            CHECK(schurP(xi).degree() == n);
            CHECK(q.coefficient(Partition::ones(n)) ==
                  powerOfTwo(n) * Rational(gDim(xi)) / Rational(factorial(n)));
        }
    CHECK(schurP(StrictPartition{1}) == p({1}));
    CHECK(schurQ(StrictPartition{3}) == schurQOneRow(3));
}

TEST_CASE("phi")
{
    CHECK(phi(p({2})).isZero());
    CHECK(phi(p({3, 1})) == p({3, 1}, 4));
    CHECK(phi(p({3, 2}) + p({1})) == p({1}, 2));
}

TEST_CASE("double Schur function and Q squared")
{
    const SymFunc q = schurQ(StrictPartition{2, 1});
    CHECK(phi(schurS(Partition{3, 3})) == q * q * Rational(1, 4));
    for (int n = 0; n <= 6; ++n)
        for (const auto& xi : strictPartitionsOf(n)) {
            const SymFunc qx = schurQ(xi);
            CHECK(phi(schurS(doubleOf(xi))) == qx * qx * powerOfTwo(-xi.length()));
        }
}

TEST_CASE("json round trip")
{
    const SymFunc f = p({3, 1}, Rational(4, 3)) - p({2});
    const auto j = toJson(f);
    CHECK(j.is_array());
    CHECK(symFuncFromJson(j) == f);
    CHECK(j.dump() == R"([{"coeff":"-1","mu":"2"},{"coeff":"4/3","mu":"3,1"}])");
}
