#include <doctest.h>

#include <stdexcept>

#include "spinrep/partition.hpp"
#include "spinrep/verify.hpp"

using namespace spinrep;
using nlohmann::json;

namespace {

long strictCount(int maxN)
{
    long c = 0;
    for (int n = 0; n <= maxN; ++n)
        c += static_cast<long>(strictPartitionsOf(n).size());
    return c;
}

} // namespace

TEST_CASE("main special identity")
{
    const auto r = verifyMainSpecial(5, 6);
    CHECK(r.passed());
    CHECK(r.cases == strictCount(6) * 3);
    CHECK(r.identity == "main-special");

    const auto empty = verifyMainSpecial(1, 0);
    CHECK(empty.passed());
    CHECK(empty.cases == 1);

    const auto bad = verifyMainSpecial(5, 6, true);
    CHECK_FALSE(bad.passed());
    REQUIRE_FALSE(bad.failures.empty());
    CHECK(bad.failures.front().lhs != bad.failures.front().rhs);
    CHECK(bad.failures.front().inputs.contains("xi"));
}

TEST_CASE("individual verifiers pass at their default ranges")
{
    CHECK(verifySpinVsLinear(6, 7).passed());
    CHECK(verifySpinInLinear(5, 7).passed());
    CHECK(verifyDimensionIdentity(12).passed());
    CHECK(verifyFiltration(6, 7).passed());
    CHECK(verifyStanleyLinear(5, 6).passed());
    CHECK(verifyStanleySpin(5, 5).passed());
    CHECK(verifyMaps(3, 4).passed());
    CHECK(verifySchurQ(6).passed());
    CHECK(verifyDoubleMultirect(2, 3).passed());
    CHECK(verifyDegrees(6, 2).passed());
    CHECK(verifyStirling(12).passed());
    CHECK(verifyReductions(6, 6).passed());
}

TEST_CASE("verifyAll")
{
    const auto reports = verifyAll(VerifyConfig{});
    CHECK(reports.size() == identityNames().size());
    for (std::size_t i = 0; i < reports.size(); ++i) {
        CHECK(reports[i].identity == identityNames()[i]);
        CHECK(reports[i].passed());
        CHECK(reports[i].cases > 0);
    }

    VerifyConfig zero;
    zero.maxN = 0;
    for (const auto& r : verifyAll(zero)) {
        CHECK(r.passed());
        CHECK(r.cases > 0);
    }

    VerifyConfig negative;
    negative.negativeControls = true;
    for (const auto& r : verifyAll(negative)) {
        INFO(r.identity);
        CHECK_FALSE(r.passed());
    }

    VerifyConfig some;
    some.identities = {"stirling", "schur"};
    const auto two = verifyAll(some);
    REQUIRE(two.size() == 2);
    CHECK(two[0].identity == "schur");
    CHECK(two[1].identity == "stirling");
}

TEST_CASE("reports are reproducible")
{
    for (const auto& name : identityNames()) {
        auto a = toJson(runIdentity(name, 4, 4, true));
        auto b = toJson(runIdentity(name, 4, 4, true));
        a.erase("ms");
        b.erase("ms");
        CHECK(a == b);
    }
}

TEST_CASE("runIdentity")
{
    CHECK(runIdentity("stirling", 5, 0).cases == 5);
    CHECK_THROWS_AS(runIdentity("nonsense", 3, 3), std::invalid_argument);
    CHECK_THROWS_AS(runIdentity("stirling", -1, 3), std::invalid_argument);
}

TEST_CASE("report JSON")
{
    const auto j = toJson(verifyMainSpecial(3, 2, true));
    CHECK(j["identity"] == "main-special");
    CHECK(j["ranges"].is_object());
    CHECK(j["cases"].is_number_integer());
    CHECK(j["ms"].is_number());
    REQUIRE(j["failures"].is_array());
    REQUIRE_FALSE(j["failures"].empty());
    const auto& f = j["failures"][0];
    CHECK(f.contains("inputs"));
    CHECK(f["lhs"].is_string());
    CHECK(f["rhs"].is_string());
}

TEST_CASE("config parsing")
{
    const auto c = verifyConfigFromJson(json::parse(R"({"maxK": 4, "maxN": 3, "mapsK": 2,
        "negativeControls": true, "identities": ["maps"]})"));
    CHECK(c.maxK == 4);
    CHECK(c.maxN == 3);
    CHECK(c.mapsK == 2);
    CHECK(c.negativeControls);
    CHECK(c.identities == std::vector<std::string>{"maps"});
    CHECK(verifyConfigFromJson(json::object()).maxK == 6);

    CHECK_THROWS_AS(verifyConfigFromJson(json::array()), std::invalid_argument);
    CHECK_THROWS_AS(verifyConfigFromJson(json::parse(R"({"maxK": -1})")), std::invalid_argument);
    CHECK_THROWS_AS(verifyConfigFromJson(json::parse(R"({"maxK": "3"})")), std::invalid_argument);
    CHECK_THROWS_AS(verifyConfigFromJson(json::parse(R"({"negativeControls": 1})")), std::invalid_argument);
    CHECK_THROWS_AS(verifyConfigFromJson(json::parse(R"({"identities": ["bogus"]})")), std::invalid_argument);
    CHECK_THROWS_AS(verifyConfigFromJson(json::parse(R"({"colour": 1})")), std::invalid_argument);

    VerifyConfig broken;
    broken.maxK = -2;
    CHECK_THROWS_AS(verifyAll(broken), std::invalid_argument);
}
