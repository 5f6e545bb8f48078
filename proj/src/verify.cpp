#include "spinrep/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <stdexcept>

#include "spinrep/characters.hpp"
#include "spinrep/maps.hpp"
#include "spinrep/parallel.hpp"
#include "spinrep/partition.hpp"
#include "spinrep/permutation.hpp"
#include "spinrep/stanley.hpp"
#include "spinrep/symfunc.hpp"

namespace spinrep {

namespace {

using nlohmann::json;

class Recorder {
public:
    Recorder(std::string identity, json ranges) : start_(std::chrono::steady_clock::now())
    {
        report_.identity = std::move(identity);
        report_.ranges = std::move(ranges);
    }

    template <class L, class R>
    void check(const json& inputs, const L& lhs, const R& rhs)
    {
        ++report_.cases;
        if (lhs != rhs)
            report_.failures.push_back({inputs, str(lhs), str(rhs)});
    }

    VerificationReport finish()
    {
        report_.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
        return std::move(report_);
    }

private:
    static std::string str(const Rational& q) { return toString(q); }
    static std::string str(const Integer& z) { return toString(z); }
    static std::string str(int v) { return std::to_string(v); }
    static std::string str(const Partition& p) { return toString(p); }
    static std::string str(const SymFunc& f) { return toString(f); }
    static std::string str(const Polynomial& f) { return f.toString(std::vector<std::string>{}); }

    VerificationReport report_;
    std::chrono::steady_clock::time_point start_;
};

void requireRange(int value, const char* name)
{
    if (value < 0)
        throw std::invalid_argument(std::string("range ") + name + " must be nonnegative");
}

std::vector<StrictPartition> strictUpTo(int maxN)
{
    std::vector<StrictPartition> out;
    for (int n = 0; n <= maxN; ++n)
        for (auto& xi : strictPartitionsOf(n))
            out.push_back(xi);
    return out;
}

std::vector<Partition> oddUpTo(int maxWeight)
{
    std::vector<Partition> out;
    for (int k = 1; k <= maxWeight; ++k)
        for (auto& pi : oddPartitionsOf(k))
            out.push_back(pi);
    return out;
}

Partition subPartition(const Partition& pi, unsigned mask)
{
    std::vector<int> parts;
    for (int i = 0; i < pi.length(); ++i)
        if (mask & (1U << i))
            parts.push_back(pi[static_cast<std::size_t>(i)]);
    return Partition::fromUnsorted(std::move(parts));
}

Partition blockPartition(const Partition& pi, const std::vector<int>& block)
{
    std::vector<int> parts;
    for (int i : block)
        parts.push_back(pi[static_cast<std::size_t>(i)]);
    return Partition::fromUnsorted(std::move(parts));
}

Rational spin(const Partition& pi, const StrictPartition& xi)
{
    return pi.empty() ? Rational(1) : chSpinNormalized(pi, xi);
}

// ½ Ch_π(D(ξ))
Rational chTilde(const Partition& pi, const StrictPartition& xi)
{
    return Rational(chNormalized(pi, doubleOf(xi))) / 2;
}

json with(json base, const json& extra)
{
    base.update(extra);
    return base;
}

json xiInput(const Partition& pi, const StrictPartition& xi)
{
    return {{"pi", toString(pi)}, {"xi", toString(xi)}};
}

} // namespace

json toJson(const VerificationReport& r)
{
    json failures = json::array();
    for (const auto& f : r.failures)
        failures.push_back({{"inputs", f.inputs}, {"lhs", f.lhs}, {"rhs", f.rhs}});
    return {{"identity", r.identity}, {"ranges", r.ranges}, {"cases", r.cases},
            {"failures", failures}, {"ms", r.ms}};
}

VerificationReport verifyMainSpecial(int maxK, int maxN, bool perturb)
{
    requireRange(maxK, "maxK");
    requireRange(maxN, "maxN");
    Recorder rec("main-special", {{"maxK", maxK}, {"maxN", maxN}});
    const Rational factor = perturb ? 3 : 2;
    for (int k = 1; k <= maxK; k += 2)
        for (const auto& xi : strictUpTo(maxN)) {
            const Partition pi{k};
            rec.check(xiInput(pi, xi), Rational(chNormalized(pi, doubleOf(xi))), factor * chSpinNormalized(pi, xi));
        }
    return rec.finish();
}

VerificationReport verifySpinVsLinear(int maxWeight, int maxN, bool perturb)
{
    requireRange(maxWeight, "maxWeight");
    requireRange(maxN, "maxN");
    Recorder rec("spin-vs-linear", {{"maxWeight", maxWeight}, {"maxN", maxN}});
    for (const auto& pi : oddUpTo(maxWeight)) {
        const unsigned full = (1U << pi.length()) - 1;
        for (const auto& xi : strictUpTo(maxN)) {
            const Rational lhs = chNormalized(pi, doubleOf(xi));
            Rational subsets = 0;
            for (unsigned s = 0; s <= full; ++s) {
                Rational term = spin(subPartition(pi, s), xi) * spin(subPartition(pi, full & ~s), xi);
                if (perturb && s == 0)
                    term *= 3;
                subsets += term;
            }
            // Set partitions into at most two blocks: the block containing
            // index 0 is s | 1, its complement is the other block (if any).
            Rational grouped = 0;
            for (unsigned s = 0; s <= full; ++s) {
                if (!(s & 1U))
                    continue;
                grouped += spin(subPartition(pi, s), xi) * spin(subPartition(pi, full & ~s), xi);
            }
            rec.check(with(xiInput(pi, xi), json{{"form", "subsets"}}), lhs, subsets);
            rec.check(with(xiInput(pi, xi), json{{"form", "two-blocks"}}), lhs / 2, grouped);
            rec.check(with(xiInput(pi, xi), json{{"form", "consistency"}}), subsets, 2 * grouped);
        }
    }
    return rec.finish();
}

VerificationReport verifySpinInLinear(int maxWeight, int maxN, bool perturb)
{
    requireRange(maxWeight, "maxWeight");
    requireRange(maxN, "maxN");
    Recorder rec("spin-in-linear", {{"maxWeight", maxWeight}, {"maxN", maxN}});
    for (const auto& pi : oddUpTo(maxWeight)) {
        const auto setParts = setPartitionsOf(pi.length());
        for (const auto& xi : strictUpTo(maxN)) {
            Rational rhs = 0;
            for (const auto& I : setParts) {
                const int b = I.blockCount();
                Rational term = Rational(doubleFactorial(perturb ? 2 * b - 1 : 2 * b - 3));
                if ((b - 1) % 2 != 0)
                    term = -term;
                for (const auto& block : I.blocks)
                    term *= chTilde(blockPartition(pi, block), xi);
                rhs += term;
            }
            rec.check(xiInput(pi, xi), chSpinNormalized(pi, xi), rhs);
        }
    }
    return rec.finish();
}

VerificationReport verifyDimensionIdentity(int maxN, bool perturb)
{
    requireRange(maxN, "maxN");
    Recorder rec("dimension", {{"maxN", maxN}});
    for (const auto& xi : strictUpTo(maxN)) {
        const int n = xi.size();
        const Partition d = doubleOf(xi);
        const Rational lhs = Rational(fDim(d)) / Rational(factorial(2 * n));
        Rational ratio = Rational(gDim(xi)) / Rational(factorial(n));
        const Rational rhs = (perturb ? Rational(1) : powerOfTwo(-xi.length())) * ratio * ratio;
        rec.check(json{{"xi", toString(xi)}}, lhs, rhs);
        rec.check(json{{"xi", toString(xi)}, {"check", "size"}}, d.size(), 2 * n);
    }
    return rec.finish();
}

VerificationReport verifyFiltration(int maxK, int maxN, bool perturb)
{
    requireRange(maxK, "maxK");
    requireRange(maxN, "maxN");
    Recorder rec("filtration", {{"maxK", maxK}, {"maxN", maxN}});
    const Rational minusHalf = perturb ? Rational(1, 2) : Rational(-1, 2);
    for (const auto& pi : oddUpTo(maxK)) {
        if (pi.size() + pi.length() > maxK)
            continue;
        const auto setParts = setPartitionsOf(pi.length());
        for (const auto& xi : strictUpTo(maxN)) {
            // x_π = -Σ_I (-1/2)^{|I|} (2|I|-3)!! Π_b Ch_{π_b}, pulled back along D.
            const Partition d = doubleOf(xi);
            Rational x = 0;
            for (const auto& I : setParts) {
                Rational term = Rational(doubleFactorial(2 * I.blockCount() - 3));
                for (int i = 0; i < I.blockCount(); ++i)
                    term *= minusHalf;
                for (const auto& block : I.blocks)
                    term *= Rational(chNormalized(blockPartition(pi, block), d));
                x -= term;
            }
            rec.check(xiInput(pi, xi), x, chSpinNormalized(pi, xi));
        }
        const int expected = pi.size() + pi.length() + (perturb ? 1 : 0);
        rec.check(json{{"pi", toString(pi)}, {"check", "linear degree"}}, filtrationDegree(pi, false, 2), expected);
        rec.check(json{{"pi", toString(pi)}, {"check", "spin degree"}}, filtrationDegree(pi, true, 2), expected);
    }
    return rec.finish();
}

VerificationReport verifyStanleyLinear(int maxK, int maxN, bool perturb)
{
    requireRange(maxK, "maxK");
    requireRange(maxN, "maxN");
    Recorder rec("stanley-linear", {{"maxK", maxK}, {"maxN", maxN}});
    for (int k = 1; k <= maxK; ++k)
        for (const auto& pi : partitionsOf(k))
            for (int n = 0; n <= maxN; ++n)
                for (const auto& lambda : partitionsOf(n)) {
                    const Integer rhs = chNormalized(pi, lambda);
                    rec.check(json{{"pi", toString(pi)}, {"lambda", toString(lambda)}}, chStanleyLinear(pi, lambda),
                              perturb ? Integer(-rhs) : rhs);
                }
    return rec.finish();
}

VerificationReport verifyStanleySpin(int maxK, int maxN, bool perturb)
{
    requireRange(maxK, "maxK");
    requireRange(maxN, "maxN");
    Recorder rec("stanley-spin", {{"maxK", maxK}, {"maxN", maxN}});
    for (const auto& pi : oddUpTo(maxK))
        for (const auto& xi : strictUpTo(maxN)) {
            const Rational rhs = chSpinNormalized(pi, xi);
            rec.check(xiInput(pi, xi), chStanleySpin(pi, xi), perturb ? Rational(-rhs) : rhs);
        }
    return rec.finish();
}

VerificationReport verifyMaps(int maxK, int maxN, bool perturb)
{
    requireRange(maxK, "maxK");
    requireRange(maxN, "maxN");
    Recorder rec("maps", {{"maxK", maxK}, {"maxN", maxN}});
    for (const auto& pi : oddUpTo(maxK))
        for (const auto& xi : strictUpTo(maxN)) {
            const Rational lhs = spinStanleyViaMaps(pi, xi);
            rec.check(xiInput(pi, xi), perturb ? Rational(2 * lhs) : lhs, chSpinNormalized(pi, xi));
        }
    const PolygonCollection pc = buildPolygons(Partition{5, 2});
    const GluedMap m = glue(pc, projectivePlaneExample());
    rec.check(json{{"pi", "5,2"}, {"check", "projective plane orientable"}}, m.orientable, false);
    rec.check(json{{"pi", "5,2"}, {"check", "projective plane exhaustive"}}, isOrientable(pc, m), false);
    return rec.finish();
}

VerificationReport verifySchurQ(int maxN, bool perturb)
{
    requireRange(maxN, "maxN");
    Recorder rec("schur", {{"maxN", maxN}});
    for (const auto& xi : strictUpTo(maxN)) {
        const SymFunc q = schurQ(xi);
        const SymFunc rhs = (q * q) * (perturb ? Rational(1) : powerOfTwo(-xi.length()));
        rec.check(json{{"xi", toString(xi)}}, phi(schurS(doubleOf(xi))), rhs);
    }
    return rec.finish();
}

VerificationReport verifyDoubleMultirect(int maxL, int maxEntry, bool perturb)
{
    requireRange(maxL, "maxL");
    requireRange(maxEntry, "maxEntry");
    Recorder rec("double-multirect", {{"maxL", maxL}, {"maxEntry", maxEntry}});
    for (int l = 1; l <= maxL; ++l) {
        std::vector<int> digits(static_cast<std::size_t>(2 * l), 0);
        for (;;) {
            std::vector<int> p(digits.begin(), digits.begin() + l), q(digits.begin() + l, digits.end());
            bool valid = true;
            for (int i = 0; i < l && valid; ++i) {
                const int next = i + 1 < l ? q[static_cast<std::size_t>(i + 1)] : 0;
                valid = next <= q[static_cast<std::size_t>(i)] - p[static_cast<std::size_t>(i)];
            }
            if (valid) {
                const ShiftedMultiRect r(p, q);
                const StrictPartition xi = shiftedMultirectToStrict(r);
                MultiRect doubled = lemma61Transform(r);
                if (perturb)
                    ++doubled.q[0];
                const json in{{"P", p}, {"Q", q}};
                rec.check(in, multirectToPartition(doubled), doubleOf(xi));
                rec.check(with(in, json{{"check", "overlap"}}), multirectToPartition(overlapTransform(r)),
                          overlapDoubleOf(xi));
            }
            std::size_t pos = 0;
            while (pos < digits.size() && ++digits[pos] > maxEntry)
                digits[pos++] = 0;
            if (pos == digits.size())
                break;
        }
    }
    return rec.finish();
}

VerificationReport verifyDegrees(int maxDegree, int l, bool perturb)
{
    requireRange(maxDegree, "maxDegree");
    if (l < 1)
        throw std::invalid_argument("range l must be positive");
    Recorder rec("degree", {{"maxDegree", maxDegree}, {"l", l}});
    for (int k = 1; k < maxDegree; ++k)
        for (const auto& pi : partitionsOf(k)) {
            const int top = pi.size() + pi.length();
            if (top > maxDegree)
                continue;
            const int expected = top + (perturb ? 1 : 0);
            const json in{{"pi", toString(pi)}, {"l", l}};
            const StanleyPoly f = stanleyPolynomialLinear(pi, l);
            rec.check(with(in, json{{"check", "linear degree"}}), f.totalDegree(), expected);
            rec.check(with(in, json{{"check", "linear top part"}}), topDegreePart(f, expected),
                      stanleyTopLinearRestricted(pi, l));
            if (!pi.isOdd())
                continue;
            const StanleyPoly g = stanleyPolynomialSpin(pi, l);
            rec.check(with(in, json{{"check", "spin degree"}}), g.totalDegree(), expected);
            rec.check(with(in, json{{"check", "spin top part"}}), topDegreePart(g, expected),
                      stanleyTopSpinRestricted(pi, l));
        }
    return rec.finish();
}

VerificationReport verifyStirling(int maxM, bool perturb)
{
    requireRange(maxM, "maxM");
    Recorder rec("stirling", {{"maxM", maxM}});
    for (int m = 1; m <= maxM; ++m)
        rec.check(json{{"m", m}}, stirlingIdentityCheck(m), powerOfTwo(perturb ? 1 - m : -m));
    return rec.finish();
}

VerificationReport verifyReductions(int maxM, int maxN, bool perturb)
{
    requireRange(maxM, "maxM");
    requireRange(maxN, "maxN");
    Recorder rec("reductions", {{"maxM", maxM}, {"maxN", maxN}});
    const auto xis = strictUpTo(maxN);
    for (int m = 1; m <= maxM; ++m)
        for (const auto& xi : xis)
            rec.check(json{{"m", m}, {"xi", toString(xi)}}, chSpinNormalized(Partition::ones(m), xi),
                      Rational(fallingFactorial(xi.size(), m)));
    for (int w = 1; w <= maxM; ++w)
        for (const auto& nu : oddPartitionsOf(w))
            for (int s = 1; w + s <= maxM; ++s)
                for (const auto& xi : xis) {
                    const int shift = perturb ? 0 : nu.size();
                    rec.check(json{{"nu", toString(nu)}, {"s", s}, {"xi", toString(xi)}},
                              chSpinNormalized(nu.withOnes(s), xi),
                              Rational(fallingFactorial(xi.size() - shift, s)) * chSpinNormalized(nu, xi));
                }
    return rec.finish();
}

std::vector<std::string> identityNames()
{
    return {"main-special", "spin-vs-linear", "spin-in-linear", "dimension", "filtration",
            "stanley-linear", "stanley-spin", "maps", "schur", "double-multirect",
            "degree", "stirling", "reductions"};
}

VerificationReport runIdentity(const std::string& name, int maxK, int maxN, bool perturb)
{
    requireRange(maxK, "maxK");
    requireRange(maxN, "maxN");
    if (name == "main-special")
        return verifyMainSpecial(maxK, maxN, perturb);
    if (name == "spin-vs-linear")
        return verifySpinVsLinear(maxK, maxN, perturb);
    if (name == "spin-in-linear")
        return verifySpinInLinear(maxK, maxN, perturb);
    if (name == "dimension")
        return verifyDimensionIdentity(maxN, perturb);
    if (name == "filtration")
        return verifyFiltration(maxK, maxN, perturb);
    if (name == "stanley-linear")
        return verifyStanleyLinear(maxK, maxN, perturb);
    if (name == "stanley-spin")
        return verifyStanleySpin(maxK, maxN, perturb);
    if (name == "maps")
        return verifyMaps(maxK, maxN, perturb);
    if (name == "schur")
        return verifySchurQ(maxN, perturb);
    if (name == "double-multirect")
        return verifyDoubleMultirect(std::min(maxK, 3), std::min(maxN, 4), perturb);
    if (name == "degree")
        return verifyDegrees(maxK, 2, perturb);
    if (name == "stirling")
        return verifyStirling(maxK, perturb);
    if (name == "reductions")
        return verifyReductions(maxK, maxN, perturb);
    throw std::invalid_argument("unknown identity: " + name);
}

VerifyConfig verifyConfigFromJson(const json& j)
{
    if (!j.is_object())
        throw std::invalid_argument("verify config must be a JSON object");
    VerifyConfig c;
    for (const auto& [key, value] : j.items()) {
        if (key == "maxK" || key == "maxN" || key == "mapsK") {
            if (!value.is_number_integer() || value.get<long>() < 0)
                throw std::invalid_argument("config key " + key + " must be a nonnegative integer");
            const int v = value.get<int>();
            (key == "maxK" ? c.maxK : key == "maxN" ? c.maxN : c.mapsK) = v;
        } else if (key == "negativeControls") {
            if (!value.is_boolean())
                throw std::invalid_argument("config key negativeControls must be a boolean");
            c.negativeControls = value.get<bool>();
        } else if (key == "identities") {
            if (!value.is_array())
                throw std::invalid_argument("config key identities must be an array");
            const auto known = identityNames();
            for (const auto& id : value) {
                if (!id.is_string() || std::find(known.begin(), known.end(), id.get<std::string>()) == known.end())
                    throw std::invalid_argument("unknown identity in config: " + id.dump());
                c.identities.push_back(id.get<std::string>());
            }
        } else {
            throw std::invalid_argument("unknown config key: " + key);
        }
    }
    return c;
}

std::vector<VerificationReport> verifyAll(const VerifyConfig& config)
{
    requireRange(config.maxK, "maxK");
    requireRange(config.maxN, "maxN");
    requireRange(config.mapsK, "mapsK");
    std::vector<std::string> names;
    for (const auto& name : identityNames())
        if (config.identities.empty() ||
            std::find(config.identities.begin(), config.identities.end(), name) != config.identities.end())
            names.push_back(name);
    const bool p = config.negativeControls;
    auto run = [&](const std::string& name) {
        if (name == "maps")
            return verifyMaps(config.mapsK, std::min(config.maxN, 5), p);
        if (name == "dimension")
            return verifyDimensionIdentity(2 * config.maxN, p);
        if (name == "stirling")
            return verifyStirling(2 * config.maxK, p);
        if (name == "degree")
            return verifyDegrees(config.maxK, 2, p);
        return runIdentity(name, config.maxK, config.maxN, p);
    };
    using Reports = std::vector<VerificationReport>;
    return parallelReduce<Reports>(
        names.size(),
        [&](std::uint64_t first, std::uint64_t last) {
            Reports out;
            for (std::uint64_t i = first; i < last; ++i)
                out.push_back(run(names[i]));
            return out;
        },
        [](Reports& acc, const Reports& part) { acc.insert(acc.end(), part.begin(), part.end()); }, Reports{});
}

} // namespace spinrep
