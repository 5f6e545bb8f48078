#include "spinrep/stanley.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>

#include "spinrep/parallel.hpp"

namespace spinrep {

namespace {

// White vertices with their black neighbours; black vertices are 0..black-1.
struct Incidence {
    int black = 0;
    std::vector<std::vector<int>> white;
};

struct FactorTerm {
    int sign = 1;
    int orbits = 0;
    int cycles = 0; // |C(σ1)| + |C(σ2)|
    Incidence inc;
};

Incidence incidenceOf(const Permutation& s1, const Permutation& s2)
{
    const auto id1 = s1.cycleIds();
    const auto id2 = s2.cycleIds();
    Incidence inc;
    inc.black = s2.cycleCount();
    inc.white.resize(static_cast<std::size_t>(s1.cycleCount()));
    for (std::size_t x = 0; x < id1.size(); ++x)
        inc.white[static_cast<std::size_t>(id1[x])].push_back(id2[x]);
    for (auto& nb : inc.white) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }
    return inc;
}

// Calls visit(kappa1, kappa2) for every row-group assignment κ2 of the black
// vertices; κ1(w) is the largest group index among the neighbours of w, or 0
// when w is isolated.
template <class Visit>
void forEachAssignment(const Incidence& inc, int groups, Visit&& visit)
{
    if (groups == 0) {
        if (inc.black == 0) {
            std::vector<int> k1(inc.white.size(), 0), k2;
            if (inc.white.empty())
                visit(k1, k2);
        }
        return;
    }
    std::vector<int> k2(static_cast<std::size_t>(inc.black), 0);
    std::vector<int> k1(inc.white.size(), 0);
    for (;;) {
        for (std::size_t w = 0; w < inc.white.size(); ++w) {
            int m = 0;
            for (int b : inc.white[w])
                m = std::max(m, k2[static_cast<std::size_t>(b)]);
            k1[w] = m;
        }
        visit(k1, k2);
        std::size_t pos = 0;
        while (pos < k2.size() && ++k2[pos] == groups)
            k2[pos++] = 0;
        if (pos == k2.size())
            return;
    }
}

std::optional<std::int64_t> countFast(const Incidence& inc, const MultiRect& r)
{
    std::int64_t total = 0;
    bool overflow = false;
    forEachAssignment(inc, r.count(), [&](const std::vector<int>& k1, const std::vector<int>& k2) {
        if (overflow)
            return;
        std::int64_t prod = 1;
        for (int g : k2)
            overflow |= __builtin_mul_overflow(prod, r.p[static_cast<std::size_t>(g)], &prod);
        for (int g : k1)
            overflow |= __builtin_mul_overflow(prod, r.q[static_cast<std::size_t>(g)], &prod);
        overflow |= __builtin_add_overflow(total, prod, &total);
    });
    if (overflow)
        return std::nullopt;
    return total;
}

Integer countExact(const Incidence& inc, const MultiRect& r)
{
    if (auto fast = countFast(inc, r))
        return Integer(static_cast<long>(*fast));
    Integer total = 0;
    forEachAssignment(inc, r.count(), [&](const std::vector<int>& k1, const std::vector<int>& k2) {
        Integer prod = 1;
        for (int g : k2)
            prod *= r.p[static_cast<std::size_t>(g)];
        for (int g : k1)
            prod *= r.q[static_cast<std::size_t>(g)];
        total += prod;
    });
    return total;
}

using TermList = std::vector<FactorTerm>;

std::shared_ptr<const TermList> factorTerms(const Permutation& pi)
{
    static std::mutex mutex;
    static std::map<std::vector<int>, std::shared_ptr<const TermList>> cache;
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(pi.images());
        if (it != cache.end())
            return it->second;
    }
    const std::uint64_t count = factorialU64(pi.size());
    auto terms = std::make_shared<TermList>(parallelReduce<TermList>(
        count,
        [&](std::uint64_t first, std::uint64_t last) {
            TermList out;
            out.reserve(last - first);
            forEachFactorization(pi, first, last, [&](const Permutation& s1, const Permutation& s2) {
                FactorTerm t;
                t.sign = s1.sign();
                t.orbits = orbitCount(s1, s2);
                t.cycles = s1.cycleCount() + s2.cycleCount();
                t.inc = incidenceOf(s1, s2);
                out.push_back(std::move(t));
            });
            return out;
        },
        [](TermList& acc, const TermList& part) { acc.insert(acc.end(), part.begin(), part.end()); },
        TermList{}));
    std::lock_guard<std::mutex> lock(mutex);
    return cache.emplace(pi.images(), std::move(terms)).first->second;
}

// Σ over terms of weight(term) N_term(λ), evaluated in parallel over term slices.
template <class Weight>
Integer weightedSum(const TermList& terms, const MultiRect& r, Weight weight)
{
    return parallelReduce<Integer>(
        terms.size(),
        [&](std::uint64_t first, std::uint64_t last) {
            Integer acc = 0;
            for (std::uint64_t i = first; i < last; ++i)
                acc += weight(terms[i]) * countExact(terms[i].inc, r);
            return acc;
        },
        [](Integer& acc, const Integer& part) { acc += part; }, Integer(0));
}

using ExponentSums = std::map<std::vector<int>, Integer>;

// Σ weight(term) N_term as a polynomial in p_1..p_L, q_1..q_L.
template <class Weight, class Keep>
Polynomial weightedPolynomial(const TermList& terms, int groups, Weight weight, Keep keep, const Integer& denominator)
{
    const auto L = static_cast<std::size_t>(groups);
    ExponentSums sums = parallelReduce<ExponentSums>(
        terms.size(),
        [&](std::uint64_t first, std::uint64_t last) {
            ExponentSums acc;
            std::vector<int> e(2 * L);
            for (std::uint64_t i = first; i < last; ++i) {
                const FactorTerm& t = terms[i];
                if (!keep(t))
                    continue;
                const Integer w = weight(t);
                forEachAssignment(t.inc, groups, [&](const std::vector<int>& k1, const std::vector<int>& k2) {
                    std::fill(e.begin(), e.end(), 0);
                    for (int g : k2)
                        ++e[static_cast<std::size_t>(g)];
                    for (int g : k1)
                        ++e[L + static_cast<std::size_t>(g)];
                    acc[e] += w;
                });
            }
            return acc;
        },
        [](ExponentSums& acc, const ExponentSums& part) {
            for (const auto& [e, c] : part)
                acc[e] += c;
        },
        ExponentSums{});
    Polynomial out(2 * groups);
    for (const auto& [e, c] : sums)
        if (c != 0) {
            Rational coeff(c, denominator);
            coeff.canonicalize();
            out.addTerm(e, coeff);
        }
    return out;
}

Integer spinWeight(const FactorTerm& t, int k)
{
    Integer w;
    mpz_ui_pow_ui(w.get_mpz_t(), 2, static_cast<unsigned long>(k - t.orbits));
    return t.sign > 0 ? w : Integer(-w);
}

Integer twoTo(int e)
{
    Integer w;
    mpz_ui_pow_ui(w.get_mpz_t(), 2, static_cast<unsigned long>(e));
    return w;
}

void requireOdd(const Partition& pi)
{
    if (!pi.isOdd())
        throw std::invalid_argument("spin Stanley formula needs an odd partition, got " + toString(pi));
}

void requireRectangles(int l)
{
    if (l < 1)
        throw std::invalid_argument("number of rectangles must be positive");
}

// Images of p_1..p_{2l}, q_1..q_{2l} in the shifted coordinates.
std::vector<Polynomial> doubleSubstitution(int l, bool shifted)
{
    const int vars = 2 * l;
    auto P = [&](int i) { return Polynomial::variable(vars, i - 1); };
    auto Q = [&](int i) { return i > l ? Polynomial(vars) : Polynomial::variable(vars, l + i - 1); };
    std::vector<Polynomial> p(static_cast<std::size_t>(2 * l), Polynomial(vars));
    std::vector<Polynomial> q(static_cast<std::size_t>(2 * l), Polynomial(vars));
    for (int i = 1; i <= l; ++i) {
        p[static_cast<std::size_t>(i - 1)] = P(i);
        Polynomial qi = Q(i);
        for (int j = 1; j < i; ++j)
            qi += P(j);
        if (shifted)
            qi += Polynomial::constant(vars, 1);
        q[static_cast<std::size_t>(i - 1)] = qi;
    }
    for (int j = 1; j <= l; ++j) {
        p[static_cast<std::size_t>(l + j - 1)] = Q(l - j + 1) - (Q(l - j + 2) + P(l - j + 1));
        Polynomial qj(vars);
        for (int i = 1; i <= l - j + 1; ++i)
            qj += P(i);
        q[static_cast<std::size_t>(l + j - 1)] = qj;
    }
    std::vector<Polynomial> images = p;
    images.insert(images.end(), q.begin(), q.end());
    return images;
}

MultiRect doubleRects(const ShiftedMultiRect& r, bool shifted)
{
    const int l = r.count();
    std::vector<int> p(static_cast<std::size_t>(2 * l)), q(static_cast<std::size_t>(2 * l));
    auto P = [&](int i) { return r.p[static_cast<std::size_t>(i - 1)]; };
    auto Q = [&](int i) { return i > l ? 0 : r.q[static_cast<std::size_t>(i - 1)]; };
    for (int i = 1; i <= l; ++i) {
        p[static_cast<std::size_t>(i - 1)] = P(i);
        int qi = Q(i) + (shifted ? 1 : 0);
        for (int j = 1; j < i; ++j)
            qi += P(j);
        q[static_cast<std::size_t>(i - 1)] = qi;
    }
    for (int j = 1; j <= l; ++j) {
        p[static_cast<std::size_t>(l + j - 1)] = Q(l - j + 1) - (Q(l - j + 2) + P(l - j + 1));
        int qj = 0;
        for (int i = 1; i <= l - j + 1; ++i)
            qj += P(i);
        q[static_cast<std::size_t>(l + j - 1)] = qj;
    }
    return MultiRect(std::move(p), std::move(q));
}

} // namespace

BicoloredGraph BicoloredGraph::fromColoredEdges(const std::vector<Color>& colors,
                                                const std::vector<std::pair<int, int>>& edges)
{
    BicoloredGraph g;
    std::vector<int> local(colors.size());
    for (std::size_t v = 0; v < colors.size(); ++v)
        local[v] = colors[v] == Color::White ? g.white++ : g.black++;
    const int n = static_cast<int>(colors.size());
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (colors[static_cast<std::size_t>(u)] == colors[static_cast<std::size_t>(v)])
            throw std::invalid_argument("graph is not bipartite with respect to the given colouring");
        if (colors[static_cast<std::size_t>(u)] == Color::Black)
            std::swap(u, v);
        g.edges.emplace_back(local[static_cast<std::size_t>(u)], local[static_cast<std::size_t>(v)]);
    }
    return g;
}

BicoloredGraph BicoloredGraph::fromPermutations(const Permutation& s1, const Permutation& s2)
{
    if (s1.size() != s2.size())
        throw std::invalid_argument("permutations of different sizes");
    const Incidence inc = incidenceOf(s1, s2);
    BicoloredGraph g;
    g.white = static_cast<int>(inc.white.size());
    g.black = inc.black;
    for (std::size_t w = 0; w < inc.white.size(); ++w)
        for (int b : inc.white[w])
            g.edges.emplace_back(static_cast<int>(w), b);
    return g;
}

Integer coloringCountGraph(const BicoloredGraph& g, const Partition& lambda)
{
    Incidence inc;
    inc.black = g.black;
    inc.white.resize(static_cast<std::size_t>(g.white));
    for (auto [w, b] : g.edges) {
        if (w < 0 || w >= g.white || b < 0 || b >= g.black)
            throw std::invalid_argument("edge endpoint out of range");
        inc.white[static_cast<std::size_t>(w)].push_back(b);
    }
    return countExact(inc, multirectOf(lambda));
}

Integer coloringCount(const Permutation& s1, const Permutation& s2, const Partition& lambda)
{
    if (s1.size() != s2.size())
        throw std::invalid_argument("permutations of different sizes");
    return countExact(incidenceOf(s1, s2), multirectOf(lambda));
}

Integer chStanleyLinear(const Permutation& pi, const Partition& lambda)
{
    const auto terms = factorTerms(pi);
    return weightedSum(*terms, multirectOf(lambda), [](const FactorTerm& t) { return Integer(t.sign); });
}

Integer chStanleyLinear(const Partition& pi, const Partition& lambda)
{
    return chStanleyLinear(Permutation::fromCycleType(pi), lambda);
}

Rational chStanleySpin(const Permutation& pi, const StrictPartition& xi)
{
    requireOdd(pi.cycleType());
    const int k = pi.size();
    const auto terms = factorTerms(pi);
    const Integer sum =
        weightedSum(*terms, multirectOf(doubleOf(xi)), [k](const FactorTerm& t) { return spinWeight(t, k); });
    Rational out(sum, twoTo(k));
    out.canonicalize();
    return out;
}

Rational chStanleySpin(const Partition& pi, const StrictPartition& xi)
{
    requireOdd(pi);
    return chStanleySpin(Permutation::fromCycleType(pi), xi);
}

MultiRect::MultiRect(std::vector<int> heights, std::vector<int> widths) : p(std::move(heights)), q(std::move(widths))
{
    if (p.size() != q.size())
        throw std::invalid_argument("multirectangle needs as many heights as widths");
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 0 || q[i] < 0)
            throw std::invalid_argument("multirectangle coordinates must be nonnegative");
        if (i > 0 && q[i] > q[i - 1])
            throw std::invalid_argument("multirectangle widths must be weakly decreasing");
    }
}

ShiftedMultiRect::ShiftedMultiRect(std::vector<int> heights, std::vector<int> widths)
    : p(std::move(heights)), q(std::move(widths))
{
    if (p.size() != q.size())
        throw std::invalid_argument("shifted multirectangle needs as many heights as widths");
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 0)
            throw std::invalid_argument("shifted multirectangle heights must be nonnegative");
        const int next = i + 1 < q.size() ? q[i + 1] : 0;
        if (next > q[i] - p[i])
            throw std::invalid_argument("shifted multirectangle blocks overlap");
    }
}

Partition multirectToPartition(const MultiRect& r)
{
    std::vector<int> parts;
    for (int i = 0; i < r.count(); ++i)
        if (r.q[static_cast<std::size_t>(i)] > 0)
            parts.insert(parts.end(), static_cast<std::size_t>(r.p[static_cast<std::size_t>(i)]),
                         r.q[static_cast<std::size_t>(i)]);
    return Partition(std::move(parts));
}

StrictPartition shiftedMultirectToStrict(const ShiftedMultiRect& r)
{
    std::vector<int> parts;
    for (int i = 0; i < r.count(); ++i)
        for (int j = 0; j < r.p[static_cast<std::size_t>(i)]; ++j)
            parts.push_back(r.q[static_cast<std::size_t>(i)] - j);
    return StrictPartition(std::move(parts));
}

MultiRect lemma61Transform(const ShiftedMultiRect& r) { return doubleRects(r, true); }

MultiRect overlapTransform(const ShiftedMultiRect& r) { return doubleRects(r, false); }

MultiRect multirectOf(const Partition& lambda)
{
    std::vector<int> p, q;
    for (int part : lambda.parts()) {
        if (!q.empty() && q.back() == part) {
            ++p.back();
        } else {
            q.push_back(part);
            p.push_back(1);
        }
    }
    return MultiRect(std::move(p), std::move(q));
}

std::vector<std::string> stanleyVariableNames(int l)
{
    std::vector<std::string> names;
    for (int i = 1; i <= l; ++i)
        names.push_back("p" + std::to_string(i));
    for (int i = 1; i <= l; ++i)
        names.push_back("q" + std::to_string(i));
    return names;
}

StanleyPoly stanleyPolynomialLinear(const Partition& pi, int l)
{
    requireRectangles(l);
    const auto terms = factorTerms(Permutation::fromCycleType(pi));
    return weightedPolynomial(
        *terms, l, [](const FactorTerm& t) { return Integer(t.sign); }, [](const FactorTerm&) { return true; },
        Integer(1));
}

StanleyPoly stanleyPolynomialSpin(const Partition& pi, int l)
{
    requireRectangles(l);
    requireOdd(pi);
    const int k = pi.size();
    const auto terms = factorTerms(Permutation::fromCycleType(pi));
    const Polynomial doubled = weightedPolynomial(
        *terms, 2 * l, [k](const FactorTerm& t) { return spinWeight(t, k); }, [](const FactorTerm&) { return true; },
        twoTo(k));
    return doubled.substitute(doubleSubstitution(l, true));
}

StanleyPoly topDegreePart(const StanleyPoly& f, int d) { return f.homogeneousPart(d); }

StanleyPoly stanleyTopLinearRestricted(const Partition& pi, int l)
{
    requireRectangles(l);
    const int top = pi.size() + pi.length();
    const auto terms = factorTerms(Permutation::fromCycleType(pi));
    return weightedPolynomial(
        *terms, l, [](const FactorTerm& t) { return Integer(t.sign); },
        [top](const FactorTerm& t) { return t.cycles == top; }, Integer(1));
}

StanleyPoly stanleyTopSpinRestricted(const Partition& pi, int l)
{
    requireRectangles(l);
    requireOdd(pi);
    const int k = pi.size();
    const int top = pi.size() + pi.length();
    const auto terms = factorTerms(Permutation::fromCycleType(pi));
    const Polynomial doubled = weightedPolynomial(
        *terms, 2 * l, [k](const FactorTerm& t) { return spinWeight(t, k); },
        [top](const FactorTerm& t) { return t.cycles == top; }, twoTo(k));
    return doubled.substitute(doubleSubstitution(l, false));
}

int filtrationDegree(const Partition& pi, bool spin, int l)
{
    return spin ? stanleyPolynomialSpin(pi, l).totalDegree() : stanleyPolynomialLinear(pi, l).totalDegree();
}

} // namespace spinrep
