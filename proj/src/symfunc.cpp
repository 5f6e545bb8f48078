#include "spinrep/symfunc.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>

#include "spinrep/characters.hpp"

namespace spinrep {

SymFunc SymFunc::powerSum(const Partition& mu, const Rational& c)
{
    SymFunc f;
    f.addTerm(mu, c);
    return f;
}

Rational SymFunc::coefficient(const Partition& mu) const
{
    const auto it = terms_.find(mu);
    return it == terms_.end() ? Rational(0) : it->second;
}

int SymFunc::degree() const
{
    return terms_.empty() ? -1 : terms_.rbegin()->first.size();
}

bool SymFunc::isHomogeneous() const
{
    return terms_.empty() || terms_.begin()->first.size() == terms_.rbegin()->first.size();
}

SymFunc SymFunc::homogeneousPart(int degree) const
{
    SymFunc out;
    for (const auto& [mu, c] : terms_)
        if (mu.size() == degree)
            out.terms_.emplace(mu, c);
    return out;
}

bool SymFunc::inOddSubalgebra() const
{
    for (const auto& [mu, c] : terms_)
        if (!mu.isOdd())
            return false;
    return true;
}

void SymFunc::addTerm(const Partition& mu, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(mu, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

SymFunc& SymFunc::operator+=(const SymFunc& other)
{
    for (const auto& [mu, c] : other.terms_)
        addTerm(mu, c);
    return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& other)
{
    for (const auto& [mu, c] : other.terms_)
        addTerm(mu, -c);
    return *this;
}

SymFunc& SymFunc::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [mu, coeff] : terms_)
        coeff *= c;
    return *this;
}

SymFunc multiply(const SymFunc& f, const SymFunc& g)
{
    SymFunc out;
    for (const auto& [a, ca] : f.terms())
        for (const auto& [b, cb] : g.terms())
            out.addTerm(a.join(b), ca * cb);
    return out;
}

SymFunc operator*(const SymFunc& f, const SymFunc& g)
{
    return multiply(f, g);
}

SymFunc schurS(const Partition& mu)
{
    SymFunc out;
    for (const Partition& pi : partitionsOf(mu.size()))
        out.addTerm(pi, Rational(chi(mu, pi)) / Rational(zee(pi)));
    return out;
}

SymFunc schurQOneRow(int a)
{
    if (a < 0)
        throw std::invalid_argument("schurQOneRow: negative degree");
    // q_0 = 1 and a q_a = Σ_{r odd <= a} 2 p_r q_{a-r}, the coefficientwise form
    // of Q'(t) = Q(t) · d/dt(2 Σ p_r t^r / r), truncated at order a.
    std::vector<SymFunc> q{SymFunc::one()};
    for (int m = 1; m <= a; ++m) {
        SymFunc next;
        for (int r = 1; r <= m; r += 2)
            next += SymFunc::powerSum(Partition{r}, 2) * q[static_cast<std::size_t>(m - r)];
        next *= Rational(1, m);
        q.push_back(std::move(next));
    }
    return q[static_cast<std::size_t>(a)];
}

namespace {

SymFunc schurQTwoRow(int a, int b)
{
    if (b == 0)
        return schurQOneRow(a);
    SymFunc out = schurQOneRow(a) * schurQOneRow(b);
    for (int i = 1; i <= b; ++i) {
        SymFunc term = schurQOneRow(a + i) * schurQOneRow(b - i);
        term *= Rational(i % 2 == 0 ? 2 : -2);
        out += term;
    }
    return out;
}

SymFunc pfaffian(const std::vector<int>& parts, std::vector<int>& alive,
                 const std::function<SymFunc(int, int)>& entry)
{
    if (alive.empty())
        return SymFunc::one();
    const int first = alive.front();
    SymFunc out;
    for (std::size_t j = 1; j < alive.size(); ++j) {
        const int partner = alive[j];
        std::vector<int> rest;
        for (std::size_t t = 1; t < alive.size(); ++t)
            if (t != j)
                rest.push_back(alive[t]);
        SymFunc term = entry(first, partner) * pfaffian(parts, rest, entry);
        if (j % 2 == 0)
            term *= Rational(-1);
        out += term;
    }
    return out;
}

std::mutex qCacheMutex;
std::map<StrictPartition, SymFunc> qCache;

} // namespace

SymFunc schurQ(const StrictPartition& xi)
{
    {
        std::lock_guard<std::mutex> lock(qCacheMutex);
        const auto it = qCache.find(xi);
        if (it != qCache.end())
            return it->second;
    }
    SymFunc result;
    const int len = xi.length();
    if (len == 0)
        result = SymFunc::one();
    else if (len == 1)
        result = schurQOneRow(xi[0]);
    else if (len == 2)
        result = schurQTwoRow(xi[0], xi[1]);
    else {
        std::vector<int> parts = xi.parts();
        if (parts.size() % 2 == 1)
            parts.push_back(0);
        std::vector<int> alive(parts.size());
        for (std::size_t i = 0; i < parts.size(); ++i)
            alive[i] = static_cast<int>(i);
        std::map<std::pair<int, int>, SymFunc> pairs;
        auto entry = [&](int i, int j) -> SymFunc {
            auto key = std::make_pair(i, j);
            auto it = pairs.find(key);
            if (it == pairs.end())
                it = pairs.emplace(key, schurQTwoRow(parts[static_cast<std::size_t>(i)],
                                                     parts[static_cast<std::size_t>(j)])).first;
            return it->second;
        };
        result = pfaffian(parts, alive, entry);
    }
    std::lock_guard<std::mutex> lock(qCacheMutex);
    qCache.emplace(xi, result);
    return result;
}

SymFunc schurP(const StrictPartition& xi)
{
    return schurQ(xi) * powerOfTwo(-xi.length());
}

SymFunc phi(const SymFunc& f)
{
    SymFunc out;
    for (const auto& [mu, c] : f.terms())
        if (mu.isOdd())
            out.addTerm(mu, c * powerOfTwo(mu.length()));
    return out;
}

Polynomial expandInVariables(const SymFunc& f, int variables)
{
    if (variables < 0)
        throw std::invalid_argument("expandInVariables: negative variable count");
    std::map<int, Polynomial> powerSums;
    auto powerSum = [&](int r) -> const Polynomial& {
        auto it = powerSums.find(r);
        if (it == powerSums.end()) {
            Polynomial p(variables);
            for (int i = 0; i < variables; ++i) {
                std::vector<int> e(static_cast<std::size_t>(variables), 0);
                e[static_cast<std::size_t>(i)] = r;
                p.addTerm(e, 1);
            }
            it = powerSums.emplace(r, std::move(p)).first;
        }
        return it->second;
    };
    Polynomial out(variables);
    for (const auto& [mu, c] : f.terms()) {
        Polynomial term = Polynomial::constant(variables, c);
        for (int part : mu.parts())
            term = term * powerSum(part);
        out += term;
    }
    return out;
}

nlohmann::json toJson(const SymFunc& f)
{
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [mu, c] : f.terms())
        out.push_back({{"mu", toString(mu)}, {"coeff", toString(c)}});
    return out;
}

SymFunc symFuncFromJson(const nlohmann::json& j)
{
    if (!j.is_array())
        throw std::invalid_argument("SymFunc JSON must be an array");
    SymFunc f;
    for (const auto& rec : j)
        f.addTerm(parsePartition(rec.at("mu").get<std::string>()),
                  parseRational(rec.at("coeff").get<std::string>()));
    return f;
}

std::string toString(const SymFunc& f)
{
    if (f.isZero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mu, c] : f.terms()) {
        os << (first ? "" : " + ") << '(' << c.get_str() << ")p[" << toString(mu) << ']';
        first = false;
    }
    return os.str();
}

} // namespace spinrep
