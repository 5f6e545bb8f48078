#include "spinrep/characters.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "spinrep/symfunc.hpp"

namespace spinrep {

namespace {

// Beta-set (first-column hook lengths) of λ padded to `rows` rows.
std::vector<int> betaSet(const std::vector<int>& parts, int rows)
{
    std::vector<int> beta(static_cast<std::size_t>(rows));
    for (int i = 0; i < rows; ++i) {
        const int part = i < static_cast<int>(parts.size()) ? parts[static_cast<std::size_t>(i)] : 0;
        beta[static_cast<std::size_t>(i)] = part + rows - 1 - i;
    }
    return beta;
}

std::vector<int> partsFromBeta(std::vector<int> beta)
{
    std::sort(beta.begin(), beta.end(), std::greater<>());
    const int rows = static_cast<int>(beta.size());
    std::vector<int> parts;
    for (int i = 0; i < rows; ++i) {
        const int part = beta[static_cast<std::size_t>(i)] - (rows - 1 - i);
        if (part > 0)
            parts.push_back(part);
    }
    return parts;
}

Integer hookProduct(const std::vector<int>& parts)
{
    const Partition conj = Partition(parts).conjugate();
    Integer prod = 1;
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (int j = 0; j < parts[i]; ++j)
            prod *= (parts[i] - j - 1) + (conj[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1) + 1;
    return prod;
}

// Murnaghan–Nakayama: strip the cycle lengths cycles[from..] in order; once
// only fixed points remain the value is the number of standard tableaux.
Integer murnaghanNakayama(const std::vector<int>& shape, const std::vector<int>& cycles, std::size_t from)
{
    if (from == cycles.size() || cycles[from] == 1) {
        int n = 0;
        for (int part : shape)
            n += part;
        return factorial(n) / hookProduct(shape);
    }
    const int r = cycles[from];
    const int rows = static_cast<int>(shape.size());
    std::vector<int> beta = betaSet(shape, rows);
    Integer total = 0;
    // Scan rows top to bottom: bead b moves to b - r when that slot is free.
    for (int i = 0; i < rows; ++i) {
        const int b = beta[static_cast<std::size_t>(i)];
        const int target = b - r;
        if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end())
            continue;
        int between = 0;
        for (int other : beta)
            if (other > target && other < b)
                ++between;
        std::vector<int> moved = beta;
        moved[static_cast<std::size_t>(i)] = target;
        const Integer sub = murnaghanNakayama(partsFromBeta(moved), cycles, from + 1);
        if (between % 2 == 0)
            total += sub;
        else
            total -= sub;
    }
    return total;
}

std::mutex chiMutex;
std::map<std::pair<Partition, Partition>, Integer> chiCache;

struct SpinTableData {
    std::vector<StrictPartition> strict;
    std::vector<Partition> odd;
    // values[ξ index][π index]
    std::vector<std::vector<Integer>> values;
};

// Inverse of a square rational matrix by Gauss–Jordan elimination.
std::vector<std::vector<Rational>> invert(std::vector<std::vector<Rational>> a)
{
    const std::size_t n = a.size();
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        inv[i][i] = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0)
            ++pivot;
        if (pivot == n)
            throw std::logic_error("spin character system is singular");
        std::swap(a[pivot], a[col]);
        std::swap(inv[pivot], inv[col]);
        const Rational scale = 1 / a[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] *= scale;
            inv[col][j] *= scale;
        }
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col] == 0)
                continue;
            const Rational factor = a[row][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[row][j] -= factor * a[col][j];
                inv[row][j] -= factor * inv[col][j];
            }
        }
    }
    return inv;
}

SpinTableData buildSpinTable(int n)
{
    SpinTableData t;
    t.strict = strictPartitionsOf(n);
    t.odd = oddPartitionsOf(n);
    if (t.strict.size() != t.odd.size())
        throw std::logic_error("|SP_n| != |OP_n|");
    const std::size_t m = t.strict.size();
    // a[ν][ξ] = coefficient of p_ν in P_ξ. Then p_π = Σ_ξ X^ξ(π) P_ξ reads
    // e_π = a · X(π), so X = a^{-1} with rows indexed by ξ.
    std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m, 0));
    for (std::size_t j = 0; j < m; ++j) {
        const SymFunc p = schurP(t.strict[j]);
        for (std::size_t i = 0; i < m; ++i)
            a[i][j] = p.coefficient(t.odd[i]);
    }
    const auto inv = invert(std::move(a));
    t.values.assign(m, std::vector<Integer>(m));
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t c = 0; c < m; ++c) {
            if (!isInteger(inv[r][c]))
                throw std::logic_error("non-integral spin character value for xi=" + toString(t.strict[r]) +
                                       ", pi=" + toString(t.odd[c]));
            t.values[r][c] = inv[r][c].get_num();
        }
    }
    return t;
}

std::mutex spinMutex;
std::map<int, std::shared_ptr<const SpinTableData>> spinTables;

std::shared_ptr<const SpinTableData> spinTable(int n)
{
    std::lock_guard<std::mutex> lock(spinMutex);
    auto it = spinTables.find(n);
    if (it == spinTables.end())
        it = spinTables.emplace(n, std::make_shared<const SpinTableData>(buildSpinTable(n))).first;
    return it->second;
}

} // namespace

Integer chi(const Partition& lambda, const Partition& pi)
{
    if (lambda.size() != pi.size())
        throw std::invalid_argument("chi: |lambda| != |pi|");
    const auto key = std::make_pair(lambda, pi);
    {
        std::lock_guard<std::mutex> lock(chiMutex);
        const auto it = chiCache.find(key);
        if (it != chiCache.end())
            return it->second;
    }
    const Integer value = murnaghanNakayama(lambda.parts(), pi.parts(), 0);
    std::lock_guard<std::mutex> lock(chiMutex);
    chiCache.emplace(key, value);
    return value;
}

Integer fDim(const Partition& lambda)
{
    return factorial(lambda.size()) / hookProduct(lambda.parts());
}

Integer spinX(const StrictPartition& xi, const Partition& pi)
{
    if (xi.size() != pi.size())
        throw std::invalid_argument("spinX: |xi| != |pi|");
    if (!pi.isOdd())
        throw std::invalid_argument("spinX: pi must have only odd parts");
    const auto table = spinTable(xi.size());
    const auto r = std::find(table->strict.begin(), table->strict.end(), xi) - table->strict.begin();
    const auto c = std::find(table->odd.begin(), table->odd.end(), pi) - table->odd.begin();
    return table->values[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
}

Integer gDim(const StrictPartition& xi)
{
    Rational g = Rational(factorial(xi.size()));
    const auto& parts = xi.parts();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        g /= Rational(factorial(parts[i]));
        for (std::size_t j = i + 1; j < parts.size(); ++j)
        {
            Rational ratio(parts[i] - parts[j], parts[i] + parts[j]);
            ratio.canonicalize();
            g *= ratio;
        }
    }
    if (!isInteger(g))
        throw std::logic_error("gDim: non-integral value");
    return g.get_num();
}

Integer chNormalized(const Partition& pi, const Partition& lambda)
{
    const int n = lambda.size();
    const int k = pi.size();
    if (n < k)
        return 0;
    const Rational value = Rational(fallingFactorial(n, k) * chi(lambda, pi.withOnes(n - k))) / Rational(fDim(lambda));
    if (!isInteger(value))
        throw std::logic_error("chNormalized: non-integral value");
    return value.get_num();
}

Rational chSpinNormalized(const Partition& pi, const StrictPartition& xi)
{
    if (!pi.isOdd())
        throw std::invalid_argument("chSpinNormalized: pi must have only odd parts");
    const int n = xi.size();
    const int k = pi.size();
    if (n < k)
        return 0;
    const Rational value = Rational(fallingFactorial(n, k) * spinX(xi, pi.withOnes(n - k))) /
                           Rational(spinX(xi, Partition::ones(n)));
    if (!isInteger(value))
        throw std::logic_error("chSpinNormalized: non-integral value");
    return value;
}

StrictPartitionFunction pullbackDouble(PartitionFunction f)
{
    return [f = std::move(f)](const StrictPartition& xi) { return f(doubleOf(xi)); };
}

CharacterTable linearCharacterTable(int n)
{
    CharacterTable t;
    t.n = n;
    t.rows = partitionsOf(n);
    t.cols = t.rows;
    for (const auto& lambda : t.rows) {
        std::vector<Integer> row;
        for (const auto& pi : t.cols)
            row.push_back(chi(lambda, pi));
        t.values.push_back(std::move(row));
    }
    return t;
}

CharacterTable spinCharacterTable(int n)
{
    const auto data = spinTable(n);
    CharacterTable t;
    t.n = n;
    t.spin = true;
    for (const auto& xi : data->strict)
        t.rows.push_back(xi.partition());
    t.cols = data->odd;
    t.values = data->values;
    return t;
}

nlohmann::json toJson(const CharacterTable& t)
{
    nlohmann::json j;
    j["n"] = t.n;
    j["kind"] = t.spin ? "spin" : "linear";
    j["rows"] = nlohmann::json::array();
    for (const auto& r : t.rows)
        j["rows"].push_back(toString(r));
    j["cols"] = nlohmann::json::array();
    for (const auto& c : t.cols)
        j["cols"].push_back(toString(c));
    j["values"] = nlohmann::json::array();
    for (const auto& row : t.values) {
        nlohmann::json jr = nlohmann::json::array();
        for (const auto& v : row)
            jr.push_back(toString(v));
        j["values"].push_back(std::move(jr));
    }
    return j;
}

} // namespace spinrep
