#include "spinrep/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace spinrep {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images))
{
    std::vector<char> seen(images_.size(), 0);
    for (int x : images_) {
        if (x < 0 || x >= static_cast<int>(images_.size()) || seen[static_cast<std::size_t>(x)])
            throw std::invalid_argument("permutation images must form a bijection");
        seen[static_cast<std::size_t>(x)] = 1;
    }
}

Permutation Permutation::identity(int k)
{
    std::vector<int> images(static_cast<std::size_t>(k));
    std::iota(images.begin(), images.end(), 0);
    return Permutation(std::move(images));
}

Permutation Permutation::fromCycleType(const Partition& type)
{
    std::vector<int> images(static_cast<std::size_t>(type.size()));
    int start = 0;
    for (int part : type.parts()) {
        for (int j = 0; j < part; ++j)
            images[static_cast<std::size_t>(start + j)] = start + (j + 1) % part;
        start += part;
    }
    return Permutation(std::move(images));
}

Permutation Permutation::fromCycles(int k, const std::vector<std::vector<int>>& cycles)
{
    std::vector<int> images(static_cast<std::size_t>(k));
    std::iota(images.begin(), images.end(), 0);
    for (const auto& cycle : cycles) {
        for (std::size_t j = 0; j < cycle.size(); ++j) {
            const int from = cycle[j] - 1;
            const int to = cycle[(j + 1) % cycle.size()] - 1;
            if (from < 0 || from >= k || to < 0 || to >= k)
                throw std::invalid_argument("cycle point out of range");
            images[static_cast<std::size_t>(from)] = to;
        }
    }
    return Permutation(std::move(images));
}

Permutation Permutation::inverse() const
{
    std::vector<int> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
        inv[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
    return Permutation(std::move(inv));
}

std::vector<std::vector<int>> Permutation::cycles() const
{
    std::vector<std::vector<int>> out;
    std::vector<char> seen(images_.size(), 0);
    for (int start = 0; start < size(); ++start) {
        if (seen[static_cast<std::size_t>(start)])
            continue;
        std::vector<int> cycle;
        for (int x = start; !seen[static_cast<std::size_t>(x)]; x = images_[static_cast<std::size_t>(x)]) {
            seen[static_cast<std::size_t>(x)] = 1;
            cycle.push_back(x);
        }
        out.push_back(std::move(cycle));
    }
    return out;
}

std::vector<int> Permutation::cycleIds() const
{
    std::vector<int> ids(images_.size(), -1);
    int next = 0;
    for (int start = 0; start < size(); ++start) {
        if (ids[static_cast<std::size_t>(start)] >= 0)
            continue;
        for (int x = start; ids[static_cast<std::size_t>(x)] < 0; x = images_[static_cast<std::size_t>(x)])
            ids[static_cast<std::size_t>(x)] = next;
        ++next;
    }
    return ids;
}

int Permutation::cycleCount() const
{
    int count = 0;
    std::vector<char> seen(images_.size(), 0);
    for (int start = 0; start < size(); ++start) {
        if (seen[static_cast<std::size_t>(start)])
            continue;
        ++count;
        for (int x = start; !seen[static_cast<std::size_t>(x)]; x = images_[static_cast<std::size_t>(x)])
            seen[static_cast<std::size_t>(x)] = 1;
    }
    return count;
}

Partition Permutation::cycleType() const
{
    std::vector<int> lengths;
    for (const auto& c : cycles())
        lengths.push_back(static_cast<int>(c.size()));
    return Partition::fromUnsorted(std::move(lengths));
}

Permutation compose(const Permutation& a, const Permutation& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("compose: permutation sizes differ");
    std::vector<int> images(static_cast<std::size_t>(a.size()));
    for (int x = 0; x < a.size(); ++x)
        images[static_cast<std::size_t>(x)] = a(b(x));
    return Permutation(std::move(images));
}

Permutation operator*(const Permutation& a, const Permutation& b)
{
    return compose(a, b);
}

std::string toString(const Permutation& p)
{
    std::ostringstream os;
    for (const auto& cycle : p.cycles()) {
        os << '(';
        for (std::size_t j = 0; j < cycle.size(); ++j)
            os << (j ? "," : "") << cycle[j] + 1;
        os << ')';
    }
    return os.str();
}

int orbitCount(const Permutation& s1, const Permutation& s2)
{
    if (s1.size() != s2.size())
        throw std::invalid_argument("orbitCount: permutation sizes differ");
    const int k = s1.size();
    std::vector<int> parent(static_cast<std::size_t>(k));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x)
            x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        return x;
    };
    int orbits = k;
    for (const Permutation* s : {&s1, &s2}) {
        for (int x = 0; x < k; ++x) {
            const int a = find(x);
            const int b = find((*s)(x));
            if (a != b) {
                parent[static_cast<std::size_t>(a)] = b;
                --orbits;
            }
        }
    }
    return orbits;
}

std::uint64_t factorialU64(int k)
{
    if (k < 0 || k > 20)
        throw std::out_of_range("factorialU64: argument outside [0, 20]");
    std::uint64_t f = 1;
    for (int i = 2; i <= k; ++i)
        f *= static_cast<std::uint64_t>(i);
    return f;
}

Permutation unrankPermutation(int k, std::uint64_t index)
{
    if (k < 0 || index >= factorialU64(k))
        throw std::invalid_argument("unrankPermutation: index out of range");
    std::vector<int> pool(static_cast<std::size_t>(k));
    std::iota(pool.begin(), pool.end(), 0);
    std::vector<int> images;
    images.reserve(static_cast<std::size_t>(k));
    for (int i = k; i >= 1; --i) {
        const std::uint64_t block = factorialU64(i - 1);
        const auto pos = static_cast<std::size_t>(index / block);
        index %= block;
        images.push_back(pool[pos]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pos));
    }
    return Permutation(std::move(images));
}

void forEachFactorization(const Permutation& pi, std::uint64_t first, std::uint64_t last,
                          const std::function<void(const Permutation&, const Permutation&)>& visit)
{
    const int k = pi.size();
    last = std::min(last, factorialU64(k));
    if (first >= last)
        return;
    std::vector<int> word = unrankPermutation(k, first).images();
    std::vector<int> inverse(static_cast<std::size_t>(k));
    std::vector<int> second(static_cast<std::size_t>(k));
    for (std::uint64_t index = first; index < last; ++index) {
        for (int x = 0; x < k; ++x)
            inverse[static_cast<std::size_t>(word[static_cast<std::size_t>(x)])] = x;
        for (int x = 0; x < k; ++x)
            second[static_cast<std::size_t>(x)] = inverse[static_cast<std::size_t>(pi(x))];
        visit(Permutation(word), Permutation(second));
        std::next_permutation(word.begin(), word.end());
    }
}

void forEachFactorization(const Permutation& pi,
                          const std::function<void(const Permutation&, const Permutation&)>& visit)
{
    forEachFactorization(pi, 0, factorialU64(pi.size()), visit);
}

std::vector<std::pair<Permutation, Permutation>> factorizationsOf(const Permutation& pi)
{
    std::vector<std::pair<Permutation, Permutation>> out;
    out.reserve(static_cast<std::size_t>(factorialU64(pi.size())));
    forEachFactorization(pi, [&](const Permutation& a, const Permutation& b) { out.emplace_back(a, b); });
    return out;
}

std::vector<SetPartition> setPartitionsOf(int n)
{
    if (n < 0)
        throw std::invalid_argument("setPartitionsOf: negative size");
    std::vector<SetPartition> out;
    // Restricted growth words a_0 = 0, a_i <= 1 + max(a_0..a_{i-1}).
    std::vector<int> word(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int pos, int maxBlock) {
        if (pos == n) {
            SetPartition sp;
            sp.blocks.assign(static_cast<std::size_t>(maxBlock + 1), {});
            for (int i = 0; i < n; ++i)
                sp.blocks[static_cast<std::size_t>(word[static_cast<std::size_t>(i)])].push_back(i);
            if (n == 0)
                sp.blocks.clear();
            out.push_back(std::move(sp));
            return;
        }
        for (int b = 0; b <= maxBlock + 1; ++b) {
            word[static_cast<std::size_t>(pos)] = b;
            rec(pos + 1, std::max(maxBlock, b));
        }
    };
    if (n == 0)
        out.push_back(SetPartition{});
    else {
        word[0] = 0;
        rec(1, 0);
    }
    return out;
}

Integer stirling2(int n, int k)
{
    if (n < 0 || k < 0)
        return 0;
    std::vector<std::vector<Integer>> s(static_cast<std::size_t>(n + 1),
                                        std::vector<Integer>(static_cast<std::size_t>(n + 2), 0));
    s[0][0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= i; ++j)
            s[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                j * s[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)] +
                s[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
    return k > n ? Integer(0) : s[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

Integer stirling1(int n, int k)
{
    if (n < 0 || k < 0)
        return 0;
    std::vector<std::vector<Integer>> c(static_cast<std::size_t>(n + 1),
                                        std::vector<Integer>(static_cast<std::size_t>(n + 2), 0));
    c[0][0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= i; ++j)
            c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                (i - 1) * c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)] +
                c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
    return k > n ? Integer(0) : c[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

Rational stirlingIdentityCheck(int m)
{
    if (m < 1)
        throw std::invalid_argument("stirlingIdentityCheck: m must be positive");
    Rational sum = 0;
    for (int p = 1; p <= m; ++p) {
        Rational term = Rational(stirling2(m, p)) * powerOfTwo(-p) * Rational(doubleFactorial(2 * p - 3));
        if (p % 2 == 1)
            term = -term;
        sum += term;
    }
    return -sum;
}

} // namespace spinrep
