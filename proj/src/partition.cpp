#include "spinrep/partition.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace spinrep {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::fromUnsorted(std::vector<int> parts)
{
    if (std::any_of(parts.begin(), parts.end(), [](int x) { return x < 0; }))
        throw std::invalid_argument("partition parts must be nonnegative");
    std::erase(parts, 0);
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

Partition Partition::ones(int count)
{
    return Partition(std::vector<int>(static_cast<std::size_t>(std::max(count, 0)), 1));
}

int Partition::multiplicity(int part) const
{
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

bool Partition::isOdd() const
{
    return std::all_of(parts_.begin(), parts_.end(), [](int x) { return x % 2 == 1; });
}

bool Partition::isStrict() const
{
    return std::adjacent_find(parts_.begin(), parts_.end()) == parts_.end();
}

Partition Partition::conjugate() const
{
    std::vector<int> out(static_cast<std::size_t>(largest()), 0);
    for (int part : parts_)
        for (int j = 0; j < part; ++j)
            ++out[static_cast<std::size_t>(j)];
    return Partition(std::move(out));
}

Partition Partition::join(const Partition& other) const
{
    std::vector<int> all(parts_);
    all.insert(all.end(), other.parts_.begin(), other.parts_.end());
    return fromUnsorted(std::move(all));
}

Partition Partition::withOnes(int count) const
{
    std::vector<int> all(parts_);
    all.insert(all.end(), static_cast<std::size_t>(std::max(count, 0)), 1);
    return Partition(std::move(all));
}

Partition Partition::withoutOnes() const
{
    std::vector<int> rest;
    for (int part : parts_)
        if (part != 1)
            rest.push_back(part);
    return Partition(std::move(rest));
}

StrictPartition::StrictPartition(std::vector<int> parts) : StrictPartition(Partition(std::move(parts))) {}

StrictPartition::StrictPartition(const Partition& p) : p_(p)
{
    if (!p_.isStrict())
        throw std::invalid_argument("strict partition parts must be strictly decreasing");
}

Integer zee(const Partition& p)
{
    Integer z = 1;
    const auto& parts = p.parts();
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i])
            ++j;
        const long m = static_cast<long>(j - i);
        Integer power;
        mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(parts[i]), static_cast<unsigned long>(m));
        z *= power * factorial(m);
        i = j;
    }
    return z;
}

Frobenius frobenius(const Partition& p)
{
    const Partition conj = p.conjugate();
    Frobenius f;
    for (int i = 0; i < p.length() && p[static_cast<std::size_t>(i)] > i; ++i) {
        f.arms.push_back(p[static_cast<std::size_t>(i)] - i - 1);
        f.legs.push_back(conj[static_cast<std::size_t>(i)] - i - 1);
    }
    return f;
}

Partition fromFrobenius(const Frobenius& f)
{
    const std::size_t d = f.arms.size();
    if (f.legs.size() != d)
        throw std::invalid_argument("Frobenius coordinates: arms and legs differ in length");
    for (std::size_t i = 1; i < d; ++i)
        if (f.arms[i] >= f.arms[i - 1] || f.legs[i] >= f.legs[i - 1])
            throw std::invalid_argument("Frobenius coordinates must be strictly decreasing");
    if (d > 0 && (f.arms.back() < 0 || f.legs.back() < 0))
        throw std::invalid_argument("Frobenius coordinates must be nonnegative");

    // Row i < d has length arm_i + i + 1; rows below the diagonal block are
    // read off the legs: row r >= d has length #{i : leg_i + i >= r}.
    std::vector<int> rows;
    for (std::size_t i = 0; i < d; ++i)
        rows.push_back(f.arms[i] + static_cast<int>(i) + 1);
    const int height = d == 0 ? 0 : f.legs.front() + 1;
    for (int r = static_cast<int>(d); r < height; ++r) {
        int len = 0;
        for (std::size_t i = 0; i < d; ++i)
            if (f.legs[i] + static_cast<int>(i) >= r)
                ++len;
        rows.push_back(len);
    }
    return Partition(std::move(rows));
}

Partition doubleOf(const StrictPartition& xi)
{
    Frobenius f;
    for (int part : xi.parts()) {
        f.arms.push_back(part);
        f.legs.push_back(part - 1);
    }
    return fromFrobenius(f);
}

Partition overlapDoubleOf(const StrictPartition& xi)
{
    // Row r (0-based) collects the shifted row r (columns r .. r+ξ_r-1) and the
    // transposed boxes (r, c) for every shifted box (c, r) with c < r.
    const int len = xi.length();
    const int height = len == 0 ? 0 : xi[0];
    std::vector<int> rows(static_cast<std::size_t>(height), 0);
    for (int r = 0; r < height; ++r) {
        int count = r < len ? xi[static_cast<std::size_t>(r)] : 0;
        for (int c = 0; c < std::min(r, len); ++c)
            if (r <= c + xi[static_cast<std::size_t>(c)] - 1)
                ++count;
        rows[static_cast<std::size_t>(r)] = count;
    }
    return Partition::fromUnsorted(std::move(rows));
}

bool splitsInSpinGroup(const Partition& p)
{
    if (p.isOdd())
        return true;
    return p.isStrict() && (p.size() - p.length()) % 2 == 1;
}

namespace {

void generate(int remaining, int maxPart, bool strict, bool odd, std::vector<int>& prefix,
              const std::function<void(const std::vector<int>&)>& emit)
{
    if (remaining == 0) {
        emit(prefix);
        return;
    }
    for (int part = std::min(remaining, maxPart); part >= 1; --part) {
        if (odd && part % 2 == 0)
            continue;
        prefix.push_back(part);
        generate(remaining - part, strict ? part - 1 : part, strict, odd, prefix, emit);
        prefix.pop_back();
    }
}

} // namespace

std::vector<Partition> partitionsOf(int n)
{
    std::vector<Partition> out;
    if (n < 0)
        return out;
    std::vector<int> prefix;
    generate(n, n, false, false, prefix, [&](const std::vector<int>& parts) { out.emplace_back(parts); });
    return out;
}

std::vector<StrictPartition> strictPartitionsOf(int n)
{
    std::vector<StrictPartition> out;
    if (n < 0)
        return out;
    std::vector<int> prefix;
    generate(n, n, true, false, prefix, [&](const std::vector<int>& parts) { out.emplace_back(parts); });
    return out;
}

std::vector<Partition> oddPartitionsOf(int n)
{
    std::vector<Partition> out;
    if (n < 0)
        return out;
    std::vector<int> prefix;
    generate(n, n, false, true, prefix, [&](const std::vector<int>& parts) { out.emplace_back(parts); });
    return out;
}

std::string toString(const Partition& p)
{
    if (p.empty())
        return "-";
    std::ostringstream os;
    for (std::size_t i = 0; i < p.parts().size(); ++i) {
        if (i)
            os << ',';
        os << p[i];
    }
    return os.str();
}

std::string toString(const StrictPartition& p)
{
    return toString(p.partition());
}

Partition parsePartition(const std::string& text)
{
    auto trim = [](const std::string& s) {
        const auto b = s.find_first_not_of(" \t");
        if (b == std::string::npos)
            return std::string();
        const auto e = s.find_last_not_of(" \t");
        return s.substr(b, e - b + 1);
    };
    const std::string body = trim(text);
    if (body == "-" || body.empty())
        return Partition();
    std::vector<int> parts;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("malformed partition: '" + text + "'");
        if (item.size() > 6)
            throw std::invalid_argument("partition part too large: '" + item + "'");
        parts.push_back(std::stoi(item));
    }
    if (!body.empty() && body.back() == ',')
        throw std::invalid_argument("malformed partition: '" + text + "'");
    return Partition(std::move(parts));
}

StrictPartition parseStrictPartition(const std::string& text)
{
    return StrictPartition(parsePartition(text));
}

std::ostream& operator<<(std::ostream& os, const Partition& p)
{
    return os << toString(p);
}

std::ostream& operator<<(std::ostream& os, const StrictPartition& p)
{
    return os << toString(p);
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept
{
    std::size_t h = 1469598103934665603ull;
    for (int part : p.parts()) {
        h ^= static_cast<std::size_t>(part);
        h *= 1099511628211ull;
    }
    return h;
}

} // namespace spinrep
