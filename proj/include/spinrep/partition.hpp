#ifndef SPINREP_PARTITION_HPP
#define SPINREP_PARTITION_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "spinrep/arith.hpp"

namespace spinrep {

/// Integer partition: weakly decreasing positive parts, no trailing zeros.
/// Equality and ordering are structural on the parts.
class Partition {
public:
    Partition() = default;
    /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Sorts into decreasing order and drops zeros.
    static Partition fromUnsorted(std::vector<int> parts);
    static Partition ones(int count);

    const std::vector<int>& parts() const noexcept { return parts_; }
    std::span<const int> view() const noexcept { return parts_; }
    int operator[](std::size_t i) const { return parts_[i]; }
    int size() const noexcept { return size_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }
    int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

    int multiplicity(int part) const;
    bool isOdd() const;
    bool isStrict() const;

    Partition conjugate() const;
    /// Multiset union of parts.
    Partition join(const Partition& other) const;
    /// this ∪ 1^count
    Partition withOnes(int count) const;
    /// The parts different from 1.
    Partition withoutOnes() const;

    auto operator<=>(const Partition& other) const { return parts_ <=> other.parts_; }
    bool operator==(const Partition& other) const { return parts_ == other.parts_; }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// Strict partition: strictly decreasing positive parts.
class StrictPartition {
public:
    StrictPartition() = default;
    explicit StrictPartition(std::vector<int> parts);
    StrictPartition(std::initializer_list<int> parts) : StrictPartition(std::vector<int>(parts)) {}
    explicit StrictPartition(const Partition& p);

    const Partition& partition() const noexcept { return p_; }
    const std::vector<int>& parts() const noexcept { return p_.parts(); }
    int operator[](std::size_t i) const { return p_[i]; }
    int size() const noexcept { return p_.size(); }
    int length() const noexcept { return p_.length(); }
    bool empty() const noexcept { return p_.empty(); }

    /// '+' class iff size - length is even.
    bool isEvenClass() const noexcept { return (size() - length()) % 2 == 0; }

    auto operator<=>(const StrictPartition& other) const = default;
    bool operator==(const StrictPartition& other) const = default;

private:
    Partition p_;
};

/// Π_j j^{m_j} m_j!
Integer zee(const Partition& p);

/// Frobenius coordinates (arms λ_i - i, legs λ'_i - i), i over the diagonal.
struct Frobenius {
    std::vector<int> arms;
    std::vector<int> legs;
    bool operator==(const Frobenius&) const = default;
};
Frobenius frobenius(const Partition& p);
Partition fromFrobenius(const Frobenius& f);

/// The double D(ξ): Frobenius coordinates (ξ_i | ξ_i - 1).
Partition doubleOf(const StrictPartition& xi);
/// Shifted diagram and its transpose overlapping along the diagonal boxes.
Partition overlapDoubleOf(const StrictPartition& xi);

/// True iff the preimage of the class π in the spin group splits:
/// π odd, or π strict with |π| - ℓ(π) odd.
bool splitsInSpinGroup(const Partition& p);

// Enumeration, in lexicographically decreasing order of the parts.
std::vector<Partition> partitionsOf(int n);
std::vector<StrictPartition> strictPartitionsOf(int n);
std::vector<Partition> oddPartitionsOf(int n);

/// "7,7,5,3,2,2"; the empty partition is "-".
std::string toString(const Partition& p);
std::string toString(const StrictPartition& p);
/// Accepts the output of toString; whitespace around parts is ignored.
Partition parsePartition(const std::string& text);
StrictPartition parseStrictPartition(const std::string& text);

std::ostream& operator<<(std::ostream& os, const Partition& p);
std::ostream& operator<<(std::ostream& os, const StrictPartition& p);

struct PartitionHash {
    std::size_t operator()(const Partition& p) const noexcept;
};

} // namespace spinrep

#endif // SPINREP_PARTITION_HPP
