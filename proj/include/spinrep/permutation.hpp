#ifndef SPINREP_PERMUTATION_HPP
#define SPINREP_PERMUTATION_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "spinrep/arith.hpp"
#include "spinrep/partition.hpp"

namespace spinrep {

/// Bijection of {0, ..., k-1}. Printed and parsed in 1-based cycle notation.
class Permutation {
public:
    Permutation() = default;
    /// Throws std::invalid_argument unless images is a bijection of [0, k).
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int k);
    /// Block form (1,...,π1)(π1+1,...,π1+π2)... of the cycle type.
    static Permutation fromCycleType(const Partition& type);
    /// 1-based cycles, e.g. {{1,5,4,2},{3}}; omitted points are fixed.
    static Permutation fromCycles(int k, const std::vector<std::vector<int>>& cycles);

    int size() const noexcept { return static_cast<int>(images_.size()); }
    int operator()(int x) const { return images_[static_cast<std::size_t>(x)]; }
    const std::vector<int>& images() const noexcept { return images_; }

    Permutation inverse() const;
    /// Cycles as 0-based point lists, each starting at its smallest point,
    /// ordered by smallest point.
    std::vector<std::vector<int>> cycles() const;
    /// cycle id of each point (ids follow the order of cycles()).
    std::vector<int> cycleIds() const;
    int cycleCount() const;
    Partition cycleType() const;
    /// (-1)^{k - #cycles}
    int sign() const { return (size() - cycleCount()) % 2 == 0 ? 1 : -1; }

    auto operator<=>(const Permutation&) const = default;
    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> images_;
};

/// (a ∘ b)(x) = a(b(x)); throws on size mismatch.
Permutation compose(const Permutation& a, const Permutation& b);
Permutation operator*(const Permutation& a, const Permutation& b);

std::string toString(const Permutation& p);

/// Number of orbits of ⟨σ1, σ2⟩ on the points; throws on size mismatch.
int orbitCount(const Permutation& s1, const Permutation& s2);

/// Visits every pair (σ1, σ2) with σ1 σ2 = π, i.e. σ2 = σ1^{-1} π, with σ1
/// running over S_k in lexicographic order of its image word.
/// Only the index range [first, last) of that order is visited.
void forEachFactorization(const Permutation& pi, std::uint64_t first, std::uint64_t last,
                          const std::function<void(const Permutation&, const Permutation&)>& visit);
void forEachFactorization(const Permutation& pi,
                          const std::function<void(const Permutation&, const Permutation&)>& visit);

/// Materialized stream of all k! factorizations, in the order above.
std::vector<std::pair<Permutation, Permutation>> factorizationsOf(const Permutation& pi);

/// Permutation of rank `index` in lexicographic order of S_k.
Permutation unrankPermutation(int k, std::uint64_t index);
std::uint64_t factorialU64(int k);

/// Set partition of {0, ..., n-1}; blocks sorted by smallest element.
struct SetPartition {
    std::vector<std::vector<int>> blocks;
    int blockCount() const { return static_cast<int>(blocks.size()); }
    bool operator==(const SetPartition&) const = default;
};

/// All Bell(n) set partitions, in lexicographic order of restricted growth words.
std::vector<SetPartition> setPartitionsOf(int n);

Integer stirling2(int n, int k);
/// Signed-free Stirling numbers of the first kind (cycle counts).
Integer stirling1(int n, int k);

/// -Σ_p S(m,p) (-1/2)^p (2p-3)!!; equals 2^{-m}.
Rational stirlingIdentityCheck(int m);

} // namespace spinrep

#endif // SPINREP_PERMUTATION_HPP
