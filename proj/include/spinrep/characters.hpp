#ifndef SPINREP_CHARACTERS_HPP
#define SPINREP_CHARACTERS_HPP

#include <functional>
#include <vector>

#include <json.hpp>

#include "spinrep/arith.hpp"
#include "spinrep/partition.hpp"

namespace spinrep {

/// Irreducible character χ^λ(π) by the Murnaghan–Nakayama rule.
/// Throws std::invalid_argument when |λ| != |π|.
Integer chi(const Partition& lambda, const Partition& pi);

/// Number of standard tableaux, by the hook length formula.
Integer fDim(const Partition& lambda);

/// Spin character X^ξ(π), defined by p_π = Σ_ξ X^ξ(π) P_ξ; π must be odd.
Integer spinX(const StrictPartition& xi, const Partition& pi);

/// Number of shifted standard tableaux:
/// n! / Π ξ_i! · Π_{i<j} (ξ_i - ξ_j)/(ξ_i + ξ_j).
Integer gDim(const StrictPartition& xi);

/// Ch_π(λ) = n^{↓k} χ^λ(π ∪ 1^{n-k}) / χ^λ(1^n), zero when n < k.
Integer chNormalized(const Partition& pi, const Partition& lambda);

/// Ch^spin_π(ξ) = n^{↓k} X^ξ(π ∪ 1^{n-k}) / X^ξ(1^n), zero when n < k.
/// π must be odd.
Rational chSpinNormalized(const Partition& pi, const StrictPartition& xi);

using PartitionFunction = std::function<Rational(const Partition&)>;
using StrictPartitionFunction = std::function<Rational(const StrictPartition&)>;

/// (D* F)(ξ) = F(D(ξ)).
StrictPartitionFunction pullbackDouble(PartitionFunction f);

/// Character table of S_n (rows P_n, columns P_n) or of the spin characters
/// X (rows SP_n, columns OP_n), both in the enumeration order of partitionsOf.
struct CharacterTable {
    int n = 0;
    bool spin = false;
    std::vector<Partition> rows;
    std::vector<Partition> cols;
    std::vector<std::vector<Integer>> values;
};

CharacterTable linearCharacterTable(int n);
CharacterTable spinCharacterTable(int n);

/// {n, kind, rows, cols, values} with exact integer strings.
nlohmann::json toJson(const CharacterTable& t);

} // namespace spinrep

#endif // SPINREP_CHARACTERS_HPP
