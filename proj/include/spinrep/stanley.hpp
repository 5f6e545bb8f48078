#ifndef SPINREP_STANLEY_HPP
#define SPINREP_STANLEY_HPP

#include <utility>
#include <vector>

#include "spinrep/arith.hpp"
#include "spinrep/partition.hpp"
#include "spinrep/permutation.hpp"
#include "spinrep/polynomial.hpp"

namespace spinrep {

/// Bipartite graph with declared white (columns) and black (rows) vertices.
struct BicoloredGraph {
    int white = 0;
    int black = 0;
    /// (white vertex, black vertex); multi-edges allowed.
    std::vector<std::pair<int, int>> edges;

    enum class Color { White, Black };
    /// Builds from an arbitrary vertex colouring; throws std::invalid_argument
    /// if some edge joins two vertices of the same colour.
    static BicoloredGraph fromColoredEdges(const std::vector<Color>& colors,
                                           const std::vector<std::pair<int, int>>& edges);
    /// White vertices are the cycles of σ1, black the cycles of σ2, with an
    /// edge for every pair of intersecting cycles.
    static BicoloredGraph fromPermutations(const Permutation& s1, const Permutation& s2);
};

/// Number of colourings (f1 on white into columns, f2 on black into rows)
/// such that every edge lands on a box (f1(w), f2(b)) of λ. Isolated white
/// vertices range over [λ_1], isolated black ones over [ℓ(λ)].
Integer coloringCountGraph(const BicoloredGraph& g, const Partition& lambda);

/// N_{σ1,σ2}(λ); throws std::invalid_argument on size mismatch.
Integer coloringCount(const Permutation& s1, const Permutation& s2, const Partition& lambda);

/// Σ_{σ1 σ2 = π} (-1)^{σ1} N_{σ1,σ2}(λ), π realized in block form.
Integer chStanleyLinear(const Partition& pi, const Partition& lambda);
Integer chStanleyLinear(const Permutation& pi, const Partition& lambda);

/// Σ_{σ1 σ2 = π} 2^{-|σ1 ∨ σ2|} (-1)^{σ1} N_{σ1,σ2}(D(ξ)); π must be odd.
Rational chStanleySpin(const Partition& pi, const StrictPartition& xi);
Rational chStanleySpin(const Permutation& pi, const StrictPartition& xi);

/// Rectangles: q_i repeated p_i times. p_i >= 0, q weakly decreasing >= 0.
struct MultiRect {
    std::vector<int> p;
    std::vector<int> q;
    MultiRect() = default;
    MultiRect(std::vector<int> heights, std::vector<int> widths);
    int count() const { return static_cast<int>(p.size()); }
    bool operator==(const MultiRect&) const = default;
};

/// Staircase blocks: parts q_i, q_i - 1, ..., q_i - p_i + 1.
/// Requires q_{i+1} <= q_i - p_i and q_l - p_l >= 0.
struct ShiftedMultiRect {
    std::vector<int> p;
    std::vector<int> q;
    ShiftedMultiRect() = default;
    ShiftedMultiRect(std::vector<int> heights, std::vector<int> widths);
    int count() const { return static_cast<int>(p.size()); }
    bool operator==(const ShiftedMultiRect&) const = default;
};

Partition multirectToPartition(const MultiRect& r);
StrictPartition shiftedMultirectToStrict(const ShiftedMultiRect& r);

/// The 2l rectangles of the double: D(P ⊠ Q) = P × Q.
MultiRect lemma61Transform(const ShiftedMultiRect& r);
/// Same rows without the +1 shifts: D_over(P ⊠ Q) = P × Q.
MultiRect overlapTransform(const ShiftedMultiRect& r);

/// Multirectangular coordinates of λ by distinct part sizes.
MultiRect multirectOf(const Partition& lambda);

/// Polynomial in 2l indeterminates ordered p_1..p_l, q_1..q_l.
using StanleyPoly = Polynomial;

std::vector<std::string> stanleyVariableNames(int l);

/// Ch_π(P × Q) as a polynomial in the 2l multirectangular coordinates.
StanleyPoly stanleyPolynomialLinear(const Partition& pi, int l);
/// Ch^spin_π(P ⊠ Q) in the 2l shifted coordinates; π must be odd.
StanleyPoly stanleyPolynomialSpin(const Partition& pi, int l);

/// Homogeneous component of total degree d.
StanleyPoly topDegreePart(const StanleyPoly& f, int d);

/// Signed sum restricted to |C(σ1)| + |C(σ2)| = |π| + ℓ(π).
StanleyPoly stanleyTopLinearRestricted(const Partition& pi, int l);
/// Restricted spin sum with N evaluated on D_over(P ⊠ Q).
StanleyPoly stanleyTopSpinRestricted(const Partition& pi, int l);

/// Total degree of the linear or spin Stanley polynomial with l rectangles.
int filtrationDegree(const Partition& pi, bool spin, int l);

} // namespace spinrep

#endif // SPINREP_STANLEY_HPP
