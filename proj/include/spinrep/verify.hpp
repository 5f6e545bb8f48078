#ifndef SPINREP_VERIFY_HPP
#define SPINREP_VERIFY_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "spinrep/arith.hpp"

namespace spinrep {

struct Failure {
    nlohmann::json inputs;
    std::string lhs;
    std::string rhs;
};

struct VerificationReport {
    std::string identity;
    nlohmann::json ranges = nlohmann::json::object();
    long cases = 0;
    std::vector<Failure> failures;
    double ms = 0;
    bool passed() const { return failures.empty(); }
};

/// {identity, ranges, cases, failures[], ms}
nlohmann::json toJson(const VerificationReport& r);

// Every verifier takes `perturb`: when set, a sign or factor in the checked
// formula is deliberately altered, and a correct harness must report failures.

/// Ch_k(D(ξ)) = 2 Ch^spin_k(ξ), odd k <= maxK, |ξ| <= maxN.
VerificationReport verifyMainSpecial(int maxK, int maxN, bool perturb = false);
/// Ch_π(D(ξ)) = Σ_S Ch^spin_{π(S)} Ch^spin_{π(S^c)}, and the regrouped sum over
/// set partitions with at most two blocks; odd π with |π| <= maxWeight.
VerificationReport verifySpinVsLinear(int maxWeight, int maxN, bool perturb = false);
/// Ch^spin_π = Σ_I (-1)^{|I|-1} (2|I|-3)!! Π_b ½ Ch_{π_b}(D(ξ)).
VerificationReport verifySpinInLinear(int maxWeight, int maxN, bool perturb = false);
/// f^{D(ξ)} / (2n)! = 2^{-ℓ(ξ)} (g^ξ / n!)^2 and |D(ξ)| = 2n.
VerificationReport verifyDimensionIdentity(int maxN, bool perturb = false);
/// D*(x_π) = Ch^spin_π for odd π with |π| + ℓ(π) <= maxK, plus the degree of
/// the Stanley polynomials of those π with two rectangles.
VerificationReport verifyFiltration(int maxK, int maxN, bool perturb = false);
/// chStanleyLinear = chNormalized, |π| <= maxK, |λ| <= maxN.
VerificationReport verifyStanleyLinear(int maxK, int maxN, bool perturb = false);
/// chStanleySpin = chSpinNormalized, odd π, |π| <= maxK, |ξ| <= maxN.
VerificationReport verifyStanleySpin(int maxK, int maxN, bool perturb = false);
/// spinStanleyViaMaps = chSpinNormalized, and the (5,2) projective-plane
/// gluing is non-orientable.
VerificationReport verifyMaps(int maxK, int maxN, bool perturb = false);
/// φ(s_{D(ξ)}) = 2^{-ℓ(ξ)} Q_ξ^2 in the power-sum basis, |ξ| <= maxN.
VerificationReport verifySchurQ(int maxN, bool perturb = false);
/// D(P ⊠ Q) = P × Q and D_over(P ⊠ Q) for the homogeneous rows; all shifted
/// grids with l <= maxL rectangles and entries <= maxEntry.
VerificationReport verifyDoubleMultirect(int maxL, int maxEntry, bool perturb = false);
/// Stanley polynomial degrees |π| + ℓ(π) <= maxDegree and top parts equal to
/// the restricted factorization sums, with l rectangles.
VerificationReport verifyDegrees(int maxDegree, int l, bool perturb = false);
/// -Σ_p S(m,p) (-1/2)^p (2p-3)!! = 2^{-m}, 1 <= m <= maxM.
VerificationReport verifyStirling(int maxM, bool perturb = false);
/// Ch^spin_{1^m}(ξ) = n^{↓m} and Ch^spin_{ν ∪ 1^s}(ξ) = (n-|ν|)^{↓s} Ch^spin_ν(ξ)
/// for m, |ν| + s <= maxM, |ξ| <= maxN.
VerificationReport verifyReductions(int maxM, int maxN, bool perturb = false);

struct VerifyConfig {
    int maxK = 6;
    int maxN = 7;
    int mapsK = 5;
    bool negativeControls = false;
    /// Empty means every identity.
    std::vector<std::string> identities;
};

/// Keys maxK, maxN, mapsK (nonnegative integers), negativeControls (bool),
/// identities (array of names); throws std::invalid_argument otherwise.
VerifyConfig verifyConfigFromJson(const nlohmann::json& j);

std::vector<std::string> identityNames();

/// Runs one identity by name with the given ranges; throws
/// std::invalid_argument on an unknown name or a negative range.
VerificationReport runIdentity(const std::string& name, int maxK, int maxN, bool perturb = false);

/// Runs the selected identities with their default ranges derived from the
/// config. Reports come back in identityNames() order.
std::vector<VerificationReport> verifyAll(const VerifyConfig& config);

} // namespace spinrep

#endif // SPINREP_VERIFY_HPP
