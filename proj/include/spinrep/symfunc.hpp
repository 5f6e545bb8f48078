#ifndef SPINREP_SYMFUNC_HPP
#define SPINREP_SYMFUNC_HPP

#include <map>
#include <string>

#include <json.hpp>

#include "spinrep/arith.hpp"
#include "spinrep/partition.hpp"
#include "spinrep/polynomial.hpp"

namespace spinrep {

/// Size first, then lexicographic on the parts.
struct PartitionGradedLex {
    bool operator()(const Partition& a, const Partition& b) const
    {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a.parts() < b.parts();
    }
};

/// Symmetric function written in the power-sum basis: Σ c_μ p_μ with exact
/// rational coefficients. Zero coefficients are never stored.
class SymFunc {
public:
    using Terms = std::map<Partition, Rational, PartitionGradedLex>;

    SymFunc() = default;
    static SymFunc one() { return powerSum(Partition(), 1); }
    /// c · p_μ
    static SymFunc powerSum(const Partition& mu, const Rational& c = 1);

    const Terms& terms() const noexcept { return terms_; }
    bool isZero() const noexcept { return terms_.empty(); }
    Rational coefficient(const Partition& mu) const;
    /// Largest |μ| present; -1 for zero.
    int degree() const;
    bool isHomogeneous() const;
    SymFunc homogeneousPart(int degree) const;
    /// True iff every stored μ has only odd parts.
    bool inOddSubalgebra() const;

    void addTerm(const Partition& mu, const Rational& c);

    SymFunc& operator+=(const SymFunc& other);
    SymFunc& operator-=(const SymFunc& other);
    SymFunc& operator*=(const Rational& c);
    friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
    friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
    friend SymFunc operator*(SymFunc a, const Rational& c) { return a *= c; }
    friend SymFunc operator*(const Rational& c, SymFunc a) { return a *= c; }
    bool operator==(const SymFunc& other) const { return terms_ == other.terms_; }

private:
    Terms terms_;
};

/// Bilinear product with p_μ p_ν = p_{μ ∪ ν}.
SymFunc multiply(const SymFunc& f, const SymFunc& g);
SymFunc operator*(const SymFunc& f, const SymFunc& g);

/// Frobenius formula s_μ = Σ_π z_π^{-1} χ^μ(π) p_π.
SymFunc schurS(const Partition& mu);
/// Coefficient of t^a in exp(2 Σ_{r odd} p_r t^r / r).
SymFunc schurQOneRow(int a);
/// Schur Q-function: two-row rule and Pfaffian expansion above two rows.
SymFunc schurQ(const StrictPartition& xi);
/// 2^{-ℓ(ξ)} Q_ξ
SymFunc schurP(const StrictPartition& xi);
/// Algebra map p_r -> 2 p_r (r odd), 0 (r even).
SymFunc phi(const SymFunc& f);

/// Substitutes p_r = x_1^r + ... + x_N^r.
Polynomial expandInVariables(const SymFunc& f, int variables);

/// [{"mu": "3,1", "coeff": "4/3"}, ...] in graded-lex order of μ.
nlohmann::json toJson(const SymFunc& f);
SymFunc symFuncFromJson(const nlohmann::json& j);
std::string toString(const SymFunc& f);

} // namespace spinrep

#endif // SPINREP_SYMFUNC_HPP
