#ifndef SPINREP_POLYNOMIAL_HPP
#define SPINREP_POLYNOMIAL_HPP

#include <map>
#include <string>
#include <vector>

#include "spinrep/arith.hpp"

namespace spinrep {

/// Graded-lexicographic order on exponent vectors: total degree first, then
/// lexicographic.
struct GradedLex {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

/// Sparse polynomial with exact rational coefficients in a fixed number of
/// commuting indeterminates. Zero coefficients are never stored.
class Polynomial {
public:
    using Terms = std::map<std::vector<int>, Rational, GradedLex>;

    Polynomial() = default;
    explicit Polynomial(int variables) : vars_(variables) {}

    static Polynomial constant(int variables, const Rational& c);
    static Polynomial variable(int variables, int index);

    int variables() const noexcept { return vars_; }
    const Terms& terms() const noexcept { return terms_; }
    bool isZero() const noexcept { return terms_.empty(); }
    /// -1 for the zero polynomial.
    int totalDegree() const;
    Polynomial homogeneousPart(int degree) const;
    Rational coefficient(const std::vector<int>& exponents) const;

    void addTerm(const std::vector<int>& exponents, const Rational& c);

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Rational& c);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    bool operator==(const Polynomial& other) const { return vars_ == other.vars_ && terms_ == other.terms_; }

    Rational evaluate(const std::vector<Rational>& point) const;
    /// Replaces variable i by images[i]; all images share one variable count.
    Polynomial substitute(const std::vector<Polynomial>& images) const;

    /// Human-readable form using the given variable names.
    std::string toString(const std::vector<std::string>& names) const;

private:
    int vars_ = 0;
    Terms terms_;
};

} // namespace spinrep

#endif // SPINREP_POLYNOMIAL_HPP
