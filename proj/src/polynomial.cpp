#include "spinrep/polynomial.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace spinrep {

bool GradedLex::operator()(const std::vector<int>& a, const std::vector<int>& b) const
{
    const int da = std::accumulate(a.begin(), a.end(), 0);
    const int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db)
        return da < db;
    return a < b;
}

Polynomial Polynomial::constant(int variables, const Rational& c)
{
    Polynomial p(variables);
    p.addTerm(std::vector<int>(static_cast<std::size_t>(variables), 0), c);
    return p;
}

Polynomial Polynomial::variable(int variables, int index)
{
    if (index < 0 || index >= variables)
        throw std::out_of_range("Polynomial::variable: index out of range");
    Polynomial p(variables);
    std::vector<int> e(static_cast<std::size_t>(variables), 0);
    e[static_cast<std::size_t>(index)] = 1;
    p.addTerm(e, 1);
    return p;
}

int Polynomial::totalDegree() const
{
    if (terms_.empty())
        return -1;
    const auto& e = terms_.rbegin()->first;
    return std::accumulate(e.begin(), e.end(), 0);
}

Polynomial Polynomial::homogeneousPart(int degree) const
{
    Polynomial out(vars_);
    for (const auto& [e, c] : terms_)
        if (std::accumulate(e.begin(), e.end(), 0) == degree)
            out.terms_.emplace(e, c);
    return out;
}

Rational Polynomial::coefficient(const std::vector<int>& exponents) const
{
    const auto it = terms_.find(exponents);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::addTerm(const std::vector<int>& exponents, const Rational& c)
{
    if (static_cast<int>(exponents.size()) != vars_)
        throw std::invalid_argument("Polynomial::addTerm: exponent vector has wrong length");
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(exponents, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& other)
{
    if (other.vars_ != vars_)
        throw std::invalid_argument("Polynomial: variable counts differ");
    for (const auto& [e, c] : other.terms_)
        addTerm(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other)
{
    if (other.vars_ != vars_)
        throw std::invalid_argument("Polynomial: variable counts differ");
    for (const auto& [e, c] : other.terms_)
        addTerm(e, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, coeff] : terms_)
        coeff *= c;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    if (a.vars_ != b.vars_)
        throw std::invalid_argument("Polynomial: variable counts differ");
    Polynomial out(a.vars_);
    std::vector<int> e(static_cast<std::size_t>(a.vars_));
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] = ea[i] + eb[i];
            out.addTerm(e, ca * cb);
        }
    }
    return out;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const
{
    if (static_cast<int>(point.size()) != vars_)
        throw std::invalid_argument("Polynomial::evaluate: point has wrong dimension");
    Rational sum = 0;
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            for (int j = 0; j < e[i]; ++j)
                term *= point[i];
        }
        sum += term;
    }
    return sum;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const
{
    if (static_cast<int>(images.size()) != vars_)
        throw std::invalid_argument("Polynomial::substitute: need one image per variable");
    const int target = images.empty() ? 0 : images.front().variables();
    // powers[i][j] = images[i]^j, built lazily.
    std::vector<std::vector<Polynomial>> powers(images.size());
    auto power = [&](std::size_t i, int j) -> const Polynomial& {
        auto& cache = powers[i];
        if (cache.empty())
            cache.push_back(Polynomial::constant(target, 1));
        while (static_cast<int>(cache.size()) <= j)
            cache.push_back(cache.back() * images[i]);
        return cache[static_cast<std::size_t>(j)];
    };
    Polynomial out(target);
    for (const auto& [e, c] : terms_) {
        Polynomial term = Polynomial::constant(target, c);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0)
                term = term * power(i, e[i]);
        out += term;
    }
    return out;
}

std::string Polynomial::toString(const std::vector<std::string>& names) const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational mag = abs(c);
        os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
        first = false;
        bool constantTerm = std::accumulate(e.begin(), e.end(), 0) == 0;
        bool printed = false;
        if (mag != 1 || constantTerm) {
            os << mag.get_str();
            printed = true;
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            os << (printed ? "*" : "") << (i < names.size() ? names[i] : "x" + std::to_string(i));
            if (e[i] > 1)
                os << '^' << e[i];
            printed = true;
        }
    }
    return os.str();
}

} // namespace spinrep
