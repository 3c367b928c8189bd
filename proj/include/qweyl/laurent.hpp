#pragma once

#include "qweyl/gaussian_rational.hpp"

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace qweyl {

// Variable 0 is q; variables 1..kMaxVars-1 are auxiliary commuting units u1, u2, u3
// standing for symbolic powers such as q^B.
inline constexpr std::size_t kMaxVars = 4;
using Exponents = std::array<int, kMaxVars>;

std::string variable_name(std::size_t var);

// Sparse multivariate Laurent polynomial over the Gaussian rationals.
// Terms are kept in strictly descending lexicographic exponent order with no zero coefficients,
// so two equal polynomials have identical term vectors.
class Laurent {
public:
    struct Term {
        Exponents exp{};
        GaussianRational coeff;
        bool operator==(const Term&) const = default;
    };

    Laurent() = default;
    Laurent(long c) : Laurent(GaussianRational(c)) {}
    Laurent(const GaussianRational& c);

    static Laurent monomial(const Exponents& exp, const GaussianRational& c = 1);
    static Laurent variable_power(std::size_t var, int k, const GaussianRational& c = 1);
    static Laurent q_power(int k, const GaussianRational& c = 1) { return variable_power(0, k, c); }
    // Builds from arbitrary (possibly repeated, possibly zero) terms.
    static Laurent from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    // True when no variable other than q occurs.
    bool is_univariate() const;
    bool is_polynomial() const;
    bool uses_variable(std::size_t var) const;

    const Term& leading() const { return terms_.front(); }
    Exponents min_exponents() const;
    Exponents max_exponents() const;

    Laurent shifted(const Exponents& by) const;
    Laurent scaled(const GaussianRational& c) const;
    // Complex conjugation of coefficients combined with x -> 1/x for every variable.
    Laurent conj_invert() const;
    GaussianRational eval_at_one() const;

    Laurent operator-() const;
    Laurent& operator+=(const Laurent& o);
    Laurent& operator-=(const Laurent& o);
    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    friend Laurent operator*(const Laurent& a, const Laurent& b);
    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }
    bool operator==(const Laurent&) const = default;

    std::string to_string() const;
    std::string to_latex() const;

private:
    std::vector<Term> terms_;
};

Laurent operator*(const Laurent& a, const Laurent& b);

// Lexicographic comparison used for term order (true when a sorts before b, i.e. a > b).
bool exponent_greater(const Exponents& a, const Exponents& b);

// Polynomial gcd of two polynomials (nonnegative exponents), normalised so that the leading
// coefficient is 1. gcd(0, 0) is 0.
Laurent poly_gcd(const Laurent& a, const Laurent& b);

// Exact division num / den of polynomials. Throws std::logic_error when den does not divide num.
Laurent divide_exact(const Laurent& num, const Laurent& den);

// Divides by the leading coefficient.
Laurent make_monic(const Laurent& p);

} // namespace qweyl
