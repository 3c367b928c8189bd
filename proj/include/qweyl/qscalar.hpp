#pragma once

#include "qweyl/gaussian_rational.hpp"
#include "qweyl/laurent.hpp"

#include <stdexcept>
#include <string>

namespace qweyl {

class PoleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Exact rational function in q and the auxiliary units u1..u3 over the Gaussian rationals.
//
// Canonical form: the denominator is a polynomial divisible by no variable, with leading
// coefficient 1; the numerator is a Laurent polynomial coprime to it. Zero is 0/1. Two equal
// scalars therefore have identical representations and equality is a structural comparison.
class QScalar {
public:
    QScalar() : den_(1) {}
    QScalar(long n) : num_(n), den_(1) {}
    QScalar(const GaussianRational& c) : num_(c), den_(1) {}
    QScalar(Laurent num) : num_(std::move(num)), den_(1) {}
    // Throws std::domain_error when den is zero.
    QScalar(Laurent num, Laurent den);

    static QScalar q() { return Laurent::q_power(1); }
    static QScalar q_pow(int k) { return Laurent::q_power(k); }
    static QScalar unit(std::size_t index, int power = 1);
    // lambda = q - q^{-1}
    static QScalar lambda();
    static QScalar imaginary_unit() { return GaussianRational::imaginary_unit(); }

    const Laurent& numerator() const { return num_; }
    const Laurent& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_laurent() const { return den_.is_one(); }

    QScalar inverse() const;
    QScalar pow(int k) const;
    // The antilinear map of the conjugation omega on scalars: i -> -i, q -> 1/q, u -> 1/u.
    QScalar omega_conjugate() const;

    QScalar operator-() const;
    QScalar& operator+=(const QScalar& o);
    QScalar& operator-=(const QScalar& o);
    QScalar& operator*=(const QScalar& o);
    QScalar& operator/=(const QScalar& o) { return *this *= o.inverse(); }
    friend QScalar operator+(QScalar a, const QScalar& b) { return a += b; }
    friend QScalar operator-(QScalar a, const QScalar& b) { return a -= b; }
    friend QScalar operator*(QScalar a, const QScalar& b) { return a *= b; }
    friend QScalar operator/(QScalar a, const QScalar& b) { return a /= b; }
    bool operator==(const QScalar&) const = default;

    // Multiplies by a Laurent polynomial; cheaper than going through a full QScalar product.
    QScalar times(const Laurent& l) const;

    std::string to_string() const;
    std::string to_latex() const;

private:
    struct Raw {};
    QScalar(Raw, Laurent num, Laurent den) : num_(std::move(num)), den_(std::move(den)) {}
    void normalize();

    Laurent num_;
    Laurent den_;
};

// Substitutes q = 1 and every unit = 1. Throws PoleError when the canonical denominator vanishes there.
GaussianRational eval_at_q1(const QScalar& x);

} // namespace qweyl
