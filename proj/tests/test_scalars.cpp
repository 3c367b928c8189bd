#include "qweyl/qcombinatorics.hpp"
#include "qweyl/qscalar.hpp"
#include "support/random_values.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>

using namespace qweyl;
using qweyl::testing::Sampler;

namespace {

QScalar q(int k = 1)
{
    return QScalar::q_pow(k);
}

// Numeric value of an exact scalar at q = x (units at 1), for limit checks.
double numeric_at(const QScalar& s, double x)
{
    auto eval = [x](const Laurent& l) {
        double acc = 0;
        for (const auto& t : l.terms())
            acc += t.coeff.re().get_d() * std::pow(x, t.exp[0]);
        return acc;
    };
    return eval(s.numerator()) / eval(s.denominator());
}

} // namespace

TEST_CASE("gaussian rationals")
{
    const GaussianRational i = GaussianRational::imaginary_unit();
    CHECK(i * i == GaussianRational(-1));
    CHECK(GaussianRational::from_fraction(2, 4) == GaussianRational::from_fraction(1, 2));
    CHECK((GaussianRational(3) + i).inverse() * (GaussianRational(3) + i) == GaussianRational(1));
    CHECK((GaussianRational(1) + i * 3).conj() == GaussianRational(1) - i * 3);
    CHECK(GaussianRational::from_fraction(-1, 2).to_string() == "-1/2");
    CHECK((GaussianRational::from_fraction(1, 2) + i * 3).to_string() == "(1/2+3i)");
    CHECK_THROWS_AS(GaussianRational().inverse(), std::domain_error);
}

TEST_CASE("q-numbers")
{
    CHECK(qnum(0).is_zero());
    CHECK(qnum(1).is_one());
    CHECK(qnum(2) == q() + q(-1));
    CHECK(qnum(3) == q(2) + QScalar(1) + q(-2));
    for (int n = -8; n <= 8; ++n) {
        CHECK(qnum(-n) == -qnum(n));
        // Defining quotient (q^n - q^-n) / (q - q^-1).
        CHECK(qnum(n) == (q(n) - q(-n)) / QScalar::lambda());
    }
    CHECK(qnum(4).is_laurent());
}

TEST_CASE("q-factorials and inverse gamma")
{
    CHECK(qfactorial(0).is_one());
    CHECK(qfactorial(1).is_one());
    CHECK(qfactorial(2) == q() + q(-1));
    CHECK(qfactorial(3) == (q() + q(-1)) * (q(2) + QScalar(1) + q(-2)));
    CHECK_THROWS_AS(qfactorial(-1), std::domain_error);

    CHECK(inv_gamma_q(3) == qfactorial(2).inverse());
    CHECK(inv_gamma_q(1).is_one());
    CHECK(inv_gamma_q(0).is_zero());
    CHECK(inv_gamma_q(-3).is_zero());
}

TEST_CASE("q-bracket addition identity")
{
    for (int m = -10; m <= 10; ++m)
        for (int n = -10; n <= 10; ++n)
            CHECK(qnum(m + n) == q(n) * qnum(m) + q(-m) * qnum(n));
}

TEST_CASE("evaluation at q = 1")
{
    CHECK(eval_at_q1(QScalar::lambda()).is_zero());
    CHECK(eval_at_q1(qnum(5)) == GaussianRational(5));
    for (int n = -20; n <= 20; ++n)
        CHECK(eval_at_q1(qnum(n)) == GaussianRational(n));

    const QScalar ratio = (q(3) - q(-3)) / (q() - q(-1));
    CHECK(eval_at_q1(ratio) == GaussianRational(3));
    CHECK(std::abs(numeric_at(ratio, 1.0 + 1e-8) - 3.0) < 1e-6);

    CHECK(eval_at_q1(QScalar::unit(2, 5) * qnum(2)) == GaussianRational(2));
    CHECK_THROWS_AS(eval_at_q1(QScalar(1) / (q() - QScalar(1))), PoleError);
}

TEST_CASE("canonical form")
{
    const QScalar u = QScalar::unit(1);
    // (q u - 1)(q + 2) / ((q u - 1)(q - 3)) cancels the shared bivariate factor.
    const QScalar shared = q() * u - QScalar(1);
    const QScalar lhs = (shared * (q() + QScalar(2))) / (shared * (q() - QScalar(3)));
    const QScalar rhs = (q() + QScalar(2)) / (q() - QScalar(3));
    CHECK(lhs == rhs);
    CHECK(lhs.numerator() == rhs.numerator());
    CHECK(lhs.denominator() == rhs.denominator());

    // Monomials never stay in the denominator and the leading coefficient is 1.
    const QScalar x = QScalar(Laurent(1), Laurent::q_power(2) * Laurent(3) + Laurent::q_power(5));
    CHECK(x.denominator().min_exponents() == Exponents{});
    CHECK(x.denominator().leading().coeff.is_one());

    CHECK_THROWS_AS(QScalar(Laurent(1), Laurent()), std::domain_error);
    CHECK(QScalar(Laurent(), Laurent::q_power(3)).denominator().is_one());
}

TEST_CASE("field axioms on random samples")
{
    Sampler rng(2024);
    for (int trial = 0; trial < 150; ++trial) {
        const QScalar a = rng.scalar(), b = rng.scalar(), c = rng.scalar();
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
        if (!a.is_zero())
            CHECK((a * a.inverse()).is_one());
        // Structural equality agrees with cross-multiplication.
        CHECK((a == b) == (a.numerator() * b.denominator() == b.numerator() * a.denominator()));
        // Normalising an already canonical pair changes nothing.
        const QScalar again(a.numerator(), a.denominator());
        CHECK(again.numerator() == a.numerator());
        CHECK(again.denominator() == a.denominator());
    }
}

TEST_CASE("powers and conjugation")
{
    Sampler rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        const QScalar a = rng.nonzero_scalar();
        CHECK(a.pow(3) == a * a * a);
        CHECK(a.pow(-2) == (a * a).inverse());
        CHECK(a.pow(0).is_one());
        CHECK(a.omega_conjugate().omega_conjugate() == a);
    }
    CHECK(q().omega_conjugate() == q(-1));
    CHECK(QScalar::imaginary_unit().omega_conjugate() == -QScalar::imaginary_unit());
    CHECK(QScalar::lambda().omega_conjugate() == -QScalar::lambda());
}

TEST_CASE("text rendering")
{
    CHECK(QScalar(0).to_string() == "0");
    CHECK(qnum(2).to_string() == "q + q^-1");
    CHECK(QScalar::lambda().to_latex().find("q^{-1}") != std::string::npos);
    CHECK((QScalar(1) / (q(2) + QScalar(1))).to_string() == "1/(q^2 + 1)");
}
