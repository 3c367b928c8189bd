#include "qweyl/qscalar.hpp"

#include <utility>

namespace qweyl {

namespace {

Exponents negated(const Exponents& e)
{
    Exponents r{};
    for (std::size_t i = 0; i < kMaxVars; ++i)
        r[i] = -e[i];
    return r;
}

} // namespace

QScalar::QScalar(Laurent num, Laurent den) : num_(std::move(num)), den_(std::move(den))
{
    if (den_.is_zero())
        throw std::domain_error("QScalar: zero denominator");
    normalize();
}

QScalar QScalar::unit(std::size_t index, int power)
{
    if (index == 0 || index >= kMaxVars)
        throw std::out_of_range("QScalar::unit: index must be in 1.." + std::to_string(kMaxVars - 1));
    return Laurent::variable_power(index, power);
}

QScalar QScalar::lambda()
{
    return Laurent::q_power(1) - Laurent::q_power(-1);
}

void QScalar::normalize()
{
    if (num_.is_zero()) {
        den_ = Laurent(1);
        return;
    }
    // Strip monomial factors from the denominator into the numerator.
    const Exponents dmin = den_.min_exponents();
    if (dmin != Exponents{}) {
        den_ = den_.shifted(negated(dmin));
        num_ = num_.shifted(negated(dmin));
    }
    if (den_.is_constant()) {
        if (!den_.is_one()) {
            num_ = num_.scaled(den_.leading().coeff.inverse());
            den_ = Laurent(1);
        }
        return;
    }
    const Exponents nmin = num_.min_exponents();
    Laurent npoly = num_.shifted(negated(nmin));
    Laurent g = poly_gcd(npoly, den_);
    if (!g.is_one()) {
        npoly = divide_exact(npoly, g);
        den_ = divide_exact(den_, g);
    }
    GaussianRational lc = den_.leading().coeff;
    if (!lc.is_one()) {
        GaussianRational inv = lc.inverse();
        npoly = npoly.scaled(inv);
        den_ = den_.scaled(inv);
    }
    num_ = npoly.shifted(nmin);
}

QScalar QScalar::inverse() const
{
    if (is_zero())
        throw std::domain_error("QScalar: inverse of zero");
    return QScalar(den_, num_);
}

QScalar QScalar::pow(int k) const
{
    if (k < 0)
        return inverse().pow(-k);
    QScalar result(1);
    QScalar base = *this;
    while (k > 0) {
        if (k & 1)
            result *= base;
        k >>= 1;
        if (k > 0)
            base *= base;
    }
    return result;
}

QScalar QScalar::omega_conjugate() const
{
    return QScalar(num_.conj_invert(), den_.conj_invert());
}

QScalar QScalar::operator-() const
{
    return QScalar(Raw{}, -num_, den_);
}

QScalar& QScalar::operator+=(const QScalar& o)
{
    if (o.is_zero())
        return *this;
    if (is_zero())
        return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
        if (!den_.is_one())
            normalize();
        else if (num_.is_zero())
            den_ = Laurent(1);
        return *this;
    }
    if (den_.is_one()) {
        num_ = num_ * o.den_ + o.num_;
        den_ = o.den_;
        normalize();
        return *this;
    }
    if (o.den_.is_one()) {
        num_ += o.num_ * den_;
        normalize();
        return *this;
    }
    Laurent g = poly_gcd(den_, o.den_);
    Laurent a = divide_exact(o.den_, g);
    Laurent b = divide_exact(den_, g);
    num_ = num_ * a + o.num_ * b;
    den_ = den_ * a;
    normalize();
    return *this;
}

QScalar& QScalar::operator-=(const QScalar& o)
{
    return *this += -o;
}

QScalar& QScalar::operator*=(const QScalar& o)
{
    if (is_zero() || o.is_zero()) {
        *this = QScalar();
        return *this;
    }
    if (den_.is_one() && o.den_.is_one()) {
        num_ = num_ * o.num_;
        return *this;
    }
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

QScalar QScalar::times(const Laurent& l) const
{
    if (l.is_zero() || is_zero())
        return {};
    if (den_.is_one())
        return QScalar(Raw{}, num_ * l, den_);
    return QScalar(num_ * l, den_);
}

namespace {

// Rescales num/den for display so that the denominator has coprime integer coefficients.
std::pair<Laurent, Laurent> display_form(const Laurent& num, const Laurent& den)
{
    mpz_class lcm = 1, gcd = 0;
    for (const auto& t : den.terms()) {
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), t.coeff.re().get_den_mpz_t());
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), t.coeff.im().get_den_mpz_t());
    }
    for (const auto& t : den.terms()) {
        const mpq_class re = t.coeff.re() * lcm, im = t.coeff.im() * lcm;
        mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), re.get_num_mpz_t());
        mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), im.get_num_mpz_t());
    }
    const GaussianRational scale(mpq_class(lcm, gcd == 0 ? mpz_class(1) : gcd));
    return {num.scaled(scale), den.scaled(scale)};
}

} // namespace

std::string QScalar::to_string() const
{
    if (den_.is_one())
        return num_.to_string();
    const auto [n, d] = display_form(num_, den_);
    std::string ns = n.size() > 1 ? "(" + n.to_string() + ")" : n.to_string();
    return ns + "/(" + d.to_string() + ")";
}

std::string QScalar::to_latex() const
{
    if (den_.is_one())
        return num_.to_latex();
    const auto [n, d] = display_form(num_, den_);
    return "\\frac{" + n.to_latex() + "}{" + d.to_latex() + "}";
}

GaussianRational eval_at_q1(const QScalar& x)
{
    GaussianRational d = x.denominator().eval_at_one();
    if (d.is_zero())
        throw PoleError("eval_at_q1: denominator " + x.denominator().to_string() + " vanishes at q = 1");
    return x.numerator().eval_at_one() / d;
}

} // namespace qweyl
