#include "qweyl/gaussian_rational.hpp"

#include <stdexcept>

namespace qweyl {

GaussianRational::GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im))
{
    re_.canonicalize();
    im_.canonicalize();
}

GaussianRational GaussianRational::from_fraction(long num, long den)
{
    if (den == 0)
        throw std::domain_error("GaussianRational: zero denominator");
    mpq_class r(num, den);
    r.canonicalize();
    return {r, 0};
}

GaussianRational GaussianRational::inverse() const
{
    if (is_zero())
        throw std::domain_error("GaussianRational: inverse of zero");
    mpq_class norm = re_ * re_ + im_ * im_;
    return {re_ / norm, -im_ / norm};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o)
{
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o)
{
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o)
{
    if (is_real() && o.is_real()) {
        re_ *= o.re_;
        return *this;
    }
    mpq_class re = re_ * o.re_ - im_ * o.im_;
    mpq_class im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

std::string GaussianRational::to_string() const
{
    if (is_real())
        return re_.get_str();
    std::string im_part;
    if (im_ == 1)
        im_part = "i";
    else if (im_ == -1)
        im_part = "-i";
    else
        im_part = im_.get_str() + "i";
    if (sgn(re_) == 0)
        return im_part;
    std::string out = "(" + re_.get_str();
    if (sgn(im_) > 0)
        out += "+";
    return out + im_part + ")";
}

namespace {

std::string latex_rational(const mpq_class& r)
{
    if (r.get_den() == 1)
        return r.get_num().get_str();
    std::string sign = sgn(r) < 0 ? "-" : "";
    mpz_class num = abs(r.get_num());
    return sign + "\\frac{" + num.get_str() + "}{" + r.get_den().get_str() + "}";
}

} // namespace

std::string GaussianRational::to_latex() const
{
    if (is_real())
        return latex_rational(re_);
    std::string im_part;
    if (im_ == 1)
        im_part = "i";
    else if (im_ == -1)
        im_part = "-i";
    else
        im_part = latex_rational(im_) + "i";
    if (sgn(re_) == 0)
        return im_part;
    std::string out = "(" + latex_rational(re_);
    if (sgn(im_) > 0)
        out += "+";
    return out + im_part + ")";
}

} // namespace qweyl
