#include "qweyl/laurent.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>

namespace qweyl {

std::string variable_name(std::size_t var)
{
    if (var == 0)
        return "q";
    return "u" + std::to_string(var);
}

bool exponent_greater(const Exponents& a, const Exponents& b)
{
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

namespace {

Exponents add_exp(const Exponents& a, const Exponents& b)
{
    Exponents r{};
    for (std::size_t i = 0; i < kMaxVars; ++i)
        r[i] = a[i] + b[i];
    return r;
}

Exponents sub_exp(const Exponents& a, const Exponents& b)
{
    Exponents r{};
    for (std::size_t i = 0; i < kMaxVars; ++i)
        r[i] = a[i] - b[i];
    return r;
}

Exponents neg_exp(const Exponents& a)
{
    Exponents r{};
    for (std::size_t i = 0; i < kMaxVars; ++i)
        r[i] = -a[i];
    return r;
}

// Sorts descending and merges equal exponents, dropping zeros.
void canonicalize(std::vector<Laurent::Term>& terms)
{
    std::sort(terms.begin(), terms.end(),
              [](const Laurent::Term& x, const Laurent::Term& y) { return exponent_greater(x.exp, y.exp); });
    std::vector<Laurent::Term> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
        if (!out.empty() && out.back().exp == t.exp)
            out.back().coeff += t.coeff;
        else {
            if (!out.empty() && out.back().coeff.is_zero())
                out.pop_back();
            out.push_back(std::move(t));
        }
    }
    if (!out.empty() && out.back().coeff.is_zero())
        out.pop_back();
    terms = std::move(out);
}

} // namespace

Laurent::Laurent(const GaussianRational& c)
{
    if (!c.is_zero())
        terms_.push_back({Exponents{}, c});
}

Laurent Laurent::monomial(const Exponents& exp, const GaussianRational& c)
{
    Laurent r;
    if (!c.is_zero())
        r.terms_.push_back({exp, c});
    return r;
}

Laurent Laurent::variable_power(std::size_t var, int k, const GaussianRational& c)
{
    if (var >= kMaxVars)
        throw std::out_of_range("Laurent: variable index out of range");
    Exponents e{};
    e[var] = k;
    return monomial(e, c);
}

Laurent Laurent::from_terms(std::vector<Term> terms)
{
    Laurent r;
    canonicalize(terms);
    r.terms_ = std::move(terms);
    return r;
}

bool Laurent::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.front().exp == Exponents{});
}

bool Laurent::is_one() const
{
    return terms_.size() == 1 && terms_.front().exp == Exponents{} && terms_.front().coeff.is_one();
}

bool Laurent::uses_variable(std::size_t var) const
{
    return std::any_of(terms_.begin(), terms_.end(), [var](const Term& t) { return t.exp[var] != 0; });
}

bool Laurent::is_univariate() const
{
    for (std::size_t v = 1; v < kMaxVars; ++v)
        if (uses_variable(v))
            return false;
    return true;
}

bool Laurent::is_polynomial() const
{
    for (const auto& t : terms_)
        for (int e : t.exp)
            if (e < 0)
                return false;
    return true;
}

Exponents Laurent::min_exponents() const
{
    if (terms_.empty())
        return {};
    Exponents m = terms_.front().exp;
    for (const auto& t : terms_)
        for (std::size_t i = 0; i < kMaxVars; ++i)
            m[i] = std::min(m[i], t.exp[i]);
    return m;
}

Exponents Laurent::max_exponents() const
{
    if (terms_.empty())
        return {};
    Exponents m = terms_.front().exp;
    for (const auto& t : terms_)
        for (std::size_t i = 0; i < kMaxVars; ++i)
            m[i] = std::max(m[i], t.exp[i]);
    return m;
}

Laurent Laurent::shifted(const Exponents& by) const
{
    Laurent r = *this;
    for (auto& t : r.terms_)
        t.exp = add_exp(t.exp, by);
    return r;
}

Laurent Laurent::scaled(const GaussianRational& c) const
{
    if (c.is_zero())
        return {};
    Laurent r = *this;
    for (auto& t : r.terms_)
        t.coeff *= c;
    return r;
}

Laurent Laurent::conj_invert() const
{
    std::vector<Term> terms;
    terms.reserve(terms_.size());
    for (const auto& t : terms_)
        terms.push_back({neg_exp(t.exp), t.coeff.conj()});
    std::reverse(terms.begin(), terms.end());
    Laurent r;
    r.terms_ = std::move(terms);
    return r;
}

GaussianRational Laurent::eval_at_one() const
{
    GaussianRational s;
    for (const auto& t : terms_)
        s += t.coeff;
    return s;
}

Laurent Laurent::operator-() const
{
    Laurent r = *this;
    for (auto& t : r.terms_)
        t.coeff = -t.coeff;
    return r;
}

Laurent& Laurent::operator+=(const Laurent& o)
{
    if (o.terms_.empty())
        return *this;
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
        if (b == o.terms_.end() || (a != terms_.end() && exponent_greater(a->exp, b->exp))) {
            out.push_back(std::move(*a++));
        } else if (a == terms_.end() || exponent_greater(b->exp, a->exp)) {
            out.push_back(*b++);
        } else {
            GaussianRational c = a->coeff + b->coeff;
            if (!c.is_zero())
                out.push_back({a->exp, std::move(c)});
            ++a;
            ++b;
        }
    }
    terms_ = std::move(out);
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& o)
{
    return *this += -o;
}

Laurent operator*(const Laurent& a, const Laurent& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    if (a.size() == 1 && a.leading().exp == Exponents{})
        return b.scaled(a.leading().coeff);
    if (b.size() == 1 && b.leading().exp == Exponents{})
        return a.scaled(b.leading().coeff);
    std::vector<Laurent::Term> terms;
    terms.reserve(a.size() * b.size());
    for (const auto& x : a.terms())
        for (const auto& y : b.terms())
            terms.push_back({add_exp(x.exp, y.exp), x.coeff * y.coeff});
    return Laurent::from_terms(std::move(terms));
}

namespace {

std::string power_suffix(std::size_t var, int e, bool latex)
{
    std::string s = variable_name(var);
    if (e == 1)
        return s;
    if (latex)
        return s + "^{" + std::to_string(e) + "}";
    return s + "^" + std::to_string(e);
}

std::string render(const std::vector<Laurent::Term>& terms, bool latex)
{
    if (terms.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms) {
        std::string mono;
        for (std::size_t v = 0; v < kMaxVars; ++v) {
            if (t.exp[v] == 0)
                continue;
            if (!mono.empty())
                mono += latex ? " " : "*";
            mono += power_suffix(v, t.exp[v], latex);
        }
        GaussianRational c = t.coeff;
        bool negative = c.is_real() && sgn(c.re()) < 0;
        if (negative)
            c = -c;
        std::string cs = latex ? c.to_latex() : c.to_string();
        std::string body;
        if (mono.empty())
            body = cs;
        else if (c.is_one())
            body = mono;
        else
            body = cs + (latex ? " " : "*") + mono;
        if (first)
            out += negative ? "-" + body : body;
        else
            out += (negative ? " - " : " + ") + body;
        first = false;
    }
    return out;
}

} // namespace

std::string Laurent::to_string() const
{
    return render(terms_, false);
}

std::string Laurent::to_latex() const
{
    return render(terms_, true);
}

Laurent make_monic(const Laurent& p)
{
    if (p.is_zero() || p.leading().coeff.is_one())
        return p;
    return p.scaled(p.leading().coeff.inverse());
}

// ---------------------------------------------------------------------------
// Polynomial algorithms.

Laurent divide_exact(const Laurent& num, const Laurent& den)
{
    if (den.is_zero())
        throw std::domain_error("divide_exact: division by zero");
    if (den.size() == 1) {
        const auto& lt = den.leading();
        return num.shifted(neg_exp(lt.exp)).scaled(lt.coeff.inverse());
    }
    const auto& lt = den.leading();
    GaussianRational lc_inv = lt.coeff.inverse();
    Laurent rem = num;
    std::vector<Laurent::Term> quot;
    const Exponents den_min = den.min_exponents();
    const Exponents num_min = num.min_exponents();
    while (!rem.is_zero()) {
        const auto& r = rem.leading();
        Exponents e = sub_exp(r.exp, lt.exp);
        // Any quotient term must keep e + den_min >= num_min componentwise.
        for (std::size_t i = 0; i < kMaxVars; ++i)
            if (e[i] + den_min[i] < num_min[i])
                throw std::logic_error("divide_exact: divisor does not divide dividend");
        Laurent::Term qt{e, r.coeff * lc_inv};
        rem -= den.shifted(e).scaled(qt.coeff);
        quot.push_back(std::move(qt));
    }
    return Laurent::from_terms(std::move(quot));
}

namespace {

using Dense = std::vector<GaussianRational>;

Dense to_dense_q(const Laurent& p)
{
    int deg = p.leading().exp[0];
    Dense d(static_cast<std::size_t>(deg) + 1);
    for (const auto& t : p.terms())
        d[static_cast<std::size_t>(t.exp[0])] = t.coeff;
    return d;
}

Laurent from_dense_q(const Dense& d)
{
    std::vector<Laurent::Term> terms;
    for (std::size_t i = d.size(); i-- > 0;) {
        if (d[i].is_zero())
            continue;
        Exponents e{};
        e[0] = static_cast<int>(i);
        terms.push_back({e, d[i]});
    }
    return Laurent::from_terms(std::move(terms));
}

void trim(Dense& d)
{
    while (!d.empty() && d.back().is_zero())
        d.pop_back();
}

void make_monic(Dense& d)
{
    if (d.empty() || d.back().is_one())
        return;
    GaussianRational inv = d.back().inverse();
    for (auto& c : d)
        c *= inv;
}

// a := a mod b, b monic.
void reduce_mod(Dense& a, const Dense& b)
{
    const std::size_t nb = b.size();
    while (a.size() >= nb) {
        GaussianRational lead = a.back();
        const std::size_t off = a.size() - nb;
        for (std::size_t i = 0; i + 1 < nb; ++i)
            if (!b[i].is_zero())
                a[off + i] -= lead * b[i];
        a.pop_back();
        trim(a);
    }
}

Laurent univariate_gcd(const Laurent& a, const Laurent& b)
{
    Dense x = to_dense_q(a);
    Dense y = to_dense_q(b);
    if (x.size() < y.size())
        std::swap(x, y);
    make_monic(y);
    while (!y.empty()) {
        if (y.size() == 1)
            return Laurent(1);
        reduce_mod(x, y);
        std::swap(x, y);
        make_monic(y);
    }
    make_monic(x);
    return from_dense_q(x);
}

// Highest-index variable present in either polynomial, or -1.
int main_variable(const Laurent& a, const Laurent& b)
{
    for (int v = static_cast<int>(kMaxVars) - 1; v >= 0; --v)
        if (a.uses_variable(static_cast<std::size_t>(v)) || b.uses_variable(static_cast<std::size_t>(v)))
            return v;
    return -1;
}

// Coefficients of p viewed as a polynomial in `var`, indexed by degree.
std::vector<Laurent> coefficients_in(const Laurent& p, std::size_t var)
{
    std::vector<Laurent> out(static_cast<std::size_t>(p.max_exponents()[var]) + 1);
    std::vector<std::vector<Laurent::Term>> buckets(out.size());
    for (const auto& t : p.terms()) {
        Laurent::Term c = t;
        c.exp[var] = 0;
        buckets[static_cast<std::size_t>(t.exp[var])].push_back(std::move(c));
    }
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = Laurent::from_terms(std::move(buckets[i]));
    return out;
}

Laurent from_coefficients(const std::vector<Laurent>& cs, std::size_t var)
{
    std::vector<Laurent::Term> terms;
    for (std::size_t i = 0; i < cs.size(); ++i)
        for (const auto& t : cs[i].terms()) {
            Laurent::Term c = t;
            c.exp[var] = static_cast<int>(i);
            terms.push_back(std::move(c));
        }
    return Laurent::from_terms(std::move(terms));
}

Laurent gcd_no_monomial(const Laurent& a, const Laurent& b);

Laurent content_in(const Laurent& p, std::size_t var)
{
    Laurent g;
    for (const auto& c : coefficients_in(p, var)) {
        if (c.is_zero())
            continue;
        g = g.is_zero() ? make_monic(c) : poly_gcd(g, c);
        if (g.is_one())
            break;
    }
    return g;
}

// Pseudo-remainder of a by b in `var`, both given as coefficient vectors.
std::vector<Laurent> pseudo_remainder(std::vector<Laurent> a, const std::vector<Laurent>& b)
{
    const Laurent& lcb = b.back();
    while (!a.empty() && a.size() >= b.size()) {
        Laurent lead = a.back();
        const std::size_t off = a.size() - b.size();
        for (auto& c : a)
            c *= lcb;
        for (std::size_t i = 0; i < b.size(); ++i)
            a[off + i] -= lead * b[i];
        while (!a.empty() && a.back().is_zero())
            a.pop_back();
    }
    return a;
}

// Image of p under v -> point[v] for every v != keep, written as a polynomial in slot 0.
Laurent image_along(const Laurent& p, std::size_t keep, const std::array<long, kMaxVars>& point)
{
    std::vector<Laurent::Term> terms;
    terms.reserve(p.size());
    for (const auto& t : p.terms()) {
        mpz_class scale = 1;
        for (std::size_t v = 0; v < kMaxVars; ++v)
            if (v != keep && t.exp[v] != 0) {
                mpz_class f;
                mpz_ui_pow_ui(f.get_mpz_t(), static_cast<unsigned long>(point[v]), static_cast<unsigned long>(t.exp[v]));
                scale *= f;
            }
        Exponents e{};
        e[0] = t.exp[keep];
        terms.push_back({e, t.coeff * GaussianRational(mpq_class(scale))});
    }
    return Laurent::from_terms(std::move(terms));
}

// Coprimality shortcut. With every variable but one specialised at a point that keeps both
// leading coefficients alive, a unit image gcd means the true gcd carries no factor in the kept
// variable, so it is the gcd of the two contents. Returns nullopt when the shortcut is inconclusive.
std::optional<Laurent> gcd_by_specialisation(const Laurent& a, const Laurent& b)
{
    std::size_t keep = kMaxVars;
    for (std::size_t v = 0; v < kMaxVars && keep == kMaxVars; ++v)
        if (a.uses_variable(v) && b.uses_variable(v))
            keep = v;
    if (keep == kMaxVars)
        return std::nullopt;
    const Laurent lca = coefficients_in(a, keep).back();
    const Laurent lcb = coefficients_in(b, keep).back();
    static constexpr long kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (int attempt = 0; attempt < 3; ++attempt) {
        std::array<long, kMaxVars> point{};
        for (std::size_t v = 0; v < kMaxVars; ++v)
            point[v] = kPrimes[(static_cast<std::size_t>(attempt) * kMaxVars + v) % std::size(kPrimes)];
        if (image_along(lca, keep, point).is_zero() || image_along(lcb, keep, point).is_zero())
            continue;
        if (!univariate_gcd(image_along(a, keep, point), image_along(b, keep, point)).is_one())
            return std::nullopt;
        return poly_gcd(content_in(a, keep), content_in(b, keep));
    }
    return std::nullopt;
}

Laurent gcd_no_monomial(const Laurent& a, const Laurent& b)
{
    int mv = main_variable(a, b);
    if (mv < 0)
        return Laurent(1);
    if (mv == 0)
        return univariate_gcd(a, b);
    if (auto quick = gcd_by_specialisation(a, b))
        return *quick;
    const auto var = static_cast<std::size_t>(mv);
    if (!a.uses_variable(var))
        return poly_gcd(a, content_in(b, var));
    if (!b.uses_variable(var))
        return poly_gcd(b, content_in(a, var));

    Laurent ca = content_in(a, var);
    Laurent cb = content_in(b, var);
    Laurent c = poly_gcd(ca, cb);
    std::vector<Laurent> x = coefficients_in(divide_exact(a, ca), var);
    std::vector<Laurent> y = coefficients_in(divide_exact(b, cb), var);
    if (x.size() < y.size())
        std::swap(x, y);
    while (true) {
        std::vector<Laurent> r = pseudo_remainder(x, y);
        if (r.empty())
            break;
        if (r.size() == 1)
            return make_monic(c);
        Laurent rp = from_coefficients(r, var);
        rp = divide_exact(rp, content_in(rp, var));
        x = std::move(y);
        y = coefficients_in(rp, var);
    }
    Laurent g = from_coefficients(y, var);
    return make_monic(g * c);
}

} // namespace

Laurent poly_gcd(const Laurent& a, const Laurent& b)
{
    if (a.is_zero())
        return make_monic(b);
    if (b.is_zero())
        return make_monic(a);
    Exponents ma = a.min_exponents();
    Exponents mb = b.min_exponents();
    Exponents m{};
    for (std::size_t i = 0; i < kMaxVars; ++i)
        m[i] = std::min(ma[i], mb[i]);
    Laurent g = gcd_no_monomial(a.shifted(neg_exp(ma)), b.shifted(neg_exp(mb)));
    return g.shifted(m);
}

} // namespace qweyl
