#include "qweyl/planewave.hpp"

#include "qweyl/qcombinatorics.hpp"

#include <cctype>
#include <stdexcept>

namespace qweyl {

std::string ExponentParam::to_string() const
{
    if (!is_symbolic())
        return std::to_string(value);
    std::string base = "U" + std::to_string(unit);
    if (value == 0)
        return base;
    return base + (value < 0 ? " - " : " + ") + std::to_string(value < 0 ? -value : value);
}

QScalar q_power(const ExponentParam& param, long multiplier)
{
    if (param.is_symbolic())
        return QScalar::unit(static_cast<std::size_t>(param.unit), static_cast<int>(multiplier)) *
               QScalar::q_pow(static_cast<int>(param.value * multiplier));
    return QScalar::q_pow(static_cast<int>(param.value * multiplier));
}

long IntPoly::operator()(long x) const
{
    long acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

int IntPoly::degree() const
{
    for (int d = static_cast<int>(coeffs.size()) - 1; d >= 0; --d)
        if (coeffs[static_cast<std::size_t>(d)] != 0)
            return d;
    return -1;
}

std::string IntPoly::to_string(char var) const
{
    std::string out;
    for (int d = degree(); d >= 0; --d) {
        long c = coeffs[static_cast<std::size_t>(d)];
        if (c == 0)
            continue;
        long mag = c < 0 ? -c : c;
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        if (mag != 1 || d == 0)
            out += std::to_string(mag);
        if (d >= 1)
            out += var;
        if (d >= 2)
            out += "^" + std::to_string(d);
    }
    return out.empty() ? "0" : out;
}

IntPoly parse_int_poly(std::string_view text)
{
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s += c;
    if (s.empty())
        throw ParseError("empty polynomial");
    IntPoly p;
    char var = 0;
    std::size_t i = 0;
    auto read_int = [&](long& out) {
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
            ++i;
        if (i == start)
            return false;
        out = std::stol(s.substr(start, i - start));
        return true;
    };
    while (i < s.size()) {
        long sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (i != 0) {
            throw ParseError("expected '+' or '-' in polynomial '" + std::string(text) + "'");
        }
        long coeff = 1;
        bool have_coeff = read_int(coeff);
        int deg = 0;
        if (i < s.size() && s[i] == '*') {
            if (!have_coeff)
                throw ParseError("dangling '*' in polynomial '" + std::string(text) + "'");
            ++i;
        }
        if (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) {
            if (var != 0 && s[i] != var)
                throw ParseError("polynomial must use a single variable: '" + std::string(text) + "'");
            var = s[i++];
            deg = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                long e = 0;
                if (!read_int(e))
                    throw ParseError("missing exponent in polynomial '" + std::string(text) + "'");
                deg = static_cast<int>(e);
            }
        } else if (!have_coeff) {
            throw ParseError("malformed term in polynomial '" + std::string(text) + "'");
        }
        if (p.coeffs.size() <= static_cast<std::size_t>(deg))
            p.coeffs.resize(static_cast<std::size_t>(deg) + 1, 0);
        p.coeffs[static_cast<std::size_t>(deg)] += sign * coeff;
    }
    while (!p.coeffs.empty() && p.coeffs.back() == 0)
        p.coeffs.pop_back();
    return p;
}

namespace {

// "c * var" appended to a polynomial rendering with a correctly signed join.
std::string with_linear_term(const std::string& poly, const ExponentParam& c, char var, bool linear_first)
{
    std::string lin;
    bool negative = false;
    if (c.is_symbolic()) {
        lin = "(" + c.to_string() + ")" + var;
    } else if (c.value == 0) {
        return poly;
    } else {
        negative = c.value < 0;
        const long mag = negative ? -c.value : c.value;
        lin = (mag == 1 ? "" : std::to_string(mag)) + var;
    }
    if (poly == "0")
        return (negative ? "-" : "") + lin;
    if (linear_first) {
        const bool poly_negative = poly.front() == '-';
        return (negative ? "-" : "") + lin + (poly_negative ? " - " + poly.substr(1) : " + " + poly);
    }
    return poly + (negative ? " - " : " + ") + lin;
}

} // namespace

std::string PhasePoly::to_string() const
{
    switch (kind) {
    case Kind::Zero:
        return "0";
    case Kind::Plus:
        return with_linear_term(poly.to_string('a'), linear, 'b', false);
    case Kind::Minus:
        return with_linear_term(poly.to_string('b'), linear, 'a', true);
    case Kind::General:
        return "table(" + std::to_string(table.size()) + ")";
    }
    return "?";
}

QScalar phase_factor(const PhasePoly& phase, int a, int b)
{
    switch (phase.kind) {
    case PhasePoly::Kind::Zero:
        return 1;
    case PhasePoly::Kind::Plus:
        return QScalar::q_pow(static_cast<int>(phase.poly(a))) * q_power(phase.linear, b);
    case PhasePoly::Kind::Minus:
        return q_power(phase.linear, a) * QScalar::q_pow(static_cast<int>(phase.poly(b)));
    case PhasePoly::Kind::General: {
        auto it = phase.table.find({a, b});
        if (it == phase.table.end())
            throw std::out_of_range("phase table has no entry for (" + std::to_string(a) + ", " +
                                    std::to_string(b) + ")");
        return QScalar::q_pow(static_cast<int>(it->second));
    }
    }
    return 1;
}

QScalar beta_inverse(int s)
{
    if (s < 0)
        throw std::invalid_argument("beta_inverse: s must be nonnegative");
    QScalar sum;
    for (int p = 0; p <= s; ++p)
        sum += QScalar::q_pow((s - p) * (p - 1) + p) / (qfactorial(p) * qfactorial(s - p));
    return sum;
}

QScalar beta(int s)
{
    return beta_inverse(s).inverse();
}

RepElement hhat(const PlaneWaveSpec& spec)
{
    const int s = spec.s;
    if (s < 0)
        throw std::invalid_argument("hhat: s must be nonnegative");
    const QScalar b_s = beta(s);
    RepElement out;
    for (int a = 0; a <= s; ++a) {
        for (int b = 0; b <= s; ++b) {
            for (int n = 0; n <= std::min(a, b); ++n) {
                const int last = s - a - b + n;
                if (last < 0)
                    continue;
                QScalar weight = inv_gamma_q(a - n + 1) * inv_gamma_q(b - n + 1) * inv_gamma_q(last + 1);
                if (weight.is_zero())
                    continue;
                const int exponent = n * (s - 2 * a - 2 * b + 2 * n) + a * (s - a - 1) + b * (-s + a + b + 1);
                const long sign = (s - a - b) % 2 == 0 ? 1 : -1;
                weight *= b_s * QScalar::q_pow(exponent) * phase_factor(spec.phase, a, b) / qfactorial(n);
                RepKey key;
                key.k.exp = {last, b - n, a - n, n};
                key.x = {n, a - n, b - n, last};
                out.add_term(key, weight * QScalar(sign));
            }
        }
    }
    return out;
}

std::vector<RepElement> exp_q(const std::function<PhasePoly(int)>& phase_for, int s_max)
{
    if (s_max < 0)
        throw std::invalid_argument("exp_q: s_max must be nonnegative");
    std::vector<RepElement> out;
    for (int s = 0; s <= s_max; ++s)
        out.push_back(hhat({s, phase_for(s)}).scaled(qfactorial(s).inverse()));
    return out;
}

RepElement dalembert_residual(const PlaneWaveSpec& spec, bool cone, unsigned jobs)
{
    static const OperatorExpr op = build_qdal(Basis::Hat);
    RepElement image = apply(op, hhat(spec), jobs);
    return cone ? cone_project(image) : image;
}

} // namespace qweyl
