#include "qweyl/weylsol.hpp"

#include "qweyl/qcombinatorics.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace qweyl {

std::string side_name(Side s)
{
    return s == Side::Plus ? "plus" : "minus";
}

std::string order_name(FactorOrder o)
{
    return o == FactorOrder::Ascending ? "ascending" : "descending";
}

std::string WeylSolSpec::to_string() const
{
    std::string g;
    for (const auto& x : gammas)
        g += (g.empty() ? "" : ", ") + x.to_string();
    return side_name(side) + " s=" + std::to_string(s) + " shift=" + shift.to_string() +
           " poly=" + free_poly.to_string(side == Side::Plus ? 'a' : 'b') + " gammas=[" + g + "]";
}

PhasePoly weyl_phase(const WeylSolSpec& spec)
{
    return spec.side == Side::Plus ? PhasePoly::plus(spec.free_poly, spec.shift)
                                   : PhasePoly::minus(spec.shift, spec.free_poly);
}

namespace {

RepKey momentum_key(Letter l, int z, int zbar)
{
    RepKey k;
    k.k.exp[static_cast<std::size_t>(l)] = 1;
    k.z = {z, zbar};
    return k;
}

// first - weight * second * z (or zb).
RepElement binomial(Letter first, Letter second, const QScalar& weight, bool on_zbar)
{
    RepElement f = RepElement::term(1, momentum_key(first, 0, 0));
    f.add_term(momentum_key(second, on_zbar ? 0 : 1, on_zbar ? 1 : 0), -weight);
    return f;
}

} // namespace

std::vector<RepElement> prefactor_factors(const WeylSolSpec& spec, int m)
{
    if (m < 0 || m > 4)
        throw std::invalid_argument("prefactor_factors: m must be in 0..4");
    std::vector<RepElement> out;
    if (spec.side == Side::Plus) {
        const ExponentParam base = spec.shift.plus(spec.s + 4);
        for (int i = 0; i <= 3 - m; ++i)
            out.push_back(binomial(Letter::Plus, Letter::VBar, q_power(base.plus(i), 1), false));
        for (int j = 4 - m; j <= 3; ++j)
            out.push_back(binomial(Letter::V, Letter::Minus, q_power(base.plus(j), 1), false));
    } else {
        // q^{i - D}
        for (int i = -1; i <= 2 - m; ++i)
            out.push_back(binomial(Letter::Plus, Letter::V, QScalar::q_pow(i) * q_power(spec.shift, -1), true));
        for (int j = 3 - m; j <= 2; ++j)
            out.push_back(binomial(Letter::VBar, Letter::Minus, QScalar::q_pow(j) * q_power(spec.shift, -1), true));
    }
    return out;
}

RepElement prefactor(const WeylSolSpec& spec, int m, FactorOrder order)
{
    std::vector<RepElement> factors = prefactor_factors(spec, m);
    if (order == FactorOrder::Descending)
        std::reverse(factors.begin(), factors.end());
    RepElement acc = RepElement::one();
    for (const auto& f : factors)
        acc = multiply(acc, f);
    return acc;
}

RepElement chat(const WeylSolSpec& spec, FactorOrder order)
{
    const RepElement wave = hhat({spec.s, weyl_phase(spec)});
    RepElement left;
    for (int m = 0; m <= 4; ++m) {
        const QScalar& g = spec.gammas[static_cast<std::size_t>(m)];
        if (!g.is_zero())
            left += prefactor(spec, m, order).scaled(g);
    }
    return multiply(left, wave);
}

VerificationReport verify_weyl(const WeylSolSpec& spec, const VerifyOptions& opts)
{
    const auto start = std::chrono::steady_clock::now();
    const Sign sign = spec.side == Side::Plus ? Sign::Plus : Sign::Minus;
    const OperatorExpr op = build_qI_pm(sign, 4, opts.middle_scale);
    RepElement image = apply(op, chat(spec, opts.order), opts.jobs);
    VerificationReport report;
    report.residual = opts.cone ? cone_project(image) : std::move(image);
    report.elapsed_ms = static_cast<long>(
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count());
    return report;
}

std::vector<RepElement> assemble_series(Side side, const std::array<QScalar, 5>& gammas, const ExponentParam& shift,
                                        const IntPoly& free_poly, int s_max)
{
    if (s_max < 0)
        throw std::invalid_argument("assemble_series: s_max must be nonnegative");
    std::vector<RepElement> out;
    for (int s = 0; s <= s_max; ++s) {
        WeylSolSpec spec{side, s, gammas, side == Side::Plus ? shift.plus(-s - 4) : shift, free_poly};
        out.push_back(chat(spec).scaled(qfactorial(s).inverse()));
    }
    return out;
}

} // namespace qweyl
