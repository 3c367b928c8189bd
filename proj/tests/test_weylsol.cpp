#include "qweyl/qcombinatorics.hpp"
#include "qweyl/weylsol.hpp"
#include "support/random_values.hpp"

#include <doctest.h>

#include <bit>

using namespace qweyl;
using qweyl::testing::Sampler;

namespace {

std::array<QScalar, 5> unit_gamma(int m)
{
    std::array<QScalar, 5> g{};
    g[static_cast<std::size_t>(m)] = 1;
    return g;
}

std::array<QScalar, 5> random_gammas(Sampler& rng)
{
    std::array<QScalar, 5> g{};
    for (auto& x : g)
        x = QScalar(rng.gaussian());
    return g;
}

// prod_i (lead - c_i * other * w) over the 2^4 choices of letters. Each out-of-order pair of the two
// letters costs `swap_weight` when the word is brought to normal order.
RepElement four_factor_expansion(Letter lead, Letter other, const std::array<QScalar, 4>& c, const QScalar& swap_weight,
                                 bool on_zbar)
{
    RepElement out;
    for (unsigned mask = 0; mask < 16; ++mask) {
        QScalar coeff = 1;
        std::array<Letter, 4> word{};
        for (unsigned i = 0; i < 4; ++i) {
            const bool picked = (mask & (1u << i)) != 0;
            word[i] = picked ? other : lead;
            if (picked)
                coeff *= -c[i];
        }
        int inversions = 0;
        for (unsigned i = 0; i < 4; ++i)
            for (unsigned j = i + 1; j < 4; ++j)
                if (word[i] > word[j])
                    ++inversions;
        const int chosen = std::popcount(mask);
        RepKey k;
        k.k.exp[static_cast<std::size_t>(lead)] = 4 - chosen;
        k.k.exp[static_cast<std::size_t>(other)] = chosen;
        k.z = on_zbar ? std::array<int, 2>{0, chosen} : std::array<int, 2>{chosen, 0};
        out.add_term(k, coeff * swap_weight.pow(inversions));
    }
    return out;
}

WeylSolSpec plus_spec(int s, std::array<QScalar, 5> g, long b, IntPoly r = {})
{
    return {Side::Plus, s, g, ExponentParam::concrete(b), std::move(r)};
}

WeylSolSpec minus_spec(int s, std::array<QScalar, 5> g, long d, IntPoly q = {})
{
    return {Side::Minus, s, g, ExponentParam::concrete(d), std::move(q)};
}

} // namespace

TEST_CASE("plus prefactor at degree zero against a direct expansion")
{
    for (long b : {-7L, -4L, 0L, 2L}) {
        std::array<QScalar, 4> c;
        for (int i = 0; i < 4; ++i)
            c[static_cast<std::size_t>(i)] = QScalar::q_pow(static_cast<int>(i + b + 4));
        // kvb k+ = q^-1 k+ kvb.
        const RepElement expected = four_factor_expansion(Letter::Plus, Letter::VBar, c, QScalar::q_pow(-1), false);
        CHECK(chat(plus_spec(0, unit_gamma(0), b)) == expected);
    }
}

TEST_CASE("minus prefactor at degree zero against a direct expansion")
{
    for (long d : {-3L, 0L, 5L}) {
        std::array<QScalar, 4> c;
        for (int j = -1; j <= 2; ++j)
            c[static_cast<std::size_t>(j + 1)] = QScalar::q_pow(static_cast<int>(j - d));
        // kvb k- = q k- kvb.
        CHECK(chat(minus_spec(0, unit_gamma(4), d)) == four_factor_expansion(Letter::VBar, Letter::Minus, c, QScalar::q(), true));
    }
}

TEST_CASE("empty products")
{
    const WeylSolSpec plus = plus_spec(1, unit_gamma(4), -3);
    CHECK(prefactor_factors(plus, 4).size() == 4);
    CHECK(prefactor_factors(plus, 0).size() == 4);
    for (int m = 0; m <= 4; ++m)
        CHECK(prefactor_factors(plus, m).size() == 4);
    const WeylSolSpec minus = minus_spec(0, unit_gamma(4), 0);
    // The first minus product runs over i = -1..-2 at m = 4.
    const std::vector<RepElement> f = prefactor_factors(minus, 4);
    REQUIRE(f.size() == 4);
    for (const auto& factor : f)
        CHECK(factor.coefficient([] {
            RepKey k;
            k.k.exp[static_cast<std::size_t>(Letter::VBar)] = 1;
            return k;
        }()) == QScalar(1));
    CHECK_THROWS_AS(prefactor_factors(minus, 5), std::invalid_argument);
}

TEST_CASE("z-degree bound")
{
    Sampler rng(201);
    for (int trial = 0; trial < 6; ++trial) {
        const int s = static_cast<int>(rng.integer(0, 2));
        const WeylSolSpec p = plus_spec(s, random_gammas(rng), rng.integer(-8, 2), IntPoly{{rng.integer(-3, 3), rng.integer(-3, 3)}});
        const RepElement plus_terms = chat(p);
        for (const auto& [k, c] : plus_terms.terms()) {
            CHECK(k.z[0] <= 4);
            CHECK(k.z[1] == 0);
        }
        const WeylSolSpec m = minus_spec(s, random_gammas(rng), rng.integer(-5, 5), IntPoly{{rng.integer(-3, 3)}});
        const RepElement minus_terms = chat(m);
        for (const auto& [k, c] : minus_terms.terms()) {
            CHECK(k.z[1] <= 4);
            CHECK(k.z[0] == 0);
        }
    }
}

TEST_CASE("prefactors do not depend on the free polynomial")
{
    Sampler rng(203);
    const auto g = random_gammas(rng);
    for (int m = 0; m <= 4; ++m) {
        const RepElement p1 = prefactor(plus_spec(2, g, -5, IntPoly{{1, 2, -3}}), m);
        const RepElement p2 = prefactor(plus_spec(2, g, -5, IntPoly{{0, -1}}), m);
        const RepElement p3 = prefactor(plus_spec(2, g, -5, IntPoly{}), m);
        CHECK(p1 == p2);
        CHECK(p1 == p3);
        const RepElement n1 = prefactor(minus_spec(1, g, 2, IntPoly{{3}}), m);
        const RepElement n2 = prefactor(minus_spec(1, g, 2, IntPoly{{-2, 0, 1}}), m);
        CHECK(n1 == n2);
    }
}

TEST_CASE("linearity in the gamma coefficients")
{
    Sampler rng(205);
    const auto g = random_gammas(rng);
    const WeylSolSpec mixed = plus_spec(1, g, -6, IntPoly{{2, -1}});
    RepElement sum;
    for (int m = 0; m <= 4; ++m) {
        WeylSolSpec basis = mixed;
        basis.gammas = unit_gamma(m);
        sum += chat(basis).scaled(g[static_cast<std::size_t>(m)]);
        CHECK(verify_weyl(basis).pass());
    }
    CHECK(chat(mixed) == sum);
    CHECK(verify_weyl(mixed).pass());
}

TEST_CASE("weyl verification and its controls")
{
    Sampler rng(207);
    for (int s = 0; s <= 1; ++s) {
        CHECK(verify_weyl(plus_spec(s, random_gammas(rng), rng.integer(-8, 2), IntPoly{{1, 0, -2}})).pass());
        CHECK(verify_weyl(minus_spec(s, random_gammas(rng), rng.integer(-5, 5), IntPoly{{0, 3}})).pass());
    }
    const WeylSolSpec two = plus_spec(2, random_gammas(rng), -4, IntPoly{{0, 1}});
    CHECK(verify_weyl(two).pass());

    VerifyOptions off;
    off.cone = false;
    CHECK_FALSE(verify_weyl(two, off).pass());

    VerifyOptions descending;
    descending.order = FactorOrder::Descending;
    CHECK_FALSE(verify_weyl(two, descending).pass());

    VerifyOptions mutated;
    mutated.middle_scale = 2;
    CHECK_FALSE(verify_weyl(two, mutated).pass());

    VerifyOptions threaded;
    threaded.jobs = 3;
    CHECK(verify_weyl(two, threaded).residual.empty());
}

TEST_CASE("series assembly")
{
    Sampler rng(209);
    const auto g = random_gammas(rng);
    const std::vector<RepElement> plus = assemble_series(Side::Plus, g, ExponentParam::concrete(0), IntPoly{}, 2);
    REQUIRE(plus.size() == 3);
    for (int s = 0; s <= 2; ++s) {
        const WeylSolSpec spec = plus_spec(s, g, -s - 4);
        CHECK(plus[static_cast<std::size_t>(s)] == chat(spec).scaled(qfactorial(s).inverse()));
        // With B = B' - s - 4 and B' = 0 the factor weights are q^i, whatever s is.
        const std::vector<RepElement> f = prefactor_factors(spec, 0);
        for (int i = 0; i < 4; ++i) {
            RepKey k;
            k.k.exp[static_cast<std::size_t>(Letter::VBar)] = 1;
            k.z = {1, 0};
            CHECK(f[static_cast<std::size_t>(i)].coefficient(k) == -QScalar::q_pow(i));
        }
    }
    const std::vector<RepElement> single = assemble_series(Side::Minus, g, ExponentParam::concrete(0), IntPoly{}, 0);
    REQUIRE(single.size() == 1);
    CHECK(single[0] == chat(minus_spec(0, g, 0)));
    const std::vector<RepElement> minus = assemble_series(Side::Minus, g, ExponentParam::concrete(0), IntPoly{{1}}, 2);
    CHECK(minus[2] == chat(minus_spec(2, g, 0, IntPoly{{1}})).scaled(qfactorial(2).inverse()));
    CHECK_THROWS_AS(assemble_series(Side::Plus, g, ExponentParam::concrete(0), IntPoly{}, -1), std::invalid_argument);
}

TEST_CASE("symbolic shift")
{
    const WeylSolSpec spec{Side::Plus, 0, unit_gamma(0), ExponentParam::symbolic(1, -4), IntPoly{}};
    const std::vector<RepElement> f = prefactor_factors(spec, 0);
    RepKey k;
    k.k.exp[static_cast<std::size_t>(Letter::VBar)] = 1;
    k.z = {1, 0};
    CHECK(f[2].coefficient(k) == -(QScalar::unit(1) * QScalar::q_pow(2)));
    CHECK(verify_weyl(spec).pass());
}
