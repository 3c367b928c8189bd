#include "qweyl/json_io.hpp"
#include "qweyl/repspace.hpp"
#include "support/random_values.hpp"

#include <doctest.h>

#include <algorithm>

using namespace qweyl;
using qweyl::testing::Sampler;

namespace {

RepKey momentum_key(int a, int b, int c, int d, std::array<int, 4> x = {})
{
    RepKey k;
    k.k.exp = {a, b, c, d};
    k.x = x;
    return k;
}

} // namespace

TEST_CASE("left multiplication by momenta")
{
    // k+ kvb = q kvb k+, so ordering kvb k+ leaves q^-1.
    const RepElement e = RepElement::term(1, momentum_key(0, 0, 1, 0, {1, 0, 0, 0}));
    const RepElement got = mul_left_momentum(NCElement::letter(Letter::VBar), e);
    const NCElement ordered = normal_order(NCWord{{Letter::VBar, Letter::Plus}, QScalar(1)});
    REQUIRE(ordered.size() == 1);
    const auto& [mono, coeff] = *ordered.terms().begin();
    CHECK(coeff == QScalar::q_pow(-1));
    CHECK(got == RepElement::term(coeff, momentum_key(mono.exp[0], mono.exp[1], mono.exp[2], mono.exp[3], {1, 0, 0, 0})));

    Sampler rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        const NCElement k1 = rng.element(2, 3), k2 = rng.element(2, 3);
        const RepElement x = rng.rep_element(3, true);
        CHECK(mul_left_momentum(k1, mul_left_momentum(k2, x)) == mul_left_momentum(multiply(k1, k2), x));
    }
}

TEST_CASE("vector space operations")
{
    Sampler rng(17);
    for (int trial = 0; trial < 80; ++trial) {
        const RepElement a = rng.rep_element(), b = rng.rep_element(), c = rng.rep_element();
        const QScalar s = rng.scalar(0), t = rng.scalar(0);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK((a - a).empty());
        CHECK(a.scaled(0).empty());
        CHECK(a.scaled(s + t) == a.scaled(s) + a.scaled(t));
        CHECK((a + b).scaled(s) == a.scaled(s) + b.scaled(s));
        CHECK(a.scaled(s).scaled(t) == a.scaled(s * t));
    }
    const RepElement t = RepElement::term(1, RepKey{});
    CHECK(is_zero(t.scaled(QScalar::q() - QScalar::q_pow(-1)) - t.scaled(QScalar::lambda())));
    CHECK(is_zero(RepElement{}));
}

TEST_CASE("momenta and coordinates commute")
{
    Sampler rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        RepKey kpart = rng.key(2, true);
        kpart.x = {};
        kpart.z = {};
        RepKey xpart = rng.key(3, false);
        const RepElement k = RepElement::term(rng.scalar(0), kpart);
        const RepElement x = RepElement::term(rng.scalar(0), xpart);
        CHECK(multiply(k, x) == multiply(x, k));
        CHECK(multiply(k, x) == mul_coordinates(k, xpart.x, xpart.z).scaled(x.terms().begin()->second));
    }
}

TEST_CASE("cone projection")
{
    const RepElement mixed = RepElement::term(3, momentum_key(0, 1, 1, 0, {0, 2, 0, 1}));
    CHECK(cone_project(mixed) == RepElement::term(QScalar(3) * QScalar::q_pow(-1), momentum_key(1, 0, 0, 1, {0, 2, 0, 1})));

    const RepElement free = RepElement::term(QScalar::lambda(), momentum_key(2, 0, 3, 1));
    CHECK(cone_project(free) == free);

    Sampler rng(41);
    for (int trial = 0; trial < 80; ++trial) {
        const RepElement e = rng.rep_element(5, true);
        const RepElement once = cone_project(e);
        CHECK(cone_project(once) == once);
        for (const auto& [key, c] : once.terms())
            CHECK(std::min(key.k.exp[1], key.k.exp[2]) == 0);
    }
}

TEST_CASE("negative exponents are rejected on request")
{
    RepKey bad;
    bad.x = {0, -1, 0, 0};
    CHECK_THROWS_AS(require_nonnegative(RepElement::term(1, bad)), std::domain_error);
    RepKey bad_z;
    bad_z.z = {0, -2};
    CHECK_THROWS_AS(require_nonnegative(RepElement::term(1, bad_z)), std::domain_error);
    CHECK_NOTHROW(require_nonnegative(RepElement::term(1, momentum_key(1, 1, 1, 1, {2, 0, 0, 1}))));
}

TEST_CASE("accumulated sums do not depend on insertion order")
{
    Sampler rng(57);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<std::pair<RepKey, QScalar>> items;
        for (int i = 0; i < 12; ++i)
            items.emplace_back(rng.key(1, false), rng.scalar(1));
        // Cancelling pairs make sure exact zeros are dropped.
        items.emplace_back(items.front().first, -items.front().second);

        TermAccumulator forward, backward;
        RepElement plain;
        for (const auto& [k, c] : items) {
            forward.add(k, c);
            plain.add_term(k, c);
        }
        for (auto it = items.rbegin(); it != items.rend(); ++it)
            backward.add(it->first, it->second);
        const RepElement f = std::move(forward).finish();
        CHECK(f == std::move(backward).finish());
        CHECK(f == plain);
    }
}

TEST_CASE("json round trip")
{
    Sampler rng(63);
    for (int trial = 0; trial < 40; ++trial) {
        RepElement e = rng.rep_element(4, true);
        e.add_term(rng.key(2, true), rng.scalar(2));
        const Json j = to_json(e);
        CHECK(repelement_from_json(Json::parse(j.dump())) == e);
    }
    CHECK_THROWS_AS(repelement_from_json(Json::parse(R"({"terms":[{"k":[0,0,0,0]}]})")), ParseError);
    CHECK_THROWS_AS(repelement_from_json(Json::parse(R"({"terms":[{"coeff":{"num":[],"den":[]},"k":[0],"x":[0,0,0,0],"z":[0,0]}]})")),
                    ParseError);
}
