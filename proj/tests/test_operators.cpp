#include "oracles/classical_diff.hpp"
#include "qweyl/classical.hpp"
#include "qweyl/operators.hpp"
#include "qweyl/qcombinatorics.hpp"
#include "support/random_values.hpp"

#include <doctest.h>

using namespace qweyl;
using qweyl::testing::Sampler;

namespace {

RepKey coords(int j, int n, int l, int m, int p = 0, int pb = 0)
{
    RepKey k;
    k.x = {j, n, l, m};
    k.z = {p, pb};
    return k;
}

RepElement mono(int j, int n, int l, int m, int p = 0, int pb = 0, const QScalar& c = 1)
{
    return RepElement::term(c, coords(j, n, l, m, p, pb));
}

QScalar qp(int k)
{
    return QScalar::q_pow(k);
}

constexpr Var kAllVars[] = {Var::V, Var::Minus, Var::Plus, Var::VBar, Var::Z, Var::ZBar};

} // namespace

TEST_CASE("generator semantics")
{
    for (int j = 0; j <= 5; ++j)
        CHECK(apply(OperatorExpr::scale(Var::V), mono(j, 1, 0, 2)) == mono(j, 1, 0, 2, 0, 0, qp(j)));
    CHECK(apply(OperatorExpr::qdiff(Var::Plus), mono(0, 0, 2, 0)) == mono(0, 0, 1, 0, 0, 0, qnum(2)));
    CHECK(apply(OperatorExpr::qdiff(Var::Plus), mono(0, 0, 0, 0)).empty());
    CHECK(apply(OperatorExpr::shift(Var::ZBar, -2), mono(1, 0, 0, 0, 0, 3)) == mono(1, 0, 0, 0, 0, 1));
}

TEST_CASE("q-difference operator equals its defining quotient")
{
    Sampler rng(101);
    for (Var v : kAllVars) {
        const OperatorExpr literal =
            (OperatorExpr::shift(v, -1) * (OperatorExpr::scale(v, 1) - OperatorExpr::scale(v, -1)))
                .scaled(QScalar::lambda().inverse());
        for (int trial = 0; trial < 15; ++trial) {
            const RepElement e = rng.rep_element(4, true);
            CHECK(apply(OperatorExpr::qdiff(v), e) == apply(literal, e));
        }
    }
}

TEST_CASE("generator exchange relations")
{
    Sampler rng(103);
    for (Var v : kAllVars) {
        const OperatorExpr tm = OperatorExpr::scale(v) * OperatorExpr::shift(v);
        const OperatorExpr mt = OperatorExpr::shift(v) * OperatorExpr::scale(v);
        for (int trial = 0; trial < 10; ++trial) {
            const RepElement e = rng.rep_element(4, true);
            CHECK(apply(tm, e) == apply(mt, e).scaled(QScalar::q()));
        }
        for (Var w : kAllVars) {
            if (w == v)
                continue;
            const OperatorExpr a = OperatorExpr::qdiff(v) * OperatorExpr::scale(w, -1);
            const OperatorExpr b = OperatorExpr::scale(w, -1) * OperatorExpr::qdiff(v);
            const RepElement e = rng.rep_element(4, true);
            CHECK(apply(a, e) == apply(b, e));
        }
    }
}

TEST_CASE("linearity and identity")
{
    Sampler rng(107);
    const OperatorExpr a = build_qI(2), b = build_qI(1) * build_qI(3);
    for (int trial = 0; trial < 20; ++trial) {
        const RepElement e = rng.rep_element(4, true), f = rng.rep_element(3, true);
        const QScalar c = rng.scalar(0);
        CHECK(apply(OperatorExpr::identity(), e) == e);
        CHECK(apply(a + b, e) == apply(a, e) + apply(b, e));
        CHECK(apply(a, e + f.scaled(c)) == apply(a, e) + apply(a, f).scaled(c));
        CHECK(apply(a * b, e) == apply(a, apply(b, e)));
        CHECK(apply(a.pow(2), e) == apply(a, apply(a, e)));
    }
    CHECK(apply(build_qI(2), RepElement{}).empty());
    CHECK(apply(OperatorExpr{}, mono(1, 1, 1, 1)).empty());
}

TEST_CASE("simple-root operators on single monomials")
{
    // D_zb T_zb on zb^2: the scale gives q^2 and the difference gives [2].
    CHECK(apply(build_qI(3), mono(0, 0, 0, 0, 0, 2)) == mono(0, 0, 0, 0, 0, 1, qnum(2) * qp(2)));
    // D_z T_z T_v T+ T-^-1 Tvb^-1 on v^j x-^n x+^l vb^m z^p.
    for (int j = 0; j <= 2; ++j)
        for (int n = 0; n <= 2; ++n)
            for (int p = 1; p <= 3; ++p) {
                const int l = 2 - j, m = n;
                CHECK(apply(build_qI(1), mono(j, n, l, m, p)) == mono(j, n, l, m, p - 1, 0, qnum(p) * qp(p + j + l - n - m)));
            }
}

TEST_CASE("q-d'Alembert operators on single monomials")
{
    for (int j = 0; j <= 2; ++j)
        for (int n = 0; n <= 2; ++n)
            for (int l = 0; l <= 2; ++l)
                for (int m = 0; m <= 2; ++m) {
                    const int total = j + n + l + m;
                    RepElement hat = mono(j, n - 1, l - 1, m, 0, 0, qp(1 + j + m + total) * qnum(n) * qnum(l)) -
                                     mono(j - 1, n, l, m - 1, 0, 0, qp(total) * qnum(j) * qnum(m));
                    RepElement tilde = mono(j, n - 1, l - 1, m, 0, 0, qp(n + l) * qnum(n) * qnum(l)) -
                                       mono(j - 1, n, l, m - 1, 0, 0, qp(1 + j + m + n + l) * qnum(j) * qnum(m));
                    CHECK(apply(build_qdal(Basis::Hat), mono(j, n, l, m)) == hat);
                    CHECK(apply(build_qdal(Basis::Tilde), mono(j, n, l, m)) == tilde);
                }
}

TEST_CASE("fourth-order composites")
{
    // [n-1] vanishes at n = 1, so qI+-(1) keeps only its last group.
    const OperatorExpr last = (build_qI(2).pow(2) * build_qI(1).pow(2)).scaled(QScalar(GaussianRational::from_fraction(1, 2)) * qnum(2));
    const OperatorExpr mutated = build_qI_pm(Sign::Plus, 4, 2);
    Sampler rng(109);
    bool mutation_seen = false;
    for (int trial = 0; trial < 6; ++trial) {
        RepElement e;
        e.add_term(rng.key(3, false), rng.scalar(0));
        e.add_term(coords(1, 1, 2, 0, 3, 2), 1);
        CHECK(apply(build_qI_pm(Sign::Plus, 1), e) == apply(last, e));
        mutation_seen |= apply(mutated, e) != apply(build_qI_pm(Sign::Plus, 4), e);
    }
    CHECK(mutation_seen);
    CHECK_THROWS_AS(build_qI_pm(Sign::Minus, -1), std::invalid_argument);
    CHECK_THROWS_AS(build_qI(4), std::invalid_argument);
}

TEST_CASE("classical limits against direct differentiation")
{
    const std::vector<RepKey> basis = monomial_basis(3, 3);
    const GaussianRational half = GaussianRational::from_fraction(1, 2);
    const OperatorExpr qi1 = build_qI(1), qi2 = build_qI(2), qi3 = build_qI(3);
    const OperatorExpr qdal_hat = build_qdal(Basis::Hat), qdal_tilde = build_qdal(Basis::Tilde);
    const OperatorExpr printed_plus = build_classical_I_pm(Sign::Plus), printed_minus = build_classical_I_pm(Sign::Minus);
    const OperatorExpr qpm_plus = build_qI_pm(Sign::Plus, 4), qpm_minus = build_qI_pm(Sign::Minus, 2);
    for (const RepKey& key : basis) {
        const RepElement e = RepElement::term(1, key);
        const oracle::Poly f = oracle::from_key(key);
        CHECK(eval_at_q1(apply(qi1, e)) == oracle::to_classical(oracle::root(1, f)));
        CHECK(eval_at_q1(apply(qi2, e)) == oracle::to_classical(oracle::root(2, f)));
        CHECK(eval_at_q1(apply(qi3, e)) == oracle::to_classical(oracle::root(3, f)));
        CHECK(eval_at_q1(apply(qdal_hat, e)) == oracle::to_classical(oracle::box(f)));
        CHECK(eval_at_q1(apply(qdal_tilde, e)) == oracle::to_classical(oracle::box(f)));
        CHECK(eval_at_q1(apply(qpm_plus, e)) == oracle::to_classical(oracle::twice_root_composite(true, 4, f), half));
        CHECK(eval_at_q1(apply(qpm_minus, e)) == oracle::to_classical(oracle::twice_root_composite(false, 2, f), half));
        // The printed second-order operators against the composite at n = 4.
        CHECK(eval_at_q1(apply(printed_plus, e)) == oracle::to_classical(oracle::twice_root_composite(true, 4, f), half));
        CHECK(eval_at_q1(apply(printed_minus, e)) == oracle::to_classical(oracle::twice_root_composite(false, 4, f), half));
    }
}

TEST_CASE("printed second-order operator on sample monomials")
{
    const GaussianRational half = GaussianRational::from_fraction(1, 2);
    // Without z only the 12(zb^2 d+^2 + ...) block acts: 12 * 2 zb^2.
    const ClassicalElement bare = eval_at_q1(apply(build_classical_I_pm(Sign::Plus), mono(0, 0, 2, 0)));
    CHECK(bare == ClassicalElement{{coords(0, 0, 0, 0, 0, 2), GaussianRational(24)}});
    // With z^4 the three groups of the composite give 720 - 1200 + 480 = 0.
    const oracle::Poly f = oracle::from_key(coords(0, 0, 2, 0, 4, 0));
    CHECK(oracle::twice_root_composite(true, 4, f).empty());
    CHECK(eval_at_q1(apply(build_classical_I_pm(Sign::Plus), mono(0, 0, 2, 0, 4, 0))).empty());
    const oracle::Poly g = oracle::from_key(coords(1, 0, 2, 0, 3, 0));
    CHECK(eval_at_q1(apply(build_classical_I_pm(Sign::Plus), mono(1, 0, 2, 0, 3, 0))) ==
          oracle::to_classical(oracle::twice_root_composite(true, 4, g), half));
}

TEST_CASE("operator registry")
{
    CHECK(lookup_operator("qI+ (4)").terms().size() == build_qI_pm(Sign::Plus, 4).terms().size());
    const RepElement e = mono(1, 2, 1, 0, 3, 2);
    CHECK(apply(lookup_operator("qI-(2)"), e) == apply(build_qI_pm(Sign::Minus, 2), e));
    CHECK(apply(lookup_operator("qdal-tilde"), e) == apply(build_qdal(Basis::Tilde), e));
    CHECK(apply(lookup_operator("qM+(1)"), e) == apply(build_q_maxwell(Sign::Plus, 1), e));
    for (std::string key : operator_registry_keys()) {
        if (auto pos = key.find("(n)"); pos != std::string::npos)
            key.replace(pos, 3, "(3)");
        CHECK_NOTHROW(lookup_operator(key));
    }
    CHECK_THROWS_AS(lookup_operator("qI4"), std::invalid_argument);
    CHECK_THROWS_AS(lookup_operator("qI+(x)"), std::invalid_argument);
    CHECK_THROWS_AS(lookup_operator("qI+()"), std::invalid_argument);
}

TEST_CASE("threaded application matches serial")
{
    Sampler rng(113);
    RepElement e;
    for (int i = 0; i < 30; ++i)
        e.add_term(rng.key(3, true), rng.scalar(0));
    const OperatorExpr op = build_qI_pm(Sign::Plus, 4);
    CHECK(apply(op, e, 1) == apply(op, e, 4));
}
