#include "qweyl/classical.hpp"

namespace qweyl {

ClassicalElement eval_at_q1(const RepElement& e)
{
    ClassicalElement out;
    for (const auto& [key, c] : e.terms()) {
        GaussianRational v = eval_at_q1(c);
        if (v.is_zero())
            continue;
        auto [it, inserted] = out.try_emplace(key, v);
        if (!inserted) {
            it->second += v;
            if (it->second.is_zero())
                out.erase(it);
        }
    }
    return out;
}

std::string to_string(const ClassicalElement& e)
{
    RepElement lifted;
    for (const auto& [key, c] : e)
        lifted.add_term(key, c);
    return lifted.to_string();
}

namespace {

ClassicalElement commutative_product(const ClassicalElement& a, const ClassicalElement& b)
{
    ClassicalElement out;
    for (const auto& [ka, ca] : a) {
        for (const auto& [kb, cb] : b) {
            RepKey k;
            for (std::size_t i = 0; i < 4; ++i) {
                k.k.exp[i] = ka.k.exp[i] + kb.k.exp[i];
                k.x[i] = ka.x[i] + kb.x[i];
            }
            k.z = {ka.z[0] + kb.z[0], ka.z[1] + kb.z[1]};
            GaussianRational& slot = out[k];
            slot += ca * cb;
        }
    }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

RepKey pair_key(int momentum, int coordinate)
{
    RepKey k;
    k.k.exp[static_cast<std::size_t>(momentum)] = 1;
    k.x[static_cast<std::size_t>(coordinate)] = 1;
    return k;
}

} // namespace

ClassicalElement pairing_power(int s)
{
    // Indices: 0 = v, 1 = x-, 2 = x+, 3 = vb.
    const GaussianRational half = GaussianRational::from_fraction(1, 2);
    const ClassicalElement kx = {
        {pair_key(2, 1), half}, {pair_key(1, 2), half}, {pair_key(0, 3), -half}, {pair_key(3, 0), -half}};
    ClassicalElement acc = {{RepKey{}, GaussianRational(1)}};
    for (int i = 0; i < s; ++i)
        acc = commutative_product(acc, kx);
    return acc;
}

std::vector<RepKey> monomial_basis(int coord_degree, int z_degree)
{
    std::vector<RepKey> out;
    for (int j = 0; j <= coord_degree; ++j)
        for (int n = 0; j + n <= coord_degree; ++n)
            for (int l = 0; j + n + l <= coord_degree; ++l)
                for (int m = 0; j + n + l + m <= coord_degree; ++m)
                    for (int p = 0; p <= z_degree; ++p)
                        for (int pb = 0; pb <= z_degree; ++pb) {
                            RepKey k;
                            k.x = {j, n, l, m};
                            k.z = {p, pb};
                            out.push_back(k);
                        }
    return out;
}

CheckResult compare_at_q1(const std::string& name, const OperatorExpr& op_q, const OperatorExpr& classical,
                          const std::vector<RepKey>& basis, unsigned jobs)
{
    // Operators act on coordinates and z only, so tagging basis monomial i with the momentum
    // kv^i lets one application carry every image separately.
    RepElement tagged;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        RepKey k = basis[i];
        k.k.exp = {static_cast<int>(i), 0, 0, 0};
        tagged.add_term(k, 1);
    }
    const ClassicalElement lhs = eval_at_q1(apply(op_q, tagged, jobs));
    const ClassicalElement rhs = eval_at_q1(apply(classical, tagged, jobs));
    CheckResult r{name, lhs == rhs, ""};
    if (r.pass)
        return r;
    // Locate the first monomial whose images differ.
    for (std::size_t i = 0; i < basis.size(); ++i) {
        auto slice = [i](const ClassicalElement& e) {
            ClassicalElement out;
            for (const auto& [k, c] : e)
                if (static_cast<std::size_t>(k.k.exp[0]) == i) {
                    RepKey plain = k;
                    plain.k = {};
                    out.emplace(plain, c);
                }
            return out;
        };
        ClassicalElement a = slice(lhs), b = slice(rhs);
        if (a != b) {
            r.detail = "on " + RepElement::term(1, basis[i]).to_string() + ": " + to_string(a) + " vs " + to_string(b);
            break;
        }
    }
    return r;
}

std::vector<CheckResult> run_classical_suite(const ClassicalSuiteOptions& opts)
{
    std::vector<CheckResult> out;
    const auto basis = monomial_basis(opts.coord_degree, opts.z_degree);

    out.push_back(compare_at_q1("I+ = I+(4)", build_classical_I_pm(Sign::Plus),
                                build_classical_I_pm_n(Sign::Plus, 4, opts.middle_scale), basis, opts.jobs));
    out.push_back(compare_at_q1("I- = I-(4)", build_classical_I_pm(Sign::Minus),
                                build_classical_I_pm_n(Sign::Minus, 4, opts.middle_scale), basis, opts.jobs));
    for (int a = 1; a <= 3; ++a)
        out.push_back(compare_at_q1("qI" + std::to_string(a) + " -> I" + std::to_string(a), build_qI(a),
                                    build_classical_I(a), basis, opts.jobs));
    for (int n : {2, 4}) {
        out.push_back(compare_at_q1("qI+(" + std::to_string(n) + ") -> I+(" + std::to_string(n) + ")",
                                    build_qI_pm(Sign::Plus, n), build_classical_I_pm_n(Sign::Plus, n), basis,
                                    opts.jobs));
        out.push_back(compare_at_q1("qI-(" + std::to_string(n) + ") -> I-(" + std::to_string(n) + ")",
                                    build_qI_pm(Sign::Minus, n), build_classical_I_pm_n(Sign::Minus, n), basis,
                                    opts.jobs));
    }
    out.push_back(compare_at_q1("qdal-hat -> box", build_qdal(Basis::Hat), build_box(), basis, opts.jobs));
    out.push_back(compare_at_q1("qdal-tilde -> box", build_qdal(Basis::Tilde), build_box(), basis, opts.jobs));

    for (std::size_t p = 0; p < opts.phases.size(); ++p) {
        CheckResult r{"hhat -> (k.x)^s, phase " + opts.phases[p].to_string(), true, ""};
        for (int s = 0; s <= opts.plane_wave_s_max && r.pass; ++s) {
            if (eval_at_q1(hhat({s, opts.phases[p]})) != pairing_power(s)) {
                r.pass = false;
                r.detail = "mismatch at s = " + std::to_string(s);
            }
        }
        out.push_back(r);
    }
    return out;
}

} // namespace qweyl
