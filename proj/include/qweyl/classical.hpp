#pragma once

#include "qweyl/planewave.hpp"

#include <map>
#include <string>
#include <vector>

namespace qweyl {

// Commutative q = 1 images. Momentum monomials are read as commuting exponent vectors.
using ClassicalElement = std::map<RepKey, GaussianRational>;

// Throws PoleError if a coefficient has a pole at q = 1.
ClassicalElement eval_at_q1(const RepElement& e);

std::string to_string(const ClassicalElement& e);

// (k.x)^s with k.x = 1/2 (k+ x- + k- x+ - kv vb - kvb v), by repeated commutative multiplication.
ClassicalElement pairing_power(int s);

// Monomials v^j x-^n x+^l vb^m z^p zb^pb with coordinate degree <= coord_degree and
// p, pb <= z_degree (no momenta).
std::vector<RepKey> monomial_basis(int coord_degree, int z_degree);

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;   // first mismatch, if any
};

struct ClassicalSuiteOptions {
    int coord_degree = 5;
    int z_degree = 4;
    int plane_wave_s_max = 6;
    // Multiplies the middle coefficient of I+-(4) in the I+- comparison; 1 leaves it untouched.
    long middle_scale = 1;
    std::vector<PhasePoly> phases{PhasePoly::zero()};
    unsigned jobs = 1;
};

// Compares eval_at_q1(op_q(m)) with classical(m) for every basis monomial m.
CheckResult compare_at_q1(const std::string& name, const OperatorExpr& op_q, const OperatorExpr& classical,
                          const std::vector<RepKey>& basis, unsigned jobs = 1);

// The q = 1 regression suite: I+- = I+-(4); qI_a -> I_a; qI+-(n) -> I+-(n) for n = 2, 4;
// both q-d'Alembert operators -> box; hhat_s -> (k.x)^s.
std::vector<CheckResult> run_classical_suite(const ClassicalSuiteOptions& opts);

} // namespace qweyl
