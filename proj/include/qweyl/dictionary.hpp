#pragma once

#include "qweyl/gaussian_rational.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace qweyl {

// Classical tensor dictionaries of the indexless formulation. Entries are exact complex rationals.

using WeylComponents = std::array<GaussianRational, 10>;   // C0..C9

// Coefficients c0..c4 of c4 z^4 + ... + c0 (plus) or the zb mirror (minus).
struct CPolynomial {
    std::array<GaussianRational, 5> coeffs{};
    bool operator==(const CPolynomial&) const = default;
};

struct CPolynomialPair {
    CPolynomial plus;
    CPolynomial minus;
};

CPolynomialPair weyl_to_cpm(const WeylComponents& w);

using Matrix = std::vector<std::vector<GaussianRational>>;

// The 10 x 10 matrix of weyl_to_cpm; rows C+0..C+4, C-0..C-4, columns C0..C9.
Matrix weyl_to_cpm_matrix();

std::size_t matrix_rank(Matrix m);

// Solves m x = rhs for square nonsingular m; std::nullopt when singular.
std::optional<std::vector<GaussianRational>> solve_linear(Matrix m, std::vector<GaussianRational> rhs);

struct RankReport {
    std::size_t rank = 0;
    std::size_t plus_rank = 0;    // rank of the C+ rows alone
    std::size_t minus_rank = 0;
    // Rows (by index k) where the C- row is not the entrywise conjugate of the C+ row.
    std::vector<int> conjugation_mismatches;
    std::string to_string() const;
};

RankReport weyl_rank_report();

// Symmetric 4x4 tensor T_{mu nu}, mu, nu = 0..3.
using SymTensor = std::array<std::array<GaussianRational, 4>, 4>;

// Primed components T'_{ij}, i, j in {0,1,2} (powers of z and zb).
using PrimedTensor = std::array<std::array<GaussianRational, 3>, 3>;

PrimedTensor stress_to_primed(const SymTensor& t);

// Inverse on symmetric traceless tensors; throws std::domain_error if the system is singular.
SymTensor primed_to_stress(const PrimedTensor& p);

// eta^{mu nu} T_{mu nu} with eta = diag(1, -1, -1, -1).
GaussianRational minkowski_trace(const SymTensor& t);

struct LightCone {
    GaussianRational plus, minus, v, vbar;
    bool operator==(const LightCone&) const = default;
};

// x+- = x0 +- x3, v = x1 - i x2, vb = x1 + i x2.
LightCone lightcone_map(const std::array<GaussianRational, 4>& x);

} // namespace qweyl
