#pragma once

#include "qweyl/planewave.hpp"

#include <array>
#include <string>
#include <vector>

namespace qweyl {

enum class Side { Plus, Minus };
enum class FactorOrder { Ascending, Descending };

std::string side_name(Side s);
std::string order_name(FactorOrder o);

// One component of the q-Weyl solution series. `shift` is B (plus side) or D (minus side);
// `free_poly` is R(a) (plus) or Q(b) (minus).
struct WeylSolSpec {
    Side side = Side::Plus;
    int s = 0;
    std::array<QScalar, 5> gammas{};
    ExponentParam shift;
    IntPoly free_poly;

    std::string to_string() const;
};

// The phase the spec attaches to its plane-wave component.
PhasePoly weyl_phase(const WeylSolSpec& spec);

// The momentum-z factors multiplying gamma_m, in printed index order. Plus side:
// (k+ - q^{i+B+s+4} kvb z) for i = 0..3-m, then (kv - q^{j+B+s+4} k- z) for j = 4-m..3.
// Minus side: (k+ - q^{i-D} kv zb) for i = -1..2-m, then (kvb - q^{j-D} k- zb) for j = 3-m..2.
std::vector<RepElement> prefactor_factors(const WeylSolSpec& spec, int m);

// Product of prefactor_factors in the given order (empty product = 1).
RepElement prefactor(const WeylSolSpec& spec, int m, FactorOrder order = FactorOrder::Ascending);

// sum_m gamma_m * prefactor_m * hhat_s with the spec's phase.
RepElement chat(const WeylSolSpec& spec, FactorOrder order = FactorOrder::Ascending);

struct VerifyOptions {
    bool cone = true;
    FactorOrder order = FactorOrder::Ascending;
    // Multiplies the middle coefficient of the fourth-order operator; 1 leaves it untouched.
    QScalar middle_scale{1};
    unsigned jobs = 1;
};

struct VerificationReport {
    RepElement residual;
    long elapsed_ms = 0;
    bool pass() const { return residual.empty(); }
};

// Applies qI+(4) (plus) or qI-(4) (minus) to chat(spec) and reduces modulo the momentum cone.
VerificationReport verify_weyl(const WeylSolSpec& spec, const VerifyOptions& opts = {});

// [chat_s / [s]!] for s = 0..s_max with constants independent of s: B_s = B' - s - 4 on the plus
// side and D_s = D on the minus side. `shift` holds B' or D.
std::vector<RepElement> assemble_series(Side side, const std::array<QScalar, 5>& gammas, const ExponentParam& shift,
                                        const IntPoly& free_poly, int s_max);

} // namespace qweyl
