#pragma once

#include "qweyl/classical.hpp"
#include "qweyl/json_io.hpp"
#include "qweyl/weylsol.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace qweyl {

enum class OutputFormat { Text, Json, Latex };
enum class SideSelection { Plus, Minus, Both };

// Exit codes shared by every command.
inline constexpr int kExitPass = 0;
inline constexpr int kExitResidual = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
    std::optional<int> s_max;   // defaults: d'Alembert 6, Weyl 3, classical 6
    int s = 0;                  // expand commands
    SideSelection side = SideSelection::Both;
    std::uint64_t seed = 1;
    int draws = 3;               // random parameter draws per s
    std::vector<std::string> shifts;   // B or D values: integers or "symbolic"; empty = random
    std::optional<std::string> poly;   // R(a) or Q(b); empty = random
    std::optional<std::string> gammas; // comma-separated Gaussian rationals; empty = random
    OutputFormat format = OutputFormat::Text;
    unsigned jobs = 1;
    bool cone = true;
    FactorOrder order = FactorOrder::Ascending;
    bool timing = false;   // record wall-clock times; off keeps reports byte-identical
    bool mutate = false;   // double the middle coefficient of the fourth-order operators
    int coord_degree = 5;
    int z_degree = 4;
};

// Deterministic draws from a seeded 64-bit Mersenne twister. Bounded integers use a plain
// modulo reduction so the sequence does not depend on the standard library's distributions.
class ParamSampler {
public:
    explicit ParamSampler(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi);
    GaussianRational gaussian_rational();
    std::array<QScalar, 5> gammas();
    IntPoly poly(int max_degree = 2, long bound = 3);

private:
    std::mt19937_64 rng_;
};

// "3", "-2/5", "i", "1/2-3i", "-4i".
GaussianRational parse_gaussian_rational(std::string_view text);
std::array<QScalar, 5> parse_gammas(std::string_view text);
// Integer or "symbolic" (bound to unit u1).
ExponentParam parse_shift(std::string_view text);

// The P = 0, random P+ and random P- phases checked by the d'Alembert command.
std::vector<PhasePoly> dalembert_phases(const RunConfig& cfg);

// The Weyl specs of a run, in report order.
std::vector<WeylSolSpec> weyl_specs(const RunConfig& cfg);

int cmd_verify_dalembert(const RunConfig& cfg, std::ostream& out);
int cmd_verify_weyl(const RunConfig& cfg, std::ostream& out);
int cmd_verify_classical(const RunConfig& cfg, std::ostream& out);
int cmd_expand_planewave(const RunConfig& cfg, std::ostream& out);
int cmd_expand_chat(const RunConfig& cfg, std::ostream& out);
int cmd_expand_word(const RunConfig& cfg, const std::string& word, std::ostream& out);

// Worker count from QWEYL_JOBS, or 1.
unsigned default_jobs();

} // namespace qweyl
