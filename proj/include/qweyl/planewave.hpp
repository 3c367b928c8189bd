#pragma once

#include "qweyl/operators.hpp"

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qweyl {

// An integer shift constant, concrete or symbolic. A symbolic constant with unit index k is
// U + value where u_k = q^U, so q^{c * (U + value)} is emitted as u_k^c q^{c * value}.
struct ExponentParam {
    long value = 0;
    int unit = 0;   // 0: concrete, 1..3: symbolic through u_unit

    static ExponentParam concrete(long v) { return {v, 0}; }
    static ExponentParam symbolic(int unit_index, long offset = 0) { return {offset, unit_index}; }
    bool is_symbolic() const { return unit != 0; }
    ExponentParam plus(long offset) const { return {value + offset, unit}; }
    std::string to_string() const;
    bool operator==(const ExponentParam&) const = default;
};

// q^{multiplier * param}.
QScalar q_power(const ExponentParam& param, long multiplier);

// Integer polynomial in one variable, coefficients in ascending degree.
struct IntPoly {
    std::vector<long> coeffs;

    long operator()(long x) const;
    int degree() const;
    std::string to_string(char var = 'x') const;
    bool operator==(const IntPoly&) const = default;
};

// Parses e.g. "3a^2 - 2*a + 1" or "-x+4". Any single letter is accepted as the variable.
// Throws ParseError on malformed input.
IntPoly parse_int_poly(std::string_view text);

// The phase exponent P(a, b) attached to a plane-wave component.
struct PhasePoly {
    enum class Kind { Zero, Plus, Minus, General };
    Kind kind = Kind::Zero;
    IntPoly poly;                              // R(a) for Plus, Q(b) for Minus
    ExponentParam linear;                      // B for Plus (times b), D for Minus (times a)
    std::map<std::pair<int, int>, long> table; // General: P(a, b) on the support

    static PhasePoly zero() { return {}; }
    // P = R(a) + B b
    static PhasePoly plus(IntPoly r, ExponentParam b) { return {Kind::Plus, std::move(r), b, {}}; }
    // P = D a + Q(b)
    static PhasePoly minus(ExponentParam d, IntPoly q) { return {Kind::Minus, std::move(q), d, {}}; }
    static PhasePoly general(std::map<std::pair<int, int>, long> t) { return {Kind::General, {}, {}, std::move(t)}; }

    std::string to_string() const;
};

// q^{P(a, b)}. Throws std::out_of_range for a General table lacking (a, b).
QScalar phase_factor(const PhasePoly& phase, int a, int b);

struct PlaneWaveSpec {
    int s = 0;
    PhasePoly phase;
};

// Sum over p of q^{(s-p)(p-1)+p} / ([p]! [s-p]!).
QScalar beta_inverse(int s);
QScalar beta(int s);

// Degree-s component of the deformed plane wave. Throws std::invalid_argument for s < 0.
RepElement hhat(const PlaneWaveSpec& spec);

// [hhat_s / [s]!] for s = 0..s_max with the phase supplied per s.
std::vector<RepElement> exp_q(const std::function<PhasePoly(int)>& phase_for, int s_max);

// Hat q-d'Alembert image of hhat(spec), optionally reduced modulo the momentum cone.
RepElement dalembert_residual(const PlaneWaveSpec& spec, bool cone, unsigned jobs = 1);

} // namespace qweyl
