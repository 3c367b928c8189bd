#pragma once

#include "qweyl/ncalg.hpp"
#include "qweyl/qscalar.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace qweyl {

// Variables the operator calculus acts on: the four commuting coordinates and the two
// bookkeeping variables z, zb of the indexless formulation.
enum class Var : std::uint8_t { V = 0, Minus = 1, Plus = 2, VBar = 3, Z = 4, ZBar = 5 };

std::string var_name(Var v);

// (momentum monomial) x (coordinate exponents j, n, l, m of v, x-, x+, vb) x (z, zb exponents).
// Momenta stand to the left of coordinates; coordinates and z, zb are commuting.
struct RepKey {
    NCMonomial k;
    std::array<int, 4> x{};
    std::array<int, 2> z{};

    auto operator<=>(const RepKey&) const = default;

    int exponent(Var v) const;
    int& exponent(Var v);
};

class RepElement {
public:
    using Map = std::map<RepKey, QScalar>;

    RepElement() = default;
    static RepElement term(const QScalar& c, const RepKey& key);
    static RepElement one() { return term(1, RepKey{}); }

    const Map& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }
    QScalar coefficient(const RepKey& key) const;

    void add_term(const RepKey& key, const QScalar& c);
    RepElement scaled(const QScalar& c) const;

    RepElement& operator+=(const RepElement& o);
    RepElement& operator-=(const RepElement& o);
    friend RepElement operator+(RepElement a, const RepElement& b) { return a += b; }
    friend RepElement operator-(RepElement a, const RepElement& b) { return a -= b; }
    bool operator==(const RepElement&) const = default;

    std::string to_string() const;
    std::string to_latex() const;

private:
    friend class TermAccumulator;
    Map terms_;
};

bool is_zero(const RepElement& e);

// Throws std::domain_error when any coordinate or z exponent is negative.
void require_nonnegative(const RepElement& e);

// Sums coefficients keyed by RepKey. Contributions are grouped by denominator so that exact
// normalisation (a polynomial gcd) happens once per key and denominator instead of once per
// addition. The result does not depend on insertion order.
class TermAccumulator {
public:
    void add(const RepKey& key, const QScalar& c);
    // Adds c * factor.
    void add(const RepKey& key, const QScalar& c, const Laurent& factor);
    // Adds num / den without normalising first.
    void add_fraction(const RepKey& key, Laurent num, const Laurent& den);
    void merge(TermAccumulator&& other);
    RepElement finish() &&;

private:
    struct Bucket {
        Laurent den;
        Laurent num;
    };
    std::map<RepKey, std::vector<Bucket>> slots_;
};

// Left multiplication of every term's momentum part by k, re-normal-ordered.
RepElement mul_left_momentum(const NCElement& k, const RepElement& e,
                             const CommutationRules& rules = CommutationRules::standard());

// Product with a's momenta to the left of b's; coordinates and z exponents add.
RepElement multiply(const RepElement& a, const RepElement& b,
                    const CommutationRules& rules = CommutationRules::standard());

// Multiplication by the commuting monomial v^j x-^n x+^l vb^m z^p zb^pb.
RepElement mul_coordinates(const RepElement& e, const std::array<int, 4>& x, const std::array<int, 2>& z = {});

// Reduces every momentum part modulo the momentum q-cone; idempotent.
RepElement cone_project(const RepElement& e, const CommutationRules& rules = CommutationRules::standard());

} // namespace qweyl
