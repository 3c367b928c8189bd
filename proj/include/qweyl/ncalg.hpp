#pragma once

#include "qweyl/qscalar.hpp"

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qweyl {

// Generators of the quartet algebra in normal-order position. For coordinates these are
// v, x-, x+, vb; for momenta kv, k-, k+, kvb. Both copies obey the same relations:
//   x± v = q^{±1} v x±,  x± vb = q^{±1} vb x±,  x+ x- - x- x+ = lambda v vb,  vb v = v vb.
enum class Letter : std::uint8_t { V = 0, Minus = 1, Plus = 2, VBar = 3 };

enum class Alphabet { Coordinates, Momenta };

std::string letter_name(Letter l, Alphabet a);
std::string letter_latex(Letter l, Alphabet a);

// v^a x-^b x+^c vb^d, always in the order v, x-, x+, vb.
struct NCMonomial {
    std::array<int, 4> exp{};

    auto operator<=>(const NCMonomial&) const = default;

    int degree() const { return exp[0] + exp[1] + exp[2] + exp[3]; }
    int operator[](Letter l) const { return exp[static_cast<std::size_t>(l)]; }
    std::vector<Letter> word() const;
};

struct NCWord {
    std::vector<Letter> letters;
    QScalar coeff{1};
};

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Finite linear combination of normally ordered monomials with no stored zero coefficients.
class NCElement {
public:
    using Map = std::map<NCMonomial, QScalar>;

    NCElement() = default;
    NCElement(const QScalar& c);

    static NCElement monomial(const NCMonomial& m, const QScalar& c = 1);
    static NCElement letter(Letter l, const QScalar& c = 1);

    const Map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    QScalar coefficient(const NCMonomial& m) const;

    void add_term(const NCMonomial& m, const QScalar& c);
    NCElement scaled(const QScalar& c) const;

    NCElement& operator+=(const NCElement& o);
    NCElement& operator-=(const NCElement& o);
    friend NCElement operator+(NCElement a, const NCElement& b) { return a += b; }
    friend NCElement operator-(NCElement a, const NCElement& b) { return a -= b; }
    bool operator==(const NCElement&) const = default;

    std::string to_string(Alphabet a = Alphabet::Coordinates) const;
    std::string to_latex(Alphabet a = Alphabet::Coordinates) const;

private:
    Map terms_;
};

// The structure constants of the algebra. `standard()` is the q-deformed algebra; the other
// settings exist for the commutative limit and for deliberately broken inputs in checks.
struct CommutationRules {
    QScalar q;          // x+ v = q v x+
    QScalar q_inv;      // x- v = q_inv v x-
    QScalar lambda;     // x+ x- - x- x+ = lambda v vb
    QScalar cone_minus_plus;   // cone relation k- k+ = cone_minus_plus * kv kvb
    QScalar cone_plus_minus;   // second presentation k+ k- = cone_plus_minus * kv kvb

    static const CommutationRules& standard();
    static CommutationRules classical();
};

// Normal form of monomial * letter.
NCElement append_letter(const NCMonomial& m, Letter l,
                        const CommutationRules& rules = CommutationRules::standard());

NCElement normal_order(const NCWord& w, const CommutationRules& rules = CommutationRules::standard());

enum class RewriteStrategy { LeftmostInnermost, RightmostOutermost };

struct RewriteResult {
    NCElement value;
    std::size_t steps = 0;
};

// Reduces a word by repeatedly rewriting single adjacent out-of-order pairs. Independent of
// normal_order; used to check that the rule set is confluent and terminating.
// Throws std::runtime_error once more than max_steps rewrites have been applied.
RewriteResult rewrite_pairs(const NCWord& w, RewriteStrategy strategy,
                            const CommutationRules& rules = CommutationRules::standard(),
                            std::size_t max_steps = 1'000'000);

NCElement multiply(const NCElement& x, const NCElement& y,
                   const CommutationRules& rules = CommutationRules::standard());

// Antilinear anti-involution: reverses words, swaps v <-> vb, fixes x±, conjugates scalars
// (i -> -i, q -> 1/q, u -> 1/u). Defined for the standard rules only.
NCElement omega(const NCElement& x);

// Canonical representative modulo the two-sided ideal generated by k- k+ - q^{-1} kv kvb:
// every monomial of the result has min(b, c) = 0.
NCElement cone_reduce(const NCElement& x, const CommutationRules& rules = CommutationRules::standard());
NCMonomial cone_reduce_monomial(const NCMonomial& m, QScalar& coeff,
                                const CommutationRules& rules = CommutationRules::standard());

struct ConeConsistencyReport {
    bool pass = false;
    NCElement minus_plus_form;   // k- k+ - cone_minus_plus kv kvb
    NCElement plus_minus_form;   // normal order of k+ k- - cone_plus_minus kv kvb
    NCElement witness;           // plus_minus_form - ratio * minus_plus_form
};

// Checks that both printed cone presentations generate the same ideal under the given rules.
ConeConsistencyReport cone_check_consistency(const CommutationRules& rules = CommutationRules::standard());

struct ParsedWord {
    NCWord word;
    Alphabet alphabet = Alphabet::Coordinates;
};

// Surface syntax: generators v, x-, x+, vb (coordinates) or kv, k-, k+, kvb (momenta), separated
// by '*' or whitespace, each optionally raised to a nonnegative integer power with '^'.
// Mixing the two alphabets is rejected.
ParsedWord parse_word(std::string_view text);

// "negative" is set when the coefficient reads naturally with a leading minus; "text" is empty
// for unit magnitude. Shared by the element printers.
struct CoefficientText {
    bool negative = false;
    std::string text;
};
CoefficientText format_coefficient(const QScalar& c, bool latex);

} // namespace qweyl
