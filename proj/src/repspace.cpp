#include "qweyl/repspace.hpp"

#include <algorithm>
#include <stdexcept>

namespace qweyl {

std::string var_name(Var v)
{
    static const std::array<const char*, 6> names = {"v", "-", "+", "vb", "z", "zb"};
    return names[static_cast<std::size_t>(v)];
}

int RepKey::exponent(Var v) const
{
    auto i = static_cast<std::size_t>(v);
    return i < 4 ? x[i] : z[i - 4];
}

int& RepKey::exponent(Var v)
{
    auto i = static_cast<std::size_t>(v);
    return i < 4 ? x[i] : z[i - 4];
}

RepElement RepElement::term(const QScalar& c, const RepKey& key)
{
    RepElement e;
    e.add_term(key, c);
    return e;
}

QScalar RepElement::coefficient(const RepKey& key) const
{
    auto it = terms_.find(key);
    return it == terms_.end() ? QScalar() : it->second;
}

void RepElement::add_term(const RepKey& key, const QScalar& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (inserted)
        return;
    it->second += c;
    if (it->second.is_zero())
        terms_.erase(it);
}

RepElement RepElement::scaled(const QScalar& c) const
{
    RepElement r;
    if (c.is_zero())
        return r;
    for (const auto& [k, x] : terms_)
        r.terms_.emplace(k, x * c);
    return r;
}

RepElement& RepElement::operator+=(const RepElement& o)
{
    for (const auto& [k, c] : o.terms_)
        add_term(k, c);
    return *this;
}

RepElement& RepElement::operator-=(const RepElement& o)
{
    for (const auto& [k, c] : o.terms_)
        add_term(k, -c);
    return *this;
}

namespace {

std::string key_text(const RepKey& key, bool latex)
{
    std::vector<std::string> parts;
    auto power = [latex](std::string base, int e) {
        if (e == 1)
            return base;
        return latex ? base + "^{" + std::to_string(e) + "}" : base + "^" + std::to_string(e);
    };
    static constexpr std::array<Letter, 4> letters = {Letter::V, Letter::Minus, Letter::Plus, Letter::VBar};
    for (std::size_t i = 0; i < 4; ++i)
        if (key.k.exp[i] != 0)
            parts.push_back(power(latex ? letter_latex(letters[i], Alphabet::Momenta)
                                        : letter_name(letters[i], Alphabet::Momenta),
                                  key.k.exp[i]));
    for (std::size_t i = 0; i < 4; ++i)
        if (key.x[i] != 0)
            parts.push_back(power(latex ? letter_latex(letters[i], Alphabet::Coordinates)
                                        : letter_name(letters[i], Alphabet::Coordinates),
                                  key.x[i]));
    if (key.z[0] != 0)
        parts.push_back(power("z", key.z[0]));
    if (key.z[1] != 0)
        parts.push_back(power(latex ? "\\bar{z}" : "zb", key.z[1]));
    std::string out;
    for (const auto& p : parts)
        out += (out.empty() ? "" : " ") + p;
    return out;
}

std::string element_text(const RepElement::Map& terms, bool latex)
{
    if (terms.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [key, c] : terms) {
        auto [negative, coeff] = format_coefficient(c, latex);
        std::string mono = key_text(key, latex);
        std::string body;
        if (mono.empty())
            body = coeff.empty() ? "1" : coeff;
        else
            body = coeff.empty() ? mono : coeff + " " + mono;
        if (first)
            out += negative ? "-" + body : body;
        else
            out += (negative ? " - " : " + ") + body;
        first = false;
    }
    return out;
}

} // namespace

std::string RepElement::to_string() const
{
    return element_text(terms_, false);
}

std::string RepElement::to_latex() const
{
    return element_text(terms_, true);
}

bool is_zero(const RepElement& e)
{
    return std::all_of(e.terms().begin(), e.terms().end(), [](const auto& kv) { return kv.second.is_zero(); });
}

void require_nonnegative(const RepElement& e)
{
    for (const auto& [key, c] : e.terms()) {
        bool bad = std::any_of(key.x.begin(), key.x.end(), [](int v) { return v < 0; }) ||
                   std::any_of(key.z.begin(), key.z.end(), [](int v) { return v < 0; });
        if (bad)
            throw std::domain_error("RepElement: negative coordinate or z exponent in term " +
                                    RepElement::term(c, key).to_string());
    }
}

// ---------------------------------------------------------------------------

void TermAccumulator::add(const RepKey& key, const QScalar& c)
{
    if (c.is_zero())
        return;
    add_fraction(key, c.numerator(), c.denominator());
}

void TermAccumulator::add(const RepKey& key, const QScalar& c, const Laurent& factor)
{
    if (c.is_zero() || factor.is_zero())
        return;
    add_fraction(key, c.numerator() * factor, c.denominator());
}

void TermAccumulator::add_fraction(const RepKey& key, Laurent num, const Laurent& den)
{
    if (num.is_zero())
        return;
    auto& buckets = slots_[key];
    for (auto& b : buckets) {
        if (b.den == den) {
            b.num += num;
            return;
        }
    }
    buckets.push_back({den, std::move(num)});
}

void TermAccumulator::merge(TermAccumulator&& other)
{
    for (auto& [key, buckets] : other.slots_)
        for (auto& b : buckets)
            add_fraction(key, std::move(b.num), b.den);
    other.slots_.clear();
}

RepElement TermAccumulator::finish() &&
{
    RepElement out;
    for (auto& [key, buckets] : slots_) {
        std::vector<QScalar> parts;
        parts.reserve(buckets.size());
        for (auto& b : buckets)
            if (!b.num.is_zero())
                parts.emplace_back(std::move(b.num), b.den);
        QScalar total;
        for (const auto& p : parts)
            total += p;
        if (!total.is_zero())
            out.terms_.emplace_hint(out.terms_.end(), key, std::move(total));
    }
    slots_.clear();
    return out;
}

// ---------------------------------------------------------------------------

namespace {

// Normal form of m1 * m2 for the momentum alphabet.
NCElement monomial_product(const NCMonomial& m1, const NCMonomial& m2, const CommutationRules& rules)
{
    NCElement acc = NCElement::monomial(m1);
    for (Letter l : m2.word()) {
        NCElement next;
        for (const auto& [m, c] : acc.terms())
            next += append_letter(m, l, rules).scaled(c);
        acc = std::move(next);
    }
    return acc;
}

} // namespace

RepElement multiply(const RepElement& a, const RepElement& b, const CommutationRules& rules)
{
    std::map<std::pair<NCMonomial, NCMonomial>, NCElement> cache;
    TermAccumulator acc;
    for (const auto& [ka, ca] : a.terms()) {
        for (const auto& [kb, cb] : b.terms()) {
            auto [it, inserted] = cache.try_emplace({ka.k, kb.k});
            if (inserted)
                it->second = monomial_product(ka.k, kb.k, rules);
            RepKey key;
            for (std::size_t i = 0; i < 4; ++i)
                key.x[i] = ka.x[i] + kb.x[i];
            key.z = {ka.z[0] + kb.z[0], ka.z[1] + kb.z[1]};
            const Laurent num = ca.numerator() * cb.numerator();
            const Laurent den = ca.denominator() * cb.denominator();
            for (const auto& [m, f] : it->second.terms()) {
                key.k = m;
                if (f.is_laurent())
                    acc.add_fraction(key, num * f.numerator(), den);
                else
                    acc.add_fraction(key, num * f.numerator(), den * f.denominator());
            }
        }
    }
    return std::move(acc).finish();
}

RepElement mul_left_momentum(const NCElement& k, const RepElement& e, const CommutationRules& rules)
{
    RepElement left;
    for (const auto& [m, c] : k.terms())
        left.add_term(RepKey{m, {}, {}}, c);
    return multiply(left, e, rules);
}

RepElement mul_coordinates(const RepElement& e, const std::array<int, 4>& x, const std::array<int, 2>& z)
{
    RepElement out;
    for (const auto& [key, c] : e.terms()) {
        RepKey k2 = key;
        for (std::size_t i = 0; i < 4; ++i)
            k2.x[i] += x[i];
        k2.z[0] += z[0];
        k2.z[1] += z[1];
        out.add_term(k2, c);
    }
    return out;
}

RepElement cone_project(const RepElement& e, const CommutationRules& rules)
{
    TermAccumulator acc;
    for (const auto& [key, c] : e.terms()) {
        QScalar factor(1);
        RepKey k2 = key;
        k2.k = cone_reduce_monomial(key.k, factor, rules);
        if (factor.is_laurent())
            acc.add(k2, c, factor.numerator());
        else
            acc.add(k2, c * factor);
    }
    return std::move(acc).finish();
}

} // namespace qweyl
