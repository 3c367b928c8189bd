#include "qweyl/ncalg.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace qweyl {

namespace {

constexpr std::array<Letter, 4> kLetters = {Letter::V, Letter::Minus, Letter::Plus, Letter::VBar};

std::size_t idx(Letter l)
{
    return static_cast<std::size_t>(l);
}

} // namespace

std::string letter_name(Letter l, Alphabet a)
{
    static const std::array<const char*, 4> coords = {"v", "x-", "x+", "vb"};
    static const std::array<const char*, 4> momenta = {"kv", "k-", "k+", "kvb"};
    return a == Alphabet::Coordinates ? coords[idx(l)] : momenta[idx(l)];
}

std::string letter_latex(Letter l, Alphabet a)
{
    static const std::array<const char*, 4> coords = {"v", "x_{-}", "x_{+}", "\\bar{v}"};
    static const std::array<const char*, 4> momenta = {"k_{v}", "k_{-}", "k_{+}", "k_{\\bar{v}}"};
    return a == Alphabet::Coordinates ? coords[idx(l)] : momenta[idx(l)];
}

std::vector<Letter> NCMonomial::word() const
{
    std::vector<Letter> w;
    w.reserve(static_cast<std::size_t>(degree()));
    for (Letter l : kLetters)
        w.insert(w.end(), static_cast<std::size_t>(exp[idx(l)]), l);
    return w;
}

// ---------------------------------------------------------------------------

NCElement::NCElement(const QScalar& c)
{
    if (!c.is_zero())
        terms_.emplace(NCMonomial{}, c);
}

NCElement NCElement::monomial(const NCMonomial& m, const QScalar& c)
{
    NCElement e;
    e.add_term(m, c);
    return e;
}

NCElement NCElement::letter(Letter l, const QScalar& c)
{
    NCMonomial m;
    m.exp[idx(l)] = 1;
    return monomial(m, c);
}

QScalar NCElement::coefficient(const NCMonomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? QScalar() : it->second;
}

void NCElement::add_term(const NCMonomial& m, const QScalar& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted)
        return;
    it->second += c;
    if (it->second.is_zero())
        terms_.erase(it);
}

NCElement NCElement::scaled(const QScalar& c) const
{
    NCElement r;
    if (c.is_zero())
        return r;
    for (const auto& [m, x] : terms_)
        r.terms_.emplace(m, x * c);
    return r;
}

NCElement& NCElement::operator+=(const NCElement& o)
{
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

NCElement& NCElement::operator-=(const NCElement& o)
{
    for (const auto& [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

CoefficientText format_coefficient(const QScalar& c, bool latex)
{
    if (c.is_one())
        return {false, ""};
    if ((-c).is_one())
        return {true, ""};
    const QScalar lam = QScalar::lambda();
    const std::string lam_text = latex ? "\\lambda" : "λ";
    if (c == lam)
        return {false, lam_text};
    if (c == -lam)
        return {true, lam_text};
    QScalar mag = c;
    bool negative = false;
    if (!c.is_zero()) {
        const auto& lc = c.numerator().leading().coeff;
        if (lc.is_real() && sgn(lc.re()) < 0) {
            negative = true;
            mag = -c;
        }
    }
    std::string text = latex ? mag.to_latex() : mag.to_string();
    bool compound = !mag.is_laurent() || mag.numerator().size() > 1;
    if (compound && !latex)
        text = "(" + text + ")";
    else if (compound)
        text = "\\left(" + text + "\\right)";
    return {negative, text};
}

namespace {

std::string monomial_text(const NCMonomial& m, Alphabet a, bool latex)
{
    std::string out;
    for (Letter l : kLetters) {
        int e = m[l];
        if (e == 0)
            continue;
        if (!out.empty())
            out += " ";
        out += latex ? letter_latex(l, a) : letter_name(l, a);
        if (e > 1)
            out += latex ? "^{" + std::to_string(e) + "}" : "^" + std::to_string(e);
    }
    return out;
}

std::string element_text(const NCElement::Map& terms, Alphabet a, bool latex)
{
    if (terms.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms) {
        auto [negative, coeff] = format_coefficient(c, latex);
        std::string mono = monomial_text(m, a, latex);
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

std::string NCElement::to_string(Alphabet a) const
{
    return element_text(terms_, a, false);
}

std::string NCElement::to_latex(Alphabet a) const
{
    return element_text(terms_, a, true);
}

// ---------------------------------------------------------------------------

const CommutationRules& CommutationRules::standard()
{
    static const CommutationRules rules{QScalar::q(), QScalar::q_pow(-1), QScalar::lambda(), QScalar::q_pow(-1),
                                        QScalar::q()};
    return rules;
}

CommutationRules CommutationRules::classical()
{
    return {QScalar(1), QScalar(1), QScalar(0), QScalar(1), QScalar(1)};
}

NCElement append_letter(const NCMonomial& m, Letter l, const CommutationRules& rules)
{
    const int a = m.exp[0];
    const int b = m.exp[1];
    const int c = m.exp[2];
    const int d = m.exp[3];
    NCMonomial out = m;
    switch (l) {
    case Letter::VBar:
        out.exp[3] += 1;
        return NCElement::monomial(out);
    case Letter::Plus:
        // vb^d x+ = q^{-d} x+ vb^d
        out.exp[2] += 1;
        return NCElement::monomial(out, rules.q_inv.pow(d));
    case Letter::V:
        // x+^c v = q^c v x+^c,  x-^b v = q^{-b} v x-^b,  vb v = v vb
        out.exp[0] += 1;
        return NCElement::monomial(out, rules.q.pow(c) * rules.q_inv.pow(b));
    case Letter::Minus: {
        // vb^d x- = q^d x- vb^d, then x+^c x- = x- x+^c + lambda (sum_i q^{2i}) v vb x+^{c-1},
        // and v vb is moved into place past x-^b and x+^{c-1}.
        const QScalar qd = rules.q.pow(d);
        out.exp[1] += 1;
        NCElement r = NCElement::monomial(out, qd);
        if (c > 0 && !rules.lambda.is_zero()) {
            QScalar sum;
            for (int i = 0; i < c; ++i)
                sum += rules.q.pow(2 * i);
            NCMonomial lower{{a + 1, b, c - 1, d + 1}};
            r.add_term(lower, qd * rules.lambda * sum * rules.q_inv.pow(b + c - 1));
        }
        return r;
    }
    }
    return {};
}

NCElement normal_order(const NCWord& w, const CommutationRules& rules)
{
    NCElement cur(w.coeff);
    for (Letter l : w.letters) {
        NCElement next;
        for (const auto& [m, c] : cur.terms())
            next += append_letter(m, l, rules).scaled(c);
        cur = std::move(next);
    }
    return cur;
}

namespace {

using Word = std::vector<Letter>;

bool is_sorted_word(const Word& w)
{
    return std::is_sorted(w.begin(), w.end());
}

// Position i such that w[i] > w[i+1], scanning from the requested side.
std::size_t find_inversion(const Word& w, RewriteStrategy s)
{
    if (s == RewriteStrategy::LeftmostInnermost) {
        for (std::size_t i = 0; i + 1 < w.size(); ++i)
            if (w[i] > w[i + 1])
                return i;
    } else {
        for (std::size_t i = w.size() - 1; i-- > 0;)
            if (w[i] > w[i + 1])
                return i;
    }
    return w.size();
}

void add_word(std::map<Word, QScalar>& pool, Word w, const QScalar& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = pool.try_emplace(std::move(w), c);
    if (inserted)
        return;
    it->second += c;
    if (it->second.is_zero())
        pool.erase(it);
}

} // namespace

RewriteResult rewrite_pairs(const NCWord& w, RewriteStrategy strategy, const CommutationRules& rules,
                            std::size_t max_steps)
{
    std::map<Word, QScalar> pending;
    NCElement done;
    add_word(pending, w.letters, w.coeff);
    std::size_t steps = 0;
    while (!pending.empty()) {
        auto it = strategy == RewriteStrategy::LeftmostInnermost ? pending.begin() : std::prev(pending.end());
        Word word = it->first;
        QScalar c = it->second;
        pending.erase(it);
        if (is_sorted_word(word)) {
            NCMonomial m;
            for (Letter l : word)
                m.exp[idx(l)] += 1;
            done.add_term(m, c);
            continue;
        }
        if (++steps > max_steps)
            throw std::runtime_error("rewrite_pairs: step bound exceeded");
        const std::size_t i = find_inversion(word, strategy);
        const Letter hi = word[i];
        const Letter lo = word[i + 1];
        Word swapped = word;
        std::swap(swapped[i], swapped[i + 1]);
        QScalar factor(1);
        if (lo == Letter::V) {
            if (hi == Letter::Minus)
                factor = rules.q_inv;
            else if (hi == Letter::Plus)
                factor = rules.q;
        } else if (lo == Letter::Minus) {
            if (hi == Letter::VBar)
                factor = rules.q;
            else {
                // x+ x- -> x- x+ + lambda v vb
                Word extra = word;
                extra[i] = Letter::V;
                extra[i + 1] = Letter::VBar;
                add_word(pending, std::move(extra), c * rules.lambda);
            }
        } else {
            // vb x+ -> q^{-1} x+ vb
            factor = rules.q_inv;
        }
        add_word(pending, std::move(swapped), c * factor);
    }
    return {std::move(done), steps};
}

NCElement multiply(const NCElement& x, const NCElement& y, const CommutationRules& rules)
{
    NCElement out;
    for (const auto& [my, cy] : y.terms()) {
        const Word w = my.word();
        for (const auto& [mx, cx] : x.terms()) {
            NCElement acc = NCElement::monomial(mx);
            for (Letter l : w) {
                NCElement next;
                for (const auto& [m, c] : acc.terms())
                    next += append_letter(m, l, rules).scaled(c);
                acc = std::move(next);
            }
            out += acc.scaled(cx * cy);
        }
    }
    return out;
}

NCElement omega(const NCElement& x)
{
    NCElement out;
    for (const auto& [m, c] : x.terms()) {
        // reverse of v^a x-^b x+^c vb^d with v <-> vb: v^d x+^c x-^b vb^a
        Word w;
        w.insert(w.end(), static_cast<std::size_t>(m.exp[3]), Letter::V);
        w.insert(w.end(), static_cast<std::size_t>(m.exp[2]), Letter::Plus);
        w.insert(w.end(), static_cast<std::size_t>(m.exp[1]), Letter::Minus);
        w.insert(w.end(), static_cast<std::size_t>(m.exp[0]), Letter::VBar);
        out += normal_order(NCWord{std::move(w), c.omega_conjugate()});
    }
    return out;
}

NCMonomial cone_reduce_monomial(const NCMonomial& m, QScalar& coeff, const CommutationRules& rules)
{
    NCMonomial cur = m;
    while (cur.exp[1] > 0 && cur.exp[2] > 0) {
        // kv^a k-^{b-1} (c kv kvb) k+^{c-1} kvb^d: kv passes k-^{b-1}, kvb passes k+^{c-1}.
        const int b = cur.exp[1];
        const int c = cur.exp[2];
        coeff *= rules.cone_minus_plus * rules.q_inv.pow(b - 1 + c - 1);
        cur.exp = {cur.exp[0] + 1, b - 1, c - 1, cur.exp[3] + 1};
    }
    return cur;
}

NCElement cone_reduce(const NCElement& x, const CommutationRules& rules)
{
    NCElement out;
    for (const auto& [m, c] : x.terms()) {
        QScalar coeff = c;
        NCMonomial r = cone_reduce_monomial(m, coeff, rules);
        out.add_term(r, coeff);
    }
    return out;
}

ConeConsistencyReport cone_check_consistency(const CommutationRules& rules)
{
    const NCElement kvkvb = NCElement::monomial(NCMonomial{{1, 0, 0, 1}});
    ConeConsistencyReport rep;
    rep.minus_plus_form = normal_order(NCWord{{Letter::Minus, Letter::Plus}, 1}, rules) -
                          kvkvb.scaled(rules.cone_minus_plus);
    rep.plus_minus_form = normal_order(NCWord{{Letter::Plus, Letter::Minus}, 1}, rules) -
                          kvkvb.scaled(rules.cone_plus_minus);
    // A principal ideal generated in degree two has a one-dimensional degree-two part, so the
    // two generators define the same ideal exactly when they are proportional.
    const NCMonomial mp{{0, 1, 1, 0}};
    QScalar a = rep.minus_plus_form.coefficient(mp);
    QScalar b = rep.plus_minus_form.coefficient(mp);
    if (a.is_zero()) {
        rep.witness = rep.plus_minus_form;
    } else {
        rep.witness = rep.plus_minus_form - rep.minus_plus_form.scaled(b / a);
    }
    rep.pass = rep.witness.is_zero() && !rep.minus_plus_form.is_zero();
    return rep;
}

// ---------------------------------------------------------------------------

ParsedWord parse_word(std::string_view text)
{
    struct Gen {
        const char* name;
        Letter letter;
        Alphabet alphabet;
    };
    static const std::array<Gen, 8> gens = {{{"v", Letter::V, Alphabet::Coordinates},
                                             {"x-", Letter::Minus, Alphabet::Coordinates},
                                             {"x+", Letter::Plus, Alphabet::Coordinates},
                                             {"vb", Letter::VBar, Alphabet::Coordinates},
                                             {"kv", Letter::V, Alphabet::Momenta},
                                             {"k-", Letter::Minus, Alphabet::Momenta},
                                             {"k+", Letter::Plus, Alphabet::Momenta},
                                             {"kvb", Letter::VBar, Alphabet::Momenta}}};
    ParsedWord out;
    bool seen_alphabet = false;
    std::size_t i = 0;
    auto is_name_char = [](char ch) { return std::islower(static_cast<unsigned char>(ch)) || ch == '+' || ch == '-'; };
    while (i < text.size()) {
        char ch = text[i];
        if (std::isspace(static_cast<unsigned char>(ch)) || ch == '*') {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < text.size() && is_name_char(text[i]))
            ++i;
        std::string_view name = text.substr(start, i - start);
        if (name.empty())
            throw ParseError("parse_word: unexpected character '" + std::string(1, ch) + "' at offset " +
                             std::to_string(start));
        auto g = std::find_if(gens.begin(), gens.end(), [&](const Gen& x) { return name == x.name; });
        if (g == gens.end())
            throw ParseError("parse_word: unknown generator '" + std::string(name) + "'");
        if (seen_alphabet && g->alphabet != out.alphabet)
            throw ParseError("parse_word: coordinates and momenta cannot be mixed in one word");
        out.alphabet = g->alphabet;
        seen_alphabet = true;
        int power = 1;
        if (i < text.size() && text[i] == '^') {
            ++i;
            std::size_t ds = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                ++i;
            if (ds == i)
                throw ParseError("parse_word: expected exponent after '^'");
            power = std::stoi(std::string(text.substr(ds, i - ds)));
        }
        out.word.letters.insert(out.word.letters.end(), static_cast<std::size_t>(power), g->letter);
    }
    return out;
}

} // namespace qweyl
