#include "qweyl/operators.hpp"

#include "qweyl/qcombinatorics.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <thread>

namespace qweyl {

OperatorExpr OperatorExpr::identity()
{
    OperatorExpr e;
    e.terms_.push_back({QScalar(1), {}});
    return e;
}

OperatorExpr OperatorExpr::generator(GenOp g)
{
    OperatorExpr e;
    e.terms_.push_back({QScalar(1), {g}});
    return e;
}

OperatorExpr OperatorExpr::scaled(const QScalar& c) const
{
    OperatorExpr r;
    if (c.is_zero())
        return r;
    r.terms_ = terms_;
    for (auto& t : r.terms_)
        t.weight *= c;
    return r;
}

OperatorExpr OperatorExpr::pow(int k) const
{
    if (k < 0)
        throw std::domain_error("OperatorExpr::pow: negative exponent");
    OperatorExpr r = identity();
    for (int i = 0; i < k; ++i)
        r = r * *this;
    return r;
}

OperatorExpr& OperatorExpr::operator+=(const OperatorExpr& o)
{
    for (const auto& t : o.terms_)
        if (!t.weight.is_zero())
            terms_.push_back(t);
    return *this;
}

OperatorExpr operator*(const OperatorExpr& a, const OperatorExpr& b)
{
    OperatorExpr r;
    for (const auto& ta : a.terms_) {
        for (const auto& tb : b.terms_) {
            OpTerm t{ta.weight * tb.weight, ta.seq};
            if (t.weight.is_zero())
                continue;
            t.seq.insert(t.seq.end(), tb.seq.begin(), tb.seq.end());
            r.terms_.push_back(std::move(t));
        }
    }
    return r;
}

std::string OperatorExpr::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    for (const auto& t : terms_) {
        if (!out.empty())
            out += " + ";
        std::string w = t.weight.to_string();
        out += t.weight.is_one() ? "" : "(" + w + ")";
        for (const auto& g : t.seq) {
            static const char* kinds[] = {"M", "T", "D"};
            out += std::string(kinds[static_cast<int>(g.kind)]) + "_" + var_name(g.var);
            if (g.kind != GenKind::QDiff && g.power != 1)
                out += "^" + std::to_string(g.power);
            out += " ";
        }
        if (t.seq.empty())
            out += "1";
        else
            out.pop_back();
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

const Laurent& qnum_cached(int n)
{
    static constexpr int kRange = 128;
    static const std::vector<Laurent> table = [] {
        std::vector<Laurent> t;
        t.reserve(2 * kRange + 1);
        for (int k = -kRange; k <= kRange; ++k)
            t.push_back(qnum_laurent(k));
        return t;
    }();
    if (n < -kRange || n > kRange) {
        thread_local Laurent scratch;
        scratch = qnum_laurent(n);
        return scratch;
    }
    return table[static_cast<std::size_t>(n + kRange)];
}

// Runs one generator sequence on a single key. The scalar picked up is q^shift times the
// product of [n]_q over `qnums`. Returns false when the image is zero.
bool run_sequence(const std::vector<GenOp>& seq, RepKey& key, int& shift, std::vector<int>& qnums)
{
    for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
        int& e = key.exponent(it->var);
        switch (it->kind) {
        case GenKind::Shift:
            e += it->power;
            break;
        case GenKind::Scale:
            shift += e * it->power;
            break;
        case GenKind::QDiff:
            if (e == 0)
                return false;
            if (e != 1)
                qnums.push_back(e);
            e -= 1;
            break;
        }
    }
    return true;
}

using Item = std::pair<const RepKey*, const QScalar*>;

// Memoizes weight(term) * prod [n]_q, keyed by the term index followed by the sorted q-numbers.
class FactorCache {
public:
    explicit FactorCache(const OperatorExpr& op) : op_(op) {}

    const Laurent& get(std::size_t term, std::vector<int>& qnums)
    {
        std::sort(qnums.begin(), qnums.end());
        qnums.insert(qnums.begin(), static_cast<int>(term));
        auto it = cache_.find(qnums);
        if (it != cache_.end())
            return it->second;
        Laurent f = op_.terms()[term].weight.numerator();
        for (std::size_t i = 1; i < qnums.size(); ++i)
            f = f * qnum_cached(qnums[i]);
        return cache_.emplace(qnums, std::move(f)).first->second;
    }

private:
    const OperatorExpr& op_;
    std::map<std::vector<int>, Laurent> cache_;
};

Laurent shifted_q(const Laurent& f, int shift)
{
    if (shift == 0)
        return f;
    Exponents by{};
    by[0] = shift;
    return f.shifted(by);
}

void apply_range(const OperatorExpr& op, const std::vector<Item>& items, std::size_t begin, std::size_t end,
                 TermAccumulator& acc)
{
    const bool laurent_weights =
        std::all_of(op.terms().begin(), op.terms().end(), [](const OpTerm& t) { return t.weight.is_laurent(); });
    FactorCache cache(op);
    std::vector<int> qnums;
    for (std::size_t i = begin; i < end; ++i) {
        const RepKey& key0 = *items[i].first;
        const QScalar& c = *items[i].second;
        if (laurent_weights) {
            std::map<RepKey, Laurent> local;
            for (std::size_t ti = 0; ti < op.terms().size(); ++ti) {
                RepKey key = key0;
                int shift = 0;
                qnums.clear();
                if (!run_sequence(op.terms()[ti].seq, key, shift, qnums))
                    continue;
                Laurent factor = shifted_q(cache.get(ti, qnums), shift);
                auto [it, inserted] = local.try_emplace(key, std::move(factor));
                if (!inserted)
                    it->second += factor;
            }
            for (const auto& [key, f] : local)
                acc.add(key, c, f);
        } else {
            for (const auto& t : op.terms()) {
                RepKey key = key0;
                int shift = 0;
                qnums.clear();
                if (!run_sequence(t.seq, key, shift, qnums))
                    continue;
                Laurent factor = Laurent::q_power(shift);
                for (int n : qnums)
                    factor = factor * qnum_cached(n);
                acc.add(key, c * t.weight, factor);
            }
        }
    }
}

} // namespace

RepElement apply_gen(const GenOp& g, const RepElement& e)
{
    return apply(OperatorExpr::generator(g), e);
}

RepElement apply(const OperatorExpr& op, const RepElement& e, unsigned jobs)
{
    std::vector<Item> items;
    items.reserve(e.size());
    for (const auto& [k, c] : e.terms())
        items.emplace_back(&k, &c);
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(items.size())));
    if (jobs <= 1) {
        TermAccumulator acc;
        apply_range(op, items, 0, items.size(), acc);
        return std::move(acc).finish();
    }
    std::vector<TermAccumulator> parts(jobs);
    std::vector<std::thread> workers;
    const std::size_t chunk = (items.size() + jobs - 1) / jobs;
    for (unsigned w = 0; w < jobs; ++w) {
        const std::size_t b = std::min(items.size(), w * chunk);
        const std::size_t en = std::min(items.size(), b + chunk);
        workers.emplace_back([&op, &items, &parts, w, b, en] { apply_range(op, items, b, en, parts[w]); });
    }
    for (auto& t : workers)
        t.join();
    TermAccumulator total;
    for (auto& p : parts)
        total.merge(std::move(p));
    return std::move(total).finish();
}

// ---------------------------------------------------------------------------

namespace {

GenOp M(Var v, int p = 1)
{
    return {GenKind::Shift, v, p};
}
GenOp T(Var v, int p = 1)
{
    return {GenKind::Scale, v, p};
}
GenOp D(Var v)
{
    return {GenKind::QDiff, v, 1};
}

OperatorExpr term(const QScalar& w, std::vector<GenOp> seq)
{
    OperatorExpr e = OperatorExpr::identity().scaled(w);
    for (const auto& x : seq)
        e = e * OperatorExpr::generator(x);
    return e;
}

const QScalar& half()
{
    static const QScalar h(GaussianRational::from_fraction(1, 2));
    return h;
}

OperatorExpr root_pm_composite(const OperatorExpr& a, const OperatorExpr& i2, const QScalar& c1, const QScalar& c2,
                               const QScalar& c3)
{
    const OperatorExpr i2sq = i2 * i2;
    return (a * a * i2sq).scaled(half() * c1) - (a * i2sq * a).scaled(half() * c2) +
           (i2sq * a * a).scaled(half() * c3);
}

} // namespace

OperatorExpr build_qI(int a)
{
    using enum Var;
    switch (a) {
    case 1:
        return term(1, {D(Z), T(Z), T(V), T(Plus), T(Minus, -1), T(VBar, -1)});
    case 2: {
        OperatorExpr inner = term(QScalar::q(), {M(Z), D(V), T(Minus, 2)}) +
                             term(1, {M(Z), M(ZBar), D(Plus), T(Minus), T(VBar), T(V, -1)}) +
                             term(1, {D(Minus), T(Minus)}) + term(QScalar::q_pow(-1), {M(ZBar), D(VBar)}) +
                             term(-QScalar::lambda(), {M(V), M(ZBar), D(Minus), D(Plus), T(VBar)});
        return inner * term(1, {T(VBar), T(ZBar, -1)});
    }
    case 3:
        return term(1, {D(ZBar), T(ZBar)});
    default:
        throw std::invalid_argument("build_qI: index must be 1, 2 or 3");
    }
}

OperatorExpr build_qI_pm(Sign sign, int n, const QScalar& middle_scale)
{
    if (n < 0)
        throw std::invalid_argument("build_qI_pm: n must be nonnegative");
    const OperatorExpr a = build_qI(sign == Sign::Plus ? 1 : 3);
    const QScalar c1 = qnum(n) * qnum(n - 1);
    const QScalar c2 = qnum(2) * qnum(n - 1) * qnum(n + 1) * middle_scale;
    const QScalar c3 = qnum(n) * qnum(n + 1);
    return root_pm_composite(a, build_qI(2), c1, c2, c3);
}

OperatorExpr build_qdal(Basis basis)
{
    using enum Var;
    if (basis == Basis::Hat) {
        OperatorExpr inner = term(QScalar::q(), {D(Minus), D(Plus), T(V), T(VBar)}) - term(1, {D(V), D(VBar)});
        return inner * term(1, {T(V), T(Minus), T(Plus), T(VBar)});
    }
    OperatorExpr inner = term(1, {D(Minus), D(Plus)}) - term(QScalar::q(), {D(V), D(VBar), T(V), T(VBar)});
    return inner * term(1, {T(Minus), T(Plus)});
}

OperatorExpr build_classical_I(int a)
{
    using enum Var;
    switch (a) {
    case 1:
        return OperatorExpr::qdiff(Z);
    case 2:
        return term(1, {M(ZBar), M(Z), D(Plus)}) + term(1, {M(Z), D(V)}) + term(1, {M(ZBar), D(VBar)}) +
               term(1, {D(Minus)});
    case 3:
        return OperatorExpr::qdiff(ZBar);
    default:
        throw std::invalid_argument("build_classical_I: index must be 1, 2 or 3");
    }
}

OperatorExpr build_classical_I_pm_n(Sign sign, int n, long middle_scale)
{
    if (n < 0)
        throw std::invalid_argument("build_classical_I_pm_n: n must be nonnegative");
    const OperatorExpr a = build_classical_I(sign == Sign::Plus ? 1 : 3);
    const long ln = n;
    return root_pm_composite(a, build_classical_I(2), QScalar(ln * (ln - 1)),
                             QScalar(2 * (ln * ln - 1) * middle_scale), QScalar(ln * (ln + 1)));
}

namespace {

// coeff * z^zp * zb^zbp * (derivatives), derivatives applied first.
OperatorExpr diff_term(long coeff, int zp, int zbp, std::vector<Var> derivs)
{
    std::vector<GenOp> seq;
    for (int i = 0; i < zp; ++i)
        seq.push_back(M(Var::Z));
    for (int i = 0; i < zbp; ++i)
        seq.push_back(M(Var::ZBar));
    for (Var v : derivs)
        seq.push_back(D(v));
    return term(QScalar(coeff), std::move(seq));
}

} // namespace

OperatorExpr build_classical_I_pm(Sign sign)
{
    using enum Var;
    // Second-order part in the z (resp. zb) derivative; identical for both signs.
    const Var dz = sign == Sign::Plus ? Z : ZBar;
    OperatorExpr out;
    auto second = [&](long c, int zp, int zbp, std::vector<Var> d) {
        d.push_back(dz);
        d.push_back(dz);
        out += diff_term(c, zp, zbp, std::move(d));
    };
    second(1, 2, 2, {Plus, Plus});
    second(1, 2, 0, {V, V});
    second(1, 0, 2, {VBar, VBar});
    second(1, 0, 0, {Minus, Minus});
    second(2, 2, 1, {V, Plus});
    second(2, 1, 2, {Plus, VBar});
    second(2, 1, 1, {Minus, Plus});
    second(2, 1, 1, {V, VBar});
    second(2, 0, 1, {Minus, VBar});
    second(2, 1, 0, {V, Minus});

    auto first = [&](long c, int zp, int zbp, std::vector<Var> d) {
        d.push_back(dz);
        out += diff_term(-6 * c, zp, zbp, std::move(d));
    };
    auto zeroth = [&](long c, int zp, int zbp, std::vector<Var> d) { out += diff_term(12 * c, zp, zbp, std::move(d)); };
    if (sign == Sign::Plus) {
        first(1, 1, 2, {Plus, Plus});
        first(1, 1, 0, {V, V});
        first(2, 1, 1, {V, Plus});
        first(1, 0, 2, {Plus, VBar});
        first(1, 0, 1, {Minus, Plus});
        first(1, 0, 1, {V, VBar});
        first(1, 0, 0, {V, Minus});
        zeroth(1, 0, 2, {Plus, Plus});
        zeroth(1, 0, 0, {V, V});
        zeroth(2, 0, 1, {V, Plus});
    } else {
        first(1, 2, 1, {Plus, Plus});
        first(1, 0, 1, {VBar, VBar});
        first(2, 1, 1, {Plus, VBar});
        first(1, 2, 0, {V, Plus});
        first(1, 1, 0, {Minus, Plus});
        first(1, 1, 0, {V, VBar});
        first(1, 0, 0, {Minus, VBar});
        zeroth(1, 2, 0, {Plus, Plus});
        zeroth(1, 0, 0, {VBar, VBar});
        zeroth(2, 1, 0, {Plus, VBar});
    }
    return out;
}

OperatorExpr build_box()
{
    using enum Var;
    return term(1, {D(Minus), D(Plus)}) - term(1, {D(V), D(VBar)});
}

OperatorExpr build_q_maxwell(Sign sign, int n)
{
    const OperatorExpr a = build_qI(sign == Sign::Plus ? 1 : 3);
    const OperatorExpr i2 = build_qI(2);
    return (a * i2).scaled(half() * qnum(n + 2)) - (i2 * a).scaled(half() * qnum(n + 3));
}

// ---------------------------------------------------------------------------

namespace {

// Parses "<prefix>(<int>)" after whitespace removal.
bool match_indexed(std::string_view key, std::string_view prefix, int& n)
{
    if (key.size() < prefix.size() + 3 || key.substr(0, prefix.size()) != prefix)
        return false;
    std::string_view rest = key.substr(prefix.size());
    if (rest.front() != '(' || rest.back() != ')')
        return false;
    std::string_view digits = rest.substr(1, rest.size() - 2);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
        return false;
    n = std::stoi(std::string(digits));
    return true;
}

} // namespace

OperatorExpr lookup_operator(std::string_view raw)
{
    std::string key;
    for (char c : raw)
        if (c != ' ')
            key += c;
    if (key == "qI1")
        return build_qI(1);
    if (key == "qI2")
        return build_qI(2);
    if (key == "qI3")
        return build_qI(3);
    if (key == "I1")
        return build_classical_I(1);
    if (key == "I2")
        return build_classical_I(2);
    if (key == "I3")
        return build_classical_I(3);
    if (key == "qdal-hat")
        return build_qdal(Basis::Hat);
    if (key == "qdal-tilde")
        return build_qdal(Basis::Tilde);
    if (key == "I+")
        return build_classical_I_pm(Sign::Plus);
    if (key == "I-")
        return build_classical_I_pm(Sign::Minus);
    if (key == "box")
        return build_box();
    int n = 0;
    if (match_indexed(key, "qI+", n))
        return build_qI_pm(Sign::Plus, n);
    if (match_indexed(key, "qI-", n))
        return build_qI_pm(Sign::Minus, n);
    if (match_indexed(key, "I+", n))
        return build_classical_I_pm_n(Sign::Plus, n);
    if (match_indexed(key, "I-", n))
        return build_classical_I_pm_n(Sign::Minus, n);
    if (match_indexed(key, "qM+", n))
        return build_q_maxwell(Sign::Plus, n);
    if (match_indexed(key, "qM-", n))
        return build_q_maxwell(Sign::Minus, n);
    throw std::invalid_argument("unknown operator key '" + std::string(raw) + "'");
}

std::vector<std::string> operator_registry_keys()
{
    return {"qI1", "qI2", "qI3", "qI+(n)", "qI-(n)", "qdal-hat", "qdal-tilde", "I+",     "I-",
            "I+(n)", "I-(n)", "I1",  "I2",  "I3",     "box",    "qM+(n)",   "qM-(n)"};
}

} // namespace qweyl
