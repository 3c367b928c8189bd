#include "qweyl/driver.hpp"

#include "qweyl/qcombinatorics.hpp"

#include <cctype>
#include <chrono>
#include <cstdlib>
#include <ostream>
#include <stdexcept>

namespace qweyl {

long ParamSampler::integer(long lo, long hi)
{
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(rng_() % span);
}

GaussianRational ParamSampler::gaussian_rational()
{
    const long rn = integer(-9, 9), rd = integer(1, 9);
    const long in = integer(-9, 9), id = integer(1, 9);
    return GaussianRational(mpq_class(rn, rd), mpq_class(in, id));
}

std::array<QScalar, 5> ParamSampler::gammas()
{
    std::array<QScalar, 5> g;
    bool any = false;
    while (!any) {
        for (auto& x : g) {
            x = QScalar(gaussian_rational());
            any = any || !x.is_zero();
        }
    }
    return g;
}

IntPoly ParamSampler::poly(int max_degree, long bound)
{
    IntPoly p;
    const int degree = static_cast<int>(integer(0, max_degree));
    for (int d = 0; d <= degree; ++d)
        p.coeffs.push_back(integer(-bound, bound));
    while (!p.coeffs.empty() && p.coeffs.back() == 0)
        p.coeffs.pop_back();
    return p;
}

// ---------------------------------------------------------------------------

namespace {

mpq_class parse_rational(std::string_view text, std::string_view whole)
{
    if (text.empty())
        return 1;
    const auto slash = text.find('/');
    auto digits = [&](std::string_view d) {
        if (d.empty() || !std::all_of(d.begin(), d.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw ParseError("malformed number '" + std::string(whole) + "'");
        return mpz_class(std::string(d));
    };
    if (slash == std::string_view::npos)
        return mpq_class(digits(text));
    mpz_class den = digits(text.substr(slash + 1));
    if (den == 0)
        throw ParseError("zero denominator in '" + std::string(whole) + "'");
    mpq_class r(digits(text.substr(0, slash)), den);
    r.canonicalize();
    return r;
}

std::string trim(std::string_view s)
{
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c)))
            out += c;
    return out;
}

} // namespace

GaussianRational parse_gaussian_rational(std::string_view raw)
{
    const std::string s = trim(raw);
    if (s.empty())
        throw ParseError("empty number");
    GaussianRational out;
    std::size_t i = 0;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (i != 0) {
            throw ParseError("malformed number '" + s + "'");
        }
        std::size_t j = i;
        while (j < s.size() && s[j] != '+' && s[j] != '-')
            ++j;
        std::string_view part(s.data() + i, j - i);
        if (part.empty())
            throw ParseError("malformed number '" + s + "'");
        const bool imaginary = part.back() == 'i';
        if (imaginary)
            part.remove_suffix(1);
        mpq_class v = parse_rational(part, s) * sign;
        out += imaginary ? GaussianRational(0, v) : GaussianRational(v);
        i = j;
    }
    return out;
}

std::array<QScalar, 5> parse_gammas(std::string_view text)
{
    std::array<QScalar, 5> g;
    std::size_t count = 0, start = 0;
    const std::string s(text);
    while (true) {
        const auto comma = s.find(',', start);
        if (count == 5)
            throw ParseError("expected exactly five gamma coefficients in '" + s + "'");
        g[count++] = QScalar(parse_gaussian_rational(s.substr(start, comma - start)));
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    if (count != 5)
        throw ParseError("expected exactly five gamma coefficients in '" + s + "'");
    return g;
}

ExponentParam parse_shift(std::string_view raw)
{
    const std::string s = trim(raw);
    if (s == "symbolic")
        return ExponentParam::symbolic(1);
    std::size_t pos = 0;
    long v = 0;
    try {
        v = std::stol(s, &pos);
    } catch (const std::exception&) {
        throw ParseError("shift must be an integer or 'symbolic', got '" + s + "'");
    }
    if (pos != s.size())
        throw ParseError("shift must be an integer or 'symbolic', got '" + s + "'");
    return ExponentParam::concrete(v);
}

unsigned default_jobs()
{
    if (const char* env = std::getenv("QWEYL_JOBS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            return static_cast<unsigned>(v);
    }
    return 1;
}

// ---------------------------------------------------------------------------

namespace {

constexpr long kPlusShiftLo = -8, kPlusShiftHi = 2;
constexpr long kMinusShiftLo = -5, kMinusShiftHi = 5;

std::vector<Side> sides_of(SideSelection s)
{
    switch (s) {
    case SideSelection::Plus:
        return {Side::Plus};
    case SideSelection::Minus:
        return {Side::Minus};
    case SideSelection::Both:
        break;
    }
    return {Side::Plus, Side::Minus};
}

Side single_side(SideSelection s)
{
    return s == SideSelection::Minus ? Side::Minus : Side::Plus;
}

void require_s_max(int s_max)
{
    if (s_max < 0)
        throw std::invalid_argument("s-max must be nonnegative");
}

long elapsed_since(std::chrono::steady_clock::time_point start)
{
    return static_cast<long>(
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count());
}

struct RunRecord {
    Json spec;
    std::string label;
    RepElement residual;
    long elapsed_ms = 0;
    bool pass() const { return residual.empty(); }
};

int emit_runs(const std::string& command, Json header, const std::vector<RunRecord>& runs, const RunConfig& cfg,
              std::ostream& out)
{
    bool all = true;
    for (const auto& r : runs)
        all = all && r.pass();
    if (cfg.format == OutputFormat::Json) {
        Json j = {{"command", command}};
        for (auto& [k, v] : header.items())
            j[k] = v;
        Json list = Json::array();
        for (const auto& r : runs)
            list.push_back(Json{{"spec", r.spec},
                                {"residual_term_count", r.residual.size()},
                                {"residual", to_json(r.residual)},
                                {"elapsed_ms", cfg.timing ? r.elapsed_ms : 0},
                                {"pass", r.pass()}});
        j["runs"] = list;
        j["pass"] = all;
        out << j.dump(2) << "\n";
    } else {
        out << command << ":";
        for (auto& [k, v] : header.items())
            out << " " << k << "=" << (v.is_string() ? v.get<std::string>() : v.dump());
        out << "\n";
        for (const auto& r : runs) {
            out << (r.pass() ? "PASS " : "FAIL ") << r.label << " (" << r.residual.size() << " residual terms";
            if (cfg.timing)
                out << ", " << r.elapsed_ms << " ms";
            out << ")\n";
            if (!r.pass() && cfg.format == OutputFormat::Latex)
                out << r.residual.to_latex() << "\n";
        }
        out << (all ? "PASS" : "FAIL") << " overall (" << runs.size() << " runs)\n";
    }
    return all ? kExitPass : kExitResidual;
}

Json gammas_json(const std::array<QScalar, 5>& g)
{
    Json a = Json::array();
    for (const auto& x : g)
        a.push_back(x.to_string());
    return a;
}

} // namespace

std::vector<PhasePoly> dalembert_phases(const RunConfig& cfg)
{
    ParamSampler rng(cfg.seed);
    std::vector<PhasePoly> phases{PhasePoly::zero()};
    for (int d = 0; d < cfg.draws; ++d) {
        IntPoly r = rng.poly();
        phases.push_back(PhasePoly::plus(std::move(r), ExponentParam::concrete(rng.integer(kPlusShiftLo, kPlusShiftHi))));
    }
    for (int d = 0; d < cfg.draws; ++d) {
        const ExponentParam dd = ExponentParam::concrete(rng.integer(kMinusShiftLo, kMinusShiftHi));
        phases.push_back(PhasePoly::minus(dd, rng.poly()));
    }
    return phases;
}

int cmd_verify_dalembert(const RunConfig& cfg, std::ostream& out)
{
    const int s_max = cfg.s_max.value_or(6);
    require_s_max(s_max);
    std::vector<RunRecord> runs;
    for (const auto& phase : dalembert_phases(cfg)) {
        for (int s = 0; s <= s_max; ++s) {
            const auto start = std::chrono::steady_clock::now();
            RunRecord r;
            r.residual = dalembert_residual({s, phase}, cfg.cone, cfg.jobs);
            r.elapsed_ms = elapsed_since(start);
            r.spec = Json{{"s", s}, {"phase", phase.to_string()}};
            r.label = "s=" + std::to_string(s) + " phase=" + phase.to_string();
            runs.push_back(std::move(r));
        }
    }
    Json header = {{"seed", cfg.seed}, {"s_max", s_max}, {"cone", cfg.cone ? "on" : "off"}};
    return emit_runs("verify dalembert", header, runs, cfg, out);
}

std::vector<WeylSolSpec> weyl_specs(const RunConfig& cfg)
{
    const int s_max = cfg.s_max.value_or(3);
    require_s_max(s_max);
    ParamSampler rng(cfg.seed);
    std::vector<ExponentParam> fixed_shifts;
    for (const auto& s : cfg.shifts)
        fixed_shifts.push_back(parse_shift(s));
    const std::optional<IntPoly> fixed_poly = cfg.poly ? std::optional(parse_int_poly(*cfg.poly)) : std::nullopt;
    const std::optional<std::array<QScalar, 5>> fixed_gammas =
        cfg.gammas ? std::optional(parse_gammas(*cfg.gammas)) : std::nullopt;

    std::vector<WeylSolSpec> specs;
    for (Side side : sides_of(cfg.side)) {
        for (int s = 0; s <= s_max; ++s) {
            const int count = fixed_shifts.empty() ? cfg.draws : static_cast<int>(fixed_shifts.size());
            for (int d = 0; d < count; ++d) {
                WeylSolSpec spec;
                spec.side = side;
                spec.s = s;
                if (fixed_shifts.empty())
                    spec.shift = ExponentParam::concrete(side == Side::Plus ? rng.integer(kPlusShiftLo, kPlusShiftHi)
                                                                            : rng.integer(kMinusShiftLo, kMinusShiftHi));
                else
                    spec.shift = fixed_shifts[static_cast<std::size_t>(d)];
                spec.free_poly = fixed_poly ? *fixed_poly : rng.poly();
                spec.gammas = fixed_gammas ? *fixed_gammas : rng.gammas();
                specs.push_back(std::move(spec));
            }
        }
    }
    return specs;
}

int cmd_verify_weyl(const RunConfig& cfg, std::ostream& out)
{
    VerifyOptions opts;
    opts.cone = cfg.cone;
    opts.order = cfg.order;
    opts.jobs = cfg.jobs;
    if (cfg.mutate)
        opts.middle_scale = 2;
    std::vector<RunRecord> runs;
    for (const auto& spec : weyl_specs(cfg)) {
        VerificationReport rep = verify_weyl(spec, opts);
        RunRecord r;
        r.residual = std::move(rep.residual);
        r.elapsed_ms = rep.elapsed_ms;
        r.spec = Json{{"side", side_name(spec.side)},
                      {"s", spec.s},
                      {"shift", spec.shift.to_string()},
                      {"poly", spec.free_poly.to_string(spec.side == Side::Plus ? 'a' : 'b')},
                      {"gammas", gammas_json(spec.gammas)}};
        r.label = spec.to_string();
        runs.push_back(std::move(r));
    }
    Json header = {{"seed", cfg.seed},
                   {"cone", cfg.cone ? "on" : "off"},
                   {"order", order_name(cfg.order)},
                   {"mutated", cfg.mutate}};
    return emit_runs("verify weyl", header, runs, cfg, out);
}

int cmd_verify_classical(const RunConfig& cfg, std::ostream& out)
{
    ClassicalSuiteOptions opts;
    opts.coord_degree = cfg.coord_degree;
    opts.z_degree = cfg.z_degree;
    opts.plane_wave_s_max = cfg.s_max.value_or(6);
    require_s_max(opts.plane_wave_s_max);
    if (opts.coord_degree < 0 || opts.z_degree < 0)
        throw std::invalid_argument("degree bounds must be nonnegative");
    opts.middle_scale = cfg.mutate ? 2 : 1;
    opts.jobs = cfg.jobs;
    opts.phases = dalembert_phases(cfg);
    const auto results = run_classical_suite(opts);
    bool all = true;
    for (const auto& r : results)
        all = all && r.pass;
    if (cfg.format == OutputFormat::Json) {
        Json list = Json::array();
        for (const auto& r : results)
            list.push_back(Json{{"check", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        Json j = {{"command", "verify classical"},
                  {"seed", cfg.seed},
                  {"coord_degree", opts.coord_degree},
                  {"z_degree", opts.z_degree},
                  {"s_max", opts.plane_wave_s_max},
                  {"mutated", cfg.mutate},
                  {"checks", list},
                  {"pass", all}};
        out << j.dump(2) << "\n";
    } else {
        out << "verify classical: seed=" << cfg.seed << " coord_degree=" << opts.coord_degree
            << " z_degree=" << opts.z_degree << " s_max=" << opts.plane_wave_s_max << "\n";
        for (const auto& r : results) {
            out << (r.pass ? "PASS " : "FAIL ") << r.name;
            if (!r.detail.empty())
                out << " [" << r.detail << "]";
            out << "\n";
        }
        out << (all ? "PASS" : "FAIL") << " overall (" << results.size() << " checks)\n";
    }
    return all ? kExitPass : kExitResidual;
}

namespace {

void print_element(const RepElement& e, OutputFormat f, std::ostream& out)
{
    switch (f) {
    case OutputFormat::Text:
        out << e.to_string() << "\n";
        break;
    case OutputFormat::Json:
        out << to_json(e).dump(2) << "\n";
        break;
    case OutputFormat::Latex:
        out << latex_document(e);
        break;
    }
}

} // namespace

int cmd_expand_planewave(const RunConfig& cfg, std::ostream& out)
{
    if (cfg.s < 0)
        throw std::invalid_argument("s must be nonnegative");
    PhasePoly phase;
    if (!cfg.shifts.empty() || cfg.poly) {
        if (cfg.shifts.size() > 1)
            throw std::invalid_argument("expand takes a single shift value");
        const ExponentParam shift = cfg.shifts.empty() ? ExponentParam{} : parse_shift(cfg.shifts.front());
        const IntPoly poly = cfg.poly ? parse_int_poly(*cfg.poly) : IntPoly{};
        phase = single_side(cfg.side) == Side::Plus ? PhasePoly::plus(poly, shift) : PhasePoly::minus(shift, poly);
    }
    print_element(hhat({cfg.s, phase}), cfg.format, out);
    return kExitPass;
}

int cmd_expand_chat(const RunConfig& cfg, std::ostream& out)
{
    if (cfg.s < 0)
        throw std::invalid_argument("s must be nonnegative");
    if (cfg.shifts.size() > 1)
        throw std::invalid_argument("expand takes a single shift value");
    WeylSolSpec spec;
    spec.side = single_side(cfg.side);
    spec.s = cfg.s;
    spec.shift = cfg.shifts.empty() ? ExponentParam{} : parse_shift(cfg.shifts.front());
    spec.free_poly = cfg.poly ? parse_int_poly(*cfg.poly) : IntPoly{};
    spec.gammas = parse_gammas(cfg.gammas.value_or("1,0,0,0,0"));
    print_element(chat(spec, cfg.order), cfg.format, out);
    return kExitPass;
}

int cmd_expand_word(const RunConfig& cfg, const std::string& word, std::ostream& out)
{
    const ParsedWord parsed = parse_word(word);
    const NCElement value = normal_order(parsed.word);
    switch (cfg.format) {
    case OutputFormat::Text:
        out << value.to_string(parsed.alphabet) << "\n";
        break;
    case OutputFormat::Latex:
        out << value.to_latex(parsed.alphabet) << "\n";
        break;
    case OutputFormat::Json: {
        RepElement as_rep;
        for (const auto& [m, c] : value.terms()) {
            RepKey key;
            if (parsed.alphabet == Alphabet::Momenta)
                key.k = m;
            else
                key.x = m.exp;
            as_rep.add_term(key, c);
        }
        out << to_json(as_rep).dump(2) << "\n";
        break;
    }
    }
    return kExitPass;
}

} // namespace qweyl
