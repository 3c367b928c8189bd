#include "qweyl/json_io.hpp"

namespace qweyl {

namespace {

Json integer_json(const mpz_class& z)
{
    if (z.fits_slong_p())
        return static_cast<long long>(z.get_si());
    return z.get_str();
}

mpz_class integer_from_json(const Json& j)
{
    if (j.is_number_integer())
        return mpz_class(std::to_string(j.get<long long>()));
    if (j.is_string()) {
        mpz_class z;
        if (z.set_str(j.get<std::string>(), 10) != 0)
            throw ParseError("malformed integer string '" + j.get<std::string>() + "'");
        return z;
    }
    throw ParseError("expected an integer, got " + j.dump());
}

Json laurent_json(const Laurent& l)
{
    Json terms = Json::array();
    for (const auto& t : l.terms()) {
        Json powers = Json::object();
        for (std::size_t v = 0; v < kMaxVars; ++v)
            if (t.exp[v] != 0)
                powers[variable_name(v)] = t.exp[v];
        const mpq_class& re = t.coeff.re();
        const mpq_class& im = t.coeff.im();
        terms.push_back(Json{{"coeff",
                              {integer_json(re.get_num()), integer_json(re.get_den()), integer_json(im.get_num()),
                               integer_json(im.get_den())}},
                             {"powers", powers}});
    }
    return terms;
}

Laurent laurent_from_json(const Json& j)
{
    if (!j.is_array())
        throw ParseError("expected a term list");
    std::vector<Laurent::Term> terms;
    for (const auto& t : j) {
        if (!t.is_object() || !t.contains("coeff") || !t["coeff"].is_array() || t["coeff"].size() != 4)
            throw ParseError("term needs a four-entry coeff array: " + t.dump());
        const auto& c = t["coeff"];
        mpz_class rd = integer_from_json(c[1]), id = integer_from_json(c[3]);
        if (rd == 0 || id == 0)
            throw ParseError("zero denominator in coefficient " + c.dump());
        mpq_class re(integer_from_json(c[0]), rd), im(integer_from_json(c[2]), id);
        re.canonicalize();
        im.canonicalize();
        Laurent::Term term{{}, GaussianRational(re, im)};
        if (t.contains("powers")) {
            if (!t["powers"].is_object())
                throw ParseError("powers must be an object: " + t.dump());
            for (const auto& [name, value] : t["powers"].items()) {
                std::size_t v = kMaxVars;
                for (std::size_t i = 0; i < kMaxVars; ++i)
                    if (variable_name(i) == name)
                        v = i;
                if (v == kMaxVars || !value.is_number_integer())
                    throw ParseError("bad power entry '" + name + "'");
                term.exp[v] = value.get<int>();
            }
        }
        terms.push_back(std::move(term));
    }
    return Laurent::from_terms(std::move(terms));
}

template <std::size_t N>
std::array<int, N> int_array(const Json& j, const char* field)
{
    if (!j.contains(field) || !j[field].is_array() || j[field].size() != N)
        throw ParseError(std::string("field '") + field + "' must be an array of " + std::to_string(N) + " integers");
    std::array<int, N> out{};
    for (std::size_t i = 0; i < N; ++i) {
        if (!j[field][i].is_number_integer())
            throw ParseError(std::string("field '") + field + "' must hold integers");
        out[i] = j[field][i].template get<int>();
    }
    return out;
}

} // namespace

Json to_json(const QScalar& x)
{
    return Json{{"num", laurent_json(x.numerator())}, {"den", laurent_json(x.denominator())}};
}

QScalar qscalar_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        throw ParseError("scalar needs 'num' and 'den'");
    Laurent den = laurent_from_json(j["den"]);
    if (den.is_zero())
        throw ParseError("scalar has a zero denominator");
    return QScalar(laurent_from_json(j["num"]), std::move(den));
}

Json to_json(const RepElement& e)
{
    Json terms = Json::array();
    for (const auto& [key, c] : e.terms())
        terms.push_back(Json{{"coeff", to_json(c)}, {"k", key.k.exp}, {"x", key.x}, {"z", key.z}});
    return Json{{"terms", terms}};
}

RepElement repelement_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
        throw ParseError("element needs a 'terms' array");
    RepElement out;
    for (const auto& t : j["terms"]) {
        if (!t.is_object() || !t.contains("coeff"))
            throw ParseError("term needs 'coeff'");
        RepKey key;
        key.k.exp = int_array<4>(t, "k");
        key.x = int_array<4>(t, "x");
        key.z = int_array<2>(t, "z");
        out.add_term(key, qscalar_from_json(t["coeff"]));
    }
    return out;
}

std::string latex_document(const RepElement& e, int per_line)
{
    std::string body;
    if (e.empty()) {
        body = "  &0";
    } else {
        int count = 0;
        for (const auto& [key, c] : e.terms()) {
            std::string term = RepElement::term(c, key).to_latex();
            const bool negative = !term.empty() && term.front() == '-';
            if (negative)
                term.erase(0, 1);
            if (count == 0)
                body += std::string("  &") + (negative ? "-" : "") + term;
            else if (count % per_line == 0)
                body += std::string(" \\\\\n  &") + (negative ? "- " : "+ ") + term;
            else
                body += (negative ? " - " : " + ") + term;
            ++count;
        }
    }
    return "\\documentclass{article}\n\\usepackage{amsmath}\n\\begin{document}\n\\begin{align*}\n" + body +
           "\n\\end{align*}\n\\end{document}\n";
}

} // namespace qweyl
