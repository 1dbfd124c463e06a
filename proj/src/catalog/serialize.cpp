#include "pvf/serialize.hpp"

#include <sstream>

namespace pvf {

namespace {

const Json& field(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key)) throw Error(std::string("serialized object lacks field '") + key + "'");
    return j.at(key);
}

std::vector<std::string> tokens(const std::string& line)
{
    std::istringstream is(line);
    std::vector<std::string> out;
    for (std::string w; is >> w;) out.push_back(w);
    return out;
}

std::vector<std::string> lines(const std::string& text)
{
    std::istringstream is(text);
    std::vector<std::string> out;
    for (std::string l; std::getline(is, l);)
        if (l.find_first_not_of(" \t\r") != std::string::npos) out.push_back(l);
    return out;
}

long parse_long(const std::string& w)
{
    std::size_t used = 0;
    long v = 0;
    try {
        v = std::stol(w, &used);
    } catch (const std::exception&) {
        throw Error("expected an integer, got '" + w + "'");
    }
    if (used != w.size()) throw Error("expected an integer, got '" + w + "'");
    return v;
}

std::string coeff_list(const std::vector<Rational>& c)
{
    std::string out = "[";
    for (std::size_t i = 0; i < c.size(); ++i) out += (i ? " " : "") + to_string(c[i]);
    return out + "]";
}

Poly poly_from_list(const std::string& text)
{
    auto a = text.find('[');
    auto b = text.find(']');
    if (a == std::string::npos || b == std::string::npos || b < a) throw Error("expected a bracketed coefficient list");
    std::vector<Rational> c;
    for (const auto& w : tokens(text.substr(a + 1, b - a - 1))) c.push_back(parse_rational(w));
    return Poly(c);
}

}  // namespace

Json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j)
{
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw Error("rational must be a string \"p/q\"");
}

Json to_json(const Poly& p)
{
    Json a = Json::array();
    for (const auto& c : p.coeffs()) a.push_back(to_json(c));
    return a;
}

Poly poly_from_json(const Json& j)
{
    if (!j.is_array()) throw Error("polynomial must be a coefficient list");
    std::vector<Rational> c;
    for (const auto& x : j) c.push_back(rational_from_json(x));
    return Poly(c);
}

Json to_json(const RationalFunction& f)
{
    Json j;
    j["numerator_coeffs"] = to_json(f.num());
    j["denominator_coeffs"] = to_json(f.den());
    return j;
}

RationalFunction ratfun_from_json(const Json& j)
{
    Poly den = poly_from_json(field(j, "denominator_coeffs"));
    if (den.is_zero()) throw Error("zero denominator");
    return RationalFunction(poly_from_json(field(j, "numerator_coeffs")), den);
}

Json to_json(const Series& s)
{
    Json j;
    j["variable"] = s.variable();
    j["ramification"] = s.ramification();
    j["base_exponent"] = s.base_exponent();
    Json c = Json::array();
    for (const auto& x : s.coefficients()) c.push_back(to_json(x));
    j["coefficients"] = c;
    if (s.is_exact()) j["valid_order"] = nullptr;
    else j["valid_order"] = s.valid_order();
    return j;
}

Series series_from_json(const Json& j)
{
    std::vector<Rational> c;
    for (const auto& x : field(j, "coefficients")) c.push_back(rational_from_json(x));
    const Json& v = field(j, "valid_order");
    long valid = v.is_null() ? Series::kExact : v.get<long>();
    return Series::from_coeffs(field(j, "variable").get<std::string>(), field(j, "ramification").get<int>(),
                               field(j, "base_exponent").get<long>(), c, valid);
}

Json to_json(const MultiPoly& p)
{
    Json j;
    j["variables"] = p.variables();
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) {
        Json t;
        t["exponents"] = e;
        t["coefficient"] = to_json(c);
        terms.push_back(t);
    }
    j["terms"] = terms;
    return j;
}

MultiPoly multipoly_from_json(const Json& j)
{
    auto vars = field(j, "variables").get<std::vector<std::string>>();
    std::vector<std::pair<MultiPoly::Exponents, Rational>> terms;
    for (const auto& t : field(j, "terms"))
        terms.push_back({field(t, "exponents").get<MultiPoly::Exponents>(), rational_from_json(field(t, "coefficient"))});
    return MultiPoly::from_terms(vars, terms);
}

Json to_json(const MultiFraction& f)
{
    Json j;
    j["numerator"] = to_json(f.num);
    j["denominator"] = to_json(f.den);
    return j;
}

MultiFraction multifraction_from_json(const Json& j)
{
    MultiPoly den = multipoly_from_json(field(j, "denominator"));
    if (den.is_zero()) throw Error("zero denominator");
    return MultiFraction(multipoly_from_json(field(j, "numerator")), den);
}

Json to_json(const DiffOperator& L, bool with_cleared)
{
    Json j;
    j["variable"] = L.variable();
    j["order"] = L.order();
    Json c = Json::array();
    for (const auto& f : L.coefficients()) c.push_back(to_json(f));
    j["coefficients"] = c;
    if (with_cleared) {
        Json cl = Json::array();
        for (const auto& p : L.cleared()) cl.push_back(to_json(p));
        j["cleared"] = cl;
    }
    return j;
}

DiffOperator operator_from_json(const Json& j)
{
    std::vector<RationalFunction> c;
    for (const auto& f : field(j, "coefficients")) c.push_back(ratfun_from_json(f));
    DiffOperator L(field(j, "variable").get<std::string>(), c);
    if (j.contains("order") && j.at("order").get<int>() != L.order())
        throw Error("operator order field does not match its coefficients");
    return L;
}

Json to_json(const EKPolynomial& f)
{
    Json j;
    j["label"] = f.label;
    j["variable"] = f.variable;
    Json mons = Json::array();
    for (const auto& [ij, cf] : f.monomials) {
        Json m;
        m["i"] = ij.first;
        m["j"] = ij.second;
        m["low"] = cf.low;
        Json c = Json::array();
        for (const auto& x : cf.coefficients) c.push_back(to_json(x));
        m["laurent_coefficients"] = c;
        m["sqrt_flag"] = cf.sqrt_factor;
        mons.push_back(m);
    }
    j["monomials"] = mons;
    return j;
}

EKPolynomial ekform_from_json(const Json& j)
{
    EKPolynomial f;
    f.label = j.value("label", std::string());
    f.variable = j.value("variable", std::string("s"));
    for (const auto& m : field(j, "monomials")) {
        CoefficientFunction cf;
        cf.low = field(m, "low").get<long>();
        for (const auto& x : field(m, "laurent_coefficients")) cf.coefficients.push_back(rational_from_json(x));
        cf.sqrt_factor = field(m, "sqrt_flag").get<bool>();
        auto key = std::make_pair(field(m, "i").get<int>(), field(m, "j").get<int>());
        if (key.first < 0 || key.second < 0) throw Error("negative E/K exponent");
        if (!f.monomials.emplace(key, cf).second) throw Error("repeated E/K monomial");
    }
    return f;
}

// ---- text ------------------------------------------------------------------

std::string to_text(const Rational& q) { return to_string(q); }

Rational rational_from_text(const std::string& text) { return parse_rational(text); }

std::string to_text(const Series& s)
{
    std::ostringstream os;
    os << "series " << s.variable() << ' ' << s.ramification() << ' ' << s.base_exponent() << ' ';
    if (s.is_exact()) os << "exact";
    else os << s.valid_order();
    os << " :";
    for (const auto& c : s.coefficients()) os << ' ' << to_string(c);
    return os.str();
}

Series series_from_text(const std::string& text)
{
    auto w = tokens(text);
    if (w.size() < 6 || w[0] != "series" || w[5] != ":") throw Error("malformed series text");
    std::vector<Rational> c;
    for (std::size_t i = 6; i < w.size(); ++i) c.push_back(parse_rational(w[i]));
    long valid = w[4] == "exact" ? Series::kExact : parse_long(w[4]);
    return Series::from_coeffs(w[1], static_cast<int>(parse_long(w[2])), parse_long(w[3]), c, valid);
}

std::string to_text(const MultiPoly& p) { return "multipoly " + p.str(); }

MultiPoly multipoly_from_text(const std::string& text)
{
    const std::string head = "multipoly ";
    if (text.rfind(head, 0) != 0) throw Error("malformed polynomial text");
    return MultiPoly::parse(text.substr(head.size()));
}

std::string to_text(const MultiFraction& f) { return "fraction (" + f.num.str() + ") / (" + f.den.str() + ")"; }

MultiFraction multifraction_from_text(const std::string& text)
{
    const std::string head = "fraction (";
    const std::string mid = ") / (";
    auto m = text.find(mid);
    if (text.rfind(head, 0) != 0 || m == std::string::npos || text.back() != ')') throw Error("malformed fraction text");
    MultiPoly num = MultiPoly::parse(text.substr(head.size(), m - head.size()));
    MultiPoly den = MultiPoly::parse(text.substr(m + mid.size(), text.size() - m - mid.size() - 1));
    if (den.is_zero()) throw Error("zero denominator");
    return MultiFraction(num, den);
}

std::string to_text(const DiffOperator& L)
{
    std::ostringstream os;
    os << "operator " << L.variable() << ' ' << L.order() << '\n';
    for (int i = 0; i <= L.order(); ++i) {
        const auto& f = L.coeff(i);
        os << "D^" << i << ": " << coeff_list(f.num().coeffs()) << " / " << coeff_list(f.den().coeffs()) << '\n';
    }
    return os.str();
}

DiffOperator operator_from_text(const std::string& text)
{
    auto ls = lines(text);
    if (ls.empty()) throw Error("malformed operator text");
    auto head = tokens(ls[0]);
    if (head.size() != 3 || head[0] != "operator") throw Error("malformed operator text");
    const long order = parse_long(head[2]);
    if (static_cast<long>(ls.size()) != order + 2) throw Error("operator text has the wrong number of coefficient lines");
    std::vector<RationalFunction> c;
    for (long i = 0; i <= order; ++i) {
        const std::string& l = ls[static_cast<std::size_t>(i + 1)];
        const std::string tag = "D^" + std::to_string(i) + ":";
        if (l.rfind(tag, 0) != 0) throw Error("expected coefficient line " + tag);
        auto slash = l.find("] / [");
        if (slash == std::string::npos) throw Error("malformed coefficient line " + tag);
        Poly den = poly_from_list(l.substr(slash + 4));
        if (den.is_zero()) throw Error("zero denominator");
        c.push_back(RationalFunction(poly_from_list(l.substr(tag.size(), slash + 1 - tag.size())), den));
    }
    return DiffOperator(head[1], c);
}

std::string to_text(const EKPolynomial& f)
{
    std::ostringstream os;
    os << "ekform " << f.variable << ' ' << f.label << '\n';
    for (const auto& [ij, cf] : f.monomials) {
        os << "E^" << ij.first << " K^" << ij.second << " low " << cf.low << " sqrt " << (cf.sqrt_factor ? 1 : 0) << " :";
        for (const auto& c : cf.coefficients) os << ' ' << to_string(c);
        os << '\n';
    }
    return os.str();
}

EKPolynomial ekform_from_text(const std::string& text)
{
    auto ls = lines(text);
    if (ls.empty() || ls[0].rfind("ekform ", 0) != 0) throw Error("malformed E/K form text");
    EKPolynomial f;
    auto head = tokens(ls[0]);
    if (head.size() < 2) throw Error("malformed E/K form text");
    f.variable = head[1];
    auto lab = ls[0].find(' ', 7);
    f.label = lab == std::string::npos ? "" : ls[0].substr(lab + 1);
    for (std::size_t k = 1; k < ls.size(); ++k) {
        auto w = tokens(ls[k]);
        if (w.size() < 7 || w[0].rfind("E^", 0) != 0 || w[1].rfind("K^", 0) != 0 || w[2] != "low" || w[4] != "sqrt" ||
            w[6] != ":")
            throw Error("malformed E/K monomial line");
        CoefficientFunction cf;
        cf.low = parse_long(w[3]);
        cf.sqrt_factor = parse_long(w[5]) != 0;
        for (std::size_t i = 7; i < w.size(); ++i) cf.coefficients.push_back(parse_rational(w[i]));
        auto key = std::make_pair(static_cast<int>(parse_long(w[0].substr(2))), static_cast<int>(parse_long(w[1].substr(2))));
        if (!f.monomials.emplace(key, cf).second) throw Error("repeated E/K monomial");
    }
    return f;
}

std::uint64_t fnv1a64(const std::string& bytes)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace pvf
