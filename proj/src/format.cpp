#include "biharm/format.hpp"

#include "biharm/error.hpp"

namespace biharm {

namespace {

// Sign-split coefficient: returns false when the coefficient is negative in
// the sense used for " - " separators, and the magnitude text.
struct CoeffText {
    bool negative;
    std::string magnitude;  // empty when the magnitude is exactly 1
    bool needs_parens;      // true for a + b*i with both parts nonzero
};

CoeffText split_coeff(const GaussRat& c) {
    if (c.is_real()) {
        Rational m = abs(c.re());
        return {sgn(c.re()) < 0, m == 1 ? "" : m.get_str(), false};
    }
    if (sgn(c.re()) == 0) {
        Rational m = abs(c.im());
        return {sgn(c.im()) < 0, m == 1 ? "i" : m.get_str() + "*i", false};
    }
    return {false, c.str(), true};
}

std::string latex_rational(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return "\\frac{" + r.get_num().get_str() + "}{" + r.get_den().get_str() + "}";
}

} // namespace

std::string to_string(const Monomial& m) {
    if (m.is_one()) return "1";
    std::string out;
    for (const auto& f : m.factors()) {
        if (!out.empty()) out += "*";
        out += Var::from_key(f.key).name();
        if (f.exp != 1) out += "^" + std::to_string(f.exp);
    }
    return out;
}

std::string to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : p.terms()) {
        CoeffText ct = split_coeff(t.coeff);
        if (first)
            out += ct.negative ? "-" : "";
        else
            out += ct.negative ? " - " : " + ";
        first = false;
        std::string mag = ct.needs_parens ? "(" + ct.magnitude + ")" : ct.magnitude;
        if (t.mono.is_one())
            out += mag.empty() ? "1" : mag;
        else
            out += mag.empty() ? to_string(t.mono) : mag + "*" + to_string(t.mono);
    }
    return out;
}

std::string to_string(const RatFn& f) {
    if (f.den().is_constant() && f.den().constant_value().is_one()) return to_string(f.num());
    return "(" + to_string(f.num()) + ")/(" + to_string(f.den()) + ")";
}

std::string to_latex(const GaussRat& c) {
    if (c.is_zero()) return "0";
    std::string out;
    if (sgn(c.re()) != 0) out = latex_rational(c.re());
    if (sgn(c.im()) != 0) {
        if (sgn(c.im()) > 0 && !out.empty()) out += "+";
        if (c.im() == 1)
            out += "i";
        else if (c.im() == -1)
            out += "-i";
        else
            out += latex_rational(c.im()) + "i";
    }
    return out;
}

std::string to_latex(const Monomial& m) {
    if (m.is_one()) return "1";
    std::string out;
    for (const auto& f : m.factors()) {
        out += Var::from_key(f.key).latex();
        if (f.exp != 1) out += "^{" + std::to_string(f.exp) + "}";
    }
    return out;
}

std::string to_latex(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : p.terms()) {
        CoeffText ct = split_coeff(t.coeff);
        if (first)
            out += ct.negative ? "-" : "";
        else
            out += ct.negative ? "-" : "+";
        first = false;
        std::string mag;
        if (ct.needs_parens) {
            mag = "(" + to_latex(t.coeff) + ")";
        } else if (!ct.magnitude.empty()) {
            GaussRat m = t.coeff.is_real() ? GaussRat(abs(t.coeff.re()))
                                           : GaussRat(Rational(0), abs(t.coeff.im()));
            mag = to_latex(m);
        }
        if (t.mono.is_one())
            out += mag.empty() ? "1" : mag;
        else
            out += mag + to_latex(t.mono);
    }
    return out;
}

std::string to_latex(const RatFn& f) {
    if (f.den().is_constant() && f.den().constant_value().is_one()) return to_latex(f.num());
    return "\\frac{" + to_latex(f.num()) + "}{" + to_latex(f.den()) + "}";
}

Json to_json(const GaussRat& c) { return Json{{"re", c.re().get_str()}, {"im", c.im().get_str()}}; }

Json to_json(const Monomial& m) {
    Json exps = Json::object();
    for (const auto& f : m.factors()) exps[Var::from_key(f.key).name()] = f.exp;
    return exps;
}

Json to_json(const Poly& p) {
    Json terms = Json::array();
    for (const auto& t : p.terms()) terms.push_back(Json{{"exps", to_json(t.mono)}, {"coeff", to_json(t.coeff)}});
    return Json{{"terms", terms}};
}

Json to_json(const RatFn& f) { return Json{{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

GaussRat gauss_from_json(const Json& j) {
    Rational re(j.at("re").get<std::string>());
    Rational im(j.at("im").get<std::string>());
    if (re.get_den() == 0 || im.get_den() == 0) throw DivisionByZero("zero denominator in JSON coefficient");
    return GaussRat(re, im);
}

Poly poly_from_json(const Json& j) {
    std::vector<Term> terms;
    for (const auto& t : j.at("terms")) {
        Monomial m;
        for (const auto& [name, e] : t.at("exps").items()) {
            auto v = Var::parse(name);
            if (!v) throw Error("unknown variable '" + name + "' in JSON polynomial");
            m = m * Monomial(*v, e.get<std::uint32_t>());
        }
        terms.push_back({m, gauss_from_json(t.at("coeff"))});
    }
    return Poly::from_terms(std::move(terms));
}

RatFn ratfn_from_json(const Json& j) { return RatFn(poly_from_json(j.at("num")), poly_from_json(j.at("den"))); }

} // namespace biharm
