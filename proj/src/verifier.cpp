#include "biharm/verifier.hpp"

#include "biharm/error.hpp"
#include "biharm/parser.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace biharm {

namespace {

const Var S = Var::aux(AuxName::s);
const Var T = Var::aux(AuxName::t);
const Var A = Var::aux(AuxName::a);
const Var B = Var::aux(AuxName::b);

std::string relation_set_key(const Poly& d) {
    if (d.is_zero()) return "0";
    return to_string(d.primitive().second);
}

std::set<std::string> relation_keys(const std::vector<Relation>& rels) {
    std::set<std::string> out;
    for (const auto& r : rels) out.insert(relation_set_key(r.difference()));
    return out;
}

std::string pq_row(unsigned n, unsigned k) {
    std::ostringstream os;
    unsigned e = n + 1 - k;
    os << "p" << k << "*q" << n + 1 << "^" << e << " = q" << n << "^" << n - k << "*(" << e << "*p" << n << "*q"
       << n + 1 << " - " << n - k << "*p" << n + 1 << "*q" << n << ")";
    return os.str();
}

std::string q_row(unsigned n, unsigned k) {
    std::ostringstream os;
    os << "q" << k << "*q" << n + 1 << "^" << n - k << " = q" << n << "^" << n + 1 - k;
    return os.str();
}

Json rational_json(const Rational& r) { return r.get_str(); }

} // namespace

Poly det_u2() { return parse_poly("z11*z22 - z12*z21"); }

// ---------------------------------------------------------------- conditions

Poly ConditionSystem::expand() const {
    PolyBuilder acc;
    for (std::size_t i = 0; i < conditions.size(); ++i) acc.add(conditions[i].mul_monomial(provenance[i]));
    return acc.build();
}

Json ConditionSystem::to_json() const {
    Json j;
    j["n"] = n;
    j["alpha"] = alpha;
    j["beta"] = beta;
    j["det_power"] = det_power;
    j["q_power"] = q_power;
    j["removed_constant"] = removed_constant.str();
    Json list = Json::array();
    for (std::size_t i = 0; i < conditions.size(); ++i) {
        Json c;
        c["monomial"] = to_string(provenance[i]);
        c["condition"] = to_string(conditions[i]);
        c["latex"] = to_latex(conditions[i]);
        list.push_back(std::move(c));
    }
    j["conditions"] = std::move(list);
    return j;
}

ConditionSystem collect_conditions(const Poly& numerator) {
    ConditionSystem cs;
    if (numerator.is_zero()) return cs;
    auto [k, rest] = strip_factor(numerator, det_u2());
    cs.det_power = k;
    auto [c, prim] = rest.primitive();
    cs.removed_constant = c;
    cs.reduced_numerator = prim;
    for (auto& [mono, coeff] : collect_by_block(prim, Kind::Z)) {
        cs.provenance.push_back(mono);
        cs.conditions.push_back(std::move(coeff));
    }
    return cs;
}

ConditionSystem extract_conditions(unsigned n, unsigned alpha, unsigned beta, std::size_t budget_terms) {
    if (alpha == beta) throw Error("extract_conditions needs alpha != beta");
    auto pq = build_P_Q(n, symbolic_coefficients(Kind::P, n + 1), symbolic_coefficients(Kind::Q, n + 1), alpha,
                        beta);
    GroupContext u2(2);
    PowerQuotientRule rule(tension_operator(u2), pq.Q, budget_terms);
    PowerFrac t1 = rule(PowerFrac{pq.P, pq.Q, 1}).reduced();
    PowerFrac t2 = rule(t1).reduced();
    ConditionSystem cs = collect_conditions(t2.num);
    cs.n = n;
    cs.alpha = alpha;
    cs.beta = beta;
    cs.q_power = t2.exp;
    return cs;
}

// ----------------------------------------------------------------- relations

Relation parse_relation(const std::string& text) {
    auto eq = text.find('=');
    if (eq == std::string::npos || text.find('=', eq + 1) != std::string::npos)
        throw ParseError("relation needs exactly one '='", eq == std::string::npos ? text.size() : eq);
    return Relation{text, parse_poly(text.substr(0, eq)), parse_poly(text.substr(eq + 1))};
}

std::vector<Relation> theorem_relations(unsigned n) {
    static const std::map<unsigned, std::vector<const char*>> table{
        {2, {"p1*q3^2 = q2*(2*p2*q3 - p3*q2)", "q1*q3 = q2^2"}},
        {3,
         {"p1*q4^3 = q3^2*(3*p3*q4 - 2*p4*q3)", "q1*q4^2 = q3^3", "p2*q4^2 = q3*(2*p3*q4 - p4*q3)",
          "q2*q4 = q3^2"}},
        {4,
         {"p1*q5^4 = q4^3*(4*p4*q5 - 3*p5*q4)", "q1*q5^3 = q4^4", "p2*q5^3 = q4^2*(3*p4*q5 - 2*p5*q4)",
          "q2*q5^2 = q4^3", "p3*q5^2 = q4*(2*p4*q5 - p5*q4)", "q3*q5 = q4^2"}},
    };
    auto it = table.find(n);
    if (it == table.end()) throw Error("no proven relations for n = " + std::to_string(n));
    std::vector<Relation> out;
    for (const char* s : it->second) out.push_back(parse_relation(s));
    return out;
}

std::vector<Relation> conjecture_relations(unsigned n, bool literal_last_line) {
    if (n < 2) throw Error("conjecture needs n >= 2");
    std::vector<Relation> out;
    for (unsigned k = 1; k + 1 <= n; ++k) {
        out.push_back(parse_relation(pq_row(n, k)));
        bool literal_row = literal_last_line && k == n - 1;
        // For n = 2 the first displayed line is also the last one, so its
        // q-part is kept alongside the literal reading.
        if (!literal_row || k == 1) out.push_back(parse_relation(q_row(n, k)));
        if (literal_row) {
            std::ostringstream os;
            os << "p" << n - 1 << "*q" << n + 1 << " = q" << n << "^2";
            out.push_back(parse_relation(os.str()));
        }
    }
    return out;
}

// ------------------------------------------------------------------ families

std::map<Var, Poly> Family::images() const {
    std::map<Var, Poly> m;
    for (unsigned k = 1; k <= n + 1; ++k) {
        m.emplace(Var::p(k), p[k - 1]);
        m.emplace(Var::q(k), q[k - 1]);
    }
    return m;
}

void Family::check_relations() const {
    auto im = images();
    for (const auto& r : relations) {
        Poly d = r.difference().substitute(im);
        if (!d.is_zero())
            throw Error("family '" + name + "' does not satisfy " + r.text + " (residual " + to_string(d) + ")");
    }
}

Family parameterized_family(unsigned n, std::string name, std::vector<Relation> relations) {
    if (n < 1) throw IndexError("family needs n >= 1");
    Family f;
    f.name = std::move(name);
    f.n = n;
    f.parameters = {S, T, A, B};
    Poly s(S), t(T), a(A), b(B);
    for (unsigned k = 1; k <= n + 1; ++k) f.q.push_back(s.pow(n + 1 - k) * t.pow(k - 1));
    for (unsigned k = 1; k <= n; ++k)
        f.p.push_back(s.pow(n - k) * t.pow(k - 1) *
                      (a * t * GaussRat(static_cast<long>(n + 1 - k)) - b * s * GaussRat(static_cast<long>(n - k))));
    f.p.push_back(b * t.pow(n));
    f.pivot = f.p[n - 1] * f.q[n] - f.p[n] * f.q[n - 1];
    f.relations = std::move(relations);
    // q_k q_{n+1}^(n-k) = q_n^(n+1-k) for every k.
    for (unsigned k = 1; k <= n; ++k)
        if (f.q[k - 1] * f.q[n].pow(n - k) != f.q[n - 1].pow(n + 1 - k))
            throw Error("q-parameterization check failed");
    if (*f.pivot != t.pow(2 * n - 1) * (a * t - b * s)) throw Error("pivot shape check failed");
    f.check_relations();
    return f;
}

Family theorem_family(unsigned n) {
    return parameterized_family(n, "theorem-pi" + std::to_string(n), theorem_relations(n));
}

Family conjecture_family(unsigned n) {
    return parameterized_family(n, "conjecture-pi" + std::to_string(n), conjecture_relations(n));
}

Family symbolic_family(unsigned n) {
    Family f;
    f.name = "symbolic-pi" + std::to_string(n);
    f.n = n;
    f.p = symbolic_coefficients(Kind::P, n + 1);
    f.q = symbolic_coefficients(Kind::Q, n + 1);
    for (unsigned k = 1; k <= n + 1; ++k) f.parameters.push_back(Var::p(k));
    for (unsigned k = 1; k <= n + 1; ++k) f.parameters.push_back(Var::q(k));
    return f;
}

Family concrete_family(unsigned n, const std::vector<GaussRat>& p, const std::vector<GaussRat>& q) {
    if (p.size() != n + 1 || q.size() != n + 1)
        throw IndexError("expected " + std::to_string(n + 1) + " coefficients for p and q");
    Family f;
    f.name = "concrete-pi" + std::to_string(n);
    f.n = n;
    f.p = concrete_coefficients(p);
    f.q = concrete_coefficients(q);
    f.pivot = f.p[n - 1] * f.q[n] - f.p[n] * f.q[n - 1];
    return f;
}

Json ReadingReport::to_json() const {
    Json j;
    j["n"] = n;
    j["pattern_matches_theorem"] = pattern_matches_theorem;
    j["literal_matches_theorem"] = literal_matches_theorem;
    j["literal_holds_on_family"] = literal_holds_on_family;
    j["literal_extra"] = literal_extra;
    return j;
}

ReadingReport compare_readings(unsigned n) {
    ReadingReport r;
    r.n = n;
    auto proven = relation_keys(theorem_relations(n));
    r.pattern_matches_theorem = relation_keys(conjecture_relations(n, false)) == proven;
    auto literal = conjecture_relations(n, true);
    r.literal_matches_theorem = relation_keys(literal) == proven;
    Family fam = parameterized_family(n, "reading", {});
    auto im = fam.images();
    r.literal_holds_on_family = true;
    for (const auto& rel : literal) {
        if (!proven.count(relation_set_key(rel.difference()))) r.literal_extra.push_back(rel.text);
        if (!rel.difference().substitute(im).is_zero()) r.literal_holds_on_family = false;
    }
    return r;
}

// ------------------------------------------------------------------- points

GroupPoint su2_point(const std::vector<Rational>& x) {
    if (x.size() != 4) throw IndexError("an S^3 point has four coordinates");
    Rational norm = x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3];
    if (norm != 1) throw Error("point is not on the unit sphere");
    GroupPoint g;
    g.x = x;
    g.z[Var::z(1, 1)] = GaussRat(x[0], x[1]);
    g.z[Var::z(1, 2)] = GaussRat(x[2], x[3]);
    g.z[Var::z(2, 1)] = GaussRat(Rational(-x[2]), x[3]);
    g.z[Var::z(2, 2)] = GaussRat(x[0], Rational(-x[1]));
    return g;
}

std::vector<GroupPoint> su2_points(std::size_t count) {
    static const std::vector<Rational> values{Rational(1, 2), Rational(1), Rational(-1), Rational(2),
                                              Rational(1, 3), Rational(-2), Rational(3)};
    std::vector<GroupPoint> out;
    std::set<std::vector<Rational>> seen;
    for (const auto& u1 : values)
        for (const auto& u2 : values)
            for (const auto& u3 : values) {
                if (out.size() >= count) return out;
                Rational r = u1 * u1 + u2 * u2 + u3 * u3;
                Rational d = r + 1;
                std::vector<Rational> x{Rational(2 * u1 / d), Rational(2 * u2 / d), Rational(2 * u3 / d),
                                        Rational((r - 1) / d)};
                if (seen.insert(x).second) out.push_back(su2_point(x));
            }
    return out;
}

// ----------------------------------------------------------------- witness

Json Witness::to_json() const {
    Json j;
    Json params = Json::object();
    for (const auto& [v, c] : parameters) params[v.name()] = c.str();
    j["parameters"] = std::move(params);
    Json x = Json::array();
    for (const auto& c : point.x) x.push_back(rational_json(c));
    j["x"] = std::move(x);
    Json z = Json::object();
    for (const auto& [v, c] : point.z) z[v.name()] = c.str();
    j["z"] = std::move(z);
    j["Q"] = q_value.str();
    j["tension"] = tension_value.str();
    return j;
}

std::optional<Witness> properness_witness(const Family& family, const PowerFrac& tension, std::size_t max_points) {
    if (tension.num.is_zero()) return std::nullopt;
    static const std::vector<long> values{1, 2, -1, 3, -2};
    auto points = su2_points(max_points);
    std::size_t instances = family.parameters.empty() ? 1 : 8;
    for (std::size_t k = 0; k < instances; ++k) {
        std::map<Var, GaussRat> params;
        for (std::size_t j = 0; j < family.parameters.size(); ++j)
            params[family.parameters[j]] = GaussRat(values[(k + 3 * j) % values.size()]);
        if (family.pivot && family.pivot->evaluate(params).is_zero()) continue;
        Poly num = tension.num.evaluate(params);
        Poly base = tension.base.evaluate(params);
        if (num.is_zero() || base.is_zero()) continue;
        for (const auto& pt : points) {
            GaussRat qv = base.evaluate(pt.z).constant_value();
            if (qv.is_zero()) continue;
            GaussRat nv = num.evaluate(pt.z).constant_value();
            if (nv.is_zero()) continue;
            return Witness{params, pt, qv, nv / qv.pow(tension.exp)};
        }
    }
    return std::nullopt;
}

// ----------------------------------------------------------------- verdicts

const char* to_string(Status s) {
    switch (s) {
    case Status::Verified: return "verified";
    case Status::Refuted: return "refuted";
    case Status::NotProper: return "not-proper";
    case Status::Aborted: return "aborted";
    }
    return "?";
}

const char* to_string(Proper p) {
    switch (p) {
    case Proper::Yes: return "yes";
    case Proper::No: return "no";
    case Proper::Unknown: return "unknown";
    }
    return "?";
}

int Verdict::exit_code() const {
    switch (status) {
    case Status::Verified: return 0;
    case Status::Refuted:
    case Status::NotProper: return 1;
    case Status::Aborted: return 2;
    }
    return 2;
}

namespace {

Json frac_json(const PowerFrac& f, const AnalysisOptions& opts, bool latex) {
    Json j;
    j["zero"] = f.num.is_zero();
    j["terms"] = f.num.size();
    if (f.num.size() <= opts.print_limit) {
        j["numerator"] = to_string(f.num);
        if (latex) j["numerator_latex"] = to_latex(f.num);
    }
    j["base"] = to_string(f.base);
    j["exponent"] = f.exp;
    return j;
}

} // namespace

Json Verdict::certificate(const Family& fam, const AnalysisOptions& opts) const {
    Json j;
    j["engine"] = "biharm";
    j["version"] = BIHARM_VERSION;
    Json in;
    in["family"] = family;
    in["n"] = n;
    in["alpha"] = alpha;
    in["beta"] = beta;
    in["budget_terms"] = opts.budget_terms;
    j["inputs"] = std::move(in);

    Json fj;
    Json params = Json::array();
    for (const auto& v : fam.parameters) params.push_back(v.name());
    fj["parameters"] = std::move(params);
    Json subs = Json::object();
    for (unsigned k = 1; k <= fam.n + 1; ++k) subs["p" + std::to_string(k)] = to_string(fam.p[k - 1]);
    for (unsigned k = 1; k <= fam.n + 1; ++k) subs["q" + std::to_string(k)] = to_string(fam.q[k - 1]);
    fj["substitutions"] = std::move(subs);
    Json rels = Json::array();
    for (const auto& r : fam.relations) rels.push_back(r.text);
    fj["relations"] = std::move(rels);
    fj["relations_hold_identically"] = true;
    if (fam.pivot) fj["pivot"] = to_string(*fam.pivot);
    j["family"] = std::move(fj);

    if (pq.P.size() <= opts.print_limit) j["P"] = to_string(pq.P);
    if (pq.Q.size() <= opts.print_limit) j["Q"] = to_string(pq.Q);
    if (status != Status::Aborted || abort_stage != "tension") j["tension"] = frac_json(tension, opts, true);
    if (status != Status::Aborted) j["bitension"] = frac_json(bitension, opts, false);

    Json v;
    v["status"] = to_string(status);
    v["biharmonic"] = biharmonic;
    v["harmonic"] = harmonic;
    v["proper"] = to_string(proper);
    if (!abort_stage.empty()) v["aborted_at"] = abort_stage;
    if (!note.empty()) v["note"] = note;
    j["verdict"] = std::move(v);
    if (witness) j["witness"] = witness->to_json();
    if (obstruction) {
        Json o;
        o["monomial"] = to_string(obstruction->first);
        o["condition"] = to_string(obstruction->second);
        j["obstruction"] = std::move(o);
    }
    return j;
}

Verdict analyze(const Family& family, unsigned alpha, unsigned beta, const AnalysisOptions& opts) {
    Verdict v;
    v.family = family.name;
    v.n = family.n;
    v.alpha = alpha;
    v.beta = beta;
    v.pq = build_P_Q(family.n, family.p, family.q, alpha, beta);
    if (v.pq.Q.is_zero()) throw DivisionByZero("Q vanishes identically");
    if (family.pivot && family.pivot->is_zero()) throw Error("pivot vanishes identically");
    GroupContext u2(2);
    PowerQuotientRule rule(tension_operator(u2), v.pq.Q, opts.budget_terms);
    try {
        v.abort_stage = "tension";
        v.tension = rule(PowerFrac{v.pq.P, v.pq.Q, 1}).reduced();
        v.abort_stage = "bitension";
        v.bitension = rule(v.tension).reduced();
        v.abort_stage.clear();
    } catch (const BudgetExceeded& e) {
        v.status = Status::Aborted;
        v.note = e.what();
        return v;
    }
    v.harmonic = v.tension.num.is_zero();
    v.biharmonic = v.bitension.num.is_zero();
    if (!v.biharmonic) {
        v.status = Status::Refuted;
        v.proper = Proper::No;
        v.obstruction = collect_by_block(v.bitension.num, Kind::Z).front();
        return v;
    }
    if (v.harmonic) {
        v.status = Status::NotProper;
        v.proper = Proper::No;
        v.note = "tension vanishes identically";
        return v;
    }
    v.witness = properness_witness(family, v.tension);
    if (v.witness) {
        v.proper = Proper::Yes;
        v.status = Status::Verified;
    } else {
        v.proper = Proper::Unknown;
        v.status = Status::Aborted;
        v.note = "no witness found";
    }
    return v;
}

Verdict verify_theorem(unsigned n, unsigned alpha, unsigned beta, const AnalysisOptions& opts) {
    return analyze(theorem_family(n), alpha, beta, opts);
}

Verdict check_conjecture(unsigned n, unsigned alpha, unsigned beta, const AnalysisOptions& opts) {
    return analyze(conjecture_family(n), alpha, beta, opts);
}

std::vector<std::pair<unsigned, unsigned>> ordered_pairs(unsigned n) {
    std::vector<std::pair<unsigned, unsigned>> out;
    for (unsigned a = 1; a <= n + 1; ++a)
        for (unsigned b = 1; b <= n + 1; ++b)
            if (a != b) out.emplace_back(a, b);
    return out;
}

} // namespace biharm
