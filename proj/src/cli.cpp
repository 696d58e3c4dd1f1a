#include "biharm/cli.hpp"

#include "biharm/error.hpp"
#include "biharm/euclidean.hpp"
#include "biharm/parser.hpp"
#include "biharm/verifier.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>

namespace biharm {

namespace {

struct Options {
    unsigned n = 0;
    unsigned alpha = 0;
    unsigned beta = 0;
    unsigned n_group = 2;
    std::string p, q;
    std::string params = "1,2,1,-1";
    std::string family;
    std::string expr, expr2;
    bool symbolic = false;
    bool json = false;
    bool latex = false;
    bool all_pairs = false;
    std::size_t budget = 0;
    std::size_t samples = 5;
};

std::vector<GaussRat> parse_values(const std::string& list) {
    std::vector<GaussRat> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(GaussRat::parse(item));
    return out;
}

std::string frac_text(const PowerFrac& f) {
    if (f.num.is_zero()) return "0";
    if (f.exp == 0) return to_string(f.num);
    std::string s = "(" + to_string(f.num) + ")/(" + to_string(f.base) + ")";
    if (f.exp > 1) s += "^" + std::to_string(f.exp);
    return s;
}

std::string frac_latex(const PowerFrac& f) {
    if (f.num.is_zero()) return "0";
    if (f.exp == 0) return to_latex(f.num);
    std::string den = "(" + to_latex(f.base) + ")";
    if (f.exp > 1) den += "^{" + std::to_string(f.exp) + "}";
    return "\\frac{" + to_latex(f.num) + "}{" + den + "}";
}

// "pi2:1,3" -> (2, 1, 3)
std::tuple<unsigned, unsigned, unsigned> parse_family(const std::string& spec) {
    unsigned n = 0, a = 0, b = 0;
    char c1 = 0;
    std::istringstream is(spec);
    if (spec.rfind("pi", 0) != 0) throw ParseError("family must look like pi<n>:<alpha>,<beta>", 0);
    is.ignore(2);
    if (!(is >> n >> c1 >> a) || c1 != ':') throw ParseError("family must look like pi<n>:<alpha>,<beta>", 0);
    char c2 = 0;
    if (!(is >> c2 >> b) || c2 != ',') throw ParseError("family must look like pi<n>:<alpha>,<beta>", 0);
    if (a == b || a < 1 || b < 1 || a > n + 1 || b > n + 1) throw IndexError("family needs 1 <= alpha != beta <= n+1");
    return {n, a, b};
}

Family family_for(unsigned n) { return (n >= 2 && n <= 4) ? theorem_family(n) : n == 1 ? symbolic_family(1) : conjecture_family(n); }

std::map<Var, GaussRat> parameter_values(const Family& fam, const std::string& list) {
    auto vals = parse_values(list);
    if (vals.size() != fam.parameters.size())
        throw IndexError("expected " + std::to_string(fam.parameters.size()) + " parameter values");
    std::map<Var, GaussRat> m;
    for (std::size_t k = 0; k < vals.size(); ++k) m[fam.parameters[k]] = vals[k];
    if (fam.pivot && fam.pivot->evaluate(m).is_zero()) throw Error("parameter values make the pivot vanish");
    return m;
}

RatFn family_function(const Family& fam, unsigned a, unsigned b) {
    auto pq = build_P_Q(fam.n, fam.p, fam.q, a, b);
    return RatFn(pq.P, pq.Q);
}

void print_verdict(std::ostream& out, const Verdict& v, const Family& fam, const AnalysisOptions& opts, bool latex) {
    out << "family: " << v.family << " (n=" << v.n << ", alpha=" << v.alpha << ", beta=" << v.beta << ")\n";
    for (const auto& r : fam.relations) out << "relation: " << r.text << "\n";
    if (fam.pivot) out << "pivot: " << to_string(*fam.pivot) << " != 0\n";
    if (v.pq.P.size() <= opts.print_limit) out << "P = " << to_string(v.pq.P) << "\n";
    if (v.pq.Q.size() <= opts.print_limit) out << "Q = " << to_string(v.pq.Q) << "\n";
    if (v.status == Status::Aborted && !v.abort_stage.empty()) {
        out << "aborted during " << v.abort_stage << ": " << v.note << "\n";
        out << "verdict: aborted\n";
        return;
    }
    if (v.tension.num.size() <= opts.print_limit)
        out << "tau(f) = " << (latex ? frac_latex(v.tension) : frac_text(v.tension)) << "\n";
    else
        out << "tau(f): " << v.tension.num.size() << " terms over (Q)^" << v.tension.exp << "\n";
    out << "bitension numerator: " << (v.biharmonic ? "0" : std::to_string(v.bitension.num.size()) + " terms")
        << "\n";
    if (v.obstruction)
        out << "first condition [" << to_string(v.obstruction->first) << "]: " << to_string(v.obstruction->second)
            << "\n";
    if (v.witness) {
        out << "witness:";
        for (const auto& [var, c] : v.witness->parameters) out << " " << var.name() << "=" << c.str();
        out << " x=(";
        for (std::size_t k = 0; k < v.witness->point.x.size(); ++k)
            out << (k ? "," : "") << v.witness->point.x[k].get_str();
        out << ") tau=" << v.witness->tension_value.str() << "\n";
    }
    out << "verdict: " << to_string(v.status) << " (biharmonic=" << (v.biharmonic ? "yes" : "no")
        << ", proper=" << to_string(v.proper) << ")\n";
    if (!v.note.empty()) out << "note: " << v.note << "\n";
}

int cmd_rep(const Options& o, std::ostream& out) {
    if (o.n < 1) throw IndexError("rep needs n >= 1");
    RepMatrix rep = build_rep(o.n);
    if (o.json) {
        Json j;
        j["n"] = o.n;
        Json rows = Json::array();
        for (const auto& row : rep.rows()) {
            Json r = Json::array();
            for (const auto& e : row) r.push_back(to_string(e));
            rows.push_back(std::move(r));
        }
        j["entries"] = std::move(rows);
        out << j.dump(2) << "\n";
    } else if (o.latex) {
        out << "\\pi^{" << o.n << "}=\\begin{pmatrix}\n";
        for (unsigned j = 1; j <= rep.dim(); ++j) {
            for (unsigned a = 1; a <= rep.dim(); ++a) out << (a > 1 ? " & " : "") << to_latex(rep.at(j, a));
            out << (j < rep.dim() ? " \\\\\n" : "\n");
        }
        out << "\\end{pmatrix}\n";
    } else {
        for (unsigned j = 1; j <= rep.dim(); ++j) {
            out << "[";
            for (unsigned a = 1; a <= rep.dim(); ++a) out << (a > 1 ? ", " : "") << to_string(rep.at(j, a));
            out << "]\n";
        }
    }
    return 0;
}

int cmd_tension(const Options& o, std::ostream& out) {
    GroupContext ctx(o.n_group);
    RatFn f = parse_expr(o.expr);
    PowerFrac t;
    if (f.is_polynomial()) {
        f = f.fold_constant_den();
        t = PowerFrac{tau(ctx, f.num()), Poly(1), 0};
    } else {
        PowerQuotientRule rule(tension_operator(ctx), f.den(), o.budget);
        t = rule(PowerFrac{f.num(), f.den(), 1}).reduced();
    }
    if (o.json) {
        Json j;
        j["input"] = to_json(f);
        j["n_group"] = o.n_group;
        j["tension"] = to_json(t.to_ratfn());
        j["text"] = frac_text(t);
        out << j.dump(2) << "\n";
    } else {
        out << (o.latex ? frac_latex(t) : frac_text(t)) << "\n";
    }
    return 0;
}

int cmd_kappa(const Options& o, std::ostream& out) {
    GroupContext ctx(o.n_group);
    RatFn f = parse_expr(o.expr).fold_constant_den(), h = parse_expr(o.expr2).fold_constant_den();
    RatFn k = (f.is_polynomial() && h.is_polynomial()) ? RatFn(kappa(ctx, f.num(), h.num()))
                                                       : kappa_ratfn(ctx, f, h);
    if (o.json) {
        Json j;
        j["n_group"] = o.n_group;
        j["kappa"] = to_json(k);
        j["text"] = k.is_polynomial() ? to_string(k.num()) : to_string(k);
        out << j.dump(2) << "\n";
    } else if (o.latex) {
        out << (k.is_polynomial() ? to_latex(k.num()) : to_latex(k)) << "\n";
    } else {
        out << (k.is_polynomial() ? to_string(k.num()) : to_string(k)) << "\n";
    }
    return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
    if (o.alpha < 1 || o.beta < 1) throw IndexError("verify needs --alpha and --beta");
    AnalysisOptions opts;
    opts.budget_terms = o.budget;
    Family fam;
    if (!o.p.empty() || !o.q.empty())
        fam = concrete_family(o.n, parse_values(o.p), parse_values(o.q));
    else
        fam = family_for(o.n);
    Verdict v = analyze(fam, o.alpha, o.beta, opts);
    std::optional<ConditionSystem> cs;
    if (o.symbolic && o.alpha != o.beta) {
        cs = extract_conditions(o.n, o.alpha, o.beta, o.budget);
    }
    if (o.json) {
        Json j = v.certificate(fam, opts);
        if (cs) {
            Json c = cs->to_json();
            auto images = fam.images();
            bool vanish = true;
            for (const auto& cond : cs->conditions) vanish = vanish && cond.substitute(images).is_zero();
            c["vanish_on_family"] = vanish;
            j["condition_system"] = std::move(c);
        }
        out << j.dump(2) << "\n";
    } else {
        print_verdict(out, v, fam, opts, o.latex);
        if (cs) {
            out << "condition system: det^" << cs->det_power << ", constant " << cs->removed_constant.str()
                << ", over Q^" << cs->q_power << "\n";
            for (std::size_t k = 0; k < cs->conditions.size(); ++k)
                out << "  [" << to_string(cs->provenance[k]) << "] "
                    << (o.latex ? to_latex(cs->conditions[k]) : to_string(cs->conditions[k])) << "\n";
        }
    }
    return v.exit_code();
}

int cmd_conjecture(const Options& o, std::ostream& out) {
    if (o.n < 2) throw IndexError("conjecture needs n >= 2");
    AnalysisOptions opts;
    opts.budget_terms = o.budget;
    Family fam = conjecture_family(o.n);
    std::vector<std::pair<unsigned, unsigned>> pairs;
    if (o.all_pairs || (o.alpha == 0 && o.beta == 0))
        pairs = ordered_pairs(o.n);
    else
        pairs.emplace_back(o.alpha, o.beta);
    int code = 0;
    std::size_t verified = 0, refuted = 0, aborted = 0;
    Json certs = Json::array();
    for (auto [a, b] : pairs) {
        Verdict v = analyze(fam, a, b, opts);
        code = std::max(code, v.exit_code());
        if (v.status == Status::Verified) ++verified;
        else if (v.status == Status::Aborted) ++aborted;
        else ++refuted;
        if (o.json) {
            certs.push_back(v.certificate(fam, opts));
        } else {
            out << "(" << a << "," << b << ") " << to_string(v.status) << " biharmonic="
                << (v.biharmonic ? "yes" : "no") << " proper=" << to_string(v.proper);
            if (v.witness) out << " tau(witness)=" << v.witness->tension_value.str();
            if (v.obstruction) out << " first-condition=" << to_string(v.obstruction->second);
            if (!v.note.empty()) out << " note=" << v.note;
            out << "\n";
        }
        if (v.status == Status::Aborted) break;
    }
    if (o.json) {
        Json j;
        j["engine"] = "biharm";
        j["version"] = BIHARM_VERSION;
        j["n"] = o.n;
        Json rels = Json::array();
        for (const auto& r : fam.relations) rels.push_back(r.text);
        j["relations"] = std::move(rels);
        if (o.n <= 4) j["readings"] = compare_readings(o.n).to_json();
        j["pairs"] = std::move(certs);
        j["summary"] = {{"verified", verified}, {"refuted", refuted}, {"aborted", aborted}, {"total", pairs.size()}};
        out << j.dump(2) << "\n";
    } else {
        if (o.n <= 4) {
            ReadingReport r = compare_readings(o.n);
            out << "pattern reading matches proven relations: " << (r.pattern_matches_theorem ? "yes" : "no") << "\n";
            out << "literal reading matches proven relations: " << (r.literal_matches_theorem ? "yes" : "no");
            for (const auto& e : r.literal_extra) out << " (extra: " << e << ")";
            out << "\n";
        }
        out << "summary: " << verified << " verified, " << refuted << " refuted, " << aborted << " aborted of "
            << pairs.size() << "\n";
    }
    return code;
}

std::vector<std::vector<Rational>> sphere_samples(const RatFn& f, std::size_t k) {
    std::vector<std::vector<Rational>> pts;
    for (const auto& g : su2_points(400)) {
        if (pts.size() >= k) break;
        if (!f.den().evaluate(g.z).constant_value().is_zero()) pts.push_back(g.x);
    }
    if (pts.size() < k) throw Error("not enough sample points avoid the poles");
    return pts;
}

int cmd_lift(const Options& o, std::ostream& out) {
    auto [n, a, b] = parse_family(o.family);
    Family fam = family_for(n);
    auto params = parameter_values(fam, o.params);
    RatFn f_sym = family_function(fam, a, b);
    RatFn f = f_sym.evaluate(params);
    SphereLiftReport rep = lift_check_sphere(f, sphere_samples(f, o.samples), false);
    rep.bitension_zero = sphere_bitension(f_sym).num.is_zero();
    if (o.json) {
        Json j;
        j["family"] = o.family;
        j["relations_family"] = fam.name;
        Json pj = Json::object();
        for (const auto& [v, c] : params) pj[v.name()] = c.str();
        j["parameters"] = std::move(pj);
        j["f"] = to_string(embed_su2(f));
        j["report"] = rep.to_json();
        out << j.dump(2) << "\n";
    } else {
        out << "f^ = " << to_string(embed_su2(f)) << "\n";
        for (const auto& s : rep.samples) {
            out << "x=(";
            for (std::size_t k = 0; k < s.x.size(); ++k) out << (k ? "," : "") << s.x[k].get_str();
            out << ") tau=" << s.group_value.str() << " |x|^2*Laplacian=" << s.flat_value.str()
                << (s.equal ? " ok" : " MISMATCH") << "\n";
        }
        out << "scale: |x|^2*Laplacian = " << sphere_metric_scale().get_str() << "*tau\n";
        out << "bitension numerator zero: " << (*rep.bitension_zero ? "yes" : "no") << "\n";
    }
    return rep.all_equal && *rep.bitension_zero ? 0 : 1;
}

int cmd_dual(const Options& o, std::ostream& out) {
    auto [n, a, b] = parse_family(o.family);
    Family fam = family_for(n);
    auto params = parameter_values(fam, o.params);
    RatFn fstar_sym = dual_function(family_function(fam, a, b));
    RatFn fstar = fstar_sym.evaluate(params);
    std::vector<std::vector<Rational>> pts;
    for (const auto& x : hyperboloid_points(200)) {
        if (pts.size() >= o.samples) break;
        if (!fstar.den().evaluate(x_point(x, 0)).constant_value().is_zero()) pts.push_back(x);
    }
    HyperbolicLiftReport rep = lift_check_hyperbolic(fstar, pts, std::nullopt, false);
    rep.bitension_zero = hyperbolic_bitension(fstar_sym, HyperbolicConvention::Riemannian).num.is_zero();
    if (o.json) {
        Json j;
        j["family"] = o.family;
        j["f_star"] = to_string(fstar_sym);
        j["substitution"] = "x1..x4 -> x0..x3, then x0 -> -i*x0";
        j["report"] = rep.to_json();
        out << j.dump(2) << "\n";
    } else {
        out << "f* = " << (o.latex ? to_latex(fstar) : to_string(fstar)) << "\n";
        for (const auto& s : rep.samples) {
            out << "x=(";
            for (std::size_t k = 0; k < s.x.size(); ++k) out << (k ? "," : "") << s.x[k].get_str();
            out << ") (x,x)_L*Box f*=" << s.dual_value.str() << " -(x,x)_L*Box f*=" << s.riemannian_value.str()
                << "\n";
        }
        out << "bitension numerator zero: " << (*rep.bitension_zero ? "yes" : "no") << "\n";
    }
    return *rep.bitension_zero ? 0 : 1;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact tension and bitension fields on SU(2) representations", "biharm"};
    app.require_subcommand(1);
    app.set_version_flag("--version", BIHARM_VERSION);
    Options o;

    auto formats = [&o](CLI::App* sub) {
        sub->add_flag("--json", o.json, "JSON output");
        sub->add_flag("--latex", o.latex, "LaTeX output");
    };

    auto* rep = app.add_subcommand("rep", "print the representation matrix pi_n");
    rep->add_option("n,--n", o.n, "representation index")->required();
    formats(rep);

    auto* ten = app.add_subcommand("tension", "tension field of an expression");
    ten->add_option("expr", o.expr, "polynomial or quotient in z_ij")->required();
    ten->add_option("--n-group", o.n_group, "ambient U(n)")->check(CLI::PositiveNumber);
    ten->add_option("--budget-terms", o.budget, "term ceiling for intermediate products");
    formats(ten);

    auto* kap = app.add_subcommand("kappa", "conformality operator of two expressions");
    kap->add_option("first", o.expr, "first argument")->required();
    kap->add_option("second", o.expr2, "second argument")->required();
    kap->add_option("--n-group", o.n_group, "ambient U(n)")->check(CLI::PositiveNumber);
    formats(kap);

    auto* ver = app.add_subcommand("verify", "verify a quotient P/Q of pi_n matrix coefficients");
    ver->add_option("--n", o.n, "representation index")->required();
    ver->add_option("--alpha", o.alpha, "column of P")->required();
    ver->add_option("--beta", o.beta, "column of Q")->required();
    auto* popt = ver->add_option("--p", o.p, "comma-separated coefficients of P");
    auto* qopt = ver->add_option("--q", o.q, "comma-separated coefficients of Q");
    auto* sym = ver->add_flag("--symbolic", o.symbolic, "also extract the symbolic condition system");
    sym->excludes(popt)->excludes(qopt);
    popt->needs(qopt);
    qopt->needs(popt);
    ver->add_option("--budget-terms", o.budget, "term ceiling for intermediate products");
    formats(ver);

    auto* con = app.add_subcommand("conjecture", "check the conjectured family for pi_n");
    con->add_option("--n", o.n, "representation index")->required();
    con->add_option("--alpha", o.alpha, "column of P");
    con->add_option("--beta", o.beta, "column of Q");
    con->add_flag("--all-pairs", o.all_pairs, "every ordered pair alpha != beta");
    con->add_option("--budget-terms", o.budget, "term ceiling for intermediate products");
    formats(con);

    auto* lift = app.add_subcommand("lift", "compare tau with the flat Laplacian on S^3");
    lift->add_option("--family", o.family, "pi<n>:<alpha>,<beta>")->required();
    lift->add_option("--samples", o.samples, "number of sample points");
    lift->add_option("--params", o.params, "family parameter values s,t,a,b");
    formats(lift);

    auto* dual = app.add_subcommand("dual", "dual function on the hyperboloid model");
    dual->add_option("--family", o.family, "pi<n>:<alpha>,<beta>")->required();
    dual->add_option("--samples", o.samples, "number of sample points");
    dual->add_option("--params", o.params, "family parameter values s,t,a,b");
    formats(dual);

    auto* self = app.add_subcommand("selftest", "run the built-in suite");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (rep->parsed()) return cmd_rep(o, out);
        if (ten->parsed()) return cmd_tension(o, out);
        if (kap->parsed()) return cmd_kappa(o, out);
        if (ver->parsed()) return cmd_verify(o, out);
        if (con->parsed()) return cmd_conjecture(o, out);
        if (lift->parsed()) return cmd_lift(o, out);
        if (dual->parsed()) return cmd_dual(o, out);
        if (self->parsed()) return run_selftest(out) == 0 ? 0 : 1;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

} // namespace biharm
