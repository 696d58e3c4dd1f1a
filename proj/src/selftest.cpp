#include "biharm/cli.hpp"

#include "biharm/euclidean.hpp"
#include "biharm/parser.hpp"
#include "biharm/verifier.hpp"

#include <functional>
#include <ostream>

namespace biharm {

namespace {

Poly P(const char* s) { return parse_poly(s); }

bool golden_pi2() {
    RepMatrix r = build_rep(2);
    const char* g[3][3] = {{"z11^2", "z11*z12", "z12^2"},
                           {"2*z11*z21", "z11*z22+z12*z21", "2*z12*z22"},
                           {"z21^2", "z21*z22", "z22^2"}};
    for (unsigned j = 1; j <= 3; ++j)
        for (unsigned a = 1; a <= 3; ++a)
            if (r.at(j, a) != P(g[j - 1][a - 1])) return false;
    return build_rep(3).at(3, 2) == P("z21*(2*z11*z22 + z12*z21)") &&
           build_rep(4).at(3, 3) == P("z11^2*z22^2 + 4*z11*z12*z21*z22 + z12^2*z21^2");
}

bool generator_rules() {
    GroupContext u2(2);
    for (unsigned j = 1; j <= 2; ++j)
        for (unsigned a = 1; a <= 2; ++a) {
            Poly z(Var::z(j, a));
            if (tau(u2, z) != z * GaussRat(-2)) return false;
            for (unsigned k = 1; k <= 2; ++k)
                for (unsigned b = 1; b <= 2; ++b)
                    if (kappa(u2, z, Poly(Var::z(k, b))) != -(Poly(Var::z(k, a)) * Poly(Var::z(j, b)))) return false;
        }
    return true;
}

bool eigenvalues() {
    GroupContext u2(2);
    for (unsigned n = 1; n <= 4; ++n) {
        RepMatrix r = build_rep(n);
        GaussRat lambda(-static_cast<long>(n * (n + 1)));
        for (const auto& row : r.rows())
            for (const auto& e : row)
                if (tau(u2, e) != e * lambda || tau_oracle(u2, e) != e * lambda) return false;
    }
    return true;
}

bool n_system() {
    ConditionSystem cs = extract_conditions(2, 3, 1);
    return cs.det_power == 2 && cs.conditions.size() == 3 &&
           cs.conditions[0] == P("p1*q1*q3 - 4*p1*q2^2 + 6*p2*q1*q2 - 3*p3*q1^2") &&
           cs.conditions[1] == -P("6*p1*q2*q3 - 8*p2*q1*q3 - 4*p2*q2^2 + 6*p3*q1*q2") &&
           cs.conditions[2] == -P("3*p1*q3^2 - 6*p2*q2*q3 - p3*q1*q3 + 4*p3*q2^2");
}

bool theorems() {
    for (unsigned n : {2U, 3U})
        for (auto [a, b] : ordered_pairs(n))
            if (verify_theorem(n, a, b).status != Status::Verified) return false;
    return true;
}

bool closed_form() {
    auto pq = build_P_Q(2, symbolic_coefficients(Kind::P, 3), symbolic_coefficients(Kind::Q, 3), 3, 1);
    RatFn t = tau_ratfn(GroupContext(2), RatFn(pq.P, pq.Q));
    std::map<Var, RatFn> rel{{Var::q(1), RatFn(P("q2^2"), P("q3"))},
                             {Var::p(1), RatFn(P("q2*(2*p2*q3 - p3*q2)"), P("q3^2"))}};
    RatFn closed = parse_expr("8*(z11*z22 - z12*z21)*(q2*z12 + q3*z22)*(p2*q3 - p3*q2)/(q2*z11 + q3*z21)^3");
    return t.substitute(rel) == closed.substitute(rel);
}

bool readings() {
    for (unsigned n : {2U, 3U, 4U})
        if (!compare_readings(n).pattern_matches_theorem) return false;
    return true;
}

bool conjecture5() {
    for (auto [a, b] : ordered_pairs(5))
        if (check_conjecture(5, a, b).status != Status::Verified) return false;
    return true;
}

bool sphere_lift() {
    Family fam = theorem_family(2);
    auto pq = build_P_Q(2, fam.p, fam.q, 1, 3);
    std::map<Var, GaussRat> par{{Var::aux(AuxName::s), GaussRat(1)},
                                {Var::aux(AuxName::t), GaussRat(2)},
                                {Var::aux(AuxName::a), GaussRat(1)},
                                {Var::aux(AuxName::b), GaussRat(-1)}};
    RatFn f = RatFn(pq.P, pq.Q).evaluate(par);
    std::vector<std::vector<Rational>> pts;
    for (const auto& g : su2_points(40))
        if (!f.den().evaluate(g.z).constant_value().is_zero() && pts.size() < 5) pts.push_back(g.x);
    SphereLiftReport rep = lift_check_sphere(f, pts);
    return rep.all_equal && rep.bitension_zero.value_or(false);
}

bool hyperbolic() {
    Family fam = theorem_family(2);
    auto pq = build_P_Q(2, fam.p, fam.q, 1, 3);
    return hyperbolic_bitension(dual_function(RatFn(pq.P, pq.Q)), HyperbolicConvention::Riemannian).num.is_zero();
}

bool pi1() {
    Family f = symbolic_family(1);
    return analyze(f, 1, 1, {}).status == Status::NotProper && analyze(f, 2, 2, {}).status == Status::NotProper &&
           analyze(f, 1, 2, {}).status == Status::Verified && analyze(f, 2, 1, {}).status == Status::Verified;
}

bool round_trip() {
    for (const char* s : {"z11^2 - z12*z21", "(1+2*i)*z11 - i*z12 + 1/2*z21 - 3*i", "p1*q3^2 - q2^3*x0"}) {
        Poly p = P(s);
        if (P(to_string(p).c_str()) != p) return false;
    }
    return parse_poly("i*i") == Poly(-1);
}

} // namespace

int run_selftest(std::ostream& out) {
    const std::vector<std::pair<const char*, std::function<bool()>>> checks{
        {"golden representation matrices", golden_pi2},
        {"generator rules on U(2)", generator_rules},
        {"eigenvalues -n(n+1), both operator routes", eigenvalues},
        {"condition system for pi_2 (3,1)", n_system},
        {"proven families n=2,3, all pairs", theorems},
        {"closed-form tension for pi_2 (3,1)", closed_form},
        {"conjecture pattern reading at n=2,3,4", readings},
        {"conjecture n=5, all pairs", conjecture5},
        {"sphere lift and bitension", sphere_lift},
        {"hyperbolic dual bitension", hyperbolic},
        {"pi_1 harmonic and biharmonic cases", pi1},
        {"parse/print round trip", round_trip},
    };
    int failures = 0;
    for (const auto& [name, fn] : checks) {
        bool ok = false;
        std::string why;
        try {
            ok = fn();
        } catch (const std::exception& e) {
            why = e.what();
        }
        out << (ok ? "PASS " : "FAIL ") << name;
        if (!why.empty()) out << " (" << why << ")";
        out << "\n";
        if (!ok) ++failures;
    }
    out << (failures == 0 ? "selftest passed" : "selftest failed") << "\n";
    return failures;
}

} // namespace biharm
