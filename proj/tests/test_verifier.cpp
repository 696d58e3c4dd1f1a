#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "biharm/error.hpp"
#include "biharm/parser.hpp"
#include "biharm/verifier.hpp"
#include "support.hpp"

using namespace biharm;
using biharm::testing::P;

namespace {

const Poly N1 = P("p1*q1*q3 - 4*p1*q2^2 + 6*p2*q1*q2 - 3*p3*q1^2");
const Poly N2 = P("6*p1*q2*q3 - 8*p2*q1*q3 - 4*p2*q2^2 + 6*p3*q1*q2");
const Poly N3 = P("3*p1*q3^2 - 6*p2*q2*q3 - p3*q1*q3 + 4*p3*q2^2");

// q1 = q2^2/q3 and p1 = q2 (2 p2 q3 - p3 q2) / q3^2.
std::map<Var, RatFn> rational_relations() {
    return {{Var::q(1), RatFn(P("q2^2"), P("q3"))}, {Var::p(1), RatFn(P("q2*(2*p2*q3 - p3*q2)"), P("q3^2"))}};
}

} // namespace

TEST_CASE("N-system for pi_2 with (alpha, beta) = (3, 1)") {
    ConditionSystem cs = extract_conditions(2, 3, 1);
    CHECK(cs.det_power == 2);
    CHECK(cs.removed_constant == GaussRat(-16));
    REQUIRE(cs.conditions.size() == 3);
    CHECK(cs.provenance[0] == P("z11^2").leading().mono);
    CHECK(cs.provenance[1] == P("z11*z21").leading().mono);
    CHECK(cs.provenance[2] == P("z21^2").leading().mono);
    CHECK(cs.conditions[0] == N1);
    CHECK(cs.conditions[1] == -N2);
    CHECK(cs.conditions[2] == -N3);
    CHECK(cs.expand() == cs.reduced_numerator);
    for (const auto& c : cs.conditions)
        for (const auto& t : c.terms()) CHECK(t.mono.degree(Kind::Z) == 0);
}

TEST_CASE("full bitension numerator reassembles from the condition system") {
    auto pq = build_P_Q(2, symbolic_coefficients(Kind::P, 3), symbolic_coefficients(Kind::Q, 3), 3, 1);
    RatFn literal = bitension(GroupContext(2), RatFn(pq.P, pq.Q));
    ConditionSystem cs = extract_conditions(2, 3, 1);
    RatFn rebuilt(det_u2().pow(cs.det_power) * cs.expand() * cs.removed_constant, pq.Q.pow(cs.q_power));
    CHECK(rebuilt == literal);
}

TEST_CASE("parameterization and rational relations annihilate every n = 2 system") {
    Family fam = theorem_family(2);
    auto images = fam.images();
    for (auto [a, b] : ordered_pairs(2)) {
        ConditionSystem cs = extract_conditions(2, a, b);
        // P from the middle column is biharmonic for every p, q.
        CHECK(cs.trivial() == (a == 2));
        for (const auto& c : cs.conditions) {
            CHECK(c.substitute(images).is_zero());
            CHECK(substitute(c, rational_relations()).is_zero());
        }
    }
    for (const Poly& n : {N1, N2, N3}) CHECK(n.substitute(images).is_zero());
}

TEST_CASE("tension bracket for generic coefficients") {
    GroupContext u2(2);
    auto pq = build_P_Q(2, symbolic_coefficients(Kind::P, 3), symbolic_coefficients(Kind::Q, 3), 3, 1);
    RatFn t = tau_ratfn(u2, RatFn(pq.P, pq.Q));
    Poly bracket = P("(p1*q2 - p2*q1)*z11*z12 + (p2*q2 - p3*q1)*z11*z22 + (p1*q3 - p2*q2)*z12*z21 + "
                     "(p2*q3 - p3*q2)*z21*z22");
    CHECK(t == RatFn(det_u2() * bracket * GaussRat(8), pq.Q.pow(2)));
}

TEST_CASE("closed-form tension after the relations") {
    GroupContext u2(2);
    auto pq = build_P_Q(2, symbolic_coefficients(Kind::P, 3), symbolic_coefficients(Kind::Q, 3), 3, 1);
    RatFn t = tau_ratfn(u2, RatFn(pq.P, pq.Q));
    RatFn closed = parse_expr("8*(z11*z22 - z12*z21)*(q2*z12 + q3*z22)*(p2*q3 - p3*q2)/(q2*z11 + q3*z21)^3");
    CHECK(t.substitute(rational_relations()) == closed.substitute(rational_relations()));
    CHECK_FALSE(t == closed);

    // Same through the polynomial parameterization.
    Verdict v = verify_theorem(2, 3, 1);
    std::map<Var, RatFn> im;
    for (auto& [var, poly] : theorem_family(2).images()) im.emplace(var, RatFn(poly));
    CHECK(v.tension.to_ratfn() == closed.substitute(im));
}

TEST_CASE("theorems for n = 2, 3, 4 on every ordered pair") {
    for (unsigned n : {2U, 3U, 4U}) {
        auto pairs = ordered_pairs(n);
        CHECK(pairs.size() == (n + 1) * n);
        for (auto [a, b] : pairs) {
            Verdict v = verify_theorem(n, a, b);
            INFO("n=" << n << " pair " << a << "," << b);
            CHECK(v.status == Status::Verified);
            CHECK(v.biharmonic);
            CHECK_FALSE(v.harmonic);
            REQUIRE(v.witness);
            CHECK_FALSE(v.witness->tension_value.is_zero());
            CHECK_FALSE(theorem_family(n).pivot->evaluate(v.witness->parameters).is_zero());
            CHECK(v.exit_code() == 0);
        }
    }
}

TEST_CASE("conjecture readings") {
    for (unsigned n : {2U, 3U, 4U}) {
        ReadingReport r = compare_readings(n);
        CHECK(r.pattern_matches_theorem);
        CHECK_FALSE(r.literal_matches_theorem);
        CHECK_FALSE(r.literal_holds_on_family);
        CHECK(r.literal_extra.size() == 1);
    }
    CHECK(conjecture_relations(5).size() == 8);
    CHECK_NOTHROW(conjecture_family(7).check_relations());
    CHECK_THROWS_AS(conjecture_relations(1), Error);
    CHECK_THROWS_AS(theorem_relations(5), Error);
}

TEST_CASE("conjecture at n = 2 reduces to the theorem") {
    for (auto [a, b] : ordered_pairs(2)) {
        Verdict c = check_conjecture(2, a, b), t = verify_theorem(2, a, b);
        CHECK(c.status == Status::Verified);
        CHECK(c.tension.num == t.tension.num);
    }
}

TEST_CASE("generic coefficients are refuted") {
    Family f = concrete_family(2, {GaussRat(1), GaussRat(2), GaussRat(0)}, {GaussRat(1), GaussRat(0), GaussRat(3)});
    Verdict v = analyze(f, 3, 1);
    CHECK(v.status == Status::Refuted);
    CHECK_FALSE(v.biharmonic);
    REQUIRE(v.obstruction);
    CHECK_FALSE(v.obstruction->second.is_zero());
    CHECK(v.exit_code() == 1);
    CHECK(v.certificate(f).contains("obstruction"));
}

TEST_CASE("scale invariance") {
    Family base = theorem_family(2);
    Family scaled = base;
    for (auto& p : scaled.p) p = p * GaussRat(3);
    for (auto& q : scaled.q) q = q * GaussRat(Rational(-2), Rational(1));
    *scaled.pivot = *scaled.pivot * GaussRat(Rational(-6), Rational(3));
    scaled.relations.clear();
    for (auto [a, b] : ordered_pairs(2)) CHECK(analyze(scaled, a, b).status == Status::Verified);

    Family bad = concrete_family(2, {GaussRat(1), GaussRat(2), GaussRat(0)}, {GaussRat(1), GaussRat(0), GaussRat(3)});
    Family bad_scaled = bad;
    for (auto& p : bad_scaled.p) p = p * GaussRat(5);
    for (auto& q : bad_scaled.q) q = q * GaussRat::i();
    bad_scaled.pivot.reset();
    CHECK(analyze(bad_scaled, 3, 1).status == Status::Refuted);
}

TEST_CASE("circle descent") {
    Poly u(Var::aux(AuxName::u));
    std::map<Var, Poly> scale;
    for (unsigned i = 1; i <= 2; ++i)
        for (unsigned j = 1; j <= 2; ++j) scale[Var::z(i, j)] = u * Poly(Var::z(i, j));
    for (unsigned n : {1U, 2U, 3U})
        for (auto [a, b] : ordered_pairs(n)) {
            auto pq = build_P_Q(n, symbolic_coefficients(Kind::P, n + 1), symbolic_coefficients(Kind::Q, n + 1), a, b);
            Poly Ps = pq.P.substitute(scale), Qs = pq.Q.substitute(scale);
            CHECK(Ps == pq.P * u.pow(n));
            CHECK(Qs == pq.Q * u.pow(n));
            CHECK(RatFn(Ps, Qs) == RatFn(pq.P, pq.Q));
        }
}

TEST_CASE("pi_1 harmonic and biharmonic cases") {
    Family f = symbolic_family(1);
    for (unsigned a = 1; a <= 2; ++a)
        for (unsigned b = 1; b <= 2; ++b) {
            Verdict v = analyze(f, a, b);
            if (a == b) {
                CHECK(v.harmonic);
                CHECK(v.status == Status::NotProper);
                CHECK(v.proper == Proper::No);
            } else {
                CHECK(v.status == Status::Verified);
                CHECK(v.witness);
                CHECK(extract_conditions(1, a, b).trivial());
            }
        }
    CHECK_THROWS_AS(extract_conditions(1, 1, 1), Error);
}

TEST_CASE("group points lie on SU(2)") {
    auto pts = su2_points(20);
    CHECK(pts.size() == 20);
    for (const auto& g : pts) {
        CHECK(det_u2().evaluate(g.z).constant_value() == GaussRat(1));
        GaussRat z11 = g.z.at(Var::z(1, 1)), z12 = g.z.at(Var::z(1, 2));
        CHECK(g.z.at(Var::z(2, 2)) == z11.conj());
        CHECK(g.z.at(Var::z(2, 1)) == -z12.conj());
    }
    CHECK_THROWS_AS(su2_point({Rational(1), Rational(1), Rational(0), Rational(0)}), Error);
}

TEST_CASE("witness search") {
    Family f = theorem_family(2);
    Verdict v = verify_theorem(2, 3, 1);
    auto w = properness_witness(f, v.tension);
    REQUIRE(w);
    std::map<Var, GaussRat> all = w->parameters;
    for (auto& [var, c] : w->point.z) all[var] = c;
    CHECK(v.tension.to_ratfn().value_at(all) == w->tension_value);
    CHECK_FALSE(properness_witness(f, PowerFrac{Poly(), v.pq.Q, 2}));
}

TEST_CASE("certificates are deterministic") {
    Family f = theorem_family(3);
    std::string a = verify_theorem(3, 2, 4).certificate(f).dump(2);
    std::string b = verify_theorem(3, 2, 4).certificate(f).dump(2);
    CHECK(a == b);
    Json j = Json::parse(a);
    CHECK(j["verdict"]["status"] == "verified");
    CHECK(j["family"]["relations"].size() == 4);
}

TEST_CASE("budget guard") {
    AnalysisOptions opts;
    opts.budget_terms = 5;
    Verdict v = check_conjecture(4, 1, 2, opts);
    CHECK(v.status == Status::Aborted);
    CHECK(v.exit_code() == 2);
    CHECK_FALSE(v.abort_stage.empty());
    CHECK(v.certificate(conjecture_family(4), opts)["verdict"]["status"] == "aborted");
}

TEST_CASE("relation parsing") {
    Relation r = parse_relation("q1*q3 = q2^2");
    CHECK(r.difference() == P("q1*q3 - q2^2"));
    CHECK_THROWS_AS(parse_relation("q1 q3"), ParseError);
    CHECK_THROWS_AS(parse_relation("a = b = c"), ParseError);
}
