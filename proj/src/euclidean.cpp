#include "biharm/euclidean.hpp"

#include "biharm/error.hpp"

#include <set>

namespace biharm {

namespace {

Poly xv(unsigned m) { return Poly(Var::x(m)); }

const GaussRat I = GaussRat::i();

void require_degree_zero(const RatFn& f) {
    auto degrees = [](const Poly& p) {
        std::set<unsigned> d;
        for (const auto& t : p.terms()) d.insert(t.mono.degree(Kind::X));
        return d;
    };
    auto dn = degrees(f.num()), dd = degrees(f.den());
    if (dd.size() != 1 || (!f.num().is_zero() && (dn.size() != 1 || *dn.begin() != *dd.begin())))
        throw Error("the radial extension needs a quotient homogeneous of degree 0 in x");
}

GaussRat value_of(const PowerFrac& f, const std::map<Var, GaussRat>& point) {
    GaussRat den = f.base.evaluate(point).constant_value().pow(f.exp);
    if (den.is_zero()) throw DivisionByZero("sample hits a pole: " + to_string(f.base) + " vanishes");
    return f.num.evaluate(point).constant_value() / den;
}

void check_pole(const Poly& den, const std::map<Var, GaussRat>& point) {
    if (den.evaluate(point).constant_value().is_zero())
        throw DivisionByZero("sample hits a pole: " + to_string(den) + " vanishes");
}

Json rationals(const std::vector<Rational>& x) {
    Json a = Json::array();
    for (const auto& c : x) a.push_back(c.get_str());
    return a;
}

} // namespace

FlatOperator::FlatOperator(std::string name, std::vector<std::pair<Var, int>> signature)
    : name_(std::move(name)), signature_(std::move(signature)) {}

FlatOperator FlatOperator::euclidean() {
    return FlatOperator("laplacian", {{Var::x(1), 1}, {Var::x(2), 1}, {Var::x(3), 1}, {Var::x(4), 1}});
}

FlatOperator FlatOperator::minkowski() {
    return FlatOperator("dalembertian", {{Var::x(0), -1}, {Var::x(1), 1}, {Var::x(2), 1}, {Var::x(3), 1}});
}

Poly FlatOperator::apply(const Poly& f) const {
    PolyBuilder acc;
    for (const auto& [v, sign] : signature_) acc.add(f.partial(v).partial(v), GaussRat(sign));
    return acc.build();
}

Poly FlatOperator::pairing(const Poly& f, const Poly& h) const {
    PolyBuilder acc;
    for (const auto& [v, sign] : signature_) {
        Poly df = f.partial(v);
        if (df.is_zero()) continue;
        acc.add(df * h.partial(v), GaussRat(sign));
    }
    return acc.build();
}

SecondOrderOperator FlatOperator::as_operator() const {
    FlatOperator self = *this;
    return SecondOrderOperator{[self](const Poly& f) { return self.apply(f); },
                               [self](const Poly& f, const Poly& h) { return self.pairing(f, h); }};
}

Poly FlatOperator::quadratic_form() const {
    PolyBuilder acc;
    for (const auto& [v, sign] : signature_) acc.add(Poly(v).pow(2), GaussRat(sign));
    return acc.build();
}

RatFn flat_apply(const FlatOperator& op, const RatFn& f) {
    PowerQuotientRule rule(op.as_operator(), f.den());
    return rule(PowerFrac{f.num(), f.den(), 1}).to_ratfn();
}

Poly embed_su2(const Poly& f) {
    return f.substitute({{Var::z(1, 1), xv(1) + xv(2) * I},
                         {Var::z(1, 2), xv(3) + xv(4) * I},
                         {Var::z(2, 1), -xv(3) + xv(4) * I},
                         {Var::z(2, 2), xv(1) - xv(2) * I}});
}

RatFn embed_su2(const RatFn& f) { return RatFn(embed_su2(f.num()), embed_su2(f.den())); }

Poly sphere_to_minkowski(const Poly& f) {
    for (const auto& t : f.terms())
        if (t.mono.degree(Var::x(0)) != 0) throw Error("sphere model functions use x1..x4 only");
    return f.substitute({{Var::x(1), xv(0)}, {Var::x(2), xv(1)}, {Var::x(3), xv(2)}, {Var::x(4), xv(3)}});
}

RatFn sphere_to_minkowski(const RatFn& f) {
    return RatFn(sphere_to_minkowski(f.num()), sphere_to_minkowski(f.den()));
}

Poly dualize(const Poly& f) { return f.substitute({{Var::x(0), xv(0) * (-I)}}); }

RatFn dualize(const RatFn& f) { return RatFn(dualize(f.num()), dualize(f.den())); }

RatFn dual_function(const RatFn& f) { return dualize(sphere_to_minkowski(embed_su2(f))); }

Rational lorentz(const std::vector<Rational>& x, const std::vector<Rational>& y) {
    if (x.size() != 4 || y.size() != 4) throw IndexError("Lorentz form needs four coordinates");
    return Rational(-x[0] * y[0] + x[1] * y[1] + x[2] * y[2] + x[3] * y[3]);
}

std::vector<std::vector<Rational>> sphere_points(std::size_t count) {
    std::vector<std::vector<Rational>> out;
    for (const auto& g : su2_points(count)) out.push_back(g.x);
    return out;
}

std::vector<std::vector<Rational>> hyperboloid_points(std::size_t count) {
    static const std::vector<Rational> values{Rational(1, 3), Rational(0),     Rational(1, 2),
                                              Rational(-1, 3), Rational(1, 4), Rational(-1, 2)};
    std::vector<std::vector<Rational>> out;
    for (const auto& u1 : values)
        for (const auto& u2 : values)
            for (const auto& u3 : values) {
                if (out.size() >= count) return out;
                Rational r = u1 * u1 + u2 * u2 + u3 * u3;
                if (r >= 1) continue;
                Rational d = 1 - r;
                out.push_back({Rational((1 + r) / d), Rational(2 * u1 / d), Rational(2 * u2 / d),
                               Rational(2 * u3 / d)});
            }
    return out;
}

std::map<Var, GaussRat> x_point(const std::vector<Rational>& x, unsigned first_index) {
    std::map<Var, GaussRat> m;
    for (std::size_t k = 0; k < x.size(); ++k) m[Var::x(first_index + static_cast<unsigned>(k))] = GaussRat(x[k]);
    return m;
}

PowerFrac sphere_tension(const RatFn& f_z) {
    RatFn fh = embed_su2(f_z);
    require_degree_zero(fh);
    FlatOperator lap = FlatOperator::euclidean();
    PowerQuotientRule rule(lap.as_operator(), fh.den());
    PowerFrac g = rule(PowerFrac{fh.num(), fh.den(), 1}).reduced();
    g.num = g.num * lap.quadratic_form();
    return g;
}

PowerFrac sphere_bitension(const RatFn& f_z) {
    PowerFrac g = sphere_tension(f_z);
    FlatOperator lap = FlatOperator::euclidean();
    PowerQuotientRule rule(lap.as_operator(), g.base);
    PowerFrac h = rule(g).reduced();
    h.num = h.num * lap.quadratic_form();
    return h;
}

PowerFrac hyperbolic_tension(const RatFn& f_star, HyperbolicConvention conv) {
    require_degree_zero(f_star);
    FlatOperator box = FlatOperator::minkowski();
    PowerQuotientRule rule(box.as_operator(), f_star.den());
    PowerFrac g = rule(PowerFrac{f_star.num(), f_star.den(), 1}).reduced();
    Poly factor = box.quadratic_form();
    g.num = g.num * (conv == HyperbolicConvention::Dual ? factor : -factor);
    return g;
}

PowerFrac hyperbolic_bitension(const RatFn& f_star, HyperbolicConvention conv) {
    PowerFrac g = hyperbolic_tension(f_star, conv);
    FlatOperator box = FlatOperator::minkowski();
    PowerQuotientRule rule(box.as_operator(), g.base);
    PowerFrac h = rule(g).reduced();
    Poly factor = box.quadratic_form();
    h.num = h.num * (conv == HyperbolicConvention::Dual ? factor : -factor);
    return h;
}

Json SphereLiftReport::to_json() const {
    Json j;
    j["metric_scale"] = sphere_metric_scale().get_str();
    Json list = Json::array();
    for (const auto& s : samples) {
        Json e;
        e["x"] = rationals(s.x);
        e["tension"] = s.group_value.str();
        e["flat"] = s.flat_value.str();
        e["equal"] = s.equal;
        list.push_back(std::move(e));
    }
    j["samples"] = std::move(list);
    j["all_equal"] = all_equal;
    if (bitension_zero) j["bitension_zero"] = *bitension_zero;
    return j;
}

SphereLiftReport lift_check_sphere(const RatFn& f_z, const std::vector<std::vector<Rational>>& samples,
                                   bool check_bitension) {
    GroupContext u2(2);
    PowerQuotientRule rule(tension_operator(u2), f_z.den());
    PowerFrac group = rule(PowerFrac{f_z.num(), f_z.den(), 1});
    PowerFrac flat = sphere_tension(f_z);
    SphereLiftReport rep;
    rep.all_equal = true;
    for (const auto& x : samples) {
        GroupPoint g = su2_point(x);
        check_pole(f_z.den(), g.z);
        LiftSample s;
        s.x = x;
        s.group_value = value_of(group, g.z);
        s.flat_value = value_of(flat, x_point(x, 1));
        s.equal = s.group_value * GaussRat(sphere_metric_scale()) == s.flat_value;
        rep.all_equal = rep.all_equal && s.equal;
        rep.samples.push_back(std::move(s));
    }
    if (check_bitension) rep.bitension_zero = sphere_bitension(f_z).num.is_zero();
    return rep;
}

Json HyperbolicLiftReport::to_json() const {
    Json j;
    Json list = Json::array();
    for (const auto& s : samples) {
        Json e;
        e["x"] = rationals(s.x);
        e["dual"] = s.dual_value.str();
        e["riemannian"] = s.riemannian_value.str();
        if (s.closed_value) e["closed_form"] = s.closed_value->str();
        list.push_back(std::move(e));
    }
    j["samples"] = std::move(list);
    j["nonzero"] = nonzero;
    j["closed_matches_dual"] = closed_matches_dual;
    j["closed_matches_riemannian"] = closed_matches_riemannian;
    if (bitension_zero) j["bitension_zero"] = *bitension_zero;
    return j;
}

HyperbolicLiftReport lift_check_hyperbolic(const RatFn& f_star, const std::vector<std::vector<Rational>>& samples,
                                           const std::optional<RatFn>& closed_form, bool check_bitension) {
    PowerFrac dual = hyperbolic_tension(f_star, HyperbolicConvention::Dual);
    HyperbolicLiftReport rep;
    rep.nonzero = true;
    rep.closed_matches_dual = closed_form.has_value();
    rep.closed_matches_riemannian = closed_form.has_value();
    for (const auto& x : samples) {
        if (lorentz(x, x) != -1 || x[0] <= 0) throw Error("sample is not on the upper hyperboloid");
        auto pt = x_point(x, 0);
        check_pole(f_star.den(), pt);
        HyperbolicSample s;
        s.x = x;
        s.dual_value = value_of(dual, pt);
        s.riemannian_value = -s.dual_value;
        if (closed_form) {
            s.closed_value = closed_form->value_at(pt);
            rep.closed_matches_dual = rep.closed_matches_dual && *s.closed_value == s.dual_value;
            rep.closed_matches_riemannian = rep.closed_matches_riemannian && *s.closed_value == s.riemannian_value;
        }
        rep.nonzero = rep.nonzero && !s.dual_value.is_zero();
        rep.samples.push_back(std::move(s));
    }
    if (check_bitension)
        rep.bitension_zero = hyperbolic_bitension(f_star, HyperbolicConvention::Riemannian).num.is_zero();
    return rep;
}

} // namespace biharm
