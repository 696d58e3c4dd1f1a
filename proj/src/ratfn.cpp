#include "biharm/ratfn.hpp"

#include "biharm/error.hpp"

namespace biharm {

RatFn::RatFn(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
}

RatFn operator+(const RatFn& a, const RatFn& b) {
    if (a.den_ == b.den_) return RatFn(a.num_ + b.num_, a.den_);
    return RatFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFn operator-(const RatFn& a, const RatFn& b) {
    if (a.den_ == b.den_) return RatFn(a.num_ - b.num_, a.den_);
    return RatFn(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFn operator*(const RatFn& a, const RatFn& b) {
    return RatFn(a.num_ * b.num_, a.den_ * b.den_);
}

RatFn operator/(const RatFn& a, const RatFn& b) {
    if (b.num_.is_zero()) throw DivisionByZero("division by the zero rational function");
    return RatFn(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const RatFn& a, const RatFn& b) {
    if (a.den_ == b.den_) return a.num_ == b.num_;
    return a.num_ * b.den_ == b.num_ * a.den_;
}

RatFn substitute(const Poly& f, const std::map<Var, RatFn>& images) {
    std::map<Var, Poly> nums;
    std::map<Var, std::uint32_t> top;
    for (const auto& [v, img] : images) {
        std::uint32_t d = f.degree(v);
        if (d == 0) continue;
        nums.emplace(v, img.num());
        if (!img.den().is_constant()) {
            top.emplace(v, d);
        } else if (!img.den().constant_value().is_one()) {
            nums[v] = img.num() * img.den().constant_value().inverse();
        }
    }
    if (top.empty()) return RatFn(f.substitute(nums));

    // sum c * prod num_v^e_v * den_v^(D_v - e_v), over prod den_v^D_v
    PolyBuilder acc;
    std::map<std::pair<std::uint32_t, std::uint32_t>, Poly> den_powers;
    auto den_power = [&](Var v, std::uint32_t e) -> const Poly& {
        auto [it, inserted] = den_powers.try_emplace({v.key(), e});
        if (inserted) it->second = images.at(v).den().pow(e);
        return it->second;
    };
    for (const auto& t : f.terms()) {
        Poly term = Poly(t.mono, t.coeff).substitute(nums);
        for (const auto& [v, d] : top) {
            std::uint32_t e = t.mono.degree(v);
            if (e < d) term = term * den_power(v, d - e);
        }
        acc.add(term);
    }
    Poly den(1);
    for (const auto& [v, d] : top) den = den * den_power(v, d);
    return RatFn(acc.build(), den);
}

RatFn RatFn::substitute(const std::map<Var, RatFn>& images) const {
    RatFn n = biharm::substitute(num_, images);
    RatFn d = biharm::substitute(den_, images);
    if (d.num().is_zero()) throw DivisionByZero("substitution makes the denominator vanish");
    return n / d;
}

RatFn RatFn::evaluate(const std::map<Var, GaussRat>& point) const {
    Poly d = den_.evaluate(point);
    if (d.is_zero()) throw DivisionByZero("evaluation point is a pole");
    return RatFn(num_.evaluate(point), d);
}

GaussRat RatFn::value_at(const std::map<Var, GaussRat>& point) const {
    Poly d = den_.evaluate(point);
    Poly n = num_.evaluate(point);
    if (!d.is_constant() || !n.is_constant()) throw Error("evaluation point leaves free variables");
    if (d.is_zero()) throw DivisionByZero("evaluation point is a pole of the denominator");
    return n.constant_value() / d.constant_value();
}

RatFn RatFn::fold_constant_den() const {
    if (!den_.is_constant()) return *this;
    return RatFn(num_ * den_.constant_value().inverse());
}

PowerFrac PowerFrac::reduced() const {
    if (exp == 0) return *this;
    auto [k, rest] = strip_factor(num, base, exp);
    return PowerFrac{std::move(rest), base, exp - k};
}

} // namespace biharm
