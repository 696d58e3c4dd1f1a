#pragma once

#include "biharm/poly.hpp"

#include <map>

namespace biharm {

/// Unreduced quotient num/den. No GCD is ever taken; equality is by
/// cross-multiplication.
class RatFn {
public:
    RatFn() : den_(1) {}
    RatFn(Poly num) : num_(std::move(num)), den_(1) {}  // NOLINT(google-explicit-constructor)
    RatFn(Poly num, Poly den);

    const Poly& num() const noexcept { return num_; }
    const Poly& den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }

    RatFn operator-() const { return RatFn(-num_, den_); }
    friend RatFn operator+(const RatFn& a, const RatFn& b);
    friend RatFn operator-(const RatFn& a, const RatFn& b);
    friend RatFn operator*(const RatFn& a, const RatFn& b);
    friend RatFn operator/(const RatFn& a, const RatFn& b);

    /// Cross-multiplication equality num1*den2 == num2*den1.
    friend bool operator==(const RatFn& a, const RatFn& b);
    /// Structural identity of the stored pair.
    bool identical(const RatFn& o) const { return num_ == o.num_ && den_ == o.den_; }

    /// Simultaneous substitution of rational images. The result's
    /// denominator is den-part times the needed powers of image denominators.
    RatFn substitute(const std::map<Var, RatFn>& images) const;
    RatFn evaluate(const std::map<Var, GaussRat>& point) const;
    /// Value at a point that maps every variable; throws DivisionByZero at a pole.
    GaussRat value_at(const std::map<Var, GaussRat>& point) const;

    /// Folds a constant denominator into the numerator.
    RatFn fold_constant_den() const;

private:
    Poly num_;
    Poly den_;
};

/// Substitution with rational images into a polynomial.
RatFn substitute(const Poly& f, const std::map<Var, RatFn>& images);

/// num / base^exp with the base kept explicit, so repeated quotient-rule
/// steps only raise the exponent.
struct PowerFrac {
    Poly num;
    Poly base{1};
    unsigned exp = 0;

    RatFn to_ratfn() const { return RatFn(num, base.pow(exp)); }
    /// Divides base out of num while it divides exactly.
    PowerFrac reduced() const;
    bool is_zero() const noexcept { return num.is_zero(); }
};

} // namespace biharm
