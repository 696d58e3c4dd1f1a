#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace biharm {

using Integer = mpz_class;
using Rational = mpq_class;

/// Exact element of Q(i). Both parts are kept canonical (lowest terms,
/// positive denominator) after every operation, so equality is structural.
class GaussRat {
public:
    GaussRat() = default;
    GaussRat(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
    GaussRat(const Integer& v) : re_(v) {}  // NOLINT(google-explicit-constructor)
    GaussRat(const Rational& re) : re_(re) { re_.canonicalize(); }  // NOLINT
    GaussRat(Rational re, Rational im);

    static GaussRat i() { return GaussRat(Rational(0), Rational(1)); }
    static GaussRat from_fraction(long num, long den);

    /// Accepts "a", "a/b", "c/d*i", "a/b+c/d*i", "i", "-i", "(3+4*i)".
    static GaussRat parse(std::string_view text);

    const Rational& re() const noexcept { return re_; }
    const Rational& im() const noexcept { return im_; }

    bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const noexcept { return re_ == 1 && sgn(im_) == 0; }
    bool is_real() const noexcept { return sgn(im_) == 0; }

    GaussRat conj() const { return GaussRat(re_, -im_); }
    Rational norm() const { return re_ * re_ + im_ * im_; }
    GaussRat inverse() const;

    GaussRat operator-() const { return GaussRat(-re_, -im_); }
    GaussRat& operator+=(const GaussRat& o);
    GaussRat& operator-=(const GaussRat& o);
    GaussRat& operator*=(const GaussRat& o);
    GaussRat& operator/=(const GaussRat& o) { return *this *= o.inverse(); }

    friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
    friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
    friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
    friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }

    friend bool operator==(const GaussRat& a, const GaussRat& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    GaussRat pow(unsigned e) const;

    /// "a/b+c/d*i" with zero parts omitted; zero prints as "0".
    std::string str() const;

    std::size_t hash() const;

private:
    Rational re_{0};
    Rational im_{0};
};

} // namespace biharm
