#include "biharm/gauss_rat.hpp"

#include "biharm/error.hpp"

#include <cctype>
#include <functional>
#include <string>

namespace biharm {

namespace {

Rational parse_rational(std::string_view s, std::string_view whole) {
    if (s.empty()) throw Error("malformed Gaussian rational '" + std::string(whole) + "'");
    std::string text(s);
    if (text.front() == '+') text.erase(0, 1);
    for (char c : text) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-'))
            throw Error("malformed Gaussian rational '" + std::string(whole) + "'");
    }
    Rational r;
    if (r.set_str(text, 10) != 0)
        throw Error("malformed Gaussian rational '" + std::string(whole) + "'");
    if (r.get_den() == 0) throw DivisionByZero("zero denominator in '" + std::string(whole) + "'");
    r.canonicalize();
    return r;
}

// One signed summand: "3/4", "-2", "i", "-i", "5*i", "-1/2*i".
void add_part(std::string_view part, std::string_view whole, Rational& re, Rational& im) {
    if (part.empty()) throw Error("malformed Gaussian rational '" + std::string(whole) + "'");
    if (part.back() == 'i') {
        std::string_view c = part.substr(0, part.size() - 1);
        if (!c.empty() && c.back() == '*') c.remove_suffix(1);
        if (c.empty() || c == "+")
            im += 1;
        else if (c == "-")
            im -= 1;
        else
            im += parse_rational(c, whole);
    } else {
        re += parse_rational(part, whole);
    }
}

} // namespace

GaussRat::GaussRat(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
}

GaussRat GaussRat::from_fraction(long num, long den) {
    if (den == 0) throw DivisionByZero();
    Rational r(num, den);
    r.canonicalize();
    return GaussRat(r);
}

GaussRat GaussRat::parse(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    while (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
    if (s.empty()) throw Error("empty Gaussian rational");
    Rational re(0), im(0);
    std::size_t start = 0;
    for (std::size_t k = 1; k <= s.size(); ++k) {
        if (k == s.size() || s[k] == '+' || s[k] == '-') {
            add_part(std::string_view(s).substr(start, k - start), text, re, im);
            start = k;
        }
    }
    return GaussRat(re, im);
}

GaussRat GaussRat::inverse() const {
    if (is_zero()) throw DivisionByZero();
    Rational n = norm();
    return GaussRat(re_ / n, -im_ / n);
}

GaussRat& GaussRat::operator+=(const GaussRat& o) {
    re_ += o.re_;
    if (sgn(o.im_) != 0) im_ += o.im_;
    return *this;
}

GaussRat& GaussRat::operator-=(const GaussRat& o) {
    re_ -= o.re_;
    if (sgn(o.im_) != 0) im_ -= o.im_;
    return *this;
}

GaussRat& GaussRat::operator*=(const GaussRat& o) {
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational m = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(m);
    return *this;
}

GaussRat GaussRat::pow(unsigned e) const {
    GaussRat result(1);
    GaussRat base = *this;
    while (e != 0) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e != 0) base *= base;
    }
    return result;
}

std::string GaussRat::str() const {
    if (is_zero()) return "0";
    std::string out;
    if (sgn(re_) != 0) out = re_.get_str();
    if (sgn(im_) != 0) {
        if (sgn(im_) > 0 && !out.empty()) out += "+";
        if (im_ == 1)
            out += "i";
        else if (im_ == -1)
            out += "-i";
        else
            out += im_.get_str() + "*i";
    }
    return out;
}

std::size_t GaussRat::hash() const {
    std::hash<std::string> h;
    return h(re_.get_str()) * 31U + h(im_.get_str());
}

} // namespace biharm
