#pragma once

#include "biharm/gauss_rat.hpp"
#include "biharm/monomial.hpp"

#include <functional>
#include <map>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

namespace biharm {

struct Term {
    Monomial mono;
    GaussRat coeff;
};

/// Sparse multivariate polynomial over Q(i). Terms are kept in canonical
/// (descending grlex) order with no zero coefficients, so two polynomials are
/// equal iff their term lists are identical.
class Poly {
public:
    Poly() = default;
    Poly(const GaussRat& c);  // NOLINT(google-explicit-constructor)
    Poly(long c) : Poly(GaussRat(c)) {}  // NOLINT(google-explicit-constructor)
    Poly(Var v) : Poly(Monomial(v)) {}  // NOLINT(google-explicit-constructor)
    explicit Poly(const Monomial& m, GaussRat c = GaussRat(1));

    /// Builds from arbitrary (unsorted, possibly repeated) terms.
    static Poly from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    /// Constant coefficient of a constant polynomial; throws otherwise.
    GaussRat constant_value() const;

    const Term& leading() const { return terms_.front(); }
    std::uint32_t degree() const noexcept;
    std::uint32_t degree(Var v) const noexcept;
    std::uint32_t degree(Kind block) const noexcept;
    bool contains(Var v) const noexcept;
    bool contains(Kind block) const noexcept;
    std::vector<Var> variables() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const GaussRat& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const GaussRat& c) { return a *= c; }
    friend Poly operator*(const GaussRat& c, Poly a) { return a *= c; }
    friend bool operator==(const Poly& a, const Poly& b);

    Poly mul_monomial(const Monomial& m, const GaussRat& c = GaussRat(1)) const;
    Poly pow(unsigned e) const;

    /// Formal partial derivative.
    Poly partial(Var v) const;

    /// Simultaneous polynomial substitution; unmapped variables stay.
    Poly substitute(const std::map<Var, Poly>& images) const;
    /// As substitute(), but drops every term whose degree in `trunc_var`
    /// exceeds `max_degree`, both in intermediate products and the result.
    Poly substitute_truncated(const std::map<Var, Poly>& images, Var trunc_var,
                              std::uint32_t max_degree) const;
    /// Maps each variable to a constant. Unmapped variables stay.
    Poly evaluate(const std::map<Var, GaussRat>& point) const;

    /// Coefficient of var^k (a polynomial free of var).
    Poly coefficient(Var v, std::uint32_t k) const;
    Poly truncate(Var v, std::uint32_t max_degree) const;

    /// Multiplies by the rational content's inverse so that all coefficient
    /// parts are coprime integers and the leading coefficient has positive
    /// real part (or positive imaginary part if purely imaginary).
    /// Returns the removed factor c with *this == c * result.
    std::pair<GaussRat, Poly> primitive() const;

    std::size_t hash() const noexcept;

private:
    friend class PolyBuilder;
    std::vector<Term> terms_;
};

/// Exact quotient f/g. Throws NotDivisible when the remainder is nonzero,
/// DivisionByZero for g = 0.
Poly exact_div(const Poly& f, const Poly& g);
std::optional<Poly> try_exact_div(const Poly& f, const Poly& g);

/// Number of times g divides f exactly (and the cofactor).
std::pair<unsigned, Poly> strip_factor(Poly f, const Poly& g, unsigned max_times = ~0U);

/// f = sum over entries of (block monomial) * (coefficient free of block).
/// Entries are in canonical order of the block monomial.
std::vector<std::pair<Monomial, Poly>> collect_by_block(const Poly& f, Kind block);
Poly expand_collection(const std::vector<std::pair<Monomial, Poly>>& collection);

/// Hash-map accumulator for building polynomials term by term.
class PolyBuilder {
public:
    void add(const Monomial& m, const GaussRat& c);
    void add(Monomial&& m, const GaussRat& c);
    void add(const Poly& p, const GaussRat& scale = GaussRat(1));
    std::size_t size() const noexcept { return acc_.size(); }
    Poly build();

private:
    std::unordered_map<Monomial, GaussRat, MonomialHash> acc_;
};

} // namespace biharm
