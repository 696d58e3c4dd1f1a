#pragma once

#include "biharm/ratfn.hpp"

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace biharm {

/// The ambient unitary group U(n). Generator rules:
///   tau(z_ja) = -n z_ja,   kappa(z_ja, z_kb) = -z_ka z_jb.
class GroupContext {
public:
    explicit GroupContext(unsigned n_group = 2);
    unsigned n() const noexcept { return n_; }

    Poly generator_tau(unsigned j, unsigned alpha) const;
    Poly generator_kappa(unsigned j, unsigned alpha, unsigned k, unsigned beta) const;

    /// Throws IndexError if f mentions z_ij with i or j above n.
    void check_indices(const Poly& f) const;

private:
    unsigned n_;
};

/// Tension field of a polynomial in the matrix coefficients, computed from
/// first and second partial derivatives contracted with the generator rules.
/// Variables outside the Z block are inert constants.
Poly tau(const GroupContext& ctx, const Poly& f);
/// Conformality operator, symmetric and bilinear.
Poly kappa(const GroupContext& ctx, const Poly& f, const Poly& h);

/// Q^3 tau(P/Q) = Q^2 tau(P) - 2Q kappa(P,Q) + 2P kappa(Q,Q) - PQ tau(Q),
/// returned unreduced over Q^3.
RatFn tau_ratfn(const GroupContext& ctx, const RatFn& f);
/// kappa(a/b, c/d) = [bd k(a,c) - bc k(a,d) - ad k(b,c) + ac k(b,d)] / (b^2 d^2).
RatFn kappa_ratfn(const GroupContext& ctx, const RatFn& f, const RatFn& h);

/// tau applied twice through tau_ratfn; the denominator is Q^9.
RatFn bitension(const GroupContext& ctx, const RatFn& f);

/// A second-order operator L with its pairing G, related by
/// L(fh) = L(f) h + 2 G(f,h) + f L(h).
struct SecondOrderOperator {
    std::function<Poly(const Poly&)> apply;
    std::function<Poly(const Poly&, const Poly&)> pairing;
};

SecondOrderOperator tension_operator(const GroupContext& ctx);

/// Quotient rule on A/Q^m for a fixed base Q:
///   L(A/Q^m) = [Q^2 L(A) - 2m Q G(A,Q) - m A Q L(Q) + m(m+1) A G(Q,Q)] / Q^(m+2).
/// L(Q) and G(Q,Q) are computed once. `term_limit` (0 = none) bounds every
/// intermediate product; exceeding it throws BudgetExceeded.
class PowerQuotientRule {
public:
    PowerQuotientRule(SecondOrderOperator op, Poly base, std::size_t term_limit = 0);

    PowerFrac operator()(const PowerFrac& f) const;
    const Poly& base() const noexcept { return base_; }

private:
    void guard(const Poly& p, const char* stage) const;

    SecondOrderOperator op_;
    Poly base_;
    Poly op_base_;
    Poly pairing_base_;
    std::size_t term_limit_;
};

using GaussMatrix = std::vector<std::vector<GaussRat>>;

/// Orthonormal basis element M / sqrt(norm_sq) of u(n), stored through the
/// Gaussian-rational matrix M so that every oracle sum stays exact.
struct LieBasisElement {
    std::string label;
    GaussMatrix matrix;
    Rational norm_sq;
};

/// {Y_rs, iX_rs : r < s} and {iD_t}, with Y_rs = (E_rs - E_sr)/sqrt2,
/// X_rs = (E_rs + E_sr)/sqrt2 and D_t = E_tt.
std::vector<LieBasisElement> unitary_basis(unsigned n);

/// Re trace(A B*).
Rational real_trace_inner(const GaussMatrix& a, const GaussMatrix& b);
bool is_skew_hermitian(const GaussMatrix& m);
GaussMatrix commutator(const GaussMatrix& a, const GaussMatrix& b);
GaussMatrix transpose(const GaussMatrix& m);

/// Basis route: sum over the orthonormal basis of Z^2(f) - [Z,Z^t](f), each
/// Z^2(f) read off from f(z (I + sZ + s^2 Z^2/2)) truncated at s^2. Throws
/// if any bracket [Z, Z^t] fails to vanish.
Poly tau_oracle(const GroupContext& ctx, const Poly& f);
/// Basis route: sum over Z of Z(f) Z(h).
Poly kappa_oracle(const GroupContext& ctx, const Poly& f, const Poly& h);

} // namespace biharm
