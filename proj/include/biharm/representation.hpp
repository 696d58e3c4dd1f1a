#pragma once

#include "biharm/poly.hpp"

#include <utility>
#include <vector>

namespace biharm {

/// The (n+1)-dimensional irreducible representation pi_n of SU(2) as a
/// matrix of degree-n polynomials in z11, z12, z21, z22. Column alpha holds
/// the coefficients of (z11 X + z21 Y)^(n+1-alpha) (z12 X + z22 Y)^(alpha-1)
/// in the basis X^(n+1-j) Y^(j-1).
class RepMatrix {
public:
    RepMatrix(unsigned n, std::vector<std::vector<Poly>> entries);

    unsigned n() const noexcept { return n_; }
    unsigned dim() const noexcept { return n_ + 1; }
    /// 1-based (row j, column alpha).
    const Poly& at(unsigned j, unsigned alpha) const;
    const std::vector<std::vector<Poly>>& rows() const noexcept { return entries_; }

private:
    unsigned n_;
    std::vector<std::vector<Poly>> entries_;
};

RepMatrix build_rep(unsigned n);

/// Coefficient vector for P or Q: either symbolic (p_j / q_k variables) or
/// concrete Gaussian rationals, or any polynomials in free parameters.
std::vector<Poly> symbolic_coefficients(Kind block, unsigned count);
std::vector<Poly> concrete_coefficients(const std::vector<GaussRat>& values);

/// sum_j coeffs[j-1] * pi_n(j, alpha).
Poly contract_column(const RepMatrix& rep, const std::vector<Poly>& coeffs, unsigned alpha);

struct QuotientPair {
    Poly P;
    Poly Q;
};

/// P uses column alpha with p-coefficients, Q uses column beta with q-coefficients.
QuotientPair build_P_Q(unsigned n, const std::vector<Poly>& p, const std::vector<Poly>& q, unsigned alpha,
                       unsigned beta);

/// Binomial coefficient as an exact integer.
Integer binomial(unsigned n, unsigned k);

} // namespace biharm
