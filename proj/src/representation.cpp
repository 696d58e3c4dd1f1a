#include "biharm/representation.hpp"

#include "biharm/error.hpp"

#include <string>

namespace biharm {

RepMatrix::RepMatrix(unsigned n, std::vector<std::vector<Poly>> entries) : n_(n), entries_(std::move(entries)) {}

const Poly& RepMatrix::at(unsigned j, unsigned alpha) const {
    if (j == 0 || alpha == 0 || j > dim() || alpha > dim())
        throw IndexError("entry (" + std::to_string(j) + "," + std::to_string(alpha) + ") outside pi_" +
                         std::to_string(n_));
    return entries_[j - 1][alpha - 1];
}

Integer binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

RepMatrix build_rep(unsigned n) {
    if (n == 0) throw IndexError("representation index must be at least 1");
    const Var z11 = Var::z(1, 1), z12 = Var::z(1, 2), z21 = Var::z(2, 1), z22 = Var::z(2, 2);
    std::vector<std::vector<Poly>> entries(n + 1, std::vector<Poly>(n + 1));
    for (unsigned alpha = 1; alpha <= n + 1; ++alpha) {
        const unsigned a = n + 1 - alpha;  // power of (z11 X + z21 Y)
        const unsigned b = alpha - 1;      // power of (z12 X + z22 Y)
        for (unsigned j = 1; j <= n + 1; ++j) {
            const unsigned y = j - 1;  // coefficient of X^(n-y) Y^y
            std::vector<Term> terms;
            for (unsigned u = 0; u <= a && u <= y; ++u) {
                const unsigned v = y - u;
                if (v > b) continue;
                Monomial m = Monomial(z11, a - u) * Monomial(z21, u) * Monomial(z12, b - v) * Monomial(z22, v);
                terms.push_back({m, GaussRat(Integer(binomial(a, u) * binomial(b, v)))});
            }
            entries[j - 1][alpha - 1] = Poly::from_terms(std::move(terms));
        }
    }
    return RepMatrix(n, std::move(entries));
}

std::vector<Poly> symbolic_coefficients(Kind block, unsigned count) {
    if (block != Kind::P && block != Kind::Q) throw Error("symbolic coefficients use the P or Q block");
    std::vector<Poly> out;
    for (unsigned k = 1; k <= count; ++k) out.emplace_back(block == Kind::P ? Var::p(k) : Var::q(k));
    return out;
}

std::vector<Poly> concrete_coefficients(const std::vector<GaussRat>& values) {
    std::vector<Poly> out;
    out.reserve(values.size());
    for (const auto& v : values) out.emplace_back(v);
    return out;
}

Poly contract_column(const RepMatrix& rep, const std::vector<Poly>& coeffs, unsigned alpha) {
    if (coeffs.size() != rep.dim())
        throw IndexError("expected " + std::to_string(rep.dim()) + " coefficients, got " +
                         std::to_string(coeffs.size()));
    if (alpha == 0 || alpha > rep.dim()) throw IndexError("column index " + std::to_string(alpha) + " out of range");
    Poly sum;
    for (unsigned j = 1; j <= rep.dim(); ++j)
        if (!coeffs[j - 1].is_zero()) sum += coeffs[j - 1] * rep.at(j, alpha);
    return sum;
}

QuotientPair build_P_Q(unsigned n, const std::vector<Poly>& p, const std::vector<Poly>& q, unsigned alpha,
                       unsigned beta) {
    RepMatrix rep = build_rep(n);
    return QuotientPair{contract_column(rep, p, alpha), contract_column(rep, q, beta)};
}

} // namespace biharm
