#pragma once

// Shared helpers for the test binaries: seeded generators for random exact
// inputs, and short constructors.

#include "biharm/format.hpp"
#include "biharm/parser.hpp"
#include "biharm/poly.hpp"

#include <random>
#include <vector>

namespace biharm::testing {

inline Poly P(std::string_view s) { return parse_poly(s); }

class Gen {
public:
    explicit Gen(std::uint32_t seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    GaussRat gauss(bool allow_zero = true) {
        for (;;) {
            long a = integer(-9, 9), b = integer(1, 6);
            long c = integer(0, 3) == 0 ? integer(-9, 9) : 0;
            long d = integer(1, 6);
            GaussRat g(Rational(a, b), Rational(c, d));
            if (allow_zero || !g.is_zero()) return g;
        }
    }

    /// `terms` random terms of total degree <= max_degree over `vars`.
    Poly poly(const std::vector<Var>& vars, unsigned max_degree, unsigned terms) {
        std::vector<Term> out;
        for (unsigned k = 0; k < terms; ++k) {
            Monomial m;
            unsigned budget = static_cast<unsigned>(integer(0, max_degree));
            for (unsigned d = 0; d < budget; ++d)
                m = m * Monomial(vars[static_cast<std::size_t>(integer(0, static_cast<long>(vars.size()) - 1))]);
            out.push_back({m, gauss(false)});
        }
        return Poly::from_terms(std::move(out));
    }

    Poly nonzero_poly(const std::vector<Var>& vars, unsigned max_degree, unsigned terms) {
        for (;;) {
            Poly p = poly(vars, max_degree, terms);
            if (!p.is_zero()) return p;
        }
    }

private:
    std::mt19937 rng_;
};

inline std::vector<Var> z_vars(unsigned n = 2) {
    std::vector<Var> v;
    for (unsigned i = 1; i <= n; ++i)
        for (unsigned j = 1; j <= n; ++j) v.push_back(Var::z(i, j));
    return v;
}

} // namespace biharm::testing
