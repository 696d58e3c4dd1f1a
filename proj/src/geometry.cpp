#include "biharm/geometry.hpp"

#include "biharm/error.hpp"

#include <array>

namespace biharm {

namespace {

// Dense view of the Z part of a monomial plus the untouched tail.
struct ZSplit {
    std::vector<std::uint32_t> e;  // n*n exponents, row-major, 0-based
    Monomial tail;
    std::uint32_t zdeg = 0;
};

ZSplit split(const Monomial& m, unsigned n) {
    ZSplit s;
    s.e.assign(static_cast<std::size_t>(n) * n, 0);
    for (const auto& f : m.factors()) {
        Var v = Var::from_key(f.key);
        if (v.kind() == Kind::Z) {
            s.e[(v.i() - 1) * n + (v.j() - 1)] = f.exp;
            s.zdeg += f.exp;
        } else {
            s.tail.push_back_unchecked(f.key, f.exp);
        }
    }
    return s;
}

Monomial assemble(const std::vector<std::uint32_t>& e, const Monomial& tail, unsigned n) {
    Monomial m;
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
            if (e[i * n + j] != 0) m.push_back_unchecked(Var::z(i + 1, j + 1).key(), e[i * n + j]);
    for (const auto& f : tail.factors()) m.push_back_unchecked(f.key, f.exp);
    return m;
}

// E_ab acting as sum_i z_ib d/dz_ia.
Poly left_field(const Poly& f, unsigned a, unsigned b, unsigned n) {
    PolyBuilder acc;
    for (const auto& t : f.terms()) {
        ZSplit s = split(t.mono, n);
        for (unsigned i = 0; i < n; ++i) {
            std::uint32_t e = s.e[i * n + a];
            if (e == 0) continue;
            std::vector<std::uint32_t> x = s.e;
            --x[i * n + a];
            ++x[i * n + b];
            acc.add(assemble(x, s.tail, n), t.coeff * GaussRat(static_cast<long>(e)));
        }
    }
    return acc.build();
}

} // namespace

GroupContext::GroupContext(unsigned n_group) : n_(n_group) {
    if (n_group == 0) throw IndexError("group size must be positive");
}

Poly GroupContext::generator_tau(unsigned j, unsigned alpha) const {
    return Poly(Var::z(j, alpha)) * GaussRat(-static_cast<long>(n_));
}

Poly GroupContext::generator_kappa(unsigned j, unsigned alpha, unsigned k, unsigned beta) const {
    return -(Poly(Var::z(k, alpha)) * Poly(Var::z(j, beta)));
}

void GroupContext::check_indices(const Poly& f) const {
    for (Var v : f.variables())
        if (v.kind() == Kind::Z && (v.i() > n_ || v.j() > n_))
            throw IndexError("variable " + v.name() + " is outside U(" + std::to_string(n_) + ")");
}

Poly tau(const GroupContext& ctx, const Poly& f) {
    ctx.check_indices(f);
    const unsigned n = ctx.n();
    const std::size_t nn = static_cast<std::size_t>(n) * n;
    PolyBuilder acc;
    for (const auto& t : f.terms()) {
        ZSplit s = split(t.mono, n);
        if (s.zdeg == 0) continue;
        // first-order part: -n * sum z_ij d/dz_ij
        acc.add(t.mono, t.coeff * GaussRat(-static_cast<long>(n) * static_cast<long>(s.zdeg)));
        // second-order part: -sum d2/dz_ij dz_kl * z_kj z_il
        for (std::size_t a = 0; a < nn; ++a) {
            if (s.e[a] == 0) continue;
            const unsigned i = static_cast<unsigned>(a / n), j = static_cast<unsigned>(a % n);
            for (std::size_t b = 0; b < nn; ++b) {
                std::uint32_t eb = s.e[b] - (a == b ? 1U : 0U);
                if (s.e[b] == 0 || eb == 0) continue;
                const unsigned k = static_cast<unsigned>(b / n), l = static_cast<unsigned>(b % n);
                std::vector<std::uint32_t> x = s.e;
                --x[a];
                --x[b];
                ++x[k * n + j];
                ++x[i * n + l];
                acc.add(assemble(x, s.tail, n),
                        t.coeff * GaussRat(-static_cast<long>(s.e[a]) * static_cast<long>(eb)));
            }
        }
    }
    return acc.build();
}

Poly kappa(const GroupContext& ctx, const Poly& f, const Poly& h) {
    ctx.check_indices(f);
    ctx.check_indices(h);
    const unsigned n = ctx.n();
    if (f.is_zero() || h.is_zero() || !f.contains(Kind::Z) || !h.contains(Kind::Z)) return {};
    // kappa(f,h) = -sum_{j,l} E_jl(f) E_lj(h)
    PolyBuilder acc;
    for (unsigned j = 0; j < n; ++j) {
        for (unsigned l = 0; l < n; ++l) {
            Poly a = left_field(f, j, l, n);
            if (a.is_zero()) continue;
            Poly b = left_field(h, l, j, n);
            if (b.is_zero()) continue;
            acc.add(a * b, GaussRat(-1));
        }
    }
    return acc.build();
}

SecondOrderOperator tension_operator(const GroupContext& ctx) {
    return SecondOrderOperator{
        [ctx](const Poly& f) { return tau(ctx, f); },
        [ctx](const Poly& f, const Poly& h) { return kappa(ctx, f, h); },
    };
}

RatFn tau_ratfn(const GroupContext& ctx, const RatFn& f) {
    const Poly& p = f.num();
    const Poly& q = f.den();
    Poly num = q * q * tau(ctx, p) - q * kappa(ctx, p, q) * GaussRat(2) +
               p * kappa(ctx, q, q) * GaussRat(2) - p * q * tau(ctx, q);
    return RatFn(std::move(num), q.pow(3));
}

RatFn kappa_ratfn(const GroupContext& ctx, const RatFn& f, const RatFn& h) {
    const Poly &a = f.num(), &b = f.den(), &c = h.num(), &d = h.den();
    Poly num = b * d * kappa(ctx, a, c) - b * c * kappa(ctx, a, d) - a * d * kappa(ctx, b, c) + a * c * kappa(ctx, b, d);
    return RatFn(num, (b * d).pow(2));
}

RatFn bitension(const GroupContext& ctx, const RatFn& f) { return tau_ratfn(ctx, tau_ratfn(ctx, f)); }

PowerQuotientRule::PowerQuotientRule(SecondOrderOperator op, Poly base, std::size_t term_limit)
    : op_(std::move(op)), base_(std::move(base)), term_limit_(term_limit) {
    if (base_.is_zero()) throw DivisionByZero("zero base in quotient rule");
    op_base_ = op_.apply(base_);
    pairing_base_ = op_.pairing(base_, base_);
}

void PowerQuotientRule::guard(const Poly& p, const char* stage) const {
    if (term_limit_ != 0 && p.size() > term_limit_)
        throw BudgetExceeded(std::string("term budget exceeded in ") + stage + " (" +
                             std::to_string(p.size()) + " > " + std::to_string(term_limit_) + " terms)");
}

PowerFrac PowerQuotientRule::operator()(const PowerFrac& f) const {
    if (!(f.base == base_) && f.exp != 0) throw Error("quotient rule applied with a different base");
    const auto m = static_cast<long>(f.exp);
    const Poly& a = f.num;
    if (m == 0) {
        Poly r = op_.apply(a);
        guard(r, "operator");
        return PowerFrac{std::move(r), base_, 0};
    }
    Poly la = op_.apply(a);
    guard(la, "operator");
    Poly num = base_ * base_ * la;
    guard(num, "first term");
    Poly ga = op_.pairing(a, base_);
    guard(ga, "pairing");
    num -= base_ * ga * GaussRat(2 * m);
    num -= a * base_ * op_base_ * GaussRat(m);
    num += a * pairing_base_ * GaussRat(m * (m + 1));
    guard(num, "numerator");
    return PowerFrac{std::move(num), base_, f.exp + 2};
}

namespace {

GaussMatrix zero_matrix(unsigned n) { return GaussMatrix(n, std::vector<GaussRat>(n)); }

GaussMatrix multiply(const GaussMatrix& a, const GaussMatrix& b) {
    const std::size_t n = a.size();
    GaussMatrix c(n, std::vector<GaussRat>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

bool is_zero_matrix(const GaussMatrix& m) {
    for (const auto& row : m)
        for (const auto& x : row)
            if (!x.is_zero()) return false;
    return true;
}

// z . M as a matrix of polynomials.
std::vector<std::vector<Poly>> z_times(const GaussMatrix& m, unsigned n) {
    std::vector<std::vector<Poly>> out(n, std::vector<Poly>(n));
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
            for (unsigned k = 0; k < n; ++k)
                if (!m[k][j].is_zero()) out[i][j] += Poly(Var::z(i + 1, k + 1)) * m[k][j];
    return out;
}

// Coefficients of s^1 and s^2 in f(z (I + sM + s^2 M^2 / 2)).
std::array<Poly, 3> path_jet(const Poly& f, const LieBasisElement& z, unsigned n) {
    const Var s = Var::aux(AuxName::eps);
    if (f.contains(s)) throw Error("input already uses the reserved path parameter");
    GaussMatrix half_sq = multiply(z.matrix, z.matrix);
    for (auto& row : half_sq)
        for (auto& x : row) x *= GaussRat::from_fraction(1, 2);
    auto first = z_times(z.matrix, n);
    auto second = z_times(half_sq, n);
    std::map<Var, Poly> images;
    const Poly sp(s);
    const Poly sp2 = sp * sp;
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
            images.emplace(Var::z(i + 1, j + 1), Poly(Var::z(i + 1, j + 1)) + sp * first[i][j] + sp2 * second[i][j]);
    Poly g = f.substitute_truncated(images, s, 2);
    return {g.coefficient(s, 0), g.coefficient(s, 1), g.coefficient(s, 2)};
}

} // namespace

std::vector<LieBasisElement> unitary_basis(unsigned n) {
    std::vector<LieBasisElement> basis;
    const GaussRat i = GaussRat::i();
    for (unsigned r = 0; r < n; ++r)
        for (unsigned s = r + 1; s < n; ++s) {
            GaussMatrix y = zero_matrix(n);
            y[r][s] = GaussRat(1);
            y[s][r] = GaussRat(-1);
            basis.push_back({"Y" + std::to_string(r + 1) + std::to_string(s + 1), y, Rational(2)});
            GaussMatrix x = zero_matrix(n);
            x[r][s] = i;
            x[s][r] = i;
            basis.push_back({"iX" + std::to_string(r + 1) + std::to_string(s + 1), x, Rational(2)});
        }
    for (unsigned t = 0; t < n; ++t) {
        GaussMatrix d = zero_matrix(n);
        d[t][t] = i;
        basis.push_back({"iD" + std::to_string(t + 1), d, Rational(1)});
    }
    return basis;
}

Rational real_trace_inner(const GaussMatrix& a, const GaussMatrix& b) {
    Rational sum = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < a.size(); ++k) sum += (a[i][k] * b[i][k].conj()).re();
    return sum;
}

bool is_skew_hermitian(const GaussMatrix& m) {
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j)
            if (!(m[i][j] + m[j][i].conj()).is_zero()) return false;
    return true;
}

GaussMatrix transpose(const GaussMatrix& m) {
    GaussMatrix t = m;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) t[i][j] = m[j][i];
    return t;
}

GaussMatrix commutator(const GaussMatrix& a, const GaussMatrix& b) {
    GaussMatrix ab = multiply(a, b), ba = multiply(b, a);
    for (std::size_t i = 0; i < ab.size(); ++i)
        for (std::size_t j = 0; j < ab.size(); ++j) ab[i][j] -= ba[i][j];
    return ab;
}

Poly tau_oracle(const GroupContext& ctx, const Poly& f) {
    ctx.check_indices(f);
    PolyBuilder acc;
    for (const auto& z : unitary_basis(ctx.n())) {
        if (!is_zero_matrix(commutator(z.matrix, transpose(z.matrix))))
            throw Error("bracket [Z, Z^t] does not vanish for " + z.label);
        auto jet = path_jet(f, z, ctx.n());
        // Z^2 f = 2 * (s^2-coefficient) / |M|^2
        acc.add(jet[2], GaussRat(Rational(2) / z.norm_sq));
    }
    return acc.build();
}

Poly kappa_oracle(const GroupContext& ctx, const Poly& f, const Poly& h) {
    ctx.check_indices(f);
    ctx.check_indices(h);
    PolyBuilder acc;
    for (const auto& z : unitary_basis(ctx.n())) {
        Poly zf = path_jet(f, z, ctx.n())[1];
        Poly zh = path_jet(h, z, ctx.n())[1];
        acc.add(zf * zh, GaussRat(Rational(1) / z.norm_sq));
    }
    return acc.build();
}

} // namespace biharm
