#include "biharm/poly.hpp"

#include "biharm/error.hpp"

#include <algorithm>

namespace biharm {

namespace {

void sort_terms(std::vector<Term>& terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
        return grlex_compare(a.mono, b.mono) > 0;
    });
}

} // namespace

void PolyBuilder::add(const Monomial& m, const GaussRat& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = acc_.try_emplace(m, c);
    if (!inserted) it->second += c;
}

void PolyBuilder::add(Monomial&& m, const GaussRat& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = acc_.try_emplace(std::move(m), c);
    if (!inserted) it->second += c;
}

void PolyBuilder::add(const Poly& p, const GaussRat& scale) {
    if (scale.is_zero()) return;
    for (const auto& t : p.terms()) add(t.mono, scale.is_one() ? t.coeff : t.coeff * scale);
}

Poly PolyBuilder::build() {
    std::vector<Term> terms;
    terms.reserve(acc_.size());
    for (auto& [m, c] : acc_)
        if (!c.is_zero()) terms.push_back({m, std::move(c)});
    acc_.clear();
    sort_terms(terms);
    Poly out;
    out.terms_ = std::move(terms);
    return out;
}

Poly::Poly(const GaussRat& c) {
    if (!c.is_zero()) terms_.push_back({Monomial(), c});
}

Poly::Poly(const Monomial& m, GaussRat c) {
    if (!c.is_zero()) terms_.push_back({m, std::move(c)});
}

Poly Poly::from_terms(std::vector<Term> terms) {
    sort_terms(terms);
    Poly p;
    p.terms_.reserve(terms.size());
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coeff += t.coeff;
            if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
        } else if (!t.coeff.is_zero()) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

bool Poly::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.is_one());
}

GaussRat Poly::constant_value() const {
    if (!is_constant()) throw Error("polynomial is not constant");
    return terms_.empty() ? GaussRat(0) : terms_.front().coeff;
}

std::uint32_t Poly::degree() const noexcept {
    return terms_.empty() ? 0 : terms_.front().mono.degree();
}

std::uint32_t Poly::degree(Var v) const noexcept {
    std::uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree(v));
    return d;
}

std::uint32_t Poly::degree(Kind block) const noexcept {
    std::uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree(block));
    return d;
}

bool Poly::contains(Var v) const noexcept { return degree(v) > 0; }
bool Poly::contains(Kind block) const noexcept { return degree(block) > 0; }

std::vector<Var> Poly::variables() const {
    std::vector<std::uint32_t> keys;
    for (const auto& t : terms_)
        for (const auto& f : t.mono.factors()) keys.push_back(f.key);
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    std::vector<Var> vars;
    vars.reserve(keys.size());
    for (auto k : keys) vars.push_back(Var::from_key(k));
    return vars;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

namespace {

template <bool Subtract>
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    auto x = a.begin();
    auto y = b.begin();
    while (x != a.end() && y != b.end()) {
        int c = grlex_compare(x->mono, y->mono);
        if (c > 0) {
            out.push_back(*x++);
        } else if (c < 0) {
            out.push_back(Subtract ? Term{y->mono, -y->coeff} : *y);
            ++y;
        } else {
            GaussRat s = Subtract ? x->coeff - y->coeff : x->coeff + y->coeff;
            if (!s.is_zero()) out.push_back({x->mono, std::move(s)});
            ++x;
            ++y;
        }
    }
    out.insert(out.end(), x, a.end());
    for (; y != b.end(); ++y) out.push_back(Subtract ? Term{y->mono, -y->coeff} : *y);
    return out;
}

} // namespace

Poly& Poly::operator+=(const Poly& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    terms_ = merge_terms<false>(terms_, o.terms_);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.is_zero()) return *this;
    terms_ = merge_terms<true>(terms_, o.terms_);
    return *this;
}

Poly& Poly::operator*=(const GaussRat& c) {
    if (c.is_zero()) {
        terms_.clear();
    } else if (!c.is_one()) {
        for (auto& t : terms_) t.coeff *= c;
    }
    return *this;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly Poly::mul_monomial(const Monomial& m, const GaussRat& c) const {
    Poly r;
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    // Multiplication by a monomial preserves the term order.
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, c.is_one() ? t.coeff : t.coeff * c});
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.size() == 1) return b.mul_monomial(a.terms_.front().mono, a.terms_.front().coeff);
    if (b.size() == 1) return a.mul_monomial(b.terms_.front().mono, b.terms_.front().coeff);
    const Poly& big = a.size() >= b.size() ? a : b;
    const Poly& small = a.size() >= b.size() ? b : a;
    PolyBuilder acc;
    for (const auto& s : small.terms_)
        for (const auto& t : big.terms_) acc.add(t.mono * s.mono, t.coeff * s.coeff);
    return acc.build();
}

bool operator==(const Poly& a, const Poly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t k = 0; k < a.terms_.size(); ++k) {
        if (!(a.terms_[k].mono == b.terms_[k].mono) || !(a.terms_[k].coeff == b.terms_[k].coeff))
            return false;
    }
    return true;
}

Poly Poly::pow(unsigned e) const {
    if (e == 0) return Poly(1);
    if (size() == 1) return Poly(terms_.front().mono.pow(e), terms_.front().coeff.pow(e));
    Poly r = *this;
    for (unsigned k = 1; k < e; ++k) r = r * *this;
    return r;
}

Poly Poly::partial(Var v) const {
    Poly r;
    for (const auto& t : terms_) {
        std::uint32_t e = t.mono.degree(v);
        if (e == 0) continue;
        r.terms_.push_back({t.mono.lower(v), t.coeff * GaussRat(static_cast<long>(e))});
    }
    return r;
}

namespace {

// Cached powers of the images of substituted variables.
class PowerCache {
public:
    PowerCache(const std::map<Var, Poly>& images, std::optional<std::pair<Var, std::uint32_t>> trunc)
        : images_(images), trunc_(trunc) {}

    const Poly* image(std::uint32_t key) const {
        auto it = images_.find(Var::from_key(key));
        return it == images_.end() ? nullptr : &it->second;
    }

    const Poly& power(std::uint32_t key, std::uint32_t e) {
        auto& list = cache_[key];
        const Poly& base = *image(key);
        if (list.empty()) list.push_back(Poly(1));
        while (list.size() <= e) list.push_back(clip(list.back() * base));
        return list[e];
    }

    Poly clip(Poly p) const { return trunc_ ? p.truncate(trunc_->first, trunc_->second) : p; }

private:
    const std::map<Var, Poly>& images_;
    std::optional<std::pair<Var, std::uint32_t>> trunc_;
    std::map<std::uint32_t, std::vector<Poly>> cache_;
};

Poly substitute_impl(const std::vector<Term>& terms, const std::map<Var, Poly>& images,
                     std::optional<std::pair<Var, std::uint32_t>> trunc) {
    PowerCache cache(images, trunc);
    PolyBuilder acc;
    for (const auto& t : terms) {
        Monomial kept;
        std::vector<std::pair<std::uint32_t, std::uint32_t>> mapped;
        for (const auto& f : t.mono.factors()) {
            if (cache.image(f.key) != nullptr)
                mapped.emplace_back(f.key, f.exp);
            else
                kept.push_back_unchecked(f.key, f.exp);
        }
        Poly prod(kept, t.coeff);
        for (const auto& [key, e] : mapped) {
            prod = cache.clip(prod * cache.power(key, e));
            if (prod.is_zero()) break;
        }
        acc.add(prod);
    }
    return cache.clip(acc.build());
}

} // namespace

Poly Poly::substitute(const std::map<Var, Poly>& images) const {
    return substitute_impl(terms_, images, std::nullopt);
}

Poly Poly::substitute_truncated(const std::map<Var, Poly>& images, Var trunc_var,
                                std::uint32_t max_degree) const {
    return substitute_impl(terms_, images, std::make_pair(trunc_var, max_degree));
}

Poly Poly::evaluate(const std::map<Var, GaussRat>& point) const {
    PolyBuilder acc;
    std::map<std::pair<std::uint32_t, std::uint32_t>, GaussRat> powers;
    for (const auto& t : terms_) {
        Monomial kept;
        GaussRat c = t.coeff;
        for (const auto& f : t.mono.factors()) {
            auto it = point.find(Var::from_key(f.key));
            if (it == point.end()) {
                kept.push_back_unchecked(f.key, f.exp);
                continue;
            }
            auto [pit, inserted] = powers.try_emplace({f.key, f.exp});
            if (inserted) pit->second = it->second.pow(f.exp);
            c *= pit->second;
            if (c.is_zero()) break;
        }
        acc.add(std::move(kept), c);
    }
    return acc.build();
}

Poly Poly::coefficient(Var v, std::uint32_t k) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
        if (t.mono.degree(v) != k) continue;
        Monomial m;
        for (const auto& f : t.mono.factors())
            if (f.key != v.key()) m.push_back_unchecked(f.key, f.exp);
        out.push_back({std::move(m), t.coeff});
    }
    return from_terms(std::move(out));
}

Poly Poly::truncate(Var v, std::uint32_t max_degree) const {
    Poly r;
    for (const auto& t : terms_)
        if (t.mono.degree(v) <= max_degree) r.terms_.push_back(t);
    return r;
}

std::pair<GaussRat, Poly> Poly::primitive() const {
    if (is_zero()) return {GaussRat(1), *this};
    Integer den_lcm = 1;
    for (const auto& t : terms_) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.re().get_den_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.im().get_den_mpz_t());
    }
    Integer num_gcd = 0;
    for (const auto& t : terms_) {
        Rational re = t.coeff.re() * den_lcm;
        Rational im = t.coeff.im() * den_lcm;
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), re.get_num_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), im.get_num_mpz_t());
    }
    Rational content(num_gcd, den_lcm);
    content.canonicalize();
    const GaussRat& lead = terms_.front().coeff;
    int sign = sgn(lead.re()) != 0 ? sgn(lead.re()) : sgn(lead.im());
    if (sign < 0) content = -content;
    GaussRat c(content);
    Poly r = *this * c.inverse();
    return {c, r};
}

std::size_t Poly::hash() const noexcept {
    std::size_t h = terms_.size();
    for (const auto& t : terms_) h = h * 1000003U ^ t.mono.hash();
    return h;
}

std::optional<Poly> try_exact_div(const Poly& f, const Poly& g) {
    if (g.is_zero()) throw DivisionByZero("exact division by the zero polynomial");
    if (f.is_zero()) return Poly();
    if (g.size() == 1) {
        const Term& lt = g.leading();
        GaussRat inv = lt.coeff.inverse();
        std::vector<Term> out;
        out.reserve(f.size());
        for (const auto& t : f.terms()) {
            auto m = t.mono.divide(lt.mono);
            if (!m) return std::nullopt;
            out.push_back({std::move(*m), t.coeff * inv});
        }
        return Poly::from_terms(std::move(out));
    }
    const Term& lt = g.leading();
    const GaussRat inv = lt.coeff.inverse();
    std::map<Monomial, GaussRat, CanonicalOrder> rem;
    for (const auto& t : f.terms()) rem.emplace_hint(rem.end(), t.mono, t.coeff);
    std::vector<Term> quotient;
    while (!rem.empty()) {
        auto head = rem.begin();
        auto qm = head->first.divide(lt.mono);
        if (!qm) return std::nullopt;
        GaussRat qc = head->second * inv;
        rem.erase(head);
        for (std::size_t k = 1; k < g.size(); ++k) {
            const Term& t = g.terms()[k];
            Monomial m = *qm * t.mono;
            GaussRat c = qc * t.coeff;
            auto [it, inserted] = rem.try_emplace(std::move(m), -c);
            if (!inserted) {
                it->second -= c;
                if (it->second.is_zero()) rem.erase(it);
            }
        }
        quotient.push_back({std::move(*qm), std::move(qc)});
    }
    return Poly::from_terms(std::move(quotient));
}

Poly exact_div(const Poly& f, const Poly& g) {
    auto q = try_exact_div(f, g);
    if (!q) throw NotDivisible("divisor does not divide the polynomial exactly");
    return *q;
}

std::pair<unsigned, Poly> strip_factor(Poly f, const Poly& g, unsigned max_times) {
    unsigned count = 0;
    if (f.is_zero() || g.is_constant()) return {0, f};
    while (count < max_times) {
        auto q = try_exact_div(f, g);
        if (!q) break;
        f = std::move(*q);
        ++count;
    }
    return {count, f};
}

std::vector<std::pair<Monomial, Poly>> collect_by_block(const Poly& f, Kind block) {
    std::map<Monomial, std::vector<Term>, CanonicalOrder> groups;
    for (const auto& t : f.terms())
        groups[t.mono.restrict_to(block)].push_back({t.mono.remove_block(block), t.coeff});
    std::vector<std::pair<Monomial, Poly>> out;
    out.reserve(groups.size());
    for (auto& [m, terms] : groups) out.emplace_back(m, Poly::from_terms(std::move(terms)));
    return out;
}

Poly expand_collection(const std::vector<std::pair<Monomial, Poly>>& collection) {
    Poly r;
    for (const auto& [m, c] : collection) r += c.mul_monomial(m);
    return r;
}

} // namespace biharm
