#include "biharm/monomial.hpp"

#include "biharm/error.hpp"

#include <algorithm>
#include <array>
#include <charconv>

namespace biharm {

namespace {

constexpr std::array<std::string_view, 7> kAuxNames = {"s", "t", "a", "b", "u", "v", "eps"};

std::optional<unsigned> parse_index(std::string_view s) {
    if (s.empty()) return std::nullopt;
    unsigned value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
    return value;
}

} // namespace

Var Var::make(Kind kind, unsigned i, unsigned j) {
    if (i >= 4096 || j >= 4096) throw IndexError("variable index out of range");
    return Var((static_cast<std::uint32_t>(kind) << 24U) | (i << 12U) | j);
}

Var Var::z(unsigned i, unsigned j) {
    if (i == 0 || j == 0) throw IndexError("z indices are 1-based");
    return make(Kind::Z, i, j);
}
Var Var::p(unsigned j) {
    if (j == 0) throw IndexError("p indices are 1-based");
    return make(Kind::P, j, 0);
}
Var Var::q(unsigned k) {
    if (k == 0) throw IndexError("q indices are 1-based");
    return make(Kind::Q, k, 0);
}
Var Var::x(unsigned m) { return make(Kind::X, m, 0); }
Var Var::aux(AuxName name) { return make(Kind::Aux, static_cast<unsigned>(name), 0); }

std::optional<Var> Var::parse(std::string_view name) {
    if (name.empty()) return std::nullopt;
    for (std::size_t k = 0; k < kAuxNames.size(); ++k)
        if (name == kAuxNames[k]) return aux(static_cast<AuxName>(k));
    const char head = name.front();
    std::string_view rest = name.substr(1);
    if (head == 'z') {
        if (rest.size() >= 3 && rest.front() == '_' && rest[1] == '{' && rest.back() == '}') {
            std::string_view inner = rest.substr(2, rest.size() - 3);
            auto comma = inner.find(',');
            std::optional<unsigned> i, j;
            if (comma != std::string_view::npos) {
                i = parse_index(inner.substr(0, comma));
                j = parse_index(inner.substr(comma + 1));
            } else if (inner.size() == 2) {
                i = parse_index(inner.substr(0, 1));
                j = parse_index(inner.substr(1, 1));
            }
            if (i && j && *i > 0 && *j > 0 && *i < 4096 && *j < 4096) return z(*i, *j);
            return std::nullopt;
        }
        if (rest.size() == 2) {
            auto i = parse_index(rest.substr(0, 1));
            auto j = parse_index(rest.substr(1, 1));
            if (i && j && *i > 0 && *j > 0) return z(*i, *j);
        }
        return std::nullopt;
    }
    if (head == 'p' || head == 'q' || head == 'x') {
        std::string_view digits = rest;
        if (digits.size() >= 3 && digits.front() == '_' && digits[1] == '{' && digits.back() == '}')
            digits = digits.substr(2, digits.size() - 3);
        auto idx = parse_index(digits);
        if (!idx || *idx >= 4096) return std::nullopt;
        if (head == 'x') return x(*idx);
        if (*idx == 0) return std::nullopt;
        return head == 'p' ? p(*idx) : q(*idx);
    }
    return std::nullopt;
}

std::string Var::name() const {
    switch (kind()) {
    case Kind::Z:
        if (i() < 10 && j() < 10) return "z" + std::to_string(i()) + std::to_string(j());
        return "z_{" + std::to_string(i()) + "," + std::to_string(j()) + "}";
    case Kind::P: return "p" + std::to_string(i());
    case Kind::Q: return "q" + std::to_string(i());
    case Kind::X: return "x" + std::to_string(i());
    case Kind::Aux: return std::string(kAuxNames.at(i()));
    }
    return "?";
}

std::string Var::latex() const {
    switch (kind()) {
    case Kind::Z:
        if (i() < 10 && j() < 10) return "z_{" + std::to_string(i()) + std::to_string(j()) + "}";
        return "z_{" + std::to_string(i()) + "," + std::to_string(j()) + "}";
    case Kind::P: return "p_{" + std::to_string(i()) + "}";
    case Kind::Q: return "q_{" + std::to_string(i()) + "}";
    case Kind::X: return "x_{" + std::to_string(i()) + "}";
    case Kind::Aux: return i() == static_cast<unsigned>(AuxName::eps) ? "\\varepsilon" : name();
    }
    return "?";
}

Monomial::Monomial(Var v, std::uint32_t exp) {
    if (exp != 0) {
        f_.push_back({v.key(), exp});
        deg_ = exp;
    }
}

Monomial Monomial::from_factors(std::initializer_list<std::pair<Var, std::uint32_t>> factors) {
    Monomial m;
    for (const auto& [v, e] : factors) m = m * Monomial(v, e);
    return m;
}

std::uint32_t Monomial::degree(Var v) const noexcept {
    for (const auto& f : f_)
        if (f.key == v.key()) return f.exp;
    return 0;
}

std::uint32_t Monomial::degree(Kind block) const noexcept {
    std::uint32_t d = 0;
    for (const auto& f : f_)
        if ((f.key >> 24U) == static_cast<std::uint32_t>(block)) d += f.exp;
    return d;
}

Monomial Monomial::restrict_to(Kind block) const {
    Monomial m;
    for (const auto& f : f_)
        if ((f.key >> 24U) == static_cast<std::uint32_t>(block)) m.push_back_unchecked(f.key, f.exp);
    return m;
}

Monomial Monomial::remove_block(Kind block) const {
    Monomial m;
    for (const auto& f : f_)
        if ((f.key >> 24U) != static_cast<std::uint32_t>(block)) m.push_back_unchecked(f.key, f.exp);
    return m;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial m;
    m.f_.reserve(f_.size() + o.f_.size());
    auto a = f_.begin();
    auto b = o.f_.begin();
    while (a != f_.end() && b != o.f_.end()) {
        if (a->key < b->key) {
            m.f_.push_back(*a++);
        } else if (b->key < a->key) {
            m.f_.push_back(*b++);
        } else {
            m.f_.push_back({a->key, a->exp + b->exp});
            ++a;
            ++b;
        }
    }
    m.f_.insert(m.f_.end(), a, f_.end());
    m.f_.insert(m.f_.end(), b, o.f_.end());
    m.deg_ = deg_ + o.deg_;
    return m;
}

bool Monomial::divisible_by(const Monomial& o) const {
    if (o.deg_ > deg_) return false;
    auto a = f_.begin();
    for (const auto& g : o.f_) {
        while (a != f_.end() && a->key < g.key) ++a;
        if (a == f_.end() || a->key != g.key || a->exp < g.exp) return false;
    }
    return true;
}

std::optional<Monomial> Monomial::divide(const Monomial& o) const {
    if (!divisible_by(o)) return std::nullopt;
    Monomial m;
    auto b = o.f_.begin();
    for (const auto& a : f_) {
        if (b != o.f_.end() && b->key == a.key) {
            if (a.exp != b->exp) m.push_back_unchecked(a.key, a.exp - b->exp);
            ++b;
        } else {
            m.push_back_unchecked(a.key, a.exp);
        }
    }
    return m;
}

Monomial Monomial::pow(std::uint32_t e) const {
    if (e == 0) return {};
    Monomial m = *this;
    for (auto& f : m.f_) f.exp *= e;
    m.deg_ *= e;
    return m;
}

Monomial Monomial::lower(Var v) const {
    Monomial m;
    for (const auto& f : f_) {
        if (f.key == v.key()) {
            if (f.exp > 1) m.push_back_unchecked(f.key, f.exp - 1);
        } else {
            m.push_back_unchecked(f.key, f.exp);
        }
    }
    return m;
}

std::size_t Monomial::hash() const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (const auto& f : f_) {
        h ^= (static_cast<std::uint64_t>(f.key) << 20U) ^ f.exp;
        h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 29U));
}

int grlex_compare(const Monomial& a, const Monomial& b) noexcept {
    if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    std::size_t k = 0;
    for (; k < fa.size() && k < fb.size(); ++k) {
        if (fa[k].key != fb[k].key) return fa[k].key < fb[k].key ? 1 : -1;
        if (fa[k].exp != fb[k].exp) return fa[k].exp > fb[k].exp ? 1 : -1;
    }
    if (k < fa.size()) return 1;
    if (k < fb.size()) return -1;
    return 0;
}

} // namespace biharm
