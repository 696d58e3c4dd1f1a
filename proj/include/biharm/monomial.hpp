#pragma once

#include <boost/container/small_vector.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace biharm {

/// Variable blocks in their fixed order: all Z before P before Q before X before Aux.
enum class Kind : std::uint8_t { Z = 0, P = 1, Q = 2, X = 3, Aux = 4 };

/// Named auxiliary variables. `eps` is reserved for internal formal parameters.
enum class AuxName : std::uint16_t { s = 0, t = 1, a = 2, b = 3, u = 4, v = 5, eps = 6 };

/// A polynomial variable: z_{ij}, p_j, q_k, x_m, or one of the aux names.
/// Packed into a 32-bit key whose natural order is the variable order.
class Var {
public:
    static Var z(unsigned i, unsigned j);
    static Var p(unsigned j);
    static Var q(unsigned k);
    static Var x(unsigned m);
    static Var aux(AuxName name);

    static Var from_key(std::uint32_t key) { return Var(key); }

    /// Inverse of name(): "z11", "z_{12}", "z_{1,2}", "p3", "q10", "x0", "s", ...
    static std::optional<Var> parse(std::string_view name);

    Kind kind() const noexcept { return static_cast<Kind>(key_ >> 24U); }
    unsigned i() const noexcept { return (key_ >> 12U) & 0xFFFU; }
    unsigned j() const noexcept { return key_ & 0xFFFU; }
    std::uint32_t key() const noexcept { return key_; }

    std::string name() const;
    std::string latex() const;

    friend bool operator==(Var a, Var b) noexcept { return a.key_ == b.key_; }
    friend auto operator<=>(Var a, Var b) noexcept { return a.key_ <=> b.key_; }

private:
    explicit Var(std::uint32_t key) : key_(key) {}
    static Var make(Kind kind, unsigned i, unsigned j);
    std::uint32_t key_;
};

struct VarPow {
    std::uint32_t key;
    std::uint32_t exp;
    friend bool operator==(const VarPow&, const VarPow&) = default;
};

/// Sparse product of variable powers, sorted by variable, no zero exponents.
class Monomial {
public:
    using Storage = boost::container::small_vector<VarPow, 6>;

    Monomial() = default;
    explicit Monomial(Var v, std::uint32_t exp = 1);
    /// `factors` need not be sorted; repeated variables are merged.
    static Monomial from_factors(std::initializer_list<std::pair<Var, std::uint32_t>> factors);

    const Storage& factors() const noexcept { return f_; }
    std::uint32_t degree() const noexcept { return deg_; }
    std::uint32_t degree(Var v) const noexcept;
    std::uint32_t degree(Kind block) const noexcept;
    bool is_one() const noexcept { return f_.empty(); }

    /// Factors whose variable lies in (resp. outside) `block`.
    Monomial restrict_to(Kind block) const;
    Monomial remove_block(Kind block) const;

    Monomial operator*(const Monomial& o) const;
    /// nullopt unless `o` divides *this.
    std::optional<Monomial> divide(const Monomial& o) const;
    bool divisible_by(const Monomial& o) const;
    Monomial pow(std::uint32_t e) const;
    /// Lowers the exponent of `v` by one; `v` must occur.
    Monomial lower(Var v) const;

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.deg_ == b.deg_ && a.f_ == b.f_;
    }

    std::size_t hash() const noexcept;

    /// Appends a factor whose key is larger than every stored key.
    void push_back_unchecked(std::uint32_t key, std::uint32_t exp) {
        f_.push_back({key, exp});
        deg_ += exp;
    }

private:
    Storage f_;
    std::uint32_t deg_ = 0;
};

/// Graded lexicographic comparison over the fixed variable order.
/// Returns >0 when a is the larger monomial.
int grlex_compare(const Monomial& a, const Monomial& b) noexcept;

/// Canonical term order: descending grlex.
struct CanonicalOrder {
    bool operator()(const Monomial& a, const Monomial& b) const noexcept {
        return grlex_compare(a, b) > 0;
    }
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

} // namespace biharm
