#pragma once

#include "biharm/format.hpp"
#include "biharm/geometry.hpp"
#include "biharm/representation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace biharm {

/// z11 z22 - z12 z21.
Poly det_u2();

/// Coefficient system of a collected bitension numerator. The numerator,
/// after dividing by det^det_power and removed_constant, equals
/// sum_i provenance[i] * conditions[i].
struct ConditionSystem {
    unsigned n = 0;
    unsigned alpha = 0;
    unsigned beta = 0;
    std::vector<Poly> conditions;
    std::vector<Monomial> provenance;
    unsigned det_power = 0;
    /// Q-power left in the bitension denominator after exact stripping.
    unsigned q_power = 0;
    GaussRat removed_constant{1};
    Poly reduced_numerator;

    Poly expand() const;
    bool trivial() const noexcept { return conditions.empty(); }
    Json to_json() const;
};

/// Splits a numerator into det power, overall constant and per-z-monomial
/// coefficients.
ConditionSystem collect_conditions(const Poly& numerator);

/// Symbolic p and q; the full bitension numerator of P/Q reduced and split.
ConditionSystem extract_conditions(unsigned n, unsigned alpha, unsigned beta, std::size_t budget_terms = 0);

/// lhs = rhs, kept with its source text.
struct Relation {
    std::string text;
    Poly lhs;
    Poly rhs;
    Poly difference() const { return lhs - rhs; }
};

Relation parse_relation(const std::string& text);

/// The proven relations for n = 2, 3, 4.
std::vector<Relation> theorem_relations(unsigned n);

/// The conjectured relations for general n, rows k = 1..n-1:
///   p_k q_{n+1}^{n+1-k} = q_n^{n-k} ((n+1-k) p_n q_{n+1} - (n-k) p_{n+1} q_n),
///   q_k q_{n+1}^{n-k}   = q_n^{n+1-k}.
/// With `literal_last_line` the q-part of row n-1 is read as printed,
/// p_{n-1} q_{n+1} = q_n^2.
std::vector<Relation> conjecture_relations(unsigned n, bool literal_last_line = false);

/// A coefficient family: images of p_1..p_{n+1} and q_1..q_{n+1} in free
/// parameters, the relations it is claimed to satisfy and the pivot that
/// must be nonzero.
struct Family {
    std::string name;
    unsigned n = 0;
    std::vector<Poly> p;
    std::vector<Poly> q;
    std::vector<Var> parameters;
    std::vector<Relation> relations;
    std::optional<Poly> pivot;

    std::map<Var, Poly> images() const;
    /// Throws Error unless every relation vanishes identically under the images.
    void check_relations() const;
};

/// q_k = s^(n+1-k) t^(k-1),  p_k = s^(n-k) t^(k-1) ((n+1-k) a t - (n-k) b s)
/// for k <= n, p_{n+1} = b t^n. Pivot p_n q_{n+1} - p_{n+1} q_n = t^(2n-1) (a t - b s).
Family parameterized_family(unsigned n, std::string name, std::vector<Relation> relations);
Family theorem_family(unsigned n);
Family conjecture_family(unsigned n);
Family symbolic_family(unsigned n);
Family concrete_family(unsigned n, const std::vector<GaussRat>& p, const std::vector<GaussRat>& q);

/// Compares conjecture readings against the proven relations at n = 2, 3, 4.
struct ReadingReport {
    unsigned n = 0;
    bool pattern_matches_theorem = false;
    bool literal_matches_theorem = false;
    bool literal_holds_on_family = false;
    std::vector<std::string> literal_extra;
    Json to_json() const;
};
ReadingReport compare_readings(unsigned n);

/// A rational point on SU(2): z = [[x1+ix2, x3+ix4], [-x3+ix4, x1-ix2]]
/// from a rational point x of S^3.
struct GroupPoint {
    std::vector<Rational> x;
    std::map<Var, GaussRat> z;
};
/// Deterministic rational S^3 points by inverse stereographic projection
/// of small integer and half-integer vectors.
std::vector<GroupPoint> su2_points(std::size_t count);
GroupPoint su2_point(const std::vector<Rational>& x);

struct Witness {
    std::map<Var, GaussRat> parameters;
    GroupPoint point;
    GaussRat q_value;
    GaussRat tension_value;
    Json to_json() const;
};

/// First point and parameter instance with nonzero pivot, Q != 0 and
/// tau(f) != 0. Returns nullopt when the tension numerator is zero or the
/// bounded search fails.
std::optional<Witness> properness_witness(const Family& family, const PowerFrac& tension,
                                          std::size_t max_points = 40);

enum class Status { Verified, Refuted, NotProper, Aborted };
enum class Proper { Yes, No, Unknown };

const char* to_string(Status s);
const char* to_string(Proper p);

struct AnalysisOptions {
    std::size_t budget_terms = 0;
    /// Largest tension numerator printed in certificates.
    std::size_t print_limit = 400;
};

struct Verdict {
    std::string family;
    unsigned n = 0;
    unsigned alpha = 0;
    unsigned beta = 0;
    Status status = Status::Aborted;
    bool biharmonic = false;
    bool harmonic = false;
    Proper proper = Proper::Unknown;
    QuotientPair pq;
    PowerFrac tension;
    PowerFrac bitension;
    std::optional<Witness> witness;
    /// First nonvanishing bitension coefficient when refuted.
    std::optional<std::pair<Monomial, Poly>> obstruction;
    std::string abort_stage;
    std::string note;

    Json certificate(const Family& family, const AnalysisOptions& opts = {}) const;
    int exit_code() const;
};

Verdict analyze(const Family& family, unsigned alpha, unsigned beta, const AnalysisOptions& opts = {});

Verdict verify_theorem(unsigned n, unsigned alpha, unsigned beta, const AnalysisOptions& opts = {});
Verdict check_conjecture(unsigned n, unsigned alpha, unsigned beta, const AnalysisOptions& opts = {});

/// All ordered pairs alpha != beta in lexicographic order.
std::vector<std::pair<unsigned, unsigned>> ordered_pairs(unsigned n);

} // namespace biharm
