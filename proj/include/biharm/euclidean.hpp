#pragma once

#include "biharm/format.hpp"
#include "biharm/geometry.hpp"
#include "biharm/verifier.hpp"

#include <string>
#include <utility>
#include <vector>

namespace biharm {

/// sum_m sign_m d^2/dx_m^2.
class FlatOperator {
public:
    FlatOperator(std::string name, std::vector<std::pair<Var, int>> signature);

    /// Laplacian on x1..x4.
    static FlatOperator euclidean();
    /// d'Alembertian (-,+,+,+) on x0..x3.
    static FlatOperator minkowski();

    const std::string& name() const noexcept { return name_; }
    const std::vector<std::pair<Var, int>>& signature() const noexcept { return signature_; }

    Poly apply(const Poly& f) const;
    Poly pairing(const Poly& f, const Poly& h) const;
    SecondOrderOperator as_operator() const;
    /// sum_m sign_m x_m^2.
    Poly quadratic_form() const;

private:
    std::string name_;
    std::vector<std::pair<Var, int>> signature_;
};

RatFn flat_apply(const FlatOperator& op, const RatFn& f);

/// z11 -> x1+ix2, z12 -> x3+ix4, z21 -> -x3+ix4, z22 -> x1-ix2.
Poly embed_su2(const Poly& f);
RatFn embed_su2(const RatFn& f);

/// x1..x4 -> x0..x3.
Poly sphere_to_minkowski(const Poly& f);
RatFn sphere_to_minkowski(const RatFn& f);
/// x0 -> -i x0 on the x0..x3 model.
Poly dualize(const Poly& f);
RatFn dualize(const RatFn& f);
/// embed, re-index and dualize a function of the group coordinates.
RatFn dual_function(const RatFn& f);

/// The metric Re tr(ZW*) on SU(2) is twice the round metric of the unit
/// sphere under the embedding, so tau(f) o pi = |x|^2 Delta(f^) / 2.
inline const Rational& sphere_metric_scale() {
    static const Rational two(2);
    return two;
}

/// (x, y)_L = -x0 y0 + x1 y1 + x2 y2 + x3 y3.
Rational lorentz(const std::vector<Rational>& x, const std::vector<Rational>& y);

/// Rational points of the unit sphere S^3 in x1..x4 order.
std::vector<std::vector<Rational>> sphere_points(std::size_t count);
/// Rational points with (x, x)_L = -1, x0 > 0: x = (1 + r, 2u) / (1 - r),
/// r = |u|^2 < 1, u from a fixed list of small rational vectors.
std::vector<std::vector<Rational>> hyperboloid_points(std::size_t count);

/// |x|^2 Delta f^ for f homogeneous of degree 0 (so f^ = f), kept over
/// powers of the embedded denominator. Throws if f is not of degree 0.
PowerFrac sphere_tension(const RatFn& f_z);
/// |x|^2 Delta (|x|^2 Delta f^).
PowerFrac sphere_bitension(const RatFn& f_z);

enum class HyperbolicConvention {
    /// Formal dual of |x|^2 Delta: +(x,x)_L Box.
    Dual,
    /// lambda^-2 = -(x,x)_L: -(x,x)_L Box.
    Riemannian,
};

PowerFrac hyperbolic_tension(const RatFn& f_star, HyperbolicConvention conv);
PowerFrac hyperbolic_bitension(const RatFn& f_star, HyperbolicConvention conv);

struct LiftSample {
    std::vector<Rational> x;
    GaussRat group_value;
    GaussRat flat_value;
    bool equal = false;
};

struct SphereLiftReport {
    std::vector<LiftSample> samples;
    bool all_equal = false;
    /// Set when the bitension identity was checked symbolically.
    std::optional<bool> bitension_zero;
    Json to_json() const;
};

/// Compares tau(f) at the group point with |x|^2 Delta f^ / scale at x.
/// f must have numeric coefficients. Throws DivisionByZero naming the
/// denominator when a sample is a pole.
SphereLiftReport lift_check_sphere(const RatFn& f_z, const std::vector<std::vector<Rational>>& samples,
                                   bool check_bitension = true);

struct HyperbolicSample {
    std::vector<Rational> x;
    GaussRat dual_value;
    GaussRat riemannian_value;
    std::optional<GaussRat> closed_value;
};

struct HyperbolicLiftReport {
    std::vector<HyperbolicSample> samples;
    bool closed_matches_dual = false;
    bool closed_matches_riemannian = false;
    bool nonzero = false;
    std::optional<bool> bitension_zero;
    Json to_json() const;
};

HyperbolicLiftReport lift_check_hyperbolic(const RatFn& f_star, const std::vector<std::vector<Rational>>& samples,
                                           const std::optional<RatFn>& closed_form = std::nullopt,
                                           bool check_bitension = true);

/// Evaluates at a point given in x0..x3 or x1..x4 order.
std::map<Var, GaussRat> x_point(const std::vector<Rational>& x, unsigned first_index);

} // namespace biharm
