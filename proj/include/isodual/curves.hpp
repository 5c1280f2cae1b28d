#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "isodual/divisor.hpp"
#include "isodual/field.hpp"

namespace isodual {

enum class CurveFamily {
    Rational,    // projective line over a given constant field
    ElemAbelian, // y^q' + mu y = f(x), additive kernel split over the constants
    Hermitian,   // y^(q+1) = x^q + x over GF(q^2)
    CurveX,      // z^(q+1) = y^q + y stacked on the Hermitian curve, over GF(q^2)
    SuzukiLocus, // splitting locus of y^q + y = x^q0 (x^q + x) over GF(q^4)
    GgsCover     // y^(q^2) - y = x^((q^r+1)/(q+1)) over GF(q^(2r))
};

/// A curve together with the splitting data the code builders consume.  All
/// splitting facts are obtained by root counting over the constant field at
/// construction time (additive image tables / norm fiber scans); closed-form
/// trace predicates are only ever used as cross-checks.  Immutable once
/// built.
class CurveModel {
public:
    static CurveModel rational(FieldPtr f);
    /// y^qprime + mu*y = f(x); requires mu != 0, gcd(deg f, qprime) = 1 and
    /// the additive polynomial T^qprime + mu*T to split over the constants
    /// (kernel of full size qprime), else Error("NotSplit") /
    /// Error("InvalidModel").
    static CurveModel elem_abelian(FieldPtr f, int64_t qprime, int64_t mu,
                                   std::vector<int64_t> fx);
    /// The ell | q+1 subcover preset y^q + y = x^ell over GF(q^2).  Same
    /// machinery as elem_abelian, but the evaluation set conventionally
    /// excludes alpha = 0 (the lone extra split point).
    static CurveModel hermitian_cover(int64_t q, int64_t ell);
    static CurveModel hermitian(int64_t q);
    static CurveModel curve_x(int64_t q);
    /// Splitting locus only: q = 2^(2m+1), m >= 1 (Error("BadParameters")
    /// otherwise, in particular for q = 2).  No generic genus formula applies
    /// (gcd(deg f, q) = q0 by design); the genus q0(q-1) is pinned and
    /// cross-checked through Riemann-Hurwitz.
    static CurveModel suzuki_locus(int64_t q);
    /// r >= 3 odd; constant field GF(q^(2r)).  Evaluation sets exclude
    /// alpha = 0 like hermitian_cover.
    static CurveModel ggs_cover(int64_t q, int r);

    CurveFamily family() const noexcept { return family_; }
    const FieldPtr& field() const noexcept { return field_; }
    long long genus() const noexcept { return genus_; }
    const std::string& curve_id() const noexcept { return curve_id_; }
    /// Identifier of the curve one step below (the rational line for every
    /// family except CurveX, whose base is the Hermitian curve).
    const std::string& base_curve_id() const noexcept { return base_curve_id_; }

    int64_t q() const noexcept { return q_; }
    int r() const noexcept { return r_; }
    int64_t qprime() const noexcept { return qprime_; }
    int64_t mu() const noexcept { return mu_; }
    const std::vector<int64_t>& fx() const noexcept { return fx_; }
    long long fx_degree() const noexcept { return static_cast<long long>(fx_.size()) - 1; }

    /// All alpha with the fiber above P_alpha completely split, ascending by
    /// code (additive families: root-counted image membership; Hermitian:
    /// alpha^q + alpha != 0).
    const std::vector<int64_t>& split_alphas() const;
    /// split_alphas minus the family's conventional exclusions (alpha = 0
    /// for the x^ell / x^M covers, the alpha^q + alpha = 0 locus for the
    /// Suzuki family, whose evaluation set is further cut to the q^3 - q
    /// smallest split alphas); this is the evaluation set the code builders
    /// use.
    std::vector<int64_t> family_alphas() const;
    bool splits(int64_t alpha) const;
    /// Second coordinates of the places above a split alpha, ascending.
    std::vector<int64_t> roots_above(int64_t alpha) const;
    /// Hermitian/CurveX: all w with w^(q+1) = v, ascending.
    const std::vector<int64_t>& norm_fiber_at(int64_t v) const { return norm_fiber_[v]; }

    Place place_infinity_top() const { return Place::infinity(curve_id_); }
    Place place_base(int64_t alpha) const { return Place::affine(base_curve_id_, {alpha}); }
    Place place_base_infinity() const { return Place::infinity(base_curve_id_); }

private:
    CurveModel() = default;
    void build_additive_table(); // image/preimage of T^qprime + mu T
    void build_norm_table();     // fibers of w^(q+1) = v

    CurveFamily family_ = CurveFamily::Rational;
    FieldPtr field_;
    long long genus_ = 0;
    std::string curve_id_, base_curve_id_;
    int64_t q_ = 0, qprime_ = 0, mu_ = 0;
    int r_ = 0;
    std::vector<int64_t> fx_;
    bool excludes_zero_ = false;

    std::vector<int32_t> preimage_;           // additive: value -> first preimage or -1
    std::vector<int64_t> kernel_;             // additive: kernel of T^qprime + mu T
    std::vector<std::vector<int64_t>> norm_fiber_; // hermitian/curveX: v -> all w with w^(q+1) = v
    std::vector<int64_t> split_alphas_;
};

/// Per-base-place classification of a two-level model.
struct PlaceClass {
    bool at_infinity = false;
    int64_t alpha = 0;
    std::string tag; // "split" or "ramified"
    long long e = 1, d = 0;
    std::vector<std::vector<int64_t>> points; // coordinates upstairs
};

struct SplitReport {
    std::string curve;
    long long total_rational = 0; // rational places of the top curve
    long long split_bases = 0, ramified_bases = 0;
    std::vector<PlaceClass> classes;
};

/// Full classification of GF(q^2)-rational places of the Hermitian curve
/// over the x-line: q ramified alphas, q^2 - q split alphas with q+1 points
/// each, one place at infinity; total q^3 + 1.
SplitReport hermitian_places(int64_t q);

/// Rational-point census of the stacked curve by brute force over
/// (x, y, z) in GF(q^2)^3, plus the ramification profile of the top step
/// over the Hermitian curve.  The all-split/partially-split dichotomy the
/// odd-characteristic theory expects degenerates in characteristic 2; the
/// census reports the per-alpha profile and a feasibility flag instead of
/// resolving it.
struct CurveXCensus {
    int64_t q = 0;
    long long affine = 0; // brute-force solutions of both equations
    long long total = 0;  // affine + the place at infinity
    long long hermitian_places_ramified_in_top = 0; // expected q^2 + 1
    /// for alphas with alpha^q + alpha != 0: (#ramified points above alpha)
    /// -> how many alphas show that count
    std::map<int, long long> alpha_ram_histogram;
    /// enough fully-split alphas for the second lifting step to choose from
    bool step2_split_hypothesis_ok = false;
};
CurveXCensus curve_x_census(int64_t q);

/// Census of an additive-cover locus (elem-abelian, Suzuki, GGS): total
/// split alphas by root counting, the family's evaluation count after
/// conventional exclusions, and agreement with the closed-form trace
/// predicate for the families that have one.
struct AdditiveCensus {
    long long split_total = 0;
    long long family_count = 0;
    bool trace_crosscheck_ok = true;
};
AdditiveCensus additive_census(const CurveModel& m);

/// Size of the Suzuki evaluation pool {alpha : Tr to GF(q) = 0 and
/// alpha^q + alpha != 0}, counted by enumeration; always q^3 - q.  Note the
/// curve's full split locus (root-counted by the model) is strictly larger,
/// and vanishing trace of alpha itself does not imply splitting — the
/// solvability criterion is on f(alpha); see additive_census.
long long suzuki_split_count(int64_t q);

/// Monomial evaluation prod coords[i]^exps[i]; negative exponents invert
/// (Error("DivisionByZero") on a zero coordinate).
int64_t evaluate_monomial(const FieldPtr& f, const std::vector<int64_t>& coords,
                          const std::vector<long long>& exps);

/// The extension descriptor of the model's defining step: rational -> model
/// for the additive and Hermitian families, Hermitian -> model for CurveX.
/// Fiber tables are filled for the infinite place and every split alpha
/// (plus the ramified loci); places never touched by the constructions stay
/// unlisted.
ExtensionDescriptor make_extension_descriptor(const CurveModel& m);

/// The canonical divisor representative the Hermitian one-point family's
/// duality argument uses: W = -D + (q^2-2)(sum of the y-zero places) +
/// (q^2-2) Q_inf, where D is the sum of all split places.  Satisfies
/// 2G - D - W = div(y^(2 beta + 2 - q^2)) exactly.
Divisor hermitian_canonical_divisor(const CurveModel& herm);

/// Principal divisor of y on the Hermitian curve: sum of the q y-zero
/// places minus q * Q_inf.
Divisor hermitian_divisor_of_y(const CurveModel& herm);

} // namespace isodual
