#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "isodual/field.hpp"

namespace isodual {

/// A closed point of a curve, identified structurally: the curve identifier
/// string, a kind tag, and either affine coordinates (element codes) or a
/// free-form label for places that are named rather than coordinatized
/// (higher-degree places, abstract function-field places).  Places compare
/// by (curve, kind, coords, label, degree); two places are the same point
/// iff they compare equal.
struct Place {
    enum class Kind { Infinite, Affine, Labeled };

    std::string curve;
    Kind kind = Kind::Infinite;
    std::vector<int64_t> coords; // Affine only
    std::string label;           // Labeled only
    int degree = 1;

    static Place infinity(std::string curve_id) {
        Place p;
        p.curve = std::move(curve_id);
        p.kind = Kind::Infinite;
        return p;
    }
    static Place affine(std::string curve_id, std::vector<int64_t> coords) {
        Place p;
        p.curve = std::move(curve_id);
        p.kind = Kind::Affine;
        p.coords = std::move(coords);
        return p;
    }
    static Place labeled(std::string curve_id, std::string label, int degree = 1) {
        Place p;
        p.curve = std::move(curve_id);
        p.kind = Kind::Labeled;
        p.label = std::move(label);
        p.degree = degree;
        return p;
    }

    auto key() const { return std::tie(curve, kind, coords, label, degree); }
    bool operator<(const Place& o) const { return key() < o.key(); }
    bool operator==(const Place& o) const { return key() == o.key(); }

    std::string to_string() const;
};

/// Formal integer combination of places with exact coefficient bookkeeping.
/// Zero coefficients are never stored.
class Divisor {
public:
    Divisor() = default;

    void add(const Place& p, long long coeff);
    long long coeff(const Place& p) const;
    long long degree() const; // sum coeff * place degree
    bool empty() const noexcept { return terms_.empty(); }
    size_t support_size() const noexcept { return terms_.size(); }
    const std::map<Place, long long>& terms() const noexcept { return terms_; }

    Divisor operator+(const Divisor& o) const;
    Divisor operator-(const Divisor& o) const;
    Divisor operator*(long long s) const;
    bool operator==(const Divisor& o) const { return terms_ == o.terms_; }

    std::string to_string() const;

private:
    std::map<Place, long long> terms_;
};

bool supports_disjoint(const Divisor& a, const Divisor& b);

/// One place above a base place, with ramification index e and different
/// exponent d.
struct FiberEntry {
    Place above;
    long long e = 1;
    long long d = 0;
};

/// Finite separable extension M/F of function fields, described by the data
/// the divisor calculus needs: the two curves, [M:F], genera, characteristic,
/// and an explicit fiber table for every base place the toolkit will ever
/// touch (produced by root counting in the curve models).  Base places
/// absent from the table are never silently defaulted: asking for their
/// fiber raises UnknownFiber.
struct ExtensionDescriptor {
    std::string base_curve;
    std::string top_curve;
    long long degree = 1;
    long long base_genus = 0;
    long long top_genus = 0;
    int64_t characteristic = 0;
    std::map<Place, std::vector<FiberEntry>> fibers;

    /// Consistency check: for each listed base place the fundamental
    /// equality sum_i e_i * deg(Q_i) = [M:F] * deg(P) must hold, no top
    /// place may appear in two fibers, and e >= 1, d >= 0 everywhere.
    void validate() const;
};

/// Conorm map extended linearly: Con(sum n_P P) = sum n_P sum_Q e(Q|P) Q.
/// Throws Error("UnknownFiber") when D touches a place without fiber data.
Divisor conorm(const ExtensionDescriptor& ext, const Divisor& d);

/// Different divisor: sum over all listed fiber entries with d > 0.
Divisor different(const ExtensionDescriptor& ext);

/// Genus of the top field from Riemann-Hurwitz:
/// 2 g_M - 2 = [M:F] (2 g_F - 2) + deg Diff.
/// Throws Error("NonIntegralGenus") if the right-hand side is odd or the
/// resulting genus is negative.
long long riemann_hurwitz(const ExtensionDescriptor& ext);

struct LiftedDivisors {
    Divisor d_top; // Con(D)
    Divisor g_top; // Con(G) + (1/2) Diff
};

/// The divisor-level step of lifting an iso-dual code along M/F:
///   D~ = Con(D),   G~ = Con(G) + (1/2) Diff(M/F).
/// Preconditions enforced:
///   - supp(D) and supp(G) disjoint                      -> SupportOverlap
///   - every different exponent in the descriptor even   -> OddDifferentExponent
///     (the error message classifies why none of the standard sufficient
///     conditions for even exponents applies)
///   - every place of supp(D) splits completely          -> NonSplitPlace
/// Postconditions asserted: supp(D~) and supp(G~) disjoint, and when
/// deg G = (deg D + 2 g_F - 2)/2 on the base, the lifted degree satisfies
/// deg G~ = (deg D~ + 2 g_M - 2)/2.
LiftedDivisors lift_divisors(const ExtensionDescriptor& ext, const Divisor& d,
                             const Divisor& g);

/// Degree-side iso-duality test: deg D even and deg G = (deg D + 2g - 2)/2.
bool isodual_degree_check(const Divisor& d, const Divisor& g, long long genus);

} // namespace isodual
