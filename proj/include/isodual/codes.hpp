#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "isodual/curves.hpp"
#include "isodual/divisor.hpp"
#include "isodual/matrix.hpp"

namespace isodual {

/// Where a code came from: enough to rebuild it, audit its divisors, and
/// derive its designed distance.  D and G live on the code's own curve.
struct Provenance {
    std::string family;
    std::map<std::string, long long> iparams;
    std::vector<int64_t> alphas; // base evaluation alphas, ascending
    Divisor D, G;
    long long genus = 0;
    long long designed_distance = 0; // n - deg G
};

/// Evaluation code with an explicit full-rank generator matrix and one place
/// per column.
struct LinearCode {
    FieldPtr field;
    int n = 0, k = 0;
    MatGF gen; // k x n, rank k
    std::vector<Place> columns;
    Provenance prov;
};

/// Rational-line iso-dual code: rows 1, x, ..., x^(n/2-1) evaluated at n
/// distinct alphas (caller order preserved); D = sum P_alpha,
/// G = ((n-2)/2) P_inf.  Errors: OddLength (n odd or < 2), DuplicateAlpha.
LinearCode build_rational_isodual(const FieldPtr& f, std::vector<int64_t> alphas);

/// Lift of the rational iso-dual code along an additive cover
/// y^q' + mu y = f(x): columns are the q'|alphas| places above the (sorted)
/// evaluation alphas, rows the monomials x^a y^b with 0 <= b < q' and
/// q'a + (deg f) b <= r, r = (q'(n + deg f - 1) - deg f - 1)/2.
/// Errors: BadParity (n odd or < 4), DuplicateAlpha, NotSplit,
/// DimensionMismatch (basis/rank self-checks).
LinearCode build_eab_lift(const CurveModel& m, std::vector<int64_t> alphas,
                          const std::string& family = "eab");

/// Hermitian multi-point iso-dual code: C_L(D, G) with D the sum of all
/// q^3 - q split places and G = (s - q beta) Q_inf + beta * (sum of y-zero
/// places), s = (q^3 + q^2 - 2q - 2)/2.  The Riemann-Roch basis comes from
/// the shift trick L(G) = y^(-beta) L(s Q_inf), valid because
/// div(y) = (sum of y-zero places) - q Q_inf; the DimensionMismatch
/// self-check guards it.  beta must be a nonzero integer.
LinearCode build_hermitian_isodual(int64_t q, long long beta);

/// First lifting step toward the stacked curve for q = 2^s, s >= 2: the
/// rational iso-dual code on the first (q^2-q)/2 split alphas (ascending) is
/// lifted along the Hermitian cover; G^F = Con(G) + (1/2) Diff lands on
/// Q_inf and the y-zero places, so the same shift-trick basis applies with
/// beta = q/2.  Errors: BadParameters for q not of that shape.
LinearCode build_two_step_first_lift(int64_t q);

/// The x = (z(P_i)) certificate vector the one-point Hermitian family
/// carries, z = y^(2 beta + 2 - q^2): per column, w^(2 beta + 2 - q^2).
std::vector<int64_t> hermitian_claimed_certificate(const LinearCode& c);

struct IsoDualCertificate {
    enum class Verdict { SelfDual, IsoDual, NotIsoDual, Inconclusive };
    Verdict verdict = Verdict::Inconclusive;
    std::vector<int64_t> x;  // everywhere-nonzero scaling when (Self/Iso)Dual
    bool residual_ok = false; // found x re-verified by full multiplication
    long long nullity = -1;   // dim of the exact solution space
    long long samples = 0;    // random combinations tried (sampling fallback)
    bool claimed_checked = false, claimed_ok = false;
    std::string note;
    uint64_t seed = 0;

    bool definitive() const noexcept { return verdict != Verdict::Inconclusive; }
    bool positive() const noexcept {
        return verdict == Verdict::SelfDual || verdict == Verdict::IsoDual;
    }
};
std::string verdict_name(IsoDualCertificate::Verdict v);

/// Decide whether some everywhere-nonzero x satisfies G diag(x) G^T = 0.
///
/// The solution space V of the bilinear system (over all row pairs i <= j)
/// is computed exactly at every size: the row space is seeded with the
/// diagonal rows and seeded random Schur combinations (yG)∘(zG), and each
/// nullspace basis vector is then verified against *all* equations via a
/// full G diag(v) G^T product, folding in any violated pair row and
/// repeating until clean.  V exact keeps NotIsoDual sound; only the
/// everywhere-nonzero search inside V may be Inconclusive (exhaustive scan
/// when |F|^nullity <= 2^20, else 2^16 seeded samples).  The all-ones vector
/// is tested first so self-dual codes are named as such.  Verdicts are
/// deterministic and seed-independent; claimed_x, when given, is checked
/// independently of the search.
IsoDualCertificate certify_isodual(const LinearCode& c,
                                   const std::vector<int64_t>* claimed_x = nullptr,
                                   uint64_t seed = 0);

struct DistanceReport {
    enum class Mode { Exact, Bounds };
    Mode mode = Mode::Bounds;
    long long d = -1;      // exact distance (Exact mode)
    long long lower = 0;   // designed bound from provenance
    long long upper = -1;  // lightest codeword seen (Bounds mode)
    unsigned long long enumerated = 0;
    std::vector<int64_t> witness; // message attaining the minimum / upper
    uint64_t seed = 0;
    int threads = 1;
};

/// Exact minimum distance by full message enumeration when |F|^k <= cap
/// (default 2^22), else designed/sampled bounds.  Messages are enumerated by
/// ascending integer index sum m_i |F|^i with incremental codeword updates;
/// shards reduce by (weight, least index), so any thread count gives
/// bit-identical reports.  Error: BudgetExceeded when exact_required and the
/// budget does not cover |F|^k.
DistanceReport min_distance(const LinearCode& c, uint64_t cap = uint64_t(1) << 22,
                            int threads = 1, bool exact_required = false,
                            uint64_t seed = 0);

struct ParamReport {
    std::string family;
    std::map<std::string, long long> params;
    long long n = 0, k = 0;
    long long designed_d = 0;
    long long genus = 0;
    std::map<std::string, long long> extra;
};

/// Closed-form parameter tuples; purely arithmetic.  Families: rational,
/// hermitian, eab, herm-cover, suzuki, ggs, two-step, two-step-final.
/// Where a family quotes a designed-distance form that differs from the
/// generic lift bound (qn - 2g + 2)/2, the report carries the other reading
/// in extra["alt_designed_d"].
ParamReport param_report(const std::string& family,
                         const std::map<std::string, long long>& params);

} // namespace isodual
