#pragma once

#include <cstdint>
#include <vector>

#include "isodual/divisor.hpp"
#include "isodual/field.hpp"

namespace isodual {

/// Additive (q-linearized) polynomial rho_f(u) = sum_i c_i(x) u^(q^i) with
/// coefficients in F_q[x], the image of f in the Carlitz-module action
/// u^f = f(phi)(u) generated by phi(u) = u^q + x u.  Coefficients are stored
/// little-endian in x; c.size() - 1 is the tau-degree.
struct CarlitzPoly {
    FieldPtr fq;
    std::vector<std::vector<int64_t>> c;

    long long tau_degree() const noexcept { return static_cast<long long>(c.size()) - 1; }
    bool operator==(const CarlitzPoly& o) const;
};

/// rho_f for f in F_q[x] (little-endian), built from rho_x = u^q + x u by
/// composition and F_q-linearity.
CarlitzPoly carlitz_poly(const FieldPtr& fq, const std::vector<int64_t>& f);

/// Composition a(b(u)) in the twisted polynomial ring: coefficients multiply
/// with a q^i-power twist, which on F_q[x] is pure exponent spreading.
CarlitzPoly carlitz_compose(const CarlitzPoly& a, const CarlitzPoly& b);

CarlitzPoly carlitz_add(const CarlitzPoly& a, const CarlitzPoly& b);

/// Does r = s o d hold for some additive polynomial s?  (Right division by
/// the monic d, exact remainder test.)
bool carlitz_right_divisible(const CarlitzPoly& r, const CarlitzPoly& d);

/// C(i, j) mod p by Lucas' theorem (p prime).
int64_t binom_mod_p(long long i, long long j, int64_t p);

struct CarlitzIdentityReport {
    bool exact_ok = false;     // rho_((x+1)^i) = sum_j C(i,j) rho_(x^j)
    bool truncated_ok = false; // dropping j >= n leaves a multiple of rho_(x^n)
    std::vector<long long> j_support; // surviving j <= min(i, n-1) with C(i,j) != 0 mod p
};

/// Verifies the binomial expansion of the Carlitz action of (x+1)^i, both as
/// an exact identity of additive polynomials and in the torsion module where
/// the terms with j >= n act as zero.
CarlitzIdentityReport carlitz_identity_check(int64_t q, long long i, long long n);

/// e_i = least j in [1, min(i, n-1)] with p not dividing C(i, j), for
/// i = 1 .. q^m - 1 where m = ceil(log_q n).  Such j always exists: the
/// lowest nonzero base-p digit of i gives one at p^t <= p^(m-1) <= n-1.
std::vector<int> e_sequence(int64_t q, long long n);

/// Genus of the degree-q^(n-m-1)(q-1) subfield K_n cut out of the x^n-torsion
/// cyclotomic extension by its cyclic degree-q^m top layer:
///   g = (1/2) q^(-m) ( q^(n-1) (n(q-1) - q - 1) - sum_i q^(e_i) ) + 1.
/// Throws NonIntegralGenus if the arithmetic does not close; refuses q not in
/// {2, 3} unless force (the e_i divisibility analysis is stated for prime q).
long long genus_Kn(int64_t q, long long n, bool force = false);

struct CyclotomicParams {
    int64_t q = 0;
    long long n = 0;
    long long m = 0;       // ceil(log_q n)
    std::vector<int> e;    // e_1 .. e_(q^m - 1)
    long long genus = 0;   // g(K_n)
    long long length = 0;  // lifted code length
    long long dim = 0;     // lifted code dimension
    long long designed_d = 0; // (length - 2 genus + 2)/2; can be <= 0 here
    std::string base_curve;
    Divisor D, G; // base divisors on the rational field the lift starts from
};

/// Parameters of the binary (q=2) and ternary (q=3) cyclotomic iso-dual
/// codes: base divisors on the rational line (binary: D = P_(x+1) + P_inf,
/// G = P_(x^2+x+1) - 2 P_x; ternary, on the degree-2 torsion line F_3(y) with
/// y^2 = -x: D = the two places over x-2, G = div(y)), lifted length and
/// dimension 2^(n-m) / 2^(n-m-1) resp. 4*3^(n-m-1) / 2*3^(n-m-1).
CyclotomicParams cyclotomic_code_params(int64_t q, long long n);

} // namespace isodual
