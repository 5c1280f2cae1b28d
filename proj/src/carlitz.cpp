#include "isodual/carlitz.hpp"

#include <algorithm>

#include "isodual/errors.hpp"

namespace isodual {

namespace {

// Little-endian polynomials over F_q, element codes as coefficients.  Kept
// trimmed (no trailing zeros); the zero polynomial is the empty vector.
using Poly = std::vector<int64_t>;

void ptrim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly padd(const FieldPtr& f, const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        int64_t x = i < a.size() ? a[i] : 0;
        int64_t y = i < b.size() ? b[i] : 0;
        r[i] = f->add(x, y);
    }
    ptrim(r);
    return r;
}

Poly psub(const FieldPtr& f, const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        int64_t x = i < a.size() ? a[i] : 0;
        int64_t y = i < b.size() ? b[i] : 0;
        r[i] = f->sub(x, y);
    }
    ptrim(r);
    return r;
}

Poly pscale(const FieldPtr& f, const Poly& a, int64_t s) {
    if (s == 0) return {};
    Poly r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = f->mul(a[i], s);
    ptrim(r);
    return r;
}

Poly pmul(const FieldPtr& f, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = f->add(r[i + j], f->mul(a[i], b[j]));
    }
    ptrim(r);
    return r;
}

constexpr int64_t kSpreadCap = int64_t{1} << 24;

// a(x)^(q^i) for a with coefficients in F_q itself: the coefficients are
// Frobenius-fixed, so the power only spreads exponents x^t -> x^(t q^i).
Poly pspread(const Poly& a, int64_t qpow) {
    if (a.empty()) return {};
    int64_t len = static_cast<int64_t>(a.size() - 1) * qpow + 1;
    if (qpow <= 0 || len > kSpreadCap)
        throw Error("BudgetExceeded",
                    "additive-polynomial composition grows past the degree cap");
    Poly r(static_cast<size_t>(len), 0);
    for (size_t t = 0; t < a.size(); ++t) r[t * qpow] = a[t];
    return r;
}

void ctrim(CarlitzPoly& a) {
    while (!a.c.empty() && a.c.back().empty()) a.c.pop_back();
}

CarlitzPoly czero(const FieldPtr& fq) { return CarlitzPoly{fq, {}}; }

CarlitzPoly cscale(const CarlitzPoly& a, int64_t s) {
    if (s == 0) return czero(a.fq);
    CarlitzPoly r{a.fq, {}};
    r.c.reserve(a.c.size());
    for (const Poly& p : a.c) r.c.push_back(pscale(a.fq, p, s));
    ctrim(r);
    return r;
}

CarlitzPoly csub(const CarlitzPoly& a, const CarlitzPoly& b) {
    CarlitzPoly r{a.fq, {}};
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (size_t i = 0; i < r.c.size(); ++i) {
        const Poly& x = i < a.c.size() ? a.c[i] : Poly{};
        const Poly& y = i < b.c.size() ? b.c[i] : Poly{};
        r.c[i] = psub(a.fq, x, y);
    }
    ctrim(r);
    return r;
}

void check_carlitz_args(int64_t q, long long i, long long n, int64_t& p, int& k) {
    if (!prime_power(q, p, k))
        throw Error("BadParameters", "q must be a prime power");
    if (i < 0 || i > 64 || n < 1 || n > 64)
        throw Error("BadParameters", "identity check expects 0 <= i <= 64 and 1 <= n <= 64");
}

} // namespace

bool CarlitzPoly::operator==(const CarlitzPoly& o) const {
    return fq->signature() == o.fq->signature() && c == o.c;
}

CarlitzPoly carlitz_poly(const FieldPtr& fq, const std::vector<int64_t>& f) {
    for (int64_t v : f)
        if (v < 0 || v >= fq->order())
            throw Error("BadParameters", "coefficient code outside the field");
    CarlitzPoly rho_x{fq, {{0, 1}, {1}}}; // u^q + x u
    CarlitzPoly cur{fq, {{1}}};           // rho of 1 is the identity map u
    CarlitzPoly acc = czero(fq);
    for (size_t j = 0; j < f.size(); ++j) {
        if (j > 0) cur = carlitz_compose(rho_x, cur);
        if (f[j] != 0) acc = carlitz_add(acc, cscale(cur, f[j]));
    }
    return acc;
}

CarlitzPoly carlitz_compose(const CarlitzPoly& a, const CarlitzPoly& b) {
    if (!a.fq->same(*b.fq))
        throw Error("FieldMismatch", "composition across different fields");
    CarlitzPoly r = czero(a.fq);
    if (a.c.empty() || b.c.empty()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, {});
    int64_t q = a.fq->order();
    int64_t qpow = 1;
    for (size_t i = 0; i < a.c.size(); ++i, qpow *= q) {
        if (qpow > kSpreadCap)
            throw Error("BudgetExceeded",
                        "additive-polynomial composition grows past the degree cap");
        if (a.c[i].empty()) continue;
        for (size_t j = 0; j < b.c.size(); ++j) {
            if (b.c[j].empty()) continue;
            Poly term = pmul(a.fq, a.c[i], pspread(b.c[j], qpow));
            r.c[i + j] = padd(a.fq, r.c[i + j], term);
        }
    }
    ctrim(r);
    return r;
}

CarlitzPoly carlitz_add(const CarlitzPoly& a, const CarlitzPoly& b) {
    if (!a.fq->same(*b.fq))
        throw Error("FieldMismatch", "addition across different fields");
    CarlitzPoly r{a.fq, {}};
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (size_t i = 0; i < r.c.size(); ++i) {
        const Poly& x = i < a.c.size() ? a.c[i] : Poly{};
        const Poly& y = i < b.c.size() ? b.c[i] : Poly{};
        r.c[i] = padd(a.fq, x, y);
    }
    ctrim(r);
    return r;
}

bool carlitz_right_divisible(const CarlitzPoly& r, const CarlitzPoly& d) {
    if (r.c.empty()) return true;
    if (d.c.empty()) throw Error("DivisionByZero", "right division by zero");
    // Right division r = s o d needs the leading coefficient of d to be a
    // unit of F_q[x], i.e. a nonzero constant.
    const Poly& lead = d.c.back();
    if (lead.size() != 1)
        throw Error("BadParameters", "right division needs a unit leading coefficient");
    int64_t lead_inv = d.fq->inv(lead[0]);
    int64_t q = d.fq->order();

    CarlitzPoly rem = r;
    while (rem.c.size() >= d.c.size()) {
        size_t shift = rem.c.size() - d.c.size();
        int64_t qpow = 1;
        for (size_t t = 0; t < shift; ++t) {
            qpow *= q;
            if (qpow > kSpreadCap)
                throw Error("BudgetExceeded",
                            "additive-polynomial composition grows past the degree cap");
        }
        // Killing the top term of rem with the quotient term a(x) tau^shift
        // requires a * lead^(q^shift) = rem.top; lead is constant, so the
        // twist fixes it.
        Poly a = pscale(d.fq, rem.c.back(), lead_inv);
        CarlitzPoly sub{d.fq, {}};
        sub.c.assign(rem.c.size(), {});
        for (size_t j = 0; j < d.c.size(); ++j) {
            if (d.c[j].empty()) continue;
            sub.c[shift + j] = pmul(d.fq, a, pspread(d.c[j], qpow));
        }
        rem = csub(rem, sub);
        if (!rem.c.empty() && rem.c.size() > shift + d.c.size() - 1)
            throw Error("Internal", "right division failed to reduce the degree");
    }
    return rem.c.empty();
}

int64_t binom_mod_p(long long i, long long j, int64_t p) {
    if (!is_prime(p)) throw Error("NotPrime", "binomial reduction needs a prime modulus");
    if (j < 0 || j > i) return 0;
    // Lucas: C(i, j) = prod C(i_t, j_t) mod p over base-p digits.
    int64_t result = 1;
    while (i > 0 || j > 0) {
        int64_t id = i % p, jd = j % p;
        if (jd > id) return 0;
        // C(id, jd) mod p for digits < p, by the falling-product formula.
        int64_t c = 1;
        for (int64_t t = 0; t < jd; ++t) {
            c = (c * ((id - t) % p)) % p;
            // divide by (t+1) mod p via Fermat inverse
            int64_t denom = (t + 1) % p;
            int64_t inv = 1, base = denom, e = p - 2;
            while (e > 0) {
                if (e & 1) inv = (inv * base) % p;
                base = (base * base) % p;
                e >>= 1;
            }
            c = (c * inv) % p;
        }
        result = (result * c) % p;
        i /= p;
        j /= p;
    }
    return result;
}

CarlitzIdentityReport carlitz_identity_check(int64_t q, long long i, long long n) {
    int64_t p = 0;
    int k = 0;
    check_carlitz_args(q, i, n, p, k);
    FieldPtr fq = Field::make(p, k);

    // Left side multiplicatively: rho is a ring homomorphism, so the action
    // of (x+1)^i is the i-fold composition of rho_(x+1) = u^q + (x+1) u.
    CarlitzPoly rho_x1{fq, {{1, 1}, {1}}};
    CarlitzPoly lhs{fq, {{1}}};
    for (long long t = 0; t < i; ++t) lhs = carlitz_compose(rho_x1, lhs);

    // Right side additively: sum_j C(i, j) rho_(x^j), binomials reduced
    // mod p by Lucas and embedded through the prime subfield.
    CarlitzPoly rho_x{fq, {{0, 1}, {1}}};
    CarlitzPoly cur{fq, {{1}}};
    CarlitzPoly rhs = czero(fq);
    CarlitzPoly rhs_trunc = czero(fq);
    CarlitzIdentityReport rep;
    long long jmax_keep = std::min(i, n - 1);
    for (long long j = 0; j <= i; ++j) {
        if (j > 0) cur = carlitz_compose(rho_x, cur);
        int64_t cj = binom_mod_p(i, j, p);
        if (cj == 0) continue;
        CarlitzPoly term = cscale(cur, cj);
        rhs = carlitz_add(rhs, term);
        if (j <= jmax_keep) {
            rhs_trunc = carlitz_add(rhs_trunc, term);
            rep.j_support.push_back(j);
        }
    }
    rep.exact_ok = (lhs == rhs);

    // In the x^n-torsion module rho_(x^j) acts as zero for j >= n, so the
    // truncated identity holds exactly when the dropped tail is a left
    // multiple of rho_(x^n).
    CarlitzPoly residual = csub(lhs, rhs_trunc);
    if (residual.c.empty()) {
        rep.truncated_ok = true;
    } else if (i >= n) {
        std::vector<int64_t> xn(static_cast<size_t>(n) + 1, 0);
        xn.back() = 1;
        rep.truncated_ok = carlitz_right_divisible(residual, carlitz_poly(fq, xn));
    } else {
        rep.truncated_ok = false; // i < n drops no terms; any residual is a failure
    }
    return rep;
}

std::vector<int> e_sequence(int64_t q, long long n) {
    int64_t p = 0;
    int k = 0;
    if (!prime_power(q, p, k))
        throw Error("BadParameters", "q must be a prime power");
    if (n < 2 || n > 30)
        throw Error("BadParameters", "torsion exponent n must lie in [2, 30]");
    long long m = 0;
    long long qm = 1;
    while (qm < n) {
        qm *= q;
        ++m;
    }
    std::vector<int> e;
    e.reserve(static_cast<size_t>(qm - 1));
    for (long long i = 1; i <= qm - 1; ++i) {
        long long cap = std::min(i, n - 1);
        int found = 0;
        for (long long j = 1; j <= cap; ++j) {
            if (binom_mod_p(i, j, p) != 0) {
                found = static_cast<int>(j);
                break;
            }
        }
        if (found == 0)
            throw Error("Internal", "no admissible binomial index below the torsion bound");
        e.push_back(found);
    }
    return e;
}

long long genus_Kn(int64_t q, long long n, bool force) {
    if (q != 2 && q != 3 && !force)
        throw Error("Unsupported",
                    "genus formula is validated for q in {2, 3}; pass force to evaluate anyway");
    std::vector<int> e = e_sequence(q, n); // validates q, n
    long long m = 0;
    long long qm = 1;
    while (qm < n) {
        qm *= q;
        ++m;
    }
    long long sum = 0;
    for (int ei : e) sum += ipow(q, ei);
    long long lead = ipow(q, static_cast<int>(n - 1)) * (n * (q - 1) - q - 1);
    long long num = lead - sum;
    if (num % qm != 0)
        throw Error("NonIntegralGenus", "genus numerator not divisible by the layer degree");
    long long t = num / qm; // t = 2g - 2
    if (t % 2 != 0)
        throw Error("NonIntegralGenus", "genus numerator yields an odd 2g - 2");
    long long g = t / 2 + 1;
    if (g < 0) throw Error("NonIntegralGenus", "negative genus");
    return g;
}

CyclotomicParams cyclotomic_code_params(int64_t q, long long n) {
    if (q != 2 && q != 3)
        throw Error("Unsupported", "cyclotomic code parameters are defined for q in {2, 3}");
    CyclotomicParams cp;
    cp.q = q;
    cp.n = n;
    cp.genus = genus_Kn(q, n); // validates n
    cp.e = e_sequence(q, n);
    long long m = 0;
    long long qm = 1;
    while (qm < n) {
        qm *= q;
        ++m;
    }
    cp.m = m;

    if (q == 2) {
        // Base: the full rational x-line over F_2.  D pairs the place x = 1
        // with infinity; G balances the degree-2 place of x^2 + x + 1 against
        // a double point at x = 0, so deg G = 0 and the base code is the
        // self-dual [2, 1] repetition code.
        cp.base_curve = "rational/F2";
        Place p1 = Place::affine(cp.base_curve, {1});
        Place pinf = Place::infinity(cp.base_curve);
        Place pquad = Place::labeled(cp.base_curve, "x^2+x+1", 2);
        Place p0 = Place::affine(cp.base_curve, {0});
        cp.D.add(p1, 1);
        cp.D.add(pinf, 1);
        cp.G.add(pquad, 1);
        cp.G.add(p0, -2);
        cp.length = ipow(2, static_cast<int>(n - m));
        cp.dim = ipow(2, static_cast<int>(n - m - 1));
    } else {
        // Base: the degree-2 torsion line F_3(y) with x = -y^2.  D pairs the
        // two places above x = 2 (namely y = 1 and y = 2); G = div(y) is the
        // zero of y minus the pole at infinity, again of degree 0.
        cp.base_curve = "rational/F3";
        Place py1 = Place::affine(cp.base_curve, {1});
        Place py2 = Place::affine(cp.base_curve, {2});
        Place py0 = Place::affine(cp.base_curve, {0});
        Place pinf = Place::infinity(cp.base_curve);
        cp.D.add(py1, 1);
        cp.D.add(py2, 1);
        cp.G.add(py0, 1);
        cp.G.add(pinf, -1);
        cp.length = 4 * ipow(3, static_cast<int>(n - m - 1));
        cp.dim = 2 * ipow(3, static_cast<int>(n - m - 1));
    }

    if (!supports_disjoint(cp.D, cp.G))
        throw Error("Internal", "cyclotomic base divisors share support");
    if (cp.G.degree() != 0)
        throw Error("Internal", "cyclotomic base G must have degree zero");
    cp.designed_d = (cp.length - 2 * cp.genus + 2) / 2;
    return cp;
}

} // namespace isodual
