#include "isodual/field.hpp"

#include <algorithm>

namespace isodual {

bool is_prime(int64_t n) {
    if (n < 2) return false;
    for (int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool prime_power(int64_t n, int64_t& p, int& k) {
    if (n < 2) return false;
    int64_t d = 2;
    while (d * d <= n && n % d != 0) ++d;
    p = (d * d <= n) ? d : n;
    k = 0;
    int64_t t = n;
    while (t % p == 0) { t /= p; ++k; }
    return t == 1;
}

int64_t ipow(int64_t base, int exp) {
    int64_t r = 1;
    while (exp-- > 0) r *= base;
    return r;
}

namespace {

// Polynomial helpers over GF(p), little-endian coefficient vectors.

std::vector<int64_t> poly_mod(std::vector<int64_t> a, const std::vector<int64_t>& mod,
                              int64_t p) {
    // mod is monic.
    int dm = static_cast<int>(mod.size()) - 1;
    for (int i = static_cast<int>(a.size()) - 1; i >= dm; --i) {
        int64_t c = a[i] % p;
        if (c == 0) continue;
        for (int j = 0; j <= dm; ++j) {
            int64_t& t = a[i - dm + j];
            t = ((t - c * mod[j]) % p + p) % p;
        }
    }
    a.resize(dm);
    return a;
}

std::vector<int64_t> poly_mul_mod(const std::vector<int64_t>& a,
                                  const std::vector<int64_t>& b,
                                  const std::vector<int64_t>& mod, int64_t p) {
    std::vector<int64_t> prod(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
    return poly_mod(std::move(prod), mod, p);
}

// Remainder of a by b (b nonzero, little-endian, over GF(p)); used by the
// irreducibility trial division.
std::vector<int64_t> poly_rem(std::vector<int64_t> a, const std::vector<int64_t>& b,
                              int64_t p) {
    int db = static_cast<int>(b.size()) - 1;
    while (db > 0 && b[db] == 0) --db;
    // b monic candidates only reach here with b[db] != 0
    int64_t lead_inv = 1;
    { // inverse of b[db] mod p
        int64_t x = b[db] % p;
        for (int64_t t = 1; t < p; ++t)
            if ((x * t) % p == 1) { lead_inv = t; break; }
    }
    for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
        int64_t c = (a[i] % p) * lead_inv % p;
        if (c == 0) continue;
        for (int j = 0; j <= db; ++j) {
            int64_t& t = a[i - db + j];
            t = ((t - c * b[j]) % p + p) % p;
        }
    }
    a.resize(std::max(db, 1));
    return a;
}

bool poly_is_zero(const std::vector<int64_t>& a) {
    for (int64_t c : a)
        if (c != 0) return false;
    return true;
}

std::vector<int64_t> code_to_poly(int64_t code, int64_t p, int len) {
    std::vector<int64_t> d(len, 0);
    for (int i = 0; i < len && code > 0; ++i) {
        d[i] = code % p;
        code /= p;
    }
    return d;
}

bool is_irreducible(const std::vector<int64_t>& f, int64_t p) {
    int deg = static_cast<int>(f.size()) - 1;
    if (deg == 1) return true;
    // No root / no factor of degree <= deg/2: trial division by every monic
    // polynomial of degree 1 .. deg/2.
    for (int d = 1; 2 * d <= deg; ++d) {
        int64_t count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (int64_t low = 0; low < count; ++low) {
            std::vector<int64_t> g = code_to_poly(low, p, d + 1);
            g[d] = 1;
            if (poly_is_zero(poly_rem(f, g, p))) return false;
        }
    }
    return true;
}

} // namespace

FieldPtr Field::make(int64_t p, int m, std::vector<int64_t> modulus) {
    if (!is_prime(p)) throw Error("NotPrime", "characteristic " + std::to_string(p) + " is not prime");
    if (m < 1) throw Error("Unsupported", "extension degree must be >= 1");
    // order bound: codes are kept in 32-bit matrix storage
    int64_t q = 1;
    for (int i = 0; i < m; ++i) {
        q *= p;
        if (q > (int64_t(1) << 26))
            throw Error("Unsupported", "field order exceeds 2^26");
    }

    auto f = std::shared_ptr<Field>(new Field());
    f->p_ = p;
    f->m_ = m;
    f->q_ = q;

    if (!modulus.empty()) {
        if (static_cast<int>(modulus.size()) != m + 1)
            throw Error("ReducibleModulus", "modulus must have length m+1");
        for (int64_t c : modulus)
            if (c < 0 || c >= p)
                throw Error("ReducibleModulus", "modulus coefficients must lie in [0, p)");
        if (modulus[m] != 1)
            throw Error("ReducibleModulus", "modulus must be monic");
        if (!is_irreducible(modulus, p))
            throw Error("ReducibleModulus", "modulus is reducible over GF(p)");
        f->modulus_ = std::move(modulus);
        // flag as non-default unless it coincides with the default choice
        std::vector<int64_t> lowbuf;
        for (int64_t low = 0; low < q; ++low) {
            lowbuf = code_to_poly(low, p, m + 1);
            lowbuf[m] = 1;
            if (is_irreducible(lowbuf, p)) break;
        }
        f->default_modulus_ = (lowbuf == f->modulus_);
    } else {
        // least monic irreducible of degree m under the ascending integer
        // encoding of the low coefficients
        for (int64_t low = 0;; ++low) {
            std::vector<int64_t> g = code_to_poly(low, p, m + 1);
            g[m] = 1;
            if (is_irreducible(g, p)) {
                f->modulus_ = std::move(g);
                break;
            }
        }
        f->default_modulus_ = true;
    }

    if (q <= (int64_t(1) << 16)) f->build_tables();
    return f;
}

void Field::check_code(int64_t a) const {
    if (a < 0 || a >= q_)
        throw Error("FieldMismatch", "element code " + std::to_string(a) +
                                         " outside field of order " + std::to_string(q_));
}

int64_t Field::add(int64_t a, int64_t b) const {
    check_code(a);
    check_code(b);
    if (p_ == 2) return a ^ b;
    if (m_ == 1) return (a + b) % p_;
    int64_t r = 0, mult = 1;
    while (a > 0 || b > 0) {
        r += ((a % p_ + b % p_) % p_) * mult;
        a /= p_;
        b /= p_;
        mult *= p_;
    }
    return r;
}

int64_t Field::neg(int64_t a) const {
    check_code(a);
    if (p_ == 2) return a;
    if (m_ == 1) return (p_ - a) % p_;
    int64_t r = 0, mult = 1;
    while (a > 0) {
        r += ((p_ - a % p_) % p_) * mult;
        a /= p_;
        mult *= p_;
    }
    return r;
}

int64_t Field::sub(int64_t a, int64_t b) const { return add(a, neg(b)); }

int64_t Field::mul_poly(int64_t a, int64_t b) const {
    std::vector<int64_t> pa = code_to_poly(a, p_, m_);
    std::vector<int64_t> pb = code_to_poly(b, p_, m_);
    std::vector<int64_t> pr = poly_mul_mod(pa, pb, modulus_, p_);
    int64_t r = 0, mult = 1;
    for (int i = 0; i < m_; ++i) {
        r += pr[i] * mult;
        mult *= p_;
    }
    return r;
}

int64_t Field::mul(int64_t a, int64_t b) const {
    check_code(a);
    check_code(b);
    if (a == 0 || b == 0) return 0;
    if (!exp_.empty()) return exp_[log_[a] + log_[b]];
    if (m_ == 1) return (a * b) % p_;
    return mul_poly(a, b);
}

int64_t Field::inv(int64_t a) const {
    check_code(a);
    if (a == 0) throw Error("DivisionByZero", "inverse of zero");
    if (!exp_.empty()) return exp_[(q_ - 1) - log_[a]];
    return pow(a, q_ - 2);
}

int64_t Field::pow(int64_t a, int64_t e) const {
    check_code(a);
    if (a == 0) {
        if (e == 0) return 1;
        if (e < 0) throw Error("DivisionByZero", "negative power of zero");
        return 0;
    }
    int64_t period = q_ - 1;
    int64_t r = ((e % period) + period) % period;
    if (!exp_.empty()) {
        // log is exact; multiply in exponent space
        return exp_[static_cast<int64_t>(log_[a]) * r % period];
    }
    int64_t acc = 1, base = a;
    while (r > 0) {
        if (r & 1) acc = mul(acc, base);
        base = mul(base, base);
        r >>= 1;
    }
    return acc;
}

int64_t Field::frob(int64_t a, int k) const {
    int64_t r = a;
    for (int i = 0; i < k; ++i) r = pow(r, p_);
    return r;
}

int64_t Field::rel_trace(int64_t a, int64_t suborder) const {
    int64_t sp;
    int sk;
    if (!prime_power(suborder, sp, sk) || sp != p_ || m_ % sk != 0)
        throw Error("NotASubfield", "order " + std::to_string(suborder) +
                                        " is not a subfield of order " + std::to_string(q_));
    int steps = m_ / sk;
    int64_t acc = a, t = a;
    for (int i = 1; i < steps; ++i) {
        t = frob(t, sk);
        acc = add(acc, t);
    }
    return acc;
}

bool Field::in_subfield(int64_t a, int64_t suborder) const {
    int64_t sp;
    int sk;
    if (!prime_power(suborder, sp, sk) || sp != p_ || m_ % sk != 0)
        throw Error("NotASubfield", "order " + std::to_string(suborder) +
                                        " is not a subfield of order " + std::to_string(q_));
    return pow(a, suborder) == a;
}

int64_t Field::eval_poly(const std::vector<int64_t>& coeffs, int64_t x) const {
    int64_t acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = add(mul(acc, x), *it);
    return acc;
}

void Field::build_tables() {
    exp_.assign(2 * (q_ - 1), 0);
    log_.assign(q_, -1);
    if (q_ == 2) { // trivial unit group
        exp_ = {1, 1};
        log_[1] = 0;
        return;
    }
    // primitive element = least code generating the multiplicative group;
    // codes below p (for m > 1) lie in the prime field and cannot generate
    for (int64_t g = (m_ == 1 ? 2 : p_); g < q_; ++g) {
        int64_t t = 1;
        int64_t ord = 0;
        std::fill(log_.begin(), log_.end(), -1);
        do {
            exp_[ord] = static_cast<int32_t>(t);
            log_[t] = static_cast<int32_t>(ord);
            t = (m_ == 1) ? (t * g) % p_ : mul_poly(t, g);
            ++ord;
        } while (t != 1);
        if (ord == q_ - 1) {
            for (int64_t i = 0; i < q_ - 1; ++i) exp_[q_ - 1 + i] = exp_[i];
            return;
        }
    }
    throw Error("Unsupported", "no primitive element found (internal)");
}

std::vector<int64_t> Field::digits(int64_t a) const {
    check_code(a);
    return code_to_poly(a, p_, m_);
}

std::string Field::pretty(int64_t a, char var) const {
    check_code(a);
    if (m_ == 1) return std::to_string(a);
    if (a == 0) return "0";
    auto d = digits(a);
    std::string s;
    for (int i = m_ - 1; i >= 0; --i) {
        if (d[i] == 0) continue;
        if (!s.empty()) s += "+";
        if (i == 0) {
            s += std::to_string(d[i]);
        } else {
            if (d[i] != 1) s += std::to_string(d[i]) + "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

std::string Field::signature() const {
    std::string s = "F" + std::to_string(q_);
    if (!default_modulus_) {
        int64_t enc = 0, mult = 1;
        for (int i = 0; i <= m_; ++i) {
            enc += modulus_[i] * mult;
            mult *= p_;
        }
        s += "m" + std::to_string(enc);
    }
    return s;
}

bool Field::same(const Field& other) const noexcept {
    return p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_;
}

Felt Felt::bin(const Felt& b, int op) const {
    if (!f_ || !b.f_ || !f_->same(*b.f_))
        throw Error("FieldMismatch", "operands live in different fields");
    switch (op) {
        case 0: return Felt(f_, f_->add(code_, b.code_));
        case 1: return Felt(f_, f_->sub(code_, b.code_));
        case 2: return Felt(f_, f_->mul(code_, b.code_));
        default: return Felt(f_, f_->mul(code_, f_->inv(b.code_)));
    }
}

std::vector<int64_t> additive_roots(const FieldPtr& f, int64_t qprime,
                                    int64_t mu, int64_t c) {
    int64_t sp;
    int sk;
    if (!prime_power(qprime, sp, sk) || sp != f->p())
        throw Error("Unsupported", "qprime must be a power of the characteristic");
    std::vector<int64_t> roots;
    for (int64_t t = 0; t < f->order(); ++t)
        if (f->add(f->pow(t, qprime), f->mul(mu, t)) == c) roots.push_back(t);
    return roots; // scan order is ascending already
}

} // namespace isodual
