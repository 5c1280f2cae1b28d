#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "isodual/errors.hpp"

namespace isodual {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Runtime finite field GF(p^m).
///
/// Elements are integer codes in [0, p^m): the code of an element with
/// coefficient vector (c_0, ..., c_{m-1}) over GF(p) is sum c_i * p^i
/// (little-endian base-p digits).  Code 0 is zero, code 1 is one, and for
/// m > 1 code p is the residue class of the generator t of GF(p)[t]/(modulus).
///
/// The modulus is a monic irreducible polynomial of degree m, stored as a
/// little-endian coefficient vector of length m+1.  When none is supplied,
/// the lexicographically least monic irreducible under the ascending integer
/// encoding sum c_i * p^i is chosen, so two constructions of the same (p, m)
/// agree element for element.
///
/// Fields of order up to 2^16 precompute log/antilog tables for a fixed
/// primitive element (the least generating code); larger fields fall back to
/// carry-free polynomial multiplication with modular reduction.  Instances
/// are immutable after construction and safe to share across threads.
class Field {
public:
    /// Build GF(p^m).  Throws Error("NotPrime") if p is composite,
    /// Error("ReducibleModulus") if an explicit modulus is not monic
    /// irreducible of degree m, Error("Unsupported") when p^m exceeds the
    /// implementation limit (2^26).
    static FieldPtr make(int64_t p, int m, std::vector<int64_t> modulus = {});

    int64_t p() const noexcept { return p_; }
    int m() const noexcept { return m_; }
    int64_t order() const noexcept { return q_; }
    const std::vector<int64_t>& modulus() const noexcept { return modulus_; }
    bool has_tables() const noexcept { return !exp_.empty(); }

    // --- arithmetic on element codes -------------------------------------
    int64_t add(int64_t a, int64_t b) const;
    int64_t sub(int64_t a, int64_t b) const;
    int64_t neg(int64_t a) const;
    int64_t mul(int64_t a, int64_t b) const;
    /// Throws Error("DivisionByZero") on a = 0.
    int64_t inv(int64_t a) const;
    /// a^e for any integer e (negative exponents invert; 0^0 = 1;
    /// 0^negative throws DivisionByZero).
    int64_t pow(int64_t a, int64_t e) const;
    /// Frobenius power a^(p^k).
    int64_t frob(int64_t a, int k = 1) const;

    /// Relative trace onto the subfield of order `suborder` = p^s, s | m:
    /// sum of a^(p^(s*i)) for i = 0 .. m/s - 1.  Throws Error("NotASubfield")
    /// if suborder is not a power of p with exponent dividing m.
    int64_t rel_trace(int64_t a, int64_t suborder) const;
    /// Membership test for the same subfield: a^suborder == a.
    bool in_subfield(int64_t a, int64_t suborder) const;

    /// Horner evaluation of a polynomial with little-endian coefficient
    /// codes at the point x.
    int64_t eval_poly(const std::vector<int64_t>& coeffs, int64_t x) const;

    // --- presentation ------------------------------------------------------
    /// Digits (c_0, ..., c_{m-1}) of a code.
    std::vector<int64_t> digits(int64_t a) const;
    /// Human-readable form like "a^2+a+1" (prime fields print plain integers).
    std::string pretty(int64_t a, char var = 'a') const;
    /// Compact identity string, e.g. "F8" for the default GF(2^3) or
    /// "F8m13" when a non-default modulus (integer encoding 13) is in play.
    /// Used inside curve identifiers so places over different coordinate
    /// systems never compare equal.
    std::string signature() const;

    /// True when two instances present the same field the same way.
    bool same(const Field& other) const noexcept;

private:
    Field() = default;
    void check_code(int64_t a) const;
    int64_t mul_poly(int64_t a, int64_t b) const; // table-free path
    void build_tables();

    int64_t p_ = 0;
    int m_ = 0;
    int64_t q_ = 0;
    std::vector<int64_t> modulus_;
    bool default_modulus_ = true;
    std::vector<int32_t> exp_; // exp_[i] = g^i, length 2(q-1)
    std::vector<int32_t> log_; // log_[code], log_[0] = -1
};

/// Thin value wrapper for scalar work: an element code plus its field.
/// Mixed-field arithmetic throws Error("FieldMismatch").
class Felt {
public:
    Felt() = default;
    Felt(FieldPtr f, int64_t code) : f_(std::move(f)), code_(code) {}

    int64_t code() const noexcept { return code_; }
    const FieldPtr& field() const noexcept { return f_; }

    friend Felt operator+(const Felt& a, const Felt& b) { return a.bin(b, /*op=*/0); }
    friend Felt operator-(const Felt& a, const Felt& b) { return a.bin(b, 1); }
    friend Felt operator*(const Felt& a, const Felt& b) { return a.bin(b, 2); }
    friend Felt operator/(const Felt& a, const Felt& b) { return a.bin(b, 3); }
    Felt operator-() const { return Felt(f_, f_->neg(code_)); }
    Felt pow(int64_t e) const { return Felt(f_, f_->pow(code_, e)); }
    bool operator==(const Felt& b) const { return code_ == b.code_ && f_->same(*b.f_); }
    bool is_zero() const noexcept { return code_ == 0; }

private:
    Felt bin(const Felt& b, int op) const;
    FieldPtr f_;
    int64_t code_ = 0;
};

/// All roots in mu's field of T^qprime + mu*T = c, found by exhaustive scan;
/// sorted ascending by code.  qprime must be a power of the characteristic.
std::vector<int64_t> additive_roots(const FieldPtr& f, int64_t qprime,
                                    int64_t mu, int64_t c);

// --- small integer number theory used across the toolkit -------------------
bool is_prime(int64_t n);
/// Decompose n = p^k with p prime; returns false if n is not a prime power.
bool prime_power(int64_t n, int64_t& p, int& k);
int64_t ipow(int64_t base, int exp);

} // namespace isodual
