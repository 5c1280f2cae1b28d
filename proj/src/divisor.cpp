#include "isodual/divisor.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace isodual {

std::string Place::to_string() const {
    std::ostringstream os;
    os << curve << ":";
    switch (kind) {
        case Kind::Infinite: os << "inf"; break;
        case Kind::Affine: {
            os << "(";
            for (size_t i = 0; i < coords.size(); ++i)
                os << (i ? "," : "") << coords[i];
            os << ")";
            break;
        }
        case Kind::Labeled: os << "[" << label << "]"; break;
    }
    if (degree != 1) os << "{deg " << degree << "}";
    return os.str();
}

void Divisor::add(const Place& p, long long coeff) {
    if (coeff == 0) return;
    auto it = terms_.find(p);
    if (it == terms_.end()) {
        terms_.emplace(p, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

long long Divisor::coeff(const Place& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? 0 : it->second;
}

long long Divisor::degree() const {
    long long d = 0;
    for (const auto& [p, c] : terms_) d += c * p.degree;
    return d;
}

Divisor Divisor::operator+(const Divisor& o) const {
    Divisor r = *this;
    for (const auto& [p, c] : o.terms_) r.add(p, c);
    return r;
}

Divisor Divisor::operator-(const Divisor& o) const {
    Divisor r = *this;
    for (const auto& [p, c] : o.terms_) r.add(p, -c);
    return r;
}

Divisor Divisor::operator*(long long s) const {
    Divisor r;
    if (s == 0) return r;
    for (const auto& [p, c] : terms_) r.add(p, c * s);
    return r;
}

std::string Divisor::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        if (c != 1) os << c << "*";
        os << p.to_string();
    }
    return os.str();
}

bool supports_disjoint(const Divisor& a, const Divisor& b) {
    for (const auto& term : a.terms())
        if (b.coeff(term.first) != 0) return false;
    return true;
}

void ExtensionDescriptor::validate() const {
    std::set<Place> seen_tops;
    for (const auto& [base, fiber] : fibers) {
        if (fiber.empty())
            throw Error("UnknownFiber", "empty fiber listed over " + base.to_string());
        long long sum = 0;
        for (const FiberEntry& fe : fiber) {
            if (fe.e < 1 || fe.d < 0)
                throw Error("UnknownFiber", "invalid (e, d) over " + base.to_string());
            if (!seen_tops.insert(fe.above).second)
                throw Error("UnknownFiber",
                            "place " + fe.above.to_string() + " appears in two fibers");
            sum += fe.e * fe.above.degree;
        }
        if (sum != degree * base.degree)
            throw Error("UnknownFiber",
                        "fundamental equality fails over " + base.to_string() + ": sum e*deg = " +
                            std::to_string(sum) + ", want " + std::to_string(degree * base.degree));
    }
}

Divisor conorm(const ExtensionDescriptor& ext, const Divisor& d) {
    Divisor out;
    for (const auto& [p, c] : d.terms()) {
        auto it = ext.fibers.find(p);
        if (it == ext.fibers.end())
            throw Error("UnknownFiber", "no fiber data over " + p.to_string() + " in " +
                                            ext.top_curve + "/" + ext.base_curve);
        for (const FiberEntry& fe : it->second) out.add(fe.above, c * fe.e);
    }
    return out;
}

Divisor different(const ExtensionDescriptor& ext) {
    Divisor out;
    for (const auto& [p, fiber] : ext.fibers)
        for (const FiberEntry& fe : fiber)
            if (fe.d > 0) out.add(fe.above, fe.d);
    return out;
}

long long riemann_hurwitz(const ExtensionDescriptor& ext) {
    long long rhs = ext.degree * (2 * ext.base_genus - 2) + different(ext).degree();
    if (rhs % 2 != 0)
        throw Error("NonIntegralGenus",
                    "Riemann-Hurwitz right side " + std::to_string(rhs) + " is odd");
    long long g = rhs / 2 + 1;
    if (g < 0)
        throw Error("NonIntegralGenus", "negative genus " + std::to_string(g));
    return g;
}

namespace {

// Explain, from the descriptor data alone, why none of the standard
// sufficient conditions for even different exponents can be counted on at
// this fiber entry.
std::string odd_exponent_diagnosis(const ExtensionDescriptor& ext, const Place& base,
                                   const FiberEntry& fe) {
    std::ostringstream os;
    os << "different exponent d = " << fe.d << " at " << fe.above.to_string() << " over "
       << base.to_string() << " (e = " << fe.e << ") is odd; lifting requires every "
       << "exponent even. Checked sufficient conditions: ";
    bool tame = ext.characteristic == 0 || fe.e % ext.characteristic != 0;
    os << "(additive-cover route) needs odd characteristic, but char = " << ext.characteristic
       << (ext.characteristic % 2 != 0 ? " - the cover at hand still has an odd exponent; " : "; ");
    if (tame)
        os << "(tame odd-degree route) extension is tame here but [M:F] = " << ext.degree
           << (ext.degree % 2 == 0 ? " is even; " : " and d = e-1 came out odd anyway; ");
    else
        os << "(tame odd-degree route) ramification is wild here (char | e); ";
    bool weak = fe.d == 2 * (fe.e - 1);
    os << "(weakly ramified route) d " << (weak ? "=" : "!=") << " 2(e-1); ";
    long long ramified = 0;
    for (const auto& [bp, fib] : ext.fibers)
        for (const FiberEntry& g : fib)
            if (g.e > 1) ++ramified;
    os << "(single totally ramified rational place route) descriptor has " << ramified
       << " ramified place(s)";
    return os.str();
}

} // namespace

LiftedDivisors lift_divisors(const ExtensionDescriptor& ext, const Divisor& d,
                             const Divisor& g) {
    if (!supports_disjoint(d, g))
        throw Error("SupportOverlap", "supp(D) meets supp(G) on the base");
    for (const auto& [base, fiber] : ext.fibers)
        for (const FiberEntry& fe : fiber)
            if (fe.d % 2 != 0)
                throw Error("OddDifferentExponent", odd_exponent_diagnosis(ext, base, fe));
    for (const auto& [p, c] : d.terms()) {
        auto it = ext.fibers.find(p);
        if (it == ext.fibers.end())
            throw Error("UnknownFiber", "no fiber data over " + p.to_string());
        const auto& fiber = it->second;
        bool split = static_cast<long long>(fiber.size()) == ext.degree;
        for (const FiberEntry& fe : fiber)
            if (fe.e != 1 || fe.above.degree != p.degree) split = false;
        if (!split)
            throw Error("NonSplitPlace",
                        p.to_string() + " does not split completely in " + ext.top_curve);
    }

    LiftedDivisors out;
    out.d_top = conorm(ext, d);
    Divisor diff = different(ext);
    // every exponent is even by the gate above
    out.g_top = conorm(ext, g);
    for (const auto& [p, c] : diff.terms()) out.g_top.add(p, c / 2);

    if (!supports_disjoint(out.d_top, out.g_top))
        throw Error("SupportOverlap", "lifted supports meet (descriptor inconsistency)");
    // degree ledger: when the base degrees satisfy the iso-dual relation the
    // lifted ones must as well
    if (isodual_degree_check(d, g, ext.base_genus)) {
        long long gm = riemann_hurwitz(ext);
        if (gm != ext.top_genus)
            throw Error("NonIntegralGenus",
                        "descriptor genus " + std::to_string(ext.top_genus) +
                            " disagrees with Riemann-Hurwitz " + std::to_string(gm));
        if (2 * out.g_top.degree() != out.d_top.degree() + 2 * gm - 2)
            throw Error("NonIntegralGenus", "lifted degrees violate the iso-dual relation");
    }
    return out;
}

bool isodual_degree_check(const Divisor& d, const Divisor& g, long long genus) {
    long long dd = d.degree();
    return dd % 2 == 0 && 2 * g.degree() == dd + 2 * genus - 2;
}

} // namespace isodual
