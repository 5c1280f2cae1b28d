#include <doctest.h>

#include "isodual/divisor.hpp"

using namespace isodual;

namespace {

// Synthetic degree-2 cover of the rational line with two split places, two
// tame ramified places with even different exponent, top genus 1.
ExtensionDescriptor synthetic_cover(long long d_ram = 2) {
    ExtensionDescriptor e;
    e.base_curve = "rational/F5";
    e.top_curve = "cover/F5";
    e.degree = 2;
    e.base_genus = 0;
    e.top_genus = 1;
    e.characteristic = 5;
    auto base = [&](int64_t a) { return Place::affine(e.base_curve, {a}); };
    auto top = [&](std::string lbl) { return Place::labeled(e.top_curve, lbl); };
    e.fibers[base(0)] = {{top("0a"), 1, 0}, {top("0b"), 1, 0}};
    e.fibers[base(2)] = {{top("2a"), 1, 0}, {top("2b"), 1, 0}};
    e.fibers[base(1)] = {{top("1r"), 2, d_ram}};
    e.fibers[Place::infinity(e.base_curve)] = {{Place::infinity(e.top_curve), 2, d_ram}};
    return e;
}

} // namespace

TEST_CASE("places compare structurally and print") {
    Place a = Place::affine("c", {1, 2});
    Place b = Place::affine("c", {1, 2});
    Place inf = Place::infinity("c");
    Place lab = Place::labeled("c", "x^2+x+1", 2);
    CHECK(a == b);
    CHECK_FALSE(a == inf);
    CHECK(lab.degree == 2);
    CHECK(inf < a);                       // kind order: infinite < affine < labeled
    CHECK(a.to_string().find('1') != std::string::npos);
    Place other = Place::affine("d", {1, 2});
    CHECK_FALSE(a == other); // same coords, different curve
}

TEST_CASE("divisor bookkeeping erases zeros and tracks degree") {
    Place p = Place::affine("c", {1});
    Place q = Place::labeled("c", "quad", 2);
    Divisor d;
    d.add(p, 3);
    d.add(q, -1);
    CHECK(d.degree() == 3 - 2);
    CHECK(d.coeff(p) == 3);
    CHECK(d.coeff(q) == -1);
    CHECK(d.support_size() == 2);
    d.add(p, -3);
    CHECK(d.coeff(p) == 0);
    CHECK(d.support_size() == 1);

    Divisor e;
    e.add(q, 1);
    Divisor sum = d + e;
    CHECK(sum.empty());
    Divisor diff = d - e;
    CHECK(diff.coeff(q) == -2);
    CHECK((d * 4).coeff(q) == -4);
    CHECK((d * 0).empty());
}

TEST_CASE("supports_disjoint") {
    Place p = Place::affine("c", {1});
    Place q = Place::affine("c", {2});
    Divisor a, b, c;
    a.add(p, 1);
    b.add(q, 5);
    c.add(p, -1);
    CHECK(supports_disjoint(a, b));
    CHECK_FALSE(supports_disjoint(a, c));
    CHECK(supports_disjoint(a, Divisor{}));
}

TEST_CASE("descriptor validation catches broken fiber tables") {
    ExtensionDescriptor e = synthetic_cover();
    CHECK_NOTHROW(e.validate());

    ExtensionDescriptor bad = synthetic_cover();
    bad.fibers[Place::affine(bad.base_curve, {3})] = {
        {Place::labeled(bad.top_curve, "3a"), 1, 0}}; // sum e*deg = 1 != 2
    CHECK_THROWS_WITH_AS(bad.validate(), doctest::Contains("UnknownFiber"), Error);

    ExtensionDescriptor dup = synthetic_cover();
    dup.fibers[Place::affine(dup.base_curve, {3})] = {
        {Place::labeled(dup.top_curve, "0a"), 1, 0},
        {Place::labeled(dup.top_curve, "3b"), 1, 0}}; // 0a already above 0
    CHECK_THROWS_WITH_AS(dup.validate(), doctest::Contains("UnknownFiber"), Error);
}

TEST_CASE("conorm is e-weighted and linear; unknown fibers are refused") {
    ExtensionDescriptor e = synthetic_cover();
    Divisor d;
    d.add(Place::affine(e.base_curve, {0}), 1);
    d.add(Place::affine(e.base_curve, {1}), 3);
    Divisor c = conorm(e, d);
    CHECK(c.coeff(Place::labeled(e.top_curve, "0a")) == 1);
    CHECK(c.coeff(Place::labeled(e.top_curve, "0b")) == 1);
    CHECK(c.coeff(Place::labeled(e.top_curve, "1r")) == 6); // e = 2, coeff 3
    CHECK(c.degree() == 2 * d.degree());

    Divisor unknown;
    unknown.add(Place::affine(e.base_curve, {4}), 1);
    CHECK_THROWS_WITH_AS(conorm(e, unknown), doctest::Contains("UnknownFiber"), Error);
}

TEST_CASE("different and Riemann-Hurwitz") {
    ExtensionDescriptor e = synthetic_cover();
    Divisor diff = different(e);
    CHECK(diff.degree() == 4); // two ramified places, d = 2 each
    CHECK(diff.coeff(Place::labeled(e.top_curve, "1r")) == 2);
    CHECK(riemann_hurwitz(e) == 1); // 2g-2 = 2*(-2) + 4 = 0

    ExtensionDescriptor odd = synthetic_cover(3); // deg Diff = 6 -> 2g-2 = 2, g = 2
    CHECK(riemann_hurwitz(odd) == 2);

    ExtensionDescriptor bad = synthetic_cover();
    bad.fibers[Place::affine(bad.base_curve, {1})] = {
        {Place::labeled(bad.top_curve, "1r"), 2, 1}}; // deg Diff = 3, odd RHS
    CHECK_THROWS_WITH_AS(riemann_hurwitz(bad), doctest::Contains("NonIntegralGenus"),
                         Error);
}

TEST_CASE("lift_divisors: happy path doubles degrees and keeps the degree relation") {
    ExtensionDescriptor e = synthetic_cover();
    Divisor d;
    d.add(Place::affine(e.base_curve, {0}), 1);
    d.add(Place::affine(e.base_curve, {2}), 1);
    Divisor g; // deg 0 = (deg D + 2*0 - 2)/2 on the base
    LiftedDivisors lifted = lift_divisors(e, d, g);
    CHECK(lifted.d_top.degree() == 4);
    CHECK(lifted.g_top.degree() == 2); // (4 + 2*1 - 2)/2
    CHECK(supports_disjoint(lifted.d_top, lifted.g_top));
    CHECK(isodual_degree_check(lifted.d_top, lifted.g_top, e.top_genus));
}

TEST_CASE("lift_divisors refusals: overlap, odd exponent, non-split D") {
    ExtensionDescriptor e = synthetic_cover();
    Divisor d, g;
    d.add(Place::affine(e.base_curve, {0}), 1);
    d.add(Place::affine(e.base_curve, {2}), 1);

    Divisor overlapping;
    overlapping.add(Place::affine(e.base_curve, {0}), 1);
    CHECK_THROWS_WITH_AS(lift_divisors(e, d, overlapping),
                         doctest::Contains("SupportOverlap"), Error);

    ExtensionDescriptor odd = synthetic_cover(1); // tame even-degree, d = 1
    CHECK_THROWS_WITH_AS(lift_divisors(odd, d, g),
                         doctest::Contains("OddDifferentExponent"), Error);

    Divisor nonsplit;
    nonsplit.add(Place::affine(e.base_curve, {1}), 1); // ramified base place
    nonsplit.add(Place::affine(e.base_curve, {0}), 1);
    CHECK_THROWS_WITH_AS(lift_divisors(e, nonsplit, g),
                         doctest::Contains("NonSplitPlace"), Error);
}

TEST_CASE("isodual_degree_check") {
    Place p = Place::affine("c", {0});
    Place inf = Place::infinity("c");
    Divisor d, g;
    d.add(p, 4);
    g.add(inf, 1);
    CHECK(isodual_degree_check(d, g, 0));  // deg G = (4 - 2)/2 = 1
    CHECK_FALSE(isodual_degree_check(d, g, 1));
    d.add(p, 1); // odd degree
    CHECK_FALSE(isodual_degree_check(d, g, 0));
}
