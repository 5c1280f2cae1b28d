#include <doctest.h>

#include "isodual/serialize.hpp"

using namespace isodual;

TEST_CASE("field round trip, default and explicit modulus") {
    FieldPtr f8 = Field::make(2, 3);
    FieldPtr back = field_from_json(field_json(f8));
    CHECK(back->same(*f8));

    FieldPtr f8m13 = Field::make(2, 3, std::vector<int64_t>{1, 0, 1, 1});
    FieldPtr back13 = field_from_json(field_json(f8m13));
    CHECK(back13->same(*f8m13));
    CHECK_FALSE(back13->same(*f8));
}

TEST_CASE("matrix round trip and malformed input") {
    FieldPtr f = Field::make(3, 2);
    MatGF m(f, 2, 3);
    m.set(0, 0, 4);
    m.set(0, 2, 8);
    m.set(1, 1, 1);
    Json j = matrix_json(m);
    MatGF back = matrix_from_json(f, j);
    REQUIRE(back.rows() == 2);
    REQUIRE(back.cols() == 3);
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 3; ++c) CHECK(back.at(r, c) == m.at(r, c));

    Json ragged = Json::array({Json::array({1, 2}), Json::array({1})});
    CHECK_THROWS_WITH_AS(matrix_from_json(f, ragged), doctest::Contains("BadFile"),
                         Error);
    Json outofrange = Json::array({Json::array({1, 9})});
    CHECK_THROWS_WITH_AS(matrix_from_json(f, outofrange), doctest::Contains("BadFile"),
                         Error);
    CHECK_THROWS_WITH_AS(matrix_from_json(f, Json::object()),
                         doctest::Contains("BadFile"), Error);
}

TEST_CASE("place round trip covers all three kinds") {
    Place inf = Place::infinity("c");
    Place aff = Place::affine("c", {3, 5});
    Place lab = Place::labeled("c", "x^2+x+1", 2);
    for (const Place& p : {inf, aff, lab}) {
        Place back = place_from_json(place_json(p));
        CHECK(back == p);
        CHECK(back.degree == p.degree);
    }
    CHECK_THROWS_WITH_AS(place_from_json(Json{{"curve", "c"}, {"kind", "nope"}}),
                         doctest::Contains("BadFile"), Error);
}

TEST_CASE("divisor round trip keeps negative and high-degree terms") {
    Divisor d;
    d.add(Place::infinity("c"), -3);
    d.add(Place::affine("c", {1}), 2);
    d.add(Place::labeled("c", "q", 2), 1);
    Divisor back = divisor_from_json(divisor_json(d));
    CHECK(back == d);
    CHECK(back.degree() == d.degree());
}

TEST_CASE("code round trip reproduces matrix, places, and provenance") {
    FieldPtr f = Field::make(2, 3);
    CurveModel m = CurveModel::elem_abelian(f, 2, 1, {0, 0, 0, 1});
    LinearCode c = build_eab_lift(m, m.family_alphas());
    LinearCode back = code_from_json(code_json(c));
    CHECK(back.n == c.n);
    CHECK(back.k == c.k);
    CHECK(back.field->same(*c.field));
    for (int r = 0; r < c.k; ++r)
        for (int j = 0; j < c.n; ++j) CHECK(back.gen.at(r, j) == c.gen.at(r, j));
    CHECK(back.columns == c.columns);
    CHECK(back.prov.family == c.prov.family);
    CHECK(back.prov.alphas == c.prov.alphas);
    CHECK(back.prov.D == c.prov.D);
    CHECK(back.prov.G == c.prov.G);
    CHECK(back.prov.genus == c.prov.genus);
    CHECK(back.prov.designed_distance == c.prov.designed_distance);
    CHECK(back.prov.iparams == c.prov.iparams);
}

TEST_CASE("certificate round trip: scaling vector present only when found") {
    FieldPtr f = Field::make(2, 3);
    CurveModel m = CurveModel::elem_abelian(f, 2, 1, {0, 0, 0, 1});
    LinearCode c = build_eab_lift(m, m.family_alphas());
    IsoDualCertificate cert = certify_isodual(c);
    Json j = certificate_json(cert);
    CHECK(j.at("verdict") == "IsoDual");
    CHECK(j.at("x").is_array());
    IsoDualCertificate back = certificate_from_json(j);
    CHECK(back.verdict == cert.verdict);
    CHECK(back.x == cert.x);
    CHECK(back.residual_ok == cert.residual_ok);
    CHECK(back.nullity == cert.nullity);

    IsoDualCertificate neg;
    neg.verdict = IsoDualCertificate::Verdict::NotIsoDual;
    Json jn = certificate_json(neg);
    CHECK(jn.at("x").is_null());
    CHECK(certificate_from_json(jn).verdict == neg.verdict);
}

TEST_CASE("distance report round trip in both modes") {
    FieldPtr f2 = Field::make(2, 1);
    LinearCode rep = build_rational_isodual(f2, {0, 1});
    DistanceReport d = min_distance(rep);
    DistanceReport back = distance_from_json(distance_json(d));
    CHECK(back.mode == d.mode);
    CHECK(back.d == d.d);
    CHECK(back.lower == d.lower);
    CHECK(back.upper == d.upper);
    CHECK(back.enumerated == d.enumerated);
    CHECK(back.witness == d.witness);

    DistanceReport bounds;
    bounds.mode = DistanceReport::Mode::Bounds;
    bounds.lower = 25;
    bounds.upper = 40;
    DistanceReport bback = distance_from_json(distance_json(bounds));
    CHECK(bback.mode == DistanceReport::Mode::Bounds);
    CHECK(bback.lower == 25);
    CHECK(bback.upper == 40);
}

TEST_CASE("report emitters expose the regression-checked keys") {
    Json p = params_json(param_report("hermitian", {{"q", 4}}));
    CHECK(p.at("n") == 60);
    CHECK(p.at("k") == 30);
    CHECK(p.at("designed_d") == 25);

    Json cx = curvex_census_json(curve_x_census(2));
    CHECK(cx.at("affine") == 16);
    CHECK(cx.at("total") == 17);

    Json sr = split_report_json(hermitian_places(2));
    CHECK(sr.at("split_bases") == 2);

    Json cy = cyclotomic_json(cyclotomic_code_params(2, 7));
    CHECK(cy.at("length") == 16);
    CHECK(cy.at("dim") == 8);
    CHECK(cy.at("genus") == 15);

    Json cr = carlitz_report_json(carlitz_identity_check(2, 3, 7));
    CHECK(cr.at("exact") == true);
    CHECK(cr.at("truncated") == true);
    CHECK(cr.at("holds") == true);
    CHECK(cr.at("j_support") == Json::array({0, 1, 2, 3}));

    Json ac = additive_census_json(
        additive_census(CurveModel::elem_abelian(Field::make(2, 3), 2, 1, {0, 0, 0, 1})));
    CHECK(ac.at("family_count") == 4);

    Json ds = descriptor_json(make_extension_descriptor(CurveModel::hermitian(2)));
    CHECK(ds.at("degree") == 3); // [F(x,y) : F(x)] = q + 1
    CHECK(ds.at("top_genus") == 1);
}

TEST_CASE("canonical dump is deterministic; content ids are 16 hex digits") {
    Json a = {{"b", 1}, {"a", 2}};
    Json b = {{"a", 2}, {"b", 1}};
    CHECK(canonical_dump(a) == canonical_dump(b));
    CHECK(canonical_dump(a).find('\n') == std::string::npos);

    std::string ida = content_id(a);
    CHECK(ida.size() == 16);
    for (char ch : ida) CHECK(((ch >= '0' && ch <= '9') || (ch >= 'a' && ch <= 'f')));
    CHECK(ida == content_id(b));
    CHECK(ida != content_id(Json{{"a", 2}, {"b", 2}}));
}

TEST_CASE("generator CSV uses element codes, one row per line") {
    FieldPtr f2 = Field::make(2, 1);
    LinearCode rep = build_rational_isodual(f2, {0, 1});
    CHECK(generator_csv(rep) == "1,1\n");

    FieldPtr f4 = Field::make(2, 2);
    LinearCode c4 = build_rational_isodual(f4, {0, 1, 2, 3});
    CHECK(generator_csv(c4) == "1,1,1,1\n0,1,2,3\n");
}
