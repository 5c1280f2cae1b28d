#include <doctest.h>

#include "isodual/codes.hpp"
#include "fixture_data.hpp"

using namespace isodual;

namespace {

MatGF gen_from(const FieldPtr& f, int rows, int cols, std::initializer_list<int64_t> vals) {
    MatGF m(f, rows, cols);
    auto it = vals.begin();
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m.set(r, c, *it++);
    return m;
}

LinearCode bare_code(const FieldPtr& f, const MatGF& gen) {
    LinearCode c;
    c.field = f;
    c.n = gen.cols();
    c.k = gen.rows();
    c.gen = gen;
    for (int j = 0; j < c.n; ++j) c.columns.push_back(Place::affine("test", {j}));
    c.prov.family = "test";
    c.prov.designed_distance = 1;
    return c;
}

// independent check of G diag(x) G^T = 0
bool scaled_gram_is_zero(const LinearCode& c, const std::vector<int64_t>& x) {
    const FieldPtr& f = c.field;
    for (int i = 0; i < c.k; ++i)
        for (int j = i; j < c.k; ++j) {
            int64_t s = 0;
            for (int t = 0; t < c.n; ++t)
                s = f->add(s, f->mul(f->mul(c.gen.at(i, t), c.gen.at(j, t)), x[t]));
            if (s != 0) return false;
        }
    return true;
}

long long weight_of_message(const LinearCode& c, const std::vector<int64_t>& msg) {
    long long w = 0;
    for (int t = 0; t < c.n; ++t) {
        int64_t s = 0;
        for (int i = 0; i < c.k; ++i)
            s = c.field->add(s, c.field->mul(msg[i], c.gen.at(i, t)));
        if (s != 0) ++w;
    }
    return w;
}

} // namespace

TEST_CASE("rational iso-dual code: repetition [2,1] and the GF(4) [4,2]") {
    FieldPtr f2 = Field::make(2, 1);
    LinearCode rep = build_rational_isodual(f2, {0, 1});
    CHECK(rep.n == 2);
    CHECK(rep.k == 1);
    CHECK(rep.gen.at(0, 0) == 1);
    CHECK(rep.gen.at(0, 1) == 1);
    CHECK(rep.prov.designed_distance == 2);
    CHECK(rep.prov.G.degree() == 0);

    FieldPtr f4 = Field::make(2, 2);
    LinearCode c4 = build_rational_isodual(f4, {0, 1, 2, 3});
    CHECK(c4.n == 4);
    CHECK(c4.k == 2);
    CHECK(c4.prov.designed_distance == 3);
    // rows 1, x evaluated at the alphas
    for (int j = 0; j < 4; ++j) {
        CHECK(c4.gen.at(0, j) == 1);
        CHECK(c4.gen.at(1, j) == j);
    }
    CHECK_THROWS_WITH_AS(build_rational_isodual(f4, {0, 1, 2}),
                         doctest::Contains("OddLength"), Error);
    CHECK_THROWS_WITH_AS(build_rational_isodual(f4, {}),
                         doctest::Contains("OddLength"), Error);
    CHECK_THROWS_WITH_AS(build_rational_isodual(f4, {0, 1, 1, 2}),
                         doctest::Contains("DuplicateAlpha"), Error);
}

TEST_CASE("gold fixture: the published [8,4] matrix over GF(8)") {
    FieldPtr f = Field::make(2, 3);
    CurveModel m = CurveModel::elem_abelian(f, 2, 1, {0, 0, 0, 1});
    LinearCode c = build_eab_lift(m, m.family_alphas());
    REQUIRE(c.n == 8);
    REQUIRE(c.k == 4);
    CHECK(c.prov.family == "eab");
    CHECK(c.prov.genus == 1);
    CHECK(c.prov.designed_distance == 4);
    CHECK(c.prov.G.degree() == 4);
    CHECK(c.prov.alphas == std::vector<int64_t>(fixtures::kGoldAlphas.begin(),
                                                fixtures::kGoldAlphas.end()));

    // entrywise equality after the documented column permutation
    for (int r = 0; r < fixtures::kGoldRows; ++r)
        for (int j = 0; j < fixtures::kGoldCols; ++j)
            CHECK(c.gen.at(r, fixtures::kCanonicalColOfPublished[j]) ==
                  fixtures::kGoldPublishedMatrix[r][j]);

    // and as row spaces after permuting the canonical columns
    MatGF published(f, fixtures::kGoldRows, fixtures::kGoldCols);
    MatGF permuted(f, fixtures::kGoldRows, fixtures::kGoldCols);
    for (int r = 0; r < fixtures::kGoldRows; ++r)
        for (int j = 0; j < fixtures::kGoldCols; ++j) {
            published.set(r, j, fixtures::kGoldPublishedMatrix[r][j]);
            permuted.set(r, j, c.gen.at(r, fixtures::kCanonicalColOfPublished[j]));
        }
    CHECK(rowspace_equal(permuted, published));

    // column places carry (alpha, root) coordinates in canonical order
    CHECK(c.columns[0] == Place::affine(m.curve_id(), {0, 0}));
    CHECK(c.columns[1] == Place::affine(m.curve_id(), {0, 1}));
    CHECK(c.columns[2] == Place::affine(m.curve_id(), {3, 6}));
    CHECK(c.columns[7] == Place::affine(m.curve_id(), {7, 5}));
}

TEST_CASE("gold fixture: certify IsoDual (not self-dual), distance Exact(4)") {
    FieldPtr f = Field::make(2, 3);
    CurveModel m = CurveModel::elem_abelian(f, 2, 1, {0, 0, 0, 1});
    LinearCode c = build_eab_lift(m, m.family_alphas());

    IsoDualCertificate cert = certify_isodual(c);
    CHECK(cert.verdict == IsoDualCertificate::Verdict::IsoDual);
    CHECK(cert.residual_ok);
    REQUIRE(cert.x.size() == 8);
    for (int64_t xi : cert.x) CHECK(xi != 0);
    CHECK(scaled_gram_is_zero(c, cert.x));
    // not self-dual: the all-ones vector fails (row x . row y = 1)
    CHECK_FALSE(scaled_gram_is_zero(c, std::vector<int64_t>(8, 1)));

    DistanceReport d = min_distance(c);
    CHECK(d.mode == DistanceReport::Mode::Exact);
    CHECK(d.d == 4);
    CHECK(d.enumerated == 4095); // 8^4 - 1
    CHECK(weight_of_message(c, d.witness) == 4);
    CHECK(d.lower == 4); // designed bound attained
}

TEST_CASE("distance enumeration is shard-count invariant") {
    FieldPtr f = Field::make(2, 3);
    CurveModel m = CurveModel::elem_abelian(f, 2, 1, {0, 0, 0, 1});
    LinearCode c = build_eab_lift(m, m.family_alphas());
    DistanceReport one = min_distance(c, uint64_t(1) << 22, 1);
    DistanceReport four = min_distance(c, uint64_t(1) << 22, 4);
    DistanceReport many = min_distance(c, uint64_t(1) << 22, 13);
    CHECK(one.d == four.d);
    CHECK(one.witness == four.witness);
    CHECK(one.witness == many.witness);
    CHECK(four.threads == 4);
}

TEST_CASE("hermitian one-point family q = 2: self-dual [6,3]") {
    LinearCode c = build_hermitian_isodual(2, 1);
    CHECK(c.n == 6);
    CHECK(c.k == 3);
    CHECK(c.prov.genus == 1);
    CHECK(c.prov.G.degree() == 3);
    CHECK(c.prov.designed_distance == 3);

    // the carried certificate is all ones (exponent 2b+2-q^2 = 0)
    std::vector<int64_t> claimed = hermitian_claimed_certificate(c);
    CHECK(claimed == std::vector<int64_t>(6, 1));

    IsoDualCertificate cert = certify_isodual(c, &claimed);
    CHECK(cert.verdict == IsoDualCertificate::Verdict::SelfDual);
    CHECK(cert.claimed_checked);
    CHECK(cert.claimed_ok);
    CHECK(cert.residual_ok);

    DistanceReport d = min_distance(c);
    CHECK(d.mode == DistanceReport::Mode::Exact);
    CHECK(d.enumerated == 63); // 4^3 - 1
    CHECK(d.d >= 3);
    CHECK(d.d <= 4); // Singleton 6-3+1
}

TEST_CASE("hermitian one-point family q = 3: [24,12] with exact certificate") {
    LinearCode c = build_hermitian_isodual(3, 1);
    CHECK(c.n == 24);
    CHECK(c.k == 12);
    CHECK(c.prov.genus == 3);
    CHECK(c.prov.G.degree() == 14);
    CHECK(c.prov.designed_distance == 10);
    CHECK(c.prov.iparams.at("beta") == 1);

    std::vector<int64_t> claimed = hermitian_claimed_certificate(c);
    REQUIRE(claimed.size() == 24);
    // z = y^(2b+2-q^2) = y^(-5); entries are nonzero
    for (int64_t v : claimed) CHECK(v != 0);
    CHECK(scaled_gram_is_zero(c, claimed));

    IsoDualCertificate cert = certify_isodual(c, &claimed);
    CHECK(cert.positive());
    CHECK(cert.claimed_ok);
    CHECK(cert.residual_ok);
    CHECK(scaled_gram_is_zero(c, cert.x));

    // without the hint the certifier must never contradict iso-duality
    IsoDualCertificate blind = certify_isodual(c);
    CHECK(blind.verdict != IsoDualCertificate::Verdict::NotIsoDual);

    CHECK_THROWS_WITH_AS(build_hermitian_isodual(3, 0),
                         doctest::Contains("BadParameters"), Error);
}

TEST_CASE("hermitian q = 4, beta = 7: [60,30] self-dual") {
    LinearCode c = build_hermitian_isodual(4, 7);
    CHECK(c.n == 60);
    CHECK(c.k == 30);
    CHECK(c.prov.G.degree() == 35);
    CHECK(c.prov.designed_distance == 25);
    // 2b + 2 - q^2 = 0: certificate degenerates to all ones
    std::vector<int64_t> claimed = hermitian_claimed_certificate(c);
    CHECK(claimed == std::vector<int64_t>(60, 1));
    IsoDualCertificate cert = certify_isodual(c);
    CHECK(cert.verdict == IsoDualCertificate::Verdict::SelfDual);
    CHECK(cert.residual_ok);

    DistanceReport d = min_distance(c); // 16^30 messages: bounds only
    CHECK(d.mode == DistanceReport::Mode::Bounds);
    CHECK(d.lower == 25);
    CHECK(d.upper >= d.lower);
    CHECK(weight_of_message(c, d.witness) == d.upper);
    CHECK_THROWS_WITH_AS(
        min_distance(c, uint64_t(1) << 22, 1, /*exact_required=*/true),
        doctest::Contains("BudgetExceeded"), Error);
}

TEST_CASE("subcover lift q = 3, ell = 2: [12,6] iso-dual with exact distance 6") {
    CurveModel m = CurveModel::hermitian_cover(3, 2);
    LinearCode c = build_eab_lift(m, m.family_alphas(), "herm-cover");
    CHECK(c.n == 12);
    CHECK(c.k == 6);
    CHECK(c.prov.family == "herm-cover");
    CHECK(c.prov.genus == 1);
    CHECK(c.prov.G.degree() == 6);
    CHECK(c.prov.designed_distance == 6);

    IsoDualCertificate cert = certify_isodual(c);
    CHECK(cert.verdict == IsoDualCertificate::Verdict::IsoDual);
    CHECK(cert.residual_ok);
    CHECK(scaled_gram_is_zero(c, cert.x));

    DistanceReport d = min_distance(c);
    CHECK(d.mode == DistanceReport::Mode::Exact);
    CHECK(d.enumerated == 531440); // 9^6 - 1
    CHECK(d.d == 6);
}

TEST_CASE("two-step first lift q = 4: [30,15], deg G = 20") {
    LinearCode c = build_two_step_first_lift(4);
    CHECK(c.n == 30);
    CHECK(c.k == 15);
    CHECK(c.prov.family == "two-step");
    CHECK(c.prov.genus == 6); // hermitian genus q(q-1)/2
    CHECK(c.prov.G.degree() == 20);
    CHECK(c.prov.iparams.at("deg_G") == 20);
    CHECK(c.prov.designed_distance == 10);
    CHECK(c.prov.alphas.size() == 6);
    CHECK(c.prov.iparams.at("beta") == 2);

    IsoDualCertificate cert = certify_isodual(c);
    CHECK(cert.verdict == IsoDualCertificate::Verdict::IsoDual);
    CHECK(cert.residual_ok);
    CHECK(scaled_gram_is_zero(c, cert.x));

    CHECK_THROWS_WITH_AS(build_two_step_first_lift(2),
                         doctest::Contains("BadParameters"), Error);
    CHECK_THROWS_WITH_AS(build_two_step_first_lift(3),
                         doctest::Contains("BadParameters"), Error);
}

TEST_CASE("two-step first lift q = 8 builds [252,126]") {
    LinearCode c = build_two_step_first_lift(8);
    CHECK(c.n == 252);
    CHECK(c.k == 126);
    CHECK(c.prov.G.degree() == (252 + 2 * 28 - 2) / 2);
}

TEST_CASE("eab lift input validation") {
    FieldPtr f = Field::make(2, 3);
    CurveModel m = CurveModel::elem_abelian(f, 2, 1, {0, 0, 0, 1});
    CHECK_THROWS_WITH_AS(build_eab_lift(m, {0, 3, 5}), doctest::Contains("BadParity"),
                         Error);
    CHECK_THROWS_WITH_AS(build_eab_lift(m, {0, 3, 3, 5}),
                         doctest::Contains("DuplicateAlpha"), Error);
    CHECK_THROWS_WITH_AS(build_eab_lift(m, {0, 2, 3, 5}), doctest::Contains("NotSplit"),
                         Error);
    CurveModel s = CurveModel::suzuki_locus(8);
    CHECK_THROWS_WITH_AS(build_eab_lift(s, s.family_alphas()),
                         doctest::Contains("Unsupported"), Error);
    CHECK_THROWS_WITH_AS(hermitian_claimed_certificate(build_eab_lift(m, {0, 3, 5, 7})),
                         doctest::Contains("InvalidModel"), Error);
}

TEST_CASE("certifier: forced zero columns give NotIsoDual") {
    FieldPtr f = Field::make(2, 1);
    LinearCode c = bare_code(f, gen_from(f, 2, 4, {1, 0, 0, 0,
                                                   0, 1, 0, 0}));
    IsoDualCertificate cert = certify_isodual(c);
    CHECK(cert.verdict == IsoDualCertificate::Verdict::NotIsoDual);
    CHECK(cert.definitive());
    CHECK_FALSE(cert.positive());
}

TEST_CASE("certifier: odd length is NotIsoDual, malformed input rejected") {
    FieldPtr f = Field::make(2, 1);
    LinearCode c = bare_code(f, gen_from(f, 1, 3, {1, 1, 1}));
    CHECK(certify_isodual(c).verdict == IsoDualCertificate::Verdict::NotIsoDual);

    LinearCode sq = bare_code(f, gen_from(f, 2, 2, {1, 0, 0, 1})); // k = n
    CHECK(certify_isodual(sq).verdict == IsoDualCertificate::Verdict::NotIsoDual);

    // a broken claimed vector is reported, not thrown: the search still runs
    LinearCode rep = bare_code(f, gen_from(f, 1, 2, {1, 1}));
    std::vector<int64_t> wrong_len = {1};
    IsoDualCertificate c1 = certify_isodual(rep, &wrong_len);
    CHECK(c1.claimed_checked);
    CHECK_FALSE(c1.claimed_ok);
    CHECK(c1.verdict == IsoDualCertificate::Verdict::SelfDual);
    std::vector<int64_t> has_zero = {1, 0};
    IsoDualCertificate c2 = certify_isodual(rep, &has_zero);
    CHECK(c2.claimed_checked);
    CHECK_FALSE(c2.claimed_ok);
}

TEST_CASE("certifier: binary [4,2] with no scaling freedom is NotIsoDual") {
    FieldPtr f = Field::make(2, 1);
    // C = span{(1,0,1,1),(0,1,1,0)}; over GF(2) iso-dual would mean self-dual,
    // and C != C^perp here.
    LinearCode c = bare_code(f, gen_from(f, 2, 4, {1, 0, 1, 1,
                                                   0, 1, 1, 0}));
    IsoDualCertificate cert = certify_isodual(c);
    CHECK(cert.verdict == IsoDualCertificate::Verdict::NotIsoDual);
}

TEST_CASE("certifier: [1 1] single row is SelfDual") {
    FieldPtr f = Field::make(2, 1);
    LinearCode c = bare_code(f, gen_from(f, 1, 2, {1, 1}));
    IsoDualCertificate cert = certify_isodual(c);
    CHECK(cert.verdict == IsoDualCertificate::Verdict::SelfDual);
    CHECK(cert.x == std::vector<int64_t>(2, 1));
    CHECK(cert.residual_ok);
}

TEST_CASE("certifier: GF(4) MDS [4,2] rational code is self-dual") {
    FieldPtr f4 = Field::make(2, 2);
    LinearCode c = build_rational_isodual(f4, {0, 1, 2, 3});
    IsoDualCertificate cert = certify_isodual(c);
    CHECK(cert.verdict == IsoDualCertificate::Verdict::SelfDual);
    DistanceReport d = min_distance(c);
    CHECK(d.d == 3); // MDS: n - k + 1
}

TEST_CASE("distance: bounds mode stays sound on a scaled code") {
    // scaling columns by nonzero constants must not change the distance
    FieldPtr f = Field::make(2, 3);
    CurveModel m = CurveModel::elem_abelian(f, 2, 1, {0, 0, 0, 1});
    LinearCode c = build_eab_lift(m, m.family_alphas());
    LinearCode scaled = c;
    std::vector<int64_t> x = {2, 7, 1, 3, 4, 6, 5, 1};
    for (int r = 0; r < scaled.k; ++r)
        for (int j = 0; j < scaled.n; ++j)
            scaled.gen.set(r, j, f->mul(scaled.gen.at(r, j), x[j]));
    DistanceReport d0 = min_distance(c);
    DistanceReport d1 = min_distance(scaled);
    CHECK(d0.d == d1.d);
}

TEST_CASE("param reports: closed forms") {
    ParamReport h4 = param_report("hermitian", {{"q", 4}});
    CHECK(h4.n == 60);
    CHECK(h4.k == 30);
    CHECK(h4.designed_d == 25);
    CHECK(h4.genus == 6);

    ParamReport h9 = param_report("hermitian", {{"q", 9}});
    CHECK(h9.n == 720);
    CHECK(h9.k == 360);
    CHECK(h9.designed_d == 325);

    ParamReport h16 = param_report("hermitian", {{"q", 16}});
    CHECK(h16.n == 4080);
    CHECK(h16.k == 2040);
    CHECK(h16.designed_d == 1921);

    ParamReport h25 = param_report("hermitian", {{"q", 25}});
    CHECK(h25.n == 15600);
    CHECK(h25.k == 7800);
    CHECK(h25.designed_d == 7501);

    ParamReport sz = param_report("suzuki", {{"q", 8}});
    CHECK(sz.n == 4032);
    CHECK(sz.k == 2016);
    CHECK(sz.designed_d == 2003);
    CHECK(sz.genus == 14);
    CHECK(sz.extra.at("n_base") == 504);
    CHECK(sz.extra.at("split_total") == 736); // q^3 + 2 g q, from maximality

    ParamReport ggs = param_report("ggs", {{"q", 3}, {"r", 3}});
    CHECK(ggs.n == 2016);
    CHECK(ggs.k == 1008);
    CHECK(ggs.designed_d == 983);
    CHECK(ggs.genus == 24);
    CHECK(ggs.extra.at("alt_designed_d") == 985);

    ParamReport ts = param_report("two-step", {{"q", 4}});
    CHECK(ts.n == 30);
    CHECK(ts.k == 15);
    CHECK(ts.designed_d == 10);
    CHECK(ts.extra.at("deg_G") == 20);

    ParamReport tf = param_report("two-step-final", {{"q", 4}});
    CHECK(tf.n == 150);
    CHECK(tf.k == 75);
    CHECK(tf.designed_d == 16);
    CHECK(tf.genus == 60);
    CHECK(tf.extra.at("deg_G") == 134);
    CHECK(tf.extra.at("alt_designed_d") == 48);

    ParamReport hc = param_report("herm-cover", {{"q", 3}, {"ell", 2}});
    CHECK(hc.n == 12);
    CHECK(hc.k == 6);
    CHECK(hc.designed_d == 6);

    ParamReport rat = param_report("rational", {{"n", 8}});
    CHECK(rat.k == 4);
    CHECK(rat.designed_d == 5);

    CHECK_THROWS_WITH_AS(param_report("nope", {}), doctest::Contains("BadParameters"),
                         Error);
    CHECK_THROWS_WITH_AS(param_report("suzuki", {{"q", 16}}),
                         doctest::Contains("BadParameters"), Error);
}

TEST_CASE("divisor ledger: every constructed code satisfies the degree relation") {
    FieldPtr f8 = Field::make(2, 3);
    CurveModel eab = CurveModel::elem_abelian(f8, 2, 1, {0, 0, 0, 1});
    std::vector<LinearCode> codes;
    codes.push_back(build_eab_lift(eab, eab.family_alphas()));
    codes.push_back(build_hermitian_isodual(2, 1));
    codes.push_back(build_hermitian_isodual(3, 1));
    CurveModel hc = CurveModel::hermitian_cover(3, 2);
    codes.push_back(build_eab_lift(hc, hc.family_alphas(), "herm-cover"));
    codes.push_back(build_two_step_first_lift(4));
    for (const LinearCode& c : codes) {
        CHECK(c.prov.D.degree() == c.n);
        CHECK(2 * c.prov.G.degree() == c.n + 2 * c.prov.genus - 2);
        CHECK(supports_disjoint(c.prov.D, c.prov.G));
        CHECK(isodual_degree_check(c.prov.D, c.prov.G, c.prov.genus));
        CHECK(c.prov.designed_distance == c.n - c.prov.G.degree());
        // Riemann-Roch dimension: k = deg G + 1 - g (deg G > 2g - 2 holds)
        CHECK(c.k == c.prov.G.degree() + 1 - c.prov.genus);
    }
}
