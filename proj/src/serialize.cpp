#include "isodual/serialize.hpp"

#include "isodual/errors.hpp"

namespace isodual {

namespace {

const char* kind_name(Place::Kind k) {
    switch (k) {
        case Place::Kind::Infinite: return "infinite";
        case Place::Kind::Affine: return "affine";
        case Place::Kind::Labeled: return "labeled";
    }
    return "?";
}

Place::Kind kind_from(const std::string& s) {
    if (s == "infinite") return Place::Kind::Infinite;
    if (s == "affine") return Place::Kind::Affine;
    if (s == "labeled") return Place::Kind::Labeled;
    throw Error("BadFile", "unknown place kind '" + s + "'");
}

IsoDualCertificate::Verdict verdict_from(const std::string& s) {
    using V = IsoDualCertificate::Verdict;
    if (s == "SelfDual") return V::SelfDual;
    if (s == "IsoDual") return V::IsoDual;
    if (s == "NotIsoDual") return V::NotIsoDual;
    if (s == "Inconclusive") return V::Inconclusive;
    throw Error("BadFile", "unknown verdict '" + s + "'");
}

} // namespace

Json field_json(const FieldPtr& f) {
    return Json{{"p", f->p()},
                {"m", f->m()},
                {"modulus", f->modulus()},
                {"signature", f->signature()}};
}

FieldPtr field_from_json(const Json& j) {
    std::vector<int64_t> modulus;
    if (j.contains("modulus")) modulus = j.at("modulus").get<std::vector<int64_t>>();
    return Field::make(j.at("p").get<int64_t>(), j.at("m").get<int>(), std::move(modulus));
}

Json matrix_json(const MatGF& m) {
    Json rows = Json::array();
    for (int r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

MatGF matrix_from_json(const FieldPtr& f, const Json& j) {
    if (!j.is_array()) throw Error("BadFile", "matrix must be an array of rows");
    int rows = static_cast<int>(j.size());
    int cols = rows == 0 ? 0 : static_cast<int>(j.at(0).size());
    MatGF m(f, rows, cols);
    for (int r = 0; r < rows; ++r) {
        const Json& row = j.at(r);
        if (static_cast<int>(row.size()) != cols)
            throw Error("BadFile", "ragged matrix rows");
        for (int c = 0; c < cols; ++c) {
            int64_t v = row.at(c).get<int64_t>();
            if (v < 0 || v >= f->order())
                throw Error("BadFile", "matrix entry outside the field");
            m.set(r, c, v);
        }
    }
    return m;
}

Json place_json(const Place& p) {
    return Json{{"curve", p.curve},
                {"kind", kind_name(p.kind)},
                {"coords", p.coords},
                {"label", p.label},
                {"degree", p.degree}};
}

Place place_from_json(const Json& j) {
    Place p;
    p.curve = j.at("curve").get<std::string>();
    p.kind = kind_from(j.at("kind").get<std::string>());
    if (j.contains("coords")) p.coords = j.at("coords").get<std::vector<int64_t>>();
    if (j.contains("label")) p.label = j.at("label").get<std::string>();
    if (j.contains("degree")) p.degree = j.at("degree").get<int>();
    return p;
}

Json divisor_json(const Divisor& d) {
    Json terms = Json::array();
    for (const auto& [place, coeff] : d.terms())
        terms.push_back(Json{{"place", place_json(place)}, {"coeff", coeff}});
    return terms;
}

Divisor divisor_from_json(const Json& j) {
    if (!j.is_array()) throw Error("BadFile", "divisor must be an array of terms");
    Divisor d;
    for (const Json& t : j)
        d.add(place_from_json(t.at("place")), t.at("coeff").get<long long>());
    return d;
}

Json descriptor_json(const ExtensionDescriptor& e) {
    Json fibers = Json::array();
    for (const auto& [base, entries] : e.fibers) {
        Json above = Json::array();
        for (const FiberEntry& fe : entries)
            above.push_back(Json{{"place", place_json(fe.above)}, {"e", fe.e}, {"d", fe.d}});
        fibers.push_back(Json{{"base", place_json(base)}, {"above", std::move(above)}});
    }
    return Json{{"base_curve", e.base_curve}, {"top_curve", e.top_curve},
                {"degree", e.degree},         {"base_genus", e.base_genus},
                {"top_genus", e.top_genus},   {"characteristic", e.characteristic},
                {"fibers", std::move(fibers)}};
}

Json code_json(const LinearCode& c) {
    Json columns = Json::array();
    for (const Place& p : c.columns) columns.push_back(place_json(p));
    Json prov{{"family", c.prov.family},
              {"iparams", c.prov.iparams},
              {"alphas", c.prov.alphas},
              {"D", divisor_json(c.prov.D)},
              {"G", divisor_json(c.prov.G)},
              {"genus", c.prov.genus},
              {"designed_distance", c.prov.designed_distance}};
    return Json{{"field", field_json(c.field)},
                {"n", c.n},
                {"k", c.k},
                {"generator", matrix_json(c.gen)},
                {"columns", std::move(columns)},
                {"provenance", std::move(prov)}};
}

LinearCode code_from_json(const Json& j) {
    LinearCode c;
    c.field = field_from_json(j.at("field"));
    c.n = j.at("n").get<int>();
    c.k = j.at("k").get<int>();
    c.gen = matrix_from_json(c.field, j.at("generator"));
    if (c.gen.rows() != c.k || c.gen.cols() != c.n)
        throw Error("BadFile", "generator shape disagrees with n, k");
    for (const Json& p : j.at("columns")) c.columns.push_back(place_from_json(p));
    if (static_cast<int>(c.columns.size()) != c.n)
        throw Error("BadFile", "column place count disagrees with n");
    const Json& prov = j.at("provenance");
    c.prov.family = prov.at("family").get<std::string>();
    c.prov.iparams = prov.at("iparams").get<std::map<std::string, long long>>();
    c.prov.alphas = prov.at("alphas").get<std::vector<int64_t>>();
    c.prov.D = divisor_from_json(prov.at("D"));
    c.prov.G = divisor_from_json(prov.at("G"));
    c.prov.genus = prov.at("genus").get<long long>();
    c.prov.designed_distance = prov.at("designed_distance").get<long long>();
    return c;
}

Json certificate_json(const IsoDualCertificate& c) {
    Json x = c.positive() ? Json(c.x) : Json(nullptr);
    return Json{{"verdict", verdict_name(c.verdict)},
                {"x", std::move(x)},
                {"residual_ok", c.residual_ok},
                {"nullity", c.nullity},
                {"samples", c.samples},
                {"claimed_checked", c.claimed_checked},
                {"claimed_ok", c.claimed_ok},
                {"note", c.note},
                {"seed", c.seed}};
}

IsoDualCertificate certificate_from_json(const Json& j) {
    IsoDualCertificate c;
    c.verdict = verdict_from(j.at("verdict").get<std::string>());
    if (j.contains("x") && !j.at("x").is_null())
        c.x = j.at("x").get<std::vector<int64_t>>();
    c.residual_ok = j.at("residual_ok").get<bool>();
    c.nullity = j.at("nullity").get<long long>();
    c.samples = j.at("samples").get<long long>();
    c.claimed_checked = j.at("claimed_checked").get<bool>();
    c.claimed_ok = j.at("claimed_ok").get<bool>();
    c.note = j.at("note").get<std::string>();
    c.seed = j.at("seed").get<uint64_t>();
    return c;
}

Json distance_json(const DistanceReport& r) {
    return Json{{"mode", r.mode == DistanceReport::Mode::Exact ? "exact" : "bounds"},
                {"d", r.d},
                {"lower", r.lower},
                {"upper", r.upper},
                {"enumerated", r.enumerated},
                {"witness", r.witness},
                {"seed", r.seed},
                {"threads", r.threads}};
}

DistanceReport distance_from_json(const Json& j) {
    DistanceReport r;
    std::string mode = j.at("mode").get<std::string>();
    if (mode == "exact") r.mode = DistanceReport::Mode::Exact;
    else if (mode == "bounds") r.mode = DistanceReport::Mode::Bounds;
    else throw Error("BadFile", "unknown distance mode '" + mode + "'");
    r.d = j.at("d").get<long long>();
    r.lower = j.at("lower").get<long long>();
    r.upper = j.at("upper").get<long long>();
    r.enumerated = j.at("enumerated").get<unsigned long long>();
    r.witness = j.at("witness").get<std::vector<int64_t>>();
    r.seed = j.at("seed").get<uint64_t>();
    r.threads = j.at("threads").get<int>();
    return r;
}

Json params_json(const ParamReport& r) {
    return Json{{"family", r.family}, {"params", r.params}, {"n", r.n},
                {"k", r.k},           {"designed_d", r.designed_d},
                {"genus", r.genus},   {"extra", r.extra}};
}

Json curvex_census_json(const CurveXCensus& c) {
    Json hist = Json::object();
    for (const auto& [ram_count, alphas] : c.alpha_ram_histogram)
        hist[std::to_string(ram_count)] = alphas;
    return Json{{"q", c.q},
                {"affine", c.affine},
                {"total", c.total},
                {"hermitian_places_ramified_in_top", c.hermitian_places_ramified_in_top},
                {"alpha_ram_histogram", std::move(hist)},
                {"step2_split_hypothesis_ok", c.step2_split_hypothesis_ok}};
}

Json additive_census_json(const AdditiveCensus& c) {
    return Json{{"split_total", c.split_total},
                {"family_count", c.family_count},
                {"trace_crosscheck_ok", c.trace_crosscheck_ok}};
}

Json split_report_json(const SplitReport& r) {
    Json classes = Json::array();
    for (const PlaceClass& pc : r.classes)
        classes.push_back(Json{{"at_infinity", pc.at_infinity},
                               {"alpha", pc.alpha},
                               {"tag", pc.tag},
                               {"e", pc.e},
                               {"d", pc.d},
                               {"points", pc.points}});
    return Json{{"curve", r.curve},
                {"total_rational", r.total_rational},
                {"split_bases", r.split_bases},
                {"ramified_bases", r.ramified_bases},
                {"classes", std::move(classes)}};
}

Json cyclotomic_json(const CyclotomicParams& p) {
    return Json{{"q", p.q},
                {"n", p.n},
                {"m", p.m},
                {"e", p.e},
                {"genus", p.genus},
                {"length", p.length},
                {"dim", p.dim},
                {"designed_d", p.designed_d},
                {"base_curve", p.base_curve},
                {"D", divisor_json(p.D)},
                {"G", divisor_json(p.G)}};
}

Json carlitz_report_json(const CarlitzIdentityReport& r) {
    return Json{{"exact", r.exact_ok},
                {"truncated", r.truncated_ok},
                {"holds", r.exact_ok && r.truncated_ok},
                {"j_support", r.j_support}};
}

std::string canonical_dump(const Json& j) { return j.dump(); }

std::string content_id(const Json& j) {
    std::string s = canonical_dump(j);
    uint64_t h = 1469598103934665603ull; // FNV offset basis
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ull; // FNV prime
    }
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = hex[h & 0xf];
        h >>= 4;
    }
    return out;
}

std::string generator_csv(const LinearCode& c) {
    std::string out;
    for (int r = 0; r < c.k; ++r) {
        for (int col = 0; col < c.n; ++col) {
            if (col) out += ',';
            out += std::to_string(c.gen.at(r, col));
        }
        out += '\n';
    }
    return out;
}

} // namespace isodual
