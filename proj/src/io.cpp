#include "leonard/io.hpp"

#include <cstdlib>
#include <ctime>

namespace leonard {

namespace {

std::vector<Scalar> scalars_from_json(const Json& j, const Field& f) {
    if (!j.is_array()) throw ParseError("expected an array of scalar strings");
    std::vector<Scalar> out;
    out.reserve(j.size());
    for (const auto& v : j) {
        if (!v.is_string()) throw ParseError("scalar entries must be strings");
        out.push_back(Scalar::parse(v.get<std::string>(), f));
    }
    return out;
}

Json scalars_to_json(const std::vector<Scalar>& v) {
    Json j = Json::array();
    for (const Scalar& s : v) j.push_back(s.to_string());
    return j;
}

const Json& field_at(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw ParseError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

} // namespace

Json tuple_to_json(const QRacahTuple& t) {
    return Json{{"a", t.a.to_string()}, {"b", t.b.to_string()}, {"c", t.c.to_string()},
                {"q", t.q.to_string()}, {"d", t.d},             {"field", t.field().to_string()}};
}

QRacahTuple tuple_from_json(const Json& j) {
    const Json& fd = field_at(j, "field");
    if (!fd.is_string()) throw ParseError("\"field\" must be a string");
    const Field f = Field::parse(fd.get<std::string>());
    const Json& dd = field_at(j, "d");
    if (!dd.is_number_integer()) throw ParseError("\"d\" must be an integer");
    const long long d = dd.get<long long>();
    if (d < 3 || d > 4096) throw ParseError("\"d\" out of range");
    auto scalar = [&](const char* key) {
        const Json& v = field_at(j, key);
        if (!v.is_string()) throw ParseError(std::string("\"") + key + "\" must be a string");
        return Scalar::parse(v.get<std::string>(), f);
    };
    return make_tuple(scalar("a"), scalar("b"), scalar("c"), scalar("q"), static_cast<int>(d));
}

Json matrix_to_json(const ExactMatrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.dim(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.dim(); ++j) row.push_back(m.at(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return Json{{"dim", m.dim()}, {"rows", std::move(rows)}};
}

ExactMatrix matrix_from_json(const Json& j, const Field& f) {
    const Json& dim = field_at(j, "dim");
    if (!dim.is_number_integer() || dim.get<int>() <= 0) throw ParseError("bad matrix dim");
    const int n = dim.get<int>();
    const Json& rows = field_at(j, "rows");
    if (!rows.is_array() || static_cast<int>(rows.size()) != n) throw ParseError("bad matrix rows");
    ExactMatrix m(n, f);
    for (int i = 0; i < n; ++i) {
        const std::vector<Scalar> row = scalars_from_json(rows.at(static_cast<std::size_t>(i)), f);
        if (static_cast<int>(row.size()) != n) throw ParseError("ragged matrix row");
        for (int k = 0; k < n; ++k) m.at(i, k) = row[static_cast<std::size_t>(k)];
    }
    return m;
}

Json array_to_json(const ParameterArray& p) {
    return Json{{"theta", scalars_to_json(p.theta)},
                {"theta_star", scalars_to_json(p.theta_star)},
                {"varphi", scalars_to_json(p.varphi)},
                {"phi", scalars_to_json(p.phi)}};
}

ParameterArray array_from_json(const Json& j, const Field& f) {
    ParameterArray p{scalars_from_json(field_at(j, "theta"), f),
                     scalars_from_json(field_at(j, "theta_star"), f),
                     scalars_from_json(field_at(j, "varphi"), f),
                     scalars_from_json(field_at(j, "phi"), f)};
    const std::size_t n = p.theta.size();
    if (n < 2 || p.theta_star.size() != n || p.varphi.size() + 1 != n || p.phi.size() + 1 != n)
        throw ParseError("inconsistent parameter array lengths");
    return p;
}

Json bundle_to_json(const Bundle& b, bool with_idempotents) {
    Json j{{"tuple", tuple_to_json(b.tuple)},
           {"parameter_array", array_to_json(b.array)},
           {"A", matrix_to_json(b.A)},
           {"A_star", matrix_to_json(b.A_star)},
           {"A_eps", matrix_to_json(b.A_eps)},
           {"M", matrix_to_json(b.M)}};
    if (with_idempotents) {
        auto family = [](const std::vector<ExactMatrix>& es) {
            Json arr = Json::array();
            for (const ExactMatrix& e : es) arr.push_back(matrix_to_json(e));
            return arr;
        };
        j["idempotents"] = Json{{"E", family(b.E)}, {"E_star", family(b.E_star)}, {"E_eps", family(b.E_eps)}};
    }
    return j;
}

Bundle bundle_from_json(const Json& j) {
    const QRacahTuple t = tuple_from_json(field_at(j, "tuple"));
    const Field f = t.field();
    Bundle b{t,
             array_from_json(field_at(j, "parameter_array"), f),
             matrix_from_json(field_at(j, "A"), f),
             matrix_from_json(field_at(j, "A_star"), f),
             matrix_from_json(field_at(j, "A_eps"), f),
             matrix_from_json(field_at(j, "M"), f),
             {},
             {},
             {}};
    if (j.contains("idempotents")) {
        const Json& idem = j.at("idempotents");
        auto family = [&](const char* key) {
            std::vector<ExactMatrix> out;
            for (const auto& e : field_at(idem, key)) out.push_back(matrix_from_json(e, f));
            return out;
        };
        b.E = family("E");
        b.E_star = family("E_star");
        b.E_eps = family("E_eps");
    }
    return b;
}

Bundle make_bundle(const QRacahTuple& t, bool with_idempotents) {
    LeonardRealization r = build_triple(t);
    ParameterArray p = parameter_array(t);
    ExactMatrix m = transition_matrix(t);
    Bundle b{t, std::move(p), std::move(r.A), std::move(r.A_star), std::move(r.A_eps),
             std::move(m), {}, {}, {}};
    if (with_idempotents) {
        b.E = std::move(r.E);
        b.E_star = std::move(r.E_star);
        b.E_eps = std::move(r.E_eps);
    }
    return b;
}

std::string report_text(const VerificationReport& r) {
    std::string out;
    for (const Check& c : r.checks) {
        out += c.name;
        out += c.pass ? ": pass" : ": FAIL";
        if (!c.pass && !c.witness.empty()) out += " (" + c.witness + ")";
        out += "\n";
    }
    out += r.overall() ? "overall: pass\n" : "overall: FAIL\n";
    return out;
}

Json report_json(const VerificationReport& r) {
    Json checks = Json::array();
    for (const Check& c : r.checks)
        checks.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"witness", c.witness}});
    return Json{{"checks", std::move(checks)}, {"overall", r.overall()}};
}

std::string admissibility_text(const AdmissibilityReport& r) {
    std::string out;
    for (const ConditionCheck& c : r.conditions) {
        out += c.name;
        out += c.pass ? ": pass" : ": FAIL";
        if (!c.pass && !c.witness.empty()) out += " (" + c.witness + ")";
        out += "\n";
    }
    return out;
}

Json admissibility_json(const AdmissibilityReport& r) {
    Json checks = Json::array();
    for (const ConditionCheck& c : r.conditions)
        checks.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"witness", c.witness}});
    return Json{{"conditions", std::move(checks)}, {"admissible", r.admissible()}};
}

std::string orbit_key(const QRacahTuple& t) {
    std::string best;
    for (const QRacahTuple& u : triple_orbit(t)) {
        const std::string text = u.text();
        if (best.empty() || text < best) best = text;
    }
    return best;
}

std::string catalog_timestamp() {
    std::time_t now = std::time(nullptr);
    if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH")) {
        char* end = nullptr;
        const long long v = std::strtoll(epoch, &end, 10);
        if (end && *end == '\0') now = static_cast<std::time_t>(v);
    }
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

CatalogRecord make_catalog_record(const QRacahTuple& t, bool verified, int members) {
    return {tuple_to_json(t), hat_invariant(t).text(), orbit_key(t), verified, catalog_timestamp(),
            members};
}

Json catalog_record_to_json(const CatalogRecord& r) {
    Json j{{"tuple", r.tuple},
           {"hat", r.hat},
           {"orbit_key", r.orbit_key},
           {"verified", r.verified},
           {"timestamp", r.timestamp}};
    if (r.members >= 0) j["members"] = r.members;
    return j;
}

TupleSampler::TupleSampler(const Field& f, int d, std::uint64_t seed)
    : field_(f), d_(d), rng_(seed) {
    if (d < 3) throw ParseError("diameter d must be at least 3");
}

Scalar TupleSampler::draw_rational_slot() {
    const long long magnitude = 2 + static_cast<long long>(rng_() % 8);
    const bool negate = (rng_() & 1) != 0;
    const bool invert = (rng_() & 1) != 0;
    Scalar s = Scalar::integer(field_, negate ? -magnitude : magnitude);
    return invert ? s.inv() : s;
}

QRacahTuple TupleSampler::next() {
    if (field_.kind() == FieldKind::PrimeField) {
        const std::uint64_t p = field_.modulus();
        auto unit = [&] { return Scalar::residue(field_, 1 + rng_() % (p - 1)); };
        return make_tuple(unit(), unit(), unit(), unit(), d_);
    }
    const Scalar a = draw_rational_slot(), b = draw_rational_slot(), c = draw_rational_slot();
    const long long qs[] = {2, 3, 5};
    const Scalar q = Scalar::integer(field_, qs[rng_() % 3]);
    return make_tuple(a, b, c, q, d_);
}

QRacahTuple TupleSampler::next_triple_admissible(int max_attempts) {
    for (int k = 0; k < max_attempts; ++k) {
        QRacahTuple t = next();
        if (check_triple_admissible(t).admissible()) return t;
    }
    throw NoAdmissibleFound("no triple-admissible tuple after " + std::to_string(max_attempts) +
                            " draws");
}

} // namespace leonard
