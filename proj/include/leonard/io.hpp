#pragma once

#include <json.hpp>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "leonard/verify.hpp"

namespace leonard {

using Json = nlohmann::ordered_json;

// {"a": s, "b": s, "c": s, "q": s, "d": n, "field": "Q" | "GF:p"}
Json tuple_to_json(const QRacahTuple& t);
QRacahTuple tuple_from_json(const Json& j); // ParseError

// {"dim": n, "rows": [[scalar-string, ...], ...]}
Json matrix_to_json(const ExactMatrix& m);
ExactMatrix matrix_from_json(const Json& j, const Field& f);

Json array_to_json(const ParameterArray& p);
ParameterArray array_from_json(const Json& j, const Field& f);

// Realization bundle written by `build` and re-read by `verify --from`.
struct Bundle {
    QRacahTuple tuple;
    ParameterArray array;
    ExactMatrix A, A_star, A_eps, M;
    std::vector<ExactMatrix> E, E_star, E_eps; // empty when not emitted
};

Json bundle_to_json(const Bundle& b, bool with_idempotents);
Bundle bundle_from_json(const Json& j);
Bundle make_bundle(const QRacahTuple& t, bool with_idempotents);

std::string report_text(const VerificationReport& r);
Json report_json(const VerificationReport& r);
std::string admissibility_text(const AdmissibilityReport& r);
Json admissibility_json(const AdmissibilityReport& r);

// One catalog line per isomorphism class or per enumerated tuple.
struct CatalogRecord {
    Json tuple;
    std::string hat;
    std::string orbit_key;
    bool verified;
    std::string timestamp;
    int members = -1; // class size; -1 when not applicable
};

CatalogRecord make_catalog_record(const QRacahTuple& t, bool verified, int members = -1);
Json catalog_record_to_json(const CatalogRecord& r);

// ISO-8601 UTC; honors SOURCE_DATE_EPOCH so catalogs can be reproduced.
std::string catalog_timestamp();

// Lexicographic minimum of the eight orbit members' textual forms.
std::string orbit_key(const QRacahTuple& t);

// Deterministic seeded draws for the enumerate command: GF(p) samples each
// slot from GF(p)*, the rationals sample a,b,c from {±2..±9} and their
// inverses with q from {2,3,5}.
class TupleSampler {
public:
    TupleSampler(const Field& f, int d, std::uint64_t seed);
    QRacahTuple next();
    // NoAdmissibleFound when max_attempts raw draws yield nothing admissible
    QRacahTuple next_triple_admissible(int max_attempts);

private:
    Scalar draw_rational_slot();
    Field field_;
    int d_;
    std::mt19937_64 rng_;
};

} // namespace leonard
