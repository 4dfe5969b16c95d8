#pragma once

#include <random>
#include <string>

#include "leonard/io.hpp"

namespace testsupport {

using namespace leonard;

inline Scalar Q(const std::string& text) { return Scalar::parse(text, Field::rationals()); }

inline Scalar gf(std::uint64_t r, std::uint64_t p) {
    return Scalar::residue(Field::prime_field(p), r);
}

// (3,5,7;2) with d = 3: the fixed rational reference tuple
inline QRacahTuple reference_tuple(int d = 3) {
    return make_tuple(Q("3"), Q("5"), Q("7"), Q("2"), d);
}

struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}

    long long between(long long lo, long long hi) { // inclusive
        return lo + static_cast<long long>(eng() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    Scalar rational() {
        const long long num = between(-20, 20);
        const long long den = between(1, 12);
        return Scalar::rational(mpq_class(static_cast<long>(num), static_cast<long>(den)));
    }

    Scalar nonzero_rational() {
        for (;;) {
            Scalar s = rational();
            if (!s.is_zero()) return s;
        }
    }

    Scalar residue(const Field& f) { return Scalar::residue(f, eng() % f.modulus()); }

    Scalar nonzero_residue(const Field& f) {
        return Scalar::residue(f, 1 + eng() % (f.modulus() - 1));
    }

    QRacahTuple admissible_gf_tuple(const Field& f, int d) {
        for (;;) {
            QRacahTuple t = make_tuple(nonzero_residue(f), nonzero_residue(f), nonzero_residue(f),
                                       nonzero_residue(f), d);
            if (check_triple_admissible(t).admissible()) return t;
        }
    }
};

} // namespace testsupport
