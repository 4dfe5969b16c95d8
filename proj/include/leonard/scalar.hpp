#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "leonard/errors.hpp"

namespace leonard {

enum class FieldKind { Rationals, PrimeField };

// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n);

// Arithmetic context: the rationals, or GF(p) for an odd prime p.
class Field {
public:
    static Field rationals() { return Field(FieldKind::Rationals, 0); }
    static Field prime_field(std::uint64_t p); // BadField unless p is an odd prime
    static Field parse(const std::string& text); // "Q" or "GF:p"

    FieldKind kind() const { return kind_; }
    std::uint64_t modulus() const { return p_; }
    std::string to_string() const;

    bool operator==(const Field& o) const = default;

private:
    Field(FieldKind k, std::uint64_t p) : kind_(k), p_(p) {}
    FieldKind kind_;
    std::uint64_t p_;
};

// Exact field element. Rationals are kept in lowest terms with positive
// denominator; prime-field values are canonical residues in [0, p).
class Scalar {
public:
    Scalar() : field_(Field::rationals()) {}
    explicit Scalar(const Field& f) : field_(f) {}

    // canonical image of a machine integer
    static Scalar integer(const Field& f, long long n);
    static Scalar rational(const mpq_class& v);
    static Scalar residue(const Field& f, std::uint64_t r);

    // text format: rationals "n" or "n/d"; prime field "k" with 0 <= k < p
    static Scalar parse(const std::string& text, const Field& f);
    std::string to_string() const;

    const Field& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    friend Scalar operator+(const Scalar& x, const Scalar& y);
    friend Scalar operator-(const Scalar& x, const Scalar& y);
    friend Scalar operator*(const Scalar& x, const Scalar& y);
    friend Scalar operator/(const Scalar& x, const Scalar& y); // ZeroInverse on y = 0

    Scalar& operator+=(const Scalar& y) { return *this = *this + y; }
    Scalar& operator-=(const Scalar& y) { return *this = *this - y; }
    Scalar& operator*=(const Scalar& y) { return *this = *this * y; }
    Scalar& operator/=(const Scalar& y) { return *this = *this / y; }

    bool operator==(const Scalar& y) const;
    bool operator!=(const Scalar& y) const { return !(*this == y); }

    Scalar inv() const;          // ZeroInverse on 0
    Scalar pow(long long n) const; // repeated squaring; ZeroInverse on 0^n, n < 0

    // x + x^{-1}
    Scalar trace_sum() const { return *this + inv(); }

    const mpq_class& rational_value() const;
    std::uint64_t residue_value() const { return res_; }

private:
    static void require_same_field(const Scalar& x, const Scalar& y);
    Field field_;
    mpq_class rat_;
    std::uint64_t res_ = 0;
};

// (x; t)_n = (1 - x)(1 - x t) ... (1 - x t^{n-1}), with (x; t)_0 = 1
Scalar q_pochhammer(const Scalar& x, const Scalar& t, int n);

// Square root within the field. Returns false when none exists (rationals:
// numerator or denominator not a perfect square; GF(p): quadratic non-residue).
bool square_root(const Scalar& x, Scalar& root);

} // namespace leonard
