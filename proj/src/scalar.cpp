#include "leonard/scalar.hpp"

#include <cctype>

namespace leonard {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod(u64 base, u64 exp, u64 m) {
    u64 r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

} // namespace

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // witness set proven sufficient below 3.3 * 10^24
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

Field Field::prime_field(u64 p) {
    if (p == 2) throw BadField("GF(2) is not supported");
    if (!is_prime(p)) throw BadField("modulus " + std::to_string(p) + " is not prime");
    return Field(FieldKind::PrimeField, p);
}

Field Field::parse(const std::string& text) {
    if (text == "Q") return rationals();
    if (text.rfind("GF:", 0) == 0) {
        const std::string num = text.substr(3);
        if (num.empty()) throw ParseError("bad field spec: " + text);
        u64 p = 0;
        for (char ch : num) {
            if (!std::isdigit(static_cast<unsigned char>(ch))) throw ParseError("bad field spec: " + text);
            u64 next = p * 10 + static_cast<u64>(ch - '0');
            if (next < p) throw ParseError("field modulus out of range: " + text);
            p = next;
        }
        try {
            return prime_field(p);
        } catch (const BadField& e) {
            throw ParseError(e.what());
        }
    }
    throw ParseError("bad field spec: " + text + " (expected \"Q\" or \"GF:p\")");
}

std::string Field::to_string() const {
    return kind_ == FieldKind::Rationals ? "Q" : "GF:" + std::to_string(p_);
}

void Scalar::require_same_field(const Scalar& x, const Scalar& y) {
    if (!(x.field_ == y.field_)) {
        throw FieldMismatch("scalars from " + x.field_.to_string() + " and " + y.field_.to_string());
    }
}

Scalar Scalar::integer(const Field& f, long long n) {
    Scalar s(f);
    if (f.kind() == FieldKind::Rationals) {
        s.rat_ = mpq_class(static_cast<long>(n));
    } else {
        const u64 p = f.modulus();
        long long r = n % static_cast<long long>(p);
        if (r < 0) r += static_cast<long long>(p);
        s.res_ = static_cast<u64>(r);
    }
    return s;
}

Scalar Scalar::rational(const mpq_class& v) {
    Scalar s(Field::rationals());
    s.rat_ = v;
    s.rat_.canonicalize();
    return s;
}

Scalar Scalar::residue(const Field& f, u64 r) {
    if (f.kind() != FieldKind::PrimeField) throw BadField("residue requires a prime field");
    Scalar s(f);
    s.res_ = r % f.modulus();
    return s;
}

Scalar Scalar::parse(const std::string& text, const Field& f) {
    if (text.empty()) throw ParseError("empty scalar");
    if (f.kind() == FieldKind::Rationals) {
        std::size_t i = 0;
        if (text[0] == '-') i = 1;
        bool seen_digit = false, seen_slash = false, digit_after_slash = false;
        for (; i < text.size(); ++i) {
            char ch = text[i];
            if (std::isdigit(static_cast<unsigned char>(ch))) {
                (seen_slash ? digit_after_slash : seen_digit) = true;
            } else if (ch == '/' && !seen_slash && seen_digit) {
                seen_slash = true;
            } else {
                throw ParseError("bad rational: " + text);
            }
        }
        if (!seen_digit || (seen_slash && !digit_after_slash)) throw ParseError("bad rational: " + text);
        mpq_class v;
        if (v.set_str(text, 10) != 0) throw ParseError("bad rational: " + text);
        if (v.get_den() == 0) throw ParseError("zero denominator: " + text);
        v.canonicalize();
        return rational(v);
    }
    mpz_class v;
    if (v.set_str(text, 10) != 0 || text[0] == '-')
        throw ParseError("bad residue: " + text);
    if (v >= mpz_class(static_cast<unsigned long>(f.modulus())))
        throw ParseError("residue " + text + " out of range for " + f.to_string());
    return residue(f, v.get_ui());
}

std::string Scalar::to_string() const {
    if (field_.kind() == FieldKind::Rationals) return rat_.get_str();
    return std::to_string(res_);
}

bool Scalar::is_zero() const {
    return field_.kind() == FieldKind::Rationals ? rat_ == 0 : res_ == 0;
}

bool Scalar::is_one() const {
    return field_.kind() == FieldKind::Rationals ? rat_ == 1 : res_ == 1;
}

Scalar Scalar::operator-() const {
    Scalar s(field_);
    if (field_.kind() == FieldKind::Rationals) {
        s.rat_ = -rat_;
    } else {
        s.res_ = res_ == 0 ? 0 : field_.modulus() - res_;
    }
    return s;
}

Scalar operator+(const Scalar& x, const Scalar& y) {
    Scalar::require_same_field(x, y);
    Scalar s(x.field_);
    if (x.field_.kind() == FieldKind::Rationals) {
        s.rat_ = x.rat_ + y.rat_;
    } else {
        const u64 p = x.field_.modulus();
        u64 r = x.res_ + y.res_;
        s.res_ = r >= p ? r - p : r;
    }
    return s;
}

Scalar operator-(const Scalar& x, const Scalar& y) { return x + (-y); }

Scalar operator*(const Scalar& x, const Scalar& y) {
    Scalar::require_same_field(x, y);
    Scalar s(x.field_);
    if (x.field_.kind() == FieldKind::Rationals) {
        s.rat_ = x.rat_ * y.rat_;
    } else {
        s.res_ = mulmod(x.res_, y.res_, x.field_.modulus());
    }
    return s;
}

Scalar operator/(const Scalar& x, const Scalar& y) { return x * y.inv(); }

bool Scalar::operator==(const Scalar& y) const {
    require_same_field(*this, y);
    return field_.kind() == FieldKind::Rationals ? rat_ == y.rat_ : res_ == y.res_;
}

Scalar Scalar::inv() const {
    if (is_zero()) throw ZeroInverse("inverse of zero");
    Scalar s(field_);
    if (field_.kind() == FieldKind::Rationals) {
        s.rat_ = 1 / rat_;
    } else {
        s.res_ = powmod(res_, field_.modulus() - 2, field_.modulus());
    }
    return s;
}

Scalar Scalar::pow(long long n) const {
    if (n < 0) return inv().pow(-n);
    Scalar acc = Scalar::integer(field_, 1);
    Scalar base = *this;
    u64 e = static_cast<u64>(n);
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

const mpq_class& Scalar::rational_value() const {
    if (field_.kind() != FieldKind::Rationals) throw FieldMismatch("not a rational scalar");
    return rat_;
}

Scalar q_pochhammer(const Scalar& x, const Scalar& t, int n) {
    const Scalar one = Scalar::integer(x.field(), 1);
    Scalar acc = one;
    Scalar xt = x;
    for (int k = 0; k < n; ++k) {
        acc *= one - xt;
        xt *= t;
    }
    return acc;
}

namespace {

// Tonelli-Shanks with the non-residue found by linear search, so the result
// is deterministic for a given p.
bool prime_sqrt(u64 n, u64 p, u64& root) {
    if (n == 0) { root = 0; return true; }
    if (powmod(n, (p - 1) / 2, p) != 1) return false;
    if (p % 4 == 3) {
        root = powmod(n, (p + 1) / 4, p);
    } else {
        u64 q = p - 1;
        int s = 0;
        while ((q & 1) == 0) { q >>= 1; ++s; }
        u64 z = 2;
        while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
        u64 m = static_cast<u64>(s);
        u64 c = powmod(z, q, p);
        u64 t = powmod(n, q, p);
        u64 r = powmod(n, (q + 1) / 2, p);
        while (t != 1) {
            u64 i = 0, tt = t;
            while (tt != 1) { tt = mulmod(tt, tt, p); ++i; }
            u64 b = c;
            for (u64 k = 0; k + i + 1 < m; ++k) b = mulmod(b, b, p);
            m = i;
            c = mulmod(b, b, p);
            t = mulmod(t, c, p);
            r = mulmod(r, b, p);
        }
        root = r;
    }
    if (root > p - root) root = p - root;
    return true;
}

} // namespace

bool square_root(const Scalar& x, Scalar& root) {
    if (x.field().kind() == FieldKind::PrimeField) {
        u64 r = 0;
        if (!prime_sqrt(x.residue_value(), x.field().modulus(), r)) return false;
        root = Scalar::residue(x.field(), r);
        return true;
    }
    const mpq_class& v = x.rational_value();
    if (v < 0) return false;
    const mpz_class num = v.get_num(), den = v.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return false;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return false;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    root = Scalar::rational(mpq_class(rn, rd));
    return true;
}

} // namespace leonard
