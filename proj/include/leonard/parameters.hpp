#pragma once

#include <string>
#include <utility>
#include <vector>

#include "leonard/scalar.hpp"

namespace leonard {

// Classification coordinate (a, b, c; q) with diameter d >= 3.
struct QRacahTuple {
    Scalar a, b, c, q;
    int d = 3;

    const Field& field() const { return a.field(); }
    std::string text() const; // "(a,b,c;q)"
    bool operator==(const QRacahTuple& o) const;
};

// Validates the structural invariants: one common field, d >= 3, and for a
// prime field, modulus > 2d + 2.
QRacahTuple make_tuple(Scalar a, Scalar b, Scalar c, Scalar q, int d);

struct ConditionCheck {
    std::string name;
    bool pass;
    std::string witness; // first violation, empty when pass
};

struct AdmissibilityReport {
    std::vector<ConditionCheck> conditions;
    bool admissible() const;
    const ConditionCheck* first_failure() const;
};

// RQRAC1..RQRAC4: nonzero entries, q^{2i} != 1 (1 <= i <= d), a^2 and b^2
// outside {q^{2d-2}, ..., q^{2-2d}}, and the four products abc, a^{-1}bc,
// ab^{-1}c, abc^{-1} outside {q^{d-1}, ..., q^{1-d}}.
AdmissibilityReport check_pair_admissible(const QRacahTuple& t);

// T-RQRAC1..T-RQRAC4: as above with c^2 added to the third condition.
AdmissibilityReport check_triple_admissible(const QRacahTuple& t);

// theta_i = x q^{2i-d} + x^{-1} q^{d-2i}, i = 0..d
std::vector<Scalar> eigen_sequence(const Scalar& x, const Scalar& q, int d);

// The three eigenvalue sequences of a Leonard triple system.
struct TripleEigenData {
    std::vector<Scalar> theta, theta_star, theta_eps;
};

struct ParameterArray {
    std::vector<Scalar> theta;      // theta_0..theta_d
    std::vector<Scalar> theta_star; // theta*_0..theta*_d
    std::vector<Scalar> varphi;     // varphi[i-1] holds the first split scalar varphi_i
    std::vector<Scalar> phi;        // phi[i-1] holds the second split scalar phi_i

    int diameter() const { return static_cast<int>(theta.size()) - 1; }
    const Field& field() const { return theta.at(0).field(); }
    bool operator==(const ParameterArray& o) const;
};

ParameterArray parameter_array(const QRacahTuple& t); // InadmissibleTuple

struct ArrayCheckReport {
    std::vector<ConditionCheck> conditions;
    bool valid() const;
    const ConditionCheck* first_failure() const;
};

// PA1 distinctness, PA2 nonvanishing, PA3/PA4 sum identities (direct sums and
// the geometric-series closed form must agree), PA5 common ratio equal to
// q^2 + 1 + q^{-2}.
ArrayCheckReport validate_parameter_array(const ParameterArray& p, const Scalar& q_hint);

// a = (q^d theta_1 - q^{d-2} theta_0) / (q^2 - q^{-2}); DegenerateQ when q^4 = 1
Scalar recover_a(const Scalar& theta0, const Scalar& theta1, const Scalar& q, int d);

// Both roots {c, c^{-1}} of x^2 - kappa x + 1 with
// kappa = a b^{-1} q^{d-1} + a^{-1} b q^{1-d} + phi_1 / ((q - q^{-1})(q^d - q^{-d})).
// NoRootInField when the discriminant has no square root in the field.
std::pair<Scalar, Scalar> recover_c(const Scalar& a, const Scalar& b, const Scalar& q, int d,
                                    const Scalar& phi1);

struct DerivedScalars {
    std::vector<Scalar> a_seq;      // a_0..a_d
    std::vector<Scalar> a_star_seq; // a*_0..a*_d
};

// Closed forms a_i = theta_i + varphi_i/(theta*_i - theta*_{i-1})
//                          + varphi_{i+1}/(theta*_i - theta*_{i+1}), etc.
DerivedScalars derived_scalars(const ParameterArray& p);

struct AWCoefficients {
    Scalar beta, gamma, gamma_star, varrho, varrho_star, omega, eta, eta_star;
    bool operator==(const AWCoefficients& o) const;
};

// Closed forms in (a,b,c;q), cross-checked against the eigenvalue-data route
// before returning.
AWCoefficients aw_coefficients(const QRacahTuple& t);

// Independent route: beta from the three-term ratio, gamma/varrho from the
// recurrences, omega/eta from the trace scalars (with theta_{-1}, theta_{d+1}
// extended by the recurrence). InvalidArray when the array admits no such
// coefficient sequence.
AWCoefficients aw_coefficients_from_array(const ParameterArray& p);

struct Z3Constants {
    Scalar alpha;      // (b+b^{-1})(c+c^{-1}) + (a+a^{-1})(q^{d+1}+q^{-d-1})
    Scalar alpha_star; // cyclic image
    Scalar alpha_eps;  // cyclic image
    Scalar psi;
    Scalar kappa;      // c + c^{-1}, computed through the quadratic for c
};

Z3Constants z3_constants(const QRacahTuple& t);

enum class Generator { Star, Eps, Harpoon, Down, DDown };

struct GroupWord {
    std::vector<Generator> letters;
};

QRacahTuple apply_generator(Generator g, const QRacahTuple& t);

// Left-to-right application. Requires triple admissibility unless the word
// stays inside the {Star, Down, DDown} subgroup, where pair admissibility
// is enough.
QRacahTuple apply_word(const GroupWord& w, const QRacahTuple& t);

// The eight tuples sharing one parameter array, canonically ordered.
std::vector<QRacahTuple> pair_equivalents(const QRacahTuple& t);

// The eight sign-inversion relatives (a^{±1}, b^{±1}, c^{±1}; q), canonically
// ordered; these share one isomorphism class of Leonard triples.
std::vector<QRacahTuple> triple_orbit(const QRacahTuple& t);

enum class TwinCase {
    Four, // no product of the four hits {-q^{d-1}, ..., -q^{1-d}}
    Two,
};

TwinCase twin_case(const QRacahTuple& t);

// Tuples whose Leonard triple systems share all three eigenvalue sequences
// with t; deduplicated and canonically ordered.
std::vector<QRacahTuple> twins(const QRacahTuple& t);

struct HatInvariant {
    Scalar a_hat, b_hat, c_hat, q;
    std::string text() const;
    bool operator==(const HatInvariant& o) const;
};

// (a+a^{-1}, b+b^{-1}, c+c^{-1}; q), a complete isomorphism invariant.
HatInvariant hat_invariant(const QRacahTuple& t);

// Parameter-array images of the dihedral relatives of a Leonard system.
ParameterArray array_dual(const ParameterArray& p); // swap theta/theta*, reverse phi
ParameterArray array_down(const ParameterArray& p); // reverse theta*, swap+reverse split pair
ParameterArray array_ddown(const ParameterArray& p); // reverse theta, swap split pair

// Canonical sort key and ordering used by every emitted listing.
void sort_canonical(std::vector<QRacahTuple>& tuples);

} // namespace leonard
