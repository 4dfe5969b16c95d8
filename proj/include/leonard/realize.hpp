#pragma once

#include <utility>
#include <vector>

#include "leonard/matrix.hpp"
#include "leonard/parameters.hpp"

namespace leonard {

// Canonical split-gauge realization: A lower bidiagonal with unit subdiagonal,
// A* upper bidiagonal, A^eps the tridiagonal extension.
struct LeonardRealization {
    QRacahTuple tuple;
    ExactMatrix A, A_star, A_eps;
    std::vector<ExactMatrix> E, E_star, E_eps;
    TripleEigenData eig;
};

// A with diagonal theta and unit subdiagonal; A* with diagonal theta* and
// superdiagonal varphi.
std::pair<ExactMatrix, ExactMatrix> split_pair(const ParameterArray& p);

// A^eps = (q^{-1} A* A - q A A*) / (q^2 - q^{-2}) + alpha^eps / (q + q^{-1}) I
ExactMatrix build_a_epsilon(const ExactMatrix& a, const ExactMatrix& a_star, const QRacahTuple& t);

// The same matrix from its irreducible-tridiagonal entry formulas.
ExactMatrix a_epsilon_closed_form(const QRacahTuple& t);

// Upper triangular change-of-basis matrix M built from the q-Pochhammer
// entry formula; invertible for every triple-admissible tuple.
ExactMatrix transition_matrix(const QRacahTuple& t);

// Independent construction: diagonal seed plus the one-row-up recurrence.
ExactMatrix transition_matrix_by_recurrence(const QRacahTuple& t);

// M^{-1} X M
ExactMatrix rho(const ExactMatrix& x, const ExactMatrix& m);

// Superdiagonal of rho(A*, M); equals the first split sequence of (b,c,a;q).
std::vector<Scalar> varphi_eps(const QRacahTuple& t);

struct NTCoefficients {
    Scalar e, f, f_star, g, g_star;
};

// Unique coordinates of X in span{I, A, A*, AA*, A*A}. NotInSpan when the
// exact residual is nonzero, DependentBasis when the five matrices are
// dependent (d < 2).
NTCoefficients nt_decompose(const ExactMatrix& x, const ExactMatrix& a, const ExactMatrix& a_star);

// Invertible D with D A^T = A D and D A*^T = A* D, normalized so the first
// nonzero entry in row-major order is 1. The solution space must be exactly
// one-dimensional (NoSymmetrizer / NonUnique otherwise).
ExactMatrix symmetrizer(const ExactMatrix& a, const ExactMatrix& a_star);

// Full realization bundle for a triple-admissible tuple, with all three
// idempotent families.
LeonardRealization build_triple(const QRacahTuple& t);

// Change of basis S with columns v, (A - theta_0 I)v, ... where v spans
// E*_0 V; conjugation by S brings (A, A*) to split form. DegenerateBasis
// when the columns are dependent.
ExactMatrix split_basis_from_pair(const ExactMatrix& a, const ExactMatrix& a_star,
                                  const std::vector<Scalar>& theta,
                                  const std::vector<Scalar>& theta_star);

} // namespace leonard
