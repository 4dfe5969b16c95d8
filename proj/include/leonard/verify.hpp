#pragma once

#include <string>
#include <vector>

#include "leonard/realize.hpp"

namespace leonard {

struct Check {
    std::string name;
    bool pass;
    std::string witness; // first failing entry or index, empty on pass
};

struct VerificationReport {
    std::vector<Check> checks;

    bool overall() const;
    void add(std::string name, bool pass, std::string witness = "");
    void append(const VerificationReport& other);
    const Check* first_failure() const;
};

// eigs pairwise distinct and rank(A - theta I) = dim - 1 for each theta
Check check_multiplicity_free(const ExactMatrix& a, const std::vector<Scalar>& eigs,
                              const std::string& label);

// Tridiagonal support conditions E_i A* E_j (and dually) for all i, j:
// exactly zero when |i-j| > 1, nonzero when |i-j| = 1.
VerificationReport check_leonard_system(const ExactMatrix& a, const std::vector<ExactMatrix>& e,
                                        const ExactMatrix& a_star,
                                        const std::vector<ExactMatrix>& e_star,
                                        const std::string& label);

// The three cyclic constituent systems (A,A*), (A*,A^eps), (A^eps,A).
VerificationReport check_leonard_triple_system(const LeonardRealization& r);

// Idempotent algebra for one family: E_i E_j = delta_ij E_i, sum E_i = I,
// sum theta_i E_i = A.
VerificationReport check_spectral_decomposition(const ExactMatrix& a,
                                                const std::vector<ExactMatrix>& e,
                                                const std::vector<Scalar>& eigs,
                                                const std::string& label);

// Both Askey-Wilson relation residuals vanish exactly.
VerificationReport check_askey_wilson(const ExactMatrix& a, const ExactMatrix& a_star,
                                      const AWCoefficients& c);

// The three Z3-symmetric relations.
VerificationReport check_z3_symmetric(const ExactMatrix& a, const ExactMatrix& a_star,
                                      const ExactMatrix& a_eps, const Z3Constants& z,
                                      const Scalar& q);

// The six cubic expressions that must each equal psi I.
VerificationReport check_psi_identities(const ExactMatrix& a, const ExactMatrix& a_star,
                                        const ExactMatrix& a_eps, const Z3Constants& z,
                                        const Scalar& q);

// Three-way agreement of the trace scalars: trace definition, sandwich
// identity, closed form; plus both trace-scalar routes to omega.
VerificationReport check_trace_scalars(const LeonardRealization& r, const ParameterArray& p);

// rho(A^eps, M) and rho(A*, M) against their exact bidiagonal targets, and
// the multiplicity-free criterion against the c^2 membership test.
VerificationReport check_transition_conjugation(const LeonardRealization& r, const ExactMatrix& m);

// Admissibility, construction, and every checker above; short-circuits with
// the failing conditions when the tuple is inadmissible.
VerificationReport full_verification(const QRacahTuple& t);

} // namespace leonard
