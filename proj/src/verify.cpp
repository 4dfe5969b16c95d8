#include "leonard/verify.hpp"

namespace leonard {

bool VerificationReport::overall() const {
    for (const Check& c : checks)
        if (!c.pass) return false;
    return true;
}

void VerificationReport::add(std::string name, bool pass, std::string witness) {
    checks.push_back({std::move(name), pass, std::move(witness)});
}

void VerificationReport::append(const VerificationReport& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

const Check* VerificationReport::first_failure() const {
    for (const Check& c : checks)
        if (!c.pass) return &c;
    return nullptr;
}

namespace {

std::string entry_witness(const ExactMatrix& residual) {
    const auto pos = residual.first_nonzero();
    if (!pos) return "";
    return "entry (" + std::to_string(pos->first) + "," + std::to_string(pos->second) + ")";
}

Check residual_check(const std::string& name, const ExactMatrix& residual) {
    const auto pos = residual.first_nonzero();
    if (!pos) return {name, true, ""};
    return {name, false, entry_witness(residual)};
}

} // namespace

Check check_multiplicity_free(const ExactMatrix& a, const std::vector<Scalar>& eigs,
                              const std::string& label) {
    const std::string name = "multiplicity_free(" + label + ")";
    const int n = a.dim();
    if (static_cast<int>(eigs.size()) != n)
        return {name, false, "expected " + std::to_string(n) + " eigenvalues"};
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (eigs[static_cast<std::size_t>(i)] == eigs[static_cast<std::size_t>(j)])
                return {name, false,
                        "eigenvalues " + std::to_string(i) + " and " + std::to_string(j) + " coincide"};
    const ExactMatrix id = ExactMatrix::identity(n, a.field());
    for (int i = 0; i < n; ++i) {
        if (rank(a - eigs[static_cast<std::size_t>(i)] * id) != n - 1)
            return {name, false, "rank defect at eigenvalue index " + std::to_string(i)};
    }
    return {name, true, ""};
}

VerificationReport check_leonard_system(const ExactMatrix& a, const std::vector<ExactMatrix>& e,
                                        const ExactMatrix& a_star,
                                        const std::vector<ExactMatrix>& e_star,
                                        const std::string& label) {
    VerificationReport rep;
    const int n = a.dim();
    auto support = [&](const std::vector<ExactMatrix>& idem, const ExactMatrix& mid,
                       const std::string& name) {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                const int gap = i > j ? i - j : j - i;
                if (gap == 0) continue;
                const ExactMatrix prod = idem[static_cast<std::size_t>(i)] * mid * idem[static_cast<std::size_t>(j)];
                if (gap > 1 && !prod.is_zero()) {
                    rep.add(name, false,
                            "nonzero product at (i,j) = (" + std::to_string(i) + "," + std::to_string(j) + ")");
                    return;
                }
                if (gap == 1 && prod.is_zero()) {
                    rep.add(name, false,
                            "vanishing product at (i,j) = (" + std::to_string(i) + "," + std::to_string(j) + ")");
                    return;
                }
            }
        }
        rep.add(name, true);
    };
    support(e, a_star, "support(" + label + ": E.A*.E)");
    support(e_star, a, "support(" + label + ": E*.A.E*)");
    return rep;
}

VerificationReport check_leonard_triple_system(const LeonardRealization& r) {
    VerificationReport rep;
    rep.checks.push_back(check_multiplicity_free(r.A, r.eig.theta, "A"));
    rep.checks.push_back(check_multiplicity_free(r.A_star, r.eig.theta_star, "A*"));
    rep.checks.push_back(check_multiplicity_free(r.A_eps, r.eig.theta_eps, "Aeps"));
    if (!rep.overall()) return rep;
    rep.append(check_leonard_system(r.A, r.E, r.A_star, r.E_star, "A,A*"));
    rep.append(check_leonard_system(r.A_star, r.E_star, r.A_eps, r.E_eps, "A*,Aeps"));
    rep.append(check_leonard_system(r.A_eps, r.E_eps, r.A, r.E, "Aeps,A"));
    return rep;
}

VerificationReport check_spectral_decomposition(const ExactMatrix& a,
                                                const std::vector<ExactMatrix>& e,
                                                const std::vector<Scalar>& eigs,
                                                const std::string& label) {
    VerificationReport rep;
    const int n = a.dim();
    const std::string prefix = "spectral(" + label + ")";
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const ExactMatrix prod = e[static_cast<std::size_t>(i)] * e[static_cast<std::size_t>(j)];
            const ExactMatrix expected = i == j ? e[static_cast<std::size_t>(i)] : ExactMatrix(n, a.field());
            if (prod != expected) {
                rep.add(prefix, false,
                        "E_" + std::to_string(i) + " E_" + std::to_string(j) + " wrong, " +
                            entry_witness(prod - expected));
                return rep;
            }
        }
    }
    ExactMatrix sum(n, a.field());
    ExactMatrix weighted(n, a.field());
    for (int i = 0; i < n; ++i) {
        sum += e[static_cast<std::size_t>(i)];
        weighted += eigs[static_cast<std::size_t>(i)] * e[static_cast<std::size_t>(i)];
    }
    if (sum != ExactMatrix::identity(n, a.field())) {
        rep.add(prefix, false, "sum of idempotents is not I, " + entry_witness(sum - ExactMatrix::identity(n, a.field())));
        return rep;
    }
    if (weighted != a) {
        rep.add(prefix, false, "weighted idempotent sum differs from the operator, " + entry_witness(weighted - a));
        return rep;
    }
    rep.add(prefix, true);
    return rep;
}

VerificationReport check_askey_wilson(const ExactMatrix& a, const ExactMatrix& a_star,
                                      const AWCoefficients& c) {
    VerificationReport rep;
    const int n = a.dim();
    if (n < 4) { // the coefficient sequence is only unique from dimension 4 on
        rep.add("askey_wilson_dimension", false, "dimension " + std::to_string(n) + " < 4");
        return rep;
    }
    const ExactMatrix id = ExactMatrix::identity(n, a.field());
    const ExactMatrix a2 = a * a, as2 = a_star * a_star;
    const ExactMatrix r1 = a2 * a_star - c.beta * (a * a_star * a) + a_star * a2 -
                           c.gamma * (a * a_star + a_star * a) - c.varrho * a_star -
                           c.gamma_star * a2 - c.omega * a - c.eta * id;
    rep.checks.push_back(residual_check("askey_wilson_1", r1));
    const ExactMatrix r2 = as2 * a - c.beta * (a_star * a * a_star) + a * as2 -
                           c.gamma_star * (a_star * a + a * a_star) - c.varrho_star * a -
                           c.gamma * as2 - c.omega * a_star - c.eta_star * id;
    rep.checks.push_back(residual_check("askey_wilson_2", r2));
    return rep;
}

VerificationReport check_z3_symmetric(const ExactMatrix& a, const ExactMatrix& a_star,
                                      const ExactMatrix& a_eps, const Z3Constants& z,
                                      const Scalar& q) {
    VerificationReport rep;
    const int n = a.dim();
    const ExactMatrix id = ExactMatrix::identity(n, a.field());
    const Scalar denom = (q.pow(2) - q.pow(-2)).inv();
    const Scalar norm = (q + q.inv()).inv();
    const ExactMatrix r1 =
        denom * (q * (a_star * a_eps) - q.inv() * (a_eps * a_star)) + a - (z.alpha * norm) * id;
    const ExactMatrix r2 =
        denom * (q * (a_eps * a) - q.inv() * (a * a_eps)) + a_star - (z.alpha_star * norm) * id;
    const ExactMatrix r3 =
        denom * (q * (a * a_star) - q.inv() * (a_star * a)) + a_eps - (z.alpha_eps * norm) * id;
    rep.checks.push_back(residual_check("z3_relation_A", r1));
    rep.checks.push_back(residual_check("z3_relation_A*", r2));
    rep.checks.push_back(residual_check("z3_relation_Aeps", r3));
    return rep;
}

VerificationReport check_psi_identities(const ExactMatrix& a, const ExactMatrix& a_star,
                                        const ExactMatrix& a_eps, const Z3Constants& z,
                                        const Scalar& q) {
    VerificationReport rep;
    const int n = a.dim();
    const ExactMatrix id = ExactMatrix::identity(n, a.field());
    const Scalar qi = q.inv();
    const Scalar q2 = q.pow(2), qm2 = q.pow(-2);
    const ExactMatrix a2 = a * a, as2 = a_star * a_star, ae2 = a_eps * a_eps;
    const ExactMatrix target = z.psi * id;

    const ExactMatrix forms[6] = {
        q * (a * a_star * a_eps) + q2 * a2 + qm2 * as2 + q2 * ae2 - (q * z.alpha) * a -
            (qi * z.alpha_star) * a_star - (q * z.alpha_eps) * a_eps,
        q * (a_eps * a * a_star) + q2 * ae2 + qm2 * a2 + q2 * as2 - (q * z.alpha_eps) * a_eps -
            (qi * z.alpha) * a - (q * z.alpha_star) * a_star,
        q * (a_star * a_eps * a) + q2 * as2 + qm2 * ae2 + q2 * a2 - (q * z.alpha_star) * a_star -
            (qi * z.alpha_eps) * a_eps - (q * z.alpha) * a,
        qi * (a_star * a * a_eps) + qm2 * as2 + q2 * a2 + qm2 * ae2 - (qi * z.alpha_star) * a_star -
            (q * z.alpha) * a - (qi * z.alpha_eps) * a_eps,
        qi * (a_eps * a_star * a) + qm2 * ae2 + q2 * as2 + qm2 * a2 - (qi * z.alpha_eps) * a_eps -
            (q * z.alpha_star) * a_star - (qi * z.alpha) * a,
        qi * (a * a_eps * a_star) + qm2 * a2 + q2 * ae2 + qm2 * as2 - (qi * z.alpha) * a -
            (q * z.alpha_eps) * a_eps - (qi * z.alpha_star) * a_star,
    };
    for (int k = 0; k < 6; ++k)
        rep.checks.push_back(residual_check("psi_identity_" + std::to_string(k + 1), forms[k] - target));
    return rep;
}

VerificationReport check_trace_scalars(const LeonardRealization& r, const ParameterArray& p) {
    VerificationReport rep;
    const int n = r.A.dim();
    const DerivedScalars ds = derived_scalars(p);

    auto three_way = [&](const ExactMatrix& op, const std::vector<ExactMatrix>& idem,
                         const std::vector<Scalar>& closed, const std::string& name) {
        for (int i = 0; i < n; ++i) {
            const ExactMatrix& e = idem[static_cast<std::size_t>(i)];
            const Scalar traced = (op * e).trace();
            if (traced != closed[static_cast<std::size_t>(i)]) {
                rep.add(name, false, "closed form differs from trace at i = " + std::to_string(i));
                return;
            }
            const ExactMatrix sandwich = e * op * e - traced * e;
            if (!sandwich.is_zero()) {
                rep.add(name, false, "sandwich identity fails at i = " + std::to_string(i) + ", " +
                                         entry_witness(sandwich));
                return;
            }
        }
        rep.add(name, true);
    };
    three_way(r.A, r.E_star, ds.a_seq, "trace_scalars(a_i)");
    three_way(r.A_star, r.E, ds.a_star_seq, "trace_scalars(a*_i)");

    // both trace-scalar routes to omega against the closed form
    try {
        const AWCoefficients via_array = aw_coefficients_from_array(p);
        const AWCoefficients closed = aw_coefficients(r.tuple);
        rep.add("omega_consistency", via_array.omega == closed.omega,
                via_array.omega == closed.omega ? "" : "trace-scalar omega differs from closed form");
    } catch (const Error& e) {
        rep.add("omega_consistency", false, e.what());
    }
    return rep;
}

VerificationReport check_transition_conjugation(const LeonardRealization& r, const ExactMatrix& m) {
    VerificationReport rep;
    const QRacahTuple& t = r.tuple;
    const int n = r.A.dim();
    const Field f = t.field();

    ExactMatrix eps_target(n, f);
    const Scalar one = Scalar::integer(f, 1);
    for (int i = 0; i < n; ++i) eps_target.at(i, i) = r.eig.theta_eps[static_cast<std::size_t>(i)];
    for (int i = 1; i < n; ++i) eps_target.at(i, i - 1) = one;
    rep.checks.push_back(residual_check("rho(Aeps) split form", rho(r.A_eps, m) - eps_target));

    const std::vector<Scalar> phi_eps = varphi_eps(t);
    ExactMatrix star_target(n, f);
    for (int i = 0; i < n; ++i) star_target.at(i, i) = r.eig.theta_star[static_cast<std::size_t>(i)];
    for (int i = 1; i < n; ++i) star_target.at(i - 1, i) = phi_eps[static_cast<std::size_t>(i - 1)];
    rep.checks.push_back(residual_check("rho(A*) split form", rho(r.A_star, m) - star_target));

    // the superdiagonal is the first split sequence of the cycled tuple
    const QRacahTuple cycled{t.b, t.c, t.a, t.q, t.d};
    rep.add("varphi_eps_cycled_tuple", parameter_array(cycled).varphi == phi_eps,
            parameter_array(cycled).varphi == phi_eps ? "" : "superdiagonal differs from cycled tuple");

    // multiplicity-free criterion vs the c^2 membership test
    bool c2_clear = true;
    for (int k = t.d - 1; k >= 1 - t.d && c2_clear; --k)
        if (t.c * t.c == t.q.pow(2 * k)) c2_clear = false;
    const bool mf = check_multiplicity_free(r.A_eps, r.eig.theta_eps, "Aeps").pass;
    rep.add("mf_criterion", mf == c2_clear, mf == c2_clear ? "" : "criterion and rank test disagree");
    return rep;
}

VerificationReport full_verification(const QRacahTuple& t) {
    VerificationReport rep;
    const AdmissibilityReport pair = check_pair_admissible(t);
    for (const ConditionCheck& c : pair.conditions) rep.add(c.name, c.pass, c.witness);
    if (!pair.admissible()) return rep;
    const AdmissibilityReport triple = check_triple_admissible(t);
    for (const ConditionCheck& c : triple.conditions) rep.add(c.name, c.pass, c.witness);
    if (!triple.admissible()) return rep;

    const ParameterArray p = parameter_array(t);
    const ArrayCheckReport arr = validate_parameter_array(p, t.q);
    for (const ConditionCheck& c : arr.conditions) rep.add(c.name, c.pass, c.witness);
    if (!arr.valid()) return rep;

    const LeonardRealization r = build_triple(t);

    rep.checks.push_back(residual_check("a_epsilon_closed_form", r.A_eps - a_epsilon_closed_form(t)));

    rep.append(check_spectral_decomposition(r.A, r.E, r.eig.theta, "A"));
    rep.append(check_spectral_decomposition(r.A_star, r.E_star, r.eig.theta_star, "A*"));
    rep.append(check_spectral_decomposition(r.A_eps, r.E_eps, r.eig.theta_eps, "Aeps"));

    rep.append(check_leonard_triple_system(r));

    const AWCoefficients aw = aw_coefficients(t);
    rep.add("aw_route_agreement", aw == aw_coefficients_from_array(p));
    rep.append(check_askey_wilson(r.A, r.A_star, aw));

    const Z3Constants z = z3_constants(t);
    rep.add("kappa_quadratic", z.kappa == t.c + t.c.inv(),
            z.kappa == t.c + t.c.inv() ? "" : "kappa differs from c + c^-1");
    rep.append(check_z3_symmetric(r.A, r.A_star, r.A_eps, z, t.q));
    rep.append(check_psi_identities(r.A, r.A_star, r.A_eps, z, t.q));
    rep.append(check_trace_scalars(r, p));

    const ExactMatrix m = transition_matrix(t);
    rep.checks.push_back(
        residual_check("transition_matrix_recurrence", m - transition_matrix_by_recurrence(t)));
    rep.append(check_transition_conjugation(r, m));
    return rep;
}

} // namespace leonard
