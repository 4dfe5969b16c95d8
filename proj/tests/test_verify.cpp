#include <doctest.h>

#include "support.hpp"

using namespace leonard;
using testsupport::Q;
using testsupport::reference_tuple;

TEST_CASE("multiplicity-free checker") {
    const Field f = Field::rationals();
    const std::vector<Scalar> eigs{Q("1"), Q("2"), Q("3"), Q("4")};
    CHECK(check_multiplicity_free(ExactMatrix::diagonal(eigs), eigs, "diag").pass);

    // the collision case c = q
    const QRacahTuple bad = make_tuple(Q("3"), Q("5"), Q("2"), Q("2"), 3);
    const ParameterArray p = parameter_array(bad);
    const auto [a, a_star] = split_pair(p);
    const ExactMatrix eps = build_a_epsilon(a, a_star, bad);
    const Check c = check_multiplicity_free(eps, eigen_sequence(bad.c, bad.q, bad.d), "Aeps");
    CHECK_FALSE(c.pass);
    CHECK(c.witness == "eigenvalues 0 and 2 coincide");
}

TEST_CASE("Leonard system checker") {
    const QRacahTuple t = reference_tuple();
    const LeonardRealization r = build_triple(t);
    CHECK(check_leonard_system(r.A, r.E, r.A_star, r.E_star, "A,A*").overall());

    SUBCASE("reversing an idempotent ordering still passes") {
        std::vector<ExactMatrix> rev(r.E_star.rbegin(), r.E_star.rend());
        CHECK(check_leonard_system(r.A, r.E, r.A_star, rev, "A,A*rev").overall());
    }
    SUBCASE("a diagonal stand-in for A* fails on an adjacent pair") {
        const ExactMatrix d = ExactMatrix::diagonal({Q("1"), Q("2"), Q("3"), Q("4")});
        const auto d_idem = primitive_idempotents(d, {Q("1"), Q("2"), Q("3"), Q("4")});
        const VerificationReport rep = check_leonard_system(r.A, r.E, d, d_idem, "A,D");
        CHECK_FALSE(rep.overall());
        CHECK(rep.first_failure()->witness.find("(i,j)") != std::string::npos);
    }
}

TEST_CASE("Leonard triple system checker") {
    const QRacahTuple t = reference_tuple();
    const LeonardRealization r = build_triple(t);
    CHECK(check_leonard_triple_system(r).overall());

    SUBCASE("reversal of the third ordering is still a system") {
        LeonardRealization flipped = r;
        flipped.E_eps.assign(r.E_eps.rbegin(), r.E_eps.rend());
        flipped.eig.theta_eps.assign(r.eig.theta_eps.rbegin(), r.eig.theta_eps.rend());
        CHECK(check_leonard_triple_system(flipped).overall());
    }
}

TEST_CASE("Askey-Wilson checker") {
    const QRacahTuple t = reference_tuple();
    const LeonardRealization r = build_triple(t);
    AWCoefficients aw = aw_coefficients(t);
    CHECK(check_askey_wilson(r.A, r.A_star, aw).overall());

    SUBCASE("perturbing omega fails both relations") {
        aw.omega += Q("1");
        const VerificationReport rep = check_askey_wilson(r.A, r.A_star, aw);
        CHECK_FALSE(rep.overall());
        // z3 and psi identities are untouched by the mutation
        const Z3Constants z = z3_constants(t);
        CHECK(check_z3_symmetric(r.A, r.A_star, r.A_eps, z, t.q).overall());
        CHECK(check_psi_identities(r.A, r.A_star, r.A_eps, z, t.q).overall());
    }
}

TEST_CASE("Z3-symmetric checker") {
    const QRacahTuple t = reference_tuple();
    const LeonardRealization r = build_triple(t);
    const Z3Constants z = z3_constants(t);
    CHECK(check_z3_symmetric(r.A, r.A_star, r.A_eps, z, t.q).overall());

    SUBCASE("cyclic shift of the triple and its constants") {
        const Z3Constants shifted{z.alpha_star, z.alpha_eps, z.alpha, z.psi, z.kappa};
        CHECK(check_z3_symmetric(r.A_star, r.A_eps, r.A, shifted, t.q).overall());
    }
    SUBCASE("translating the extension fails the defining relation") {
        const ExactMatrix shifted = r.A_eps + ExactMatrix::identity(t.d + 1, t.field());
        const VerificationReport rep = check_z3_symmetric(r.A, r.A_star, shifted, z, t.q);
        bool third_failed = false;
        for (const Check& c : rep.checks)
            if (c.name == "z3_relation_Aeps" && !c.pass) third_failed = true;
        CHECK(third_failed);
    }
    SUBCASE("constants of a foreign tuple are rejected") {
        const QRacahTuple other = make_tuple(Q("3"), Q("5"), Q("9"), Q("2"), 3);
        REQUIRE(check_triple_admissible(other).admissible());
        CHECK_FALSE(check_z3_symmetric(r.A, r.A_star, r.A_eps, z3_constants(other), t.q).overall());
    }
    SUBCASE("constants of an orbit member coincide and pass") {
        const QRacahTuple member = make_tuple(t.a.inv(), t.b, t.c.inv(), t.q, t.d);
        CHECK(check_z3_symmetric(r.A, r.A_star, r.A_eps, z3_constants(member), t.q).overall());
    }
}

TEST_CASE("psi identities") {
    const QRacahTuple t = reference_tuple();
    const LeonardRealization r = build_triple(t);
    const Z3Constants z = z3_constants(t);
    const VerificationReport rep = check_psi_identities(r.A, r.A_star, r.A_eps, z, t.q);
    CHECK(rep.overall());
    CHECK(rep.checks.size() == 6);

    SUBCASE("a wrong psi fails all six and nothing else") {
        Z3Constants mutated = z;
        mutated.psi += Q("1");
        const VerificationReport bad = check_psi_identities(r.A, r.A_star, r.A_eps, mutated, t.q);
        for (const Check& c : bad.checks) CHECK_FALSE(c.pass);
        CHECK(check_z3_symmetric(r.A, r.A_star, r.A_eps, mutated, t.q).overall());
    }
}

TEST_CASE("trace scalar checker") {
    const QRacahTuple t = reference_tuple();
    const LeonardRealization r = build_triple(t);
    const ParameterArray p = parameter_array(t);
    CHECK(check_trace_scalars(r, p).overall());

    SUBCASE("the sandwich residual is exactly zero") {
        const DerivedScalars ds = derived_scalars(p);
        for (int i = 0; i <= t.d; ++i) {
            const ExactMatrix& e = r.E_star[static_cast<std::size_t>(i)];
            CHECK((e * r.A * e - ds.a_seq[static_cast<std::size_t>(i)] * e).is_zero());
        }
    }
    SUBCASE("swapping two idempotents breaks only the support conditions") {
        LeonardRealization mutated = r;
        std::swap(mutated.E_star[0], mutated.E_star[2]);
        CHECK_FALSE(check_leonard_triple_system(mutated).overall());
        const AWCoefficients aw = aw_coefficients(t);
        CHECK(check_askey_wilson(mutated.A, mutated.A_star, aw).overall());
    }
}

TEST_CASE("transition conjugation checker") {
    const QRacahTuple t = reference_tuple();
    const LeonardRealization r = build_triple(t);
    const ExactMatrix m = transition_matrix(t);
    CHECK(check_transition_conjugation(r, m).overall());
}

TEST_CASE("multiplicity-free criterion on the boundary") {
    // c = q: the c^2 membership test and the rank test must agree on failure
    const QRacahTuple bad = make_tuple(Q("3"), Q("5"), Q("2"), Q("2"), 3);
    const ParameterArray p = parameter_array(bad);
    const auto [a, a_star] = split_pair(p);
    const ExactMatrix eps = build_a_epsilon(a, a_star, bad);
    const auto theta_eps = eigen_sequence(bad.c, bad.q, bad.d);

    bool in_band = false;
    for (int k = bad.d - 1; k >= 1 - bad.d; --k)
        if (bad.c * bad.c == bad.q.pow(2 * k)) in_band = true;
    CHECK(in_band);
    CHECK_FALSE(check_multiplicity_free(eps, theta_eps, "Aeps").pass);
    CHECK_THROWS_AS(primitive_idempotents(eps, theta_eps), NotMultiplicityFree);
}

TEST_CASE("full verification") {
    SUBCASE("reference tuple passes everything") {
        const VerificationReport rep = full_verification(reference_tuple());
        CHECK(rep.overall());
        CHECK(rep.checks.size() > 25);
    }
    SUBCASE("triple-inadmissible tuple short-circuits with a witness") {
        const VerificationReport rep = full_verification(make_tuple(Q("3"), Q("5"), Q("2"), Q("2"), 3));
        CHECK_FALSE(rep.overall());
        REQUIRE(rep.first_failure() != nullptr);
        CHECK(rep.first_failure()->name == "T-RQRAC3");
        CHECK(rep.first_failure()->witness == "c^2 = q^2");
    }
    SUBCASE("q = 1 fails the root-of-unity condition") {
        const VerificationReport rep = full_verification(make_tuple(Q("3"), Q("5"), Q("7"), Q("1"), 3));
        CHECK_FALSE(rep.overall());
        CHECK(rep.first_failure()->name == "RQRAC2");
    }
    SUBCASE("prime field tuples pass") {
        testsupport::Rng rng(71);
        const Field f = Field::prime_field(1009);
        CHECK(full_verification(rng.admissible_gf_tuple(f, 5)).overall());
    }
    SUBCASE("negative-q twin of the reference tuple passes") {
        const QRacahTuple t = make_tuple(Q("-3"), Q("-5"), Q("-7"), Q("-2"), 3);
        CHECK(full_verification(t).overall());
    }
    SUBCASE("q of multiplicative order eight is admissible at d = 3") {
        // q^4 = -1 is allowed when d = 3; ord(9) = 8 in GF(17)
        const Field f = Field::prime_field(17);
        const Scalar q = Scalar::residue(f, 9);
        REQUIRE(q.pow(4) == -Scalar::integer(f, 1));
        bool found = false;
        for (std::uint64_t a = 2; a < 17 && !found; ++a) {
            for (std::uint64_t b = 2; b < 17 && !found; ++b) {
                for (std::uint64_t c = 2; c < 17 && !found; ++c) {
                    const QRacahTuple t = make_tuple(Scalar::residue(f, a), Scalar::residue(f, b),
                                                     Scalar::residue(f, c), q, 3);
                    if (!check_triple_admissible(t).admissible()) continue;
                    found = true;
                    CHECK(full_verification(t).overall());
                    const LeonardRealization r = build_triple(t);
                    const NTCoefficients nt = nt_decompose(r.A_eps, r.A, r.A_star);
                    CHECK(nt.f.is_zero());
                    CHECK(nt.f_star.is_zero());
                    CHECK(nt.g / nt.g_star == -t.q.pow(2));
                }
            }
        }
        CHECK(found);
    }
}
