#include <doctest.h>

#include "support.hpp"

using namespace leonard;
using testsupport::Q;
using testsupport::reference_tuple;

TEST_CASE("split pair shapes and entries") {
    const QRacahTuple t = reference_tuple();
    const ParameterArray p = parameter_array(t);
    const auto [a, a_star] = split_pair(p);
    CHECK(shape_classify(a) == MatrixShape::LowerBidiagonal);
    CHECK(shape_classify(a_star) == MatrixShape::UpperBidiagonal);
    for (int i = 0; i <= t.d; ++i) {
        CHECK(a.at(i, i) == p.theta[static_cast<std::size_t>(i)]);
        CHECK(a_star.at(i, i) == p.theta_star[static_cast<std::size_t>(i)]);
    }
    for (int i = 1; i <= t.d; ++i) {
        CHECK(a.at(i, i - 1) == Q("1"));
        CHECK(a_star.at(i - 1, i) == p.varphi[static_cast<std::size_t>(i - 1)]);
    }
    // rank(A - theta_0 I) = d: geometric multiplicity one
    CHECK(rank(a - p.theta[0] * ExactMatrix::identity(t.d + 1, t.field())) == t.d);
}

TEST_CASE("the tridiagonal extension") {
    const QRacahTuple t = reference_tuple();
    const ParameterArray p = parameter_array(t);
    const auto [a, a_star] = split_pair(p);
    const ExactMatrix eps = build_a_epsilon(a, a_star, t);

    CHECK(eps == a_epsilon_closed_form(t));
    CHECK(shape_classify(eps) == MatrixShape::IrreducibleTridiagonal);
    for (int i = 1; i <= t.d; ++i)
        CHECK(eps.at(i, i - 1) == -t.b.inv() * t.q.pow(t.d - 2 * i + 1));

    SUBCASE("entries in terms of the parameter array") {
        const Scalar denom = t.q.pow(2) - t.q.pow(-2);
        const Scalar norm = t.q + t.q.inv();
        const Scalar alpha_eps = z3_constants(t).alpha_eps;
        auto varphi_at = [&](int i) { // varphi_0 = varphi_{d+1} = 0
            return (i >= 1 && i <= t.d) ? p.varphi[static_cast<std::size_t>(i - 1)]
                                        : Scalar(t.field());
        };
        for (int i = 1; i <= t.d; ++i) {
            CHECK(eps.at(i, i - 1) ==
                  (t.q.inv() * p.theta_star[static_cast<std::size_t>(i)] -
                   t.q * p.theta_star[static_cast<std::size_t>(i - 1)]) /
                      denom);
            CHECK(eps.at(i - 1, i) ==
                  varphi_at(i) *
                      (t.q.inv() * p.theta[static_cast<std::size_t>(i)] -
                       t.q * p.theta[static_cast<std::size_t>(i - 1)]) /
                      denom);
        }
        for (int i = 0; i <= t.d; ++i) {
            CHECK(eps.at(i, i) ==
                  alpha_eps / norm -
                      p.theta[static_cast<std::size_t>(i)] *
                          p.theta_star[static_cast<std::size_t>(i)] / norm -
                      (t.q * varphi_at(i) - t.q.inv() * varphi_at(i + 1)) / denom);
        }
    }

    SUBCASE("the Z3-symmetric relations hold") {
        const VerificationReport rep = check_z3_symmetric(a, a_star, eps, z3_constants(t), t.q);
        CHECK(rep.overall());
    }
    SUBCASE("a triple-inadmissible c collides the extension spectrum") {
        const QRacahTuple bad = make_tuple(Q("3"), Q("5"), Q("2"), Q("2"), 3);
        const auto theta_eps = eigen_sequence(bad.c, bad.q, bad.d);
        CHECK(theta_eps[0] == Q("17/4"));
        CHECK(theta_eps[2] == Q("17/4"));
    }
}

TEST_CASE("transition matrix") {
    const QRacahTuple t = reference_tuple();
    const ExactMatrix m = transition_matrix(t);
    CHECK(m.at(0, 0) == Q("1"));
    CHECK(m.at(t.d, t.d) == Scalar::integer(t.field(), t.d % 2 == 0 ? 1 : -1) * t.b.inv().pow(t.d));
    CHECK(m == transition_matrix_by_recurrence(t));

    SUBCASE("all four recurrences hold on the direct construction") {
        const Scalar abc = t.a * t.b * t.c;
        for (int j = 1; j <= t.d; ++j) {
            for (int i = 1; i <= j; ++i) {
                // one row up
                const Scalar up = t.a.inv() * t.q.pow(i + j - t.d - 1) *
                                  (t.q.pow(i) - t.q.pow(-i)) *
                                  (t.q.pow(t.d - i + 1) - t.q.pow(i - t.d - 1)) *
                                  (abc - t.q.pow(t.d - 2 * i + 1)) /
                                  (t.q.pow(i - j - 1) - t.q.pow(j - i + 1));
                CHECK(m.at(i - 1, j) == up * m.at(i, j));
            }
            for (int i = 0; i < j; ++i) {
                // one row down
                const Scalar down = t.a * t.q.pow(t.d - i - j) * (t.q.pow(i - j) - t.q.pow(j - i)) /
                                    ((t.q.pow(i + 1) - t.q.pow(-i - 1)) *
                                     (t.q.pow(t.d - i) - t.q.pow(i - t.d)) *
                                     (abc - t.q.pow(t.d - 2 * i - 1)));
                CHECK(m.at(i + 1, j) == down * m.at(i, j));
            }
            for (int i = 0; i <= j && j < t.d; ++i) {
                // one column right
                const Scalar right = t.a.inv() * t.b.inv() * t.q.pow(j - i) *
                                     (t.q.pow(j + 1) - t.q.pow(-j - 1)) *
                                     (t.q.pow(t.d - j) - t.q.pow(j - t.d)) *
                                     (abc - t.q.pow(t.d - 2 * j - 1)) /
                                     (t.q.pow(j - i + 1) - t.q.pow(i - j - 1));
                CHECK(m.at(i, j + 1) == right * m.at(i, j));
            }
            for (int i = 0; i < j; ++i) {
                // one column left
                const Scalar left = t.a * t.b * t.q.pow(i - j + 1) *
                                    (t.q.pow(j - i) - t.q.pow(i - j)) /
                                    ((t.q.pow(j) - t.q.pow(-j)) *
                                     (t.q.pow(t.d - j + 1) - t.q.pow(j - t.d - 1)) *
                                     (abc - t.q.pow(t.d - 2 * j + 1)));
                CHECK(m.at(i, j - 1) == left * m.at(i, j));
            }
        }
    }
    SUBCASE("recurrence agreement over GF(1009)") {
        testsupport::Rng rng(19);
        const Field f = Field::prime_field(1009);
        for (int k = 0; k < 3; ++k) {
            const QRacahTuple u = rng.admissible_gf_tuple(f, 3 + static_cast<int>(rng.between(0, 3)));
            CHECK(transition_matrix(u) == transition_matrix_by_recurrence(u));
        }
    }
}

TEST_CASE("conjugation by the transition matrix") {
    const QRacahTuple t = reference_tuple();
    const LeonardRealization r = build_triple(t);
    const ExactMatrix m = transition_matrix(t);

    const ExactMatrix eps_rho = rho(r.A_eps, m);
    CHECK(shape_classify(eps_rho) == MatrixShape::LowerBidiagonal);
    for (int i = 0; i <= t.d; ++i)
        CHECK(eps_rho.at(i, i) == r.eig.theta_eps[static_cast<std::size_t>(i)]);
    for (int i = 1; i <= t.d; ++i) CHECK(eps_rho.at(i, i - 1) == Q("1"));

    const ExactMatrix star_rho = rho(r.A_star, m);
    CHECK(shape_classify(star_rho) == MatrixShape::UpperBidiagonal);
    const std::vector<Scalar> phi_eps = varphi_eps(t);
    for (int i = 1; i <= t.d; ++i)
        CHECK(star_rho.at(i - 1, i) == phi_eps[static_cast<std::size_t>(i - 1)]);

    // the superdiagonal is the first split sequence of the cycled tuple
    const QRacahTuple cycled = make_tuple(t.b, t.c, t.a, t.q, t.d);
    CHECK(parameter_array(cycled).varphi == phi_eps);
}

TEST_CASE("five-term decomposition") {
    const QRacahTuple t = reference_tuple();
    const LeonardRealization r = build_triple(t);
    const Field f = t.field();
    const int n = t.d + 1;

    const NTCoefficients id = nt_decompose(ExactMatrix::identity(n, f), r.A, r.A_star);
    CHECK(id.e == Q("1"));
    CHECK(id.f == Q("0"));
    CHECK(id.f_star == Q("0"));
    CHECK(id.g == Q("0"));
    CHECK(id.g_star == Q("0"));

    const NTCoefficients a = nt_decompose(r.A, r.A, r.A_star);
    CHECK(a.f == Q("1"));
    CHECK(a.e == Q("0"));

    SUBCASE("coordinates of the extension") {
        const NTCoefficients eps = nt_decompose(r.A_eps, r.A, r.A_star);
        CHECK(eps.f == Q("0"));
        CHECK(eps.f_star == Q("0"));
        CHECK(eps.g == Q("-8/15"));
        CHECK(eps.g_star == Q("2/15"));
        CHECK(eps.g / eps.g_star == -t.q.pow(2));
        const Z3Constants z = z3_constants(t);
        CHECK(eps.e == z.alpha_eps / (t.q + t.q.inv()));
    }
    SUBCASE("matrices outside the span are rejected") {
        ExactMatrix corner(n, f);
        corner.at(n - 1, 0) = Q("1"); // outside the tridiagonal band spanned by the basis
        CHECK_THROWS_AS(nt_decompose(corner, r.A, r.A_star), NotInSpan);
    }
    SUBCASE("tiny dimensions have no independent basis") {
        const ExactMatrix small = ExactMatrix::identity(2, f);
        CHECK_THROWS_AS(nt_decompose(small, small, small), DependentBasis);
    }
}

TEST_CASE("symmetrizer") {
    const Field f = Field::rationals();

    SUBCASE("symmetric tridiagonal with diagonal dual gives the identity") {
        testsupport::Rng rng(43);
        ExactMatrix a(4, f);
        for (int i = 0; i < 4; ++i) a.at(i, i) = rng.rational();
        for (int i = 1; i < 4; ++i) {
            const Scalar v = rng.nonzero_rational();
            a.at(i, i - 1) = v;
            a.at(i - 1, i) = v;
        }
        const ExactMatrix a_star = ExactMatrix::diagonal({Q("1"), Q("2"), Q("3"), Q("4")});
        CHECK(symmetrizer(a, a_star) == ExactMatrix::identity(4, f));
    }

    SUBCASE("split pair of the reference tuple") {
        const QRacahTuple t = reference_tuple();
        const LeonardRealization r = build_triple(t);
        const ExactMatrix d = symmetrizer(r.A, r.A_star); // unique by construction
        CHECK(rank(d) == t.d + 1);
        CHECK(d * r.A.transpose() == r.A * d);
        CHECK(d * r.A_star.transpose() == r.A_star * d);
        CHECK(d.at(0, 0) == Q("1")); // normalized leading entry

        // transpose-conjugating the extension preserves its spectrum
        const ExactMatrix flipped = mat_inverse(d) * r.A_eps.transpose() * d;
        const ExactMatrix id = ExactMatrix::identity(t.d + 1, f);
        for (const Scalar& theta : r.eig.theta_eps) CHECK(rank(flipped - theta * id) == t.d);
    }

    SUBCASE("an over-symmetric input is rejected") {
        const ExactMatrix zero(3, f);
        CHECK_THROWS_AS(symmetrizer(zero, zero), NonUnique);
    }
}

TEST_CASE("build over a prime field") {
    testsupport::Rng rng(87);
    const Field f = Field::prime_field(1009);
    const QRacahTuple t = rng.admissible_gf_tuple(f, 4);
    const LeonardRealization r = build_triple(t);
    CHECK(shape_classify(r.A_eps) == MatrixShape::IrreducibleTridiagonal);
    CHECK(check_leonard_triple_system(r).overall());
}

TEST_CASE("split basis recovery") {
    const QRacahTuple t = reference_tuple();
    const ParameterArray p = parameter_array(t);
    const auto [a, a_star] = split_pair(p);
    const Field f = t.field();
    const int n = t.d + 1;

    SUBCASE("an already-split pair is reproduced") {
        const ExactMatrix s = split_basis_from_pair(a, a_star, p.theta, p.theta_star);
        CHECK(conjugate(a, s) == a);
        CHECK(conjugate(a_star, s) == a_star);
    }

    SUBCASE("round trip through a random conjugation") {
        testsupport::Rng rng(53);
        for (int trial = 0; trial < 3; ++trial) {
            ExactMatrix g(n, f);
            do {
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) g.at(i, j) = rng.rational();
            } while (rank(g) != n);
            const ExactMatrix ca = conjugate(a, g), cs = conjugate(a_star, g);
            const ExactMatrix s = split_basis_from_pair(ca, cs, p.theta, p.theta_star);
            CHECK(conjugate(ca, s) == a);
            CHECK(conjugate(cs, s) == a_star);
            // first split sequence read back off the superdiagonal
            const ExactMatrix rec = conjugate(cs, s);
            for (int i = 1; i <= t.d; ++i)
                CHECK(rec.at(i - 1, i) == p.varphi[static_cast<std::size_t>(i - 1)]);
        }
    }

    SUBCASE("a commuting pair degenerates the column chain") {
        const ExactMatrix da = ExactMatrix::diagonal(p.theta);
        const ExactMatrix ds = ExactMatrix::diagonal(p.theta_star);
        CHECK_THROWS_AS(split_basis_from_pair(da, ds, p.theta, p.theta_star), DegenerateBasis);
    }
}
