#include <doctest.h>

#include "support.hpp"

using namespace leonard;
using testsupport::Q;

namespace {

ExactMatrix random_matrix(testsupport::Rng& rng, int n, const Field& f) {
    ExactMatrix m(n, f);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m.at(i, j) = f.kind() == FieldKind::Rationals ? rng.rational() : rng.residue(f);
    return m;
}

ExactMatrix random_invertible(testsupport::Rng& rng, int n, const Field& f) {
    for (;;) {
        ExactMatrix m = random_matrix(rng, n, f);
        if (rank(m) == n) return m;
    }
}

} // namespace

TEST_CASE("ring operations") {
    testsupport::Rng rng(5);
    const ExactMatrix x = random_matrix(rng, 4, Field::rationals());
    const ExactMatrix id = ExactMatrix::identity(4, Field::rationals());
    CHECK(id * x == x);
    CHECK((x - x).is_zero());
    CHECK(x + (-x) == ExactMatrix(4, Field::rationals()));

    // diagonal action scales rows
    const ExactMatrix d = ExactMatrix::diagonal({Q("2"), Q("3"), Q("5"), Q("7")});
    const ExactMatrix dx = d * x;
    CHECK(dx.at(2, 1) == Q("5") * x.at(2, 1));
}

TEST_CASE("inverse") {
    const Field f = Field::rationals();
    const ExactMatrix id = ExactMatrix::identity(3, f);
    CHECK(mat_inverse(id) == id);
    CHECK(mat_inverse(ExactMatrix::diagonal({Q("2"), Q("4")})) ==
          ExactMatrix::diagonal({Q("1/2"), Q("1/4")}));

    SUBCASE("unit upper triangular stays unit upper triangular") {
        testsupport::Rng rng(7);
        ExactMatrix u = ExactMatrix::identity(5, f);
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j) u.at(i, j) = rng.rational();
        // back-substitution oracle: invert by solving U x = e_k column by column
        ExactMatrix oracle(5, f);
        for (int k = 0; k < 5; ++k) {
            std::vector<Scalar> x(5, Scalar(f));
            for (int i = 4; i >= 0; --i) {
                Scalar rhs = i == k ? Q("1") : Q("0");
                for (int j = i + 1; j < 5; ++j) rhs -= u.at(i, j) * x[static_cast<std::size_t>(j)];
                x[static_cast<std::size_t>(i)] = rhs;
            }
            for (int i = 0; i < 5; ++i) oracle.at(i, k) = x[static_cast<std::size_t>(i)];
        }
        const ExactMatrix inv = mat_inverse(u);
        CHECK(inv == oracle);
        for (int i = 0; i < 5; ++i) {
            CHECK(inv.at(i, i) == Q("1"));
            for (int j = 0; j < i; ++j) CHECK(inv.at(i, j) == Q("0"));
        }
    }

    SUBCASE("round trips over both fields") {
        testsupport::Rng rng(9);
        const Field g = Field::prime_field(101);
        for (int k = 0; k < 10; ++k) {
            const ExactMatrix m = random_invertible(rng, 4, f);
            CHECK(m * mat_inverse(m) == ExactMatrix::identity(4, f));
            CHECK(mat_inverse(m) * m == ExactMatrix::identity(4, f));
            const ExactMatrix p = random_invertible(rng, 4, g);
            CHECK(p * mat_inverse(p) == ExactMatrix::identity(4, g));
        }
    }

    SUBCASE("singular is rejected") {
        ExactMatrix s(2, f);
        s.at(0, 0) = Q("1");
        s.at(1, 0) = Q("2");
        CHECK_THROWS_AS(mat_inverse(s), Singular);
    }
}

TEST_CASE("rank") {
    const Field f = Field::rationals();
    CHECK(rank(ExactMatrix(4, f)) == 0);
    CHECK(rank(ExactMatrix::identity(4, f)) == 4);
    ExactMatrix m(3, f);
    m.at(0, 0) = Q("1");
    m.at(1, 0) = Q("2");
    m.at(2, 1) = Q("1");
    CHECK(rank(m) == 2);
}

TEST_CASE("shape classification") {
    const Field f = Field::rationals();
    CHECK(shape_classify(ExactMatrix::diagonal({Q("1"), Q("2"), Q("3")})) == MatrixShape::Diagonal);

    ExactMatrix lower(3, f);
    for (int i = 0; i < 3; ++i) lower.at(i, i) = Q(std::to_string(i + 1));
    lower.at(1, 0) = Q("1");
    lower.at(2, 1) = Q("1");
    CHECK(shape_classify(lower) == MatrixShape::LowerBidiagonal);
    CHECK(shape_classify(lower.transpose()) == MatrixShape::UpperBidiagonal);

    ExactMatrix tri = lower;
    tri.at(0, 1) = Q("4");
    tri.at(1, 2) = Q("5");
    CHECK(shape_classify(tri) == MatrixShape::IrreducibleTridiagonal);
    tri.at(1, 2) = Q("0");
    CHECK(shape_classify(tri) == MatrixShape::Tridiagonal);

    ExactMatrix g = lower;
    g.at(0, 2) = Q("1");
    CHECK(shape_classify(g) == MatrixShape::General);
}

TEST_CASE("primitive idempotents") {
    const Field f = Field::rationals();
    SUBCASE("diagonal case gives elementary units") {
        const std::vector<Scalar> eigs{Q("1"), Q("2"), Q("3")};
        const auto es = primitive_idempotents(ExactMatrix::diagonal(eigs), eigs);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                CHECK(es[static_cast<std::size_t>(i)].at(j, j) == (i == j ? Q("1") : Q("0")));
    }

    SUBCASE("spectral identities for a triangular operator") {
        testsupport::Rng rng(31);
        const std::vector<Scalar> eigs{Q("2"), Q("-1"), Q("5"), Q("1/2")};
        ExactMatrix a = ExactMatrix::diagonal(eigs);
        for (int i = 1; i < 4; ++i) a.at(i, i - 1) = rng.nonzero_rational();
        const auto es = primitive_idempotents(a, eigs);
        ExactMatrix sum(4, f), weighted(4, f);
        for (int i = 0; i < 4; ++i) {
            sum += es[static_cast<std::size_t>(i)];
            weighted += eigs[static_cast<std::size_t>(i)] * es[static_cast<std::size_t>(i)];
            for (int j = 0; j < 4; ++j) {
                const ExactMatrix prod = es[static_cast<std::size_t>(i)] * es[static_cast<std::size_t>(j)];
                CHECK(prod == (i == j ? es[static_cast<std::size_t>(i)] : ExactMatrix(4, f)));
            }
        }
        CHECK(sum == ExactMatrix::identity(4, f));
        CHECK(weighted == a);
    }

    SUBCASE("failures carry the offending index") {
        const std::vector<Scalar> repeated{Q("1"), Q("1"), Q("3")};
        CHECK_THROWS_AS(primitive_idempotents(ExactMatrix::identity(3, f), repeated),
                        NotMultiplicityFree);
        try {
            primitive_idempotents(ExactMatrix::identity(3, f), {Q("1"), Q("2"), Q("3")});
            CHECK(false);
        } catch (const NotMultiplicityFree& e) {
            CHECK(e.index == 0); // rank(I - 1*I) = 0 != 2
        }
    }
}

TEST_CASE("conjugation") {
    testsupport::Rng rng(41);
    const Field f = Field::rationals();
    const ExactMatrix x = random_matrix(rng, 4, f);
    const ExactMatrix id = ExactMatrix::identity(4, f);
    CHECK(conjugate(x, id) == x);
    const ExactMatrix m = random_invertible(rng, 4, f);
    CHECK(conjugate(id, m) == id);
    CHECK(conjugate(x, m).trace() == x.trace());
}

TEST_CASE("linear solves") {
    const Field f = Field::rationals();
    // x + y = 3, x - y = 1
    std::vector<std::vector<Scalar>> aug{{Q("1"), Q("1"), Q("3")}, {Q("1"), Q("-1"), Q("1")}};
    const LinearSolve sol = solve_linear(aug, 2, f);
    REQUIRE(sol.status == SolveStatus::Unique);
    CHECK(sol.solution[0] == Q("2"));
    CHECK(sol.solution[1] == Q("1"));

    std::vector<std::vector<Scalar>> bad{{Q("1"), Q("1"), Q("3")}, {Q("2"), Q("2"), Q("7")}};
    CHECK(solve_linear(bad, 2, f).status == SolveStatus::Inconsistent);

    std::vector<std::vector<Scalar>> thin{{Q("1"), Q("1"), Q("3")}};
    CHECK(solve_linear(thin, 2, f).status == SolveStatus::Underdetermined);

    // nullspace of (1 1) is one-dimensional
    const auto basis = nullspace({{Q("1"), Q("1")}}, 2, f);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0][0] + basis[0][1] == Q("0"));
}
