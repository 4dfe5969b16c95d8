#include "leonard/realize.hpp"

namespace leonard {

namespace {

void require_admissible(const QRacahTuple& t, bool triple) {
    const AdmissibilityReport adm = triple ? check_triple_admissible(t) : check_pair_admissible(t);
    if (!adm.admissible())
        throw InadmissibleTuple(adm.first_failure()->name + ": " + adm.first_failure()->witness);
}

} // namespace

std::pair<ExactMatrix, ExactMatrix> split_pair(const ParameterArray& p) {
    const int d = p.diameter();
    if (d < 1 || static_cast<int>(p.varphi.size()) != d || static_cast<int>(p.theta_star.size()) != d + 1)
        throw InvalidArray("inconsistent parameter array sizes");
    const Field f = p.field();
    ExactMatrix a(d + 1, f), a_star(d + 1, f);
    const Scalar one = Scalar::integer(f, 1);
    for (int i = 0; i <= d; ++i) {
        a.at(i, i) = p.theta[static_cast<std::size_t>(i)];
        a_star.at(i, i) = p.theta_star[static_cast<std::size_t>(i)];
    }
    for (int i = 1; i <= d; ++i) {
        a.at(i, i - 1) = one;
        a_star.at(i - 1, i) = p.varphi[static_cast<std::size_t>(i - 1)];
    }
    return {std::move(a), std::move(a_star)};
}

ExactMatrix build_a_epsilon(const ExactMatrix& a, const ExactMatrix& a_star, const QRacahTuple& t) {
    require_admissible(t, false);
    const Scalar denom = t.q.pow(2) - t.q.pow(-2);
    if (denom.is_zero()) throw InadmissibleTuple("q^4 = 1");
    const Scalar alpha_eps = z3_constants(t).alpha_eps;
    const ExactMatrix id = ExactMatrix::identity(a.dim(), a.field());
    return denom.inv() * (t.q.inv() * (a_star * a) - t.q * (a * a_star)) +
           (alpha_eps / (t.q + t.q.inv())) * id;
}

ExactMatrix a_epsilon_closed_form(const QRacahTuple& t) {
    require_admissible(t, false);
    const Field f = t.field();
    const int d = t.d;
    ExactMatrix m(d + 1, f);
    const Scalar ai = t.a.inv(), bi = t.b.inv();
    const Scalar abc = t.a * t.b * t.c;
    const Scalar abci = t.a * t.b * t.c.inv();
    const Scalar sc = t.c + t.c.inv();
    const Scalar big_q = t.q.pow(d + 1) + t.q.pow(-d - 1);
    const Scalar sq = t.q + t.q.inv();
    for (int i = 0; i <= d; ++i) {
        const Scalar qd2i = t.q.pow(d - 2 * i);
        m.at(i, i) = ai * bi * qd2i * (big_q - qd2i * sq) + sc * qd2i;
    }
    for (int i = 1; i <= d; ++i) {
        const Scalar band = t.q.pow(d - 2 * i + 1);
        m.at(i, i - 1) = -bi * band;
        m.at(i - 1, i) = ai * ai * bi * (t.q.pow(i) - t.q.pow(-i)) *
                         (t.q.pow(d - i + 1) - t.q.pow(i - d - 1)) * (abc - band) * (abci - band);
    }
    return m;
}

ExactMatrix transition_matrix(const QRacahTuple& t) {
    require_admissible(t, true);
    const Field f = t.field();
    const int d = t.d;
    ExactMatrix m(d + 1, f);
    const Scalar q2 = t.q.pow(2);
    const Scalar bi = t.b.inv();
    const Scalar abci = (t.a * t.b * t.c).inv();
    for (int i = 0; i <= d; ++i) {
        const Scalar sign = Scalar::integer(f, i % 2 == 0 ? 1 : -1);
        for (int j = i; j <= d; ++j) {
            const int n = j - i;
            const Scalar num = q_pochhammer(t.q.pow(2 * i + 2), q2, n) *
                               q_pochhammer(t.q.pow(2 * i - 2 * d), q2, n) *
                               q_pochhammer(abci * t.q.pow(d - 2 * j + 1), q2, n);
            m.at(i, j) = sign * bi.pow(i) * t.c.pow(n) *
                         t.q.pow(static_cast<long long>(i) * i + static_cast<long long>(d - 2 * i) * j) *
                         num / q_pochhammer(q2, q2, n);
        }
    }
    return m;
}

ExactMatrix transition_matrix_by_recurrence(const QRacahTuple& t) {
    require_admissible(t, true);
    const Field f = t.field();
    const int d = t.d;
    ExactMatrix m(d + 1, f);
    const Scalar ai = t.a.inv(), bi = t.b.inv();
    const Scalar abc = t.a * t.b * t.c;
    for (int j = 0; j <= d; ++j) {
        m.at(j, j) = Scalar::integer(f, j % 2 == 0 ? 1 : -1) * bi.pow(j) *
                     t.q.pow(static_cast<long long>(j) * (d - j));
        for (int i = j; i >= 1; --i) {
            const Scalar factor = ai * t.q.pow(i + j - d - 1) * (t.q.pow(i) - t.q.pow(-i)) *
                                  (t.q.pow(d - i + 1) - t.q.pow(i - d - 1)) *
                                  (abc - t.q.pow(d - 2 * i + 1)) /
                                  (t.q.pow(i - j - 1) - t.q.pow(j - i + 1));
            m.at(i - 1, j) = factor * m.at(i, j);
        }
    }
    return m;
}

ExactMatrix rho(const ExactMatrix& x, const ExactMatrix& m) { return conjugate(x, m); }

std::vector<Scalar> varphi_eps(const QRacahTuple& t) {
    const Field f = t.field();
    const int d = t.d;
    const Scalar head = t.b.inv() * t.c.inv() * t.q.pow(d + 1);
    const Scalar abc = t.a * t.b * t.c;
    const Scalar aibc = t.a.inv() * t.b * t.c;
    std::vector<Scalar> out;
    out.reserve(static_cast<std::size_t>(d));
    for (int i = 1; i <= d; ++i) {
        const Scalar tail = t.q.pow(i - d - 1);
        const Scalar qmi = t.q.pow(-i);
        out.push_back(head * (t.q.pow(i) - qmi) * (tail - t.q.pow(d - i + 1)) * (qmi - abc * tail) *
                      (qmi - aibc * tail));
    }
    return out;
}

NTCoefficients nt_decompose(const ExactMatrix& x, const ExactMatrix& a, const ExactMatrix& a_star) {
    const int n = a.dim();
    if (n < 3) throw DependentBasis("need diameter >= 2");
    const Field f = a.field();
    const ExactMatrix basis[5] = {ExactMatrix::identity(n, f), a, a_star, a * a_star, a_star * a};
    std::vector<std::vector<Scalar>> aug;
    aug.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            std::vector<Scalar> row;
            row.reserve(6);
            for (const ExactMatrix& b : basis) row.push_back(b.at(i, j));
            row.push_back(x.at(i, j));
            aug.push_back(std::move(row));
        }
    }
    const LinearSolve sol = solve_linear(std::move(aug), 5, f);
    if (sol.status == SolveStatus::Inconsistent)
        throw NotInSpan("matrix is outside span{I, A, A*, AA*, A*A}");
    if (sol.status == SolveStatus::Underdetermined)
        throw DependentBasis("I, A, A*, AA*, A*A are linearly dependent");
    return {sol.solution[0], sol.solution[1], sol.solution[2], sol.solution[3], sol.solution[4]};
}

ExactMatrix symmetrizer(const ExactMatrix& a, const ExactMatrix& a_star) {
    const int n = a.dim();
    const Field f = a.field();
    // unknowns D_{kl} flattened row-major; rows encode (D B^T - B D)_{ij} = 0
    std::vector<std::vector<Scalar>> rows;
    rows.reserve(2 * static_cast<std::size_t>(n) * n);
    for (const ExactMatrix* b : {&a, &a_star}) {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                std::vector<Scalar> row(static_cast<std::size_t>(n) * n, Scalar(f));
                for (int l = 0; l < n; ++l) row[static_cast<std::size_t>(i) * n + l] += b->at(j, l);
                for (int k = 0; k < n; ++k) row[static_cast<std::size_t>(k) * n + j] -= b->at(i, k);
                rows.push_back(std::move(row));
            }
        }
    }
    const auto basis = nullspace(std::move(rows), n * n, f);
    if (basis.empty()) throw NoSymmetrizer("no intertwining matrix exists");
    if (basis.size() > 1)
        throw NonUnique("intertwining space has dimension " + std::to_string(basis.size()));
    ExactMatrix d(n, f);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) d.at(i, j) = basis[0][static_cast<std::size_t>(i) * n + j];
    const auto lead = d.first_nonzero();
    if (!lead) throw NoSymmetrizer("intertwining matrix is zero");
    d = d.at(lead->first, lead->second).inv() * d;
    if (rank(d) != n) throw NoSymmetrizer("intertwining matrix is singular");
    return d;
}

LeonardRealization build_triple(const QRacahTuple& t) {
    require_admissible(t, true);
    const ParameterArray p = parameter_array(t);
    auto [a, a_star] = split_pair(p);
    ExactMatrix a_eps = build_a_epsilon(a, a_star, t);
    TripleEigenData eig{p.theta, p.theta_star, eigen_sequence(t.c, t.q, t.d)};
    std::vector<ExactMatrix> e = primitive_idempotents(a, eig.theta);
    std::vector<ExactMatrix> e_star = primitive_idempotents(a_star, eig.theta_star);
    std::vector<ExactMatrix> e_eps = primitive_idempotents(a_eps, eig.theta_eps);
    return {t,       std::move(a),      std::move(a_star), std::move(a_eps),
            std::move(e), std::move(e_star), std::move(e_eps),  std::move(eig)};
}

ExactMatrix split_basis_from_pair(const ExactMatrix& a, const ExactMatrix& a_star,
                                  const std::vector<Scalar>& theta,
                                  const std::vector<Scalar>& theta_star) {
    const int n = a.dim();
    const Field f = a.field();

    // E*_0 without computing the whole idempotent family
    ExactMatrix e0 = ExactMatrix::identity(n, f);
    const ExactMatrix id = ExactMatrix::identity(n, f);
    for (int j = 1; j < n; ++j) {
        const Scalar denom = theta_star[0] - theta_star[static_cast<std::size_t>(j)];
        if (denom.is_zero()) throw DegenerateBasis("repeated dual eigenvalue");
        e0 = denom.inv() * (e0 * (a_star - theta_star[static_cast<std::size_t>(j)] * id));
    }

    int vcol = -1;
    for (int j = 0; j < n && vcol < 0; ++j)
        for (int i = 0; i < n; ++i)
            if (!e0.at(i, j).is_zero()) { vcol = j; break; }
    if (vcol < 0) throw DegenerateBasis("E*_0 vanished");

    std::vector<Scalar> v(static_cast<std::size_t>(n), Scalar(f));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = e0.at(i, vcol);

    ExactMatrix s(n, f);
    for (int col = 0; col < n; ++col) {
        for (int i = 0; i < n; ++i) s.at(i, col) = v[static_cast<std::size_t>(i)];
        if (col == n - 1) break;
        // v <- (A - theta_col I) v
        std::vector<Scalar> next(static_cast<std::size_t>(n), Scalar(f));
        for (int i = 0; i < n; ++i) {
            for (int k = 0; k < n; ++k) {
                if (a.at(i, k).is_zero()) continue;
                next[static_cast<std::size_t>(i)] += a.at(i, k) * v[static_cast<std::size_t>(k)];
            }
            next[static_cast<std::size_t>(i)] -= theta[static_cast<std::size_t>(col)] * v[static_cast<std::size_t>(i)];
        }
        v = std::move(next);
    }
    if (rank(s) != n) throw DegenerateBasis("split-basis columns are dependent");
    return s;
}

} // namespace leonard
