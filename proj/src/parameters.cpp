#include "leonard/parameters.hpp"

#include <algorithm>

namespace leonard {

std::string QRacahTuple::text() const {
    return "(" + a.to_string() + "," + b.to_string() + "," + c.to_string() + ";" + q.to_string() + ")";
}

bool QRacahTuple::operator==(const QRacahTuple& o) const {
    return d == o.d && a == o.a && b == o.b && c == o.c && q == o.q;
}

QRacahTuple make_tuple(Scalar a, Scalar b, Scalar c, Scalar q, int d) {
    const Field f = a.field();
    if (!(b.field() == f) || !(c.field() == f) || !(q.field() == f))
        throw FieldMismatch("tuple entries from different fields");
    if (d < 3) throw ParseError("diameter d must be at least 3");
    if (d > 4096) throw ParseError("diameter d out of supported range");
    if (f.kind() == FieldKind::PrimeField && f.modulus() <= 2 * static_cast<std::uint64_t>(d) + 2)
        throw ParseError("modulus must exceed 2d+2");
    return QRacahTuple{std::move(a), std::move(b), std::move(c), std::move(q), d};
}

bool AdmissibilityReport::admissible() const {
    for (const auto& c : conditions)
        if (!c.pass) return false;
    return true;
}

const ConditionCheck* AdmissibilityReport::first_failure() const {
    for (const auto& c : conditions)
        if (!c.pass) return &c;
    return nullptr;
}

namespace {

std::string pow_text(const std::string& base, long long e) {
    return base + "^" + std::to_string(e);
}

// x^2 against {q^{2d-2}, ..., q^{2-2d}}; returns the exponent 2k on a hit
bool square_hits_band(const Scalar& x, const Scalar& q, int d, long long& exponent) {
    if (x.is_zero()) return false;
    const Scalar x2 = x * x;
    for (int k = d - 1; k >= 1 - d; --k) {
        if (x2 == q.pow(2 * k)) {
            exponent = 2 * k;
            return true;
        }
    }
    return false;
}

ConditionCheck nonzero_condition(const QRacahTuple& t, const std::string& name) {
    const char* names[] = {"a", "b", "c", "q"};
    const Scalar* vals[] = {&t.a, &t.b, &t.c, &t.q};
    for (int i = 0; i < 4; ++i)
        if (vals[i]->is_zero()) return {name, false, std::string(names[i]) + " = 0"};
    return {name, true, ""};
}

ConditionCheck root_of_unity_condition(const QRacahTuple& t, const std::string& name) {
    if (t.q.is_zero()) return {name, false, "q = 0"};
    const Scalar one = Scalar::integer(t.field(), 1);
    for (int i = 1; i <= t.d; ++i)
        if (t.q.pow(2 * i) == one) return {name, false, pow_text("q", 2 * i) + " = 1"};
    return {name, true, ""};
}

ConditionCheck square_band_condition(const QRacahTuple& t, const std::string& name, bool include_c) {
    if (t.q.is_zero()) return {name, false, "q = 0"};
    long long e = 0;
    if (square_hits_band(t.a, t.q, t.d, e)) return {name, false, "a^2 = " + pow_text("q", e)};
    if (square_hits_band(t.b, t.q, t.d, e)) return {name, false, "b^2 = " + pow_text("q", e)};
    if (include_c && square_hits_band(t.c, t.q, t.d, e))
        return {name, false, "c^2 = " + pow_text("q", e)};
    return {name, true, ""};
}

ConditionCheck product_band_condition(const QRacahTuple& t, const std::string& name) {
    if (t.a.is_zero() || t.b.is_zero() || t.c.is_zero() || t.q.is_zero())
        return {name, false, "zero entry"};
    const Scalar products[] = {t.a * t.b * t.c, t.a.inv() * t.b * t.c, t.a * t.b.inv() * t.c,
                               t.a * t.b * t.c.inv()};
    const char* labels[] = {"abc", "a^-1 bc", "ab^-1 c", "abc^-1"};
    for (int kprod = 0; kprod < 4; ++kprod) {
        for (int k = t.d - 1; k >= 1 - t.d; k -= 2) {
            if (products[kprod] == t.q.pow(k))
                return {name, false, std::string(labels[kprod]) + " = " + pow_text("q", k)};
        }
    }
    return {name, true, ""};
}

} // namespace

AdmissibilityReport check_pair_admissible(const QRacahTuple& t) {
    AdmissibilityReport r;
    r.conditions.push_back(nonzero_condition(t, "RQRAC1"));
    if (!r.conditions.back().pass) {
        r.conditions.push_back({"RQRAC2", false, "skipped: RQRAC1 failed"});
        r.conditions.push_back({"RQRAC3", false, "skipped: RQRAC1 failed"});
        r.conditions.push_back({"RQRAC4", false, "skipped: RQRAC1 failed"});
        return r;
    }
    r.conditions.push_back(root_of_unity_condition(t, "RQRAC2"));
    r.conditions.push_back(square_band_condition(t, "RQRAC3", false));
    r.conditions.push_back(product_band_condition(t, "RQRAC4"));
    return r;
}

AdmissibilityReport check_triple_admissible(const QRacahTuple& t) {
    AdmissibilityReport r;
    r.conditions.push_back(nonzero_condition(t, "T-RQRAC1"));
    if (!r.conditions.back().pass) {
        r.conditions.push_back({"T-RQRAC2", false, "skipped: T-RQRAC1 failed"});
        r.conditions.push_back({"T-RQRAC3", false, "skipped: T-RQRAC1 failed"});
        r.conditions.push_back({"T-RQRAC4", false, "skipped: T-RQRAC1 failed"});
        return r;
    }
    r.conditions.push_back(root_of_unity_condition(t, "T-RQRAC2"));
    r.conditions.push_back(square_band_condition(t, "T-RQRAC3", true));
    r.conditions.push_back(product_band_condition(t, "T-RQRAC4"));
    return r;
}

std::vector<Scalar> eigen_sequence(const Scalar& x, const Scalar& q, int d) {
    const Scalar xi = x.inv(); // ZeroInverse on x = 0
    if (q.is_zero()) throw ZeroInverse("q = 0");
    std::vector<Scalar> theta;
    theta.reserve(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) theta.push_back(x * q.pow(2 * i - d) + xi * q.pow(d - 2 * i));
    return theta;
}

bool ParameterArray::operator==(const ParameterArray& o) const {
    return theta == o.theta && theta_star == o.theta_star && varphi == o.varphi && phi == o.phi;
}

ParameterArray parameter_array(const QRacahTuple& t) {
    const AdmissibilityReport adm = check_pair_admissible(t);
    if (!adm.admissible())
        throw InadmissibleTuple(adm.first_failure()->name + ": " + adm.first_failure()->witness);

    ParameterArray p;
    p.theta = eigen_sequence(t.a, t.q, t.d);
    p.theta_star = eigen_sequence(t.b, t.q, t.d);
    const Scalar ai = t.a.inv(), bi = t.b.inv(), ci = t.c.inv();
    const Scalar abc = t.a * t.b * t.c;
    const Scalar abci = t.a * t.b * ci;   // a b c^{-1}
    const Scalar aibc = ai * t.b * t.c;   // a^{-1} b c
    const Scalar aibci = ai * t.b * ci;   // a^{-1} b c^{-1}
    const Scalar head_varphi = ai * bi * t.q.pow(t.d + 1);
    const Scalar head_phi = t.a * bi * t.q.pow(t.d + 1);
    for (int i = 1; i <= t.d; ++i) {
        const Scalar common =
            (t.q.pow(i) - t.q.pow(-i)) * (t.q.pow(i - t.d - 1) - t.q.pow(t.d - i + 1));
        const Scalar tail = t.q.pow(i - t.d - 1);
        const Scalar qmi = t.q.pow(-i);
        p.varphi.push_back(head_varphi * common * (qmi - abc * tail) * (qmi - abci * tail));
        p.phi.push_back(head_phi * common * (qmi - aibc * tail) * (qmi - aibci * tail));
    }
    return p;
}

bool ArrayCheckReport::valid() const {
    for (const auto& c : conditions)
        if (!c.pass) return false;
    return true;
}

const ConditionCheck* ArrayCheckReport::first_failure() const {
    for (const auto& c : conditions)
        if (!c.pass) return &c;
    return nullptr;
}

ArrayCheckReport validate_parameter_array(const ParameterArray& p, const Scalar& q_hint) {
    ArrayCheckReport r;
    const int d = p.diameter();
    const Field f = p.field();

    ConditionCheck pa1{"PA1", true, ""};
    for (int i = 0; i <= d && pa1.pass; ++i) {
        for (int j = i + 1; j <= d && pa1.pass; ++j) {
            if (p.theta[static_cast<std::size_t>(i)] == p.theta[static_cast<std::size_t>(j)])
                pa1 = {"PA1", false, "theta_" + std::to_string(i) + " = theta_" + std::to_string(j)};
            else if (p.theta_star[static_cast<std::size_t>(i)] == p.theta_star[static_cast<std::size_t>(j)])
                pa1 = {"PA1", false, "theta*_" + std::to_string(i) + " = theta*_" + std::to_string(j)};
        }
    }
    r.conditions.push_back(pa1);

    ConditionCheck pa2{"PA2", true, ""};
    for (int i = 1; i <= d && pa2.pass; ++i) {
        if (p.varphi[static_cast<std::size_t>(i - 1)].is_zero())
            pa2 = {"PA2", false, "varphi_" + std::to_string(i) + " = 0"};
        else if (p.phi[static_cast<std::size_t>(i - 1)].is_zero())
            pa2 = {"PA2", false, "phi_" + std::to_string(i) + " = 0"};
    }
    r.conditions.push_back(pa2);

    if (!pa1.pass) {
        r.conditions.push_back({"PA3", false, "skipped: PA1 failed"});
        r.conditions.push_back({"PA4", false, "skipped: PA1 failed"});
        r.conditions.push_back({"PA5", false, "skipped: PA1 failed"});
        r.conditions.push_back({"PA-SUM", false, "skipped: PA1 failed"});
        return r;
    }

    // partial sums S_i = sum_{h<i} (theta_h - theta_{d-h}) / (theta_0 - theta_d)
    std::vector<Scalar> sums(static_cast<std::size_t>(d) + 1, Scalar(f));
    {
        const Scalar span = p.theta[0] - p.theta[static_cast<std::size_t>(d)];
        Scalar acc(f);
        for (int i = 1; i <= d; ++i) {
            acc += (p.theta[static_cast<std::size_t>(i - 1)] - p.theta[static_cast<std::size_t>(d - i + 1)]) / span;
            sums[static_cast<std::size_t>(i)] = acc;
        }
    }

    ConditionCheck pa3{"PA3", true, ""};
    for (int i = 1; i <= d && pa3.pass; ++i) {
        const Scalar rhs = p.phi[0] * sums[static_cast<std::size_t>(i)] +
                           (p.theta_star[static_cast<std::size_t>(i)] - p.theta_star[0]) *
                               (p.theta[static_cast<std::size_t>(i - 1)] - p.theta[static_cast<std::size_t>(d)]);
        if (p.varphi[static_cast<std::size_t>(i - 1)] != rhs)
            pa3 = {"PA3", false, "fails at i = " + std::to_string(i)};
    }
    r.conditions.push_back(pa3);

    ConditionCheck pa4{"PA4", true, ""};
    for (int i = 1; i <= d && pa4.pass; ++i) {
        const Scalar rhs = p.varphi[0] * sums[static_cast<std::size_t>(i)] +
                           (p.theta_star[static_cast<std::size_t>(i)] - p.theta_star[0]) *
                               (p.theta[static_cast<std::size_t>(d - i + 1)] - p.theta[0]);
        if (p.phi[static_cast<std::size_t>(i - 1)] != rhs)
            pa4 = {"PA4", false, "fails at i = " + std::to_string(i)};
    }
    r.conditions.push_back(pa4);

    ConditionCheck pa5{"PA5", true, ""};
    try {
        const Scalar target = q_hint.pow(2) + Scalar::integer(f, 1) + q_hint.pow(-2);
        for (int i = 2; i <= d - 1 && pa5.pass; ++i) {
            const Scalar num = p.theta[static_cast<std::size_t>(i - 2)] - p.theta[static_cast<std::size_t>(i + 1)];
            const Scalar den = p.theta[static_cast<std::size_t>(i - 1)] - p.theta[static_cast<std::size_t>(i)];
            const Scalar num_s =
                p.theta_star[static_cast<std::size_t>(i - 2)] - p.theta_star[static_cast<std::size_t>(i + 1)];
            const Scalar den_s =
                p.theta_star[static_cast<std::size_t>(i - 1)] - p.theta_star[static_cast<std::size_t>(i)];
            if (num / den != target)
                pa5 = {"PA5", false, "theta ratio differs at i = " + std::to_string(i)};
            else if (num_s / den_s != target)
                pa5 = {"PA5", false, "theta* ratio differs at i = " + std::to_string(i)};
        }
    } catch (const ZeroInverse&) {
        pa5 = {"PA5", false, "degenerate q hint"};
    }
    r.conditions.push_back(pa5);

    // geometric-series closed form for the partial sums
    ConditionCheck pasum{"PA-SUM", true, ""};
    try {
        const Scalar qd = q_hint.pow(d);
        const Scalar denom = (q_hint - q_hint.inv()) * (qd - qd.inv());
        for (int i = 1; i <= d && pasum.pass; ++i) {
            const Scalar closed = (q_hint.pow(i) - q_hint.pow(-i)) *
                                  (q_hint.pow(d - i + 1) - q_hint.pow(i - d - 1)) / denom;
            if (sums[static_cast<std::size_t>(i)] != closed)
                pasum = {"PA-SUM", false, "closed form differs at i = " + std::to_string(i)};
        }
    } catch (const ZeroInverse&) {
        pasum = {"PA-SUM", false, "degenerate q hint"};
    }
    r.conditions.push_back(pasum);
    return r;
}

Scalar recover_a(const Scalar& theta0, const Scalar& theta1, const Scalar& q, int d) {
    if (q.is_zero()) throw DegenerateQ("q = 0");
    const Scalar denom = q.pow(2) - q.pow(-2);
    if (denom.is_zero()) throw DegenerateQ("q^4 = 1");
    return (q.pow(d) * theta1 - q.pow(d - 2) * theta0) / denom;
}

std::pair<Scalar, Scalar> recover_c(const Scalar& a, const Scalar& b, const Scalar& q, int d,
                                    const Scalar& phi1) {
    const Field f = a.field();
    const Scalar qd = q.pow(d);
    const Scalar kappa =
        a * b.inv() * q.pow(d - 1) + a.inv() * b * q.pow(1 - d) + phi1 / ((q - q.inv()) * (qd - qd.inv()));
    const Scalar disc = kappa * kappa - Scalar::integer(f, 4);
    Scalar root(f);
    if (!square_root(disc, root))
        throw NoRootInField("kappa^2 - 4 has no square root in " + f.to_string());
    const Scalar two_inv = Scalar::integer(f, 2).inv();
    return {(kappa + root) * two_inv, (kappa - root) * two_inv};
}

DerivedScalars derived_scalars(const ParameterArray& p) {
    const int d = p.diameter();
    DerivedScalars out;
    auto build = [&](const std::vector<Scalar>& diag, const std::vector<Scalar>& dual) {
        std::vector<Scalar> seq;
        seq.reserve(static_cast<std::size_t>(d) + 1);
        seq.push_back(diag[0] + p.varphi[0] / (dual[0] - dual[1]));
        for (int i = 1; i <= d - 1; ++i) {
            seq.push_back(diag[static_cast<std::size_t>(i)] +
                          p.varphi[static_cast<std::size_t>(i - 1)] /
                              (dual[static_cast<std::size_t>(i)] - dual[static_cast<std::size_t>(i - 1)]) +
                          p.varphi[static_cast<std::size_t>(i)] /
                              (dual[static_cast<std::size_t>(i)] - dual[static_cast<std::size_t>(i + 1)]));
        }
        seq.push_back(diag[static_cast<std::size_t>(d)] +
                      p.varphi[static_cast<std::size_t>(d - 1)] /
                          (dual[static_cast<std::size_t>(d)] - dual[static_cast<std::size_t>(d - 1)]));
        return seq;
    };
    out.a_seq = build(p.theta, p.theta_star);
    out.a_star_seq = build(p.theta_star, p.theta);
    return out;
}

bool AWCoefficients::operator==(const AWCoefficients& o) const {
    return beta == o.beta && gamma == o.gamma && gamma_star == o.gamma_star && varrho == o.varrho &&
           varrho_star == o.varrho_star && omega == o.omega && eta == o.eta && eta_star == o.eta_star;
}

namespace {

Scalar trace_sum_of(const Scalar& x) { return x + x.inv(); }

} // namespace

AWCoefficients aw_coefficients(const QRacahTuple& t) {
    const AdmissibilityReport adm = check_pair_admissible(t);
    if (!adm.admissible())
        throw InadmissibleTuple(adm.first_failure()->name + ": " + adm.first_failure()->witness);

    const Field f = t.field();
    const Scalar qq = t.q.pow(2) - t.q.pow(-2);
    const Scalar qs = t.q - t.q.inv();
    const Scalar big_q = t.q.pow(t.d + 1) + t.q.pow(-t.d - 1);
    const Scalar sa = trace_sum_of(t.a), sb = trace_sum_of(t.b), sc = trace_sum_of(t.c);

    AWCoefficients c{
        /*beta=*/t.q.pow(2) + t.q.pow(-2),
        /*gamma=*/Scalar(f),
        /*gamma_star=*/Scalar(f),
        /*varrho=*/-(qq * qq),
        /*varrho_star=*/-(qq * qq),
        /*omega=*/-(qs * qs) * (sa * sb + sc * big_q),
        /*eta=*/qs * qq * (sc * sa + sb * big_q),
        /*eta_star=*/qs * qq * (sb * sc + sa * big_q),
    };
    if (!(c == aw_coefficients_from_array(parameter_array(t))))
        throw Error("Askey-Wilson coefficient routes disagree");
    return c;
}

AWCoefficients aw_coefficients_from_array(const ParameterArray& p) {
    const int d = p.diameter();
    const Field f = p.field();
    if (d < 3) throw InvalidArray("need diameter >= 3");

    auto ratio = [&](const std::vector<Scalar>& th, int i) {
        return (th[static_cast<std::size_t>(i - 2)] - th[static_cast<std::size_t>(i + 1)]) /
               (th[static_cast<std::size_t>(i - 1)] - th[static_cast<std::size_t>(i)]);
    };
    const Scalar beta = ratio(p.theta, 2) - Scalar::integer(f, 1);
    for (int i = 2; i <= d - 1; ++i) {
        if (ratio(p.theta, i) - Scalar::integer(f, 1) != beta ||
            ratio(p.theta_star, i) - Scalar::integer(f, 1) != beta)
            throw InvalidArray("three-term ratios are not constant");
    }

    auto second_difference = [&](const std::vector<Scalar>& th, const char* label) {
        const Scalar g = th[0] - beta * th[1] + th[2];
        for (int i = 1; i <= d - 1; ++i) {
            if (th[static_cast<std::size_t>(i - 1)] - beta * th[static_cast<std::size_t>(i)] +
                    th[static_cast<std::size_t>(i + 1)] !=
                g)
                throw InvalidArray(std::string(label) + " recurrence is not constant");
        }
        return g;
    };
    const Scalar gamma = second_difference(p.theta, "gamma");
    const Scalar gamma_star = second_difference(p.theta_star, "gamma*");

    auto quadratic_constant = [&](const std::vector<Scalar>& th, const Scalar& g, const char* label) {
        auto form = [&](int i) {
            const Scalar& x = th[static_cast<std::size_t>(i - 1)];
            const Scalar& y = th[static_cast<std::size_t>(i)];
            return x * x - beta * x * y + y * y - g * (x + y);
        };
        const Scalar v = form(1);
        for (int i = 2; i <= d; ++i)
            if (form(i) != v) throw InvalidArray(std::string(label) + " quadratic is not constant");
        return v;
    };
    const Scalar varrho = quadratic_constant(p.theta, gamma, "varrho");
    const Scalar varrho_star = quadratic_constant(p.theta_star, gamma_star, "varrho*");

    // extend the eigenvalue sequences one step past each end
    std::vector<Scalar> th(p.theta), ths(p.theta_star);
    th.insert(th.begin(), gamma + beta * p.theta[0] - p.theta[1]);
    th.push_back(gamma + beta * p.theta[static_cast<std::size_t>(d)] - p.theta[static_cast<std::size_t>(d - 1)]);
    ths.insert(ths.begin(), gamma_star + beta * p.theta_star[0] - p.theta_star[1]);
    ths.push_back(gamma_star + beta * p.theta_star[static_cast<std::size_t>(d)] -
                  p.theta_star[static_cast<std::size_t>(d - 1)]);
    auto theta_at = [&](int i) { return th[static_cast<std::size_t>(i + 1)]; };
    auto theta_star_at = [&](int i) { return ths[static_cast<std::size_t>(i + 1)]; };

    const DerivedScalars ds = derived_scalars(p);
    auto a_at = [&](int i) { return ds.a_seq[static_cast<std::size_t>(i)]; };
    auto a_star_at = [&](int i) { return ds.a_star_seq[static_cast<std::size_t>(i)]; };

    auto omega_dual = [&](int i) {
        return a_star_at(i) * (theta_at(i) - theta_at(i + 1)) +
               a_star_at(i - 1) * (theta_at(i - 1) - theta_at(i - 2)) -
               gamma_star * (theta_at(i) + theta_at(i - 1));
    };
    auto omega_primal = [&](int i) {
        return a_at(i) * (theta_star_at(i) - theta_star_at(i + 1)) +
               a_at(i - 1) * (theta_star_at(i - 1) - theta_star_at(i - 2)) -
               gamma * (theta_star_at(i) + theta_star_at(i - 1));
    };
    const Scalar omega = omega_dual(1);
    for (int i = 1; i <= d; ++i)
        if (omega_dual(i) != omega || omega_primal(i) != omega)
            throw InvalidArray("omega forms disagree");

    auto eta_at = [&](int i) {
        return a_star_at(i) * (theta_at(i) - theta_at(i - 1)) * (theta_at(i) - theta_at(i + 1)) -
               gamma_star * theta_at(i) * theta_at(i) - omega * theta_at(i);
    };
    auto eta_star_at = [&](int i) {
        return a_at(i) * (theta_star_at(i) - theta_star_at(i - 1)) *
                   (theta_star_at(i) - theta_star_at(i + 1)) -
               gamma * theta_star_at(i) * theta_star_at(i) - omega * theta_star_at(i);
    };
    const Scalar eta = eta_at(0), eta_star = eta_star_at(0);
    for (int i = 1; i <= d; ++i)
        if (eta_at(i) != eta || eta_star_at(i) != eta_star)
            throw InvalidArray("eta forms are not constant");

    return {beta, gamma, gamma_star, varrho, varrho_star, omega, eta, eta_star};
}

Z3Constants z3_constants(const QRacahTuple& t) {
    const ParameterArray p = parameter_array(t); // InadmissibleTuple on bad input
    const Field f = t.field();
    const Scalar sa = trace_sum_of(t.a), sb = trace_sum_of(t.b), sc = trace_sum_of(t.c);
    const Scalar big_q = t.q.pow(t.d + 1) + t.q.pow(-t.d - 1);
    const Scalar sq = t.q + t.q.inv();

    Z3Constants z{
        /*alpha=*/sb * sc + sa * big_q,
        /*alpha_star=*/sc * sa + sb * big_q,
        /*alpha_eps=*/sa * sb + sc * big_q,
        /*psi=*/sq * sq - big_q * big_q - sa * sa - sb * sb - sc * sc - sa * sb * sc * big_q,
        /*kappa=*/Scalar(f),
    };
    const Scalar qd = t.q.pow(t.d);
    z.kappa = t.a * t.b.inv() * t.q.pow(t.d - 1) + t.a.inv() * t.b * t.q.pow(1 - t.d) +
              p.phi[0] / ((t.q - t.q.inv()) * (qd - qd.inv()));
    return z;
}

QRacahTuple apply_generator(Generator g, const QRacahTuple& t) {
    switch (g) {
        case Generator::Star: return {t.b.inv(), t.a.inv(), t.c.inv(), t.q.inv(), t.d};
        case Generator::Eps: return {t.c.inv(), t.b.inv(), t.a.inv(), t.q.inv(), t.d};
        case Generator::Harpoon: return {t.a, t.b, t.c.inv(), t.q, t.d};
        case Generator::Down: return {t.a, t.b.inv(), t.c, t.q, t.d};
        case Generator::DDown: return {t.a.inv(), t.b, t.c, t.q, t.d};
    }
    throw Error("unknown generator");
}

QRacahTuple apply_word(const GroupWord& w, const QRacahTuple& t) {
    bool dihedral_only = true;
    for (Generator g : w.letters)
        if (g == Generator::Eps || g == Generator::Harpoon) dihedral_only = false;
    const AdmissibilityReport adm = dihedral_only ? check_pair_admissible(t) : check_triple_admissible(t);
    if (!adm.admissible())
        throw InadmissibleTuple(adm.first_failure()->name + ": " + adm.first_failure()->witness);
    QRacahTuple cur = t;
    for (Generator g : w.letters) cur = apply_generator(g, cur);
    return cur;
}

void sort_canonical(std::vector<QRacahTuple>& tuples) {
    std::sort(tuples.begin(), tuples.end(),
              [](const QRacahTuple& x, const QRacahTuple& y) { return x.text() < y.text(); });
}

std::vector<QRacahTuple> pair_equivalents(const QRacahTuple& t) {
    const AdmissibilityReport adm = check_pair_admissible(t);
    if (!adm.admissible())
        throw InadmissibleTuple(adm.first_failure()->name + ": " + adm.first_failure()->witness);
    const Scalar sd = Scalar::integer(t.field(), t.d % 2 == 0 ? 1 : -1);   // (-1)^d
    const Scalar sd1 = -sd;                                                // (-1)^{d+1}
    const Scalar ai = t.a.inv(), bi = t.b.inv(), ci = t.c.inv(), qi = t.q.inv();
    std::vector<QRacahTuple> out = {
        {t.a, t.b, t.c, t.q, t.d},
        {sd * t.a, sd * t.b, sd1 * t.c, -t.q, t.d},
        {t.a, t.b, ci, t.q, t.d},
        {sd * t.a, sd * t.b, sd1 * ci, -t.q, t.d},
        {ai, bi, ci, qi, t.d},
        {sd * ai, sd * bi, sd1 * ci, -qi, t.d},
        {ai, bi, t.c, qi, t.d},
        {sd * ai, sd * bi, sd1 * t.c, -qi, t.d},
    };
    sort_canonical(out);
    return out;
}

std::vector<QRacahTuple> triple_orbit(const QRacahTuple& t) {
    const AdmissibilityReport adm = check_triple_admissible(t);
    if (!adm.admissible())
        throw InadmissibleTuple(adm.first_failure()->name + ": " + adm.first_failure()->witness);
    std::vector<QRacahTuple> out;
    out.reserve(8);
    for (int mask = 0; mask < 8; ++mask) {
        out.push_back({(mask & 1) ? t.a.inv() : t.a, (mask & 2) ? t.b.inv() : t.b,
                       (mask & 4) ? t.c.inv() : t.c, t.q, t.d});
    }
    sort_canonical(out);
    return out;
}

TwinCase twin_case(const QRacahTuple& t) {
    const Scalar products[] = {t.a * t.b * t.c, t.a.inv() * t.b * t.c, t.a * t.b.inv() * t.c,
                               t.a * t.b * t.c.inv()};
    for (const Scalar& prod : products)
        for (int k = t.d - 1; k >= 1 - t.d; k -= 2)
            if (prod == -t.q.pow(k)) return TwinCase::Two;
    return TwinCase::Four;
}

std::vector<QRacahTuple> twins(const QRacahTuple& t) {
    const AdmissibilityReport adm = check_triple_admissible(t);
    if (!adm.admissible())
        throw InadmissibleTuple(adm.first_failure()->name + ": " + adm.first_failure()->witness);
    const Scalar ai = t.a.inv(), bi = t.b.inv(), ci = t.c.inv(), qi = t.q.inv();
    std::vector<QRacahTuple> out = {
        {t.a, t.b, t.c, t.q, t.d},
        {ai, bi, ci, qi, t.d},
    };
    if (twin_case(t) == TwinCase::Four) {
        const Scalar sd = Scalar::integer(t.field(), t.d % 2 == 0 ? 1 : -1);
        out.push_back({sd * t.a, sd * t.b, sd * t.c, -t.q, t.d});
        out.push_back({sd * ai, sd * bi, sd * ci, -qi, t.d});
    }
    sort_canonical(out);
    out.erase(std::unique(out.begin(), out.end(),
                          [](const QRacahTuple& x, const QRacahTuple& y) { return x == y; }),
              out.end());
    return out;
}

std::string HatInvariant::text() const {
    return "(" + a_hat.to_string() + "," + b_hat.to_string() + "," + c_hat.to_string() + ";" +
           q.to_string() + ")";
}

bool HatInvariant::operator==(const HatInvariant& o) const {
    return a_hat == o.a_hat && b_hat == o.b_hat && c_hat == o.c_hat && q == o.q;
}

HatInvariant hat_invariant(const QRacahTuple& t) {
    return {trace_sum_of(t.a), trace_sum_of(t.b), trace_sum_of(t.c), t.q};
}

namespace {

std::vector<Scalar> reversed(const std::vector<Scalar>& v) {
    return {v.rbegin(), v.rend()};
}

} // namespace

ParameterArray array_dual(const ParameterArray& p) {
    return {p.theta_star, p.theta, p.varphi, reversed(p.phi)};
}

ParameterArray array_down(const ParameterArray& p) {
    return {p.theta, reversed(p.theta_star), reversed(p.phi), reversed(p.varphi)};
}

ParameterArray array_ddown(const ParameterArray& p) {
    return {reversed(p.theta), p.theta_star, p.phi, p.varphi};
}

} // namespace leonard
