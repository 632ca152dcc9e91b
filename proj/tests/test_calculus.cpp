#include "ahodge/calculus.hpp"
#include "ahodge/random.hpp"

#include <gtest/gtest.h>

using namespace ahodge;

namespace {

Rational R(long n, long d = 1) { return detail::q(n, d); }

Form gen_form(const Model& m, std::initializer_list<int> I, std::initializer_list<int> J, const TrigPoly& f) {
    return Form::generator(gen(I, J), f);
}

std::vector<Model> builtins() { return {builtin_kt(1), builtin_kt(R(1, 2)), builtin_hyperelliptic(), builtin_torus4()}; }

Matrix scaled_identity(std::size_t n, const Rational& s) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(s);
    return m;
}

bool same(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!(a(i, j) == b(i, j))) return false;
    return true;
}

}  // namespace

TEST(Differential, FunctionsOnKodairaThurston) {
    // d chi = V1 chi phi^1 + V2 chi phi^2 + Vbar1 chi phibar^1 + Vbar2 chi phibar^2 for a dual frame
    Model m = builtin_kt(1);
    Scalar i = Scalar::i();
    ModeIndex k{1, -2, 3};
    TrigPoly chi = TrigPoly::mode(k);
    Form expected = gen_form(m, {1}, {}, chi * (i - Scalar(2))) + gen_form(m, {2}, {}, chi * (Scalar(3) * i)) +
                    gen_form(m, {}, {1}, chi * (i + Scalar(2))) + gen_form(m, {}, {2}, chi * (Scalar(3) * i));
    EXPECT_EQ(apply_d(m, Form::function(chi)), expected);
    EXPECT_EQ(del(m, Form::function(chi)), expected.part(1, 0));
    EXPECT_EQ(delbar(m, Form::function(chi)), expected.part(0, 1));
}

TEST(Differential, ComponentsOfPhi2OnKodairaThurston) {
    Model m = builtin_kt(1);
    Form phi2 = Form::generator(holo_gen(2), Scalar(1), 3);
    TrigPoly two = TrigPoly::constant(Scalar(2), 3);
    EXPECT_EQ(mubar(m, phi2), gen_form(m, {}, {1, 2}, -two));
    EXPECT_EQ(del(m, phi2), gen_form(m, {1, 2}, {}, two));
    EXPECT_EQ(delbar(m, phi2), gen_form(m, {1}, {2}, two) + gen_form(m, {2}, {1}, two));
    EXPECT_TRUE(mu(m, phi2).is_zero());
}

TEST(Differential, LeibnizRule) {
    std::mt19937_64 rng(17);
    for (const auto& m : builtins())
        for (int t = 0; t < 15; ++t) {
            int p = static_cast<int>(rng() % 2), q = static_cast<int>(rng() % 2);
            Form a = random_form(rng, m, p, q);
            Form b = random_mixed_form(rng, m);
            Scalar sign((p + q) % 2 ? -1 : 1);
            EXPECT_EQ(apply_d(m, wedge(a, b)), wedge(apply_d(m, a), b) + wedge(a, apply_d(m, b)) * sign) << m.name();
        }
}

TEST(Differential, RealOperatorCommutesWithConjugation) {
    std::mt19937_64 rng(23);
    for (const auto& m : builtins())
        for (int t = 0; t < 10; ++t) {
            Form a = random_mixed_form(rng, m);
            EXPECT_EQ(form_conj(apply_d(m, a)), apply_d(m, form_conj(a)));
            EXPECT_EQ(form_conj(del(m, a)), delbar(m, form_conj(a)));
            EXPECT_EQ(form_conj(mu(m, a)), mubar(m, form_conj(a)));
        }
}

TEST(Adjoints, ExactOnRandomPairs) {
    std::mt19937_64 rng(31);
    const OperatorKind ops[] = {OperatorKind::d, OperatorKind::del, OperatorKind::delbar, OperatorKind::mu, OperatorKind::mubar};
    for (const auto& m : builtins())
        for (int t = 0; t < 20; ++t) {
            Form a = random_mixed_form(rng, m), b = random_mixed_form(rng, m);
            for (auto op : ops)
                EXPECT_EQ(l2_inner(apply_operator(m, a, op), b, m.norms()), l2_inner(a, adjoint(m, b, op), m.norms()))
                    << m.name() << " " << to_string(op);
        }
}

TEST(Adjoints, ThetaIsCoclosedOnHyperelliptic) {
    Model m = builtin_hyperelliptic();
    EXPECT_TRUE(d_star(m, hyperelliptic_e(4)).is_zero());
    EXPECT_TRUE(apply_d(m, hyperelliptic_e(4)).is_zero());
    EXPECT_FALSE(d_star(m, hyperelliptic_e(1)).is_zero() && apply_d(m, hyperelliptic_e(1)).is_zero());
}

TEST(Laplacians, KahlerTorusIdentity) {
    // On the flat torus lap_bc = lap_delbar^2 + del* del + delbar* delbar and lap_delbar = lap_d / 2.
    Model m = builtin_torus4();
    std::mt19937_64 rng(2);
    for (int t = 0; t < 10; ++t) {
        Form a = random_mixed_form(rng, m);
        Form ld = laplacian(m, a, OperatorKind::lap_d)[2];
        Form lb = laplacian(m, a, OperatorKind::lap_delbar)[2];
        EXPECT_EQ(lb * Scalar(2), ld);
        EXPECT_EQ(laplacian(m, a, OperatorKind::lap_del)[2], lb);
        auto bc = laplacian(m, a, OperatorKind::lap_bc);
        Form lb2 = laplacian(m, lb, OperatorKind::lap_delbar)[2];
        EXPECT_EQ(bc[4], lb2);
        EXPECT_EQ(bc[2], del_star(m, del(m, a)) + delbar_star(m, delbar(m, a)));
    }
    // |phi^a| = 1 makes |dx_j|^2 = 1/2, so Delta exp(2 pi i <k, x>) = 2 pi^2 |k|^2 exp(2 pi i <k, x>)
    ModeIndex k{1, 2, 0, -1};
    Form f = Form::function(TrigPoly::mode(k));
    EXPECT_EQ(laplacian(m, f, OperatorKind::lap_d)[2], f * Scalar(2 * 6));
}

TEST(Laplacians, HarmonicRepresentativesOnKodairaThurston) {
    Model m = builtin_kt(1);
    for (auto b : {gen({1}, {1}), gen({2}, {2})}) {
        Form a = Form::generator(b, Scalar(1), 3);
        EXPECT_TRUE(is_zero(laplacian(m, a, OperatorKind::lap_bc)));
        EXPECT_TRUE(is_zero(laplacian(m, a, OperatorKind::lap_delbar)));
    }
    // phi^2 is not delbar-closed so it is not Bott-Chern harmonic
    EXPECT_FALSE(is_zero(laplacian(m, Form::generator(holo_gen(2), Scalar(1), 3), OperatorKind::lap_bc)));
}

TEST(Laplacians, StarIntertwinesBottChernAndAeppli) {
    std::mt19937_64 rng(8);
    for (const auto& m : builtins())
        for (int t = 0; t < 8; ++t) {
            Form a = random_mixed_form(rng, m);
            auto lhs = laplacian(m, a, OperatorKind::lap_bc);
            auto rhs = laplacian(m, star(m, a), OperatorKind::lap_aeppli);
            for (auto& [deg, f] : lhs) EXPECT_EQ(star(m, f), rhs[deg]) << m.name();
        }
}

TEST(Symbols, ClosedFormsOnEveryModel) {
    std::mt19937_64 rng(7);
    for (const auto& m : builtins())
        for (int t = 0; t < 10; ++t) {
            Covector xi = random_covector(rng, m.n());
            if (xi.is_zero()) continue;
            Rational x2 = xi.norm2(m.norms());
            for (int p = 0; p <= 2; ++p)
                for (int q = 0; q <= 2; ++q) {
                    std::size_t dim = basis_of(2, p, q).size();
                    EXPECT_TRUE(same(principal_symbol(m, OperatorKind::lap_d, p, q, xi), scaled_identity(dim, x2)));
                    EXPECT_TRUE(same(principal_symbol(m, OperatorKind::lap_delbar, p, q, xi), scaled_identity(dim, x2 / 2)));
                    EXPECT_TRUE(same(principal_symbol(m, OperatorKind::lap_del, p, q, xi), scaled_identity(dim, x2 / 2)));
                    EXPECT_TRUE(same(principal_symbol(m, OperatorKind::lap_bc, p, q, xi), scaled_identity(dim, x2 * x2 / 4)));
                    EXPECT_TRUE(same(principal_symbol(m, OperatorKind::lap_aeppli, p, q, xi), scaled_identity(dim, x2 * x2 / 4)));
                }
        }
}

TEST(Symbols, FirstOrderShapes) {
    Model m = builtin_kt(1);
    Covector xi{{Scalar(1), Scalar(0)}};
    Matrix s = principal_symbol(m, OperatorKind::delbar, 0, 0, xi);
    ASSERT_EQ(s.rows(), 2u);
    ASSERT_EQ(s.cols(), 1u);
    // i xi^{0,1} = i phibar^1
    EXPECT_EQ(s(0, 0), Scalar::i());
    EXPECT_TRUE(s(1, 0).is_zero());
    EXPECT_THROW(principal_symbol(m, OperatorKind::mu, 1, 0, xi), std::invalid_argument);
}

TEST(Symbols, EllipticityReport) {
    for (const auto& m : builtins()) {
        auto r = ellipticity_check(m, OperatorKind::lap_bc, 20, 7);
        EXPECT_TRUE(r.all_invertible);
        EXPECT_TRUE(r.L_definite);
        EXPECT_EQ(r.L_sign, 1);
        EXPECT_EQ(r.L_min_ratio, R(1, 2));
    }
    EXPECT_THROW(ellipticity_check(builtin_kt(1), OperatorKind::mubar, 5, 1), std::invalid_argument);
}

TEST(Diagnostics, KodairaThurstonIsAlmostKahlerAndGauduchon) {
    Model m = builtin_kt(1);
    EXPECT_TRUE(gauduchon_defect(m).is_zero());
    auto r = lck_check(m, Form());
    EXPECT_TRUE(r.almost_kahler);
    EXPECT_TRUE(r.d_omega.is_zero());
}

TEST(Diagnostics, HyperellipticIsStrictlyLocallyConformallyAlmostKahler) {
    Model m = builtin_hyperelliptic();
    auto r = lck_check(m, hyperelliptic_e(4));
    EXPECT_FALSE(r.almost_kahler);
    EXPECT_TRUE(r.d_omega_eq_theta_omega);
    EXPECT_TRUE(r.theta_closed);
    EXPECT_TRUE(r.theta_harmonic_nonzero);
    EXPECT_TRUE(gauduchon_defect(m).is_zero());
    EXPECT_FALSE(lck_check(m, hyperelliptic_e(3)).d_omega_eq_theta_omega);
}

TEST(Diagnostics, AnticommutatorVanishesOnListedBidegrees) {
    // del delbar + delbar del = 0 on (n - q, n - p) for the listed (p, q)
    const std::vector<std::pair<int, int>> listed{{0, 0}, {2, 2}, {2, 0}, {0, 2}, {1, 0}, {0, 1}, {1, 1}};
    for (const auto& m : builtins()) {
        for (auto [p, q] : listed) EXPECT_TRUE(del_delbar_anticommute(m, 2 - q, 2 - p)) << m.name() << " " << p << q;
    }
    // and fails in general on (1,0)
    EXPECT_FALSE(del_delbar_anticommute(builtin_kt(1), 1, 0));
    EXPECT_TRUE(del_delbar_anticommute(builtin_torus4(), 1, 0));
}
