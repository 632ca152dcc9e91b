#include "ahodge/form.hpp"
#include "ahodge/linalg.hpp"
#include "ahodge/random.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

using namespace ahodge;

namespace {

Rational R(long n, long d = 1) { return detail::q(n, d); }

// sign of a permutation by cycle counting, independent of the inversion count used in wedge_generators
int cycle_sign(std::vector<int> seq) {
    std::vector<int> sorted = seq;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> perm(seq.size());
    for (std::size_t i = 0; i < seq.size(); ++i)
        perm[i] = static_cast<int>(std::find(sorted.begin(), sorted.end(), seq[i]) - sorted.begin());
    std::vector<bool> seen(seq.size());
    int sign = 1;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
            seen[j] = true;
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

Form constant(const BasisIndex& b, const Scalar& c, int dims = 3) { return Form::generator(b, c, dims); }

BasisIndex G(std::initializer_list<int> I, std::initializer_list<int> J) {
    return {indices_mask(std::vector<int>(I)), indices_mask(std::vector<int>(J))};
}

}  // namespace

TEST(Scalar, ParsesAndFormatsRationals) {
    EXPECT_EQ(parse_rational("1/2"), R(1, 2));
    EXPECT_EQ(parse_rational("-3/7"), R(-3, 7));
    EXPECT_EQ(parse_rational("−3/7"), R(-3, 7));
    EXPECT_EQ(parse_rational("4/6"), R(2, 3));
    EXPECT_EQ(format_rational(R(6, 4)), "3/2");
    EXPECT_EQ(format_rational(R(-5)), "-5");
    EXPECT_THROW(parse_rational("1/0"), ParseError);
    EXPECT_THROW(parse_rational("x"), ParseError);
    EXPECT_THROW(parse_rational("0.5"), ParseError);
}

TEST(Scalar, GaussianArithmetic) {
    Scalar i = Scalar::i();
    EXPECT_EQ(i * i, Scalar(-1));
    Scalar z(R(1, 2), R(-3));
    EXPECT_EQ(z * z.conj(), Scalar(z.norm2()));
    EXPECT_EQ((z / z), Scalar(1));
    EXPECT_EQ(parse_scalar(format_scalar(z)), z);
    EXPECT_EQ(parse_scalar("2i"), Scalar(R(0), R(2)));
    EXPECT_EQ(parse_scalar("1/2+-3i"), z);
    EXPECT_THROW(Scalar(1) / Scalar(), std::domain_error);
}

TEST(TrigPoly, CosineSquaredIsHalfPlusHalfCosDouble) {
    // cos(2 pi x) = (X[1] + X[-1]) / 2 in one variable
    TrigPoly c = TrigPoly::mode({1}, Scalar(R(1, 2))) + TrigPoly::mode({-1}, Scalar(R(1, 2)));
    TrigPoly c2 = c * c;
    EXPECT_EQ(c2.coeff({0}), Scalar(R(1, 2)));
    EXPECT_EQ(c2.coeff({2}), Scalar(R(1, 4)));
    EXPECT_EQ(c2.coeff({-2}), Scalar(R(1, 4)));
    EXPECT_EQ(c2.size(), 3u);
    EXPECT_EQ(tp_integrate(c2), Scalar(R(1, 2)));
}

TEST(TrigPoly, ConjugationReflectsModes) {
    TrigPoly f = TrigPoly::mode({1, -2}, Scalar(R(1), R(2)));
    TrigPoly g = tp_conj(f);
    EXPECT_EQ(g.coeff({-1, 2}), Scalar(R(1), R(-2)));
    EXPECT_TRUE(tp_conj(g) == f);
    EXPECT_EQ(tp_integrate(f * tp_conj(f)), Scalar(5));
}

TEST(TrigPoly, BoxModesAreLexicographic) {
    auto modes = box_modes(2, 1);
    ASSERT_EQ(modes.size(), 9u);
    EXPECT_TRUE(std::is_sorted(modes.begin(), modes.end()));
    EXPECT_EQ(modes.front(), (ModeIndex{-1, -1}));
    EXPECT_EQ(box_modes(3, 2).size(), 125u);
}

TEST(Form, WedgeSignsMatchPermutationParity) {
    std::mt19937_64 rng(11);
    auto all = full_basis(3);
    for (int trial = 0; trial < 300; ++trial) {
        const auto& a = all[rng() % all.size()];
        const auto& b = all[rng() % all.size()];
        auto [sign, idx] = wedge_generators(a, b);
        if ((a.I & b.I) || (a.J & b.J)) {
            EXPECT_EQ(sign, 0);
            continue;
        }
        std::vector<int> seq;
        for (int i : mask_indices(a.I)) seq.push_back(i);
        for (int j : mask_indices(a.J)) seq.push_back(10 + j);
        for (int i : mask_indices(b.I)) seq.push_back(i);
        for (int j : mask_indices(b.J)) seq.push_back(10 + j);
        EXPECT_EQ(sign, cycle_sign(seq));
        EXPECT_EQ(idx.I, a.I | b.I);
        EXPECT_EQ(idx.J, a.J | b.J);
    }
}

TEST(Form, WedgeIsGradedCommutativeAndAssociative) {
    std::mt19937_64 rng(5);
    RandomFormOptions o;
    o.mode_radius = 1;
    o.max_terms = 2;
    for (int trial = 0; trial < 40; ++trial) {
        int p1 = static_cast<int>(rng() % 3), q1 = static_cast<int>(rng() % 3);
        int p2 = static_cast<int>(rng() % 2), q2 = static_cast<int>(rng() % 2);
        Form a = random_form_on(rng, basis_of(2, p1, q1), 2, o);
        Form b = random_form_on(rng, basis_of(2, p2, q2), 2, o);
        Form c = random_form_on(rng, basis_of(2, 0, 1), 2, o);
        int sign = ((p1 + q1) * (p2 + q2)) % 2 ? -1 : 1;
        EXPECT_EQ(wedge(a, b), wedge(b, a) * Scalar(sign));
        EXPECT_EQ(wedge(wedge(a, b), c), wedge(a, wedge(b, c)));
    }
}

TEST(Form, ConjugationOfGenerators) {
    // conj(phi^1 ^ phibar^2) = phibar^1 ^ phi^2 = -phi^2 ^ phibar^1
    Form a = constant(G({1}, {2}), Scalar(1));
    EXPECT_EQ(form_conj(a), constant(G({2}, {1}), Scalar(-1)));
    // conj(phi^{12}) = phibar^{12}
    EXPECT_EQ(form_conj(constant(G({1, 2}, {}), Scalar::i())), constant(G({}, {1, 2}), -Scalar::i()));
    // conj(phi^{1 2 1bar}) = phibar^{1 2} ^ phi^1 = phi^1 ^ phibar^{12}
    EXPECT_EQ(form_conj(constant(G({1, 2}, {1}), Scalar(1))), constant(G({1}, {1, 2}), Scalar(1)));
}

TEST(Form, ConjugationIsAnInvolutionCompatibleWithWedge) {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 30; ++trial) {
        Form a = random_form_on(rng, full_basis(2), 3);
        Form b = random_form_on(rng, full_basis(2), 3);
        EXPECT_EQ(form_conj(form_conj(a)), a);
        EXPECT_EQ(form_conj(wedge(a, b)), wedge(form_conj(a), form_conj(b)));
    }
}

TEST(Form, TextRoundTrip) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        Form a = random_form_on(rng, full_basis(2), 4);
        EXPECT_EQ(parse_form(format_form(a, 4)), a);
    }
    EXPECT_EQ(parse_form("1*X[0,0,0]*w[2,1;]"), constant(G({1, 2}, {}), Scalar(-1)));
    EXPECT_TRUE(parse_form("0").is_zero());
    EXPECT_THROW(parse_form("1*X[0]*w[1,1;]"), std::exception);
    EXPECT_THROW(parse_form("1*w[1;]"), ParseError);
}

TEST(Form, BasisOrderIsGraded) {
    auto b = full_basis(2);
    ASSERT_EQ(b.size(), 16u);
    EXPECT_TRUE(std::is_sorted(b.begin(), b.end()));
    EXPECT_EQ(basis_of(2, 1, 1).size(), 4u);
    EXPECT_EQ(format_basis(b.back()), "w[1,2;1,2]");
}

TEST(Form, HermitianPairing) {
    std::array<Rational, 2> norms{R(2), R(1, 3)};
    Form a = constant(G({1}, {2}), Scalar::i());
    EXPECT_EQ(l2_inner(a, a, norms), Scalar(R(2, 3)));
    Form b = Form::generator(G({1}, {}), TrigPoly::mode({1, 0, 0}, Scalar(1)));
    Form c = Form::generator(G({1}, {}), TrigPoly::mode({0, 1, 0}, Scalar(1)));
    EXPECT_TRUE(l2_inner(b, c, norms).is_zero());
    EXPECT_EQ(l2_inner(b, b * Scalar::i(), norms), Scalar(R(0), R(-2)));
}

TEST(Linalg, NullspaceOfKnownMatrix) {
    // [[1, 2, 3], [2, 4, 6]] has kernel x + 2y + 3z = 0; the basis is the reduced echelon form of that plane
    Matrix a = Matrix::from_rows({{1, 2, 3}, {2, 4, 6}}, 3);
    auto ns = nullspace(a);
    ASSERT_EQ(ns.size(), 2u);
    EXPECT_EQ(ns[0], (Vector{1, 0, Scalar(R(-1, 3))}));
    EXPECT_EQ(ns[1], (Vector{0, 1, Scalar(R(-2, 3))}));
    EXPECT_EQ(rank(a), 1u);
}

TEST(Linalg, GaussianKernelAndDeterminant) {
    Scalar i = Scalar::i();
    // [[1, i], [i, -1]] is singular with kernel (1, i)
    Matrix a = Matrix::from_rows({{1, i}, {i, -1}}, 2);
    EXPECT_TRUE(determinant(a).is_zero());
    auto ns = nullspace(a);
    ASSERT_EQ(ns.size(), 1u);
    EXPECT_EQ(ns[0], (Vector{1, i}));
    Matrix b = Matrix::from_rows({{2, i}, {1, 3}}, 2);
    EXPECT_EQ(determinant(b), Scalar(6) - i);
    auto x = solve(b, {Scalar(6) - i, Scalar(0)});
    ASSERT_TRUE(x);
    EXPECT_EQ((*x)[0] * Scalar(2) + (*x)[1] * i, Scalar(6) - i);
}

TEST(Linalg, FastNullspaceAgreesWithExact) {
    std::mt19937_64 rng(21);
    RandomFormOptions o;
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
        Matrix a(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                if (rng() % 3) a(i, j) = random_scalar(rng, o);
        if (trial % 4 == 0 && r > 1)
            for (std::size_t j = 0; j < c; ++j) a(r - 1, j) = a(0, j) * Scalar(R(1), R(1, 2));
        EXPECT_EQ(nullspace_fast(a), nullspace(a));
        for (const auto& v : nullspace(a)) {
            for (std::size_t i = 0; i < r; ++i) {
                Scalar s;
                for (std::size_t j = 0; j < c; ++j) s += a(i, j) * v[j];
                EXPECT_TRUE(s.is_zero());
            }
        }
    }
}

TEST(Linalg, ModPImageOfI) {
    // the residue used for i squares to -1
    auto one = detail::rational_mod_p(R(1));
    ASSERT_TRUE(one);
    std::uint64_t root = detail::pow_mod(3, (detail::kModP - 1) / 4);
    EXPECT_EQ(root * root % detail::kModP, detail::kModP - 1);
}
