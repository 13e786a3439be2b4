#include <gtest/gtest.h>

#include <array>

#include "fixtures.hpp"
#include "supercoind/duality.hpp"

using namespace supercoind;

TEST(Duality, LambdaCharacter) {
    for (const auto& c : fixtures::duality_instances()) {
        Verdict v = lambda_character_check(c.env);
        EXPECT_TRUE(v.ok) << c.name << ": " << v.witness;
    }
}

TEST(Duality, PhiIsomorphism) {
    for (const auto& c : fixtures::duality_instances()) {
        MapCheck r = phi(c.env, c.rep);
        EXPECT_TRUE(r.verdict.ok) << c.name << ": " << r.verdict.witness;
    }
}

TEST(Duality, ThetaIsomorphism) {
    for (const auto& c : fixtures::duality_instances()) {
        MapCheck r = theta(c.env, c.rep);
        EXPECT_TRUE(r.verdict.ok) << c.name << ": " << r.verdict.witness;
    }
}

TEST(Duality, PsiInvariant) {
    for (const auto& c : fixtures::duality_instances()) {
        PsiCheck r = psi(c.env, c.rep);
        EXPECT_TRUE(r.verdict.ok) << c.name << ": " << r.verdict.witness;
    }
}

TEST(Duality, Comparison) {
    for (const auto& c : fixtures::duality_instances()) {
        Verdict v = comparison_check(c.env, c.rep);
        EXPECT_TRUE(v.ok) << c.name << ": " << v.witness;
    }
}

TEST(Duality, KernelDuality) {
    for (const auto& c : fixtures::duality_instances()) {
        KernelDualityCheck r = kernel_duality_check(c.env, c.rep);
        EXPECT_TRUE(r.verdict.ok) << c.name << ": " << r.verdict.witness;
    }
}

namespace {

std::vector<fixtures::Instance> abelian_shapes() {
    std::vector<fixtures::Instance> out;
    for (auto [a, b] : std::vector<std::pair<int, int>>{{2, 0}, {3, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 1}}) {
        auto e = fixtures::env(algebras::abelian(3, a, b), {});
        out.push_back({"abelian " + std::to_string(a) + "|" + std::to_string(b), e, trivial_representation(e->split())});
    }
    auto e = fixtures::env(algebras::abelian(3, 1, 2), {0, 1});
    out.push_back({"abelian 1|2, h = {e, eps1}, odd line", e,
                   character_representation(e->split(), Character::zero(2), Parity::odd)});
    auto g = fixtures::env(algebras::gl11(3), {0, 1, 2});
    out.push_back({"gl11 dual natural", g, contragredient(g->field(), fixtures::gl11_natural(g->split()))});
    return out;
}

}  // namespace

TEST(Duality, AllChecksOnAbelianShapes) {
    for (const auto& c : abelian_shapes()) {
        EXPECT_TRUE(phi(c.env, c.rep).verdict.ok) << c.name;
        EXPECT_TRUE(theta(c.env, c.rep).verdict.ok) << c.name;
        PsiCheck ps = psi(c.env, c.rep);
        EXPECT_TRUE(ps.verdict.ok) << c.name << ": " << ps.verdict.witness;
        Verdict v = comparison_check(c.env, c.rep);
        EXPECT_TRUE(v.ok) << c.name << ": " << v.witness;
    }
}

TEST(Duality, LambdaExamples) {
    auto sl = fixtures::env(algebras::sl2(5), {0, 1});
    AlgebraA A(sl);
    Vec lam = lambda_element(A);
    const Field& f = A.field();
    EXPECT_EQ(A.coind().act(sl->global().generator(0), lam), scaled(f, f.from_int(-2), lam));
    auto gl = fixtures::env(algebras::gl11(3), {0, 1, 2});
    AlgebraA B(gl);
    Vec lb = lambda_element(B);
    EXPECT_EQ(B.coind().act(gl->global().generator(0), lb), lb);
    // Lambda is the top of A: the dual basis vector of the top complement monomial, up to a unit
    Vec top = B.dual_basis(top_monomial(gl->split(), 3));
    EXPECT_EQ(rank(f, Matrix::from_columns(lb.size(), {lb, top})), 1U);
}

TEST(Duality, LambdaCharacterUnrestrictedLevels) {
    std::vector<std::pair<std::shared_ptr<const LieSuperData>, std::vector<std::size_t>>> cases{
        {algebras::abelian(3, 1, 0), {}}, {algebras::abelian(3, 1, 1), {}}, {algebras::sl2(3), {0, 1}},
        {algebras::heisenberg(3), {0}}, {algebras::gl11(3), {0, 1, 2}}};
    for (const auto& [g, h] : cases)
        for (std::uint64_t r : {0U, 1U}) {
            std::uint64_t bound = r == 0 ? 3 : 9;
            auto e = fixtures::env(g, h, Mode::unrestricted, 4 * bound);
            Verdict v = lambda_character_check(e, bound);
            EXPECT_TRUE(v.ok) << g->name(0) << " r=" << r << ": " << v.witness;
        }
}

TEST(Duality, PhiOnUnitIsLambdaHat) {
    auto e = fixtures::env(algebras::abelian(3, 1, 0), {});
    MapCheck r = phi(e, trivial_representation(e->split()));
    ASSERT_TRUE(r.verdict.ok);
    AlgebraA A(e);
    EXPECT_EQ(r.matrix.column(0), lambda_element(A));
    // delta_{e^a}(eta^2) = 2!/(2-a)! eta^{2-a}: lower triangular on the reversed basis, brute-force rank
    EXPECT_EQ(r.rank, 3U);
}

TEST(Duality, PsiExamples) {
    // h = g: Psi is the evaluation pairing with the Koszul sign of v
    auto full = fixtures::env(algebras::gl11(3), {0, 1, 2, 3});
    Matrix e11(2, 2), e22(2, 2), e12(2, 2), e21(2, 2);
    e11(0, 0) = Fp{1};
    e22(1, 1) = Fp{1};
    e12(0, 1) = Fp{1};
    e21(1, 0) = Fp{1};
    Representation nat({Parity::even, Parity::odd}, subalgebra_parities(full->split()), {e11, e22, e12, e21});
    PsiCheck pf = psi(full, nat);
    EXPECT_TRUE(pf.verdict.ok) << pf.verdict.witness;
    Matrix want(2, 2);
    want(0, 0) = Fp{1};
    want(1, 1) = Fp{2};
    EXPECT_EQ(pf.gram, want);

    // n = 0, m = 1: antidiagonal pairing of {1, zeta} with {zeta, 1}
    auto odd = fixtures::env(algebras::abelian(3, 0, 1), {});
    PsiCheck po = psi(odd, trivial_representation(odd->split()));
    EXPECT_TRUE(po.verdict.ok);
    EXPECT_TRUE(po.gram(0, 0).is_zero());
    EXPECT_TRUE(po.gram(1, 1).is_zero());
    EXPECT_FALSE(po.gram(0, 1).is_zero());
    EXPECT_FALSE(po.gram(1, 0).is_zero());

    // n = 1, p = 3: entry (a, b) is C(2, a) times the constant when a + b = 2
    auto ab = fixtures::env(algebras::abelian(3, 1, 0), {});
    PsiCheck pa = psi(ab, trivial_representation(ab->split()));
    const Field& f = ab->field();
    Fp c = f.inv(f.from_int(2));  // 1/(2!) with sign +1
    std::array<int, 3> pascal{1, 2, 1};
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b)
            EXPECT_EQ(pa.gram(a, b), a + b == 2 ? f.mul(c, f.from_int(pascal[a])) : Fp{}) << a << "," << b;
}

TEST(Duality, BerezinIntegralNeedsDivergence) {
    auto sl = fixtures::env(algebras::sl2(3), {0, 1});
    AlgebraA A(sl);
    BerezinLine om = berezin_line(A);
    EXPECT_TRUE(berezin_invariance_check(A, om).ok);
    // without the divergence term the integral of delta_h does not vanish on Lambda
    Matrix dh = delta_matrix(A, 0);
    EXPECT_FALSE(berezin_integral(A, apply(A.field(), dh, lambda_element(A))).is_zero());
    // the vector L_delta_f(Lambda w) is nonzero below the top
    EXPECT_FALSE(is_zero(lie_derivative_of_top(A, om, 2)));
}

TEST(Duality, ThetaOnUnit) {
    auto sl = fixtures::env(algebras::sl2(3), {0, 1});
    Representation r = fixtures::sl2_borel_two_dim(sl->split());
    MapCheck t = theta(sl, r);
    ASSERT_TRUE(t.verdict.ok);
    CoinducedModule co(sl, contragredient(sl->field(), r));
    InducedModule ind(sl, r);
    ASSERT_TRUE(is_unit_monomial(ind.window()[0]));
    for (std::size_t c = 0; c < co.dim(); ++c)
        for (std::size_t k = 0; k < 2; ++k) EXPECT_EQ(t.matrix(ind.index(0, k), c), co.value(unit_vector(co.dim(), c), 0)[k]);
}

TEST(Duality, ComparisonWhenSubalgebraIsEverything) {
    auto full = fixtures::env(algebras::sl2(3), {0, 1, 2});
    Verdict v = comparison_check(full, trivial_representation(full->split()));
    EXPECT_TRUE(v.ok) << v.witness;
}

TEST(Duality, AnnihilatorExamples) {
    auto ab = fixtures::env(algebras::abelian(3, 1, 0), {});
    CoinducedModule co(ab, trivial_representation(ab->split()));
    IdealBasis I = annihilator(ab->global(), co.as_module());
    EXPECT_EQ(I.ambient.size(), 3U);
    EXPECT_EQ(I.basis.dim(), 0U);

    auto sl = fixtures::env(algebras::sl2(3), {0, 1});
    CoinducedModule cs(sl, trivial_representation(sl->split()));
    FiniteModule m = cs.as_module();
    IdealBasis base = annihilator(sl->global(), m);
    EXPECT_TRUE(two_sided_check(sl->global(), base).ok);
    std::vector<Matrix> gens = m.generators();
    gens[1] = Matrix(m.dim(), m.dim());
    IdealBasis corrupted = annihilator(sl->global(), FiniteModule(sl->split().algebra_ptr(), m.parities(), gens));
    EXPECT_GT(corrupted.basis.dim(), base.basis.dim());
}

TEST(Duality, KernelDualityReverseRun) {
    for (const auto& c : fixtures::duality_instances()) {
        KernelDualityCheck r = kernel_duality_check(c.env, reverse_twist(c.env->split(), c.rep));
        EXPECT_TRUE(r.verdict.ok) << c.name << ": " << r.verdict.witness;
    }
}
