#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "generators.hpp"
#include "supercoind/truncated.hpp"

using namespace supercoind;

namespace {

std::shared_ptr<const SplitEnveloping> unrestricted(std::shared_ptr<const LieSuperData> g, std::vector<std::size_t> h) {
    return fixtures::env(std::move(g), std::move(h), Mode::unrestricted, 200);
}

UElement mono(const Field& f, Monomial m) { return UElement(std::move(m), f.one()); }

}  // namespace

TEST(Truncated, TopMonomialReturnsMultipleOfV) {
    auto e = unrestricted(algebras::abelian(3, 1, 1), {});
    const Field& f = e->field();
    for (unsigned r : {0U, 1U}) {
        TruncatedPhi T(e, trivial_representation(e->split()), r);
        std::uint32_t top = static_cast<std::uint32_t>(level_bound(3, r) - 1);
        Vec val = T.eval(e->global().one(), Vec{f.one()}, mono(f, {top, 1}));
        EXPECT_FALSE(val[0].is_zero()) << r;
        // missing the odd factor
        EXPECT_TRUE(T.eval(e->global().one(), Vec{f.one()}, mono(f, {top, 0}))[0].is_zero()) << r;
    }
}

TEST(Truncated, PreconditionOutsideFiltration) {
    auto e = unrestricted(algebras::abelian(3, 1, 0), {});
    TruncatedPhi T(e, trivial_representation(e->split()), 0);
    const Field& f = e->field();
    EXPECT_THROW((void)T.eval(mono(f, {2}), Vec{f.one()}, mono(f, {1})), std::invalid_argument);
    EXPECT_THROW(TruncatedPhi(fixtures::env(algebras::abelian(3, 1, 0), {}), trivial_representation(e->split()), 0),
                 std::invalid_argument);
}

TEST(Truncated, BalanceSampled) {
    std::mt19937 rng(7);
    auto e = unrestricted(algebras::sl2(3), {0, 1});
    const auto& s = e->split();
    const Field& f = e->field();
    for (unsigned r : {0U, 1U}) {
        for (const Representation& pi : {trivial_representation(s), fixtures::sl2_borel_two_dim(s)}) {
            TruncatedPhi T(e, pi, r);
            std::uint64_t bound = T.coind().bound();
            int checked = 0;
            for (int trial = 0; trial < 60; ++trial) {
                Monomial a = testgen::random_complement_monomial(rng, s, bound);
                Monomial b = testgen::random_cofactor(rng, s, a, bound);
                Vec v = testgen::random_vector(rng, f, pi.dim());
                for (std::size_t h = 0; h < s.h_dim(); ++h) {
                    UElement u = mono(f, a), w = mono(f, b);
                    UElement wuh = e->global().multiply(e->global().multiply(w, u), e->global().generator(s.h_indices()[h]));
                    if (!T.in_filtration(wuh)) continue;
                    Verdict vd = balance_check(T, u, v, h, w);
                    EXPECT_TRUE(vd.ok) << vd.witness;
                    ++checked;
                }
            }
            EXPECT_GT(checked, 50);
        }
    }
}

TEST(Truncated, IotaAbelianExample) {
    auto e = unrestricted(algebras::abelian(3, 1, 0), {});
    const Field& f = e->field();
    Representation k = trivial_representation(e->split());
    TruncatedPhi T0(e, k, 0), T1(e, k, 1);
    Verdict v = iota_compat_check(T0, T1, e->global().one(), Vec{f.one()}, mono(f, {8}));
    EXPECT_TRUE(v.ok) << v.witness;
    // both sides: Phi^1(e^8) is the (p-1)!-scaled top coordinate
    EXPECT_FALSE(T1.eval(e->global().one(), Vec{f.one()}, mono(f, {8}))[0].is_zero());
}

TEST(Truncated, IotaPurelyOdd) {
    auto e = unrestricted(algebras::abelian(3, 0, 2), {});
    const Field& f = e->field();
    Representation k = trivial_representation(e->split());
    TruncatedPhi T0(e, k, 0), T1(e, k, 1);
    EXPECT_EQ(iota_factor(T1.algebra(), 0), T1.algebra().one());
    for (std::uint32_t a : {0U, 1U})
        for (std::uint32_t b : {0U, 1U}) {
            Verdict v = iota_compat_check(T0, T1, e->global().one(), Vec{f.one()}, mono(f, {a, b}));
            EXPECT_TRUE(v.ok) << v.witness;
        }
}

TEST(Truncated, IotaSampled) {
    std::mt19937 rng(11);
    for (auto [g, h] : std::vector<std::pair<std::shared_ptr<const LieSuperData>, std::vector<std::size_t>>>{
             {algebras::sl2(3), {0, 1}}, {algebras::abelian(3, 1, 1), {}}}) {
        auto e = unrestricted(g, h);
        const auto& s = e->split();
        const Field& f = e->field();
        Representation k = trivial_representation(s);
        TruncatedPhi T0(e, k, 0), T1(e, k, 1);
        int checked = 0;
        for (int trial = 0; trial < 80; ++trial) {
            Monomial a = testgen::random_complement_monomial(rng, s, 3);
            Monomial b = testgen::random_cofactor(rng, s, a, 9);
            UElement u = mono(f, a), w = mono(f, b);
            if (!T1.in_filtration(e->global().multiply(w, u))) continue;
            Verdict v;
            try {
                v = iota_compat_check(T0, T1, u, Vec{f.one()}, w);
            } catch (const std::invalid_argument&) {
                continue;
            }
            EXPECT_TRUE(v.ok) << v.witness << " a=" << testing::PrintToString(a) << " b=" << testing::PrintToString(b);
            ++checked;
        }
        EXPECT_GT(checked, 20);
    }
}

TEST(Truncated, InjectivityWitnesses) {
    auto e = unrestricted(algebras::abelian(3, 1, 0), {});
    const Field& f = e->field();
    TruncatedPhi T(e, trivial_representation(e->split()), 0);
    for (std::uint32_t a = 0; a < 3; ++a) {
        InjectivityWitness w = phi_r_injectivity_check(T, {{{a}, Vec{f.one()}}});
        EXPECT_TRUE(w.verdict.ok);
        EXPECT_TRUE(w.from_complement);
        EXPECT_EQ(w.w, Monomial{2 - a});
    }
    EXPECT_TRUE(phi_r_injectivity_check(T, {{{1}, Vec{Fp{}}}}).vacuous);

    std::mt19937 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<InducedTerm> terms;
        for (int k = 0; k < 3; ++k) terms.push_back({{static_cast<std::uint32_t>(rng() % 3)}, testgen::random_vector(rng, f, 1)});
        InjectivityWitness w = phi_r_injectivity_check(T, terms);
        // the terms may cancel; a nonzero sum always has a witness
        EXPECT_TRUE(w.verdict.ok) << w.verdict.witness;
    }
}

TEST(Truncated, EquivarianceObserved) {
    auto e = unrestricted(algebras::sl2(3), {0, 1});
    TruncatedPhi T(e, trivial_representation(e->split()), 0);
    EquivarianceObservation o = phi_r_equivariance(T, Vec{e->field().one()});
    EXPECT_GT(o.agree, 0U);
}
