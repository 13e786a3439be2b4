#include <gtest/gtest.h>

#include <map>
#include <random>
#include <tuple>

#include "generators.hpp"
#include "supercoind/algebras.hpp"
#include "supercoind/enveloping.hpp"

using namespace supercoind;

namespace {

Monomial mono(std::initializer_list<std::uint32_t> e) { return Monomial(e); }

using Triple = std::map<std::tuple<Monomial, Monomial, Monomial>, Fp>;

void add_to(const Field& f, Triple& t, const std::tuple<Monomial, Monomial, Monomial>& k, Fp c) {
    Fp& slot = t[k];
    slot = f.add(slot, c);
    if (slot.is_zero()) t.erase(k);
}

Triple coassoc_left(const Enveloping& U, const Monomial& m) {
    Triple out;
    for (auto cp_k = U.coproduct(m); const auto& [k, c] : cp_k.terms())
        for (auto cp_k2 = U.coproduct(k.first); const auto& [k2, c2] : cp_k2.terms())
            add_to(U.field(), out, {k2.first, k2.second, k.second}, U.field().mul(c, c2));
    return out;
}

Triple coassoc_right(const Enveloping& U, const Monomial& m) {
    Triple out;
    for (auto cp_k = U.coproduct(m); const auto& [k, c] : cp_k.terms())
        for (auto cp_k2 = U.coproduct(k.second); const auto& [k2, c2] : cp_k2.terms())
            add_to(U.field(), out, {k.first, k2.first, k2.second}, U.field().mul(c, c2));
    return out;
}

}  // namespace

TEST(Multiply, UnitIsNeutral) {
    auto g = algebras::sl2(5);
    Enveloping U(g, Mode::restricted);
    std::mt19937 rng(1);
    for (int t = 0; t < 20; ++t) {
        UElement u = testgen::random_element(rng, U);
        EXPECT_EQ(U.multiply(U.one(), u), u);
        EXPECT_EQ(U.multiply(u, U.one()), u);
    }
}

TEST(Multiply, Sl2EF) {
    auto g = algebras::sl2(5);
    const Field& f = g->field();
    // normal order f, e, h: e f = f e + h
    Enveloping U(g, Mode::unrestricted, {2, 1, 0});
    UElement expect(mono({0, 1, 1}), f.one());
    expect.add(f, mono({1, 0, 0}), f.one());
    EXPECT_EQ(U.multiply(U.generator(1), U.generator(2)), expect);
    // global order h, e, f: f e = e f - h
    Enveloping G(g, Mode::unrestricted);
    UElement expect2(mono({0, 1, 1}), f.one());
    expect2.add(f, mono({1, 0, 0}), f.neg(f.one()));
    EXPECT_EQ(G.multiply(G.generator(2), G.generator(1)), expect2);
}

TEST(Multiply, Gl11OddSwap) {
    auto g = algebras::gl11(5);
    const Field& f = g->field();
    Enveloping U(g, Mode::unrestricted, {0, 1, 3, 2});
    UElement expect(mono({0, 0, 1, 1}), f.neg(f.one()));
    expect.add(f, mono({1, 0, 0, 0}), f.one());
    expect.add(f, mono({0, 1, 0, 0}), f.one());
    EXPECT_EQ(U.multiply(U.generator(2), U.generator(3)), expect);
}

TEST(Multiply, RestrictedPPower) {
    auto g = algebras::sl2(5);
    Enveloping U(g, Mode::restricted);
    EXPECT_EQ(U.multiply(U.monomial(mono({4, 0, 0})), U.generator(0)), U.generator(0));
    // e^5 = 0
    EXPECT_TRUE(U.multiply(U.monomial(mono({0, 4, 0})), U.generator(1)).is_zero());
}

TEST(Multiply, OddSquareIsHalfBracket) {
    auto g = algebras::heisenberg(3);
    const Field& f = g->field();
    Enveloping U(g, Mode::unrestricted);
    // (eps1 + eps2)^2 = [eps1, eps2] = z
    UElement x = U.generator(1);
    x.add(f, U.generator(2).terms().begin()->first, f.one());
    EXPECT_EQ(U.multiply(x, x), U.generator(0));
    EXPECT_TRUE(U.multiply(U.generator(1), U.generator(1)).is_zero());
}

TEST(Multiply, RejectsBadMonomials) {
    auto g = algebras::sl2(5);
    Enveloping U(g, Mode::restricted);
    EXPECT_THROW((void)U.monomial(mono({5, 0, 0})), std::invalid_argument);
    auto h = algebras::heisenberg(3);
    Enveloping V(h, Mode::unrestricted);
    EXPECT_THROW((void)V.monomial(mono({0, 2, 0})), std::invalid_argument);
    Enveloping capped(g, Mode::unrestricted, {}, 4);
    EXPECT_THROW((void)capped.multiply(capped.monomial(mono({3, 0, 0})), capped.monomial(mono({2, 0, 0}))),
                 std::length_error);
}

TEST(Multiply, SupercommutatorOnGenerators) {
    for (const auto& g : {algebras::sl2(5), algebras::gl11(3), algebras::heisenberg(3)})
        for (Mode mode : {Mode::unrestricted, Mode::restricted}) {
            Enveloping U(g, mode);
            const Field& f = g->field();
            for (std::size_t i = 0; i < g->dim(); ++i)
                for (std::size_t j = 0; j < g->dim(); ++j) {
                    UElement lhs = U.multiply(U.generator(i), U.generator(j));
                    Fp s = f.sign(!koszul_flip(g->parity(i), g->parity(j)));
                    lhs.add(f, U.multiply(U.generator(j), U.generator(i)), s);
                    EXPECT_EQ(lhs, U.from_vector(g->bracket_basis(i, j)));
                }
        }
}

TEST(Multiply, AssociativityRandom) {
    std::mt19937 rng(21);
    for (const auto& g : {algebras::sl2(3), algebras::gl11(3), algebras::heisenberg(3), algebras::sl2(5)})
        for (Mode mode : {Mode::unrestricted, Mode::restricted}) {
            Enveloping U(g, mode, {}, 64);
            for (int t = 0; t < 30; ++t) {
                UElement a = testgen::random_element(rng, U, 2, 2);
                UElement b = testgen::random_element(rng, U, 2, 2);
                UElement c = testgen::random_element(rng, U, 2, 2);
                EXPECT_EQ(U.multiply(U.multiply(a, b), c), U.multiply(a, U.multiply(b, c)));
            }
        }
}

TEST(Multiply, CentralityCertificate) {
    for (const auto& g : {algebras::sl2(3), algebras::sl2(5), algebras::gl11(3), algebras::gl11(5),
                          algebras::heisenberg(3), algebras::abelian(3, 1, 0)}) {
        Enveloping U(g, Mode::unrestricted);
        Verdict v = centrality_check(U);
        EXPECT_TRUE(v.ok) << v.witness;
    }
}

TEST(Coproduct, Examples) {
    auto g = algebras::abelian(5, 1, 0);
    const Field& f = g->field();
    Enveloping U(g, Mode::unrestricted);
    EXPECT_EQ(U.coproduct(mono({0})), TensorSquareElement({mono({0}), mono({0})}, f.one()));
    TensorSquareElement sq;
    sq.add(f, {mono({2}), mono({0})}, f.one());
    sq.add(f, {mono({1}), mono({1})}, Fp{2});
    sq.add(f, {mono({0}), mono({2})}, f.one());
    EXPECT_EQ(U.coproduct(mono({2})), sq);

    auto o = algebras::abelian(3, 0, 2);
    const Field& fo = o->field();
    Enveloping V(o, Mode::unrestricted);
    TensorSquareElement ee;
    ee.add(fo, {mono({1, 1}), mono({0, 0})}, fo.one());
    ee.add(fo, {mono({1, 0}), mono({0, 1})}, fo.one());
    ee.add(fo, {mono({0, 1}), mono({1, 0})}, fo.neg(fo.one()));
    ee.add(fo, {mono({0, 0}), mono({1, 1})}, fo.one());
    EXPECT_EQ(V.coproduct(mono({1, 1})), ee);
}

TEST(Coproduct, MatchesProductOfGeneratorCoproducts) {
    // closed form against tensor products of x⊗1 + 1⊗x
    auto g = algebras::gl11(3);
    Enveloping U(g, Mode::unrestricted);
    std::mt19937 rng(4);
    for (int t = 0; t < 50; ++t) {
        Monomial m = testgen::random_monomial(rng, U, 3);
        TensorSquareElement acc({Monomial(4, 0), Monomial(4, 0)}, U.field().one());
        for (auto x : U.word(m)) acc = U.tensor_multiply(acc, U.coproduct(generator_monomial(4, x)));
        EXPECT_EQ(acc, U.coproduct(m));
    }
}

TEST(Coproduct, MultiplicativeRandom) {
    std::mt19937 rng(8);
    for (const auto& g : {algebras::sl2(3), algebras::gl11(3), algebras::heisenberg(3)})
        for (Mode mode : {Mode::unrestricted, Mode::restricted}) {
            Enveloping U(g, mode, {}, 64);
            for (int t = 0; t < 20; ++t) {
                UElement a = testgen::random_element(rng, U, 1, 2);
                UElement b = testgen::random_element(rng, U, 1, 2);
                EXPECT_EQ(U.coproduct(U.multiply(a, b)), U.tensor_multiply(U.coproduct(a), U.coproduct(b)));
            }
        }
}

TEST(Hopf, CounitAndCoassociativity) {
    std::mt19937 rng(12);
    for (const auto& g : {algebras::gl11(5), algebras::heisenberg(3)}) {
        Enveloping U(g, Mode::restricted);
        const Field& f = U.field();
        for (int t = 0; t < 30; ++t) {
            Monomial m = testgen::random_monomial(rng, U);
            UElement left, right;
            for (auto cp_k = U.coproduct(m); const auto& [k, c] : cp_k.terms()) {
                left.add(f, k.second, f.mul(c, U.counit(UElement(k.first, f.one()))));
                right.add(f, k.first, f.mul(c, U.counit(UElement(k.second, f.one()))));
            }
            EXPECT_EQ(left, UElement(m, f.one()));
            EXPECT_EQ(right, UElement(m, f.one()));
            EXPECT_EQ(coassoc_left(U, m), coassoc_right(U, m));
        }
    }
}

TEST(Antipode, Examples) {
    auto g = algebras::sl2(5);
    const Field& f = g->field();
    Enveloping U(g, Mode::unrestricted);
    EXPECT_EQ(U.antipode(U.one()), U.one());
    EXPECT_EQ(U.antipode(U.generator(1)), U.generator(1).scaled(f, f.neg(f.one())));
    UElement expect(mono({0, 1, 1}), f.one());
    expect.add(f, mono({1, 0, 0}), f.neg(f.one()));
    EXPECT_EQ(U.antipode(U.monomial(mono({0, 1, 1}))), expect);
}

TEST(Antipode, AntiAutomorphismAndConvolution) {
    std::mt19937 rng(13);
    for (const auto& g : {algebras::sl2(3), algebras::gl11(3), algebras::heisenberg(3)})
        for (Mode mode : {Mode::unrestricted, Mode::restricted}) {
            Enveloping U(g, mode, {}, 64);
            const Field& f = U.field();
            for (int t = 0; t < 20; ++t) {
                Monomial am = testgen::random_monomial(rng, U, 2);
                Monomial bm = testgen::random_monomial(rng, U, 2);
                UElement a(am, f.one()), b(bm, f.one());
                Fp s = f.sign(koszul_flip(U.parity(am), U.parity(bm)));
                EXPECT_EQ(U.antipode(U.multiply(a, b)), U.multiply(U.antipode(b), U.antipode(a)).scaled(f, s));
                if (degree(am) <= 3) {
                    UElement conv;
                    for (auto cp_k = U.coproduct(am); const auto& [k, c] : cp_k.terms())
                        conv.add(f, U.multiply(U.antipode(UElement(k.first, f.one())), UElement(k.second, f.one())), c);
                    EXPECT_EQ(conv, U.one().scaled(f, U.counit(a)));
                }
            }
        }
}

TEST(Primitives, RestrictedIsImageOfG) {
    for (const auto& g : {algebras::sl2(3), algebras::gl11(3), algebras::heisenberg(3), algebras::abelian(3, 1, 1)}) {
        Enveloping U(g, Mode::restricted);
        auto prim = primitives(U);
        EXPECT_EQ(prim.dim(), g->dim());
        EXPECT_TRUE(subspace_equal(prim, expected_primitives(U)));
        EXPECT_EQ(prim.ambient_dim(), restricted_basis(*g).size());
    }
}

TEST(Primitives, UnrestrictedAbelian) {
    auto g = algebras::abelian(3, 1, 0);
    Enveloping U(g, Mode::unrestricted);
    auto window = primitive_window(U, 1);
    EXPECT_EQ(window.size(), 10U);
    auto prim = primitives(U, 1);
    std::vector<Vec> want;
    for (std::uint32_t e : {1U, 3U, 9U}) want.push_back(unit_vector(10, e));
    EXPECT_TRUE(subspace_equal(prim, SubspaceBasis::span(U.field(), 10, want)));
}

TEST(Primitives, PurelyOdd) {
    auto g = algebras::abelian(3, 0, 2);
    Enveloping U(g, Mode::unrestricted);
    auto window = primitive_window(U, 0);
    auto prim = primitives(U, 0);
    EXPECT_EQ(prim.dim(), 2U);
    EXPECT_TRUE(subspace_equal(prim, expected_primitives(U, 0)));
    (void)window;
}

TEST(RestrictedBasis, Count) {
    EXPECT_EQ(restricted_basis(*algebras::sl2(5)).size(), 125U);
    EXPECT_EQ(restricted_basis(*algebras::gl11(5)).size(), 100U);
    EXPECT_EQ(restricted_basis(*algebras::heisenberg(3)).size(), 12U);
}

TEST(NormalOrder, HLeftExamples) {
    auto g = algebras::sl2(5);
    const Field& f = g->field();
    SplitEnveloping S(SubalgebraSplit(g, {0, 1}), Mode::unrestricted);
    // f h = h f + 2 f
    UElement fh = S.global().multiply(S.global().generator(2), S.global().generator(0));
    auto d = S.normal_order_h_left(fh);
    ASSERT_EQ(d.size(), 1U);
    UElement coeff(mono({1, 0, 0}), f.one());
    coeff.add(f, mono({0, 0, 0}), Fp{2});
    EXPECT_EQ(d.at(mono({0, 0, 1})), coeff);
    // u in U(h)
    auto dh = S.normal_order_h_left(S.global().generator(1));
    ASSERT_EQ(dh.size(), 1U);
    EXPECT_EQ(dh.begin()->first, mono({0, 0, 0}));

    auto gl = algebras::gl11(5);
    const Field& fg = gl->field();
    SplitEnveloping T(SubalgebraSplit(gl, {0, 1, 2}), Mode::unrestricted);
    // E21 E12 = -E12 E21 + (E11 + E22)
    UElement u = T.global().multiply(T.global().generator(3), T.global().generator(2));
    auto e = T.normal_order_h_left(u);
    ASSERT_EQ(e.size(), 2U);
    EXPECT_EQ(e.at(mono({0, 0, 0, 1})), UElement(mono({0, 0, 1, 0}), fg.neg(fg.one())));
    UElement diag(mono({1, 0, 0, 0}), fg.one());
    diag.add(fg, mono({0, 1, 0, 0}), fg.one());
    EXPECT_EQ(e.at(mono({0, 0, 0, 0})), diag);
}

TEST(NormalOrder, HRightExamples) {
    auto g = algebras::sl2(5);
    const Field& f = g->field();
    SplitEnveloping S(SubalgebraSplit(g, {0, 1}), Mode::unrestricted);
    // h f = f h + [h, f] = f h - 2 f
    UElement hf = S.global().multiply(S.global().generator(0), S.global().generator(2));
    auto d = S.normal_order_h_right(hf);
    ASSERT_EQ(d.size(), 1U);
    UElement coeff(mono({1, 0, 0}), f.one());
    coeff.add(f, mono({0, 0, 0}), f.from_int(-2));
    EXPECT_EQ(d.at(mono({0, 0, 1})), coeff);

    auto gl = algebras::gl11(5);
    const Field& fg = gl->field();
    SplitEnveloping T(SubalgebraSplit(gl, {0, 1, 2}), Mode::unrestricted);
    // E12 E21 = -E21 E12 + (E11 + E22)
    UElement u = T.global().multiply(T.global().generator(2), T.global().generator(3));
    auto e = T.normal_order_h_right(u);
    ASSERT_EQ(e.size(), 2U);
    EXPECT_EQ(e.at(mono({0, 0, 0, 1})), UElement(mono({0, 0, 1, 0}), fg.neg(fg.one())));
}

TEST(NormalOrder, RoundTripRandom) {
    std::mt19937 rng(17);
    std::vector<std::pair<std::shared_ptr<const LieSuperData>, std::vector<std::size_t>>> cases{
        {algebras::sl2(5), {0, 1}}, {algebras::gl11(3), {0, 1, 2}}, {algebras::heisenberg(3), {0}},
        {algebras::gl11(5), {0, 1}}};
    for (const auto& [g, h] : cases)
        for (Mode mode : {Mode::unrestricted, Mode::restricted}) {
            SplitEnveloping S(SubalgebraSplit(g, h), mode, 64);
            for (int t = 0; t < 20; ++t) {
                UElement u = testgen::random_element(rng, S.global(), 3, 3);
                EXPECT_EQ(S.expand_h_left(S.normal_order_h_left(u)), u);
                EXPECT_EQ(S.expand_h_right(S.normal_order_h_right(u)), u);
            }
        }
}

TEST(Filtration, Examples) {
    auto g = algebras::sl2(3);
    SplitEnveloping S(SubalgebraSplit(g, {0, 1}), Mode::unrestricted);
    const auto& U = S.global();
    EXPECT_EQ(S.filtration_degree(U.one()), -1);
    EXPECT_EQ(S.filtration_degree(U.generator(0)), -1);
    EXPECT_EQ(S.filtration_degree(U.generator(2)), 0);
    EXPECT_EQ(S.filtration_degree(U.monomial(mono({0, 0, 3}))), 1);
    EXPECT_EQ(S.filtration_degree(U.monomial(mono({0, 0, 8}))), 1);
    EXPECT_EQ(S.filtration_degree(U.monomial(mono({0, 0, 9}))), 2);
}

TEST(Filtration, StableUnderSubalgebraBracket) {
    std::mt19937 rng(23);
    auto g = algebras::sl2(3);
    SplitEnveloping S(SubalgebraSplit(g, {0, 1}), Mode::unrestricted, 64);
    const auto& U = S.global();
    const Field& f = U.field();
    for (int t = 0; t < 40; ++t) {
        UElement u = testgen::random_element(rng, U, 2, 4);
        int r = S.filtration_degree(u);
        for (auto hi : S.split().h_indices()) {
            UElement br = U.multiply(U.generator(hi), u);
            br.add(f, U.multiply(u, U.generator(hi)), f.neg(f.one()));
            EXPECT_LE(S.filtration_degree(br), std::max(r, 0));
        }
    }
}
