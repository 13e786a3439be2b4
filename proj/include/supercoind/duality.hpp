#pragma once

// Lambda and its character, the maps Phi and Theta, the pairing Psi, their
// comparison, and annihilator duality in the restricted enveloping algebra.

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "supercoind/coordinate_algebra.hpp"
#include "supercoind/enveloping.hpp"
#include "supercoind/linalg.hpp"
#include "supercoind/report.hpp"
#include "supercoind/representations.hpp"

namespace supercoind {

/// prod_{i,j} eta_{i,j}^{p-1} prod_s zeta_s.
inline Vec lambda_element(const AlgebraA& A) {
    EtaMonomial e;
    const std::uint32_t p = A.split().algebra().p();
    e.c.assign(A.n(), std::vector<std::uint32_t>(A.levels(), p - 1));
    e.beta.assign(A.m(), 1);
    return A.eta_monomial(e);
}

/// Complement monomial with every even exponent `bound - 1` and every odd exponent 1.
inline Monomial top_monomial(const SubalgebraSplit& s, std::uint64_t bound) {
    Monomial m(s.algebra().dim(), 0);
    for (auto i : s.p_indices()) m[i] = is_odd(s.algebra().parity(i)) ? 1 : static_cast<std::uint32_t>(bound - 1);
    return m;
}

/// delta_H(Lambda) = strad(H) Lambda for every subalgebra generator, Lambda
/// killed by the maximal ideal and of parity m. `bound` 0 means restricted.
inline Verdict lambda_character_check(const std::shared_ptr<const SplitEnveloping>& env, std::uint64_t bound = 0) {
    AlgebraA A(env, bound);
    const auto& s = env->split();
    const Field& f = A.field();
    Vec lam = lambda_element(A);
    if (is_zero(lam)) return Verdict::fail("lambda: Lambda vanishes");
    Character st = strad(s);
    for (std::size_t k = 0; k < s.h_dim(); ++k) {
        Vec lhs = A.coind().act(env->global().generator(s.h_indices()[k]), lam);
        if (lhs != scaled(f, st.at(k), lam))
            return Verdict::fail("lambda: delta_" + s.algebra().name(s.h_indices()[k]) + "(Lambda) != strad Lambda");
    }
    Parity want = parity_of(static_cast<unsigned>(s.m()));
    for (std::size_t w = 0; w < A.dim(); ++w) {
        if (!lam[w].is_zero() && A.parity(w) != want) return Verdict::fail("lambda: parity is not m");
        if (is_unit_monomial(A.window()[w])) continue;
        if (!is_zero(A.product(unit_vector(A.dim(), w), lam)))
            return Verdict::fail("lambda: maximal ideal does not kill Lambda");
    }
    return Verdict::pass();
}

struct MapCheck {
    Matrix matrix;
    std::size_t source_dim = 0;
    std::size_t target_dim = 0;
    std::size_t rank = 0;
    Verdict verdict;
};

/// Phi: Ind(Pi^m k_strad ⊗ pi) -> Coind(pi), m_w ⊗ v_k -> m_w . (Lambda v^_k).
inline MapCheck phi(const std::shared_ptr<const SplitEnveloping>& env, const Representation& pi) {
    const auto& s = env->split();
    const Field& f = env->field();
    Representation tilde = twist(f, pi, strad(s), static_cast<unsigned>(s.m()));
    InducedModule ind(env, tilde);
    CoinducedModule co(env, pi);
    AlgebraA A(env);
    Vec lam = lambda_element(A);
    MapCheck out;
    out.source_dim = ind.dim();
    out.target_dim = co.dim();
    out.matrix = Matrix(co.dim(), ind.dim());
    for (std::size_t w = 0; w < ind.window().size(); ++w)
        for (std::size_t k = 0; k < pi.dim(); ++k) {
            Vec base = co.algebra_act(lam, co.hat(unit_vector(pi.dim(), k)));
            out.matrix.set_column(ind.index(w, k), co.act(UElement(ind.window()[w], f.one()), base));
        }
    out.rank = rank(f, out.matrix);
    if (out.source_dim != out.target_dim || out.rank != out.source_dim) {
        out.verdict = Verdict::fail("phi: not bijective (rank " + std::to_string(out.rank) + " of " +
                                    std::to_string(out.source_dim) + ")");
        return out;
    }
    FiniteModule im = ind.as_module();
    for (std::size_t x = 0; x < s.algebra().dim(); ++x)
        if (multiply(f, out.matrix, im.generator(x)) != multiply(f, co.generator_matrix(x), out.matrix)) {
            out.verdict = Verdict::fail("phi: not equivariant for " + s.algebra().name(x));
            return out;
        }
    return out;
}

/// Theta: Coind(pi*) -> Ind(pi)*, lambda -> [u ⊗ v -> (-1)^{|lambda||u|} <lambda(S u), v>].
inline MapCheck theta(const std::shared_ptr<const SplitEnveloping>& env, const Representation& pi) {
    const auto& s = env->split();
    const Field& f = env->field();
    const auto& G = env->global();
    Representation dual = contragredient(f, pi);
    CoinducedModule co(env, dual);
    InducedModule ind(env, pi);
    MapCheck out;
    out.source_dim = co.dim();
    out.target_dim = ind.dim();
    out.matrix = Matrix(ind.dim(), co.dim());
    std::vector<UElement> anti;
    for (const auto& m : ind.window()) anti.push_back(G.antipode(UElement(m, f.one())));
    for (std::size_t c = 0; c < co.dim(); ++c) {
        Vec lam = unit_vector(co.dim(), c);
        Parity pl = co.parity(c);
        for (std::size_t w = 0; w < ind.window().size(); ++w) {
            Vec val = co.evaluate(anti[w], lam);
            Fp sg = f.sign(koszul_flip(pl, G.parity(ind.window()[w])));
            for (std::size_t k = 0; k < pi.dim(); ++k) out.matrix(ind.index(w, k), c) = f.mul(sg, val[k]);
        }
    }
    out.rank = rank(f, out.matrix);
    if (out.source_dim != out.target_dim || out.rank != out.source_dim) {
        out.verdict = Verdict::fail("theta: not bijective");
        return out;
    }
    FiniteModule ind_dual = ind.as_module().dual();
    for (std::size_t x = 0; x < s.algebra().dim(); ++x)
        if (multiply(f, out.matrix, co.generator_matrix(x)) != multiply(f, ind_dual.generator(x), out.matrix)) {
            out.verdict = Verdict::fail("theta: not equivariant for " + s.algebra().name(x));
            return out;
        }
    return out;
}

/// (-1)^{m(m+1)/2} / ((p-1)!)^n.
inline Fp psi_normalization(const Field& f, std::size_t n, std::size_t m) {
    Fp fact = f.pow(f.factorial(f.p() - 1), n);
    bool neg = ((m * (m + 1) / 2) & 1U) != 0;
    return f.mul(f.sign(neg), f.inv(fact));
}

/// Coind(pi*) ⊗_A Omega, identified with Coind(pi*) through lambda* w <-> lambda*:
/// X acts by X.lambda* + Div(delta_X) lambda*.
inline FiniteModule coind_dual_omega(const CoinducedModule& dual, const BerezinLine& om) {
    const auto& s = dual.env().split();
    const Field& f = dual.field();
    Parity shift = parity_of(static_cast<unsigned>(s.m()));
    std::vector<Parity> par;
    for (std::size_t i = 0; i < dual.dim(); ++i) par.push_back(dual.parity(i) + shift);
    std::vector<Matrix> gens;
    for (std::size_t x = 0; x < s.algebra().dim(); ++x) {
        Matrix m = dual.generator_matrix(x);
        for (std::size_t c = 0; c < dual.dim(); ++c) {
            Vec col = m.column(c);
            col = added(f, col, dual.algebra_act(om.divergences[x], unit_vector(dual.dim(), c)));
            m.set_column(c, col);
        }
        gens.push_back(m);
    }
    return FiniteModule(s.algebra_ptr(), par, gens);
}

struct PsiCheck {
    Matrix gram;
    std::size_t dim = 0;
    std::size_t rank = 0;
    Verdict verdict;
};

/// Coefficient of Lambda in the eta/zeta monomial expansion of a.
inline Fp berezin_integral(const AlgebraA& A, const Vec& a) {
    EtaMonomial e;
    const std::uint32_t p = A.split().algebra().p();
    e.c.assign(A.n(), std::vector<std::uint32_t>(A.levels(), p - 1));
    e.beta.assign(A.m(), 1);
    return A.to_eta(a).at(A.window_of(e));
}

/// The Lambda-coefficient of L_{delta_X}(a w) vanishes for every generator X
/// and every basis element a, in particular for a = Lambda.
inline Verdict berezin_invariance_check(const AlgebraA& A, const BerezinLine& om) {
    const auto& g = A.split().algebra();
    for (std::size_t x = 0; x < g.dim(); ++x) {
        const Matrix& L = om.generators[x];
        for (std::size_t w = 0; w < A.dim(); ++w)
            if (!berezin_integral(A, L.column(w)).is_zero())
                return Verdict::fail("psi: integral of L_delta_" + g.name(x) + " is nonzero on a basis element");
    }
    return Verdict::pass();
}

/// L_{delta_X}(Lambda w) itself, which need not vanish outside the top coefficient.
inline Vec lie_derivative_of_top(const AlgebraA& A, const BerezinLine& om, std::size_t x) {
    return apply(A.field(), om.generators.at(x), lambda_element(A));
}

/// Gram matrix of Psi(lambda, lambda* w) = c <top, <lambda, lambda*>> with
/// rows indexed by Coind(pi) and columns by Coind(pi*) ⊗_A Omega.
inline Matrix psi_gram(const CoinducedModule& co, const CoinducedModule& dual) {
    const auto& s = co.env().split();
    const Field& f = co.field();
    const auto& G = co.env().global();
    const std::size_t dv = co.rep().dim();
    Fp c = psi_normalization(f, s.n(), s.m());
    Matrix gram(co.dim(), dual.dim());
    for (auto cp = G.coproduct(top_monomial(s, co.bound())); const auto& [k, coef] : cp.terms()) {
        std::size_t w1 = *co.window_index(k.first);
        std::size_t w2 = *dual.window_index(k.second);
        for (std::size_t j = 0; j < dv; ++j) {
            std::size_t row = co.index(w1, j);
            // <v, v*> = (-1)^{|v|} v*(v)
            bool neg = is_odd(co.rep().parity(j)) != (is_odd(G.parity(k.second)) && is_odd(co.parity(row)));
            Fp sg = f.sign(neg);
            gram(row, dual.index(w2, j)) = f.mul(c, f.mul(sg, coef));
        }
    }
    return gram;
}

/// Nondegeneracy and invariance of Psi, and L_{delta_X}(Lambda w) = 0.
inline PsiCheck psi(const std::shared_ptr<const SplitEnveloping>& env, const Representation& pi) {
    const auto& s = env->split();
    const auto& g = s.algebra();
    const Field& f = env->field();
    CoinducedModule co(env, pi);
    CoinducedModule dual(env, contragredient(f, pi));
    AlgebraA A(env);
    BerezinLine om = berezin_line(A);
    PsiCheck out;
    out.gram = psi_gram(co, dual);
    out.dim = co.dim();
    out.rank = rank(f, out.gram);
    if (out.rank != co.dim()) {
        out.verdict = Verdict::fail("psi: Gram matrix is degenerate");
        return out;
    }
    FiniteModule m2 = coind_dual_omega(dual, om);
    for (std::size_t x = 0; x < g.dim(); ++x) {
        Matrix first = multiply(f, co.generator_matrix(x).transpose(), out.gram);
        Matrix second = multiply(f, out.gram, m2.generator(x));
        for (std::size_t r = 0; r < co.dim(); ++r) {
            Fp sg = f.sign(koszul_flip(g.parity(x), co.parity(r)));
            for (std::size_t c = 0; c < dual.dim(); ++c)
                if (!f.add(first(r, c), f.mul(sg, second(r, c))).is_zero()) {
                    out.verdict = Verdict::fail("psi: invariance fails for " + g.name(x) + " at (" + std::to_string(r) +
                                                "," + std::to_string(c) + ")");
                    return out;
                }
        }
    }
    if (Verdict v = berezin_invariance_check(A, om); !v) out.verdict = v;
    return out;
}

/// t(Phi) Psi^natural = Theta o iota, where iota identifies Coind(pi*) ⊗_A Omega
/// with Coind(pi~*) by reading the value at 1.
inline Verdict comparison_check(const std::shared_ptr<const SplitEnveloping>& env, const Representation& pi) {
    const auto& s = env->split();
    const Field& f = env->field();
    const auto& G = env->global();
    Representation tilde = twist(f, pi, strad(s), static_cast<unsigned>(s.m()));
    MapCheck ph = phi(env, pi);
    if (!ph.verdict) return ph.verdict;
    MapCheck th = theta(env, tilde);
    if (!th.verdict) return th.verdict;
    CoinducedModule co(env, pi);
    CoinducedModule dual(env, contragredient(f, pi));
    AlgebraA A(env);
    BerezinLine om = berezin_line(A);
    FiniteModule m2 = coind_dual_omega(dual, om);
    Matrix gram = psi_gram(co, dual);

    CoinducedModule target(env, contragredient(f, tilde));
    Matrix iota(target.dim(), dual.dim());
    std::size_t w0 = *dual.window_index(Monomial(s.algebra().dim(), 0));
    for (std::size_t w = 0; w < target.window().size(); ++w) {
        Matrix act = m2.action_matrix(G, UElement(target.window()[w], f.one()));
        for (std::size_t c = 0; c < dual.dim(); ++c)
            for (std::size_t k = 0; k < pi.dim(); ++k) iota(target.index(w, k), c) = act(dual.index(w0, k), c);
    }
    // iota must itself be an isomorphism of modules
    if (rank(f, iota) != dual.dim()) return Verdict::fail("comparison: iota is not bijective");
    for (std::size_t x = 0; x < s.algebra().dim(); ++x)
        if (multiply(f, iota, m2.generator(x)) != multiply(f, target.generator_matrix(x), iota))
            return Verdict::fail("comparison: iota is not equivariant for " + s.algebra().name(x));
    // Psi^natural(mu)(lambda) = (-1)^{|lambda||mu|} Psi(lambda, mu)
    Matrix natural = gram;
    for (std::size_t r = 0; r < co.dim(); ++r)
        for (std::size_t c = 0; c < dual.dim(); ++c)
            if (is_odd(co.parity(r)) && is_odd(m2.parities()[c])) natural(r, c) = f.neg(natural(r, c));
    Matrix lhs = multiply(f, ph.matrix.transpose(), natural);
    Matrix rhs = multiply(f, th.matrix, iota);
    if (lhs != rhs) {
        for (std::size_t r = 0; r < lhs.rows(); ++r)
            for (std::size_t c = 0; c < lhs.cols(); ++c)
                if (lhs(r, c) != rhs(r, c))
                    return Verdict::fail("comparison: entry (" + std::to_string(r) + "," + std::to_string(c) +
                                         ") is " + std::to_string(f.to_signed(lhs(r, c))) + " vs " +
                                         std::to_string(f.to_signed(rhs(r, c))));
    }
    return Verdict::pass();
}

/// A subspace of U'(g) in restricted_basis coordinates.
struct IdealBasis {
    std::vector<Monomial> ambient;
    SubspaceBasis basis;
};

/// Coordinates of an element of U'(g) in restricted_basis order.
inline Vec coordinates_of(const std::vector<Monomial>& ambient, const std::map<Monomial, std::size_t>& index,
                          const UElement& u) {
    Vec v(ambient.size());
    for (const auto& [m, c] : u.terms()) v[index.at(m)] = c;
    return v;
}

inline UElement element_from(const Field& f, const std::vector<Monomial>& ambient, const Vec& coords) {
    UElement u;
    for (std::size_t j = 0; j < coords.size(); ++j) u.add(f, ambient[j], coords[j]);
    return u;
}

/// Closed under left and right multiplication by generators.
inline Verdict two_sided_check(const Enveloping& U, const IdealBasis& I) {
    const Field& f = U.field();
    std::map<Monomial, std::size_t> index;
    for (std::size_t j = 0; j < I.ambient.size(); ++j) index.emplace(I.ambient[j], j);
    for (const auto& v : I.basis.vectors()) {
        UElement u = element_from(f, I.ambient, v);
        for (std::size_t x = 0; x < U.dim(); ++x) {
            if (!I.basis.contains(f, coordinates_of(I.ambient, index, U.multiply(U.generator(x), u))))
                return Verdict::fail("ideal: not closed under left multiplication by " + U.algebra().name(x));
            if (!I.basis.contains(f, coordinates_of(I.ambient, index, U.multiply(u, U.generator(x)))))
                return Verdict::fail("ideal: not closed under right multiplication by " + U.algebra().name(x));
        }
    }
    return Verdict::pass();
}

/// Kernel of U'(g) -> End(M).
inline IdealBasis annihilator(const Enveloping& U, const FiniteModule& M) {
    if (U.mode() != Mode::restricted) throw std::invalid_argument("annihilator: needs restricted mode");
    const Field& f = U.field();
    IdealBasis out{restricted_basis(U.algebra()), SubspaceBasis(0)};
    const std::size_t d = M.dim();
    Matrix big(d * d, out.ambient.size());
    for (std::size_t j = 0; j < out.ambient.size(); ++j) {
        Matrix a = M.action_matrix(U, UElement(out.ambient[j], f.one()));
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c) big(r * d + c, j) = a(r, c);
    }
    out.basis = nullspace(f, big);
    return out;
}

inline IdealBasis antipode_image(const Enveloping& U, const IdealBasis& I) {
    const Field& f = U.field();
    std::map<Monomial, std::size_t> index;
    for (std::size_t j = 0; j < I.ambient.size(); ++j) index.emplace(I.ambient[j], j);
    std::vector<Vec> images;
    for (const auto& v : I.basis.vectors())
        images.push_back(coordinates_of(I.ambient, index, U.antipode(element_from(f, I.ambient, v))));
    return {I.ambient, SubspaceBasis::span(f, I.ambient.size(), images)};
}

struct KernelDualityCheck {
    std::size_t ambient_dim = 0;
    std::size_t ideal_dim = 0;
    std::size_t dual_ideal_dim = 0;
    Verdict verdict;
};

/// I_pi = S(I_{pi* ⊗ Pi^m k_{-strad}}) with both ideals checked to be two-sided.
inline KernelDualityCheck kernel_duality_check(const std::shared_ptr<const SplitEnveloping>& env,
                                               const Representation& pi) {
    const auto& s = env->split();
    const Field& f = env->field();
    const auto& G = env->global();
    CoinducedModule co(env, pi);
    Representation other = twist(f, contragredient(f, pi), strad(s).negated(f), static_cast<unsigned>(s.m()));
    CoinducedModule co2(env, other);
    IdealBasis I = annihilator(G, co.as_module());
    IdealBasis J = annihilator(G, co2.as_module());
    KernelDualityCheck out;
    out.ambient_dim = I.ambient.size();
    out.ideal_dim = I.basis.dim();
    out.dual_ideal_dim = J.basis.dim();
    if (Verdict v = two_sided_check(G, I); !v) {
        out.verdict = v;
        return out;
    }
    if (Verdict v = two_sided_check(G, J); !v) {
        out.verdict = v;
        return out;
    }
    if (!subspace_equal(I.basis, antipode_image(G, J).basis))
        out.verdict = Verdict::fail("kernel duality: I_pi (dim " + std::to_string(I.basis.dim()) +
                                    ") differs from the antipode image (dim " + std::to_string(J.basis.dim()) + ")");
    return out;
}

/// The representation whose kernel-duality run gives the reverse inclusion.
inline Representation reverse_twist(const SubalgebraSplit& s, const Representation& pi) {
    const Field& f = s.algebra().field();
    return twist(f, contragredient(f, pi), strad(s), static_cast<unsigned>(s.m()));
}

}  // namespace supercoind
