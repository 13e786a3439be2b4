#pragma once

// The coordinate algebra A = Coind(k), its generators and partial
// derivatives, derivations delta_X, divergence and the Berezinian line.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "supercoind/enveloping.hpp"
#include "supercoind/linalg.hpp"
#include "supercoind/report.hpp"
#include "supercoind/representations.hpp"

namespace supercoind {

/// Exponent data of an eta/zeta monomial: c[i][j] is the power of eta_{i,j},
/// beta[s] that of zeta_s.
struct EtaMonomial {
    std::vector<std::vector<std::uint32_t>> c;
    std::vector<std::uint32_t> beta;
};

/// A = Coind(k) on a window of complement monomials. Levels are 0..r where
/// the window bound is p^{r+1}; the restricted algebra is level 0.
class AlgebraA {
public:
    AlgebraA(std::shared_ptr<const SplitEnveloping> env, std::uint64_t bound = 0)
        : coind_(env, trivial_representation(env->split()), bound) {
        const auto& s = split();
        const std::uint32_t p = env->algebra().p();
        levels_ = 0;
        for (std::uint64_t b = p; b < coind_.bound(); b *= p) ++levels_;
        std::uint64_t check = p;
        for (std::size_t j = 0; j < levels_; ++j) check *= p;
        if (check != coind_.bound()) throw std::invalid_argument("algebra A: window bound must be a power of p");
        ++levels_;
        for (auto i : s.p_indices()) (is_odd(env->algebra().parity(i)) ? odd_ : even_).push_back(i);
        build_eta_basis();
    }

    [[nodiscard]] const CoinducedModule& coind() const noexcept { return coind_; }
    [[nodiscard]] const SubalgebraSplit& split() const noexcept { return coind_.env().split(); }
    [[nodiscard]] const Field& field() const noexcept { return coind_.field(); }
    [[nodiscard]] std::size_t dim() const noexcept { return coind_.dim(); }
    [[nodiscard]] std::size_t levels() const noexcept { return levels_; }
    [[nodiscard]] std::size_t n() const noexcept { return even_.size(); }
    [[nodiscard]] std::size_t m() const noexcept { return odd_.size(); }
    [[nodiscard]] const std::vector<Monomial>& window() const noexcept { return coind_.window(); }
    [[nodiscard]] Parity parity(std::size_t w) const { return coind_.parity(w); }

    [[nodiscard]] Vec one() const { return coind_.hat(Vec{field().one()}); }
    /// mu_{x}: 1 at the window monomial x, 0 elsewhere.
    [[nodiscard]] Vec dual_basis(const Monomial& x) const {
        auto w = coind_.window_index(x);
        if (!w) throw std::out_of_range("algebra A: monomial outside the window");
        return unit_vector(dim(), *w);
    }

    [[nodiscard]] Vec product(const Vec& a, const Vec& b) const { return coind_.algebra_act(a, b); }

    /// eta_{i,j} = mu_{e_i^{p^j}}.
    [[nodiscard]] Vec eta(std::size_t i, std::size_t j = 0) const {
        Monomial x(split().algebra().dim(), 0);
        std::uint64_t e = 1;
        for (std::size_t t = 0; t < j; ++t) e *= split().algebra().p();
        x.at(even_.at(i)) = static_cast<std::uint32_t>(e);
        return dual_basis(x);
    }
    /// zeta_s = mu_{eps_s}.
    [[nodiscard]] Vec zeta(std::size_t s) const {
        Monomial x(split().algebra().dim(), 0);
        x.at(odd_.at(s)) = 1;
        return dual_basis(x);
    }

    /// eta/zeta exponents matching window[w] through base-p digits.
    [[nodiscard]] EtaMonomial eta_exponents(std::size_t w) const {
        const Monomial& x = window().at(w);
        const std::uint32_t p = split().algebra().p();
        EtaMonomial out;
        for (auto i : even_) {
            std::vector<std::uint32_t> digits;
            std::uint32_t a = x[i];
            for (std::size_t j = 0; j < levels_; ++j) {
                digits.push_back(a % p);
                a /= p;
            }
            out.c.push_back(digits);
        }
        for (auto s : odd_) out.beta.push_back(x[s]);
        return out;
    }

    [[nodiscard]] std::size_t window_of(const EtaMonomial& e) const {
        Monomial x(split().algebra().dim(), 0);
        const std::uint32_t p = split().algebra().p();
        for (std::size_t i = 0; i < even_.size(); ++i) {
            std::uint64_t a = 0, pw = 1;
            for (std::size_t j = 0; j < levels_; ++j) {
                a += e.c[i][j] * pw;
                pw *= p;
            }
            x[even_[i]] = static_cast<std::uint32_t>(a);
        }
        for (std::size_t s = 0; s < odd_.size(); ++s) x[odd_[s]] = e.beta[s];
        return *coind_.window_index(x);
    }

    /// Product of eta_{i,j}^{c_ij} over (i, j), then zeta_s for beta_s = 1 in increasing s.
    [[nodiscard]] Vec eta_monomial(const EtaMonomial& e) const {
        Vec acc = one();
        for (std::size_t i = 0; i < even_.size(); ++i)
            for (std::size_t j = 0; j < levels_; ++j)
                for (std::uint32_t t = 0; t < e.c[i][j]; ++t) acc = product(acc, eta(i, j));
        for (std::size_t s = 0; s < odd_.size(); ++s)
            if (e.beta[s] != 0) acc = product(acc, zeta(s));
        return acc;
    }

    /// Column w is the eta/zeta monomial attached to window[w].
    [[nodiscard]] const Matrix& eta_basis() const noexcept { return basis_; }
    [[nodiscard]] const Matrix& eta_basis_inverse() const noexcept { return basis_inv_; }

    /// Coordinates in the eta/zeta monomial basis.
    [[nodiscard]] Vec to_eta(const Vec& a) const { return apply(field(), basis_inv_, a); }
    [[nodiscard]] Vec from_eta(const Vec& c) const { return apply(field(), basis_, c); }

    /// d/d eta_{i,j} as a matrix on window coordinates.
    [[nodiscard]] Matrix partial(std::size_t i, std::size_t j = 0) const {
        const Field& f = field();
        Matrix d(dim(), dim());
        for (std::size_t w = 0; w < dim(); ++w) {
            EtaMonomial e = eta_exponents(w);
            if (e.c[i][j] == 0) continue;
            Fp c = f.from_int(e.c[i][j]);
            e.c[i][j] -= 1;
            d(window_of(e), w) = c;
        }
        return conjugate(d);
    }

    /// Left derivative d/d zeta_s: removes zeta_s with sign (-1)^{#zeta_t before it}.
    [[nodiscard]] Matrix partial_odd(std::size_t s) const {
        const Field& f = field();
        Matrix d(dim(), dim());
        for (std::size_t w = 0; w < dim(); ++w) {
            EtaMonomial e = eta_exponents(w);
            if (e.beta[s] == 0) continue;
            unsigned before = 0;
            for (std::size_t t = 0; t < s; ++t) before += e.beta[t];
            e.beta[s] = 0;
            d(window_of(e), w) = f.sign((before & 1U) != 0);
        }
        return conjugate(d);
    }

    /// Multiplication by a as a matrix.
    [[nodiscard]] Matrix multiplication(const Vec& a) const {
        Matrix out(dim(), dim());
        for (std::size_t c = 0; c < dim(); ++c) out.set_column(c, product(a, unit_vector(dim(), c)));
        return out;
    }

    /// Constant term <1, a>.
    [[nodiscard]] Fp constant_term(const Vec& a) const { return a.at(*coind_.window_index(Monomial(split().algebra().dim(), 0))); }

private:
    Matrix conjugate(const Matrix& d) const {
        return multiply(field(), basis_, multiply(field(), d, basis_inv_));
    }

    void build_eta_basis() {
        basis_ = Matrix(dim(), dim());
        for (std::size_t w = 0; w < dim(); ++w) basis_.set_column(w, eta_monomial(eta_exponents(w)));
        auto inv = inverse(field(), basis_);
        if (!inv) throw std::logic_error("algebra A: eta/zeta monomials are not a basis");
        basis_inv_ = *inv;
    }

    CoinducedModule coind_;
    std::size_t levels_ = 1;
    std::vector<std::size_t> even_;
    std::vector<std::size_t> odd_;
    Matrix basis_;
    Matrix basis_inv_;
};

/// D = Σ f_{i,j} d/d eta_{i,j} + Σ g_s d/d zeta_s, f indexed [i][j].
struct DerivationOfA {
    Parity parity = Parity::even;
    std::vector<std::vector<Vec>> f;
    std::vector<Vec> g;
};

/// Operator matrix of a derivation given by its coefficients.
inline Matrix derivation_matrix(const AlgebraA& A, const DerivationOfA& D) {
    const Field& fld = A.field();
    Matrix out(A.dim(), A.dim());
    for (std::size_t i = 0; i < D.f.size(); ++i)
        for (std::size_t j = 0; j < D.f[i].size(); ++j)
            out = add(fld, out, multiply(fld, A.multiplication(D.f[i][j]), A.partial(i, j)));
    for (std::size_t s = 0; s < D.g.size(); ++s)
        out = add(fld, out, multiply(fld, A.multiplication(D.g[s]), A.partial_odd(s)));
    return out;
}

/// Matrix of a -> X.a on A. In a truncated window X must keep it closed.
inline Matrix delta_matrix(const AlgebraA& A, std::size_t x) {
    return A.coind().action_matrix_direct(A.coind().env().global().generator(x));
}

/// Coefficients of delta_X on the generators, plus the check that they
/// reproduce delta_X on every basis element.
inline std::pair<DerivationOfA, Verdict> delta_X_expansion(const AlgebraA& A, std::size_t x) {
    const auto& g = A.split().algebra();
    Matrix dx = delta_matrix(A, x);
    DerivationOfA D;
    D.parity = g.parity(x);
    for (std::size_t i = 0; i < A.n(); ++i) {
        D.f.emplace_back();
        for (std::size_t j = 0; j < A.levels(); ++j) D.f[i].push_back(apply(A.field(), dx, A.eta(i, j)));
    }
    for (std::size_t s = 0; s < A.m(); ++s) D.g.push_back(apply(A.field(), dx, A.zeta(s)));
    Matrix rebuilt = derivation_matrix(A, D);
    if (rebuilt != dx) {
        for (std::size_t c = 0; c < A.dim(); ++c)
            if (rebuilt.column(c) != dx.column(c))
                return {D, Verdict::fail("delta expansion: mismatch for " + g.name(x) + " at basis " + std::to_string(c))};
    }
    return {D, Verdict::pass()};
}

/// Div D = Σ d_{i,j}(f_{i,j}) - (-1)^{|D|} Σ d_s(g_s).
inline Vec divergence(const AlgebraA& A, const DerivationOfA& D) {
    const Field& f = A.field();
    Vec out(A.dim());
    for (std::size_t i = 0; i < D.f.size(); ++i)
        for (std::size_t j = 0; j < D.f[i].size(); ++j) out = added(f, out, apply(f, A.partial(i, j), D.f[i][j]));
    Fp s = is_odd(D.parity) ? f.one() : f.neg(f.one());
    for (std::size_t t = 0; t < D.g.size(); ++t) axpy(f, out, s, apply(f, A.partial_odd(t), D.g[t]));
    return out;
}

/// L_D(a w) = D(a) + (-1)^{|D||a|} a Div(D), as a matrix on the coefficient a.
inline Matrix lie_derivative_matrix(const AlgebraA& A, const DerivationOfA& D) {
    const Field& f = A.field();
    Matrix dm = derivation_matrix(A, D);
    Vec div = divergence(A, D);
    Matrix out = dm;
    for (std::size_t c = 0; c < A.dim(); ++c) {
        Vec term = A.product(unit_vector(A.dim(), c), div);
        Fp s = f.sign(koszul_flip(D.parity, A.parity(c)));
        Vec col = out.column(c);
        axpy(f, col, s, term);
        out.set_column(c, col);
    }
    return out;
}

inline Vec lie_derivative(const AlgebraA& A, const DerivationOfA& D, const Vec& a) {
    return apply(A.field(), lie_derivative_matrix(A, D), a);
}

/// The Berezinian line Omega = A w_e as a module over g: X acts by L_{delta_X}.
/// Basis a_w w_e has parity |window[w]| + m.
struct BerezinLine {
    std::vector<Parity> parities;
    std::vector<Matrix> generators;
    std::vector<DerivationOfA> deltas;
    std::vector<Vec> divergences;
};

inline BerezinLine berezin_line(const AlgebraA& A) {
    const auto& g = A.split().algebra();
    BerezinLine out;
    Parity shift = parity_of(static_cast<unsigned>(A.m()));
    for (std::size_t w = 0; w < A.dim(); ++w) out.parities.push_back(A.parity(w) + shift);
    for (std::size_t x = 0; x < g.dim(); ++x) {
        auto [D, verdict] = delta_X_expansion(A, x);
        if (!verdict) throw std::logic_error(verdict.witness);
        out.generators.push_back(lie_derivative_matrix(A, D));
        out.divergences.push_back(divergence(A, D));
        out.deltas.push_back(std::move(D));
    }
    return out;
}

/// mu_{e^a} mu_{e^b} = C(a+b, a) mu_{e^{a+b}} on each even complement
/// coordinate, eta^p = 0 at every level and zeta^2 = 0.
inline Verdict dual_product_check(const AlgebraA& A) {
    const auto& s = A.split();
    const auto& g = s.algebra();
    const Field& f = A.field();
    const std::uint64_t bound = A.coind().bound();
    for (auto i : s.p_indices()) {
        if (is_odd(g.parity(i))) continue;
        for (std::uint64_t a = 0; a < bound; ++a)
            for (std::uint64_t b = 0; a + b < bound; ++b) {
                Monomial ma(g.dim(), 0), mb(g.dim(), 0), mab(g.dim(), 0);
                ma[i] = static_cast<std::uint32_t>(a);
                mb[i] = static_cast<std::uint32_t>(b);
                mab[i] = static_cast<std::uint32_t>(a + b);
                if (A.product(A.dual_basis(ma), A.dual_basis(mb)) != scaled(f, f.binomial(a + b, a), A.dual_basis(mab)))
                    return Verdict::fail("mu-product: mu_" + g.name(i) + "^" + std::to_string(a) + " mu_" + g.name(i) +
                                         "^" + std::to_string(b) + " is not the binomial multiple");
            }
    }
    for (std::size_t i = 0; i < A.n(); ++i)
        for (std::size_t j = 0; j < A.levels(); ++j) {
            Vec pw = A.one();
            for (std::uint32_t t = 0; t < g.p(); ++t) pw = A.product(pw, A.eta(i, j));
            if (!is_zero(pw)) return Verdict::fail("mu-product: eta^p != 0");
        }
    for (std::size_t t = 0; t < A.m(); ++t)
        if (!is_zero(A.product(A.zeta(t), A.zeta(t)))) return Verdict::fail("mu-product: zeta^2 != 0");
    return Verdict::pass();
}

/// Omega is isomorphic to Coind(Pi^m k_{sign * strad}) through
/// chi(b)(x) = constant term of x.b, where sign = -1 is the claimed
/// character. Checks bijectivity, equivariance, A-linearity and that the
/// L_X satisfy the restricted relations.
inline Verdict omega_iso_check(const std::shared_ptr<const SplitEnveloping>& env, int strad_sign = -1) {
    if (env->mode() != Mode::restricted) throw std::invalid_argument("omega_iso_check: needs restricted mode");
    const auto& s = env->split();
    const auto& g = s.algebra();
    const Field& f = g.field();
    AlgebraA A(env);
    BerezinLine om = berezin_line(A);
    FiniteModule omega(s.algebra_ptr(), om.parities, om.generators);
    if (Verdict v = omega.validate(true); !v) return Verdict::fail("omega: " + v.witness);

    Character chi = strad(s);
    if (strad_sign < 0) chi = chi.negated(f);
    Representation target_rep = twist(f, trivial_representation(s), chi, static_cast<unsigned>(s.m()));
    CoinducedModule target(env, target_rep);

    const auto& G = env->global();
    Matrix map(target.dim(), A.dim());
    for (std::size_t w = 0; w < A.window().size(); ++w) {
        Matrix act = omega.action_matrix(G, UElement(A.window()[w], f.one()));
        for (std::size_t c = 0; c < A.dim(); ++c) map(w, c) = A.constant_term(act.column(c));
    }
    if (rank(f, map) != A.dim()) return Verdict::fail("omega: chi is not bijective");
    for (std::size_t x = 0; x < g.dim(); ++x)
        if (multiply(f, map, om.generators[x]) != multiply(f, target.generator_matrix(x), map))
            return Verdict::fail("omega: chi is not equivariant for " + g.name(x));
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < A.n(); ++i)
        for (std::size_t j = 0; j < A.levels(); ++j) gens.push_back(A.eta(i, j));
    for (std::size_t t = 0; t < A.m(); ++t) gens.push_back(A.zeta(t));
    for (const auto& a : gens) {
        Matrix mult_target(target.dim(), target.dim());
        for (std::size_t c = 0; c < target.dim(); ++c)
            mult_target.set_column(c, target.algebra_act(a, unit_vector(target.dim(), c)));
        if (multiply(f, map, A.multiplication(a)) != multiply(f, mult_target, map))
            return Verdict::fail("omega: chi is not A-linear");
    }
    return Verdict::pass();
}

}  // namespace supercoind
