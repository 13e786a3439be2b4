#pragma once

// Level-r truncations in the unrestricted setting: the maps Phi^r, the
// balance over U(h), the transition iota_{r,r+1} and injectivity witnesses.

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "supercoind/coordinate_algebra.hpp"
#include "supercoind/duality.hpp"
#include "supercoind/enveloping.hpp"
#include "supercoind/linalg.hpp"
#include "supercoind/report.hpp"
#include "supercoind/representations.hpp"

namespace supercoind {

inline std::uint64_t level_bound(std::uint32_t p, unsigned r) {
    std::uint64_t b = p;
    for (unsigned j = 0; j < r; ++j) b *= p;
    return b;
}

/// Coind(pi) truncated to F_r together with Lambda_{<=r} v^ for each basis v.
class TruncatedPhi {
public:
    TruncatedPhi(std::shared_ptr<const SplitEnveloping> env, const Representation& pi, unsigned r)
        : env_(env), r_(r), coind_(env, pi, level_bound(env->algebra().p(), r)), algebra_(env, coind_.bound()) {
        if (env->mode() != Mode::unrestricted) throw std::invalid_argument("phi_r: needs unrestricted mode");
        lambda_ = lambda_element(algebra_);
    }

    [[nodiscard]] unsigned level() const noexcept { return r_; }
    [[nodiscard]] const CoinducedModule& coind() const noexcept { return coind_; }
    [[nodiscard]] const AlgebraA& algebra() const noexcept { return algebra_; }
    [[nodiscard]] const Vec& lambda() const noexcept { return lambda_; }

    /// Whether x lies in F_r.
    [[nodiscard]] bool in_filtration(const UElement& x) const {
        return env_->filtration_degree(x) <= static_cast<int>(r_);
    }

    /// Phi^r_{u ⊗ (Lambda ⊗ v)}(w) = <w u, Lambda_{<=r} v^>.
    [[nodiscard]] Vec eval(const UElement& u, const Vec& v, const UElement& w) const {
        const auto& G = env_->global();
        UElement wu = G.multiply(w, u);
        if (!in_filtration(wu)) throw std::invalid_argument("phi_r: w u is not in F_" + std::to_string(r_));
        return coind_.evaluate(wu, coind_.algebra_act(lambda_, coind_.hat(v)));
    }

private:
    std::shared_ptr<const SplitEnveloping> env_;
    unsigned r_;
    CoinducedModule coind_;
    AlgebraA algebra_;
    Vec lambda_;
};

inline Vec phi_r_eval(const std::shared_ptr<const SplitEnveloping>& env, const Representation& pi, const UElement& u,
                      const Vec& v, unsigned r, const UElement& w) {
    return TruncatedPhi(env, pi, r).eval(u, v, w);
}

/// Phi^r_{uH ⊗ (Lambda ⊗ v)} = Phi^r_{u ⊗ H(Lambda ⊗ v)} with
/// H(Lambda ⊗ v) = strad(H) Lambda ⊗ v + (-1)^{|H| m} Lambda ⊗ Hv.
inline Verdict balance_check(const TruncatedPhi& T, const UElement& u, const Vec& v, std::size_t h_pos,
                             const UElement& w) {
    const auto& co = T.coind();
    const auto& s = co.env().split();
    const Field& f = co.field();
    const auto& G = co.env().global();
    std::size_t H = s.h_indices().at(h_pos);
    UElement uh = G.multiply(u, G.generator(H));
    Vec lhs = T.eval(uh, v, w);
    Vec rhs = scaled(f, strad(s).at(h_pos), T.eval(u, v, w));
    bool odd_swap = is_odd(s.algebra().parity(H)) && (s.m() % 2 == 1);
    axpy(f, rhs, f.sign(odd_swap), T.eval(u, apply(f, co.rep().matrix(h_pos), v), w));
    if (lhs != rhs) return Verdict::fail("balance: fails for " + s.algebra().name(H));
    return Verdict::pass();
}

/// prod_i eta_{i,r+1}^{p-1} in the level r+1 algebra.
inline Vec iota_factor(const AlgebraA& next, unsigned r) {
    const std::uint32_t p = next.split().algebra().p();
    EtaMonomial e;
    e.c.assign(next.n(), std::vector<std::uint32_t>(next.levels(), 0));
    for (auto& row : e.c) row.at(r + 1) = p - 1;
    e.beta.assign(next.m(), 0);
    return next.eta_monomial(e);
}

/// iota_{r,r+1}[Phi^r](w) = Phi^{r+1}(w). The left side multiplies by the
/// iota factor through the coproduct of w and evaluates Phi^r on the
/// second tensor factor; the right side is Phi^{r+1} directly.
inline Verdict iota_compat_check(const TruncatedPhi& T, const TruncatedPhi& next, const UElement& u, const Vec& v,
                                 const UElement& w) {
    const auto& co = next.coind();
    const Field& f = co.field();
    const auto& G = co.env().global();
    if (next.level() != T.level() + 1) throw std::invalid_argument("iota: levels must be consecutive");
    Vec a = iota_factor(next.algebra(), T.level());
    Vec lhs(co.rep().dim());
    for (const auto& [m, c] : w.terms())
        for (auto cp = G.coproduct(m); const auto& [k, coef] : cp.terms()) {
            auto w1 = co.window_index(k.first);
            if (!w1) throw std::invalid_argument("iota: w is not in F_" + std::to_string(next.level()));
            if (a[*w1].is_zero()) continue;
            Fp sg = f.sign(koszul_flip(G.parity(k.first), G.parity(k.second)));
            Vec val = T.eval(u, v, UElement(k.second, f.one()));
            axpy(f, lhs, f.mul(sg, f.mul(c, f.mul(coef, a[*w1]))), val);
        }
    Vec rhs = next.eval(u, v, w);
    if (lhs != rhs) return Verdict::fail("iota: iota(Phi^r)(w) differs from Phi^{r+1}(w)");
    return Verdict::pass();
}

/// One term x^a ⊗ v_a of an element of the truncated induced module.
struct InducedTerm {
    Monomial a;
    Vec v;
};

struct InjectivityWitness {
    bool vacuous = false;
    bool from_complement = false;
    Monomial w;
    Verdict verdict;
};

/// For nonzero sum x^a ⊗ v_a with complement monomials x^a in F_r, finds w
/// with Phi^r(w) != 0. The first candidates are the complementary exponents
/// x^{top - a}; otherwise the whole window is searched.
inline InjectivityWitness phi_r_injectivity_check(const TruncatedPhi& T, const std::vector<InducedTerm>& raw) {
    const auto& co = T.coind();
    const auto& s = co.env().split();
    const Field& f = co.field();
    const auto& G = co.env().global();
    std::map<Monomial, Vec> merged;
    for (const auto& t : raw) {
        auto [it, fresh] = merged.try_emplace(t.a, t.v);
        if (!fresh) it->second = added(f, it->second, t.v);
    }
    std::vector<InducedTerm> terms;
    for (auto& [a, v] : merged) terms.push_back({a, v});
    InjectivityWitness out;
    bool nonzero = false;
    for (const auto& t : terms) nonzero = nonzero || !is_zero(t.v);
    if (!nonzero) {
        out.vacuous = true;
        return out;
    }
    auto value_at = [&](const Monomial& w) -> std::optional<Vec> {
        Vec acc(co.rep().dim());
        for (const auto& t : terms) {
            if (is_zero(t.v)) continue;
            UElement w1(w, f.one()), u(t.a, f.one());
            if (!T.in_filtration(G.multiply(w1, u))) return std::nullopt;
            acc = added(f, acc, T.eval(u, t.v, w1));
        }
        return acc;
    };
    Monomial top = top_monomial(s, co.bound());
    for (const auto& t : terms) {
        if (is_zero(t.v)) continue;
        Monomial w = top;
        for (auto i : s.p_indices()) w[i] -= t.a[i];
        if (auto val = value_at(w); val && !is_zero(*val)) {
            out.from_complement = true;
            out.w = w;
            return out;
        }
    }
    for (const auto& w : co.window())
        if (auto val = value_at(w); val && !is_zero(*val)) {
            out.w = w;
            return out;
        }
    std::string desc;
    for (const auto& t : terms) {
        if (is_zero(t.v)) continue;
        desc += desc.empty() ? "x^(" : " + x^(";
        for (std::size_t i = 0; i < t.a.size(); ++i) desc += (i ? "," : "") + std::to_string(t.a[i]);
        desc += ")";
    }
    out.verdict = Verdict::fail("injectivity: Phi^r vanishes on mu_u^{-1}(F_r) for nonzero u = " + desc);
    return out;
}

struct EquivarianceObservation {
    std::size_t agree = 0;
    std::size_t disagree = 0;
    std::size_t undefined = 0;
};

/// Compares X.Phi^r_{1 ⊗ v} in the truncated coinduced module with
/// Phi^r_{X ⊗ v} on every window point where both are defined. Reported, not asserted.
inline EquivarianceObservation phi_r_equivariance(const TruncatedPhi& T, const Vec& v) {
    const auto& co = T.coind();
    const Field& f = co.field();
    const auto& G = co.env().global();
    EquivarianceObservation out;
    Vec base = co.algebra_act(T.lambda(), co.hat(v));
    for (std::size_t x = 0; x < G.dim(); ++x) {
        for (std::size_t w = 0; w < co.window().size(); ++w) {
            UElement wm(co.window()[w], f.one());
            Vec left;
            try {
                left = co.evaluate(G.multiply(wm, G.generator(x)), base);
            } catch (const std::out_of_range&) {
                ++out.undefined;
                continue;
            }
            if (!T.in_filtration(G.multiply(wm, G.generator(x)))) {
                ++out.undefined;
                continue;
            }
            Vec right = T.eval(G.generator(x), v, wm);
            ++(left == right ? out.agree : out.disagree);
        }
    }
    return out;
}

/// Complement monomial with even exponents below `bound` and odd exponents 0 or 1.
inline Monomial sample_complement(std::mt19937& rng, const SubalgebraSplit& s, std::uint64_t bound) {
    Monomial m(s.algebra().dim(), 0);
    for (auto i : s.p_indices()) m[i] = is_odd(s.algebra().parity(i)) ? rng() % 2 : static_cast<std::uint32_t>(rng() % bound);
    return m;
}

/// Complement monomial b with a + b still below `bound` (odd exponents at most 1).
inline Monomial sample_cofactor(std::mt19937& rng, const SubalgebraSplit& s, const Monomial& a, std::uint64_t bound) {
    Monomial m(s.algebra().dim(), 0);
    for (auto i : s.p_indices()) {
        std::uint64_t room = is_odd(s.algebra().parity(i)) ? 1 - a[i] : bound - 1 - a[i];
        m[i] = static_cast<std::uint32_t>(rng() % (room + 1));
    }
    return m;
}

inline Vec sample_vector(std::mt19937& rng, const Field& f, std::size_t dim) {
    Vec v(dim);
    for (auto& x : v) x = Fp{static_cast<std::uint32_t>(rng() % f.p())};
    return v;
}

struct SampledOutcome {
    std::size_t checked = 0;
    std::size_t skipped = 0;
    Verdict verdict;
};

/// Balance over every h generator on sampled u = x^a, w = x^b inside F_r.
inline SampledOutcome sampled_balance(const TruncatedPhi& T, std::mt19937& rng, std::size_t samples) {
    const auto& co = T.coind();
    const auto& s = co.env().split();
    const auto& G = co.env().global();
    const Field& f = co.field();
    SampledOutcome out;
    while (out.checked < samples && out.skipped < 20 * samples + 100) {
        Monomial a = sample_complement(rng, s, co.bound());
        Monomial b = sample_cofactor(rng, s, a, co.bound());
        Vec v = sample_vector(rng, f, co.rep().dim());
        UElement u(a, f.one()), w(b, f.one());
        bool any = false;
        for (std::size_t h = 0; h < s.h_dim(); ++h) {
            UElement wuh = G.multiply(G.multiply(w, u), G.generator(s.h_indices()[h]));
            if (!T.in_filtration(wuh) || !T.in_filtration(G.multiply(w, u))) continue;
            any = true;
            if (Verdict vd = balance_check(T, u, v, h, w); !vd) {
                out.verdict = vd;
                return out;
            }
        }
        ++(any || s.h_dim() == 0 ? out.checked : out.skipped);
    }
    return out;
}

/// iota_{r,r+1} compatibility on sampled u in F_r and w with w u in F_{r+1}.
inline SampledOutcome sampled_iota(const TruncatedPhi& T, const TruncatedPhi& next, std::mt19937& rng,
                                   std::size_t samples) {
    const auto& co = next.coind();
    const auto& s = co.env().split();
    const auto& G = co.env().global();
    const Field& f = co.field();
    SampledOutcome out;
    while (out.checked < samples && out.skipped < 20 * samples + 100) {
        Monomial a = sample_complement(rng, s, T.coind().bound());
        Monomial b = sample_cofactor(rng, s, a, co.bound());
        Vec v = sample_vector(rng, f, co.rep().dim());
        UElement u(a, f.one()), w(b, f.one());
        if (!next.in_filtration(G.multiply(w, u))) {
            ++out.skipped;
            continue;
        }
        Verdict vd;
        try {
            vd = iota_compat_check(T, next, u, v, w);
        } catch (const std::invalid_argument&) {
            ++out.skipped;
            continue;
        }
        if (!vd) {
            out.verdict = vd;
            return out;
        }
        ++out.checked;
    }
    return out;
}

/// Injectivity witnesses for sampled elements with up to three terms.
inline SampledOutcome sampled_injectivity(const TruncatedPhi& T, std::mt19937& rng, std::size_t samples) {
    const auto& co = T.coind();
    const auto& s = co.env().split();
    const Field& f = co.field();
    SampledOutcome out;
    while (out.checked < samples) {
        std::vector<InducedTerm> terms;
        std::size_t count = 1 + rng() % 3;
        for (std::size_t k = 0; k < count; ++k)
            terms.push_back({sample_complement(rng, s, co.bound()), sample_vector(rng, f, co.rep().dim())});
        InjectivityWitness w = phi_r_injectivity_check(T, terms);
        if (!w.verdict) {
            out.verdict = w.verdict;
            return out;
        }
        ++(w.vacuous ? out.skipped : out.checked);
    }
    return out;
}

}  // namespace supercoind
