#pragma once

// Representations of the subalgebra, twists and duals, and the induced and
// coinduced modules in monomial coordinates.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "supercoind/enveloping.hpp"
#include "supercoind/lie_superalgebra.hpp"
#include "supercoind/linalg.hpp"
#include "supercoind/report.hpp"

namespace supercoind {

/// Action matrices of a Lie superalgebra on a super vector space, one per
/// basis element of the acting algebra.
class Representation {
public:
    Representation() = default;
    Representation(std::vector<Parity> space_parities, std::vector<Parity> operator_parities,
                   std::vector<Matrix> action, std::string name = {})
        : space_(std::move(space_parities)), ops_(std::move(operator_parities)), action_(std::move(action)),
          name_(std::move(name)) {
        if (ops_.size() != action_.size()) throw std::invalid_argument("representation: operator count mismatch");
        for (const auto& a : action_)
            if (a.rows() != space_.size() || a.cols() != space_.size())
                throw std::invalid_argument("representation: matrix is not " + std::to_string(space_.size()) +
                                            "x" + std::to_string(space_.size()));
    }

    [[nodiscard]] std::size_t dim() const noexcept { return space_.size(); }
    [[nodiscard]] const std::vector<Parity>& parities() const noexcept { return space_; }
    [[nodiscard]] Parity parity(std::size_t k) const { return space_.at(k); }
    [[nodiscard]] const std::vector<Parity>& operator_parities() const noexcept { return ops_; }
    [[nodiscard]] std::size_t operator_count() const noexcept { return action_.size(); }
    [[nodiscard]] const Matrix& matrix(std::size_t k) const { return action_.at(k); }
    [[nodiscard]] const std::vector<Matrix>& matrices() const noexcept { return action_; }
    [[nodiscard]] const std::string& name() const noexcept { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }

    /// Linear extension to a vector in acting-algebra coordinates.
    [[nodiscard]] Matrix matrix_of(const Field& f, const Vec& x) const {
        if (x.size() != action_.size()) throw std::invalid_argument("representation: vector has wrong length");
        Matrix out(dim(), dim());
        for (std::size_t k = 0; k < x.size(); ++k)
            if (!x[k].is_zero()) out = add(f, out, action_[k], x[k]);
        return out;
    }

    friend bool operator==(const Representation& a, const Representation& b) {
        return a.space_ == b.space_ && a.ops_ == b.ops_ && a.action_ == b.action_;
    }

private:
    std::vector<Parity> space_;
    std::vector<Parity> ops_;
    std::vector<Matrix> action_;
    std::string name_;
};

/// Checks parity, bracket compatibility and, given a p-map on the acting
/// algebra, restrictedness. `bracket(a, b)` and `p_map(a)` return vectors in
/// acting-algebra coordinates.
using IndexToVec = std::function<Vec(std::size_t)>;

inline Verdict validate_action(const Field& f, const Representation& rep,
                               const std::function<Vec(std::size_t, std::size_t)>& bracket, const IndexToVec& p_map,
                               const std::vector<std::string>& names) {
    const std::size_t d = rep.operator_count();
    for (std::size_t a = 0; a < d; ++a) {
        const Matrix& m = rep.matrix(a);
        bool bad = false;
        for (std::size_t r = 0; r < m.rows() && !bad; ++r)
            for (std::size_t c = 0; c < m.cols() && !bad; ++c)
                bad = !m(r, c).is_zero() && (rep.parity(r) + rep.parity(c)) != rep.operator_parities()[a];
        if (bad)
            return Verdict::fail("representation: operator of " + names.at(a) + " has the wrong parity");
    }
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
            Matrix lhs = rep.matrix_of(f, bracket(a, b));
            Matrix rhs = supercommutator(f, rep.matrix(a), rep.operator_parities()[a], rep.matrix(b),
                                         rep.operator_parities()[b]);
            if (lhs != rhs) return Verdict::fail("representation: bracket fails on (" + names[a] + "," + names[b] + ")");
        }
    if (p_map)
        for (std::size_t a = 0; a < d; ++a) {
            if (is_odd(rep.operator_parities()[a])) continue;
            if (power(f, rep.matrix(a), f.p()) != rep.matrix_of(f, p_map(a)))
                return Verdict::fail("representation: not restricted at " + names[a]);
        }
    return Verdict::pass();
}

inline std::vector<std::string> subalgebra_names(const SubalgebraSplit& s) {
    std::vector<std::string> out;
    for (auto i : s.h_indices()) out.push_back(s.algebra().name(i));
    return out;
}

inline std::vector<Parity> subalgebra_parities(const SubalgebraSplit& s) {
    std::vector<Parity> out;
    for (std::size_t k = 0; k < s.h_dim(); ++k) out.push_back(s.h_parity(k));
    return out;
}

/// A representation of the subalgebra of `s`.
inline Verdict validate_representation(const SubalgebraSplit& s, const Representation& rep, bool restricted) {
    const auto& g = s.algebra();
    if (rep.operator_count() != s.h_dim()) return Verdict::fail("representation: wrong number of action matrices");
    if (rep.operator_parities() != subalgebra_parities(s))
        return Verdict::fail("representation: operator parities do not match the subalgebra");
    auto bracket = [&](std::size_t a, std::size_t b) {
        return s.restrict_h(g.bracket_basis(s.h_indices()[a], s.h_indices()[b]));
    };
    IndexToVec pm;
    if (restricted) {
        if (!g.has_p_map()) return Verdict::fail("representation: restricted check needs a p-map");
        pm = [&](std::size_t a) { return s.restrict_h(g.p_map(s.h_indices()[a])); };
    }
    return validate_action(g.field(), rep, bracket, pm, subalgebra_names(s));
}

inline Representation trivial_representation(const SubalgebraSplit& s) {
    return Representation({Parity::even}, subalgebra_parities(s), std::vector<Matrix>(s.h_dim(), Matrix(1, 1)),
                          "trivial");
}

/// One-dimensional module k_chi of the given parity.
inline Representation character_representation(const SubalgebraSplit& s, const Character& chi,
                                               Parity parity = Parity::even) {
    std::vector<Matrix> mats;
    for (std::size_t k = 0; k < s.h_dim(); ++k) {
        Matrix m(1, 1);
        m(0, 0) = chi.at(k);
        mats.push_back(m);
    }
    return Representation({parity}, subalgebra_parities(s), mats);
}

/// Matrix of the dual operator: <X.f, v> = -(-1)^{|X||f|} <f, X.v>.
inline Matrix contragredient_matrix(const Field& f, const Matrix& a, Parity op, const std::vector<Parity>& space) {
    Matrix out(a.cols(), a.rows());
    for (std::size_t j = 0; j < a.cols(); ++j)
        for (std::size_t k = 0; k < a.rows(); ++k) {
            // out(j, k) = <X.f_k, v_j>
            Fp c = a(k, j);
            if (c.is_zero()) continue;
            out(j, k) = f.mul(f.sign(!koszul_flip(op, space[k])), c);
        }
    return out;
}

inline Representation contragredient(const Field& f, const Representation& rep) {
    std::vector<Matrix> mats;
    for (std::size_t a = 0; a < rep.operator_count(); ++a)
        mats.push_back(contragredient_matrix(f, rep.matrix(a), rep.operator_parities()[a], rep.parities()));
    return Representation(rep.parities(), rep.operator_parities(), mats,
                          rep.name().empty() ? std::string{} : rep.name() + "*");
}

/// The double dual is the original through v -> (-1)^{|v|} v.
inline Verdict double_dual_check(const Field& f, const Representation& rep) {
    Representation dd = contragredient(f, contragredient(f, rep));
    for (std::size_t a = 0; a < rep.operator_count(); ++a) {
        const Matrix& m = rep.matrix(a);
        for (std::size_t j = 0; j < m.rows(); ++j)
            for (std::size_t k = 0; k < m.cols(); ++k) {
                bool flip = is_odd(rep.parity(j)) != is_odd(rep.parity(k));
                if (dd.matrix(a)(j, k) != f.mul(f.sign(flip), m(j, k)))
                    return Verdict::fail("double dual: mismatch at operator " + std::to_string(a));
            }
    }
    return Verdict::pass();
}

/// Pi^shifts k_chi ⊗ V: parities flipped `shifts` times, H acting by
/// chi(H) + (-1)^{shifts |H|} pi(H).
inline Representation twist(const Field& f, const Representation& rep, const Character& chi, unsigned shifts) {
    if (chi.values.size() != rep.operator_count()) throw std::invalid_argument("twist: character has wrong length");
    const bool flip = (shifts & 1U) != 0;
    std::vector<Parity> space = rep.parities();
    if (flip)
        for (auto& p : space) p += Parity::odd;
    std::vector<Matrix> mats;
    for (std::size_t a = 0; a < rep.operator_count(); ++a) {
        Fp s = f.sign(flip && is_odd(rep.operator_parities()[a]));
        Matrix m = scaled(f, s, rep.matrix(a));
        if (!chi.at(a).is_zero()) m = add(f, m, Matrix::identity(rep.dim()), chi.at(a));
        mats.push_back(m);
    }
    return Representation(space, rep.operator_parities(), mats);
}

/// Complement monomials with even exponents below `bound` and odd exponents
/// at most 1, in lexicographic order on full exponent vectors.
inline std::vector<Monomial> complement_window(const SubalgebraSplit& s, std::uint64_t bound) {
    const auto& g = s.algebra();
    std::vector<Monomial> out{Monomial(g.dim(), 0)};
    for (auto i : s.p_indices()) {
        std::uint64_t top = is_odd(g.parity(i)) ? 2 : bound;
        std::vector<Monomial> next;
        for (const auto& m : out)
            for (std::uint64_t e = 0; e < top; ++e) {
                Monomial x = m;
                x[i] = static_cast<std::uint32_t>(e);
                next.push_back(std::move(x));
            }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Generator matrices of a finite-dimensional module over the whole algebra.
class FiniteModule {
public:
    FiniteModule(std::shared_ptr<const LieSuperData> g, std::vector<Parity> parities, std::vector<Matrix> generators)
        : g_(std::move(g)), parities_(std::move(parities)), gens_(std::move(generators)) {
        if (gens_.size() != g_->dim()) throw std::invalid_argument("module: one matrix per generator expected");
    }

    [[nodiscard]] const LieSuperData& algebra() const noexcept { return *g_; }
    [[nodiscard]] std::size_t dim() const noexcept { return parities_.size(); }
    [[nodiscard]] const std::vector<Parity>& parities() const noexcept { return parities_; }
    [[nodiscard]] const Matrix& generator(std::size_t i) const { return gens_.at(i); }
    [[nodiscard]] const std::vector<Matrix>& generators() const noexcept { return gens_; }

    /// Matrix of u, with u read in the order of `U`.
    [[nodiscard]] Matrix action_matrix(const Enveloping& U, const UElement& u) const {
        const Field& f = g_->field();
        Matrix out(dim(), dim());
        for (const auto& [m, c] : u.terms()) {
            Matrix term = Matrix::identity(dim());
            for (auto x : U.word(m)) term = multiply(f, term, gens_[x]);
            out = add(f, out, term, c);
        }
        return out;
    }

    /// Representation of g, restricted when g carries a p-map.
    [[nodiscard]] Verdict validate(bool restricted) const {
        const auto& g = *g_;
        std::vector<std::string> names;
        for (std::size_t i = 0; i < g.dim(); ++i) names.push_back(g.name(i));
        Representation rep(parities_, g.parities(), gens_);
        auto bracket = [&](std::size_t a, std::size_t b) { return g.bracket_basis(a, b); };
        IndexToVec pm;
        if (restricted) pm = [&](std::size_t a) { return g.p_map(a); };
        return validate_action(g.field(), rep, bracket, pm, names);
    }

    [[nodiscard]] FiniteModule dual() const {
        std::vector<Matrix> mats;
        for (std::size_t i = 0; i < gens_.size(); ++i)
            mats.push_back(contragredient_matrix(g_->field(), gens_[i], g_->parity(i), parities_));
        return FiniteModule(g_, parities_, mats);
    }

private:
    std::shared_ptr<const LieSuperData> g_;
    std::vector<Parity> parities_;
    std::vector<Matrix> gens_;
};

/// Coind(pi): V-valued functions on complement monomials, extended to
/// U(h)-equivariant functions on U(g). Coordinate (w, k) is the k-th
/// component of the value at window[w]. In unrestricted mode the window is
/// the truncation with even exponents below `bound`.
class CoinducedModule {
public:
    CoinducedModule(std::shared_ptr<const SplitEnveloping> env, Representation rep, std::uint64_t bound = 0)
        : env_(std::move(env)), rep_(std::move(rep)) {
        const auto& s = env_->split();
        if (rep_.operator_count() != s.h_dim()) throw std::invalid_argument("coinduce: representation does not match split");
        if (bound == 0) {
            if (env_->mode() != Mode::restricted) throw std::invalid_argument("coinduce: unrestricted mode needs a window bound");
            bound = s.algebra().p();
        }
        bound_ = bound;
        window_ = complement_window(s, bound_);
        for (std::size_t w = 0; w < window_.size(); ++w) index_.emplace(window_[w], w);
    }

    [[nodiscard]] const SplitEnveloping& env() const noexcept { return *env_; }
    [[nodiscard]] const std::shared_ptr<const SplitEnveloping>& env_ptr() const noexcept { return env_; }
    [[nodiscard]] const Representation& rep() const noexcept { return rep_; }
    [[nodiscard]] const Field& field() const noexcept { return env_->field(); }
    [[nodiscard]] std::uint64_t bound() const noexcept { return bound_; }
    [[nodiscard]] const std::vector<Monomial>& window() const noexcept { return window_; }
    [[nodiscard]] std::size_t dim() const noexcept { return window_.size() * rep_.dim(); }
    [[nodiscard]] std::size_t index(std::size_t w, std::size_t k) const { return w * rep_.dim() + k; }
    [[nodiscard]] std::optional<std::size_t> window_index(const Monomial& m) const {
        auto it = index_.find(m);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }
    [[nodiscard]] Parity parity(std::size_t idx) const {
        return env_->global().parity(window_[idx / rep_.dim()]) + rep_.parity(idx % rep_.dim());
    }
    [[nodiscard]] std::vector<Parity> parities() const {
        std::vector<Parity> out;
        for (std::size_t i = 0; i < dim(); ++i) out.push_back(parity(i));
        return out;
    }

    /// Value at window[w].
    [[nodiscard]] Vec value(const Vec& lambda, std::size_t w) const {
        return Vec(lambda.begin() + static_cast<std::ptrdiff_t>(w * rep_.dim()),
                   lambda.begin() + static_cast<std::ptrdiff_t>((w + 1) * rep_.dim()));
    }

    /// The function with <1, v^> = v and zero on other window monomials.
    [[nodiscard]] Vec hat(const Vec& v) const {
        if (v.size() != rep_.dim()) throw std::invalid_argument("coinduce: vector has wrong length");
        Vec out(dim());
        std::size_t w0 = index_.at(Monomial(env_->algebra().dim(), 0));
        for (std::size_t k = 0; k < v.size(); ++k) out[index(w0, k)] = v[k];
        return out;
    }

    /// pi extended multiplicatively to a U(h) monomial.
    [[nodiscard]] Matrix h_action(const Monomial& h) const {
        {
            std::lock_guard<std::mutex> lock(cache_mutex_);
            auto it = h_cache_.find(h);
            if (it != h_cache_.end()) return it->second;
        }
        const Field& f = field();
        const auto& s = env_->split();
        Matrix out = Matrix::identity(rep_.dim());
        for (std::size_t k = 0; k < s.h_dim(); ++k)
            for (std::uint32_t e = 0; e < h.at(s.h_indices()[k]); ++e) out = multiply(f, out, rep_.matrix(k));
        std::lock_guard<std::mutex> lock(cache_mutex_);
        h_cache_.emplace(h, out);
        return out;
    }

    /// <u, lambda> for u written in the subalgebra-left order.
    [[nodiscard]] Vec evaluate_left(const UElement& u_left, const Vec& lambda) const {
        const Field& f = field();
        Vec out(rep_.dim());
        for (const auto& [m, c] : u_left.terms()) {
            Monomial pm = env_->complement_part(m);
            auto w = window_index(pm);
            if (!w) throw std::out_of_range("coinduce: complement monomial outside the window");
            Vec val = apply(f, h_action(env_->subalgebra_part(m)), value(lambda, *w));
            axpy(f, out, c, val);
        }
        return out;
    }

    /// <u, lambda> for u in global normal form.
    [[nodiscard]] Vec evaluate(const UElement& u, const Vec& lambda) const {
        return evaluate_left(env_->h_left().convert_from(env_->global(), u), lambda);
    }

    /// <m, u.lambda> = <m u, lambda>.
    [[nodiscard]] Vec act(const UElement& u, const Vec& lambda) const {
        const auto& L = env_->h_left();
        UElement ul = L.convert_from(env_->global(), u);
        Vec out(dim());
        for (std::size_t w = 0; w < window_.size(); ++w) {
            Vec val = evaluate_left(L.multiply(UElement(window_[w], field().one()), ul), lambda);
            for (std::size_t k = 0; k < rep_.dim(); ++k) out[index(w, k)] = val[k];
        }
        return out;
    }

    [[nodiscard]] Matrix action_matrix_direct(const UElement& u) const {
        Matrix out(dim(), dim());
        for (std::size_t c = 0; c < dim(); ++c) out.set_column(c, act(u, unit_vector(dim(), c)));
        return out;
    }

    [[nodiscard]] const Matrix& generator_matrix(std::size_t i) const {
        {
            std::lock_guard<std::mutex> lock(cache_mutex_);
            auto it = gen_cache_.find(i);
            if (it != gen_cache_.end()) return it->second;
        }
        Matrix m = action_matrix_direct(env_->global().generator(i));
        std::lock_guard<std::mutex> lock(cache_mutex_);
        return gen_cache_.try_emplace(i, std::move(m)).first->second;
    }

    /// Only meaningful for the restricted module, where the window is closed
    /// under the action.
    [[nodiscard]] FiniteModule as_module() const {
        std::vector<Matrix> gens;
        for (std::size_t i = 0; i < env_->algebra().dim(); ++i) gens.push_back(generator_matrix(i));
        return FiniteModule(env_->split().algebra_ptr(), parities(), gens);
    }

    /// <m, a mu> = Σ (-1)^{|m1||m2|} a(m1) mu(m2) over Delta(m) = Σ m1 ⊗ m2,
    /// for a a scalar function on the same window.
    [[nodiscard]] Vec algebra_act(const Vec& a, const Vec& mu) const {
        const Field& f = field();
        const auto& G = env_->global();
        if (a.size() != window_.size()) throw std::invalid_argument("coinduce: scalar function has wrong length");
        Vec out(dim());
        for (std::size_t w = 0; w < window_.size(); ++w) {
            Vec acc(rep_.dim());
            for (auto cp = G.coproduct(window_[w]); const auto& [k, c] : cp.terms()) {
                std::size_t w1 = index_.at(k.first);
                std::size_t w2 = index_.at(k.second);
                if (a[w1].is_zero()) continue;
                Fp s = f.sign(koszul_flip(G.parity(k.first), G.parity(k.second)));
                axpy(f, acc, f.mul(s, f.mul(c, a[w1])), value(mu, w2));
            }
            for (std::size_t k = 0; k < rep_.dim(); ++k) out[index(w, k)] = acc[k];
        }
        return out;
    }

private:
    std::shared_ptr<const SplitEnveloping> env_;
    Representation rep_;
    std::uint64_t bound_ = 0;
    std::vector<Monomial> window_;
    std::map<Monomial, std::size_t> index_;
    mutable std::mutex cache_mutex_;
    mutable std::map<Monomial, Matrix> h_cache_;
    mutable std::map<std::size_t, Matrix> gen_cache_;
};

/// Ind(pi) = U'(g) ⊗_{U'(h)} V on the basis window[w] ⊗ v_k, coordinate w*dim V + k.
class InducedModule {
public:
    InducedModule(std::shared_ptr<const SplitEnveloping> env, Representation rep)
        : env_(std::move(env)), rep_(std::move(rep)) {
        if (env_->mode() != Mode::restricted) throw std::invalid_argument("induce: needs restricted mode");
        const auto& s = env_->split();
        if (rep_.operator_count() != s.h_dim()) throw std::invalid_argument("induce: representation does not match split");
        window_ = complement_window(s, s.algebra().p());
        for (std::size_t w = 0; w < window_.size(); ++w) index_.emplace(window_[w], w);
    }

    [[nodiscard]] const SplitEnveloping& env() const noexcept { return *env_; }
    [[nodiscard]] const Representation& rep() const noexcept { return rep_; }
    [[nodiscard]] const Field& field() const noexcept { return env_->field(); }
    [[nodiscard]] const std::vector<Monomial>& window() const noexcept { return window_; }
    [[nodiscard]] std::size_t dim() const noexcept { return window_.size() * rep_.dim(); }
    [[nodiscard]] std::size_t index(std::size_t w, std::size_t k) const { return w * rep_.dim() + k; }
    [[nodiscard]] Parity parity(std::size_t idx) const {
        return env_->global().parity(window_[idx / rep_.dim()]) + rep_.parity(idx % rep_.dim());
    }
    [[nodiscard]] std::vector<Parity> parities() const {
        std::vector<Parity> out;
        for (std::size_t i = 0; i < dim(); ++i) out.push_back(parity(i));
        return out;
    }

    /// Coordinates of the class of u ⊗ v, u in subalgebra-right order.
    [[nodiscard]] Vec reduce_right(const UElement& u_right, const Vec& v) const {
        const Field& f = field();
        const auto& s = env_->split();
        Vec out(dim());
        for (const auto& [m, c] : u_right.terms()) {
            std::size_t w = index_.at(env_->complement_part(m));
            Vec x = v;
            Monomial h = env_->subalgebra_part(m);
            // h acts on v first with its rightmost generator
            for (std::size_t k = s.h_dim(); k-- > 0;)
                for (std::uint32_t e = 0; e < h[s.h_indices()[k]]; ++e) x = apply(f, rep_.matrix(k), x);
            for (std::size_t k = 0; k < rep_.dim(); ++k) out[index(w, k)] = f.add(out[index(w, k)], f.mul(c, x[k]));
        }
        return out;
    }

    [[nodiscard]] Vec act(const UElement& u, const Vec& x) const {
        const Field& f = field();
        const auto& R = env_->h_right();
        UElement ur = R.convert_from(env_->global(), u);
        Vec out(dim());
        for (std::size_t w = 0; w < window_.size(); ++w)
            for (std::size_t k = 0; k < rep_.dim(); ++k) {
                Fp c = x[index(w, k)];
                if (c.is_zero()) continue;
                UElement prod = R.multiply(ur, UElement(window_[w], f.one()));
                axpy(f, out, c, reduce_right(prod, unit_vector(rep_.dim(), k)));
            }
        return out;
    }

    [[nodiscard]] Matrix action_matrix_direct(const UElement& u) const {
        Matrix out(dim(), dim());
        for (std::size_t c = 0; c < dim(); ++c) out.set_column(c, act(u, unit_vector(dim(), c)));
        return out;
    }

    [[nodiscard]] FiniteModule as_module() const {
        std::vector<Matrix> gens;
        for (std::size_t i = 0; i < env_->algebra().dim(); ++i)
            gens.push_back(action_matrix_direct(env_->global().generator(i)));
        return FiniteModule(env_->split().algebra_ptr(), parities(), gens);
    }

private:
    std::shared_ptr<const SplitEnveloping> env_;
    Representation rep_;
    std::vector<Monomial> window_;
    std::map<Monomial, std::size_t> index_;
};

}  // namespace supercoind
