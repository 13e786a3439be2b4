#pragma once

// Enveloping algebras U(g) and U'(g) on PBW monomials: straightening,
// coproduct, antipode, counit, reorderings relative to a split, primitive
// elements and the filtration degree.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "supercoind/field.hpp"
#include "supercoind/lie_superalgebra.hpp"
#include "supercoind/lincomb.hpp"
#include "supercoind/linalg.hpp"
#include "supercoind/report.hpp"

namespace supercoind {

enum class Mode { unrestricted, restricted };

inline const char* to_string(Mode m) { return m == Mode::restricted ? "restricted" : "unrestricted"; }

/// Straightening engine for one ordering of the basis.
///
/// A monomial x^a denotes the ordered product of x_i^{a_i} taken in the
/// engine's order. The default order is the global basis order.
class Enveloping {
public:
    Enveloping(std::shared_ptr<const LieSuperData> algebra, Mode mode, std::vector<std::size_t> order = {},
               std::uint64_t degree_cap = 0)
        : g_(std::move(algebra)), mode_(mode), order_(std::move(order)), cap_(degree_cap) {
        if (!g_) throw std::invalid_argument("enveloping: null algebra");
        const std::size_t d = g_->dim();
        if (order_.empty()) {
            order_.resize(d);
            std::iota(order_.begin(), order_.end(), std::size_t{0});
        }
        if (order_.size() != d) throw std::invalid_argument("enveloping: order has wrong length");
        pos_.assign(d, d);
        for (std::size_t k = 0; k < d; ++k) {
            if (order_[k] >= d || pos_[order_[k]] != d) throw std::invalid_argument("enveloping: order is not a permutation");
            pos_[order_[k]] = k;
        }
        if (mode_ == Mode::restricted && !g_->has_p_map())
            throw std::invalid_argument("enveloping: restricted mode needs a p-map");
        if (cap_ == 0) {
            std::uint64_t p = g_->p();
            cap_ = p * p * p;
        }
    }

    Enveloping(const Enveloping&) = delete;
    Enveloping& operator=(const Enveloping&) = delete;

    [[nodiscard]] const LieSuperData& algebra() const noexcept { return *g_; }
    [[nodiscard]] const std::shared_ptr<const LieSuperData>& algebra_ptr() const noexcept { return g_; }
    [[nodiscard]] const Field& field() const noexcept { return g_->field(); }
    [[nodiscard]] Mode mode() const noexcept { return mode_; }
    [[nodiscard]] const std::vector<std::size_t>& order() const noexcept { return order_; }
    [[nodiscard]] std::uint64_t degree_cap() const noexcept { return cap_; }
    [[nodiscard]] std::size_t dim() const noexcept { return g_->dim(); }

    [[nodiscard]] Parity parity(const Monomial& m) const {
        unsigned odd = 0;
        for (std::size_t i = g_->n_even(); i < m.size(); ++i) odd += m[i];
        return parity_of(odd);
    }

    /// Parity of a homogeneous element; throws on mixed parity. Zero is even.
    [[nodiscard]] Parity parity(const UElement& u) const {
        bool ev = false;
        bool od = false;
        for (const auto& [m, c] : u.terms()) (is_odd(parity(m)) ? od : ev) = true;
        if (ev && od) throw std::invalid_argument("enveloping: element is not homogeneous");
        return od ? Parity::odd : Parity::even;
    }

    void check_monomial(const Monomial& m) const {
        if (m.size() != dim()) throw std::invalid_argument("enveloping: monomial has wrong length");
        for (std::size_t i = 0; i < dim(); ++i) {
            if (is_odd(g_->parity(i)) && m[i] > 1)
                throw std::invalid_argument("enveloping: odd exponent above 1 on " + g_->name(i));
            if (mode_ == Mode::restricted && !is_odd(g_->parity(i)) && m[i] >= g_->p())
                throw std::invalid_argument("enveloping: restricted exponent at least p on " + g_->name(i));
        }
        if (mode_ == Mode::unrestricted && degree(m) > cap_)
            throw std::length_error("enveloping: degree cap exceeded");
    }

    [[nodiscard]] UElement one() const { return UElement(Monomial(dim(), 0), field().one()); }
    [[nodiscard]] UElement generator(std::size_t i) const { return UElement(generator_monomial(dim(), i), field().one()); }
    [[nodiscard]] UElement from_vector(const Vec& x) const {
        if (x.size() != dim()) throw std::invalid_argument("enveloping: vector has wrong length");
        UElement u;
        for (std::size_t i = 0; i < dim(); ++i) u.add(field(), generator_monomial(dim(), i), x[i]);
        return u;
    }
    [[nodiscard]] UElement monomial(const Monomial& m) const {
        check_monomial(m);
        return UElement(m, field().one());
    }

    /// Generators of the monomial listed left to right.
    [[nodiscard]] std::vector<std::size_t> word(const Monomial& m) const {
        std::vector<std::size_t> w;
        for (auto i : order_)
            for (std::uint32_t k = 0; k < m.at(i); ++k) w.push_back(i);
        return w;
    }

    /// x_g times the normal-form monomial m.
    const UElement& left_multiply(std::size_t g, const Monomial& m) const {
        auto key = std::make_pair(g, m);
        {
            std::lock_guard<std::mutex> lock(memo_mutex_);
            auto it = memo_.find(key);
            if (it != memo_.end()) return it->second;
        }
        UElement result = compute_left_multiply(g, m);
        std::lock_guard<std::mutex> lock(memo_mutex_);
        return memo_.try_emplace(std::move(key), std::move(result)).first->second;
    }

    [[nodiscard]] UElement left_multiply(std::size_t g, const UElement& u) const {
        UElement out;
        for (const auto& [m, c] : u.terms()) out.add(field(), left_multiply(g, m), c);
        return out;
    }

    /// Product of generators x_{w_0} x_{w_1} ... applied to v.
    [[nodiscard]] UElement multiply_word(const std::vector<std::size_t>& w, UElement v) const {
        for (auto it = w.rbegin(); it != w.rend(); ++it) v = left_multiply(*it, v);
        return v;
    }

    [[nodiscard]] UElement from_word(const std::vector<std::size_t>& w) const { return multiply_word(w, one()); }

    [[nodiscard]] UElement multiply(const UElement& u, const UElement& v) const {
        UElement out;
        for (const auto& [m, c] : u.terms()) out.add(field(), multiply_word(word(m), v), c);
        return out;
    }

    /// Re-expresses an element written for another engine of the same algebra.
    [[nodiscard]] UElement convert_from(const Enveloping& other, const UElement& u) const {
        if (other.g_ != g_ && !(*other.g_ == *g_)) throw std::invalid_argument("enveloping: algebra mismatch");
        UElement out;
        for (const auto& [m, c] : u.terms()) out.add(field(), from_word(other.word(m)), c);
        return out;
    }

    [[nodiscard]] Fp counit(const UElement& u) const { return u.coeff(Monomial(dim(), 0)); }

    /// Delta(x) = x⊗1 + 1⊗x extended multiplicatively; closed form on monomials.
    [[nodiscard]] TensorSquareElement coproduct(const Monomial& m) const {
        const Field& f = field();
        TensorSquareElement out;
        std::vector<std::size_t> slots;
        for (auto i : order_)
            if (m.at(i) != 0) slots.push_back(i);
        Monomial b(dim(), 0);
        enumerate_splits(m, slots, 0, b, out, f);
        return out;
    }

    [[nodiscard]] TensorSquareElement coproduct(const UElement& u) const {
        TensorSquareElement out;
        for (const auto& [m, c] : u.terms()) out.add(field(), coproduct(m), c);
        return out;
    }

    /// (u1⊗u2)(v1⊗v2) = (-1)^{|u2||v1|} u1v1 ⊗ u2v2.
    [[nodiscard]] TensorSquareElement tensor_multiply(const TensorSquareElement& x, const TensorSquareElement& y) const {
        const Field& f = field();
        TensorSquareElement out;
        for (const auto& [xk, xc] : x.terms())
            for (const auto& [yk, yc] : y.terms()) {
                UElement left = multiply(UElement(xk.first, f.one()), UElement(yk.first, f.one()));
                UElement right = multiply(UElement(xk.second, f.one()), UElement(yk.second, f.one()));
                Fp c = f.mul(f.mul(xc, yc), f.sign(koszul_flip(parity(xk.second), parity(yk.first))));
                for (const auto& [lm, lc] : left.terms())
                    for (const auto& [rm, rc] : right.terms()) out.add(f, {lm, rm}, f.mul(c, f.mul(lc, rc)));
            }
        return out;
    }

    /// S(x_1...x_k) = (-1)^k (Koszul sign of reversal) x_k...x_1.
    [[nodiscard]] UElement antipode(const UElement& u) const {
        const Field& f = field();
        UElement out;
        for (const auto& [m, c] : u.terms()) {
            auto w = word(m);
            std::vector<std::size_t> rev(w.size());
            std::vector<Parity> par;
            for (std::size_t k = 0; k < w.size(); ++k) {
                rev[k] = w.size() - 1 - k;
                par.push_back(g_->parity(w[k]));
            }
            bool neg = koszul_sign_negative(rev, par) != ((w.size() & 1U) != 0);
            std::reverse(w.begin(), w.end());
            out.add(f, from_word(w), f.mul(c, f.sign(neg)));
        }
        return out;
    }

    [[nodiscard]] std::size_t memo_size() const {
        std::lock_guard<std::mutex> lock(memo_mutex_);
        return memo_.size();
    }

private:
    UElement compute_left_multiply(std::size_t g, const Monomial& m) const {
        const Field& f = field();
        const std::size_t d = dim();
        if (g >= d) throw std::invalid_argument("enveloping: generator index out of range");
        if (m.size() != d) throw std::invalid_argument("enveloping: monomial has wrong length");
        if (mode_ == Mode::unrestricted && degree(m) + 1 > cap_)
            throw std::length_error("enveloping: degree cap " + std::to_string(cap_) + " exceeded");
        std::size_t first = d;
        for (auto i : order_)
            if (m[i] != 0) {
                first = i;
                break;
            }
        if (first == d || pos_[g] < pos_[first]) {
            Monomial out = m;
            out[g] += 1;
            return UElement(out, f.one());
        }
        if (g == first) {
            Monomial rest = m;
            if (is_odd(g_->parity(g))) {
                rest[g] = 0;
                UElement out;
                const Vec& sq = g_->bracket_basis(g, g);
                for (std::size_t k = 0; k < d; ++k)
                    if (!sq[k].is_zero()) out.add(f, left_multiply(k, rest), f.mul(f.half(), sq[k]));
                return out;
            }
            if (mode_ == Mode::restricted && m[g] + 1 == g_->p()) {
                rest[g] = 0;
                UElement out;
                const Vec& img = g_->p_map(g);
                for (std::size_t k = 0; k < d; ++k)
                    if (!img[k].is_zero()) out.add(f, left_multiply(k, rest), img[k]);
                return out;
            }
            rest[g] += 1;
            return UElement(rest, f.one());
        }
        // x_g x_i^a R = (-1)^{|g||i|} x_i (x_g x_i^{a-1} R) + [x_g, x_i] x_i^{a-1} R
        Monomial lower = m;
        lower[first] -= 1;
        UElement out;
        UElement inner = left_multiply(g, lower);
        Fp s = f.sign(koszul_flip(g_->parity(g), g_->parity(first)));
        for (const auto& [mm, c] : inner.terms()) out.add(f, left_multiply(first, mm), f.mul(s, c));
        const Vec& br = g_->bracket_basis(g, first);
        for (std::size_t k = 0; k < d; ++k)
            if (!br[k].is_zero()) out.add(f, left_multiply(k, lower), br[k]);
        return out;
    }

    void enumerate_splits(const Monomial& m, const std::vector<std::size_t>& slots, std::size_t k, Monomial& b,
                          TensorSquareElement& out, const Field& f) const {
        if (k == slots.size()) {
            Monomial c(dim(), 0);
            Fp coeff = f.one();
            for (auto i : slots) {
                c[i] = m[i] - b[i];
                coeff = f.mul(coeff, f.binomial(m[i], b[i]));
            }
            if (coeff.is_zero()) return;
            // moving the right-hand factors of earlier slots past the left-hand
            // factors of later slots
            bool neg = false;
            for (std::size_t s = 0; s < slots.size(); ++s) {
                if (!is_odd(g_->parity(slots[s])) || c[slots[s]] == 0) continue;
                for (std::size_t t = s + 1; t < slots.size(); ++t)
                    if (is_odd(g_->parity(slots[t])) && b[slots[t]] != 0) neg = !neg;
            }
            out.add(f, {b, c}, f.mul(coeff, f.sign(neg)));
            return;
        }
        std::size_t i = slots[k];
        for (std::uint32_t e = 0; e <= m[i]; ++e) {
            b[i] = e;
            enumerate_splits(m, slots, k + 1, b, out, f);
        }
        b[i] = 0;
    }

    std::shared_ptr<const LieSuperData> g_;
    Mode mode_;
    std::vector<std::size_t> order_;
    std::vector<std::size_t> pos_;
    std::uint64_t cap_;
    mutable std::mutex memo_mutex_;
    mutable std::map<std::pair<std::size_t, Monomial>, UElement> memo_;
};

/// All PBW monomials of U'(g) in lexicographic exponent order.
inline std::vector<Monomial> restricted_basis(const LieSuperData& g) {
    std::vector<Monomial> out{Monomial(g.dim(), 0)};
    for (std::size_t i = g.dim(); i-- > 0;) {
        std::uint32_t top = is_odd(g.parity(i)) ? 2 : g.p();
        std::vector<Monomial> next;
        next.reserve(out.size() * top);
        for (std::uint32_t e = 0; e < top; ++e)
            for (auto m : out) {
                m[i] = e;
                next.push_back(std::move(m));
            }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Monomials of U(g) with total degree at most `max_degree`, lexicographic.
inline std::vector<Monomial> degree_window(const LieSuperData& g, std::uint64_t max_degree) {
    std::vector<Monomial> out;
    Monomial m(g.dim(), 0);
    auto rec = [&](auto&& self, std::size_t i, std::uint64_t used) -> void {
        if (i == g.dim()) {
            out.push_back(m);
            return;
        }
        std::uint64_t top = is_odd(g.parity(i)) ? 1 : max_degree - used;
        for (std::uint64_t e = 0; e <= top && used + e <= max_degree; ++e) {
            m[i] = static_cast<std::uint32_t>(e);
            self(self, i + 1, used + e);
        }
        m[i] = 0;
    };
    rec(rec, 0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

/// Primitive elements inside the span of `window`, as coordinates on it.
inline SubspaceBasis primitives_in(const Enveloping& U, const std::vector<Monomial>& window) {
    const Field& f = U.field();
    const Monomial unit(U.dim(), 0);
    std::map<std::pair<Monomial, Monomial>, std::size_t> rows;
    std::vector<TensorSquareElement> cols;
    for (const auto& m : window) {
        TensorSquareElement t = U.coproduct(m);
        t.add(f, {m, unit}, f.neg(f.one()));
        t.add(f, {unit, m}, f.neg(f.one()));
        for (const auto& [k, c] : t.terms()) rows.try_emplace(k, rows.size());
        cols.push_back(std::move(t));
    }
    Matrix a(rows.size(), window.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (const auto& [k, c] : cols[j].terms()) a(rows.at(k), j) = c;
    return nullspace(f, a);
}

/// Restricted: all of U'(g). Unrestricted: monomials of degree at most p^{level+1}.
inline std::vector<Monomial> primitive_window(const Enveloping& U, unsigned level) {
    if (U.mode() == Mode::restricted) return restricted_basis(U.algebra());
    std::uint64_t top = 1;
    for (unsigned j = 0; j <= level; ++j) top *= U.algebra().p();
    return degree_window(U.algebra(), top);
}

inline SubspaceBasis primitives(const Enveloping& U, unsigned level = 0) {
    return primitives_in(U, primitive_window(U, level));
}

/// The expected primitive space: g itself for U', and the span of e_i^{p^j}
/// (p^j within the window) and the odd generators otherwise.
inline SubspaceBasis expected_primitives(const Enveloping& U, unsigned level = 0) {
    const auto& g = U.algebra();
    auto window = primitive_window(U, level);
    std::map<Monomial, std::size_t> index;
    for (std::size_t k = 0; k < window.size(); ++k) index.emplace(window[k], k);
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < g.dim(); ++i) {
        std::uint64_t e = 1;
        do {
            Monomial m(g.dim(), 0);
            m[i] = static_cast<std::uint32_t>(e);
            auto it = index.find(m);
            if (it == index.end()) break;
            gens.push_back(unit_vector(window.size(), it->second));
            e *= g.p();
        } while (U.mode() == Mode::unrestricted && !is_odd(g.parity(i)));
    }
    return SubspaceBasis::span(U.field(), window.size(), gens);
}

/// z_i = e_i^p - e_i^{[p]} commutes with every generator in U(g).
inline Verdict centrality_check(const Enveloping& U) {
    const auto& g = U.algebra();
    if (U.mode() != Mode::unrestricted) throw std::invalid_argument("centrality_check: needs the unrestricted engine");
    if (!g.has_p_map()) return Verdict::pass();
    const Field& f = U.field();
    for (std::size_t i = 0; i < g.n_even(); ++i) {
        Monomial pw(g.dim(), 0);
        pw[i] = g.p();
        UElement z(pw, f.one());
        z.add(f, U.from_vector(g.p_map(i)), f.neg(f.one()));
        for (std::size_t x = 0; x < g.dim(); ++x)
            if (U.multiply(z, U.generator(x)) != U.multiply(U.generator(x), z))
                return Verdict::fail("centrality: " + g.name(i) + "^p - " + g.name(i) + "^[p] vs " + g.name(x));
    }
    return Verdict::pass();
}

/// Map from complement monomial to its U(h) coefficient.
using SplitDecomposition = std::map<Monomial, UElement>;

/// Engines for the global order and for the two orders putting the
/// subalgebra first or last.
class SplitEnveloping {
public:
    SplitEnveloping(SubalgebraSplit split, Mode mode, std::uint64_t degree_cap = 0) : split_(std::move(split)) {
        const auto& gp = split_.algebra_ptr();
        std::vector<std::size_t> left = split_.h_indices();
        left.insert(left.end(), split_.p_indices().begin(), split_.p_indices().end());
        std::vector<std::size_t> right = split_.p_indices();
        right.insert(right.end(), split_.h_indices().begin(), split_.h_indices().end());
        global_ = std::make_shared<Enveloping>(gp, mode, std::vector<std::size_t>{}, degree_cap);
        left_ = std::make_shared<Enveloping>(gp, mode, left, degree_cap);
        right_ = std::make_shared<Enveloping>(gp, mode, right, degree_cap);
    }

    [[nodiscard]] const SubalgebraSplit& split() const noexcept { return split_; }
    [[nodiscard]] const LieSuperData& algebra() const noexcept { return split_.algebra(); }
    [[nodiscard]] const Field& field() const noexcept { return split_.algebra().field(); }
    [[nodiscard]] Mode mode() const noexcept { return global_->mode(); }
    [[nodiscard]] const Enveloping& global() const noexcept { return *global_; }
    [[nodiscard]] const Enveloping& h_left() const noexcept { return *left_; }
    [[nodiscard]] const Enveloping& h_right() const noexcept { return *right_; }

    [[nodiscard]] Monomial complement_part(const Monomial& m) const {
        Monomial out(m.size(), 0);
        for (auto i : split_.p_indices()) out[i] = m[i];
        return out;
    }
    [[nodiscard]] Monomial subalgebra_part(const Monomial& m) const {
        Monomial out(m.size(), 0);
        for (auto i : split_.h_indices()) out[i] = m[i];
        return out;
    }

    /// u = Σ h_{a,α} e^a ε^α, from an element in global normal form.
    [[nodiscard]] SplitDecomposition normal_order_h_left(const UElement& u) const {
        return group(left_->convert_from(*global_, u));
    }
    /// u = Σ e^a ε^α h_{a,α}.
    [[nodiscard]] SplitDecomposition normal_order_h_right(const UElement& u) const {
        return group(right_->convert_from(*global_, u));
    }

    /// Inverse of normal_order_h_left, returned in global normal form.
    [[nodiscard]] UElement expand_h_left(const SplitDecomposition& d) const {
        UElement out;
        for (const auto& [pm, h] : d) out.add(field(), global_->multiply(h, UElement(pm, field().one())));
        return out;
    }
    [[nodiscard]] UElement expand_h_right(const SplitDecomposition& d) const {
        UElement out;
        for (const auto& [pm, h] : d) out.add(field(), global_->multiply(UElement(pm, field().one()), h));
        return out;
    }

    /// Least r with complement even exponents below p^{r+1}; -1 inside U(h).
    [[nodiscard]] int filtration_degree(const UElement& u) const {
        if (mode() != Mode::unrestricted) throw std::invalid_argument("filtration_degree: needs unrestricted mode");
        int r = -1;
        for (const auto& [pm, h] : normal_order_h_left(u)) {
            if (is_unit_monomial(pm)) continue;
            std::uint64_t top = 0;
            for (auto i : split_.p_indices())
                if (!is_odd(algebra().parity(i))) top = std::max<std::uint64_t>(top, pm[i]);
            int level = 0;
            std::uint64_t bound = algebra().p();
            while (top >= bound) {
                bound *= algebra().p();
                ++level;
            }
            r = std::max(r, level);
        }
        return r;
    }

private:
    [[nodiscard]] SplitDecomposition group(const UElement& ordered) const {
        SplitDecomposition out;
        for (const auto& [m, c] : ordered.terms()) out[complement_part(m)].add(field(), subalgebra_part(m), c);
        return out;
    }

    SubalgebraSplit split_;
    std::shared_ptr<Enveloping> global_;
    std::shared_ptr<Enveloping> left_;
    std::shared_ptr<Enveloping> right_;
};

}  // namespace supercoind
