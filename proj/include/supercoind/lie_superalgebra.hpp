#pragma once

// Lie superalgebras from structure constants, subalgebra splits and the
// supertrace character of the adjoint action on the quotient.

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "supercoind/field.hpp"
#include "supercoind/linalg.hpp"
#include "supercoind/report.hpp"

namespace supercoind {

struct BasisElement {
    std::string name;
    Parity parity = Parity::even;

    friend bool operator==(const BasisElement&, const BasisElement&) = default;
};

/// Structure constants on an ordered homogeneous basis, even elements first.
class LieSuperData {
public:
    using BracketTable = std::map<std::pair<std::size_t, std::size_t>, Vec>;
    using PMap = std::map<std::size_t, Vec>;

    /// Brackets not listed are taken as zero; `brackets` must list both (i,j)
    /// and (j,i) when nonzero. Use `complete_by_antisymmetry` to fill them in.
    LieSuperData(Field field, std::vector<BasisElement> basis, const BracketTable& brackets,
                 std::optional<PMap> p_map = std::nullopt)
        : field_(field), basis_(std::move(basis)) {
        const std::size_t d = basis_.size();
        bool seen_odd = false;
        for (const auto& b : basis_) {
            if (is_odd(b.parity))
                seen_odd = true;
            else if (seen_odd)
                throw std::invalid_argument("lie superalgebra: even basis element '" + b.name +
                                            "' listed after an odd one");
            if (b.name.empty()) throw std::invalid_argument("lie superalgebra: empty basis name");
        }
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = i + 1; j < d; ++j)
                if (basis_[i].name == basis_[j].name)
                    throw std::invalid_argument("lie superalgebra: duplicate basis name '" + basis_[i].name + "'");
        table_.assign(d * d, Vec(d));
        for (const auto& [ij, v] : brackets) {
            if (ij.first >= d || ij.second >= d) throw std::invalid_argument("lie superalgebra: bracket index out of range");
            if (v.size() != d) throw std::invalid_argument("lie superalgebra: bracket vector has wrong length");
            table_[ij.first * d + ij.second] = v;
        }
        if (p_map) {
            pmap_.emplace(d, Vec{});
            for (const auto& [i, v] : *p_map) {
                if (i >= d) throw std::invalid_argument("lie superalgebra: p-map index out of range");
                if (is_odd(basis_[i].parity))
                    throw std::invalid_argument("lie superalgebra: p-map given on odd element '" + basis_[i].name + "'");
                if (v.size() != d) throw std::invalid_argument("lie superalgebra: p-map vector has wrong length");
                (*pmap_)[i] = v;
            }
            for (std::size_t i = 0; i < n_even(); ++i)
                if ((*pmap_)[i].empty())
                    throw std::invalid_argument("lie superalgebra: p-map missing for '" + basis_[i].name + "'");
        }
    }

    /// Adds [b_j, b_i] = -(-1)^{|i||j|}[b_i, b_j] for every listed pair whose
    /// mirror is absent.
    static BracketTable complete_by_antisymmetry(const Field& f, const std::vector<BasisElement>& basis,
                                                 BracketTable brackets) {
        BracketTable extra;
        for (const auto& [ij, v] : brackets) {
            auto mirror = std::make_pair(ij.second, ij.first);
            if (brackets.count(mirror) != 0 || ij.first == ij.second) continue;
            Fp s = f.sign(!koszul_flip(basis.at(ij.first).parity, basis.at(ij.second).parity));
            extra[mirror] = scaled(f, s, v);
        }
        brackets.merge(extra);
        return brackets;
    }

    [[nodiscard]] const Field& field() const noexcept { return field_; }
    [[nodiscard]] std::uint32_t p() const noexcept { return field_.p(); }
    [[nodiscard]] std::size_t dim() const noexcept { return basis_.size(); }
    [[nodiscard]] std::size_t n_even() const noexcept {
        return static_cast<std::size_t>(
            std::count_if(basis_.begin(), basis_.end(), [](const BasisElement& b) { return !is_odd(b.parity); }));
    }
    [[nodiscard]] std::size_t n_odd() const noexcept { return dim() - n_even(); }
    [[nodiscard]] const std::vector<BasisElement>& basis() const noexcept { return basis_; }
    [[nodiscard]] Parity parity(std::size_t i) const { return basis_.at(i).parity; }
    [[nodiscard]] const std::string& name(std::size_t i) const { return basis_.at(i).name; }
    [[nodiscard]] std::vector<Parity> parities() const {
        std::vector<Parity> out;
        for (const auto& b : basis_) out.push_back(b.parity);
        return out;
    }

    [[nodiscard]] std::optional<std::size_t> index_of(const std::string& name) const {
        for (std::size_t i = 0; i < basis_.size(); ++i)
            if (basis_[i].name == name) return i;
        return std::nullopt;
    }

    [[nodiscard]] Vec unit(std::size_t i) const { return unit_vector(dim(), i); }

    [[nodiscard]] const Vec& bracket_basis(std::size_t i, std::size_t j) const { return table_.at(i * dim() + j); }

    [[nodiscard]] Vec bracket(const Vec& x, const Vec& y) const {
        const std::size_t d = dim();
        if (x.size() != d || y.size() != d) throw std::invalid_argument("bracket: vector has wrong length");
        Vec out(d);
        for (std::size_t i = 0; i < d; ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t j = 0; j < d; ++j) {
                if (y[j].is_zero()) continue;
                axpy(field_, out, field_.mul(x[i], y[j]), bracket_basis(i, j));
            }
        }
        return out;
    }

    [[nodiscard]] bool has_p_map() const noexcept { return pmap_.has_value(); }
    [[nodiscard]] const Vec& p_map(std::size_t i) const {
        if (!pmap_) throw std::logic_error("lie superalgebra: no p-map");
        if (i >= n_even()) throw std::invalid_argument("lie superalgebra: p-map only defined on even basis elements");
        return (*pmap_)[i];
    }

    /// Column j holds [x, b_j].
    [[nodiscard]] Matrix ad(const Vec& x) const {
        Matrix m(dim(), dim());
        for (std::size_t j = 0; j < dim(); ++j) m.set_column(j, bracket(x, unit(j)));
        return m;
    }

    /// Parity of a coordinate vector, or nullopt if it mixes parities. Zero is even.
    [[nodiscard]] std::optional<Parity> parity_of(const Vec& x) const {
        bool ev = false;
        bool od = false;
        for (std::size_t i = 0; i < dim(); ++i) {
            if (x.at(i).is_zero()) continue;
            (is_odd(parity(i)) ? od : ev) = true;
        }
        if (ev && od) return std::nullopt;
        return od ? Parity::odd : Parity::even;
    }

    /// Structure constants as a sparse map, only nonzero brackets.
    [[nodiscard]] BracketTable nonzero_brackets() const {
        BracketTable out;
        for (std::size_t i = 0; i < dim(); ++i)
            for (std::size_t j = 0; j < dim(); ++j)
                if (!is_zero(bracket_basis(i, j))) out[{i, j}] = bracket_basis(i, j);
        return out;
    }
    [[nodiscard]] std::optional<PMap> p_map_table() const {
        if (!pmap_) return std::nullopt;
        PMap out;
        for (std::size_t i = 0; i < n_even(); ++i) out[i] = (*pmap_)[i];
        return out;
    }

    friend bool operator==(const LieSuperData& a, const LieSuperData& b) {
        return a.field_ == b.field_ && a.basis_ == b.basis_ && a.table_ == b.table_ && a.pmap_ == b.pmap_;
    }

private:
    Field field_;
    std::vector<BasisElement> basis_;
    std::vector<Vec> table_;
    std::optional<std::vector<Vec>> pmap_;
};

namespace detail {

inline std::string vec_string(const Field& f, const Vec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i != 0) s += ",";
        s += std::to_string(f.to_signed(v[i]));
    }
    return s + ")";
}

}  // namespace detail

/// Parity additivity, super antisymmetry, super Jacobi, [x,[x,x]] = 0 for odd
/// basis x, and (ad b)^p = ad(b^{[p]}) when a p-map is present.
inline Verdict validate(const LieSuperData& g) {
    const Field& f = g.field();
    const std::size_t d = g.dim();
    auto nm = [&](std::size_t i) { return g.name(i); };
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const Vec& v = g.bracket_basis(i, j);
            Parity want = g.parity(i) + g.parity(j);
            for (std::size_t k = 0; k < d; ++k)
                if (!v[k].is_zero() && g.parity(k) != want)
                    return Verdict::fail("parity: [" + nm(i) + "," + nm(j) + "] has a component on " + nm(k));
            Vec mirror = scaled(f, f.sign(!koszul_flip(g.parity(i), g.parity(j))), g.bracket_basis(j, i));
            if (v != mirror) return Verdict::fail("antisymmetry: (" + nm(i) + "," + nm(j) + ")");
        }
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                Vec x = g.unit(i), y = g.unit(j), z = g.unit(k);
                Vec lhs = g.bracket(x, g.bracket(y, z));
                Vec rhs = g.bracket(g.bracket(x, y), z);
                axpy(f, rhs, f.sign(koszul_flip(g.parity(i), g.parity(j))), g.bracket(y, g.bracket(x, z)));
                if (lhs != rhs) return Verdict::fail("jacobi: (" + nm(i) + "," + nm(j) + "," + nm(k) + ")");
            }
    for (std::size_t i = g.n_even(); i < d; ++i) {
        Vec x = g.unit(i);
        if (!is_zero(g.bracket(x, g.bracket(x, x)))) return Verdict::fail("odd cube: [" + nm(i) + ",[" + nm(i) + "," + nm(i) + "]]");
    }
    if (g.has_p_map()) {
        for (std::size_t i = 0; i < g.n_even(); ++i) {
            const Vec& img = g.p_map(i);
            auto par = g.parity_of(img);
            if (!par || is_odd(*par)) return Verdict::fail("p-map: image of " + nm(i) + " is not even");
            if (power(f, g.ad(g.unit(i)), g.p()) != g.ad(img))
                return Verdict::fail("p-map: (ad " + nm(i) + ")^p != ad(" + nm(i) + "^[p])");
        }
    }
    return Verdict::pass();
}

/// Decomposition g = h + p along basis indices. The complement keeps the
/// global order, so its even elements precede its odd ones.
class SubalgebraSplit {
public:
    SubalgebraSplit(std::shared_ptr<const LieSuperData> algebra, std::vector<std::size_t> h_indices,
                    std::string name = {})
        : g_(std::move(algebra)), h_(std::move(h_indices)), name_(std::move(name)) {
        if (!g_) throw std::invalid_argument("split: null algebra");
        std::sort(h_.begin(), h_.end());
        if (std::adjacent_find(h_.begin(), h_.end()) != h_.end())
            throw std::invalid_argument("split: repeated subalgebra index");
        std::vector<bool> in_h(g_->dim(), false);
        for (auto i : h_) {
            if (i >= g_->dim()) throw std::invalid_argument("split: subalgebra index out of range");
            in_h[i] = true;
        }
        for (std::size_t i = 0; i < g_->dim(); ++i)
            if (!in_h[i]) p_.push_back(i);
        for (auto i : p_) (is_odd(g_->parity(i)) ? m_ : n_)++;
        for (auto i : h_)
            for (auto j : h_)
                if (!in_subalgebra(g_->bracket_basis(i, j)))
                    throw std::invalid_argument("split: subalgebra not closed under [" + g_->name(i) + "," +
                                                g_->name(j) + "]");
        if (g_->has_p_map())
            for (auto i : h_)
                if (!is_odd(g_->parity(i)) && !in_subalgebra(g_->p_map(i)))
                    throw std::invalid_argument("split: subalgebra not closed under the p-map at " + g_->name(i));
    }

    [[nodiscard]] const LieSuperData& algebra() const noexcept { return *g_; }
    [[nodiscard]] const std::shared_ptr<const LieSuperData>& algebra_ptr() const noexcept { return g_; }
    [[nodiscard]] const std::string& name() const noexcept { return name_; }
    [[nodiscard]] const std::vector<std::size_t>& h_indices() const noexcept { return h_; }
    [[nodiscard]] const std::vector<std::size_t>& p_indices() const noexcept { return p_; }
    /// Even and odd dimensions of the complement.
    [[nodiscard]] std::size_t n() const noexcept { return n_; }
    [[nodiscard]] std::size_t m() const noexcept { return m_; }
    [[nodiscard]] std::size_t h_dim() const noexcept { return h_.size(); }

    [[nodiscard]] bool in_subalgebra(const Vec& x) const {
        return std::all_of(p_.begin(), p_.end(), [&](std::size_t i) { return x.at(i).is_zero(); });
    }
    [[nodiscard]] std::optional<std::size_t> h_position(std::size_t global) const {
        auto it = std::lower_bound(h_.begin(), h_.end(), global);
        if (it == h_.end() || *it != global) return std::nullopt;
        return static_cast<std::size_t>(it - h_.begin());
    }
    [[nodiscard]] std::optional<std::size_t> p_position(std::size_t global) const {
        auto it = std::lower_bound(p_.begin(), p_.end(), global);
        if (it == p_.end() || *it != global) return std::nullopt;
        return static_cast<std::size_t>(it - p_.begin());
    }
    /// Parity of the k-th subalgebra basis element.
    [[nodiscard]] Parity h_parity(std::size_t k) const { return g_->parity(h_.at(k)); }

    /// Global coordinates of a vector given in subalgebra coordinates.
    [[nodiscard]] Vec embed_h(const Vec& local) const {
        if (local.size() != h_.size()) throw std::invalid_argument("split: subalgebra vector has wrong length");
        Vec out(g_->dim());
        for (std::size_t k = 0; k < h_.size(); ++k) out[h_[k]] = local[k];
        return out;
    }
    [[nodiscard]] Vec restrict_h(const Vec& global) const {
        if (!in_subalgebra(global)) throw std::invalid_argument("split: element is not in the subalgebra");
        Vec out(h_.size());
        for (std::size_t k = 0; k < h_.size(); ++k) out[k] = global.at(h_[k]);
        return out;
    }

private:
    std::shared_ptr<const LieSuperData> g_;
    std::vector<std::size_t> h_;
    std::vector<std::size_t> p_;
    std::size_t n_ = 0;
    std::size_t m_ = 0;
    std::string name_;
};

/// Values on the subalgebra basis, in subalgebra order.
struct Character {
    std::vector<Fp> values;

    [[nodiscard]] Fp at(std::size_t k) const { return values.at(k); }
    [[nodiscard]] Fp evaluate(const Field& f, const Vec& local) const {
        if (local.size() != values.size()) throw std::invalid_argument("character: vector has wrong length");
        Fp s{};
        for (std::size_t k = 0; k < values.size(); ++k) s = f.add(s, f.mul(values[k], local[k]));
        return s;
    }
    [[nodiscard]] Character negated(const Field& f) const {
        Character c = *this;
        for (auto& v : c.values) v = f.neg(v);
        return c;
    }
    static Character zero(std::size_t dim) { return {std::vector<Fp>(dim)}; }

    friend bool operator==(const Character&, const Character&) = default;
};

/// Vanishing on odd elements and on brackets; restrictedness if a p-map exists.
inline Verdict character_check(const SubalgebraSplit& s, const Character& chi) {
    const auto& g = s.algebra();
    const Field& f = g.field();
    if (chi.values.size() != s.h_dim()) return Verdict::fail("character: wrong number of values");
    for (std::size_t k = 0; k < s.h_dim(); ++k)
        if (is_odd(s.h_parity(k)) && !chi.at(k).is_zero())
            return Verdict::fail("character: nonzero on odd " + g.name(s.h_indices()[k]));
    for (std::size_t a = 0; a < s.h_dim(); ++a)
        for (std::size_t b = 0; b < s.h_dim(); ++b) {
            Vec br = s.restrict_h(g.bracket_basis(s.h_indices()[a], s.h_indices()[b]));
            if (!chi.evaluate(f, br).is_zero())
                return Verdict::fail("character: nonzero on [" + g.name(s.h_indices()[a]) + "," +
                                     g.name(s.h_indices()[b]) + "]");
        }
    if (g.has_p_map())
        for (std::size_t k = 0; k < s.h_dim(); ++k) {
            if (is_odd(s.h_parity(k))) continue;
            Fp lhs = f.pow(chi.at(k), g.p());
            Fp rhs = chi.evaluate(f, s.restrict_h(g.p_map(s.h_indices()[k])));
            if (lhs != rhs) return Verdict::fail("character: not restricted at " + g.name(s.h_indices()[k]));
        }
    return Verdict::pass();
}

/// Matrix of X + h -> [H, X] + h in the complement basis.
inline Matrix adjoint_on_quotient(const SubalgebraSplit& s, const Vec& h_element) {
    const auto& g = s.algebra();
    if (h_element.size() != g.dim()) throw std::invalid_argument("adjoint_on_quotient: vector has wrong length");
    if (!s.in_subalgebra(h_element)) throw std::invalid_argument("adjoint_on_quotient: element is not in the subalgebra");
    const auto& pi = s.p_indices();
    Matrix m(pi.size(), pi.size());
    for (std::size_t c = 0; c < pi.size(); ++c) {
        Vec br = g.bracket(h_element, g.unit(pi[c]));
        for (std::size_t r = 0; r < pi.size(); ++r) m(r, c) = br[pi[r]];
    }
    return m;
}

/// Supertrace of the adjoint action on the quotient; odd elements map to 0.
inline Character strad(const SubalgebraSplit& s) {
    const auto& g = s.algebra();
    std::vector<Parity> par;
    for (auto i : s.p_indices()) par.push_back(g.parity(i));
    Character chi = Character::zero(s.h_dim());
    for (std::size_t k = 0; k < s.h_dim(); ++k) {
        if (is_odd(s.h_parity(k))) continue;
        chi.values[k] = supertrace(g.field(), adjoint_on_quotient(s, g.unit(s.h_indices()[k])), par);
    }
    Verdict v = character_check(s, chi);
    if (!v) throw std::logic_error("strad: " + v.witness);
    return chi;
}

}  // namespace supercoind
