#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <utility>
#include <vector>

#include "supercoind/field.hpp"

namespace supercoind {

/// Exponent vector over the full basis of the Lie superalgebra.
using Monomial = std::vector<std::uint32_t>;

/// Finitely supported combination with no stored zeros.
template <class Key>
class LinComb {
public:
    using Terms = std::map<Key, Fp>;

    LinComb() = default;
    LinComb(const Key& k, Fp c) {
        if (!c.is_zero()) terms_.emplace(k, c);
    }

    void add(const Field& f, const Key& k, Fp c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (inserted) return;
        it->second = f.add(it->second, c);
        if (it->second.is_zero()) terms_.erase(it);
    }
    void add(const Field& f, const LinComb& other, Fp scale = Fp{1}) {
        if (scale.is_zero()) return;
        for (const auto& [k, c] : other.terms_) add(f, k, f.mul(scale, c));
    }

    [[nodiscard]] LinComb scaled(const Field& f, Fp s) const {
        LinComb out;
        if (s.is_zero()) return out;
        for (const auto& [k, c] : terms_) out.terms_.emplace(k, f.mul(s, c));
        return out;
    }

    [[nodiscard]] const Terms& terms() const noexcept { return terms_; }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }
    [[nodiscard]] Fp coeff(const Key& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? Fp{} : it->second;
    }

    friend bool operator==(const LinComb&, const LinComb&) = default;

private:
    Terms terms_;
};

using UElement = LinComb<Monomial>;
using TensorSquareElement = LinComb<std::pair<Monomial, Monomial>>;

inline std::ostream& operator<<(std::ostream& os, const Monomial& m) {
    os << '[';
    for (std::size_t i = 0; i < m.size(); ++i) os << (i != 0 ? "," : "") << m[i];
    return os << ']';
}

inline std::ostream& operator<<(std::ostream& os, const UElement& u) {
    if (u.is_zero()) return os << '0';
    bool first = true;
    for (const auto& [m, c] : u.terms()) {
        os << (first ? "" : " + ") << c << '*' << m;
        first = false;
    }
    return os;
}

inline std::uint64_t degree(const Monomial& m) {
    std::uint64_t d = 0;
    for (auto a : m) d += a;
    return d;
}

inline bool is_unit_monomial(const Monomial& m) {
    for (auto a : m)
        if (a != 0) return false;
    return true;
}

inline Monomial generator_monomial(std::size_t dim, std::size_t i) {
    Monomial m(dim, 0);
    m.at(i) = 1;
    return m;
}

}  // namespace supercoind
