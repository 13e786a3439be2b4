#pragma once

// Standard small Lie superalgebras used by the catalog and the tests.

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "supercoind/lie_superalgebra.hpp"

namespace supercoind::algebras {

namespace detail {

inline Vec coords(const Field& f, std::size_t d, std::initializer_list<std::pair<std::size_t, int>> entries) {
    Vec v(d);
    for (auto [i, c] : entries) v.at(i) = f.add(v.at(i), f.from_int(c));
    return v;
}

}  // namespace detail

/// Abelian with `n_even` even and `n_odd` odd generators; zero p-map.
inline std::shared_ptr<const LieSuperData> abelian(std::uint32_t p, std::size_t n_even, std::size_t n_odd) {
    Field f(p);
    std::vector<BasisElement> basis;
    for (std::size_t i = 0; i < n_even; ++i) basis.push_back({n_even == 1 ? "e" : "e" + std::to_string(i + 1), Parity::even});
    for (std::size_t s = 0; s < n_odd; ++s) basis.push_back({n_odd == 1 ? "eps" : "eps" + std::to_string(s + 1), Parity::odd});
    LieSuperData::PMap pm;
    for (std::size_t i = 0; i < n_even; ++i) pm[i] = Vec(basis.size());
    return std::make_shared<const LieSuperData>(f, basis, LieSuperData::BracketTable{}, pm);
}

/// z even central, [eps1, eps2] = z, z^[p] = z.
inline std::shared_ptr<const LieSuperData> heisenberg(std::uint32_t p) {
    Field f(p);
    std::vector<BasisElement> basis{{"z", Parity::even}, {"eps1", Parity::odd}, {"eps2", Parity::odd}};
    LieSuperData::BracketTable br;
    br[{1, 2}] = detail::coords(f, 3, {{0, 1}});
    br = LieSuperData::complete_by_antisymmetry(f, basis, br);
    LieSuperData::PMap pm;
    pm[0] = detail::coords(f, 3, {{0, 1}});
    return std::make_shared<const LieSuperData>(f, basis, br, pm);
}

/// Basis h, e, f with [h,e] = 2e, [h,f] = -2f, [e,f] = h; h^[p] = h, e^[p] = f^[p] = 0.
inline std::shared_ptr<const LieSuperData> sl2(std::uint32_t p) {
    Field f(p);
    std::vector<BasisElement> basis{{"h", Parity::even}, {"e", Parity::even}, {"f", Parity::even}};
    LieSuperData::BracketTable br;
    br[{0, 1}] = detail::coords(f, 3, {{1, 2}});
    br[{0, 2}] = detail::coords(f, 3, {{2, -2}});
    br[{1, 2}] = detail::coords(f, 3, {{0, 1}});
    br = LieSuperData::complete_by_antisymmetry(f, basis, br);
    LieSuperData::PMap pm;
    pm[0] = detail::coords(f, 3, {{0, 1}});
    pm[1] = Vec(3);
    pm[2] = Vec(3);
    return std::make_shared<const LieSuperData>(f, basis, br, pm);
}

/// gl(1|1) on E11, E22 (even), E12, E21 (odd); E_ii^[p] = E_ii.
inline std::shared_ptr<const LieSuperData> gl11(std::uint32_t p) {
    Field f(p);
    std::vector<BasisElement> basis{
        {"E11", Parity::even}, {"E22", Parity::even}, {"E12", Parity::odd}, {"E21", Parity::odd}};
    LieSuperData::BracketTable br;
    br[{0, 2}] = detail::coords(f, 4, {{2, 1}});
    br[{0, 3}] = detail::coords(f, 4, {{3, -1}});
    br[{1, 2}] = detail::coords(f, 4, {{2, -1}});
    br[{1, 3}] = detail::coords(f, 4, {{3, 1}});
    br[{2, 3}] = detail::coords(f, 4, {{0, 1}, {1, 1}});
    br = LieSuperData::complete_by_antisymmetry(f, basis, br);
    LieSuperData::PMap pm;
    pm[0] = detail::coords(f, 4, {{0, 1}});
    pm[1] = detail::coords(f, 4, {{1, 1}});
    return std::make_shared<const LieSuperData>(f, basis, br, pm);
}

}  // namespace supercoind::algebras
