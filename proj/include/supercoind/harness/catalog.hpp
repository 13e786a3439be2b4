#pragma once

// Built-in definitions: small restricted Lie superalgebras with splits and
// a trivial and a nontrivial representation for each split.

#include <string>
#include <vector>

#include "supercoind/algebras.hpp"
#include "supercoind/harness/definition.hpp"

namespace supercoind::harness {

inline Definition definition_from(const std::string& name, const LieSuperData& g) {
    Definition d;
    d.name = name;
    d.p = g.p();
    d.basis = g.basis();
    const Field& f = g.field();
    auto ints = [&](const Vec& v) {
        std::vector<std::int64_t> out;
        for (auto x : v) out.push_back(f.to_signed(x));
        return out;
    };
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t j = i; j < g.dim(); ++j)
            if (!is_zero(g.bracket_basis(i, j))) d.brackets[{i, j}] = ints(g.bracket_basis(i, j));
    d.restricted = g.has_p_map();
    if (d.restricted)
        for (std::size_t i = 0; i < g.n_even(); ++i) d.pmap[i] = ints(g.p_map(i));
    return d;
}

namespace detail {

inline void add_split(Definition& d, const std::string& name, std::vector<std::string> h) {
    d.splits.push_back({name, std::move(h)});
}

inline void add_rep(Definition& d, const std::string& name, const std::string& split, std::vector<Parity> par,
                    std::map<std::string, std::vector<std::int64_t>> actions) {
    const auto& sp = find_split(d, split);
    const std::size_t n = par.size();
    for (const auto& h : sp.h)
        if (actions.count(h) == 0) actions[h] = std::vector<std::int64_t>(n * n, 0);
    d.reps.push_back({name, split, std::move(par), std::move(actions)});
}

inline void add_trivial(Definition& d, const std::string& split) {
    add_rep(d, split + "-trivial", split, {Parity::even}, {});
}

}  // namespace detail

inline std::vector<Definition> catalog() {
    using detail::add_rep;
    using detail::add_split;
    using detail::add_trivial;
    const auto E = Parity::even;
    const auto O = Parity::odd;
    std::vector<Definition> out;
    {
        Definition d = definition_from("abelian-p3", *algebras::abelian(3, 1, 0));
        add_split(d, "zero", {});
        add_trivial(d, "zero");
        add_rep(d, "zero-odd-line", "zero", {O}, {});
        add_split(d, "full", {"e"});
        add_trivial(d, "full");
        add_rep(d, "full-nilpotent", "full", {E, E}, {{"e", {0, 1, 0, 0}}});
        out.push_back(d);
    }
    {
        Definition d = definition_from("abelian2-p3", *algebras::abelian(3, 2, 0));
        add_split(d, "zero", {});
        add_trivial(d, "zero");
        add_rep(d, "zero-odd-line", "zero", {O}, {});
        out.push_back(d);
    }
    {
        Definition d = definition_from("abelian-odd-p3", *algebras::abelian(3, 0, 1));
        add_split(d, "zero", {});
        add_trivial(d, "zero");
        add_rep(d, "zero-odd-line", "zero", {O}, {});
        add_split(d, "full", {"eps"});
        add_trivial(d, "full");
        add_rep(d, "full-odd-shift", "full", {E, O}, {{"eps", {0, 1, 0, 0}}});
        out.push_back(d);
    }
    {
        Definition d = definition_from("heisenberg-p3", *algebras::heisenberg(3));
        add_split(d, "center", {"z"});
        add_trivial(d, "center");
        add_rep(d, "center-chi", "center", {E}, {{"z", {1}}});
        add_split(d, "center-eps1", {"z", "eps1"});
        add_trivial(d, "center-eps1");
        add_rep(d, "center-eps1-odd-line", "center-eps1", {O}, {});
        out.push_back(d);
    }
    for (std::uint32_t p : {3U, 5U}) {
        Definition d = definition_from("sl2-borel-p" + std::to_string(p), *algebras::sl2(p));
        add_split(d, "borel", {"h", "e"});
        add_trivial(d, "borel");
        add_rep(d, "borel-chi", "borel", {E}, {{"h", {1}}});
        add_rep(d, "borel-two-dim", "borel", {E, E}, {{"h", {1, 0, 0, -1}}, {"e", {0, 1, 0, 0}}});
        out.push_back(d);
    }
    for (std::uint32_t p : {3U, 5U}) {
        Definition d = definition_from("gl11-p" + std::to_string(p), *algebras::gl11(p));
        add_split(d, "borel", {"E11", "E22", "E12"});
        add_trivial(d, "borel");
        add_rep(d, "borel-natural", "borel", {E, O}, {{"E11", {1, 0, 0, 0}}, {"E22", {0, 0, 0, 1}}, {"E12", {0, 1, 0, 0}}});
        out.push_back(d);
    }
    return out;
}

inline const Definition* find_catalog(const std::vector<Definition>& cat, const std::string& name) {
    for (const auto& d : cat)
        if (d.name == name) return &d;
    return nullptr;
}

}  // namespace supercoind::harness
