#pragma once

// Small representations shared by the tests.

#include <memory>
#include <string>
#include <vector>

#include "supercoind/algebras.hpp"
#include "supercoind/representations.hpp"

namespace supercoind::fixtures {

inline std::shared_ptr<const SplitEnveloping> env(std::shared_ptr<const LieSuperData> g, std::vector<std::size_t> h,
                                                  Mode mode = Mode::restricted, std::uint64_t cap = 0) {
    return std::make_shared<const SplitEnveloping>(SubalgebraSplit(std::move(g), std::move(h)), mode, cap);
}

/// sl2 Borel {h, e}: h = diag(x, x - 2), e = E12.
inline Representation sl2_borel_two_dim(const SubalgebraSplit& s, int x = 1) {
    const Field& f = s.algebra().field();
    Matrix h(2, 2), e(2, 2);
    h(0, 0) = f.from_int(x);
    h(1, 1) = f.from_int(x - 2);
    e(0, 1) = f.one();
    return Representation({Parity::even, Parity::even}, subalgebra_parities(s), {h, e}, "two-dim");
}

/// gl(1|1) super Borel {E11, E22, E12} on k^{1|1}.
inline Representation gl11_natural(const SubalgebraSplit& s) {
    const Field& f = s.algebra().field();
    Matrix e11(2, 2), e22(2, 2), e12(2, 2);
    e11(0, 0) = f.one();
    e22(1, 1) = f.one();
    e12(0, 1) = f.one();
    return Representation({Parity::even, Parity::odd}, subalgebra_parities(s), {e11, e22, e12}, "natural");
}

}  // namespace supercoind::fixtures

namespace supercoind::fixtures {

struct Instance {
    std::string name;
    std::shared_ptr<const SplitEnveloping> env;
    Representation rep;
};

/// Restricted instances covering purely even, purely odd and mixed complements.
inline std::vector<Instance> duality_instances() {
    std::vector<Instance> out;
    auto add = [&](std::string name, std::shared_ptr<const SplitEnveloping> e, Representation r) {
        out.push_back({std::move(name), std::move(e), std::move(r)});
    };
    {
        auto e = env(algebras::abelian(3, 1, 0), {});
        add("abelian-p3/0/trivial", e, trivial_representation(e->split()));
    }
    {
        auto e = env(algebras::abelian(3, 1, 1), {});
        add("abelian-odd-p3/0/trivial", e, trivial_representation(e->split()));
    }
    {
        auto e = env(algebras::heisenberg(3), {0});
        const Field& f = e->field();
        add("heisenberg-p3/z/trivial", e, trivial_representation(e->split()));
        add("heisenberg-p3/z/chi", e, character_representation(e->split(), Character{{f.one()}}));
    }
    {
        auto e = env(algebras::heisenberg(3), {0, 1});
        add("heisenberg-p3/z,eps1/trivial", e, trivial_representation(e->split()));
    }
    for (std::uint32_t p : {3U, 5U}) {
        auto e = env(algebras::sl2(p), {0, 1});
        const Field& f = e->field();
        std::string tag = "sl2-borel-p" + std::to_string(p);
        add(tag + "/trivial", e, trivial_representation(e->split()));
        add(tag + "/chi", e, character_representation(e->split(), Character{{f.one(), Fp{}}}));
        add(tag + "/two-dim", e, sl2_borel_two_dim(e->split()));
    }
    for (std::uint32_t p : {3U, 5U}) {
        auto e = env(algebras::gl11(p), {0, 1, 2});
        std::string tag = "gl11-p" + std::to_string(p);
        add(tag + "/trivial", e, trivial_representation(e->split()));
        add(tag + "/natural", e, gl11_natural(e->split()));
    }
    return out;
}

}  // namespace supercoind::fixtures
