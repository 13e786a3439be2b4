#pragma once

// Deterministic table dumps: U'(g) multiplication and coproduct tables,
// the matrix of Phi and the Gram matrix of Psi.

#include <sstream>
#include <stdexcept>
#include <string>

#include "supercoind/duality.hpp"
#include "supercoind/harness/definition.hpp"

namespace supercoind::harness {

inline std::string monomial_string(const LieSuperData& g, const Monomial& m) {
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!s.empty()) s += '*';
        s += g.name(i);
        if (m[i] > 1) s += '^' + std::to_string(m[i]);
    }
    return s.empty() ? "1" : s;
}

inline std::string element_string(const LieSuperData& g, const UElement& u) {
    if (u.is_zero()) return "0";
    std::string s;
    for (const auto& [m, c] : u.terms()) {
        if (!s.empty()) s += " + ";
        s += std::to_string(g.field().to_signed(c)) + " " + monomial_string(g, m);
    }
    return s;
}

inline std::string matrix_string(const Field& f, const Matrix& a) {
    std::ostringstream os;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) os << (c == 0 ? "" : " ") << f.to_signed(a(r, c));
        os << '\n';
    }
    return os.str();
}

/// what: multiplication, coproduct, phi-matrix or psi-gram. The matrix
/// exports use the named split and representation (first ones by default).
inline std::string export_table(const Definition& d, const std::string& what, std::string split = {},
                                std::string rep = {}) {
    auto g = build_algebra(d);
    if (!g->has_p_map()) throw std::invalid_argument("export: tables need a restricted algebra (no p-map given)");
    const Field& f = g->field();
    std::ostringstream os;
    if (what == "multiplication" || what == "coproduct") {
        Enveloping U(g, Mode::restricted);
        auto basis = restricted_basis(*g);
        os << "# " << what << " " << d.name << " dim " << basis.size() << '\n';
        for (const auto& a : basis) {
            if (what == "coproduct") {
                os << monomial_string(*g, a) << " ->";
                bool first = true;
                for (auto cp = U.coproduct(a); const auto& [k, c] : cp.terms()) {
                    os << (first ? " " : " + ") << f.to_signed(c) << " " << monomial_string(*g, k.first) << " (x) "
                       << monomial_string(*g, k.second);
                    first = false;
                }
                os << '\n';
                continue;
            }
            for (const auto& b : basis)
                os << monomial_string(*g, a) << " . " << monomial_string(*g, b) << " = "
                   << element_string(*g, U.multiply(UElement(a, f.one()), UElement(b, f.one()))) << '\n';
        }
        return os.str();
    }
    if (what != "phi-matrix" && what != "psi-gram") throw std::invalid_argument("export: unknown table '" + what + "'");
    const RepDef* rd = nullptr;
    for (const auto& r : d.reps)
        if ((rep.empty() && (split.empty() || r.split == split)) || r.name == rep) {
            rd = &r;
            break;
        }
    if (rd == nullptr) throw std::invalid_argument("export: no matching representation");
    auto env = std::make_shared<const SplitEnveloping>(build_split(d, g, find_split(d, rd->split)), Mode::restricted);
    Representation pi = build_representation(d, env->split(), *rd);
    os << "# " << what << " " << d.name << "/" << rd->split << "/" << rd->name << '\n';
    if (what == "phi-matrix") {
        MapCheck m = phi(env, pi);
        os << "# rows Coind(pi) window x V, columns Ind window x V\n";
        os << matrix_string(f, m.matrix);
        auto det = determinant(f, m.matrix);
        os << "det " << (det ? std::to_string(f.to_signed(*det)) : std::string("n/a")) << '\n';
    } else {
        PsiCheck m = psi(env, pi);
        os << "# rows Coind(pi), columns Coind(pi*) (x) Omega\n";
        os << matrix_string(f, m.gram);
        os << "rank " << m.rank << '\n';
    }
    return os.str();
}

}  // namespace supercoind::harness
