#pragma once

// Line-oriented definition documents:
//
//   algebra sl2-borel-p3
//   prime 3
//   basis h:even e:even f:even
//   bracket h e : 0 2 0
//   pmap h : 1 0 0
//   restricted
//   split borel : h e
//   representation two-dim borel : even even
//   action two-dim h : 1 0 0 -1
//   character chi borel even : 1 0
//
// Brackets not listed are zero. Action entries are row-major. A character
// line defines a one-dimensional representation. A pmap line implies
// "restricted"; the bare keyword covers algebras with no even part.

#include <cstdint>
#include <cstdlib>
#include <istream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "supercoind/lie_superalgebra.hpp"
#include "supercoind/representations.hpp"

namespace supercoind::harness {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}
    [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

struct SplitDef {
    std::string name;
    std::vector<std::string> h;
    friend bool operator==(const SplitDef&, const SplitDef&) = default;
};

struct RepDef {
    std::string name;
    std::string split;
    std::vector<Parity> parities;
    std::map<std::string, std::vector<std::int64_t>> actions;
    friend bool operator==(const RepDef&, const RepDef&) = default;
};

struct Definition {
    std::string name;
    std::uint32_t p = 0;
    std::vector<BasisElement> basis;
    // keys ordered i <= j by basis position; values are signed coordinates
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::int64_t>> brackets;
    std::map<std::size_t, std::vector<std::int64_t>> pmap;
    bool restricted = false;
    std::vector<SplitDef> splits;
    std::vector<RepDef> reps;
    friend bool operator==(const Definition&, const Definition&) = default;
};

inline std::uint32_t prime_cap() {
    if (const char* env = std::getenv("SUPERCOIND_PRIME_CAP")) {
        try {
            return static_cast<std::uint32_t>(std::stoul(env));
        } catch (const std::exception&) {
            throw std::invalid_argument("SUPERCOIND_PRIME_CAP is not a number");
        }
    }
    return 13;
}

namespace detail {

inline std::vector<std::string> words(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    for (std::string w; is >> w;) out.push_back(w);
    return out;
}

inline std::int64_t integer(std::size_t line, const std::string& w) {
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
        v = std::stoll(w, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != w.size() || w.empty()) throw ParseError(line, "expected an integer, got '" + w + "'");
    return v;
}

inline Parity parity(std::size_t line, const std::string& w) {
    if (w == "even" || w == "0") return Parity::even;
    if (w == "odd" || w == "1") return Parity::odd;
    throw ParseError(line, "expected even or odd, got '" + w + "'");
}

inline std::int64_t reduce(std::int64_t v, std::uint32_t p) {
    std::int64_t r = v % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    if (2 * r > static_cast<std::int64_t>(p)) r -= p;
    return r;
}

}  // namespace detail

inline std::optional<std::size_t> basis_index(const Definition& d, const std::string& name) {
    for (std::size_t i = 0; i < d.basis.size(); ++i)
        if (d.basis[i].name == name) return i;
    return std::nullopt;
}

/// Parses and normalizes: coordinates reduced to symmetric residues, brackets
/// stored with i <= j. Structural validation is done by `build_algebra`.
inline Definition parse_definition(std::istream& in) {
    Definition d;
    std::size_t lineno = 0;
    std::map<std::string, std::size_t> rep_line;
    auto need_basis = [&](std::size_t ln) {
        if (d.basis.empty()) throw ParseError(ln, "basis must come first");
        if (d.p == 0) throw ParseError(ln, "prime must come before basis data");
    };
    auto index = [&](std::size_t ln, const std::string& name) {
        auto i = basis_index(d, name);
        if (!i) throw ParseError(ln, "unknown basis element '" + name + "'");
        return *i;
    };
    auto coords = [&](std::size_t ln, const std::vector<std::string>& w, std::size_t from, std::size_t count) {
        if (w.size() - from != count)
            throw ParseError(ln, "expected " + std::to_string(count) + " coordinates, got " + std::to_string(w.size() - from));
        std::vector<std::int64_t> out;
        for (std::size_t k = from; k < w.size(); ++k) out.push_back(detail::reduce(detail::integer(ln, w[k]), d.p));
        return out;
    };
    auto colon = [&](std::size_t ln, const std::vector<std::string>& w) {
        for (std::size_t k = 0; k < w.size(); ++k)
            if (w[k] == ":") return k;
        throw ParseError(ln, "missing ':'");
    };
    for (std::string raw; std::getline(in, raw);) {
        ++lineno;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        auto w = detail::words(raw);
        if (w.empty()) continue;
        const std::string& key = w[0];
        if (key == "algebra") {
            if (w.size() != 2) throw ParseError(lineno, "algebra takes one name");
            if (!d.name.empty()) throw ParseError(lineno, "algebra declared twice");
            d.name = w[1];
        } else if (key == "prime") {
            if (w.size() != 2) throw ParseError(lineno, "prime takes one value");
            std::int64_t p = detail::integer(lineno, w[1]);
            if (p <= 2 || !is_prime(static_cast<std::uint64_t>(p)))
                throw ParseError(lineno, "prime must be an odd prime p > 2, got " + w[1]);
            if (static_cast<std::uint64_t>(p) > prime_cap())
                throw ParseError(lineno, "prime " + w[1] + " exceeds the cap " + std::to_string(prime_cap()));
            d.p = static_cast<std::uint32_t>(p);
        } else if (key == "basis") {
            if (!d.basis.empty()) throw ParseError(lineno, "basis declared twice");
            for (std::size_t k = 1; k < w.size(); ++k) {
                auto c = w[k].find(':');
                if (c == std::string::npos || c == 0) throw ParseError(lineno, "basis entry '" + w[k] + "' is not name:parity");
                std::string name = w[k].substr(0, c);
                if (basis_index(d, name)) throw ParseError(lineno, "duplicate basis element '" + name + "'");
                d.basis.push_back({name, detail::parity(lineno, w[k].substr(c + 1))});
            }
            if (d.basis.empty()) throw ParseError(lineno, "empty basis");
        } else if (key == "bracket") {
            need_basis(lineno);
            if (w.size() < 4 || w[3] != ":") throw ParseError(lineno, "bracket x y : coordinates");
            std::size_t i = index(lineno, w[1]), j = index(lineno, w[2]);
            auto v = coords(lineno, w, 4, d.basis.size());
            if (i > j) {
                // [y, x] = -(-1)^{|x||y|} [x, y]
                bool both_odd = is_odd(d.basis[i].parity) && is_odd(d.basis[j].parity);
                for (auto& x : v) x = detail::reduce(both_odd ? x : -x, d.p);
                std::swap(i, j);
            }
            if (d.brackets.count({i, j}) != 0) throw ParseError(lineno, "bracket " + w[1] + " " + w[2] + " given twice");
            d.brackets[{i, j}] = v;
        } else if (key == "pmap") {
            need_basis(lineno);
            if (w.size() < 3 || w[2] != ":") throw ParseError(lineno, "pmap x : coordinates");
            std::size_t i = index(lineno, w[1]);
            if (d.pmap.count(i) != 0) throw ParseError(lineno, "pmap of " + w[1] + " given twice");
            d.pmap[i] = coords(lineno, w, 3, d.basis.size());
            d.restricted = true;
        } else if (key == "restricted") {
            if (w.size() != 1) throw ParseError(lineno, "restricted takes no arguments");
            d.restricted = true;
        } else if (key == "split") {
            need_basis(lineno);
            if (w.size() < 3 || w[2] != ":") throw ParseError(lineno, "split name : elements");
            SplitDef sd{w[1], {}};
            for (const auto& s : d.splits)
                if (s.name == sd.name) throw ParseError(lineno, "duplicate split '" + sd.name + "'");
            for (std::size_t k = 3; k < w.size(); ++k) {
                index(lineno, w[k]);
                sd.h.push_back(w[k]);
            }
            d.splits.push_back(sd);
        } else if (key == "representation" || key == "character") {
            need_basis(lineno);
            std::size_t c = colon(lineno, w);
            bool chi = key == "character";
            if (c != (chi ? 4U : 3U))
                throw ParseError(lineno, chi ? "character name split parity : values" : "representation name split : parities");
            RepDef r{w[1], w[2], {}, {}};
            const SplitDef* sp = nullptr;
            for (const auto& s : d.splits)
                if (s.name == r.split) sp = &s;
            if (sp == nullptr) throw ParseError(lineno, "unknown split '" + r.split + "'");
            if (rep_line.count(r.name) != 0) throw ParseError(lineno, "duplicate representation '" + r.name + "'");
            if (chi) {
                r.parities = {detail::parity(lineno, w[3])};
                auto vals = coords(lineno, w, 5, sp->h.size());
                for (std::size_t k = 0; k < sp->h.size(); ++k) r.actions[sp->h[k]] = {vals[k]};
            } else {
                for (std::size_t k = 4; k < w.size(); ++k) r.parities.push_back(detail::parity(lineno, w[k]));
                if (r.parities.empty()) throw ParseError(lineno, "representation needs at least one parity");
            }
            rep_line[r.name] = lineno;
            d.reps.push_back(r);
        } else if (key == "action") {
            need_basis(lineno);
            if (w.size() < 4 || w[3] != ":") throw ParseError(lineno, "action rep element : entries");
            RepDef* r = nullptr;
            for (auto& x : d.reps)
                if (x.name == w[1]) r = &x;
            if (r == nullptr) throw ParseError(lineno, "unknown representation '" + w[1] + "'");
            const SplitDef* sp = nullptr;
            for (const auto& s : d.splits)
                if (s.name == r->split) sp = &s;
            bool in_h = false;
            for (const auto& h : sp->h) in_h = in_h || h == w[2];
            if (!in_h) throw ParseError(lineno, "'" + w[2] + "' is not in split '" + sp->name + "'");
            if (r->actions.count(w[2]) != 0) throw ParseError(lineno, "action of " + w[2] + " given twice");
            r->actions[w[2]] = coords(lineno, w, 4, r->parities.size() * r->parities.size());
        } else {
            throw ParseError(lineno, "unknown keyword '" + key + "'");
        }
    }
    if (d.name.empty()) throw ParseError(lineno, "missing algebra line");
    if (d.p == 0) throw ParseError(lineno, "missing prime line");
    if (d.basis.empty()) throw ParseError(lineno, "missing basis line");
    for (auto& r : d.reps) {
        const SplitDef* sp = nullptr;
        for (const auto& s : d.splits)
            if (s.name == r.split) sp = &s;
        const std::size_t n = r.parities.size();
        for (const auto& h : sp->h)
            if (r.actions.count(h) == 0) r.actions[h] = std::vector<std::int64_t>(n * n, 0);
    }
    return d;
}

inline Definition parse_definition(const std::string& text) {
    std::istringstream is(text);
    return parse_definition(is);
}

inline std::string dump_definition(const Definition& d) {
    std::ostringstream os;
    auto join = [&](const std::vector<std::int64_t>& v) {
        for (auto x : v) os << ' ' << x;
    };
    os << "algebra " << d.name << "\nprime " << d.p << "\nbasis";
    for (const auto& b : d.basis) os << ' ' << b.name << ':' << to_string(b.parity);
    os << '\n';
    for (const auto& [k, v] : d.brackets) {
        os << "bracket " << d.basis[k.first].name << ' ' << d.basis[k.second].name << " :";
        join(v);
        os << '\n';
    }
    for (const auto& [i, v] : d.pmap) {
        os << "pmap " << d.basis[i].name << " :";
        join(v);
        os << '\n';
    }
    if (d.restricted) os << "restricted\n";
    for (const auto& s : d.splits) {
        os << "split " << s.name << " :";
        for (const auto& h : s.h) os << ' ' << h;
        os << '\n';
    }
    for (const auto& r : d.reps) {
        os << "representation " << r.name << ' ' << r.split << " :";
        for (auto p : r.parities) os << ' ' << to_string(p);
        os << '\n';
        for (const auto& [h, v] : r.actions) {
            os << "action " << r.name << ' ' << h << " :";
            join(v);
            os << '\n';
        }
    }
    return os.str();
}

/// The Lie superalgebra of a definition; throws std::invalid_argument with
/// the first validation witness.
inline std::shared_ptr<const LieSuperData> build_algebra(const Definition& d) {
    Field f(d.p);
    const std::size_t n = d.basis.size();
    auto vec = [&](const std::vector<std::int64_t>& c) {
        Vec v(n);
        for (std::size_t k = 0; k < n; ++k) v[k] = f.from_int(c[k]);
        return v;
    };
    LieSuperData::BracketTable br;
    for (const auto& [k, v] : d.brackets) br[k] = vec(v);
    br = LieSuperData::complete_by_antisymmetry(f, d.basis, br);
    std::optional<LieSuperData::PMap> pm;
    if (d.restricted) {
        pm.emplace();
        for (const auto& [i, v] : d.pmap) (*pm)[i] = vec(v);
    }
    auto g = std::make_shared<const LieSuperData>(f, d.basis, br, pm);
    if (Verdict v = validate(*g); !v) throw std::invalid_argument("validation: " + v.witness);
    return g;
}

inline SubalgebraSplit build_split(const Definition& d, std::shared_ptr<const LieSuperData> g, const SplitDef& s) {
    std::vector<std::size_t> h;
    for (const auto& name : s.h) h.push_back(*basis_index(d, name));
    return SubalgebraSplit(std::move(g), h, s.name);
}

inline Representation build_representation(const Definition& d, const SubalgebraSplit& s, const RepDef& r) {
    const Field& f = s.algebra().field();
    const std::size_t n = r.parities.size();
    std::vector<Matrix> mats;
    for (auto gi : s.h_indices()) {
        const auto& entries = r.actions.at(d.basis[gi].name);
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = f.from_int(entries[i * n + j]);
        mats.push_back(m);
    }
    return Representation(r.parities, subalgebra_parities(s), mats, r.name);
}

inline const SplitDef& find_split(const Definition& d, const std::string& name) {
    for (const auto& s : d.splits)
        if (s.name == name) return s;
    throw std::invalid_argument("unknown split '" + name + "'");
}

}  // namespace supercoind::harness
