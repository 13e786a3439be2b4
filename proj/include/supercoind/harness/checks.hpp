#pragma once

// Check dispatch over a definition and the report format.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "supercoind/coordinate_algebra.hpp"
#include "supercoind/duality.hpp"
#include "supercoind/enveloping.hpp"
#include "supercoind/harness/definition.hpp"
#include "supercoind/truncated.hpp"

namespace supercoind::harness {

enum class Status { pass, fail, skipped };

inline const char* to_string(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::skipped: return "skipped";
    }
    return "?";
}

struct CheckReport {
    std::string check;
    std::string algebra;
    std::string split;
    std::string rep;
    Status status = Status::pass;
    std::string witness;
    double millis = 0;
    std::map<std::string, std::uint64_t> dims;

    [[nodiscard]] std::string instance() const {
        std::string s = algebra;
        if (!split.empty()) s += "/" + split;
        if (!rep.empty()) s += "/" + rep;
        return s;
    }
};

struct CheckOptions {
    std::vector<std::string> only;
    std::uint64_t seed = 1;
    unsigned level = 0;
    std::size_t samples = 20;
    int strad_sign = -1;
    unsigned threads = 0;
};

inline const std::vector<std::string>& check_names() {
    static const std::vector<std::string> names{
        "validate",  "pbw-count", "primitives",     "mu-product", "lambda-character", "phi",          "psi",
        "theta",     "comparison", "kernel-duality", "omega-iso",  "phi-r-balance",    "iota-compat", "phi-r-injectivity"};
    return names;
}

namespace detail {

enum class Scope { algebra, split, instance };

inline Scope scope_of(const std::string& check) {
    if (check == "validate" || check == "pbw-count" || check == "primitives") return Scope::algebra;
    if (check == "mu-product" || check == "lambda-character" || check == "omega-iso") return Scope::split;
    return Scope::instance;
}

inline bool restricted_only(const std::string& check) {
    return check == "pbw-count" || check == "phi" || check == "psi" || check == "theta" || check == "comparison" ||
           check == "kernel-duality" || check == "omega-iso";
}

inline std::uint64_t ipow(std::uint64_t b, std::size_t e) {
    std::uint64_t r = 1;
    for (std::size_t k = 0; k < e; ++k) r *= b;
    return r;
}

/// Degree cap for unrestricted engines at window bound `bound`.
inline std::uint64_t unrestricted_cap(const LieSuperData& g, std::uint64_t bound) {
    return 2 * bound * (g.n_even() + 1) + g.n_odd() + 4;
}

struct Context {
    const Definition& def;
    std::shared_ptr<const LieSuperData> g;
    const CheckOptions& opt;
};

inline std::shared_ptr<const SplitEnveloping> restricted_env(const Context& c, const SplitDef& sd) {
    return std::make_shared<const SplitEnveloping>(build_split(c.def, c.g, sd), Mode::restricted);
}

inline std::shared_ptr<const SplitEnveloping> unrestricted_env(const Context& c, const SplitDef& sd, unsigned level) {
    std::uint64_t bound = level_bound(c.g->p(), level + 1);
    return std::make_shared<const SplitEnveloping>(build_split(c.def, c.g, sd), Mode::unrestricted,
                                                   unrestricted_cap(*c.g, bound));
}

inline void set_verdict(CheckReport& r, const Verdict& v) {
    r.status = v.ok ? Status::pass : Status::fail;
    r.witness = v.witness;
}

inline void run_algebra_check(const Context& c, CheckReport& r) {
    const auto& g = *c.g;
    r.dims["dim"] = g.dim();
    if (r.check == "validate") {
        Verdict v = validate(g);
        for (const auto& rd : c.def.reps) {
            if (!v) break;
            SubalgebraSplit s = build_split(c.def, c.g, find_split(c.def, rd.split));
            v = validate_representation(s, build_representation(c.def, s, rd), g.has_p_map());
            if (!v) v.witness = "representation " + rd.name + ": " + v.witness;
        }
        set_verdict(r, v);
    } else if (r.check == "pbw-count") {
        std::uint64_t got = restricted_basis(g).size();
        std::uint64_t want = ipow(g.p(), g.n_even()) << g.n_odd();
        r.dims["basis"] = got;
        set_verdict(r, got == want ? Verdict::pass()
                                   : Verdict::fail("restricted basis has " + std::to_string(got) + " elements, expected " +
                                                   std::to_string(want)));
    } else if (r.check == "primitives") {
        Verdict v;
        if (g.has_p_map()) {
            Enveloping U(c.g, Mode::restricted);
            SubspaceBasis got = primitives(U), want = expected_primitives(U);
            r.dims["restricted"] = got.dim();
            if (!subspace_equal(got, want)) v = Verdict::fail("restricted primitives differ from g");
        }
        for (unsigned lv = 0; v && lv <= c.opt.level; ++lv) {
            Enveloping U(c.g, Mode::unrestricted, {}, ipow(g.p(), lv + 1) + 1);
            SubspaceBasis got = primitives(U, lv), want = expected_primitives(U, lv);
            r.dims["level" + std::to_string(lv)] = got.dim();
            if (!subspace_equal(got, want))
                v = Verdict::fail("primitives at level " + std::to_string(lv) + " have dim " + std::to_string(got.dim()) +
                                  ", expected " + std::to_string(want.dim()));
        }
        set_verdict(r, v);
    } else {
        throw std::invalid_argument("unknown algebra check " + r.check);
    }
}

inline void run_split_check(const Context& c, const SplitDef& sd, CheckReport& r) {
    const bool restricted = c.g->has_p_map();
    if (r.check == "mu-product") {
        Verdict v;
        if (restricted) {
            AlgebraA A(restricted_env(c, sd));
            r.dims["restricted"] = A.dim();
            v = dual_product_check(A);
        }
        for (unsigned lv = 0; v && lv <= c.opt.level; ++lv) {
            AlgebraA A(unrestricted_env(c, sd, lv), level_bound(c.g->p(), lv));
            r.dims["level" + std::to_string(lv)] = A.dim();
            v = dual_product_check(A);
        }
        set_verdict(r, v);
    } else if (r.check == "lambda-character") {
        Verdict v;
        if (restricted) v = lambda_character_check(restricted_env(c, sd));
        for (unsigned lv = 0; v && lv <= c.opt.level; ++lv) {
            v = lambda_character_check(unrestricted_env(c, sd, lv), level_bound(c.g->p(), lv));
            if (!v) v.witness = "level " + std::to_string(lv) + ": " + v.witness;
        }
        set_verdict(r, v);
    } else if (r.check == "omega-iso") {
        auto env = restricted_env(c, sd);
        r.dims["n"] = env->split().n();
        r.dims["m"] = env->split().m();
        set_verdict(r, omega_iso_check(env, c.opt.strad_sign));
    } else {
        throw std::invalid_argument("unknown split check " + r.check);
    }
}

inline void run_instance_check(const Context& c, const SplitDef& sd, const RepDef& rd, CheckReport& r) {
    const std::string& k = r.check;
    if (k == "phi" || k == "psi" || k == "theta" || k == "comparison" || k == "kernel-duality") {
        auto env = restricted_env(c, sd);
        Representation pi = build_representation(c.def, env->split(), rd);
        if (k == "phi" || k == "theta") {
            MapCheck m = k == "phi" ? phi(env, pi) : theta(env, pi);
            r.dims["dim"] = m.source_dim;
            r.dims["rank"] = m.rank;
            set_verdict(r, m.verdict);
        } else if (k == "psi") {
            PsiCheck m = psi(env, pi);
            r.dims["dim"] = m.dim;
            r.dims["rank"] = m.rank;
            set_verdict(r, m.verdict);
        } else if (k == "comparison") {
            set_verdict(r, comparison_check(env, pi));
        } else {
            KernelDualityCheck m = kernel_duality_check(env, pi);
            r.dims["ambient"] = m.ambient_dim;
            r.dims["ideal"] = m.ideal_dim;
            if (m.verdict) {
                KernelDualityCheck back = kernel_duality_check(env, reverse_twist(env->split(), pi));
                if (!back.verdict) back.verdict.witness = "reverse run: " + back.verdict.witness;
                m.verdict = back.verdict;
            }
            set_verdict(r, m.verdict);
        }
        return;
    }
    std::mt19937 rng(static_cast<std::uint32_t>(c.opt.seed));
    if (k == "phi-r-balance" || k == "phi-r-injectivity") {
        auto env = unrestricted_env(c, sd, c.opt.level);
        Representation pi = build_representation(c.def, env->split(), rd);
        TruncatedPhi T(env, pi, c.opt.level);
        SampledOutcome o = k == "phi-r-balance" ? sampled_balance(T, rng, c.opt.samples)
                                                : sampled_injectivity(T, rng, c.opt.samples);
        r.dims["samples"] = o.checked;
        r.dims["skipped"] = o.skipped;
        Verdict v = o.verdict;
        if (v && o.checked < c.opt.samples) v = Verdict::fail("only " + std::to_string(o.checked) + " admissible samples");
        set_verdict(r, v);
    } else if (k == "iota-compat") {
        auto env = unrestricted_env(c, sd, c.opt.level + 1);
        Representation pi = build_representation(c.def, env->split(), rd);
        TruncatedPhi T(env, pi, c.opt.level), next(env, pi, c.opt.level + 1);
        SampledOutcome o = sampled_iota(T, next, rng, c.opt.samples);
        r.dims["samples"] = o.checked;
        r.dims["skipped"] = o.skipped;
        Verdict v = o.verdict;
        if (v && o.checked < c.opt.samples) v = Verdict::fail("only " + std::to_string(o.checked) + " admissible samples");
        set_verdict(r, v);
    } else {
        throw std::invalid_argument("unknown check '" + k + "'");
    }
}

}  // namespace detail

/// Runs the selected checks (all when `only` is empty). Reports are sorted
/// by check name, then instance. Unknown names throw std::invalid_argument.
inline std::vector<CheckReport> run_checks(const Definition& def, const CheckOptions& opt) {
    std::vector<std::string> selected = opt.only.empty() ? check_names() : opt.only;
    for (const auto& n : selected)
        if (std::find(check_names().begin(), check_names().end(), n) == check_names().end())
            throw std::invalid_argument("unknown check '" + n + "'");
    std::sort(selected.begin(), selected.end());
    selected.erase(std::unique(selected.begin(), selected.end()), selected.end());

    auto g = build_algebra(def);
    detail::Context ctx{def, g, opt};
    std::vector<CheckReport> reports;
    std::vector<std::function<void(CheckReport&)>> jobs;
    for (const auto& check : selected) {
        auto scope = detail::scope_of(check);
        auto base = [&](const std::string& split, const std::string& rep) {
            CheckReport r;
            r.check = check;
            r.algebra = def.name;
            r.split = split;
            r.rep = rep;
            return r;
        };
        bool skip = detail::restricted_only(check) && !g->has_p_map();
        if (scope == detail::Scope::algebra) {
            reports.push_back(base("", ""));
            jobs.push_back([&ctx, skip](CheckReport& r) {
                if (skip) {
                    r.status = Status::skipped;
                    r.witness = "no p-map";
                    return;
                }
                detail::run_algebra_check(ctx, r);
            });
        } else if (scope == detail::Scope::split) {
            for (const auto& sd : def.splits) {
                reports.push_back(base(sd.name, ""));
                jobs.push_back([&ctx, &sd, skip](CheckReport& r) {
                    if (skip) {
                        r.status = Status::skipped;
                        r.witness = "no p-map";
                        return;
                    }
                    detail::run_split_check(ctx, sd, r);
                });
            }
        } else {
            for (const auto& rd : def.reps) {
                const SplitDef& sd = find_split(def, rd.split);
                reports.push_back(base(sd.name, rd.name));
                jobs.push_back([&ctx, &sd, &rd, skip](CheckReport& r) {
                    if (skip) {
                        r.status = Status::skipped;
                        r.witness = "no p-map";
                        return;
                    }
                    detail::run_instance_check(ctx, sd, rd, r);
                });
            }
        }
    }
    auto run_one = [&](std::size_t i) {
        auto t0 = std::chrono::steady_clock::now();
        try {
            jobs[i](reports[i]);
        } catch (const std::exception& e) {
            reports[i].status = Status::fail;
            reports[i].witness = std::string("error: ") + e.what();
        }
        reports[i].millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    };
    unsigned threads = opt.threads != 0 ? opt.threads : std::max(1U, std::thread::hardware_concurrency());
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < std::min<std::size_t>(threads, jobs.size()); ++t)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next++) < jobs.size();) run_one(i);
        });
    for (auto& t : pool) t.join();
    std::stable_sort(reports.begin(), reports.end(), [](const CheckReport& a, const CheckReport& b) {
        return std::tie(a.check, a.algebra, a.split, a.rep) < std::tie(b.check, b.algebra, b.split, b.rep);
    });
    return reports;
}

inline bool all_passed(const std::vector<CheckReport>& reports) {
    return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.status != Status::fail; });
}

inline nlohmann::json to_json(const CheckReport& r, bool timing) {
    nlohmann::json j{{"check", r.check},   {"algebra", r.algebra},         {"split", r.split},
                     {"rep", r.rep},       {"status", to_string(r.status)}, {"witness", r.witness},
                     {"dims", r.dims}};
    if (timing) j["millis"] = r.millis;
    return j;
}

inline nlohmann::json to_json(const std::vector<CheckReport>& reports, bool timing) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) arr.push_back(to_json(r, timing));
    return {{"reports", arr}, {"ok", all_passed(reports)}};
}

inline std::string to_text(const std::vector<CheckReport>& reports, bool timing) {
    std::ostringstream os;
    for (const auto& r : reports) {
        os << (r.status == Status::pass ? "PASS" : r.status == Status::fail ? "FAIL" : "SKIP") << "  " << r.check << "  "
           << r.instance();
        if (!r.dims.empty()) {
            os << "  [";
            bool first = true;
            for (const auto& [k, v] : r.dims) {
                os << (first ? "" : " ") << k << '=' << v;
                first = false;
            }
            os << ']';
        }
        if (timing) os << "  " << static_cast<long long>(r.millis) << "ms";
        if (!r.witness.empty()) os << "  " << r.witness;
        os << '\n';
    }
    return os.str();
}

}  // namespace supercoind::harness
