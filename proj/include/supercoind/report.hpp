#pragma once

#include <string>
#include <utility>

namespace supercoind {

/// Outcome of a structural check. `witness` names the first violation found.
struct Verdict {
    bool ok = true;
    std::string witness;

    static Verdict pass() { return {}; }
    static Verdict fail(std::string why) { return {false, std::move(why)}; }

    explicit operator bool() const noexcept { return ok; }
};

}  // namespace supercoind
