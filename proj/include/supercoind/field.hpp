#pragma once

// Prime-field arithmetic and Z/2 grading helpers.

#include <compare>
#include <cstdint>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace supercoind {

/// Residue in [0, p-1]. The modulus lives in the ambient Field.
struct Fp {
    std::uint32_t v = 0;

    constexpr Fp() = default;
    constexpr explicit Fp(std::uint32_t value) : v(value) {}

    [[nodiscard]] constexpr bool is_zero() const noexcept { return v == 0; }
    friend constexpr bool operator==(Fp, Fp) = default;
    friend constexpr auto operator<=>(Fp, Fp) = default;
};

inline std::ostream& operator<<(std::ostream& os, Fp x) { return os << x.v; }

enum class Parity : std::uint8_t { even = 0, odd = 1 };

constexpr Parity operator+(Parity a, Parity b) noexcept {
    return static_cast<Parity>(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(b));
}
constexpr Parity& operator+=(Parity& a, Parity b) noexcept { return a = a + b; }
constexpr bool is_odd(Parity a) noexcept { return a == Parity::odd; }
constexpr Parity parity_of(unsigned count) noexcept {
    return (count & 1U) != 0 ? Parity::odd : Parity::even;
}
/// (-1)^{|a||b|} as a boolean "sign flips".
constexpr bool koszul_flip(Parity a, Parity b) noexcept { return is_odd(a) && is_odd(b); }

inline const char* to_string(Parity a) { return is_odd(a) ? "odd" : "even"; }

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Arithmetic context for F_p with p an odd prime.
class Field {
public:
    explicit Field(std::uint32_t p) : p_(p) {
        if (p <= 2) throw std::invalid_argument("field: characteristic must satisfy p > 2, got " + std::to_string(p));
        if (!is_prime(p)) throw std::invalid_argument("field: modulus " + std::to_string(p) + " is not prime");
        if (p > 46341) throw std::invalid_argument("field: modulus too large for 32-bit residues");
    }

    [[nodiscard]] std::uint32_t p() const noexcept { return p_; }

    [[nodiscard]] Fp zero() const noexcept { return Fp{0}; }
    [[nodiscard]] Fp one() const noexcept { return Fp{1}; }

    [[nodiscard]] Fp from_int(std::int64_t x) const noexcept {
        auto m = static_cast<std::int64_t>(p_);
        auto r = x % m;
        if (r < 0) r += m;
        return Fp{static_cast<std::uint32_t>(r)};
    }
    /// Symmetric representative in (-p/2, p/2], handy for printing signs.
    [[nodiscard]] std::int64_t to_signed(Fp a) const noexcept {
        return a.v > p_ / 2 ? static_cast<std::int64_t>(a.v) - p_ : static_cast<std::int64_t>(a.v);
    }

    [[nodiscard]] Fp add(Fp a, Fp b) const noexcept {
        std::uint32_t s = a.v + b.v;
        return Fp{s >= p_ ? s - p_ : s};
    }
    [[nodiscard]] Fp sub(Fp a, Fp b) const noexcept { return Fp{a.v >= b.v ? a.v - b.v : a.v + p_ - b.v}; }
    [[nodiscard]] Fp neg(Fp a) const noexcept { return Fp{a.v == 0 ? 0 : p_ - a.v}; }
    [[nodiscard]] Fp mul(Fp a, Fp b) const noexcept {
        return Fp{static_cast<std::uint32_t>((static_cast<std::uint64_t>(a.v) * b.v) % p_)};
    }
    [[nodiscard]] Fp pow(Fp a, std::uint64_t e) const noexcept {
        Fp r = one();
        while (e != 0) {
            if ((e & 1U) != 0) r = mul(r, a);
            a = mul(a, a);
            e >>= 1U;
        }
        return r;
    }
    [[nodiscard]] Fp inv(Fp a) const {
        if (a.is_zero()) throw std::domain_error("field: inverse of zero");
        return pow(a, p_ - 2);
    }
    [[nodiscard]] Fp div(Fp a, Fp b) const { return mul(a, inv(b)); }
    /// 1/2 = (p+1)/2.
    [[nodiscard]] Fp half() const noexcept { return Fp{(p_ + 1) / 2}; }
    [[nodiscard]] Fp sign(bool negative) const noexcept { return negative ? neg(one()) : one(); }

    [[nodiscard]] Fp factorial(std::uint64_t n) const noexcept {
        Fp r = one();
        for (std::uint64_t k = 2; k <= n; ++k) r = mul(r, from_int(static_cast<std::int64_t>(k % p_)));
        return r;
    }

    /// C(n, k) mod p by Lucas' theorem.
    [[nodiscard]] Fp binomial(std::uint64_t n, std::uint64_t k) const {
        if (k > n) return zero();
        Fp r = one();
        while (n != 0 || k != 0) {
            std::uint64_t nd = n % p_;
            std::uint64_t kd = k % p_;
            if (kd > nd) return zero();
            r = mul(r, small_binomial(nd, kd));
            n /= p_;
            k /= p_;
        }
        return r;
    }

    friend bool operator==(const Field& a, const Field& b) noexcept { return a.p_ == b.p_; }

private:
    [[nodiscard]] Fp small_binomial(std::uint64_t n, std::uint64_t k) const {
        Fp num = factorial(n);
        Fp den = mul(factorial(k), factorial(n - k));
        return div(num, den);
    }

    std::uint32_t p_;
};

/// Sign (+1 or -1, in F_p) of rearranging homogeneous symbols.
///
/// The rearranged sequence lists original items in the order
/// permutation[0], permutation[1], ...; the sign is (-1)^N where N is the
/// number of pairs of odd items whose relative order is reversed.
inline bool koszul_sign_negative(std::span<const std::size_t> permutation, std::span<const Parity> parities) {
    if (permutation.size() != parities.size())
        throw std::invalid_argument("koszul_sign: permutation and parity lists differ in length");
    const std::size_t k = permutation.size();
    std::vector<bool> seen(k, false);
    for (std::size_t x : permutation) {
        if (x >= k || seen[x]) throw std::invalid_argument("koszul_sign: not a permutation");
        seen[x] = true;
    }
    bool negative = false;
    for (std::size_t a = 0; a < k; ++a) {
        if (!is_odd(parities[permutation[a]])) continue;
        for (std::size_t b = a + 1; b < k; ++b)
            if (is_odd(parities[permutation[b]]) && permutation[a] > permutation[b]) negative = !negative;
    }
    return negative;
}

inline Fp koszul_sign(const Field& f, std::span<const std::size_t> permutation, std::span<const Parity> parities) {
    return f.sign(koszul_sign_negative(permutation, parities));
}

}  // namespace supercoind
