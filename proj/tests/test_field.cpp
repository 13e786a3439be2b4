#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "supercoind/field.hpp"

using namespace supercoind;

namespace {

// Bubble sort the arrangement back to identity, counting odd-odd swaps.
int bubble_sign(std::vector<std::size_t> perm, const std::vector<Parity>& par) {
    int sign = 1;
    for (std::size_t pass = 0; pass < perm.size(); ++pass)
        for (std::size_t k = 0; k + 1 < perm.size(); ++k)
            if (perm[k] > perm[k + 1]) {
                if (is_odd(par[perm[k]]) && is_odd(par[perm[k + 1]])) sign = -sign;
                std::swap(perm[k], perm[k + 1]);
            }
    return sign;
}

}  // namespace

TEST(Field, RejectsBadModuli) {
    EXPECT_THROW(Field(2), std::invalid_argument);
    EXPECT_THROW(Field(1), std::invalid_argument);
    EXPECT_THROW(Field(9), std::invalid_argument);
    EXPECT_NO_THROW(Field(3));
}

TEST(Field, AxiomsExhaustive) {
    for (std::uint32_t p : {3U, 5U, 7U}) {
        Field f(p);
        for (std::uint32_t a = 0; a < p; ++a) {
            Fp x{a};
            EXPECT_EQ(f.add(x, f.zero()), x);
            EXPECT_EQ(f.mul(x, f.one()), x);
            EXPECT_EQ(f.add(x, f.neg(x)), f.zero());
            if (a != 0) EXPECT_EQ(f.mul(x, f.inv(x)), f.one());
            for (std::uint32_t b = 0; b < p; ++b) {
                Fp y{b};
                EXPECT_EQ(f.add(x, y), f.add(y, x));
                EXPECT_EQ(f.mul(x, y), f.mul(y, x));
                EXPECT_EQ(f.sub(f.add(x, y), y), x);
                for (std::uint32_t c = 0; c < p; ++c) {
                    Fp z{c};
                    EXPECT_EQ(f.add(f.add(x, y), z), f.add(x, f.add(y, z)));
                    EXPECT_EQ(f.mul(f.mul(x, y), z), f.mul(x, f.mul(y, z)));
                    EXPECT_EQ(f.mul(x, f.add(y, z)), f.add(f.mul(x, y), f.mul(x, z)));
                }
            }
        }
    }
}

TEST(Field, InverseOfZeroThrows) {
    Field f(5);
    EXPECT_THROW((void)f.inv(f.zero()), std::domain_error);
}

TEST(Field, HalfAndWilson) {
    for (std::uint32_t p : {3U, 5U, 7U, 11U}) {
        Field f(p);
        EXPECT_EQ(f.mul(f.half(), f.from_int(2)), f.one());
        EXPECT_EQ(f.factorial(p - 1), f.neg(f.one()));
    }
}

TEST(Field, BinomialMatchesPascal) {
    Field f(3);
    // Pascal triangle over the integers, reduced at the end
    std::vector<std::vector<std::uint64_t>> pascal(30, std::vector<std::uint64_t>(30, 0));
    for (std::size_t n = 0; n < 30; ++n) {
        pascal[n][0] = 1;
        for (std::size_t k = 1; k <= n; ++k) pascal[n][k] = (pascal[n - 1][k - 1] + pascal[n - 1][k]) % 3;
    }
    for (std::size_t n = 0; n < 30; ++n)
        for (std::size_t k = 0; k <= n; ++k) EXPECT_EQ(f.binomial(n, k), Fp{static_cast<std::uint32_t>(pascal[n][k])});
    EXPECT_EQ(f.binomial(2, 5), f.zero());
}

TEST(KoszulSign, SwapTwoOdd) {
    Field f(5);
    std::vector<std::size_t> perm{1, 0};
    std::vector<Parity> par{Parity::odd, Parity::odd};
    EXPECT_EQ(koszul_sign(f, perm, par), f.neg(f.one()));
}

TEST(KoszulSign, SwapOddPastEven) {
    Field f(5);
    std::vector<std::size_t> perm{1, 0};
    std::vector<Parity> par{Parity::odd, Parity::even};
    EXPECT_EQ(koszul_sign(f, perm, par), f.one());
}

TEST(KoszulSign, ReverseThreeOdd) {
    Field f(5);
    std::vector<std::size_t> perm{2, 1, 0};
    std::vector<Parity> par(3, Parity::odd);
    EXPECT_EQ(bubble_sign(perm, par), -1);
    EXPECT_EQ(koszul_sign(f, perm, par), f.neg(f.one()));
}

TEST(KoszulSign, LengthMismatchThrows) {
    std::vector<std::size_t> perm{0, 1};
    std::vector<Parity> par{Parity::odd};
    EXPECT_THROW((void)koszul_sign_negative(perm, par), std::invalid_argument);
    std::vector<std::size_t> bad{0, 0};
    std::vector<Parity> par2(2, Parity::odd);
    EXPECT_THROW((void)koszul_sign_negative(bad, par2), std::invalid_argument);
}

TEST(KoszulSign, MatchesBubbleSortRandom) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        std::size_t k = 1 + rng() % 7;
        std::vector<std::size_t> perm(k);
        std::iota(perm.begin(), perm.end(), std::size_t{0});
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<Parity> par(k);
        for (auto& x : par) x = parity_of(rng() & 1U);
        EXPECT_EQ(koszul_sign_negative(perm, par), bubble_sign(perm, par) < 0);
    }
}

TEST(KoszulSign, HomomorphismRandom) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 1000; ++trial) {
        std::size_t k = 1 + rng() % 6;
        std::vector<std::size_t> sigma(k), tau(k), comp(k);
        std::iota(sigma.begin(), sigma.end(), std::size_t{0});
        std::iota(tau.begin(), tau.end(), std::size_t{0});
        std::shuffle(sigma.begin(), sigma.end(), rng);
        std::shuffle(tau.begin(), tau.end(), rng);
        std::vector<Parity> par(k), moved(k);
        for (auto& x : par) x = parity_of(rng() & 1U);
        for (std::size_t i = 0; i < k; ++i) {
            moved[i] = par[tau[i]];
            comp[i] = tau[sigma[i]];
        }
        bool lhs = koszul_sign_negative(comp, par);
        bool rhs = koszul_sign_negative(sigma, moved) != koszul_sign_negative(tau, par);
        EXPECT_EQ(lhs, rhs);
    }
}
