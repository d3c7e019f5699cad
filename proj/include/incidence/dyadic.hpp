#pragma once

#include <cstdint>
#include <compare>
#include <string>

namespace incidence {

/// Exact rational with power-of-two denominator: num / 2^exp, kept normalized
/// (num odd or zero). Big enough for every potential sum at desk scale.
struct Dyadic {
    long long num = 0;
    int exp = 0; // denominator exponent, >= 0

    constexpr Dyadic() = default;
    constexpr Dyadic(long long n, int e = 0) : num(n), exp(e) { normalize(); }

    constexpr void normalize() {
        if (num == 0) { exp = 0; return; }
        while (exp > 0 && num % 2 == 0) { num /= 2; --exp; }
    }

    /// 2^{-k}, k >= 0.
    static constexpr Dyadic pow2(int k) { return Dyadic(1, k); }

    friend constexpr Dyadic operator+(Dyadic a, Dyadic b) {
        int e = a.exp > b.exp ? a.exp : b.exp;
        return Dyadic((a.num << (e - a.exp)) + (b.num << (e - b.exp)), e);
    }
    friend constexpr Dyadic operator-(Dyadic a) { return Dyadic(-a.num, a.exp); }
    friend constexpr Dyadic operator-(Dyadic a, Dyadic b) { return a + (-b); }

    friend constexpr bool operator==(const Dyadic& a, const Dyadic& b) {
        return a.num == b.num && a.exp == b.exp;
    }
    friend constexpr std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
        int e = a.exp > b.exp ? a.exp : b.exp;
        return (a.num << (e - a.exp)) <=> (b.num << (e - b.exp));
    }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(1ll << exp); }

    std::string to_string() const {
        if (exp == 0) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(1ll << exp);
    }
};

} // namespace incidence
