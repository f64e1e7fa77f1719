#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace rcbij {

// Small exact rational used for marks ratios, t^vee and cocharge sums.
struct Frac {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Frac() = default;
    Frac(std::int64_t n) : num(n), den(1) {}  // NOLINT(google-explicit-constructor)
    Frac(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::domain_error("Frac: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    bool integral() const { return den == 1; }

    friend Frac operator+(Frac a, Frac b) { return {a.num * b.den + b.num * a.den, a.den * b.den}; }
    friend Frac operator-(Frac a, Frac b) { return {a.num * b.den - b.num * a.den, a.den * b.den}; }
    friend Frac operator*(Frac a, Frac b) { return {a.num * b.num, a.den * b.den}; }
    friend Frac operator/(Frac a, Frac b) { return {a.num * b.den, a.den * b.num}; }
    Frac& operator+=(Frac b) { return *this = *this + b; }
    Frac& operator-=(Frac b) { return *this = *this - b; }
    friend bool operator==(Frac a, Frac b) { return a.num == b.num && a.den == b.den; }
    friend bool operator<(Frac a, Frac b) { return a.num * b.den < b.num * a.den; }
    friend std::ostream& operator<<(std::ostream& os, Frac f) {
        os << f.num;
        if (f.den != 1) os << '/' << f.den;
        return os;
    }
};

}  // namespace rcbij
