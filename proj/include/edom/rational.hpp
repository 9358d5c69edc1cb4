#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>

namespace edom {

/// Exact rational on int64, always normalized (den > 0, gcd(num,den) = 1).
/// Large enough for every closed-form counting bound at desk scale.
struct Rat {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rat() = default;
    Rat(std::int64_t n) : num(n), den(1) {}
    Rat(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        if (num == 0) den = 1;
    }

    friend Rat operator+(const Rat& a, const Rat& b) { return {a.num * b.den + b.num * a.den, a.den * b.den}; }
    friend Rat operator-(const Rat& a, const Rat& b) { return {a.num * b.den - b.num * a.den, a.den * b.den}; }
    friend Rat operator*(const Rat& a, const Rat& b) { return {a.num * b.num, a.den * b.den}; }
    friend Rat operator/(const Rat& a, const Rat& b) { return {a.num * b.den, a.den * b.num}; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.num * b.den < b.num * a.den; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.num * b.den <= b.num * a.den; }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator>=(const Rat& a, const Rat& b) { return b <= a; }

    bool is_integer() const { return den == 1; }

    /// Smallest integer >= value.
    std::int64_t ceil() const { return num >= 0 ? (num + den - 1) / den : -((-num) / den); }
    /// Largest integer <= value.
    std::int64_t floor() const { return num >= 0 ? num / den : -((-num + den - 1) / den); }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    std::string str() const {
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }
};

/// ceil/floor for float-valued bounds: a 1e-6 margin absorbs eigensolver and
/// sqrt round-off before the integer conclusion is drawn.
inline std::int64_t safe_ceil(double x) { return static_cast<std::int64_t>(std::ceil(x - 1e-6)); }
inline std::int64_t safe_floor(double x) { return static_cast<std::int64_t>(std::floor(x + 1e-6)); }

} // namespace edom
