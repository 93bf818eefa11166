#pragma once

#include <cstdint>
#include <numeric>
#include <string>

namespace autoseq {

// Exact rational with 64-bit parts; enough headroom for every bound in this
// project (numerators stay below ~1e7).
struct Rational {
    int64_t num = 0;
    int64_t den = 1;

    Rational() = default;
    Rational(int64_t n, int64_t d = 1) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    int64_t floor() const { return num >= 0 ? num / den : -((-num + den - 1) / den); }
    int64_t ceil() const { return num >= 0 ? (num + den - 1) / den : -((-num) / den); }
    double value() const { return (double)num / (double)den; }

    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

inline bool operator<=(const Rational& a, int64_t b) { return a.num <= b * a.den; }
inline bool operator>=(int64_t a, const Rational& b) { return a * b.den >= b.num; }
inline bool operator<(int64_t a, const Rational& b) { return a * b.den < b.num; }
inline bool operator>(int64_t a, const Rational& b) { return a * b.den > b.num; }

} // namespace autoseq
