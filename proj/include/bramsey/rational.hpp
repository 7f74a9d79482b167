#ifndef BRAMSEY_RATIONAL_HPP
#define BRAMSEY_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace bramsey {

// Exact rational arithmetic for density thresholds. All the inequalities in
// the verifiers are sharp, so comparisons must not go through floating point.
// Arithmetic runs through 128 bits and reduces before narrowing; anything
// that still cannot be represented in 64 bits throws instead of wrapping.
struct Rat {
    long long num = 0;
    long long den = 1;

    Rat() = default;
    Rat(long long n) : num(n), den(1) {}
    Rat(long long n, long long d) {
        if (d == 0) throw std::invalid_argument("rational with zero denominator");
        *this = make((__int128)n, (__int128)d);
    }

    static Rat make(__int128 n, __int128 d) {
        if (d < 0) { n = -n; d = -d; }
        __int128 a = n < 0 ? -n : n, b = d;
        while (b) { __int128 t = a % b; a = b; b = t; }
        if (a > 1) { n /= a; d /= a; }
        constexpr __int128 lim = 0x7fffffffffffffffLL;
        if (n > lim || n < -lim || d > lim)
            throw std::overflow_error("rational out of 64-bit range after reduction");
        Rat r;
        r.num = (long long)n;
        r.den = (long long)d;
        return r;
    }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return make((__int128)a.num * b.den + (__int128)b.num * a.den,
                    (__int128)a.den * b.den);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return make((__int128)a.num * b.den - (__int128)b.num * a.den,
                    (__int128)a.den * b.den);
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return make((__int128)a.num * b.num, (__int128)a.den * b.den);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num == 0) throw std::invalid_argument("rational division by zero");
        return make((__int128)a.num * b.den, (__int128)a.den * b.num);
    }

    friend bool operator<(const Rat& a, const Rat& b) {
        return (__int128)a.num * b.den < (__int128)b.num * a.den;
    }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }
    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }

    Rat abs() const { return num < 0 ? Rat(-num, den) : *this; }

    long long floor() const {
        long long q = num / den;
        if (num % den != 0 && num < 0) --q;
        return q;
    }

    double to_double() const { return double(num) / double(den); }

    // Parses "0.05", "1/20", "3", "-1.25". Decimal parsing is exact.
    static Rat parse(const std::string& s);

    std::string str() const {
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

inline Rat Rat::parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        long long n = std::stoll(s.substr(0, slash));
        long long d = std::stoll(s.substr(slash + 1));
        return Rat(n, d);
    }
    auto dot = s.find('.');
    if (dot == std::string::npos) return Rat(std::stoll(s));
    bool neg = s[0] == '-';
    std::string ip = s.substr(neg ? 1 : 0, dot - (neg ? 1 : 0));
    std::string fp = s.substr(dot + 1);
    if (fp.size() > 15) throw std::invalid_argument("decimal literal too long: " + s);
    long long den = 1;
    for (size_t i = 0; i < fp.size(); ++i) den *= 10;
    long long num = (ip.empty() ? 0 : std::stoll(ip)) * den + (fp.empty() ? 0 : std::stoll(fp));
    return Rat(neg ? -num : num, den);
}

} // namespace bramsey

#endif
