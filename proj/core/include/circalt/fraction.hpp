#ifndef CIRCALT_FRACTION_HPP
#define CIRCALT_FRACTION_HPP

#include <compare>
#include <numeric>
#include <stdexcept>
#include <string>

namespace circalt {

// Exact positive rational in lowest terms.
struct Fraction {
    long p = 0;
    long q = 1;

    Fraction() = default;
    Fraction(long num, long den) : p(num), q(den) {
        if (num <= 0 || den <= 0) throw std::invalid_argument("fraction parts must be positive");
        const long g = std::gcd(num, den);
        p /= g;
        q /= g;
    }

    friend bool operator==(const Fraction& a, const Fraction& b) { return a.p == b.p && a.q == b.q; }
    friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) {
        return a.p * b.q <=> b.p * a.q;
    }

    long floor() const { return p / q; }
    std::string str() const { return std::to_string(p) + "/" + std::to_string(q); }
};

} // namespace circalt

#endif
