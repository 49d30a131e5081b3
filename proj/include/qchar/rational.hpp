#pragma once

#include <cstdint>
#include <compare>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace qchar {

/// Exact rational number over 64-bit integers.
///
/// Exponents of spectral parameters stay tiny (denominators divide 6,
/// numerators are bounded by a few hundred), so a fixed-width rational with
/// overflow checks on the intermediate products is enough.
class Rat {
public:
    constexpr Rat() = default;
    Rat(std::int64_t n) : num_(n), den_(1) {}
    Rat(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return Rat(checked(__int128(a.num_) * b.den_ + __int128(b.num_) * a.den_),
                   checked(__int128(a.den_) * b.den_));
    }
    friend Rat operator-(const Rat& a, const Rat& b) { return a + Rat(-b.num_, b.den_); }
    friend Rat operator-(const Rat& a) { return Rat(-a.num_, a.den_); }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return Rat(checked(__int128(a.num_) * b.num_), checked(__int128(a.den_) * b.den_));
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num_ == 0) throw std::domain_error("Rat: division by zero");
        return Rat(checked(__int128(a.num_) * b.den_), checked(__int128(a.den_) * b.num_));
    }
    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        __int128 l = __int128(a.num_) * b.den_;
        __int128 r = __int128(b.num_) * a.den_;
        if (l < r) return std::strong_ordering::less;
        if (l > r) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// Value reduced into [0,1); used for phases.
    Rat mod1() const {
        std::int64_t r = num_ % den_;
        if (r < 0) r += den_;
        return Rat(r, den_);
    }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }
    friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

private:
    static std::int64_t checked(__int128 v) {
        if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("Rat: overflow");
        return static_cast<std::int64_t>(v);
    }
    void normalize() {
        if (den_ == 0) throw std::domain_error("Rat: zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
        if (num_ == 0) den_ = 1;
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

} // namespace qchar
