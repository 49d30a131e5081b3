#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <vector>

#include "qchar/rational.hpp"

namespace qchar {

/// A point of C* kept symbolic: a^{aPow} * e^{2*pi*i*phase} * q^{qPow} with
/// rational exponents and the phase reduced mod 1. `a` and `q` are treated as
/// independent transcendentals, so equality is decidable and no accidental
/// collision q^m = 1 can occur.
class Spec {
public:
    Spec() = default;
    Spec(Rat a_pow, Rat phase, Rat q_pow)
        : a_(a_pow), phase_(phase.mod1()), q_(q_pow) {}

    static Spec base_a() { return Spec(Rat(1), Rat(0), Rat(0)); }

    const Rat& a_pow() const { return a_; }
    const Rat& phase() const { return phase_; }
    const Rat& q_pow() const { return q_; }

    friend Spec operator*(const Spec& x, const Spec& y) {
        return Spec(x.a_ + y.a_, x.phase_ + y.phase_, x.q_ + y.q_);
    }
    Spec inverse() const { return Spec(-a_, -phase_, -q_); }

    /// Raise to a rational power; the phase uses the principal branch.
    Spec pow(const Rat& e) const { return Spec(a_ * e, phase_ * e, q_ * e); }

    /// Shift by q^{e}.
    Spec shift_q(const Rat& e) const { return Spec(a_, phase_, q_ + e); }
    /// Multiply by e^{2*pi*i*ph}.
    Spec shift_phase(const Rat& ph) const { return Spec(a_, phase_ + ph, q_); }
    /// Multiply by -1.
    Spec negate() const { return shift_phase(Rat(1, 2)); }

    /// All m-th roots: components divided by m, phases offset by k/m.
    std::vector<Spec> roots(int m) const {
        std::vector<Spec> out;
        Rat inv(1, m);
        for (int k = 0; k < m; ++k)
            out.push_back(Spec(a_ * inv, phase_ * inv + Rat(k, m), q_ * inv));
        return out;
    }
    /// Principal m-th root (phase divided by m, offset 0).
    Spec principal_root(int m) const { return pow(Rat(1, m)); }

    friend bool operator==(const Spec& x, const Spec& y) {
        return x.a_ == y.a_ && x.phase_ == y.phase_ && x.q_ == y.q_;
    }
    friend std::strong_ordering operator<=>(const Spec& x, const Spec& y) {
        if (auto c = x.a_ <=> y.a_; c != 0) return c;
        if (auto c = x.phase_ <=> y.phase_; c != 0) return c;
        return x.q_ <=> y.q_;
    }

    /// Text form like `a w^{1/3} q^{5/2}`; pieces with zero exponent are dropped.
    std::string str() const {
        std::string s;
        auto piece = [&s](const char* sym, const Rat& e) {
            if (e.is_zero()) return;
            if (!s.empty()) s += " ";
            s += sym;
            if (e == Rat(1)) return;
            s += "^" + e.str();
        };
        piece("a", a_);
        piece("w", phase_);
        piece("q", q_);
        if (s.empty()) s = "1";
        return s;
    }
    friend std::ostream& operator<<(std::ostream& os, const Spec& s) { return os << s.str(); }

private:
    Rat a_, phase_, q_;
};

} // namespace qchar
