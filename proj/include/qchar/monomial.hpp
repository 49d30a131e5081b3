#pragma once

#include <algorithm>
#include <compare>
#include <ostream>
#include <string>
#include <vector>

#include "qchar/spectral.hpp"

namespace qchar {

/// A variable Z_{i,s} (or Y_{i,s} when the type is untwisted).
struct Var {
    int node = 0;
    Spec s;

    friend bool operator==(const Var&, const Var&) = default;
    friend std::strong_ordering operator<=>(const Var& x, const Var& y) {
        if (auto c = x.node <=> y.node; c != 0) return c;
        return x.s <=> y.s;
    }
};

/// Laurent monomial in the Z_{i,a}: a finite exponent map kept sorted in the
/// canonical variable order (node, aPow, phase, qPow). Zero exponents are
/// never stored, so equality of canonical forms is equality of monomials.
class Monomial {
public:
    using Entry = std::pair<Var, int>;

    Monomial() = default;
    static Monomial one() { return Monomial(); }
    static Monomial var(int node, const Spec& s, int e = 1) {
        Monomial m;
        if (e != 0) m.entries_.push_back({Var{node, s}, e});
        return m;
    }

    const std::vector<Entry>& entries() const { return entries_; }
    bool is_one() const { return entries_.empty(); }
    size_t size() const { return entries_.size(); }

    int exponent(const Var& v) const {
        auto it = std::lower_bound(entries_.begin(), entries_.end(), v,
                                   [](const Entry& e, const Var& w) { return e.first < w; });
        return (it != entries_.end() && it->first == v) ? it->second : 0;
    }

    friend Monomial operator*(const Monomial& x, const Monomial& y) {
        Monomial r;
        r.entries_.reserve(x.entries_.size() + y.entries_.size());
        auto a = x.entries_.begin(), ae = x.entries_.end();
        auto b = y.entries_.begin(), be = y.entries_.end();
        while (a != ae || b != be) {
            if (b == be || (a != ae && a->first < b->first)) {
                r.entries_.push_back(*a++);
            } else if (a == ae || b->first < a->first) {
                r.entries_.push_back(*b++);
            } else {
                int e = a->second + b->second;
                if (e != 0) r.entries_.push_back({a->first, e});
                ++a;
                ++b;
            }
        }
        return r;
    }
    Monomial& operator*=(const Monomial& o) { return *this = *this * o; }

    Monomial inverse() const {
        Monomial r = *this;
        for (auto& e : r.entries_) e.second = -e.second;
        return r;
    }
    Monomial pow(int k) const {
        if (k == 0) return Monomial();
        Monomial r = *this;
        for (auto& e : r.entries_) e.second *= k;
        return r;
    }

    /// Keep only node-j variables (the projection m^{(j)}).
    Monomial project(int node) const {
        Monomial r;
        for (auto& e : entries_)
            if (e.first.node == node) r.entries_.push_back(e);
        return r;
    }

    /// True iff every exponent on a node in J is >= 0.
    template <typename NodeSet>
    bool is_dominant_on(const NodeSet& J) const {
        for (auto& e : entries_)
            if (e.second < 0 &&
                std::find(std::begin(J), std::end(J), e.first.node) != std::end(J))
                return false;
        return true;
    }
    bool is_dominant_at(int node) const {
        for (auto& e : entries_)
            if (e.first.node == node && e.second < 0) return false;
        return true;
    }
    bool is_dominant() const {
        for (auto& e : entries_)
            if (e.second < 0) return false;
        return true;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;

    /// Total order compatible with multiplication: compare exponents at the
    /// first variable (in canonical variable order) where they differ.
    friend std::strong_ordering operator<=>(const Monomial& x, const Monomial& y) {
        auto a = x.entries_.begin(), ae = x.entries_.end();
        auto b = y.entries_.begin(), be = y.entries_.end();
        while (a != ae || b != be) {
            if (b == be || (a != ae && a->first < b->first)) {
                if (a->second != 0) return a->second <=> 0;
                ++a;
            } else if (a == ae || b->first < a->first) {
                if (b->second != 0) return 0 <=> b->second;
                ++b;
            } else {
                if (a->second != b->second) return a->second <=> b->second;
                ++a;
                ++b;
            }
        }
        return std::strong_ordering::equal;
    }

    /// Canonical text form, e.g. `Z[1; a q^2]^-1 Z[2; a^3 q^3]`.
    std::string str() const {
        if (entries_.empty()) return "1";
        std::string out;
        for (auto& [v, e] : entries_) {
            if (!out.empty()) out += " ";
            out += "Z[" + std::to_string(v.node) + "; " + v.s.str() + "]";
            if (e != 1) out += "^" + std::to_string(e);
        }
        return out;
    }
    friend std::ostream& operator<<(std::ostream& os, const Monomial& m) { return os << m.str(); }

private:
    std::vector<Entry> entries_;
};

} // namespace qchar
