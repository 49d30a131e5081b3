#pragma once

#include <map>
#include <ostream>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "qchar/errors.hpp"
#include "qchar/monomial.hpp"

namespace qchar {

using Int = boost::multiprecision::cpp_int;

/// Sparse Laurent polynomial over the Z_{i,a}: finite map monomial ->
/// arbitrary-precision integer, zero coefficients dropped. The monomial
/// order is the multiplication-compatible total order of Monomial, so
/// rbegin() is the leading term for exact division.
class CharPoly {
public:
    using Terms = std::map<Monomial, Int>;

    CharPoly() = default;
    explicit CharPoly(const Monomial& m, Int c = 1) {
        if (c != 0) terms_[m] = std::move(c);
    }
    static CharPoly one() { return CharPoly(Monomial::one()); }
    static CharPoly zero() { return CharPoly(); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t distinct_monomials() const { return terms_.size(); }

    Int dimension() const {
        Int s = 0;
        for (auto& [m, c] : terms_) s += c;
        return s;
    }

    Int coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Int(0) : it->second;
    }

    void add_term(const Monomial& m, const Int& c) {
        if (c == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    friend CharPoly operator+(const CharPoly& x, const CharPoly& y) {
        CharPoly r = x;
        for (auto& [m, c] : y.terms_) r.add_term(m, c);
        return r;
    }
    friend CharPoly operator-(const CharPoly& x, const CharPoly& y) {
        CharPoly r = x;
        for (auto& [m, c] : y.terms_) r.add_term(m, -c);
        return r;
    }
    friend CharPoly operator*(const CharPoly& x, const CharPoly& y) {
        CharPoly r;
        for (auto& [mx, cx] : x.terms_)
            for (auto& [my, cy] : y.terms_) r.add_term(mx * my, cx * cy);
        return r;
    }
    CharPoly& operator+=(const CharPoly& o) {
        for (auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    CharPoly& operator-=(const CharPoly& o) {
        for (auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    CharPoly& operator*=(const CharPoly& o) { return *this = *this * o; }

    friend CharPoly operator*(const CharPoly& x, const Monomial& m) {
        CharPoly r;
        for (auto& [mx, cx] : x.terms_) r.terms_.emplace(mx * m, cx);
        return r;
    }
    friend CharPoly operator*(const CharPoly& x, const Int& c) {
        if (c == 0) return CharPoly();
        CharPoly r = x;
        for (auto& [m, cc] : r.terms_) cc *= c;
        return r;
    }

    friend bool operator==(const CharPoly&, const CharPoly&) = default;

    const std::pair<const Monomial, Int>& leading() const {
        if (terms_.empty()) throw NotDivisible("leading term of zero polynomial");
        return *terms_.rbegin();
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            if (!out.empty()) out += " + ";
            if (it->second != 1) out += it->second.str() + "*";
            out += it->first.str();
        }
        return out;
    }
    friend std::ostream& operator<<(std::ostream& os, const CharPoly& p) { return os << p.str(); }

private:
    Terms terms_;
};

/// Exact division: returns Q with Q*D = P, cancelling leading terms under the
/// monomial total order. Throws NotDivisible if a leading coefficient fails
/// to divide or the quotient exceeds `max_terms` (a non-divisible pair can
/// otherwise generate an infinite Laurent tail).
inline CharPoly poly_div_exact(CharPoly P, const CharPoly& D, size_t max_terms = 4000000) {
    if (D.is_zero()) throw NotDivisible("division by zero polynomial");
    CharPoly Q;
    const auto& [dm, dc] = D.leading();
    Monomial dm_inv = dm.inverse();
    size_t steps = 0;
    while (!P.is_zero()) {
        const auto& [pm, pc] = P.leading();
        if (pc % dc != 0) throw NotDivisible("coefficient does not divide");
        Monomial qm = pm * dm_inv;
        Int qc = pc / dc;
        Q.add_term(qm, qc);
        P -= (D * qm) * qc;
        if (++steps > max_terms) throw NotDivisible("quotient exceeds term budget");
    }
    return Q;
}

} // namespace qchar
