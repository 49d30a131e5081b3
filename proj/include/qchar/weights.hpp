#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qchar/cartan.hpp"

namespace qchar {

enum class Lattice { Tilde, Bar };

/// Integral weight of a finite subalgebra, stored in fundamental-weight
/// coordinates of the TILDE or BAR lattice of a TypeSpec.
struct FiniteWeight {
    Lattice lattice = Lattice::Tilde;
    std::vector<std::int64_t> coords;

    FiniteWeight() = default;
    FiniteWeight(Lattice l, std::vector<std::int64_t> c) : lattice(l), coords(std::move(c)) {}
    static FiniteWeight zero(Lattice l, int rank) {
        return FiniteWeight(l, std::vector<std::int64_t>(rank, 0));
    }

    bool is_dominant() const {
        for (auto c : coords)
            if (c < 0) return false;
        return true;
    }

    FiniteWeight& operator+=(const FiniteWeight& o) {
        for (size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
        return *this;
    }
    friend FiniteWeight operator+(FiniteWeight a, const FiniteWeight& b) { return a += b; }
    friend FiniteWeight operator-(FiniteWeight a, const FiniteWeight& b) {
        for (size_t i = 0; i < a.coords.size(); ++i) a.coords[i] -= b.coords[i];
        return a;
    }
    FiniteWeight scaled(std::int64_t k) const {
        FiniteWeight w = *this;
        for (auto& c : w.coords) c *= k;
        return w;
    }

    friend bool operator==(const FiniteWeight&, const FiniteWeight&) = default;
    friend auto operator<=>(const FiniteWeight&, const FiniteWeight&) = default;

    std::string str() const {
        std::string s = "(";
        for (size_t i = 0; i < coords.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(coords[i]);
        }
        return s + ")";
    }
    friend std::ostream& operator<<(std::ostream& os, const FiniteWeight& w) {
        return os << w.str();
    }
};

/// Z-linear combination of finite weights (an element of Z[z_i^{+-1}]).
class FiniteChar {
public:
    using Int = boost::multiprecision::cpp_int;
    using Terms = std::map<FiniteWeight, Int>;

    FiniteChar() = default;
    explicit FiniteChar(const FiniteWeight& w, Int c = 1) {
        if (c != 0) terms_[w] = std::move(c);
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Int dimension() const {
        Int s = 0;
        for (auto& [w, c] : terms_) s += c;
        return s;
    }
    Int coeff(const FiniteWeight& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? Int(0) : it->second;
    }
    void add_term(const FiniteWeight& w, const Int& c) {
        if (c == 0) return;
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            terms_.emplace(w, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    friend FiniteChar operator+(const FiniteChar& x, const FiniteChar& y) {
        FiniteChar r = x;
        for (auto& [w, c] : y.terms_) r.add_term(w, c);
        return r;
    }
    friend FiniteChar operator-(const FiniteChar& x, const FiniteChar& y) {
        FiniteChar r = x;
        for (auto& [w, c] : y.terms_) r.add_term(w, -c);
        return r;
    }
    friend FiniteChar operator*(const FiniteChar& x, const FiniteChar& y) {
        FiniteChar r;
        for (auto& [wx, cx] : x.terms_)
            for (auto& [wy, cy] : y.terms_) r.add_term(wx + wy, cx * cy);
        return r;
    }
    FiniteChar& operator+=(const FiniteChar& o) { return *this = *this + o; }
    FiniteChar& operator-=(const FiniteChar& o) { return *this = *this - o; }
    FiniteChar& operator*=(const FiniteChar& o) { return *this = *this * o; }

    friend bool operator==(const FiniteChar&, const FiniteChar&) = default;

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto& [w, c] : terms_) {
            if (!out.empty()) out += " + ";
            if (c != 1) out += c.str() + "*";
            out += "z" + w.str();
        }
        return out;
    }

private:
    Terms terms_;
};

} // namespace qchar
