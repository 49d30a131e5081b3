#pragma once

#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "qchar/cartan.hpp"
#include "qchar/charpoly.hpp"
#include "qchar/errors.hpp"
#include "qchar/linalg.hpp"
#include "qchar/monomial.hpp"
#include "qchar/weights.hpp"

namespace qchar {

/// The single variable Z_{i,s}.
inline Monomial z_var(const TypeSpec& t, int node, const Spec& s, int e = 1) {
    t.pos(node);
    return Monomial::var(node, s, e);
}

/// The monomial analogue A_{i,s} of a simple root.
inline Monomial a_monomial(const TypeSpec& t, int node, const Spec& s) {
    Monomial m;
    switch (t.kind(node)) {
        case NodeKind::Diag: {
            int M = t.M;
            m = Monomial::var(node, s.shift_q(Rat(M))) * Monomial::var(node, s.shift_q(Rat(-M)));
            for (int j : t.neighbors(node)) {
                if (t.sigma_fixed(j)) {
                    m *= Monomial::var(j, s, -1);
                } else {
                    for (const Spec& r : s.roots(M)) m *= Monomial::var(j, r, -1);
                }
            }
            break;
        }
        case NodeKind::Free: {
            m = Monomial::var(node, s.shift_q(Rat(1))) * Monomial::var(node, s.shift_q(Rat(-1)));
            for (int j : t.neighbors(node)) {
                if (t.sigma_fixed(j)) {
                    m *= Monomial::var(j, s.pow(Rat(t.M)), -1);
                } else {
                    m *= Monomial::var(j, s, -1);
                }
            }
            break;
        }
        case NodeKind::Special: {
            m = Monomial::var(node, s.shift_q(Rat(1))) * Monomial::var(node, s.shift_q(Rat(-1))) *
                Monomial::var(node, s.negate(), -1);
            for (int j : t.neighbors(node)) m *= Monomial::var(j, s, -1);
            break;
        }
    }
    return m;
}

/// Highest monomial of the Kirillov-Reshetikhin module W_{k,s}^{(i)}:
/// a q-string of length k at node i with step q^{2 d_i} (q^2 in A_{2n}^{(2)}).
inline Monomial kr_highest(const TypeSpec& t, int node, int k, const Spec& s) {
    if (k < 0) throw NegativeK("kr_highest: k < 0");
    Rat step = t.kr_step(node);
    Monomial m;
    for (int r = 0; r < k; ++r) m *= Monomial::var(node, s.shift_q(step * Rat(r)));
    return m;
}

inline bool is_j_dominant(const Monomial& m, const std::vector<int>& J) {
    return m.is_dominant_on(J);
}

/// Restriction of a monomial to the TILDE weight lattice (Prop 3.6 shape).
inline FiniteWeight beta(const TypeSpec& t, const Monomial& m) {
    FiniteWeight w = FiniteWeight::zero(Lattice::Tilde, t.tilde.rank);
    for (auto& [v, e] : m.entries()) w.coords[t.tilde_index(v.node)] += e;
    return w;
}

/// Restriction to the BAR lattice; for A_{2n}^{(2)} the node-0 variable maps
/// to z_0^2 (Prop 3.7).
inline FiniteWeight beta_bar(const TypeSpec& t, const Monomial& m) {
    FiniteWeight w = FiniteWeight::zero(Lattice::Bar, t.bar.rank);
    for (auto& [v, e] : m.entries()) {
        int mult = (t.family == Family::A2n2 && v.node == 0) ? 2 : 1;
        w.coords[t.bar_index(v.node)] += std::int64_t(e) * mult;
    }
    return w;
}

inline FiniteChar beta(const TypeSpec& t, const CharPoly& p) {
    FiniteChar f;
    for (auto& [m, c] : p.terms()) f.add_term(beta(t, m), c);
    return f;
}
inline FiniteChar beta_bar(const TypeSpec& t, const CharPoly& p) {
    FiniteChar f;
    for (auto& [m, c] : p.terms()) f.add_term(beta_bar(t, m), c);
    return f;
}

/// Express a BAR-lattice weight as a rational combination of the simple
/// roots: w = sum_i c_i alpha_i.
inline std::vector<Rat> bar_root_coords(const TypeSpec& t, const FiniteWeight& w) {
    const auto& C = t.bar.C;
    int n = t.bar.rank;
    std::vector<std::vector<Rat>> A(n, std::vector<Rat>(n));
    std::vector<Rat> b(n);
    for (int j = 0; j < n; ++j) {
        b[j] = Rat(w.coords[j]);
        for (int i = 0; i < n; ++i) A[j][i] = Rat(C[j][i]); // (alpha_i)_j = C[j][i]
    }
    return detail::solve(A, b);
}

/// Height of m below m_plus: the number of A^{-1} factors in m * m_plus^{-1},
/// read off the BAR weight via the coweight pairing. Throws NotBelow when the
/// weight difference is not a nonnegative integral combination of simple
/// roots (the precondition of the partial order).
inline int height_v(const TypeSpec& t, const Monomial& m, const Monomial& m_plus) {
    FiniteWeight w = beta_bar(t, m * m_plus.inverse());
    auto c = bar_root_coords(t, w);
    long long total = 0;
    for (auto& ci : c) {
        Rat v = -ci;
        if (!v.is_integer() || v < Rat(0)) throw NotBelow("not below in the monomial order");
        total += v.num();
    }
    return static_cast<int>(total);
}

namespace detail {

/// Layer data of a variable per Definition 3.16: variables interact iff they
/// share a base point a; within a class the integer level L separates the
/// q-layers.
struct Layer {
    Rat level;
    // class key
    Rat a_scaled;     // aPow/d_i  (aPow for A_{2n}^{(2)})
    Rat level_frac;   // level mod 1
    Rat phase_class;  // (phase/d_i * M) mod 1   ((phase*2) mod 1 for A_{2n}^{(2)})

    std::tuple<Rat, Rat, Rat> key() const { return {a_scaled, level_frac, phase_class}; }
};

inline Layer layer_of(const TypeSpec& t, const Var& v) {
    Layer l;
    if (t.family == Family::A2n2) {
        l.level = v.s.q_pow();
        l.a_scaled = v.s.a_pow();
        l.phase_class = (v.s.phase() * Rat(2)).mod1();
    } else {
        Rat d = t.d(v.node);
        l.level = v.s.q_pow() / d;
        l.a_scaled = v.s.a_pow() / d;
        l.phase_class = (v.s.phase() / d * Rat(t.M)).mod1();
    }
    l.level_frac = l.level.mod1();
    return l;
}

} // namespace detail

/// Right-negativity (Def 3.16): in every base class the maximal q-layer
/// carries only nonpositive exponents. The identity monomial is not
/// right-negative by convention.
inline bool is_right_negative(const TypeSpec& t, const Monomial& m) {
    if (m.is_one()) return false;
    std::map<std::tuple<Rat, Rat, Rat>, std::vector<std::pair<Rat, int>>> classes;
    for (auto& [v, e] : m.entries()) {
        auto l = detail::layer_of(t, v);
        classes[l.key()].push_back({l.level, e});
    }
    for (auto& [key, vars] : classes) {
        Rat top = vars.front().first;
        for (auto& [lev, e] : vars)
            if (lev > top) top = lev;
        for (auto& [lev, e] : vars)
            if (lev == top && e > 0) return false;
    }
    return true;
}

/// Factor g as a product of the A_{i,s} with nonnegative exponents
/// (multiplicative independence makes the factorization unique). Peels the
/// top q-layer of each base class, where only tops of A-factors can sit.
/// Returns std::nullopt when g is not such a product.
inline std::optional<std::map<std::pair<int, Spec>, int>> factor_as_simple_roots(
    const TypeSpec& t, Monomial g) {
    std::map<std::pair<int, Spec>, int> out;
    // weight-level bound on the number of factors
    long long bound = 0;
    {
        FiniteWeight w = beta_bar(t, g);
        std::vector<Rat> c;
        try {
            c = bar_root_coords(t, w);
        } catch (const std::domain_error&) {
            return std::nullopt;
        }
        for (auto& ci : c) {
            if (!ci.is_integer() || ci < Rat(0)) return std::nullopt;
            bound += ci.num();
        }
    }
    for (long long round = 0; round <= bound; ++round) {
        if (g.is_one()) return out;
        std::map<std::tuple<Rat, Rat, Rat>, std::pair<Rat, bool>> top; // key -> (max level, seen)
        for (auto& [v, e] : g.entries()) {
            auto l = detail::layer_of(t, v);
            auto it = top.find(l.key());
            if (it == top.end() || l.level > it->second.first) top[l.key()] = {l.level, true};
        }
        Monomial divisor;
        for (auto& [v, e] : g.entries()) {
            auto l = detail::layer_of(t, v);
            if (l.level != top[l.key()].first) continue;
            if (e < 0) return std::nullopt; // a negative exponent cannot be a top
            Rat shift = (t.family == Family::A2n2) ? Rat(-1) : -t.d(v.node);
            Spec s = v.s.shift_q(shift);
            out[{v.node, s}] += e;
            divisor *= a_monomial(t, v.node, s).pow(e);
        }
        g *= divisor.inverse();
    }
    return g.is_one() ? std::optional(out) : std::nullopt;
}

/// Partial order in the sense of monomials: m <= m_plus iff m_plus * m^{-1}
/// is a product of the A_{i,a}.
inline bool is_below(const TypeSpec& t, const Monomial& m, const Monomial& m_plus) {
    return factor_as_simple_roots(t, m_plus * m.inverse()).has_value();
}

/// Maximum positive exponent in the monomial (Def 10.6); 0 for the identity.
inline int affine_degree(const Monomial& m) {
    int deg = 0;
    for (auto& [v, e] : m.entries())
        if (e > deg) deg = e;
    return deg;
}
inline int affine_degree(const CharPoly& p) {
    int deg = 0;
    for (auto& [m, c] : p.terms())
        if (int d = affine_degree(m); d > deg) deg = d;
    return deg;
}

} // namespace qchar
