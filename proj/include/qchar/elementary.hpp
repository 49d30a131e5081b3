#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "qchar/charpoly.hpp"
#include "qchar/errors.hpp"
#include "qchar/symalg.hpp"

namespace qchar {

/// A node-local q-string: the monomial kr_highest(t, node, k, s) restricted
/// to one node.
struct LocalString {
    int node = 0;
    int k = 0;
    Spec s;
};

/// Expansion of a single string as the local module character, lifted to the
/// full monomial level (the A-factors carry their neighbor variables).
///
/// Diag/free/untwisted nodes give the (k+1)-term ladder of Prop 3.19; the
/// special node of A_{2n}^{(2)} gives the (k+1)(k+2)/2-term double ladder.
inline CharPoly string_expand(const TypeSpec& t, const LocalString& str) {
    Monomial top = kr_highest(t, str.node, str.k, str.s);
    CharPoly out;
    if (t.kind(str.node) == NodeKind::Special) {
        // sum over 0 <= R' <= R <= k of the two descending ladders
        std::vector<Monomial> plus_ladder{Monomial::one()};
        for (int r = 1; r <= str.k; ++r)
            plus_ladder.push_back(
                plus_ladder.back() *
                a_monomial(t, str.node, str.s.shift_q(Rat(2 * str.k + 1 - 2 * r))).inverse());
        for (int R = 0; R <= str.k; ++R) {
            Monomial base = top * plus_ladder[R];
            Monomial acc = base;
            out.add_term(acc, 1);
            for (int Rp = 1; Rp <= R; ++Rp) {
                acc *= a_monomial(t, str.node,
                                  str.s.shift_q(Rat(2 * str.k + 2 - 2 * Rp)).negate())
                           .inverse();
                out.add_term(acc, 1);
            }
        }
    } else {
        Rat unit = t.d(str.node); // A-ladder step exponent: d_i (2k - 2u + 1)
        Monomial acc = top;
        out.add_term(acc, 1);
        for (int u = 1; u <= str.k; ++u) {
            acc *= a_monomial(t, str.node, str.s.shift_q(unit * Rat(2 * str.k - 2 * u + 1)))
                       .inverse();
            out.add_term(acc, 1);
        }
    }
    return out;
}

/// Greedy normal factorization of an i-dominant node-local monomial into
/// maximal strings, per spectral line s * q^{step Z} (the two sign lines of
/// the special node are separate lines).
inline std::vector<LocalString> normal_factorization(const TypeSpec& t, int node,
                                                     const Monomial& mloc) {
    Rat step = t.kr_step(node);
    struct Line {
        Spec base;             // representative with q-offset reduced mod step
        std::map<Rat, int> e;  // position along the line (in units of step) -> exponent
    };
    std::map<std::tuple<Rat, Rat, Rat>, Line> lines;
    for (auto& [v, e] : mloc.entries()) {
        if (v.node != node)
            throw NotLocallyDominant("normal_factorization: foreign node variable");
        if (e < 0) throw NotLocallyDominant("normal_factorization: not locally dominant");
        Rat pos = v.s.q_pow() / step;
        Rat frac = pos.mod1();
        auto key = std::make_tuple(v.s.a_pow(), v.s.phase(), frac);
        auto& line = lines[key];
        line.base = Spec(v.s.a_pow(), v.s.phase(), frac * step);
        line.e[pos - frac] += e;
    }
    std::vector<LocalString> out;
    for (auto& [key, line] : lines) {
        auto& e = line.e;
        while (true) {
            auto it = std::find_if(e.rbegin(), e.rend(),
                                   [](const auto& p) { return p.second > 0; });
            if (it == e.rend()) break;
            Rat top_pos = it->first;
            Rat lo = top_pos;
            while (true) {
                auto jt = e.find(lo - Rat(1));
                if (jt == e.end() || jt->second <= 0) break;
                lo = lo - Rat(1);
            }
            for (Rat p = lo; p <= top_pos; p += Rat(1)) e[p] -= 1;
            int k = static_cast<int>((top_pos - lo).num()) + 1;
            out.push_back(LocalString{node, k, line.base.shift_q(step * lo)});
        }
    }
    return out;
}

namespace detail {

/// Character of the simple module of the local A_2^{(2)}-type algebra whose
/// highest monomial is the product of the given strings.
///
/// Strings on opposite sign lines can resonate: the lowest A-tail variable
/// Z_{-s_i q^{2k_i+1}}^{-1} of string i may hit a box s_j q^{2r} of string j,
/// making the tensor product reducible. In the Grothendieck ring the product
/// class splits off one contraction per resonance: string i loses its top
/// box (at u = s_i q^{2k_i-2}) and string j the hit box (at -u q^3), the two
/// removed boxes being connected by the A-chain A_{0,uq} A_{0,-uq^2}. The
/// character of each contracted class is again a plain product of string
/// characters, anchored through that chain (which carries the neighbor
/// variables). So
///   chi(L) = prod E(S) - sum over hits of
///            prod E(c) * [mloc(S) mloc(c)^{-1} (A_{uq} A_{-uq^2})^{-1}].
inline CharPoly special_block(const TypeSpec& t, const std::vector<LocalString>& strings) {
    auto product_of = [&t](const std::vector<LocalString>& ss) {
        CharPoly p = CharPoly::one();
        for (auto& s : ss) p *= string_expand(t, s);
        return p;
    };
    auto local_highest = [&t](const std::vector<LocalString>& ss) {
        Monomial m;
        for (auto& s : ss) m *= kr_highest(t, s.node, s.k, s.s);
        return m;
    };
    CharPoly block = product_of(strings);
    for (size_t i = 0; i < strings.size(); ++i) {
        Spec tail = strings[i].s.shift_q(Rat(2 * strings[i].k + 1)).negate();
        for (size_t j = 0; j < strings.size(); ++j) {
            if (i == j) continue;
            for (int r = 0; r < strings[j].k; ++r) {
                if (!(strings[j].s.shift_q(Rat(2 * r)) == tail)) continue;
                std::vector<LocalString> next;
                for (size_t u = 0; u < strings.size(); ++u) {
                    if (u == i) {
                        if (strings[u].k > 1)
                            next.push_back({strings[u].node, strings[u].k - 1, strings[u].s});
                    } else if (u == j) {
                        if (r > 0) next.push_back({strings[u].node, r, strings[u].s});
                        if (strings[u].k - 1 - r > 0)
                            next.push_back({strings[u].node, strings[u].k - 1 - r,
                                            strings[u].s.shift_q(Rat(2 * (r + 1)))});
                    } else {
                        next.push_back(strings[u]);
                    }
                }
                int node = strings[i].node;
                Spec top_box = strings[i].s.shift_q(Rat(2 * strings[i].k - 2));
                Monomial anchor = local_highest(strings) * local_highest(next).inverse() *
                                  a_monomial(t, node, top_box.shift_q(Rat(1))).inverse() *
                                  a_monomial(t, node, top_box.shift_q(Rat(2)).negate()).inverse();
                block -= product_of(next) * anchor;
            }
        }
    }
    return block;
}

} // namespace detail

/// L_j(m): the lift of a j-dominant monomial, i.e. m times the product of
/// the string corrections of the normal factorization of m^{(j)}. On the
/// special node the correction is the simple local character, which may be
/// smaller than the plain product of string characters (see special_block).
inline CharPoly local_lift(const TypeSpec& t, int node, const Monomial& m) {
    Monomial mloc = m.project(node);
    auto strings = normal_factorization(t, node, mloc);
    CharPoly corr;
    if (t.kind(node) == NodeKind::Special) {
        corr = detail::special_block(t, strings) * mloc.inverse();
    } else {
        corr = CharPoly::one();
        for (auto& s : strings)
            corr *= string_expand(t, s) * kr_highest(t, s.node, s.k, s.s).inverse();
    }
    return corr * m;
}

namespace detail {

/// Root-height of the BAR weight; strictly decreases along descents by
/// A^{-1}, so maximal-height selection picks maximal elements of the
/// partial order.
inline Rat bar_height(const TypeSpec& t, const Monomial& m) {
    auto c = bar_root_coords(t, beta_bar(t, m));
    Rat h(0);
    for (auto& x : c) h += x;
    return h;
}

} // namespace detail

/// Unique decomposition P = sum lambda_j(m') L_j(m') of Prop 3.15, computed
/// by maximal-first greedy peeling. Throws NotInKernel when P is not in the
/// screening ring K_j.
inline std::vector<std::pair<Monomial, Int>> decompose_direction(const TypeSpec& t,
                                                                 const CharPoly& P, int node) {
    std::vector<std::pair<Monomial, Int>> out;
    CharPoly R = P;
    std::map<Monomial, Rat> heights;
    auto height_of = [&](const Monomial& m) {
        auto it = heights.find(m);
        if (it == heights.end()) it = heights.emplace(m, detail::bar_height(t, m)).first;
        return it->second;
    };
    size_t guard = 4 * P.distinct_monomials() + 64;
    while (!R.is_zero()) {
        if (out.size() > guard) throw NotInKernel("decompose_direction: no convergence");
        const Monomial* best = nullptr;
        Rat best_h;
        for (auto& [m, c] : R.terms()) {
            if (!m.is_dominant_at(node)) continue;
            Rat h = height_of(m);
            if (!best || h > best_h || (h == best_h && m > *best)) {
                best = &m;
                best_h = h;
            }
        }
        if (!best) throw NotInKernel("decompose_direction: residue outside K_j");
        Monomial m = *best;
        Int lambda = R.coeff(m);
        if (lambda < 0) throw NotInKernel("decompose_direction: negative coefficient");
        R -= local_lift(t, node, m) * lambda;
        out.push_back({m, lambda});
    }
    return out;
}

/// Membership test for the image of the twisted q-character morphism
/// (Theorem 3.13): true iff the decomposition succeeds in every direction.
inline bool screen(const TypeSpec& t, const CharPoly& P) {
    for (int node : t.nodes) {
        try {
            decompose_direction(t, P, node);
        } catch (const NotInKernel&) {
            return false;
        } catch (const NotLocallyDominant&) {
            return false;
        }
    }
    return true;
}

} // namespace qchar
