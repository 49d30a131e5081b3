#pragma once

#include <map>
#include <memory>
#include <set>
#include <tuple>
#include <vector>

#include "qchar/elementary.hpp"
#include "qchar/rootdata.hpp"
#include "qchar/symalg.hpp"

namespace qchar {

enum class Engine { Fold, Tsys, FM, Tableaux };

struct EngineReport {
    CharPoly character;
    Engine engine = Engine::Fold;
    std::vector<std::pair<Monomial, Int>> dominant_list;
    bool special = false;
    Int dimension;
    size_t distinct_monomials = 0;
};

/// All dominant monomials with multiplicities, sorted by descending weight
/// height (the highest first).
inline std::vector<std::pair<Monomial, Int>> dominant_monomials(const TypeSpec& t,
                                                                const CharPoly& P) {
    std::vector<std::tuple<Rat, Monomial, Int>> found;
    for (auto& [m, c] : P.terms())
        if (m.is_dominant()) found.push_back({detail::bar_height(t, m), m, c});
    std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) {
        if (std::get<0>(x) != std::get<0>(y)) return std::get<0>(x) > std::get<0>(y);
        return std::get<1>(x) > std::get<1>(y);
    });
    std::vector<std::pair<Monomial, Int>> out;
    for (auto& [h, m, c] : found) out.push_back({m, c});
    return out;
}

inline bool is_special(const TypeSpec& t, const CharPoly& P) {
    auto dom = dominant_monomials(t, P);
    return dom.size() == 1 && dom[0].second == 1;
}

/// Character engine for one type: generalized Frenkel-Mukhin expansion
/// (untwisted and twisted through the same code path), the folding map, the
/// T-system bootstrap, and memoized KR characters.
class QCharEngine {
public:
    explicit QCharEngine(TypeSpec t, size_t budget = 200000)
        : t_(std::move(t)), budget_(budget) {}

    const TypeSpec& type() const { return t_; }
    size_t budget() const { return budget_; }
    void set_budget(size_t b) { budget_ = b; }
    /// Results at most this many distinct monomials are re-verified through
    /// the screening decomposition.
    void set_screen_limit(size_t b) { screen_limit_ = b; }

    /// The unique element of the screening intersection with unique dominant
    /// monomial m_plus, by worklist saturation over increasing height.
    CharPoly fm_expand(const Monomial& m_plus) {
        if (!m_plus.is_dominant()) throw NotDominant("fm_expand: monomial not dominant");
        struct State {
            std::map<int, Int> contrib; // per-direction accumulated demand
            bool processed = false;
        };
        std::map<Monomial, State> states;
        std::set<std::pair<int, Monomial>> queue; // (height, monomial)
        states[m_plus];
        queue.insert({0, m_plus});
        CharPoly result;
        while (!queue.empty()) {
            auto [h, m] = *queue.begin();
            queue.erase(queue.begin());
            State& st = states[m];
            if (st.processed) continue;
            st.processed = true;
            Int mult;
            if (m == m_plus) {
                mult = 1;
            } else {
                bool pinned = false;
                for (int j : t_.nodes) {
                    if (m.is_dominant_at(j)) continue;
                    Int demand = st.contrib.count(j) ? st.contrib[j] : Int(0);
                    if (!pinned) {
                        mult = demand;
                        pinned = true;
                    } else if (mult != demand) {
                        throw DirectionConflict("fm_expand: directions disagree at " + m.str());
                    }
                }
                // dominant in every direction, i.e. a second dominant monomial
                if (!pinned) throw NotSpecial("fm_expand: second dominant monomial " + m.str());
            }
            if (mult == 0) continue;
            if (mult < 0) throw DirectionConflict("fm_expand: negative multiplicity");
            result.add_term(m, mult);
            for (int j : t_.nodes) {
                if (!m.is_dominant_at(j)) continue;
                Int lambda = mult - (st.contrib.count(j) ? st.contrib[j] : Int(0));
                if (lambda < 0) throw DirectionConflict("fm_expand: overfull direction");
                if (lambda == 0) continue;
                CharPoly L = local_lift(t_, j, m);
                for (auto& [mm, c] : L.terms()) {
                    if (mm == m) continue;
                    auto [it, fresh] = states.try_emplace(mm);
                    it->second.contrib[j] += lambda * c;
                    if (!it->second.processed)
                        queue.insert({height_v(t_, mm, m_plus), mm});
                    if (states.size() > budget_)
                        throw BudgetExceeded("fm_expand: monomial budget exceeded");
                }
            }
        }
        if (!is_special(t_, result)) throw NotSpecial("fm_expand: result not special");
        if (result.distinct_monomials() <= screen_limit_ && !screen(t_, result))
            throw NotInKernel("fm_expand: result fails screening");
        return result;
    }

    /// The folding map pi applied variable-wise to a polynomial over the
    /// untwisted parent (Theorem 8.1).
    CharPoly fold_pi(const CharPoly& parent_poly) const {
        if (!t_.twisted()) throw TypeMismatch("fold_pi: type is untwisted");
        CharPoly out;
        for (auto& [m, c] : parent_poly.terms()) {
            Monomial folded;
            for (auto& [v, e] : m.entries()) {
                if (v.node < 1 || v.node > t_.parent_rank)
                    throw TypeMismatch("fold_pi: variable outside the parent type");
                int node = t_.orbit_node(v.node);
                int p = t_.orbit_pow(v.node);
                Spec s;
                if (t_.family == Family::A2n2) {
                    s = v.s.shift_phase(Rat(p, 2));
                } else {
                    s = v.s.shift_phase(Rat(p, t_.M)).pow(t_.d(node));
                }
                folded *= Monomial::var(node, s, e);
            }
            out.add_term(folded, c);
        }
        return out;
    }

    /// chi of S_{k,a}^{(i)}, the correction term of the twisted T-system.
    CharPoly s_term(int node, int k, const Spec& s) {
        if (k < 1) throw NegativeK("s_term: k < 1");
        CharPoly prod = CharPoly::one();
        switch (t_.kind(node)) {
            case NodeKind::Diag: {
                Spec shifted = s.shift_q(t_.d(node));
                for (int j : t_.neighbors(node)) {
                    if (t_.sigma_fixed(j)) {
                        prod *= kr_char(j, k, shifted);
                    } else {
                        for (const Spec& r : shifted.roots(t_.M)) prod *= kr_char(j, k, r);
                    }
                }
                break;
            }
            case NodeKind::Free: {
                Spec sq = s.shift_q(Rat(1));
                for (int j : t_.neighbors(node)) {
                    if (t_.sigma_fixed(j)) {
                        prod *= kr_char(j, k, sq.pow(Rat(t_.M)));
                    } else {
                        prod *= kr_char(j, k, sq);
                    }
                }
                break;
            }
            case NodeKind::Special: {
                Spec sq = s.shift_q(Rat(1));
                prod *= kr_char(node, k, sq.negate());
                for (int j : t_.neighbors(node)) prod *= kr_char(j, k, sq);
                break;
            }
        }
        return prod;
    }

    /// The twisted q-character of the KR module W_{k,s}^{(i)}.
    ///
    /// Default route: fundamentals by folding the untwisted parent (whose own
    /// fundamentals come from the generalized FM expansion), then the
    /// T-system bootstrap in k. Engine::FM runs the saturation directly on
    /// this type; Engine::Fold folds the parent KR character at any k.
    CharPoly kr_char(int node, int k, const Spec& s, Engine engine = Engine::Tsys) {
        if (k < 0) throw NegativeK("kr_char: k < 0");
        if (k == 0) return CharPoly::one();
        auto key = std::make_tuple(node, k, s, engine);
        if (auto it = cache_.find(key); it != cache_.end()) return it->second;
        CharPoly result;
        if (engine == Engine::FM || (!t_.twisted() && k == 1)) {
            result = fm_expand(kr_highest(t_, node, k, s));
        } else if (t_.twisted() && (engine == Engine::Fold || k == 1)) {
            result = fold_parent_kr(node, k, s);
        } else {
            // chi(W_k,s) = (chi(W_{k-1},s) chi(W_{k-1},s r^2) - chi(S_{k-1},s))
            //              / chi(W_{k-2}, s r^2)
            Spec up = s.shift_q(t_.kr_step(node));
            CharPoly numer = kr_char(node, k - 1, s) * kr_char(node, k - 1, up) -
                             s_term(node, k - 1, s);
            result = poly_div_exact(numer, kr_char(node, k - 2, up));
        }
        if (result.distinct_monomials() > budget_)
            throw BudgetExceeded("kr_char: monomial budget exceeded");
        if (result.coeff(kr_highest(t_, node, k, s)) != 1 || !is_special(t_, result))
            throw NotSpecial("kr_char: result is not special with the KR highest monomial");
        cache_.emplace(key, result);
        return result;
    }

    EngineReport report(int node, int k, const Spec& s, Engine engine = Engine::Tsys) {
        EngineReport r;
        r.character = kr_char(node, k, s, engine);
        r.engine = engine;
        r.dominant_list = dominant_monomials(t_, r.character);
        r.special = r.dominant_list.size() == 1 && r.dominant_list[0].second == 1;
        r.dimension = r.character.dimension();
        r.distinct_monomials = r.character.distinct_monomials();
        return r;
    }

    /// Exact check of the twisted T-system at (node, k, s); returns the
    /// residual LHS - RHS (zero iff the identity holds).
    std::pair<bool, CharPoly> check_tsystem(int node, int k, const Spec& s,
                                            Engine engine = Engine::Tsys) {
        if (k < 1) throw NegativeK("check_tsystem: k < 1");
        Spec up = s.shift_q(t_.kr_step(node));
        CharPoly lhs = kr_char(node, k, s, engine) * kr_char(node, k, up, engine);
        CharPoly rhs = kr_char(node, k + 1, s, engine) * kr_char(node, k - 1, up, engine) +
                       s_term(node, k, s);
        CharPoly residual = lhs - rhs;
        return {residual.is_zero(), residual};
    }

private:
    CharPoly fold_parent_kr(int node, int k, const Spec& s) {
        if (!parent_) parent_ = std::make_unique<QCharEngine>(untwisted_parent(t_), budget_);
        Spec b = (t_.family == Family::A2n2)
                     ? s
                     : s.pow(Rat(1) / t_.d(node)); // principal d_i-th root
        CharPoly up = parent_->kr_char(t_.rep(node), k, b);
        return fold_pi(up);
    }

    TypeSpec t_;
    size_t budget_;
    size_t screen_limit_ = 5000;
    std::map<std::tuple<int, int, Spec, Engine>, CharPoly> cache_;
    std::unique_ptr<QCharEngine> parent_;
};

} // namespace qchar
