#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qchar/charpoly.hpp"
#include "qchar/errors.hpp"
#include "qchar/symalg.hpp"

namespace qchar {

/// Rectangular letter array over a type-specific alphabet. Letters are
/// 1-based codes into the alphabet of the family variant.
struct Tableau {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<int>> cell; // [row][col]
};

/// The alphabets come in three shapes: the totally ordered A-type letters,
/// the 8-letter D4-style set 1 < 2 < 3 < {4,4bar} < 3bar < 2bar < 1bar, and
/// the (2n+2)-letter D_{n+1} set with {n+1, (n+1)bar} incomparable.
struct Alphabet {
    int size = 0;
    // strict partial order a < b
    std::function<bool(int, int)> less;
    bool leq(int a, int b) const { return a == b || less(a, b); }
    std::vector<std::string> names;
};

inline Alphabet total_alphabet(int size) {
    Alphabet al;
    al.size = size;
    al.less = [](int a, int b) { return a < b; };
    for (int i = 1; i <= size; ++i) al.names.push_back(std::to_string(i));
    return al;
}

/// Letters 1..m, mbar..1bar with the middle pair {m, mbar} incomparable;
/// codes m+i stand for (m+1-i)bar, so code m+1 = mbar, ..., code 2m = 1bar.
inline Alphabet barred_alphabet(int m) {
    Alphabet al;
    al.size = 2 * m;
    al.less = [m](int a, int b) {
        if (a == b) return false;
        // rank in the chain; m and mbar share the middle level
        auto level = [m](int x) { return x <= m ? x : (x == m + 1 ? m : x - 1); };
        int la = level(a), lb = level(b);
        if (la == lb) return false; // the incomparable middle pair
        return la < lb;
    };
    for (int i = 1; i <= m; ++i) al.names.push_back(std::to_string(i));
    for (int i = m; i >= 1; --i) al.names.push_back(std::to_string(i) + "b");
    return al;
}

namespace boxes {

/// A_{2n-1}^{(2)} boxes over letters 1..2n (section 10.1.1).
inline Monomial a2nm12(const TypeSpec& t, int letter, const Spec& x) {
    int n = t.n;
    if (letter < 1 || letter > 2 * n) throw UnknownLetter("A2n-1-2 letter out of range");
    auto Z = [](int node, const Spec& s, int e = 1) { return Monomial::var(node, s, e); };
    if (letter == 1) return Z(1, x);
    if (letter <= n - 1)
        return Z(letter - 1, x.shift_q(Rat(letter)), -1) *
               Z(letter, x.shift_q(Rat(letter - 1)));
    if (letter == n)
        return Z(n - 1, x.shift_q(Rat(n)), -1) *
               Z(n, x.pow(Rat(2)).shift_q(Rat(2 * n - 2)));
    if (letter == n + 1)
        return Z(n, x.pow(Rat(2)).shift_q(Rat(2 * n + 2)), -1) *
               Z(n - 1, x.shift_q(Rat(n)).negate());
    if (letter <= 2 * n - 1)
        return Z(2 * n - letter + 1, x.shift_q(Rat(letter)).negate(), -1) *
               Z(2 * n - letter, x.shift_q(Rat(letter - 1)).negate());
    return Z(1, x.shift_q(Rat(2 * n)).negate(), -1);
}

/// A_{2n}^{(2)} boxes over letters 1..2n+1 (section 10.1.2).
inline Monomial a2n2(const TypeSpec& t, int letter, const Spec& x) {
    int n = t.n;
    if (letter < 1 || letter > 2 * n + 1) throw UnknownLetter("A2n-2 letter out of range");
    auto Z = [](int node, const Spec& s, int e = 1) { return Monomial::var(node, s, e); };
    if (letter == 1) return Z(n - 1, x);
    if (letter <= n)
        return Z(n - letter + 1, x.shift_q(Rat(letter)), -1) *
               Z(n - letter, x.shift_q(Rat(letter - 1)));
    if (letter == n + 1)
        return Z(0, x.shift_q(Rat(n + 1)), -1) * Z(0, x.shift_q(Rat(n)).negate());
    if (letter <= 2 * n)
        return Z(letter - n - 2, x.shift_q(Rat(letter)).negate(), -1) *
               Z(letter - n - 1, x.shift_q(Rat(letter - 1)).negate());
    return Z(n - 1, x.shift_q(Rat(2 * n + 1)).negate(), -1);
}

enum class D4Variant {
    Twisted3,    // D_4^{(3)} boxes (section 10.2.1)
    Untwisted,   // D_4^{(1)} boxes (section 10.3)
    Twisted2,    // D_4^{(2)} nodes 1,2 (section 10.4)
    Twisted2Spin // D_4^{(2)} node 3 (section 10.4)
};

/// The 8-letter boxes; codes 1..8 = 1,2,3,4,4bar,3bar,2bar,1bar.
inline Monomial d4(D4Variant v, int letter, const Spec& x) {
    if (letter < 1 || letter > 8) throw UnknownLetter("D4 letter out of range");
    auto Z = [](int node, const Spec& s, int e = 1) { return Monomial::var(node, s, e); };
    Rat third(1, 3);
    switch (v) {
        case D4Variant::Twisted3: {
            Spec j1 = x.shift_q(Rat(2)).shift_phase(third);
            Spec j2 = x.shift_q(Rat(2)).shift_phase(third * Rat(2));
            Spec j1u = x.shift_q(Rat(4)).shift_phase(third);
            Spec j2u = x.shift_q(Rat(4)).shift_phase(third * Rat(2));
            switch (letter) {
                case 1: return Z(1, x);
                case 2: return Z(1, x.shift_q(Rat(2)), -1) * Z(2, x.pow(Rat(3)).shift_q(Rat(3)));
                case 3: return Z(2, x.pow(Rat(3)).shift_q(Rat(9)), -1) * Z(1, j1) * Z(1, j2);
                case 4: return Z(1, j1) * Z(1, j2u, -1);
                case 5: return Z(1, j2) * Z(1, j1u, -1);
                case 6: return Z(1, j1u, -1) * Z(1, j2u, -1) * Z(2, x.pow(Rat(3)).shift_q(Rat(9)));
                case 7: return Z(1, x.shift_q(Rat(4))) * Z(2, x.pow(Rat(3)).shift_q(Rat(15)), -1);
                case 8: return Z(1, x.shift_q(Rat(6)), -1);
            }
            break;
        }
        case D4Variant::Untwisted: {
            switch (letter) {
                case 1: return Z(1, x);
                case 2: return Z(1, x.shift_q(Rat(2)), -1) * Z(2, x.shift_q(Rat(1)));
                case 3:
                    return Z(2, x.shift_q(Rat(3)), -1) * Z(4, x.shift_q(Rat(2))) *
                           Z(3, x.shift_q(Rat(2)));
                case 4: return Z(4, x.shift_q(Rat(2))) * Z(3, x.shift_q(Rat(4)), -1);
                case 5: return Z(3, x.shift_q(Rat(2))) * Z(4, x.shift_q(Rat(4)), -1);
                case 6:
                    return Z(4, x.shift_q(Rat(4)), -1) * Z(3, x.shift_q(Rat(4)), -1) *
                           Z(2, x.shift_q(Rat(3)));
                case 7: return Z(1, x.shift_q(Rat(4))) * Z(2, x.shift_q(Rat(5)), -1);
                case 8: return Z(1, x.shift_q(Rat(6)), -1);
            }
            break;
        }
        case D4Variant::Twisted2: {
            Spec b = x.pow(Rat(1, 2)); // b^2 = x, principal branch
            switch (letter) {
                case 1: return Z(1, x);
                case 2: return Z(1, x.shift_q(Rat(4)), -1) * Z(2, x.shift_q(Rat(2)));
                case 3:
                    return Z(2, x.shift_q(Rat(6)), -1) * Z(3, b.shift_q(Rat(2))) *
                           Z(3, b.shift_q(Rat(2)).negate());
                case 4: return Z(3, b.shift_q(Rat(2))) * Z(3, b.shift_q(Rat(4)).negate(), -1);
                case 5: return Z(3, b.shift_q(Rat(2)).negate()) * Z(3, b.shift_q(Rat(4)), -1);
                case 6:
                    return Z(3, b.shift_q(Rat(4)), -1) * Z(3, b.shift_q(Rat(4)).negate(), -1) *
                           Z(2, x.shift_q(Rat(6)));
                case 7: return Z(1, x.shift_q(Rat(8))) * Z(2, x.shift_q(Rat(10)), -1);
                case 8: return Z(1, x.shift_q(Rat(12)), -1);
            }
            break;
        }
        case D4Variant::Twisted2Spin: {
            Spec x2 = x.pow(Rat(2));
            switch (letter) {
                case 1: return Z(3, x);
                case 2: return Z(3, x.shift_q(Rat(2)), -1) * Z(2, x2.shift_q(Rat(2)));
                case 3:
                    return Z(2, x2.shift_q(Rat(6)), -1) * Z(1, x2.shift_q(Rat(4))) *
                           Z(3, x.shift_q(Rat(2)).negate());
                case 4: return Z(1, x2.shift_q(Rat(4))) * Z(3, x.shift_q(Rat(4)).negate(), -1);
                case 5: return Z(3, x.shift_q(Rat(2)).negate()) * Z(1, x2.shift_q(Rat(8)), -1);
                case 6:
                    return Z(3, x.shift_q(Rat(4)).negate(), -1) * Z(1, x2.shift_q(Rat(8)), -1) *
                           Z(2, x2.shift_q(Rat(6)));
                case 7: return Z(3, x.shift_q(Rat(4))) * Z(2, x2.shift_q(Rat(10)), -1);
                case 8: return Z(3, x.shift_q(Rat(6)), -1);
            }
            break;
        }
    }
    throw UnknownLetter("d4 box");
}

/// D_{n+1}^{(2)} full boxes over the barred alphabet of size 2n+2 (section
/// 11.1); codes as in barred_alphabet(n+1).
inline Monomial dnp12_full(const TypeSpec& t, int code, const Spec& x) {
    int n = t.n;
    auto Z = [](int node, const Spec& s, int e = 1) { return Monomial::var(node, s, e); };
    Spec b = x.pow(Rat(1, 2)); // b^2 = x, principal branch
    int m = n + 1;
    if (code < 1 || code > 2 * m) throw UnknownLetter("Dn1-2 letter out of range");
    if (code <= m) {
        int i = code;
        if (i == 1) return Z(1, x);
        if (i <= n - 1)
            return Z(i - 1, x.shift_q(Rat(2 * i)), -1) * Z(i, x.shift_q(Rat(2 * (i - 1))));
        if (i == n)
            return Z(n - 1, x.shift_q(Rat(2 * n)), -1) * Z(n, b.shift_q(Rat(n - 1))) *
                   Z(n, b.shift_q(Rat(n - 1)).negate());
        // i == n+1
        return Z(n, b.shift_q(Rat(n + 1)), -1) * Z(n, b.shift_q(Rat(n - 1)).negate());
    }
    int j = 2 * m + 1 - code; // barred letter jbar
    if (j == m) // (n+1)bar
        return Z(n, b.shift_q(Rat(n + 1)).negate(), -1) * Z(n, b.shift_q(Rat(n - 1)));
    if (j == n)
        return Z(n - 1, x.shift_q(Rat(2 * n))) * Z(n, b.shift_q(Rat(n + 1)), -1) *
               Z(n, b.shift_q(Rat(n + 1)).negate(), -1);
    if (j >= 2)
        return Z(j - 1, x.shift_q(Rat(4 * n - 2 * j))) *
               Z(j, x.shift_q(Rat(4 * n + 2 - 2 * j)), -1);
    return Z(1, x.shift_q(Rat(4 * n)), -1);
}

/// D_{n+1}^{(2)} spin half-boxes over the barred alphabet of size 2n+2
/// (section 11.1; the barred boxes below letter n are the constant 1).
inline Monomial dnp12_spin(const TypeSpec& t, int code, const Spec& x) {
    int n = t.n;
    auto Z = [](int node, const Spec& s, int e = 1) { return Monomial::var(node, s, e); };
    Spec x2 = x.pow(Rat(2));
    int m = n + 1;
    if (code < 1 || code > 2 * m) throw UnknownLetter("Dn1-2 spin letter out of range");
    if (code <= m) {
        int i = code;
        if (i == n + 1) return Z(n, x.shift_q(Rat(n)));
        if (i == 1) return n == 1 ? Monomial::one() : Monomial(Z(1, x2.shift_q(Rat(-2))));
        Monomial mjm = Z(i - 1, x2.shift_q(Rat(2 * i - 2)), -1);
        if (i <= n - 1) mjm *= Z(i, x2.shift_q(Rat(2 * i - 4)));
        return mjm;
    }
    int j = 2 * m + 1 - code;
    if (j == m) return Z(n, x.shift_q(Rat(n)).negate());
    if (j == n)
        return Z(n, x.shift_q(Rat(n + 2)).negate(), -1) * Z(n, x.shift_q(Rat(n + 2)), -1);
    return Monomial::one();
}

} // namespace boxes

namespace detail {

/// Enumerate rows x cols tableaux with weakly increasing rows and the given
/// column condition between vertically adjacent cells, in lexicographic
/// order; calls sink on each one.
inline void enumerate_rect(const Alphabet& al, int rows, int cols,
                           const std::function<bool(int upper, int lower)>& column_ok,
                           const std::function<bool(const Tableau&)>& extra,
                           const std::function<void(const Tableau&)>& sink) {
    Tableau t;
    t.rows = rows;
    t.cols = cols;
    t.cell.assign(rows, std::vector<int>(cols, 0));
    // fill column by column, top to bottom
    std::function<void(int)> rec = [&](int pos) {
        if (pos == rows * cols) {
            if (extra(t)) sink(t);
            return;
        }
        int col = pos / rows, row = pos % rows;
        for (int letter = 1; letter <= al.size; ++letter) {
            if (col > 0 && !al.leq(t.cell[row][col - 1], letter)) continue;
            if (row > 0 && !column_ok(t.cell[row - 1][col], letter)) continue;
            t.cell[row][col] = letter;
            rec(pos + 1);
        }
        t.cell[row][col] = 0;
    };
    rec(0);
}

// the theta3/theta4 exclusions in the two-column form of Lemma 10.4:
// no (3 4 / 4 3bar) and no (3 4bar / 4bar 3bar) pattern at j < j'
inline bool theta34_two_column(const Tableau& t) {
    for (int j = 0; j < t.cols; ++j) {
        for (int jp = j + 1; jp < t.cols; ++jp) {
            if (t.cell[0][j] == 3 && t.cell[1][j] == 4 && t.cell[0][jp] == 4 &&
                t.cell[1][jp] == 6)
                return false;
            if (t.cell[0][j] == 3 && t.cell[1][j] == 5 && t.cell[0][jp] == 5 &&
                t.cell[1][jp] == 6)
                return false;
        }
    }
    return true;
}

// the published multi-column (theta3),(theta4) conditions
inline bool theta34_published(const Tableau& t) {
    auto run = [&](int j, int jp, int mid_top, int top_end, int bot_start) {
        if (t.cell[0][j] != 3 || t.cell[1][j] != bot_start) return true;       // start column
        if (t.cell[0][jp] != top_end || t.cell[1][jp] != 6) return true;       // end column
        for (int u = j + 1; u < jp; ++u)
            if (t.cell[0][u] != mid_top || t.cell[1][u] != 6) return true;     // middle columns
        return false;
    };
    for (int j = 0; j < t.cols; ++j)
        for (int jp = j + 1; jp < t.cols; ++jp) {
            if (!run(j, jp, 3, 4, 4)) return false; // (3..3 4 / 4 3bar..3bar)
            if (!run(j, jp, 3, 5, 5)) return false; // (3..3 4bar / 4bar 3bar..3bar)
        }
    return true;
}

} // namespace detail

/// Enumerate the published tableau family for (type, node, k); deterministic
/// lexicographic order.
inline std::vector<Tableau> enumerate_tableaux(const TypeSpec& t, int node, int k,
                                               bool published_theta = true) {
    std::vector<Tableau> out;
    auto sink = [&out](const Tableau& tb) { out.push_back(tb); };
    auto all = [](const Tableau&) { return true; };
    switch (t.family) {
        case Family::A2nm12: {
            if (node < 1 || node > t.n) throw UnsupportedNode("A2n-1-2 tableaux node");
            Alphabet al = total_alphabet(2 * t.n);
            detail::enumerate_rect(al, node, k, [](int u, int l) { return u < l; }, all, sink);
            break;
        }
        case Family::A2n2: {
            if (node < 0 || node > t.n - 1) throw UnsupportedNode("A2n-2 tableaux node");
            Alphabet al = total_alphabet(2 * t.n + 1);
            detail::enumerate_rect(al, t.n - node, k, [](int u, int l) { return u < l; }, all,
                                   sink);
            break;
        }
        case Family::D43:
        case Family::Dnp12:
        case Family::UntwistedD: {
            bool d4_shape = (t.family == Family::D43) ||
                            (t.family == Family::UntwistedD && t.n == 4) ||
                            (t.family == Family::Dnp12 && t.n == 3);
            if (!d4_shape) throw UnsupportedNode("no published tableaux for " + t.cli_name());
            // one-row families: D4-3 node 1, D4-1 node 1, D4-2 nodes 1 and 3
            bool one_row = (node == 1) || (t.family == Family::Dnp12 && node == 3);
            if (!one_row && node != 2)
                throw UnsupportedNode("tableaux for this node are not published");
            Alphabet al = barred_alphabet(4);
            if (one_row) {
                detail::enumerate_rect(al, 1, k, [](int, int) { return true; }, all, sink);
            } else {
                auto theta2 = [&al](int upper, int lower) { return !al.leq(lower, upper); };
                auto extra = [&](const Tableau& tb) {
                    return published_theta ? detail::theta34_published(tb)
                                           : detail::theta34_two_column(tb);
                };
                detail::enumerate_rect(al, 2, k, theta2, extra, sink);
            }
            break;
        }
        default:
            throw UnsupportedNode("no published tableaux for " + t.cli_name());
    }
    return out;
}

/// D_{n+1}^{(2)} fundamental column tableaux Tab_D(i0): single columns with
/// no weak decrease downward (incomparable steps allowed).
inline std::vector<Tableau> enumerate_dnp12_columns(const TypeSpec& t, int node) {
    if (t.family != Family::Dnp12 || node < 1 || node > t.n - 1)
        throw UnsupportedNode("Dn1-2 column tableaux");
    Alphabet al = barred_alphabet(t.n + 1);
    std::vector<Tableau> out;
    detail::enumerate_rect(
        al, node, 1, [&al](int u, int l) { return !al.leq(l, u); },
        [](const Tableau&) { return true; }, [&out](const Tableau& tb) { out.push_back(tb); });
    return out;
}

/// D_{n+1}^{(2)} spin tableaux B_sp: strictly increasing (n+1)-letter chains,
/// never i together with ibar, the letter n+1 only at positions p with
/// n+1-p even and (n+1)bar only at positions p with n-p even.
inline std::vector<Tableau> enumerate_spin(const TypeSpec& t) {
    if (t.family != Family::Dnp12) throw UnsupportedNode("spin tableaux");
    int n = t.n, m = n + 1;
    Alphabet al = barred_alphabet(m);
    auto pair_index = [m](int code) { return code <= m ? code : 2 * m + 1 - code; };
    std::vector<Tableau> out;
    Tableau tb;
    tb.rows = m;
    tb.cols = 1;
    tb.cell.assign(m, std::vector<int>(1, 0));
    std::vector<bool> used(m + 1, false);
    std::function<void(int)> rec = [&](int p) {
        if (p == m) {
            out.push_back(tb);
            return;
        }
        for (int code = 1; code <= 2 * m; ++code) {
            if (p > 0 && !al.less(tb.cell[p - 1][0], code)) continue;
            if (used[pair_index(code)]) continue;
            if (code == m && (n + 1 - (p + 1)) % 2 != 0) continue;     // letter n+1
            if (code == m + 1 && ((n - (p + 1)) % 2 + 2) % 2 != 0) continue; // (n+1)bar
            used[pair_index(code)] = true;
            tb.cell[p][0] = code;
            rec(p + 1);
            used[pair_index(code)] = false;
        }
        tb.cell[p][0] = 0;
    };
    rec(0);
    return out;
}

/// The box monomial of one cell for the given family variant.
inline Monomial box(const TypeSpec& t, int node, int letter, const Spec& x) {
    switch (t.family) {
        case Family::A2nm12: return boxes::a2nm12(t, letter, x);
        case Family::A2n2: return boxes::a2n2(t, letter, x);
        case Family::D43: return boxes::d4(boxes::D4Variant::Twisted3, letter, x);
        case Family::UntwistedD:
            if (t.n != 4) throw UnsupportedNode("untwisted D boxes only for D4");
            return boxes::d4(boxes::D4Variant::Untwisted, letter, x);
        case Family::Dnp12:
            if (t.n == 3 && node != 3)
                return boxes::d4(boxes::D4Variant::Twisted2, letter, x);
            if (t.n == 3 && node == 3)
                return boxes::d4(boxes::D4Variant::Twisted2Spin, letter, x);
            throw UnsupportedNode("Dn1-2 row boxes only published for n = 3");
        default: throw UnsupportedNode("no boxes for " + t.cli_name());
    }
}

/// The published closed tableau-sum formula for chi_q(W_{k,s}^{(node)}).
inline CharPoly tableaux_char(const TypeSpec& t, int node, int k, const Spec& s) {
    if (k < 1) throw NegativeK("tableaux_char: k < 1");
    CharPoly out;
    auto sum_rect = [&](const std::vector<Tableau>& tabs, const Spec& global, Rat col_step) {
        for (auto& tb : tabs) {
            Monomial m;
            for (int i = 0; i < tb.rows; ++i)
                for (int j = 0; j < tb.cols; ++j)
                    m *= box(t, node, tb.cell[i][j], global.shift_q(col_step * Rat(j - i)));
            out.add_term(m, 1);
        }
    };
    switch (t.family) {
        case Family::A2nm12: {
            Spec global = (node == t.n) ? s.pow(Rat(1, 2)).shift_q(Rat(t.n - 1))
                                        : s.shift_q(Rat(node - 1));
            sum_rect(enumerate_tableaux(t, node, k), global, Rat(2));
            break;
        }
        case Family::A2n2: {
            sum_rect(enumerate_tableaux(t, node, k), s.shift_q(Rat(t.n - node - 1)), Rat(2));
            break;
        }
        case Family::D43: {
            Spec global = (node == 2) ? s.pow(Rat(1, 3)).shift_q(Rat(1)) : s;
            sum_rect(enumerate_tableaux(t, node, k), global, Rat(2));
            break;
        }
        case Family::UntwistedD: {
            Spec global = s.shift_q(Rat(node - 1));
            sum_rect(enumerate_tableaux(t, node, k), global, Rat(2));
            break;
        }
        case Family::Dnp12: {
            if (t.n == 3 && node != 3) {
                Spec global = s.shift_q(Rat(2 * (node - 1)));
                sum_rect(enumerate_tableaux(t, node, k), global, Rat(4));
                break;
            }
            if (t.n == 3 && node == 3) {
                sum_rect(enumerate_tableaux(t, node, k), s, Rat(2));
                break;
            }
            if (k != 1)
                throw UnsupportedNode("Dn1-2 tableaux beyond n = 3 cover fundamentals only");
            if (node == t.n) {
                for (auto& tb : enumerate_spin(t)) {
                    Monomial m;
                    for (int p = 0; p < tb.rows; ++p)
                        m *= boxes::dnp12_spin(t, tb.cell[p][0],
                                               s.shift_q(Rat(t.n + 2 - 2 * (p + 1))));
                    out.add_term(m, 1);
                }
            } else {
                for (auto& tb : enumerate_dnp12_columns(t, node)) {
                    Monomial m;
                    for (int i = 0; i < tb.rows; ++i)
                        m *= boxes::dnp12_full(
                            t, tb.cell[i][0],
                            s.shift_q(Rat(2 * (node - 1))).shift_q(Rat(-4 * i)));
                    out.add_term(m, 1);
                }
            }
            break;
        }
        default:
            throw UnsupportedNode("no published tableau formula for " + t.cli_name());
    }
    return out;
}

/// Lemma 10.4: filtering 2 x k arrays by the published (theta3),(theta4) is
/// the same as filtering by the two-column forms (theta3'),(theta4').
inline bool theta_equivalence_check(int k) {
    auto t = build_type(Family::D43);
    auto a = enumerate_tableaux(t, 2, k, true);
    auto b = enumerate_tableaux(t, 2, k, false);
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i].cell != b[i].cell) return false;
    return true;
}

} // namespace qchar
