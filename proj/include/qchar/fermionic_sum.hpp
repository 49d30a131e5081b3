#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <vector>

#include "qchar/cartan.hpp"
#include "qchar/errors.hpp"
#include "qchar/weights.hpp"

namespace qchar::detail {

/// One node's occupation configuration: string multiplicities N_k, the
/// vacancy profile g(x) = sum_l N_l min(x,l) and the height m = sum_l l N_l.
struct FermiConfig {
    std::vector<int> N;       // N[k], k = 1..cap
    std::vector<long long> g; // g[x], x = 1..K
    std::vector<int> supp;    // k with N[k] > 0
    int m = 0;
};

struct FermiOverflow {};

/// Coefficient wrapper: fast 128-bit arithmetic that reports overflow so the
/// caller can rerun with arbitrary precision.
struct Coef128 {
    __int128 v = 0;
    Coef128() = default;
    Coef128(long long x) : v(x) {}
    static Coef128 from_int(const Int& x) {
        if (x > Int(std::numeric_limits<std::int64_t>::max()) ||
            x < Int(std::numeric_limits<std::int64_t>::min()))
            throw FermiOverflow{};
        return Coef128((long long)x);
    }
    Int to_int() const { return Int(v); }
    bool is_zero() const { return v == 0; }
    Coef128& operator+=(const Coef128& o) {
        if (__builtin_add_overflow(v, o.v, &v)) throw FermiOverflow{};
        return *this;
    }
    friend Coef128 operator*(const Coef128& a, const Coef128& b) {
        Coef128 r;
        if (__builtin_mul_overflow(a.v, b.v, &r.v)) throw FermiOverflow{};
        return r;
    }
};

struct CoefBig {
    Int v = 0;
    CoefBig() = default;
    CoefBig(long long x) : v(x) {}
    static CoefBig from_int(const Int& x) { return CoefBig(x); }
    Int to_int() const { return v; }
    bool is_zero() const { return v == 0; }
    CoefBig& operator+=(const CoefBig& o) {
        v += o.v;
        return *this;
    }
    friend CoefBig operator*(const CoefBig& a, const CoefBig& b) {
        CoefBig r;
        r.v = a.v * b.v;
        return r;
    }
    CoefBig(const Int& x) : v(x) {}
};

/// Weight vector packed into a fixed array (rank <= 8, coordinates small).
using PackedWeight = std::array<std::int16_t, 8>;

template <typename Coef>
struct SmallChar {
    // sorted unique keys
    std::vector<std::pair<PackedWeight, Coef>> terms;

    void add(const PackedWeight& w, const Coef& c) {
        auto it = std::lower_bound(terms.begin(), terms.end(), w,
                                   [](const auto& p, const PackedWeight& k) { return p.first < k; });
        if (it != terms.end() && it->first == w) {
            it->second += c;
        } else {
            terms.insert(it, {w, c});
        }
    }
    SmallChar& operator+=(const SmallChar& o) {
        for (auto& [w, c] : o.terms) add(w, c);
        return *this;
    }
    friend SmallChar operator*(const SmallChar& a, const SmallChar& b) {
        SmallChar r;
        for (auto& [wa, ca] : a.terms)
            for (auto& [wb, cb] : b.terms) {
                PackedWeight w;
                for (size_t i = 0; i < w.size(); ++i) {
                    int s = wa[i] + wb[i];
                    w[i] = (std::int16_t)s;
                }
                r.add(w, ca * cb);
            }
        return r;
    }
    SmallChar shifted_scaled(const PackedWeight& w0, const Coef& c0) const {
        SmallChar r;
        r.terms.reserve(terms.size());
        for (auto& [w, c] : terms) {
            PackedWeight w2;
            for (size_t i = 0; i < w2.size(); ++i) w2[i] = (std::int16_t)(w[i] + w0[i]);
            r.terms.push_back({w2, c0 * c});
        }
        return r;
    }
};

template <typename Coef>
FiniteChar fermionic_tree_sum_impl(const TypeSpec& dia,
                                   const std::map<std::pair<int, int>, int>& nu,
                                   const std::vector<int>& node_cap,
                                   const std::function<Int(const Int&, int)>& binom) {
    const int n = dia.n;
    if (n > 8) throw BudgetExceeded("fermionic sum: rank too large for packed weights");
    int max_cap = 0;
    for (int c : node_cap) max_cap = std::max(max_cap, c);
    const int K = max_cap + 1;

    std::vector<std::vector<long long>> nu_prof(n + 1, std::vector<long long>(K, 0));
    for (auto& [key, count] : nu)
        for (int k = 1; k < K; ++k)
            nu_prof[key.first][k] += (long long)count * std::min(k, key.second);

    std::vector<std::vector<FermiConfig>> configs(n + 1);
    for (int v = 1; v <= n; ++v) {
        int cap = node_cap[v - 1];
        FermiConfig cur;
        cur.N.assign(cap + 1, 0);
        std::function<void(int, int)> gen = [&](int k, int left) {
            if (k > left) {
                FermiConfig out = cur;
                out.g.assign(K, 0);
                for (int l = 1; l <= cap; ++l) {
                    if (!out.N[l]) continue;
                    out.supp.push_back(l);
                    out.m += l * out.N[l];
                    for (int x = 1; x < K; ++x) out.g[x] += (long long)out.N[l] * std::min(x, l);
                }
                configs[v].push_back(std::move(out));
                return;
            }
            for (int c = 0; c * k <= left; ++c) {
                cur.N[k] = c;
                gen(k + 1, left - c * k);
            }
            cur.N[k] = 0;
        };
        gen(1, cap);
    }

    // root at a leaf; BFS order
    int root = 1;
    for (int v = 1; v <= n; ++v)
        if (dia.neighbors(v).size() < dia.neighbors(root).size()) root = v;
    std::vector<std::vector<int>> children(n + 1);
    std::vector<int> order{root}, par(n + 1, 0);
    for (size_t i = 0; i < order.size(); ++i) {
        int v = order[i];
        for (int nb : dia.neighbors(v)) {
            if (nb == par[v] || nb == root) continue;
            par[nb] = v;
            children[v].push_back(nb);
            order.push_back(nb);
        }
    }

    std::vector<std::vector<std::int64_t>> alpha(n + 1);
    for (int j = 1; j <= n; ++j) {
        alpha[j].assign(n, 0);
        for (int c = 1; c <= n; ++c) alpha[j][c - 1] = dia.tilde.C[c - 1][j - 1];
    }
    auto binom_c = [&binom](long long p, int N) { return Coef::from_int(binom(Int(p), N)); };

    using Key = std::array<std::int16_t, 8>;
    using Slice = std::map<Key, SmallChar<Coef>>;
    const Key zero_key{};

    // B[v][cfg]: children's summed g-projection at supp(cfg) -> subtree char
    std::vector<std::vector<Slice>> B(n + 1);

    auto weight_of = [&](int v, int m) {
        PackedWeight w{};
        for (int c = 0; c < n; ++c) {
            long long x = -(long long)m * alpha[v][c];
            if (x > 32000 || x < -32000) throw FermiOverflow{};
            w[c] = (std::int16_t)x;
        }
        return w;
    };

    auto project_child = [&](int d, const FermiConfig& cfg_p) {
        Slice out;
        for (size_t ci = 0; ci < configs[d].size(); ++ci) {
            const FermiConfig& cfg = configs[d][ci];
            Key key = zero_key;
            for (size_t i = 0; i < cfg_p.supp.size(); ++i) {
                long long gi = cfg.g[cfg_p.supp[i]];
                if (gi > 32000) throw FermiOverflow{};
                key[i] = (std::int16_t)gi;
            }
            PackedWeight shift = weight_of(d, cfg.m);
            for (auto& [gamma, val] : B[d][ci]) {
                Coef coeff = Coef(1);
                bool zero = false;
                for (size_t i = 0; i < cfg.supp.size() && !zero; ++i) {
                    int k = cfg.supp[i];
                    long long p = nu_prof[d][k] - 2 * cfg.g[k] + cfg_p.g[k] + gamma[i];
                    coeff = coeff * binom_c(p + cfg.N[k], cfg.N[k]);
                    zero = coeff.is_zero();
                }
                if (zero) continue;
                out[key] += val.shifted_scaled(shift, coeff);
            }
        }
        return out;
    };

    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        B[v].resize(configs[v].size());
        for (size_t ci = 0; ci < configs[v].size(); ++ci) {
            const FermiConfig& cfg = configs[v][ci];
            Slice conv;
            SmallChar<Coef> one;
            one.terms.push_back({PackedWeight{}, Coef(1)});
            conv[zero_key] = one;
            for (int d : children[v]) {
                Slice md = project_child(d, cfg);
                Slice next;
                for (auto& [ga, va] : conv) {
                    for (auto& [gb, vb] : md) {
                        Key gs;
                        for (size_t i = 0; i < gs.size(); ++i)
                            gs[i] = (std::int16_t)(ga[i] + gb[i]);
                        next[gs] += va * vb;
                    }
                }
                conv = std::move(next);
                if (conv.empty()) break;
            }
            B[v][ci] = std::move(conv);
        }
    }

    // close the root
    SmallChar<Coef> total;
    for (size_t ci = 0; ci < configs[root].size(); ++ci) {
        const FermiConfig& cfg = configs[root][ci];
        PackedWeight shift = weight_of(root, cfg.m);
        for (auto& [gamma, val] : B[root][ci]) {
            Coef coeff = Coef(1);
            bool zero = false;
            for (size_t i = 0; i < cfg.supp.size() && !zero; ++i) {
                int k = cfg.supp[i];
                long long p = nu_prof[root][k] - 2 * cfg.g[k] + gamma[i];
                coeff = coeff * binom_c(p + cfg.N[k], cfg.N[k]);
                zero = coeff.is_zero();
            }
            if (zero) continue;
            total += val.shifted_scaled(shift, coeff);
        }
    }
    FiniteChar result;
    for (auto& [w, c] : total.terms) {
        if (c.is_zero()) continue;
        std::vector<std::int64_t> coords(n);
        for (int i = 0; i < n; ++i) coords[i] = w[i];
        result.add_term(FiniteWeight(Lattice::Tilde, std::move(coords)), c.to_int());
    }
    return result;
}

/// The fermionic sum of Def 8.4 over the simply-laced diagram `dia` (a
/// tree) with per-node height caps, by one bottom-up tree pass: the table
/// of a node, indexed by its configuration, carries the summed subtree
/// contributions keyed by the children's vacancy profiles projected onto
/// the node's occupied string lengths. Runs in 128-bit arithmetic first and
/// falls back to arbitrary precision on overflow.
inline FiniteChar fermionic_tree_sum(const TypeSpec& dia,
                                     const std::map<std::pair<int, int>, int>& nu,
                                     const std::vector<int>& node_cap,
                                     const std::function<Int(const Int&, int)>& binom) {
    try {
        return fermionic_tree_sum_impl<Coef128>(dia, nu, node_cap, binom);
    } catch (const FermiOverflow&) {
        return fermionic_tree_sum_impl<CoefBig>(dia, nu, node_cap, binom);
    }
}

} // namespace qchar::detail
