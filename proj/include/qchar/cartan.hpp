#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "qchar/errors.hpp"
#include "qchar/rational.hpp"

namespace qchar {

enum class Family {
    A2n2,        // A_{2n}^{(2)}, n >= 1 (n = 1 is A_2^{(2)})
    A2nm12,      // A_{2n-1}^{(2)}, n >= 2
    Dnp12,       // D_{n+1}^{(2)}, n >= 2
    E62,         // E_6^{(2)}
    D43,         // D_4^{(3)}
    UntwistedA,  // A_n, n >= 1
    UntwistedD,  // D_n, n >= 3
    UntwistedE6, // E_6
};

enum class NodeKind {
    Diag,    // C_{i,sigma(i)} = 2  (sigma-fixed orbit), d_i = M
    Free,    // C_{i,sigma(i)} = 0, d_i = 1
    Special, // C_{i,sigma(i)} = -1 (node 0 of A_{2n}^{(2)} only), d_i = 1/2
};

/// Finite Cartan matrix with symmetrizers; rows/cols indexed 0..rank-1.
struct CartanData {
    int rank = 0;
    std::vector<std::vector<int>> C; // C[i][j] = <alpha_j, alpha_i^vee>
    std::vector<Rat> d;              // d_i = (alpha_i, alpha_i)/2, relative lengths
    std::string name;                // e.g. "B3", "G2"

    static CartanData from_graph(int rank, const std::vector<std::pair<int, int>>& edges,
                                 std::vector<Rat> dv, std::string name) {
        CartanData cd;
        cd.rank = rank;
        cd.d = std::move(dv);
        cd.name = std::move(name);
        cd.C.assign(rank, std::vector<int>(rank, 0));
        for (int i = 0; i < rank; ++i) cd.C[i][i] = 2;
        for (auto [i, j] : edges) {
            // d_i C_ij = d_j C_ji with min(|C_ij|,|C_ji|) = 1
            Rat rij = cd.d[j] / cd.d[i];
            Rat rji = cd.d[i] / cd.d[j];
            cd.C[i][j] = rij >= Rat(1) ? -static_cast<int>(rij.num()) : -1;
            cd.C[j][i] = rji >= Rat(1) ? -static_cast<int>(rji.num()) : -1;
        }
        return cd;
    }
};

/// Registry entry for one (un)twisted type: nodes, orbit data, adjacency, the
/// simply-laced parent with its diagram automorphism, and the weight lattices
/// of the two finite subalgebras.
///
/// Immutable after construction; freely shareable across threads.
class TypeSpec {
public:
    Family family{};
    int n = 0; // family rank parameter
    int M = 1; // order of sigma

    std::vector<int> nodes;                 // I_sigma in diagram order
    std::vector<Rat> d_;                    // by position in `nodes`
    std::vector<int> eps_;                  // epsilon_i = M if sigma-fixed else 1
    std::vector<NodeKind> kind_;            // by position
    std::vector<std::vector<int>> adj_;     // neighbor node ids, by position

    // Parent data (untwisted simply-laced diagram); for untwisted types the
    // parent is the type itself with sigma = id.
    int parent_rank = 0;
    Family parent_family{};
    std::vector<int> sigma_;       // parent node -> parent node, 1-based storage
    std::vector<int> rep_;         // by position: I_sigma node -> parent node
    std::vector<int> orbit_node_;  // parent node -> I_sigma node id (1-based storage)
    std::vector<int> orbit_pow_;   // parent node j = sigma^p(rep): the power p

    // Weight lattices of the finite subalgebras. For types other than
    // A_{2n}^{(2)} the two coincide; for A_{2n}^{(2)} TILDE is C_n and BAR
    // is B_n at q^{1/2} (short root at node 0).
    CartanData tilde;                 // target of beta
    CartanData bar;                   // target of beta-bar
    std::vector<int> tilde_index_;    // by position: node -> coordinate in tilde
    std::vector<int> bar_index_;      // by position: node -> coordinate in bar

    bool twisted() const { return M > 1; }

    int pos(int node) const {
        auto it = std::find(nodes.begin(), nodes.end(), node);
        if (it == nodes.end())
            throw UnknownNode("node " + std::to_string(node) + " not in " + cli_name());
        return static_cast<int>(it - nodes.begin());
    }
    const Rat& d(int node) const { return d_[pos(node)]; }
    int eps(int node) const { return eps_[pos(node)]; }
    NodeKind kind(int node) const { return kind_[pos(node)]; }
    const std::vector<int>& neighbors(int node) const { return adj_[pos(node)]; }
    bool sigma_fixed(int node) const { return kind_[pos(node)] == NodeKind::Diag; }
    int rep(int node) const { return rep_[pos(node)]; }
    int tilde_index(int node) const { return tilde_index_[pos(node)]; }
    int bar_index(int node) const { return bar_index_[pos(node)]; }

    int sigma(int parent_node) const { return sigma_[parent_node]; }
    int orbit_node(int parent_node) const { return orbit_node_[parent_node]; }
    int orbit_pow(int parent_node) const { return orbit_pow_[parent_node]; }

    /// KR string step in the spectral parameter: q^2 for A_{2n}^{(2)} on every
    /// node, q^{2 d_i} otherwise.
    Rat kr_step(int node) const {
        if (family == Family::A2n2) return Rat(2);
        return d(node) * Rat(2);
    }

    std::string finite_type_name() const { return bar.name; }

    std::string cli_name() const {
        switch (family) {
            case Family::A2n2: return n == 1 ? "A2-2" : "A2n-2:" + std::to_string(n);
            case Family::A2nm12: return "A2n-1-2:" + std::to_string(n);
            case Family::Dnp12: return "Dn1-2:" + std::to_string(n);
            case Family::E62: return "E6-2";
            case Family::D43: return "D4-3";
            case Family::UntwistedA: return "untwisted:A" + std::to_string(n);
            case Family::UntwistedD: return "untwisted:D" + std::to_string(n);
            case Family::UntwistedE6: return "untwisted:E6";
        }
        return "?";
    }
};

namespace detail {

inline std::vector<std::pair<int, int>> path_edges(const std::vector<int>& nodes) {
    std::vector<std::pair<int, int>> e;
    for (size_t i = 0; i + 1 < nodes.size(); ++i) e.emplace_back(nodes[i], nodes[i + 1]);
    return e;
}

// Parent diagram edges, nodes 1..rank.
inline std::vector<std::pair<int, int>> parent_edges(Family f, int rank) {
    std::vector<std::pair<int, int>> e;
    switch (f) {
        case Family::UntwistedA:
            for (int i = 1; i < rank; ++i) e.emplace_back(i, i + 1);
            break;
        case Family::UntwistedD:
            for (int i = 1; i <= rank - 2; ++i) e.emplace_back(i, i + 1);
            e.emplace_back(rank - 2, rank);
            break;
        case Family::UntwistedE6:
            e = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 4}};
            break;
        default:
            break;
    }
    return e;
}

} // namespace detail

/// Build the registry entry for a family at rank n.
inline TypeSpec build_type(Family f, int n = 0) {
    TypeSpec t;
    t.family = f;

    auto fill_positions = [&t]() {
        int N = t.parent_rank;
        t.orbit_node_.assign(N + 1, -1);
        t.orbit_pow_.assign(N + 1, 0);
        for (size_t p = 0; p < t.nodes.size(); ++p) {
            int j = t.rep_[p];
            int pw = 0;
            do {
                t.orbit_node_[j] = t.nodes[p];
                t.orbit_pow_[j] = pw;
                j = t.sigma_[j];
                ++pw;
            } while (j != t.rep_[p]);
        }
    };

    switch (f) {
        case Family::A2n2: {
            if (n < 1) throw IllegalRank("A2n-2 requires n >= 1");
            t.n = n;
            t.M = 2;
            t.parent_family = Family::UntwistedA;
            t.parent_rank = 2 * n;
            for (int i = 0; i < n; ++i) t.nodes.push_back(i);
            for (int i = 0; i < n; ++i) {
                t.kind_.push_back(i == 0 ? NodeKind::Special : NodeKind::Free);
                t.d_.push_back(i == 0 ? Rat(1, 2) : Rat(1));
                t.eps_.push_back(1);
            }
            t.adj_.assign(n, {});
            for (int i = 0; i + 1 < n; ++i) {
                t.adj_[i].push_back(i + 1);
                t.adj_[i + 1].push_back(i);
            }
            t.sigma_.assign(2 * n + 1, 0);
            for (int j = 1; j <= 2 * n; ++j) t.sigma_[j] = 2 * n + 1 - j;
            for (int i = 0; i < n; ++i) t.rep_.push_back(n - i);
            fill_positions();
            // TILDE: C_n, beta(Z_{i,a}) = z_{n-i}; coordinate j-1 holds z_j.
            {
                std::vector<int> cn;
                for (int j = 1; j <= n; ++j) cn.push_back(j - 1);
                std::vector<Rat> dv(n, Rat(1));
                dv[n - 1] = Rat(2);
                std::vector<std::pair<int, int>> edges;
                for (int j = 0; j + 1 < n; ++j) edges.emplace_back(j, j + 1);
                t.tilde = CartanData::from_graph(n, edges, dv,
                                                 n == 1 ? "A1" : "C" + std::to_string(n));
                for (int i = 0; i < n; ++i) t.tilde_index_.push_back(n - i - 1);
            }
            // BAR: B_n at q^{1/2}, coordinates indexed by I_sigma itself.
            {
                std::vector<Rat> dv(n, Rat(1));
                dv[0] = Rat(1, 2);
                std::vector<std::pair<int, int>> edges;
                for (int j = 0; j + 1 < n; ++j) edges.emplace_back(j, j + 1);
                t.bar = CartanData::from_graph(n, edges, dv,
                                               n == 1 ? "A1" : "B" + std::to_string(n));
                for (int i = 0; i < n; ++i) t.bar_index_.push_back(i);
            }
            break;
        }
        case Family::A2nm12: {
            if (n < 2) throw IllegalRank("A2n-1-2 requires n >= 2");
            t.n = n;
            t.M = 2;
            t.parent_family = Family::UntwistedA;
            t.parent_rank = 2 * n - 1;
            for (int i = 1; i <= n; ++i) t.nodes.push_back(i);
            for (int i = 1; i <= n; ++i) {
                bool fixed = (i == n);
                t.kind_.push_back(fixed ? NodeKind::Diag : NodeKind::Free);
                t.d_.push_back(fixed ? Rat(2) : Rat(1));
                t.eps_.push_back(fixed ? 2 : 1);
            }
            t.adj_.assign(n, {});
            for (int i = 0; i + 1 < n; ++i) {
                t.adj_[i].push_back(t.nodes[i + 1]);
                t.adj_[i + 1].push_back(t.nodes[i]);
            }
            t.sigma_.assign(2 * n, 0);
            for (int j = 1; j <= 2 * n - 1; ++j) t.sigma_[j] = 2 * n - j;
            for (int i = 1; i <= n; ++i) t.rep_.push_back(i);
            fill_positions();
            {
                std::vector<Rat> dv(n, Rat(1));
                dv[n - 1] = Rat(2);
                std::vector<std::pair<int, int>> edges;
                for (int j = 0; j + 1 < n; ++j) edges.emplace_back(j, j + 1);
                t.tilde = CartanData::from_graph(n, edges, dv, "C" + std::to_string(n));
                for (int i = 0; i < n; ++i) t.tilde_index_.push_back(i);
            }
            t.bar = t.tilde;
            t.bar_index_ = t.tilde_index_;
            break;
        }
        case Family::Dnp12: {
            if (n < 2) throw IllegalRank("Dn1-2 requires n >= 2");
            t.n = n;
            t.M = 2;
            t.parent_family = Family::UntwistedD;
            t.parent_rank = n + 1;
            for (int i = 1; i <= n; ++i) t.nodes.push_back(i);
            for (int i = 1; i <= n; ++i) {
                bool fixed = (i <= n - 1);
                t.kind_.push_back(fixed ? NodeKind::Diag : NodeKind::Free);
                t.d_.push_back(fixed ? Rat(2) : Rat(1));
                t.eps_.push_back(fixed ? 2 : 1);
            }
            t.adj_.assign(n, {});
            for (int i = 0; i + 1 < n; ++i) {
                t.adj_[i].push_back(t.nodes[i + 1]);
                t.adj_[i + 1].push_back(t.nodes[i]);
            }
            t.sigma_.assign(n + 2, 0);
            for (int j = 1; j <= n - 1; ++j) t.sigma_[j] = j;
            t.sigma_[n] = n + 1;
            t.sigma_[n + 1] = n;
            for (int i = 1; i <= n; ++i) t.rep_.push_back(i);
            fill_positions();
            {
                std::vector<Rat> dv(n, Rat(2));
                dv[n - 1] = Rat(1);
                std::vector<std::pair<int, int>> edges;
                for (int j = 0; j + 1 < n; ++j) edges.emplace_back(j, j + 1);
                t.tilde = CartanData::from_graph(n, edges, dv, "B" + std::to_string(n));
                for (int i = 0; i < n; ++i) t.tilde_index_.push_back(i);
            }
            t.bar = t.tilde;
            t.bar_index_ = t.tilde_index_;
            break;
        }
        case Family::E62: {
            t.n = 4;
            t.M = 2;
            t.parent_family = Family::UntwistedE6;
            t.parent_rank = 6;
            t.nodes = {1, 2, 3, 4};
            t.kind_ = {NodeKind::Free, NodeKind::Free, NodeKind::Diag, NodeKind::Diag};
            t.d_ = {Rat(1), Rat(1), Rat(2), Rat(2)};
            t.eps_ = {1, 1, 2, 2};
            t.adj_ = {{2}, {1, 3}, {2, 4}, {3}};
            t.sigma_ = {0, 6, 2, 5, 4, 3, 1};
            t.rep_ = {1, 3, 4, 2};
            fill_positions();
            {
                std::vector<Rat> dv = {Rat(1), Rat(1), Rat(2), Rat(2)};
                t.tilde = CartanData::from_graph(4, {{0, 1}, {1, 2}, {2, 3}}, dv, "F4");
                t.tilde_index_ = {0, 1, 2, 3};
            }
            t.bar = t.tilde;
            t.bar_index_ = t.tilde_index_;
            break;
        }
        case Family::D43: {
            t.n = 2;
            t.M = 3;
            t.parent_family = Family::UntwistedD;
            t.parent_rank = 4;
            t.nodes = {1, 2};
            t.kind_ = {NodeKind::Free, NodeKind::Diag};
            t.d_ = {Rat(1), Rat(3)};
            t.eps_ = {1, 3};
            t.adj_ = {{2}, {1}};
            t.sigma_ = {0, 3, 2, 4, 1}; // 3-cycle on the outer nodes 1 -> 3 -> 4 -> 1
            t.rep_ = {1, 2};
            fill_positions();
            {
                std::vector<Rat> dv = {Rat(1), Rat(3)};
                t.tilde = CartanData::from_graph(2, {{0, 1}}, dv, "G2");
                t.tilde_index_ = {0, 1};
            }
            t.bar = t.tilde;
            t.bar_index_ = t.tilde_index_;
            break;
        }
        case Family::UntwistedA:
        case Family::UntwistedD:
        case Family::UntwistedE6: {
            if (f == Family::UntwistedA && n < 1) throw IllegalRank("A_n requires n >= 1");
            if (f == Family::UntwistedD && n < 3) throw IllegalRank("D_n requires n >= 3");
            if (f == Family::UntwistedE6) n = 6;
            t.n = n;
            t.M = 1;
            t.parent_family = f;
            t.parent_rank = n;
            for (int i = 1; i <= n; ++i) t.nodes.push_back(i);
            t.kind_.assign(n, NodeKind::Free);
            t.d_.assign(n, Rat(1));
            t.eps_.assign(n, 1);
            t.adj_.assign(n, {});
            for (auto [i, j] : detail::parent_edges(f, n)) {
                t.adj_[i - 1].push_back(j);
                t.adj_[j - 1].push_back(i);
            }
            t.sigma_.assign(n + 1, 0);
            for (int j = 1; j <= n; ++j) t.sigma_[j] = j;
            for (int i = 1; i <= n; ++i) t.rep_.push_back(i);
            fill_positions();
            {
                std::vector<Rat> dv(n, Rat(1));
                std::vector<std::pair<int, int>> edges;
                for (auto [i, j] : detail::parent_edges(f, n)) edges.emplace_back(i - 1, j - 1);
                std::string nm = (f == Family::UntwistedA   ? "A"
                                  : f == Family::UntwistedD ? "D"
                                                            : "E") +
                                 std::to_string(n);
                t.tilde = CartanData::from_graph(n, edges, dv, nm);
                for (int i = 0; i < n; ++i) t.tilde_index_.push_back(i);
            }
            t.bar = t.tilde;
            t.bar_index_ = t.tilde_index_;
            break;
        }
    }
    return t;
}

/// The simply-laced parent as its own TypeSpec (untwisted types return
/// themselves). Use TypeSpec::rep / orbit_node / orbit_pow of the twisted
/// spec for the node correspondence.
inline TypeSpec untwisted_parent(const TypeSpec& t) {
    return build_type(t.parent_family, t.parent_rank);
}

/// Parse the CLI type name grammar: A2-2, A2n-2:<n>, A2n-1-2:<n>, Dn1-2:<n>,
/// E6-2, D4-3, untwisted:<A|D|E><n>.
inline TypeSpec parse_type(const std::string& s) {
    auto rank_of = [&](const std::string& prefix) {
        return std::stoi(s.substr(prefix.size()));
    };
    if (s == "A2-2") return build_type(Family::A2n2, 1);
    if (s.rfind("A2n-2:", 0) == 0) return build_type(Family::A2n2, rank_of("A2n-2:"));
    if (s.rfind("A2n-1-2:", 0) == 0) return build_type(Family::A2nm12, rank_of("A2n-1-2:"));
    if (s.rfind("Dn1-2:", 0) == 0) return build_type(Family::Dnp12, rank_of("Dn1-2:"));
    if (s == "E6-2") return build_type(Family::E62);
    if (s == "D4-3") return build_type(Family::D43);
    if (s.rfind("untwisted:", 0) == 0) {
        std::string rest = s.substr(10);
        if (rest.empty()) throw IllegalRank("bad type name: " + s);
        char fam = rest[0];
        int r = rest.size() > 1 ? std::stoi(rest.substr(1)) : 0;
        if (fam == 'A') return build_type(Family::UntwistedA, r);
        if (fam == 'D') return build_type(Family::UntwistedD, r);
        if (fam == 'E' && r == 6) return build_type(Family::UntwistedE6, 6);
    }
    throw IllegalRank("unrecognized type name: " + s);
}

} // namespace qchar
