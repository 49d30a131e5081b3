#pragma once

#include "qchar/engine.hpp"
#include "qchar/rootdata.hpp"

namespace qchar {

/// Q_k^{(i)}: the KR character restricted to the finite subalgebra. The
/// result is independent of the spectral parameter.
inline FiniteChar q_character(QCharEngine& eng, int node, int k, Lattice side = Lattice::Tilde) {
    CharPoly chi = eng.kr_char(node, k, Spec::base_a());
    return side == Lattice::Tilde ? beta(eng.type(), chi) : beta_bar(eng.type(), chi);
}

/// R_k^{(i)}: the correction term of the twisted Q-system (section 4.1 case
/// table). Sigma-moved neighbors of a diag node enter to the M-th power.
inline FiniteChar r_term(QCharEngine& eng, int node, int k, Lattice side = Lattice::Tilde) {
    const TypeSpec& t = eng.type();
    if (k < 1) throw NegativeK("r_term: k < 1");
    FiniteChar prod(FiniteWeight::zero(side, side == Lattice::Tilde ? t.tilde.rank : t.bar.rank));
    switch (t.kind(node)) {
        case NodeKind::Diag:
            for (int j : t.neighbors(node)) {
                int power = t.sigma_fixed(j) ? 1 : t.M;
                for (int p = 0; p < power; ++p) prod *= q_character(eng, j, k, side);
            }
            break;
        case NodeKind::Free:
            for (int j : t.neighbors(node)) prod *= q_character(eng, j, k, side);
            break;
        case NodeKind::Special:
            prod *= q_character(eng, node, k, side);
            for (int j : t.neighbors(node)) prod *= q_character(eng, j, k, side);
            break;
    }
    return prod;
}

/// Exact check of the twisted Q-system (Q_k)^2 = Q_{k+1} Q_{k-1} + R_k in
/// the character ring of the finite subalgebra.
inline bool check_qsystem(QCharEngine& eng, int node, int k, Lattice side = Lattice::Tilde) {
    if (k < 1) throw NegativeK("check_qsystem: k < 1");
    FiniteChar qk = q_character(eng, node, k, side);
    FiniteChar lhs = qk * qk;
    FiniteChar rhs = q_character(eng, node, k + 1, side) * q_character(eng, node, k - 1, side) +
                     r_term(eng, node, k, side);
    return lhs == rhs;
}

} // namespace qchar
