#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qchar/cartan.hpp"
#include "qchar/errors.hpp"
#include "qchar/linalg.hpp"
#include "qchar/weights.hpp"

namespace qchar {

using BigRat = boost::multiprecision::cpp_rational;

/// Root-system data of a finite Cartan matrix, acting on weights in
/// fundamental-weight coordinates of the given lattice.
class RootData {
public:
    RootData(CartanData cd, Lattice lat) : cd_(std::move(cd)), lattice_(lat) {
        const int n = cd_.rank;
        rho_ = FiniteWeight(lattice_, std::vector<std::int64_t>(n, 1));
        for (int i = 0; i < n; ++i) {
            std::vector<std::int64_t> a(n, 0);
            for (int j = 0; j < n; ++j) a[j] = cd_.C[j][i];
            simple_roots_.push_back(FiniteWeight(lattice_, a));
        }
        // closure of the simple roots under simple reflections
        std::set<std::vector<std::int64_t>> all;
        std::vector<FiniteWeight> frontier = simple_roots_;
        for (auto& r : frontier) all.insert(r.coords);
        while (!frontier.empty()) {
            std::vector<FiniteWeight> next;
            for (auto& r : frontier) {
                for (int i = 0; i < n; ++i) {
                    FiniteWeight s = reflect(r, i);
                    if (all.insert(s.coords).second) next.push_back(FiniteWeight(lattice_, s.coords));
                }
            }
            frontier = std::move(next);
        }
        for (auto& c : all) {
            FiniteWeight r(lattice_, c);
            auto rc = root_coords(r);
            bool pos = true;
            for (auto& x : rc)
                if (x < Rat(0)) pos = false;
            if (pos) positive_roots_.push_back(r);
        }
    }

    int rank() const { return cd_.rank; }
    Lattice lattice() const { return lattice_; }
    const CartanData& cartan() const { return cd_; }
    const FiniteWeight& rho() const { return rho_; }
    const std::vector<FiniteWeight>& simple_roots() const { return simple_roots_; }
    const std::vector<FiniteWeight>& positive_roots() const { return positive_roots_; }

    FiniteWeight fundamental(int i) const {
        std::vector<std::int64_t> c(cd_.rank, 0);
        c[i] = 1;
        return FiniteWeight(lattice_, c);
    }

    FiniteWeight reflect(const FiniteWeight& w, int i) const {
        FiniteWeight r = w;
        std::int64_t wi = w.coords[i];
        for (int j = 0; j < cd_.rank; ++j) r.coords[j] -= wi * cd_.C[j][i];
        return r;
    }

    /// Coordinates of w in the simple-root basis (rational in general).
    std::vector<Rat> root_coords(const FiniteWeight& w) const {
        const int n = cd_.rank;
        std::vector<std::vector<Rat>> A(n, std::vector<Rat>(n));
        std::vector<Rat> b(n);
        for (int j = 0; j < n; ++j) {
            b[j] = Rat(w.coords[j]);
            for (int i = 0; i < n; ++i) A[j][i] = Rat(cd_.C[j][i]);
        }
        return detail::solve(A, b);
    }

    /// Symmetric bilinear form with (Lambda_i, alpha_j) = delta_ij d_j.
    BigRat inner(const FiniteWeight& x, const FiniteWeight& y) const {
        auto cy = root_coords(y);
        BigRat s = 0;
        for (int j = 0; j < cd_.rank; ++j) {
            BigRat dj(cd_.d[j].num(), cd_.d[j].den());
            BigRat cj(cy[j].num(), cy[j].den());
            s += BigRat(x.coords[j]) * dj * cj;
        }
        return s;
    }

    /// Weyl dimension formula.
    FiniteChar::Int dimension(const FiniteWeight& lambda) const {
        BigRat prod = 1;
        FiniteWeight lr = lambda + rho_;
        for (auto& a : positive_roots_) prod *= inner(lr, a) / inner(rho_, a);
        if (denominator(prod) != 1) throw std::domain_error("Weyl dimension not integral");
        return numerator(prod);
    }

    /// Character of the simple highest-weight module by the Freudenthal
    /// multiplicity recursion; the total is cross-checked against the Weyl
    /// dimension formula.
    FiniteChar irr_char(const FiniteWeight& lambda) const {
        if (!lambda.is_dominant()) throw NotDominant("irr_char: weight not dominant");
        std::map<FiniteWeight, FiniteChar::Int> mult;
        mult[lambda] = 1;
        BigRat top = inner(lambda + rho_, lambda + rho_);
        std::vector<FiniteWeight> level{lambda};
        while (!level.empty()) {
            std::set<FiniteWeight> next;
            for (auto& w : level)
                for (auto& a : simple_roots_) next.insert(w - a);
            std::vector<FiniteWeight> keep;
            for (auto& mu : next) {
                if (mult.count(mu)) continue;
                BigRat denom = top - inner(mu + rho_, mu + rho_);
                if (denom == 0) continue;
                BigRat sum = 0;
                for (auto& a : positive_roots_) {
                    for (int j = 1;; ++j) {
                        FiniteWeight up = mu + a.scaled(j);
                        auto it = mult.find(up);
                        if (it == mult.end()) break;
                        sum += BigRat(2) * BigRat(it->second) * inner(up, a);
                    }
                }
                if (sum == 0) continue;
                BigRat m = sum / denom;
                if (denominator(m) != 1) throw std::domain_error("Freudenthal: non-integer");
                FiniteChar::Int mi = numerator(m);
                if (mi > 0) {
                    mult[mu] = mi;
                    keep.push_back(mu);
                }
            }
            level = std::move(keep);
        }
        FiniteChar chi;
        for (auto& [w, c] : mult) chi.add_term(w, c);
        if (chi.dimension() != dimension(lambda))
            throw std::domain_error("Freudenthal/Weyl dimension mismatch");
        return chi;
    }

    bool is_weyl_symmetric(const FiniteChar& chi) const {
        for (int i = 0; i < cd_.rank; ++i)
            for (auto& [w, c] : chi.terms())
                if (chi.coeff(reflect(w, i)) != c) return false;
        return true;
    }

    /// Decompose a genuine character into irreducibles by peeling maximal
    /// dominant weights. Throws NegativeResidue if the input is not a
    /// nonnegative sum of irreducible characters.
    std::vector<std::pair<FiniteWeight, FiniteChar::Int>> branch(FiniteChar chi) const {
        std::vector<std::pair<FiniteWeight, FiniteChar::Int>> out;
        std::map<FiniteWeight, FiniteChar> cache;
        while (!chi.is_zero()) {
            // among dominant weights pick one of maximal root-height
            const FiniteWeight* best = nullptr;
            Rat best_h;
            for (auto& [w, c] : chi.terms()) {
                if (!w.is_dominant()) continue;
                auto rc = root_coords(w);
                Rat h(0);
                for (auto& x : rc) h += x;
                if (!best || h > best_h || (h == best_h && w > *best)) {
                    best = &w;
                    best_h = h;
                }
            }
            if (!best) throw NegativeResidue("branch: residue has no dominant weight");
            FiniteWeight lambda = *best;
            FiniteChar::Int mult = chi.coeff(lambda);
            if (mult < 0) throw NegativeResidue("branch: negative multiplicity");
            auto it = cache.find(lambda);
            if (it == cache.end()) it = cache.emplace(lambda, irr_char(lambda)).first;
            chi -= it->second * FiniteChar(FiniteWeight::zero(lattice_, cd_.rank), mult);
            for (auto& [w, c] : chi.terms())
                if (c < 0) throw NegativeResidue("branch: residue went negative");
            out.push_back({lambda, mult});
        }
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    CartanData cd_;
    Lattice lattice_;
    FiniteWeight rho_;
    std::vector<FiniteWeight> simple_roots_;
    std::vector<FiniteWeight> positive_roots_;
};

inline RootData tilde_root_data(const TypeSpec& t) { return RootData(t.tilde, Lattice::Tilde); }
inline RootData bar_root_data(const TypeSpec& t) { return RootData(t.bar, Lattice::Bar); }

} // namespace qchar
