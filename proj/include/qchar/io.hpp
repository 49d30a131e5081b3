#pragma once

#include <sstream>
#include <string>

#include <json.hpp>

#include "qchar/charpoly.hpp"
#include "qchar/engine.hpp"
#include "qchar/tableaux.hpp"
#include "qchar/weights.hpp"

namespace qchar::io {

using nlohmann::json;

inline json to_json(const Rat& r) { return json::array({r.num(), r.den()}); }

inline Rat rat_from_json(const json& j) {
    return Rat(j.at(0).get<std::int64_t>(), j.at(1).get<std::int64_t>());
}

inline json to_json(const Monomial& m) {
    json arr = json::array();
    for (auto& [v, e] : m.entries()) {
        arr.push_back({{"node", v.node},
                       {"a", to_json(v.s.a_pow())},
                       {"phase", to_json(v.s.phase())},
                       {"q", to_json(v.s.q_pow())},
                       {"exp", e}});
    }
    return arr;
}

inline Monomial monomial_from_json(const json& j) {
    Monomial m;
    for (auto& v : j) {
        Spec s(rat_from_json(v.at("a")), rat_from_json(v.at("phase")), rat_from_json(v.at("q")));
        m *= Monomial::var(v.at("node").get<int>(), s, v.at("exp").get<int>());
    }
    return m;
}

/// Coefficients travel as decimal strings to avoid integer-width
/// assumptions on the consumer side.
inline json to_json(const CharPoly& p) {
    json terms = json::array();
    for (auto& [m, c] : p.terms())
        terms.push_back({{"coeff", c.str()}, {"monomial", to_json(m)}});
    return json{{"terms", terms}};
}

inline CharPoly charpoly_from_json(const json& j) {
    CharPoly p;
    for (auto& term : j.at("terms"))
        p.add_term(monomial_from_json(term.at("monomial")),
                   Int(term.at("coeff").get<std::string>()));
    return p;
}

inline json to_json(const FiniteWeight& w) {
    json c = json::array();
    for (auto x : w.coords) c.push_back(x);
    return json{{"lattice", w.lattice == Lattice::Tilde ? "tilde" : "bar"}, {"coords", c}};
}

inline FiniteWeight weight_from_json(const json& j) {
    std::vector<std::int64_t> coords;
    for (auto& x : j.at("coords")) coords.push_back(x.get<std::int64_t>());
    return FiniteWeight(j.at("lattice") == "tilde" ? Lattice::Tilde : Lattice::Bar,
                        std::move(coords));
}

inline json to_json(const FiniteChar& f) {
    json terms = json::array();
    for (auto& [w, c] : f.terms())
        terms.push_back({{"coeff", c.str()}, {"weight", to_json(w)}});
    return json{{"terms", terms}};
}

inline FiniteChar finitechar_from_json(const json& j) {
    FiniteChar f;
    for (auto& term : j.at("terms"))
        f.add_term(weight_from_json(term.at("weight")),
                   FiniteChar::Int(term.at("coeff").get<std::string>()));
    return f;
}

inline json to_json(const TypeSpec& t, const Tableau& tb) {
    Alphabet al = (t.family == Family::A2nm12)  ? total_alphabet(2 * t.n)
                  : (t.family == Family::A2n2)  ? total_alphabet(2 * t.n + 1)
                  : (t.family == Family::Dnp12 && t.n != 3)
                      ? barred_alphabet(t.n + 1)
                      : barred_alphabet(4);
    json rows = json::array();
    for (auto& row : tb.cell) {
        json r = json::array();
        for (int letter : row) r.push_back(al.names[letter - 1]);
        rows.push_back(r);
    }
    return json{{"rows", rows}};
}

inline Tableau tableau_from_json(const TypeSpec& t, const json& j) {
    Alphabet al = (t.family == Family::A2nm12)  ? total_alphabet(2 * t.n)
                  : (t.family == Family::A2n2)  ? total_alphabet(2 * t.n + 1)
                  : (t.family == Family::Dnp12 && t.n != 3)
                      ? barred_alphabet(t.n + 1)
                      : barred_alphabet(4);
    Tableau tb;
    for (auto& row : j.at("rows")) {
        std::vector<int> r;
        for (auto& name : row) {
            auto it = std::find(al.names.begin(), al.names.end(), name.get<std::string>());
            if (it == al.names.end()) throw UnknownLetter("tableau letter " + name.dump());
            r.push_back(int(it - al.names.begin()) + 1);
        }
        tb.cell.push_back(std::move(r));
    }
    tb.rows = (int)tb.cell.size();
    tb.cols = tb.rows ? (int)tb.cell[0].size() : 0;
    return tb;
}

inline std::string latex(const Rat& r) {
    if (r.den() == 1) return std::to_string(r.num());
    return "\\frac{" + std::to_string(r.num()) + "}{" + std::to_string(r.den()) + "}";
}

inline std::string latex(const Spec& s) {
    std::string out;
    auto piece = [&out](const std::string& sym, const Rat& e) {
        if (e.is_zero()) return;
        out += sym;
        if (!(e == Rat(1))) out += "^{" + latex(e) + "}";
    };
    piece("a", s.a_pow());
    if (s.phase() == Rat(1, 2)) {
        out = "-" + out;
    } else if (!s.phase().is_zero()) {
        out += "\\omega^{" + latex(s.phase()) + "}";
    }
    piece("q", s.q_pow());
    if (out.empty() || out == "-") out += "1";
    return out;
}

inline std::string latex(const Monomial& m) {
    if (m.is_one()) return "1";
    std::string out;
    for (auto& [v, e] : m.entries()) {
        out += "Z_{" + std::to_string(v.node) + "," + latex(v.s) + "}";
        if (e != 1) out += "^{" + std::to_string(e) + "}";
    }
    return out;
}

inline std::string latex(const CharPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        if (!out.empty()) out += " + ";
        if (it->second != 1) out += it->second.str() + "\\,";
        out += latex(it->first);
    }
    return out;
}

} // namespace qchar::io
