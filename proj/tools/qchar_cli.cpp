// Command-line surface of the twisted q-character engine: computation,
// verification and report emission. Exit codes: 0 success/verified,
// 1 verification failure, 2 usage error, 3 budget or engine error.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qchar/engine.hpp"
#include "qchar/fermionic.hpp"
#include "qchar/io.hpp"
#include "qchar/qsystem.hpp"
#include "qchar/tableaux.hpp"

using namespace qchar;

namespace {

struct Options {
    std::string type;
    int node = 0;
    int k = 1;
    std::string shift;   // q^<p/q>
    std::string phase;   // <p/q>
    std::string engine = "tsys";
    std::string format = "text";
    std::string side = "tilde";
    std::string nu;      // node:k:count[,node:k:count...]
    std::string binomial = "gamma";
    size_t budget = 200000;
    bool list_tableaux = false;
    bool ladder = false;
    int kmax = 1;
};

Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(std::stoll(s));
    return Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

Spec spectral_param(const Options& opt) {
    Spec s = Spec::base_a();
    if (!opt.shift.empty()) {
        std::string body = opt.shift;
        if (body.rfind("q^", 0) == 0) body = body.substr(2);
        else if (body.rfind("q", 0) == 0) body = body.substr(1).empty() ? "1" : body.substr(1);
        s = s.shift_q(parse_rat(body));
    }
    if (!opt.phase.empty()) s = s.shift_phase(parse_rat(opt.phase));
    return s;
}

Engine parse_engine(const std::string& s) {
    if (s == "fold") return Engine::Fold;
    if (s == "tsys") return Engine::Tsys;
    if (s == "fm") return Engine::FM;
    if (s == "tableaux") return Engine::Tableaux;
    throw CLI::ValidationError("--engine", "unknown engine " + s);
}

Lattice parse_side(const std::string& s) {
    if (s == "tilde") return Lattice::Tilde;
    if (s == "bar") return Lattice::Bar;
    throw CLI::ValidationError("--side", "unknown side " + s);
}

NuVector parse_nu(const std::string& s) {
    NuVector nu;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto c1 = item.find(':');
        auto c2 = item.find(':', c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos)
            throw CLI::ValidationError("--nu", "expected node:k:count");
        nu.set(std::stoi(item.substr(0, c1)), std::stoi(item.substr(c1 + 1, c2 - c1 - 1)),
               std::stoi(item.substr(c2 + 1)));
    }
    return nu;
}

void emit_charpoly(const Options& opt, const CharPoly& p) {
    if (opt.format == "json") {
        std::cout << io::to_json(p).dump(2) << "\n";
    } else if (opt.format == "latex") {
        std::cout << io::latex(p) << "\n";
    } else {
        for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
            if (it->second != 1) std::cout << it->second.str() << " * ";
            std::cout << it->first.str() << "\n";
        }
    }
}

CharPoly compute_char(QCharEngine& eng, const Options& opt, const Spec& s) {
    if (opt.engine == "tableaux") return tableaux_char(eng.type(), opt.node, opt.k, s);
    return eng.kr_char(opt.node, opt.k, s, parse_engine(opt.engine));
}

int cmd_qchar(const Options& opt) {
    auto t = parse_type(opt.type);
    QCharEngine eng(t, opt.budget);
    Spec s = spectral_param(opt);
    if (opt.engine == "all") {
        CharPoly ref = eng.kr_char(opt.node, opt.k, s, Engine::Tsys);
        bool agree = ref == eng.kr_char(opt.node, opt.k, s, Engine::FM);
        if (t.twisted()) agree = agree && ref == eng.kr_char(opt.node, opt.k, s, Engine::Fold);
        try {
            agree = agree && ref == tableaux_char(t, opt.node, opt.k, s);
        } catch (const UnsupportedNode&) {
        }
        emit_charpoly(opt, ref);
        std::cout << (agree ? "engines agree\n" : "ENGINE MISMATCH\n");
        return agree ? 0 : 1;
    }
    CharPoly chi = compute_char(eng, opt, s);
    if (opt.format == "json") {
        auto dom = dominant_monomials(t, chi);
        io::json j{{"type", t.cli_name()},
                   {"node", opt.node},
                   {"k", opt.k},
                   {"engine", opt.engine},
                   {"dimension", chi.dimension().str()},
                   {"distinct_monomials", chi.distinct_monomials()},
                   {"special", dom.size() == 1 && dom[0].second == 1},
                   {"character", io::to_json(chi)}};
        io::json dj = io::json::array();
        for (auto& [m, c] : dom) dj.push_back({{"coeff", c.str()}, {"monomial", io::to_json(m)}});
        j["dominant"] = dj;
        std::cout << j.dump(2) << "\n";
    } else {
        emit_charpoly(opt, chi);
        std::cout << "# dimension " << chi.dimension().str() << ", distinct "
                  << chi.distinct_monomials() << "\n";
    }
    return 0;
}

int cmd_tableaux(const Options& opt) {
    auto t = parse_type(opt.type);
    Spec s = spectral_param(opt);
    if (opt.list_tableaux) {
        std::vector<Tableau> tabs;
        if (t.family == Family::Dnp12 && t.n != 3 && opt.node == t.n && opt.k == 1)
            tabs = enumerate_spin(t);
        else if (t.family == Family::Dnp12 && t.n != 3 && opt.k == 1)
            tabs = enumerate_dnp12_columns(t, opt.node);
        else
            tabs = enumerate_tableaux(t, opt.node, opt.k);
        io::json arr = io::json::array();
        for (auto& tb : tabs) arr.push_back(io::to_json(t, tb));
        if (opt.format == "json") {
            std::cout << io::json{{"count", tabs.size()}, {"tableaux", arr}}.dump(2) << "\n";
        } else {
            for (auto& tb : arr) std::cout << tb.dump() << "\n";
            std::cout << "# " << tabs.size() << " tableaux\n";
        }
        return 0;
    }
    emit_charpoly(opt, tableaux_char(t, opt.node, opt.k, s));
    return 0;
}

int cmd_tsystem(const Options& opt) {
    auto t = parse_type(opt.type);
    QCharEngine eng(t, opt.budget);
    auto [ok, residual] = eng.check_tsystem(opt.node, opt.k, spectral_param(opt));
    if (ok) {
        std::cout << "T-system holds at " << t.cli_name() << " node " << opt.node << " k "
                  << opt.k << "\n";
        return 0;
    }
    std::cout << "T-system FAILS; residual:\n";
    emit_charpoly(opt, residual);
    return 1;
}

int cmd_qsystem(const Options& opt) {
    auto t = parse_type(opt.type);
    QCharEngine eng(t, opt.budget);
    bool ok = check_qsystem(eng, opt.node, opt.k, parse_side(opt.side));
    std::cout << (ok ? "Q-system holds\n" : "Q-system FAILS\n");
    return ok ? 0 : 1;
}

int cmd_branch(const Options& opt) {
    auto t = parse_type(opt.type);
    QCharEngine eng(t, opt.budget);
    Lattice side = parse_side(opt.side);
    CharPoly chi = eng.kr_char(opt.node, opt.k, spectral_param(opt));
    FiniteChar restricted = side == Lattice::Tilde ? beta(t, chi) : beta_bar(t, chi);
    RootData rd(side == Lattice::Tilde ? t.tilde : t.bar, side);
    auto dec = rd.branch(restricted);
    if (opt.format == "json") {
        io::json arr = io::json::array();
        for (auto& [w, m] : dec) arr.push_back({{"weight", io::to_json(w)}, {"mult", m.str()}});
        std::cout << io::json{{"decomposition", arr}}.dump(2) << "\n";
    } else {
        for (auto& [w, m] : dec) std::cout << w.str() << " x " << m.str() << "\n";
    }
    return 0;
}

int cmd_fermionic(const Options& opt) {
    auto t = parse_type(opt.type);
    QCharEngine eng(t, opt.budget);
    NuVector nu = parse_nu(opt.nu);
    auto conv = opt.binomial == "nonneg" ? BinomialConvention::NonNegative
                                         : BinomialConvention::GammaLimit;
    auto res = check_kr(eng, nu, parse_side(opt.side), conv);
    if (res.ok) {
        std::cout << "fermionic identity holds (" << res.rhs.terms().size() << " terms)\n";
        return 0;
    }
    std::cout << "fermionic identity FAILS; difference:\n" << res.diff.str() << "\n";
    return 1;
}

int cmd_screen(const Options& opt, bool from_stdin) {
    auto t = parse_type(opt.type);
    CharPoly chi;
    if (from_stdin) {
        io::json j;
        std::cin >> j;
        chi = io::charpoly_from_json(j);
    } else {
        QCharEngine eng(t, opt.budget);
        chi = compute_char(eng, opt, spectral_param(opt));
    }
    bool ok = screen(t, chi);
    std::cout << (ok ? "in the image of the q-character map\n" : "NOT in the image\n");
    return ok ? 0 : 1;
}

int cmd_dominants(const Options& opt) {
    auto t = parse_type(opt.type);
    QCharEngine eng(t, opt.budget);
    Spec s = spectral_param(opt);
    CharPoly p = eng.kr_char(opt.node, opt.k, s);
    if (opt.ladder) p *= eng.kr_char(opt.node, opt.k, s.shift_q(t.kr_step(opt.node)));
    for (auto& [m, c] : dominant_monomials(t, p))
        std::cout << m.str() << "  x " << c.str() << "\n";
    return 0;
}

int cmd_dims(const Options& opt) {
    auto t = parse_type(opt.type);
    QCharEngine eng(t, opt.budget);
    std::cout << "# " << t.cli_name() << " (finite type " << t.finite_type_name() << ")\n";
    for (int node : t.nodes) {
        std::cout << "node " << node << ":";
        for (int k = 1; k <= opt.kmax; ++k)
            std::cout << " " << eng.kr_char(node, k, Spec::base_a()).dimension().str();
        std::cout << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"twisted q-character engine for Kirillov-Reshetikhin modules"};
    app.require_subcommand(1);
    Options opt;
    if (const char* env = std::getenv("QCHAR_BUDGET")) opt.budget = std::strtoull(env, nullptr, 10);

    auto add_common = [&opt](CLI::App* cmd, bool needs_node = true) {
        cmd->add_option("--type", opt.type, "type name, e.g. A2-2, D4-3, Dn1-2:3")->required();
        if (needs_node) cmd->add_option("--node", opt.node, "node of I_sigma");
        cmd->add_option("--k", opt.k, "string length k");
        cmd->add_option("--shift", opt.shift, "q-power composed onto the spectral base, q^<p/q>");
        cmd->add_option("--phase", opt.phase, "phase composed onto the spectral base, <p/q>");
        cmd->add_option("--format", opt.format, "text|json|latex");
        cmd->add_option("--budget", opt.budget, "monomial budget");
    };

    auto* c_qchar = app.add_subcommand("qchar", "q-character of a KR module");
    add_common(c_qchar);
    c_qchar->add_option("--engine", opt.engine, "fold|tsys|fm|tableaux|all");

    auto* c_tab = app.add_subcommand("tableaux", "published tableau formula or tableau list");
    add_common(c_tab);
    c_tab->add_flag("--list", opt.list_tableaux, "emit the tableau list instead of the sum");

    auto* c_tsys = app.add_subcommand("tsystem", "verify the twisted T-system");
    add_common(c_tsys);

    auto* c_qsys = app.add_subcommand("qsystem", "verify the twisted Q-system");
    add_common(c_qsys);
    c_qsys->add_option("--side", opt.side, "tilde|bar");

    auto* c_branch = app.add_subcommand("branch", "branching to the finite subalgebra");
    add_common(c_branch);
    c_branch->add_option("--side", opt.side, "tilde|bar");

    auto* c_ferm = app.add_subcommand("fermionic", "verify the fermionic formula");
    add_common(c_ferm, false);
    c_ferm->add_option("--nu", opt.nu, "occupation numbers node:k:count[,...]")->required();
    c_ferm->add_option("--side", opt.side, "tilde|bar");
    c_ferm->add_option("--binomial", opt.binomial, "gamma|nonneg");

    auto* c_screen = app.add_subcommand("screen", "membership in the image of the q-character map");
    add_common(c_screen);
    c_screen->add_option("--engine", opt.engine, "fold|tsys|fm|tableaux");
    bool from_stdin = false;
    c_screen->add_flag("--stdin", from_stdin, "read a character as JSON from stdin");

    auto* c_dom = app.add_subcommand("dominants", "dominant monomials");
    add_common(c_dom);
    c_dom->add_flag("--ladder", opt.ladder, "use the product chi(W_k,a) chi(W_k,a r^2)");

    auto* c_dims = app.add_subcommand("dims", "dimension table sweep");
    add_common(c_dims, false);
    c_dims->add_option("--kmax", opt.kmax, "largest k in the sweep");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(c_qchar)) return cmd_qchar(opt);
        if (app.got_subcommand(c_tab)) return cmd_tableaux(opt);
        if (app.got_subcommand(c_tsys)) return cmd_tsystem(opt);
        if (app.got_subcommand(c_qsys)) return cmd_qsystem(opt);
        if (app.got_subcommand(c_branch)) return cmd_branch(opt);
        if (app.got_subcommand(c_ferm)) return cmd_fermionic(opt);
        if (app.got_subcommand(c_screen)) return cmd_screen(opt, from_stdin);
        if (app.got_subcommand(c_dom)) return cmd_dominants(opt);
        if (app.got_subcommand(c_dims)) return cmd_dims(opt);
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget error: " << e.what() << "\n";
        return 3;
    } catch (const IllegalRank& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const UnknownNode& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const UnsupportedNode& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "engine error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
