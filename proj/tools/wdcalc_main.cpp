#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "wdcalc/corpus.hpp"
#include "wdcalc/dsl.hpp"
#include "wdcalc/jsonio.hpp"
#include "wdcalc/lfactors.hpp"
#include "wdcalc/sweep.hpp"
#include "wdcalc/thetaggp.hpp"

using namespace wdcalc;

namespace {

GroupKind parse_kind(const PAdicField& F, const std::string& group, const WDRep& A,
                     std::optional<long long> disc) {
    if (group == "sp") return kind_sp(F);
    if (group == "so_odd") return kind_so_odd(F);
    if (group == "mp") return kind_mp(F);
    if (group == "so_even") {
        SquareClass d = disc ? square_class(F, *disc) : rep_det(A).d;
        return kind_so_even(d);
    }
    throw std::invalid_argument("unknown group kind: " + group);
}

std::vector<int> parse_eta(const std::string& text) {
    std::vector<int> vals;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string piece = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
        if (!piece.empty()) vals.push_back(std::stoi(piece));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return vals;
}

EnhancedParam enhance(const GroupKind& kind, const WDRep& A, const std::string& eta_text,
                      long long label) {
    ComponentGroup grp = component_group(A, kind);
    std::vector<int> vals = eta_text.empty()
                                ? std::vector<int>(eta_domain(grp).dim(), +1)
                                : parse_eta(eta_text);
    return make_enhanced(kind, A, vals, square_class(A.field, label));
}

Json extensions_json(const PartialCharacter& eta) {
    Json out;
    Json gens = Json::array();
    for (F2Vec v : eta_domain(eta.ambient).basis()) gens.push_back(element_label(v));
    out["ambient_generators"] = gens;
    out["base"] = character_json(eta.base);
    out["count"] = eta.extensions.size();
    Json exts = Json::array();
    for (const SignCharacter& ext : eta.extensions) exts.push_back(ext.vals);
    out["extensions"] = exts;
    return out;
}

void emit(const Json& doc) { std::cout << doc.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Gan-Gross-Prasad and theta calculations over Q_p"};
    app.require_subcommand(1);

    int p = 0;
    bool as_json = false;
    std::uint64_t seed = 0;
    app.add_option("--p", p, "prime of the base field Q_p");
    app.add_flag("--json", as_json, "JSON output for scalar commands");
    app.add_option("--seed", seed, "seed for randomized commands");

    long long ha = 0, hb = 0;
    auto* hilbert = app.add_subcommand("hilbert", "Hilbert symbol (a, b)");
    hilbert->fallthrough();
    hilbert->add_option("a", ha, "first entry, nonzero")->required();
    hilbert->add_option("b", hb, "second entry, nonzero")->required();

    long long sn = 0;
    auto* sqclass = app.add_subcommand("sqclass", "canonical square-class label");
    sqclass->fallthrough();
    sqclass->add_option("n", sn, "nonzero integer")->required();

    std::string rep_text, group, eta_text;
    std::optional<long long> disc;
    long long whit_c = 0;
    auto* epsilon = app.add_subcommand("epsilon", "central epsilon factor of a rep");
    epsilon->fallthrough();
    epsilon->add_option("--rep", rep_text, "rep expression")->required();

    auto* generic = app.add_subcommand("generic", "adjoint L-factor regularity at s = 1");
    generic->fallthrough();
    generic->add_option("--rep", rep_text, "rep expression")->required();
    generic->add_option("--group", group, "sp | so_odd | so_even | mp")->required();
    generic->add_option("--disc", disc, "so_even discriminant class");

    auto* packet = app.add_subcommand("packet", "component group and packet character");
    packet->fallthrough();
    packet->add_option("--rep", rep_text, "rep expression")->required();
    packet->add_option("--group", group, "sp | so_odd | so_even | mp")->required();
    packet->add_option("--disc", disc, "so_even discriminant class");
    packet->add_option("--eta", eta_text, "comma-separated +-1 on the group generators");
    packet->add_option("--c", whit_c, "change the Whittaker or psi datum to this class");

    std::string repM_text, repN_text;
    auto* recipe = app.add_subcommand("recipe", "distinction characters of a pair");
    recipe->require_subcommand(1);
    recipe->fallthrough();
    auto* bessel = recipe->add_subcommand("bessel", "even symplectic x even orthogonal");
    auto* fj = recipe->add_subcommand("fj", "even symplectic x odd orthogonal");
    for (CLI::App* fam : {bessel, fj}) {
        fam->fallthrough();
        fam->add_option("--repM", repM_text, "symplectic side")->required();
        fam->add_option("--repN", repN_text, "orthogonal side")->required();
    }

    long long theta_c = 0;
    bool dual_side = false;
    std::optional<std::size_t> pick;
    auto* theta = app.add_subcommand("theta", "parameter-level lifts");
    theta->require_subcommand(1);
    theta->fallthrough();
    auto* t_p1 = theta->add_subcommand("p1", "Sp(2n) to SO(2n+2) via V");
    auto* t_p2 = theta->add_subcommand("p2", "SO(2n) to Sp(2n)");
    auto* t_mp = theta->add_subcommand("mp", "Mp(2n) to SO(2n+1)");
    for (CLI::App* t : {t_p1, t_p2, t_mp}) {
        t->fallthrough();
        t->add_option("--rep", rep_text, "rep expression")->required();
        t->add_option("--eta", eta_text, "comma-separated +-1 on the group generators");
    }
    t_p1->add_option("--disc", disc, "discriminant class of V")->required();
    t_p1->add_option("--pick", pick, "select one extension by index");
    t_p2->add_option("--pick", pick, "select one extension by index");
    t_mp->add_option("--c", theta_c, "psi class of the lift")->required();
    t_mp->add_flag("--dual", dual_side, "lift the contragredient convention");

    int count = 50, max_dim = 8;
    auto* verify = app.add_subcommand("verify", "replay a consistency identity");
    verify->require_subcommand(1);
    verify->fallthrough();
    auto* seesaw = verify->add_subcommand("seesaw", "Bessel against Fourier-Jacobi");
    seesaw->fallthrough();
    seesaw->add_option("--count", count, "pairs per prime");
    seesaw->add_option("--max-dim", max_dim, "dimension cap");

    std::vector<int> primes;
    std::vector<std::string> checks;
    std::string out_path, sweep_group = "sp";
    auto* sweep = app.add_subcommand("sweep", "randomized property sweep, JSONL report");
    sweep->fallthrough();
    sweep->add_option("--primes", primes, "primes to sweep (default: --p)");
    sweep->add_option("--check", checks, "check names (default: all)");
    sweep->add_option("--count", count, "items per prime and check");
    sweep->add_option("--max-dim", max_dim, "dimension cap");
    sweep->add_option("--group", sweep_group, "corpus kind for the classify check");
    sweep->add_option("--out", out_path, "report path (default: stdout)");

    try {
        app.parse(argc, argv);

        if (*sweep) {
            SweepConfig cfg;
            cfg.primes = primes.empty() ? std::vector<int>{p} : primes;
            if (cfg.primes == std::vector<int>{0})
                throw std::invalid_argument("sweep: give --primes or --p");
            cfg.group = sweep_group;
            cfg.max_dim = max_dim;
            cfg.count = count;
            cfg.seed = seed;
            cfg.checks = checks;
            if (!out_path.empty()) {
                std::ofstream file(out_path);
                if (!file) throw std::runtime_error("sweep: cannot open " + out_path);
                return run_sweep(cfg, file);
            }
            return run_sweep(cfg, std::cout);
        }

        PAdicField F = padic_field(p);

        if (*hilbert) {
            int v = hilbert_symbol(square_class(F, ha), square_class(F, hb));
            if (as_json)
                emit({{"p", p}, {"a", ha}, {"b", hb}, {"value", v}});
            else
                std::cout << v << "\n";
            return 0;
        }
        if (*sqclass) {
            long long label = class_label(square_class(F, sn));
            if (as_json)
                emit({{"p", p}, {"n", sn}, {"class", label}});
            else
                std::cout << label << "\n";
            return 0;
        }
        if (*epsilon) {
            WDRep A = parse_rep(F, rep_text);
            std::string value = exact_to_string(epsilon_half(A));
            if (as_json)
                emit({{"p", p}, {"rep", print_rep(A)}, {"epsilon", value}});
            else
                std::cout << value << "\n";
            return 0;
        }
        if (*generic) {
            WDRep A = parse_rep(F, rep_text);
            GroupKind kind = parse_kind(F, group, A, disc);
            bool ok = is_generic(A, kind);
            Json pole;
            if (!ok) {
                bool sym = kind.family == Family::SOodd || kind.family == Family::Mp;
                WDRep ad = sym ? sym_square(A) : ext_square(A);
                for (const auto& [s0, mult] : pole_locus(ad).poles)
                    if (s0 == Rat(1)) pole = {{"s", "1"}, {"mult", mult}};
            }
            if (as_json)
                emit({{"p", p}, {"rep", print_rep(A)}, {"generic", ok}, {"pole", pole}});
            else if (ok)
                std::cout << "true\n";
            else
                std::cout << "false (adjoint L-factor pole at s = 1, multiplicity "
                          << pole["mult"].get<int>() << ")\n";
            return 0;
        }
        if (*packet) {
            WDRep A = parse_rep(F, rep_text);
            GroupKind kind = parse_kind(F, group, A, disc);
            EnhancedParam e = enhance(kind, A, eta_text, 1);
            if (whit_c != 0) {
                SquareClass c = square_class(F, whit_c);
                if (kind.family == Family::Mp)
                    e = mp_change_psi(e, c);
                else
                    e = whittaker_change(e, c);
            }
            Json doc = packet_json(e);
            doc["p"] = p;
            emit(doc);
            return 0;
        }
        if (*bessel || *fj) {
            WDRep M = parse_rep(F, repM_text);
            WDRep N = parse_rep(F, repN_text);
            RecipePair r = *bessel ? bessel_recipe(M, N) : fj_recipe(M, N);
            emit({{"family", *bessel ? "bessel" : "fj"},
                  {"p", p},
                  {"repM", print_rep(M)},
                  {"repN", print_rep(N)},
                  {"chi_on_M", character_json(r.chi_on_M)},
                  {"chi_on_N", character_json(r.chi_on_N)}});
            return 0;
        }
        if (*t_p1) {
            WDRep A = parse_rep(F, rep_text);
            EnhancedParam e = enhance(kind_sp(F), A, eta_text, 1);
            PrasadLift lift = prasad_p1(e, orth_space(rep_dim(A) + 1, square_class(F, *disc)), pick);
            emit({{"map", "p1"},
                  {"p", p},
                  {"rep", print_rep(A)},
                  {"disc", class_label(square_class(F, *disc))},
                  {"group", "so_even"},
                  {"lift", print_rep(lift.phi)},
                  {"eta", extensions_json(lift.eta)}});
            return 0;
        }
        if (*t_p2) {
            WDRep A = parse_rep(F, rep_text);
            GroupKind kind = kind_so_even(rep_det(A).d);
            EnhancedParam e = enhance(kind, A, eta_text, 1);
            PrasadLift lift = prasad_p2(e, pick);
            emit({{"map", "p2"},
                  {"p", p},
                  {"rep", print_rep(A)},
                  {"group", "sp"},
                  {"lift", print_rep(lift.phi)},
                  {"eta", extensions_json(lift.eta)}});
            return 0;
        }
        if (*t_mp) {
            WDRep A = parse_rep(F, rep_text);
            EnhancedParam e = enhance(kind_mp(F), A, eta_text, 1);
            EnhancedParam lift = mp_theta_odd(e, square_class(F, theta_c), dual_side);
            emit({{"map", "mp"},
                  {"p", p},
                  {"rep", print_rep(A)},
                  {"c", class_label(square_class(F, theta_c))},
                  {"dual", dual_side},
                  {"group", "so_odd"},
                  {"lift", print_rep(lift.phi)},
                  {"eta", lift.eta.vals}});
            return 0;
        }
        if (*seesaw) {
            SweepConfig cfg;
            cfg.primes = {p};
            cfg.max_dim = max_dim;
            cfg.count = count;
            cfg.seed = seed;
            cfg.checks = {"seesaw"};
            return run_sweep(cfg, std::cout);
        }
        return 2;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
