#include "wdcalc/sweep.hpp"

#include <functional>
#include <random>
#include <stdexcept>

#include "wdcalc/corpus.hpp"
#include "wdcalc/dsl.hpp"
#include "wdcalc/jsonio.hpp"
#include "wdcalc/lfactors.hpp"
#include "wdcalc/thetaggp.hpp"

namespace wdcalc {

namespace {

Family family_of(const std::string& name) {
    if (name == "sp") return Family::Sp;
    if (name == "so_odd") return Family::SOodd;
    if (name == "so_even") return Family::SOeven;
    if (name == "mp") return Family::Mp;
    throw std::invalid_argument("run_sweep: unknown group kind: " + name);
}

GroupKind kind_for(const WDRep& A, Family family) {
    switch (family) {
        case Family::Sp: return kind_sp(A.field);
        case Family::SOodd: return kind_so_odd(A.field);
        case Family::SOeven: return kind_so_even(rep_det(A).d);
        case Family::Mp: return kind_mp(A.field);
    }
    throw std::logic_error("kind_for: bad family");
}

std::vector<int> random_signs(std::mt19937_64& rng, int dim) {
    std::vector<int> vals(dim);
    for (int& v : vals) v = (rng() % 2) ? -1 : +1;
    return vals;
}

bool contains_trivial(const WDRep& A) {
    for (const auto& [c, mult] : A.parts)
        if (c == quad_irred(square_class_one(A.field), Rat(0), 1)) return true;
    return false;
}

// Each check draws its own inputs, records them as DSL strings, and fills
// a witness object when it fails.
using Check = std::function<bool(std::mt19937_64&, const PAdicField&, const SweepConfig&,
                                 Json& inputs, Json& witness)>;

bool check_classify(std::mt19937_64& rng, const PAdicField& F, const SweepConfig& cfg,
                    Json& inputs, Json& witness) {
    Family fam = family_of(cfg.group);
    WDRep A = random_parameter(rng, F, fam, cfg.max_dim);
    inputs["rep"] = print_rep(A);
    inputs["group"] = cfg.group;
    ClassifyResult res = classify_parameter(A, kind_for(A, fam));
    if (res.ok && is_tempered(A)) return true;
    witness["classified"] = res.ok;
    return false;
}

bool check_epsilon(std::mt19937_64& rng, const PAdicField& F, const SweepConfig& cfg,
                   Json& inputs, Json& witness) {
    WDRep A = random_parameter(rng, F, Family::Mp, cfg.max_dim);
    inputs["rep"] = print_rep(A);
    ExactNumber eps = epsilon_half(A);
    if (!exact_is_sign(eps)) {
        witness["epsilon"] = exact_to_string(eps);
        return false;
    }
    for (const SquareClass& c : all_square_classes(F))
        if (epsilon_half(A, c) != eps) {
            witness["c"] = class_label(c);
            witness["epsilon"] = exact_to_string(eps);
            witness["epsilon_c"] = exact_to_string(epsilon_half(A, c));
            return false;
        }
    return true;
}

bool check_cocycle(std::mt19937_64& rng, const PAdicField& F, const SweepConfig& cfg,
                   Json& inputs, Json& witness) {
    WDRep phi = random_parameter(rng, F, Family::Mp, cfg.max_dim);
    ComponentGroup grp = component_group(phi, kind_mp(F));
    std::vector<int> vals = random_signs(rng, grp.full.dim());
    EnhancedParam e = make_enhanced(kind_mp(F), phi, vals, square_class_one(F));
    inputs["rep"] = print_rep(phi);
    inputs["eta"] = vals;
    for (const SquareClass& c1 : all_square_classes(F))
        for (const SquareClass& c2 : all_square_classes(F)) {
            EnhancedParam two = mp_change_psi(mp_change_psi(e, c1), c2);
            EnhancedParam once = mp_change_psi(e, class_mul(c1, c2));
            if (two.phi != once.phi || !char_equal(two.eta, once.eta) ||
                two.label != once.label) {
                witness["c1"] = class_label(c1);
                witness["c2"] = class_label(c2);
                return false;
            }
        }
    return true;
}

bool check_recipe(std::mt19937_64& rng, const PAdicField& F, const SweepConfig& cfg,
                  Json& inputs, Json& witness) {
    WDRep M = random_parameter(rng, F, Family::SOodd, cfg.max_dim);
    WDRep Ne = random_parameter(rng, F, Family::SOeven, cfg.max_dim);
    WDRep No = random_parameter(rng, F, Family::Sp, cfg.max_dim);
    inputs["repM"] = print_rep(M);
    inputs["repN_bessel"] = print_rep(Ne);
    inputs["repN_fj"] = print_rep(No);
    try {
        bessel_recipe(M, Ne);
        fj_recipe(M, No);
    } catch (const std::logic_error& err) {
        witness["error"] = err.what();
        return false;
    }
    return true;
}

bool check_adjoint(std::mt19937_64& rng, const PAdicField& F, const SweepConfig& cfg,
                   Json& inputs, Json& witness) {
    WDRep phi = random_parameter(rng, F, Family::Sp, cfg.max_dim);
    inputs["rep"] = print_rep(phi);
    for (const SquareClass& d : all_square_classes(F))
        if (!verify_adjoint_factorization(phi, d)) {
            witness["chi_V"] = class_label(d);
            return false;
        }
    return true;
}

bool check_prasad(std::mt19937_64& rng, const PAdicField& F, const SweepConfig& cfg,
                  Json& inputs, Json& witness) {
    WDRep phi = random_parameter(rng, F, Family::Sp, cfg.max_dim);
    ComponentGroup g1 = component_group(phi, kind_sp(F));
    EnhancedParam e1 = make_enhanced(kind_sp(F), phi, random_signs(rng, g1.plus.dim()),
                                     square_class_one(F));
    inputs["rep_p1"] = print_rep(phi);
    for (const SquareClass& d : all_square_classes(F)) {
        PrasadLift lift = prasad_p1(e1, orth_space(rep_dim(phi) + 1, d));
        bool has = contains_trivial(tensor(phi, wd_single(F, quad_irred(d, Rat(0), 1))));
        if ((lift.eta.extensions.size() == 1) != has) {
            witness["disc"] = class_label(d);
            witness["count"] = lift.eta.extensions.size();
            return false;
        }
    }
    WDRep phi2 = random_parameter(rng, F, Family::SOeven, cfg.max_dim);
    GroupKind kind2 = kind_so_even(rep_det(phi2).d);
    ComponentGroup g2 = component_group(phi2, kind2);
    EnhancedParam e2 =
        make_enhanced(kind2, phi2, random_signs(rng, g2.plus.dim()), square_class_one(F));
    inputs["rep_p2"] = print_rep(phi2);
    PrasadLift lift2 = prasad_p2(e2);
    bool two = is_epsilon_invariant(phi2) && !contains_trivial(phi2);
    if (lift2.eta.extensions.size() != (two ? 2u : 1u)) {
        witness["count"] = lift2.eta.extensions.size();
        return false;
    }
    return true;
}

bool check_seesaw(std::mt19937_64& rng, const PAdicField& F, const SweepConfig& cfg,
                  Json& inputs, Json& witness) {
    int cap = cfg.max_dim < 8 ? cfg.max_dim : 8;
    WDRep M = random_parameter(rng, F, Family::Mp, cap);
    WDRep N = random_parameter(rng, F, Family::Sp, cap > 2 ? cap - 1 : cap);
    auto cls = all_square_classes(F);
    SquareClass d = cls[rng() % cls.size()];
    inputs["repM"] = print_rep(M);
    inputs["repN"] = print_rep(N);
    inputs["d"] = class_label(d);
    SeesawReport report = verify_fj_seesaw(M, N, d);
    if (report.verdict) return true;
    auto [a, b] = *report.witness;
    witness["a"] = element_label(a);
    witness["b"] = element_label(b);
    return false;
}

const std::vector<std::pair<std::string, Check>>& registry() {
    static const std::vector<std::pair<std::string, Check>> checks = {
        {"classify", check_classify}, {"epsilon", check_epsilon},
        {"cocycle", check_cocycle},   {"recipe", check_recipe},
        {"adjoint", check_adjoint},   {"prasad", check_prasad},
        {"seesaw", check_seesaw},
    };
    return checks;
}

}  // namespace

const std::vector<std::string>& sweep_check_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : registry()) out.push_back(name);
        return out;
    }();
    return names;
}

int run_sweep(const SweepConfig& cfg, std::ostream& out) {
    family_of(cfg.group);  // validate early
    std::vector<std::pair<std::string, Check>> selected;
    const auto& names = cfg.checks.empty() ? sweep_check_names() : cfg.checks;
    for (const std::string& name : names) {
        bool found = false;
        for (const auto& [reg, fn] : registry())
            if (reg == name) {
                selected.emplace_back(name, fn);
                found = true;
            }
        if (!found) throw std::invalid_argument("run_sweep: unknown check: " + name);
    }
    long long total = 0, failed = 0;
    for (int p : cfg.primes) {
        PAdicField F = padic_field(p);
        for (std::size_t ci = 0; ci < selected.size(); ++ci) {
            std::mt19937_64 rng(cfg.seed * 0x9E3779B97F4A7C15ULL +
                                static_cast<std::uint64_t>(p) * 1000003ULL + ci * 7919ULL);
            for (int item = 0; item < cfg.count; ++item) {
                Json inputs = Json::object(), witness = Json::object();
                bool ok = selected[ci].second(rng, F, cfg, inputs, witness);
                Json line = {{"check", selected[ci].first},
                             {"p", p},
                             {"item", item},
                             {"inputs", inputs},
                             {"verdict", ok}};
                line["witness"] = ok ? Json() : witness;
                out << line.dump() << "\n";
                ++total;
                if (!ok) ++failed;
            }
        }
    }
    Json summary = {{"summary",
                     {{"total", total}, {"failed", failed}, {"pass", failed == 0}}}};
    out << summary.dump() << "\n";
    return failed == 0 ? 0 : 1;
}

}  // namespace wdcalc
