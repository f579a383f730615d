#include "wdcalc/thetaggp.hpp"

#include <stdexcept>
#include <string>

namespace wdcalc {

namespace {

WDRep char_rep(const SquareClass& d) {
    return wd_single(d.field, quad_irred(d, Rat(0), 1));
}

WDRep trivial_rep(const PAdicField& F) { return char_rep(square_class_one(F)); }

bool has_opaque(const WDRep& A) {
    for (const auto& part : A.parts)
        if (part.first.chi.opaque) return true;
    return false;
}

int pow_sign(int s, int k) { return k % 2 == 0 ? 1 : s; }

// Basis values from the raw rule, cross-checked against the multiplicative
// extension on every element of the domain.
template <typename Fn>
SignCharacter fit_character(const F2Span& domain, Fn&& raw, const char* who) {
    std::vector<int> vals;
    vals.reserve(domain.basis().size());
    for (F2Vec v : domain.basis()) vals.push_back(raw(v));
    SignCharacter chi = sign_character(domain, std::move(vals));
    for (F2Vec a : domain.elements())
        if (char_eval(chi, a) != raw(a))
            throw std::logic_error(std::string(who) +
                                   ": recipe values fail multiplicativity");
    return chi;
}

// Basis index map of the constituent-wise twist C -> C ox chi_t between two
// component groups (injective; the target may have extra basis elements).
std::vector<std::size_t> twist_map(const ComponentGroup& from,
                                   const ComponentGroup& to,
                                   const SquareClass& twist) {
    std::vector<std::size_t> map;
    map.reserve(from.basis.size());
    for (const auto& [c, mult] : from.basis) {
        WDIrred image = quad_irred(class_mul(c.chi.d, twist), c.x, c.n);
        std::size_t j = 0;
        while (j < to.basis.size() && !(to.basis[j].first == image)) ++j;
        if (j == to.basis.size())
            throw std::logic_error("thetaggp: constituent missing from the twisted group");
        map.push_back(j);
    }
    return map;
}

F2Vec transport(F2Vec a, const std::vector<std::size_t>& map) {
    F2Vec out = 0;
    for (std::size_t i = 0; i < map.size(); ++i)
        if (a & (F2Vec(1) << i)) out |= F2Vec(1) << map[i];
    return out;
}

// Image of eta under the twist embedding, in ambient coordinates.
SignCharacter transport_base(const ComponentGroup& from, const SignCharacter& eta,
                             const ComponentGroup& to, const SquareClass& twist) {
    std::vector<std::size_t> map = twist_map(from, to, twist);
    std::vector<F2Vec> image;
    image.reserve(eta.domain.basis().size());
    for (F2Vec v : eta.domain.basis()) {
        F2Vec w = transport(v, map);
        if (!eta_domain(to).contains(w))
            throw std::logic_error("thetaggp: transported character leaves the target domain");
        image.push_back(w);
    }
    return sign_character(F2Span::from_basis(std::move(image)), eta.vals);
}

// All characters of the ambient eta domain restricting to base.
std::vector<SignCharacter> enumerate_extensions(const SignCharacter& base,
                                                const ComponentGroup& ambient) {
    const F2Span& dom = eta_domain(ambient);
    std::vector<SignCharacter> out;
    for (F2Vec mask = 0; mask < (F2Vec(1) << dom.dim()); ++mask) {
        std::vector<int> vals;
        vals.reserve(dom.basis().size());
        for (int i = 0; i < dom.dim(); ++i)
            vals.push_back((mask >> i) & 1 ? -1 : +1);
        SignCharacter cand = sign_character(dom, std::move(vals));
        bool agrees = true;
        for (F2Vec v : base.domain.basis())
            if (char_eval(cand, v) != char_eval(base, v)) {
                agrees = false;
                break;
            }
        if (agrees) out.push_back(std::move(cand));
    }
    return out;
}

void apply_pick(std::vector<SignCharacter>& exts, std::optional<std::size_t> pick,
                const char* who) {
    if (!pick) return;
    if (*pick >= exts.size())
        throw std::out_of_range(std::string(who) + ": extension index out of range");
    exts = {exts[*pick]};
}

}  // namespace

int bessel_m_value(const ComponentGroup& gm, const WDRep& N, F2Vec a) {
    if (rep_dim(N) % 2 != 0)
        throw std::invalid_argument("bessel_m_value: N must be even-dimensional");
    SquareClass m1 = square_class(gm.phi.field, -1);
    WDRep Ma = minus_eigenspace(gm, a);
    return root_number(tensor(Ma, N)) *
           pow_sign(quad_char_eval(rep_det(Ma).d, m1), rep_dim(N) / 2) *
           pow_sign(quad_char_eval(rep_det(N).d, m1), rep_dim(Ma) / 2);
}

int bessel_n_value(const WDRep& M, const ComponentGroup& gn, F2Vec b) {
    if (rep_dim(M) % 2 != 0)
        throw std::invalid_argument("bessel_n_value: M must be even-dimensional");
    WDRep Nb = minus_eigenspace(gn, b);
    if (rep_dim(Nb) % 2 != 0)
        throw std::invalid_argument("bessel_n_value: odd-dimensional eigenspace");
    SquareClass m1 = square_class(M.field, -1);
    return root_number(tensor(M, Nb)) *
           pow_sign(quad_char_eval(rep_det(M).d, m1), rep_dim(Nb) / 2) *
           pow_sign(quad_char_eval(rep_det(Nb).d, m1), rep_dim(M) / 2);
}

int mp_shift_value(const ComponentGroup& gm, const SquareClass& c, F2Vec a) {
    WDRep Ma = minus_eigenspace(gm, a);
    return root_number(Ma) * root_number(tensor(Ma, char_rep(c))) *
           pow_sign(quad_char_eval(c, square_class(gm.phi.field, -1)),
                    rep_dim(Ma) / 2);
}

RecipePair bessel_recipe(const WDRep& M, const WDRep& N) {
    if (M.field != N.field)
        throw std::invalid_argument("bessel_recipe: mixed fields");
    if (has_opaque(M) || has_opaque(N))
        throw std::invalid_argument("bessel_recipe: opaque constituents are not supported");
    PAdicField F = M.field;
    if (!classify_parameter(M, kind_so_odd(F)).ok)
        throw std::invalid_argument("bessel_recipe: M must be even-dimensional symplectic");
    DetChar dn = rep_det(N);
    if (dn.x != Rat(0) || !classify_parameter(N, kind_so_even(dn.d)).ok)
        throw std::invalid_argument("bessel_recipe: N must be even-dimensional orthogonal");
    ComponentGroup gm = component_group(M, kind_so_odd(F));
    ComponentGroup gn = component_group(N, kind_so_even(dn.d));
    return {fit_character(gm.full, [&](F2Vec a) { return bessel_m_value(gm, N, a); },
                          "bessel_recipe"),
            fit_character(gn.plus, [&](F2Vec b) { return bessel_n_value(M, gn, b); },
                          "bessel_recipe")};
}

RecipePair fj_recipe(const WDRep& M, const WDRep& N) {
    if (M.field != N.field)
        throw std::invalid_argument("fj_recipe: mixed fields");
    if (has_opaque(M) || has_opaque(N))
        throw std::invalid_argument("fj_recipe: opaque constituents are not supported");
    PAdicField F = M.field;
    if (!classify_parameter(M, kind_mp(F)).ok)
        throw std::invalid_argument("fj_recipe: M must be even-dimensional symplectic");
    if (!classify_parameter(N, kind_sp(F)).ok)
        throw std::invalid_argument(
            "fj_recipe: N must be odd orthogonal with trivial determinant");
    WDRep N1 = direct_sum(N, trivial_rep(F));
    ComponentGroup gm = component_group(M, kind_mp(F));
    ComponentGroup gn = component_group(N, kind_sp(F));
    // on the embedded subgroup the N1- and N-eigenspaces coincide
    return {fit_character(gm.full, [&](F2Vec a) { return bessel_m_value(gm, N1, a); },
                          "fj_recipe"),
            fit_character(gn.plus, [&](F2Vec b) { return bessel_n_value(M, gn, b); },
                          "fj_recipe")};
}

EnhancedParam mp_change_psi(const EnhancedParam& e, const SquareClass& c) {
    if (e.kind.family != Family::Mp)
        throw std::invalid_argument("mp_change_psi: metaplectic parameters only");
    if (c.field != e.phi.field)
        throw std::invalid_argument("mp_change_psi: mixed fields");
    PAdicField F = e.phi.field;
    WDRep phi2 = tensor(e.phi, char_rep(c));
    ComponentGroup grp2 = component_group(phi2, kind_mp(F));
    std::vector<std::size_t> map = twist_map(e.grp, grp2, c);

    auto shifted = [&](F2Vec a) {
        return char_eval(e.eta, a) * mp_shift_value(e.grp, c, a);
    };
    std::vector<int> vals(grp2.basis.size(), 0);
    for (std::size_t i = 0; i < map.size(); ++i) vals[map[i]] = shifted(F2Vec(1) << i);
    EnhancedParam out = make_enhanced(kind_mp(F), phi2, vals,
                                      class_mul(e.label, c));
    for (F2Vec a : e.grp.full.elements())
        if (char_eval(out.eta, transport(a, map)) != shifted(a))
            throw std::logic_error("mp_change_psi: shift values fail multiplicativity");
    return out;
}

EnhancedParam mp_theta_odd(const EnhancedParam& e, const SquareClass& c,
                           bool dual_side) {
    PAdicField F = e.phi.field;
    SquareClass shift = dual_side ? class_mul(c, square_class(F, -1)) : c;
    EnhancedParam t = mp_change_psi(e, shift);
    return make_enhanced(kind_so_odd(F), t.phi, t.eta.vals, square_class_one(F));
}

PrasadLift prasad_p1(const EnhancedParam& e, const OrthSpaceLabel& V,
                     std::optional<std::size_t> pick) {
    if (e.kind.family != Family::Sp)
        throw std::invalid_argument("prasad_p1: symplectic-group parameters only");
    if (V.dim != rep_dim(e.phi) + 1)
        throw std::invalid_argument("prasad_p1: orthogonal space dimension mismatch");
    PAdicField F = e.phi.field;
    WDRep phi2 = direct_sum(tensor(e.phi, char_rep(V.disc)), trivial_rep(F));
    ComponentGroup ambient = component_group(phi2, kind_so_even(V.disc));
    SignCharacter base = transport_base(e.grp, e.eta, ambient, V.disc);
    std::vector<SignCharacter> exts = enumerate_extensions(base, ambient);
    apply_pick(exts, pick, "prasad_p1");
    return {phi2, {std::move(base), std::move(ambient), std::move(exts)}};
}

PrasadLift prasad_p2(const EnhancedParam& e, std::optional<std::size_t> pick) {
    if (e.kind.family != Family::SOeven)
        throw std::invalid_argument("prasad_p2: even orthogonal parameters only");
    PAdicField F = e.phi.field;
    SquareClass chi_v = e.kind.disc;
    WDRep phi2 = direct_sum(tensor(e.phi, char_rep(chi_v)), char_rep(chi_v));
    ComponentGroup ambient = component_group(phi2, kind_sp(F));
    SignCharacter base = transport_base(e.grp, e.eta, ambient, chi_v);
    std::vector<SignCharacter> exts = enumerate_extensions(base, ambient);
    apply_pick(exts, pick, "prasad_p2");
    return {phi2, {std::move(base), std::move(ambient), std::move(exts)}};
}

bool verify_adjoint_factorization(const WDRep& phi, const SquareClass& chi_v) {
    if (chi_v.field != phi.field)
        throw std::invalid_argument("verify_adjoint_factorization: mixed fields");
    if (!classify_parameter(phi, kind_sp(phi.field)).ok)
        throw std::invalid_argument(
            "verify_adjoint_factorization: phi must be odd orthogonal with trivial determinant");
    WDRep tw = tensor(phi, char_rep(chi_v));
    return ext_square(direct_sum(tw, trivial_rep(phi.field))) ==
           direct_sum(ext_square(phi), tw);
}

SeesawReport verify_fj_seesaw(const WDRep& phi_m, const WDRep& phi_n,
                              const SquareClass& d, bool allow_nontempered) {
    if (phi_m.field != phi_n.field || d.field != phi_m.field)
        throw std::invalid_argument("verify_fj_seesaw: mixed fields");
    if (has_opaque(phi_m) || has_opaque(phi_n))
        throw std::invalid_argument("verify_fj_seesaw: opaque constituents are not supported");
    PAdicField F = phi_m.field;
    if (!classify_parameter(phi_m, kind_mp(F)).ok)
        throw std::invalid_argument("verify_fj_seesaw: M must be even-dimensional symplectic");
    if (!classify_parameter(phi_n, kind_sp(F)).ok)
        throw std::invalid_argument(
            "verify_fj_seesaw: N must be odd orthogonal with trivial determinant");
    if (!allow_nontempered && !(is_tempered(phi_m) && is_tempered(phi_n)))
        throw std::invalid_argument(
            "verify_fj_seesaw: non-tempered input (set allow_nontempered)");
    if (!is_generic(phi_m, kind_mp(F)))
        throw std::domain_error(
            "verify_fj_seesaw: M is not generic (adjoint L-factor has a pole at s = 1)");
    if (!is_generic(phi_n, kind_sp(F)))
        throw std::domain_error(
            "verify_fj_seesaw: N is not generic (adjoint L-factor has a pole at s = 1)");

    WDRep m_tau = tensor(phi_m, char_rep(d));
    WDRep n_sigma = direct_sum(tensor(phi_n, char_rep(d)), trivial_rep(F));
    if (!is_generic(m_tau, kind_so_odd(F)))
        throw std::domain_error(
            "verify_fj_seesaw: the chi_d twist of M is not generic "
            "(adjoint L-factor has a pole at s = 1)");
    if (!is_generic(n_sigma, kind_so_even(d)))
        throw std::domain_error(
            "verify_fj_seesaw: the enlarged chi_d twist of N is not generic "
            "(adjoint L-factor has a pole at s = 1)");

    RecipePair direct = fj_recipe(phi_m, phi_n);
    RecipePair chain = bessel_recipe(m_tau, n_sigma);
    ComponentGroup gm = component_group(phi_m, kind_mp(F));
    ComponentGroup gn = component_group(phi_n, kind_sp(F));
    ComponentGroup gmt = component_group(m_tau, kind_so_odd(F));
    ComponentGroup gns = component_group(n_sigma, kind_so_even(d));
    std::vector<std::size_t> map_m = twist_map(gm, gmt, d);
    std::vector<std::size_t> map_n = twist_map(gn, gns, d);
    SquareClass m1 = square_class(F, -1);

    SeesawReport report;
    for (F2Vec a : gm.full.elements()) {
        int shift_a = mp_shift_value(gm, d, a);
        for (F2Vec b : gn.plus.elements()) {
            int lhs = char_eval(direct.chi_on_M, a) * char_eval(direct.chi_on_N, b);
            F2Vec at = transport(a, map_m);
            F2Vec bt = transport(b, map_n);
            int rhs = char_eval(chain.chi_on_M, at) * char_eval(chain.chi_on_N, bt) *
                      shift_a *
                      quad_char_eval(rep_det(minus_eigenspace(gns, bt)).d, m1) *
                      quad_char_eval(rep_det(minus_eigenspace(gn, b)).d, m1);
            report.table.emplace_back(a, b, lhs, rhs);
            if (lhs != rhs && !report.witness) report.witness = {a, b};
        }
    }
    report.verdict = !report.witness.has_value();
    return report;
}

}  // namespace wdcalc
