#include "wdcalc/packets.hpp"

#include <stdexcept>

namespace wdcalc {

namespace {

int kind_sign(const GroupKind& kind) {
    return kind.family == Family::Sp || kind.family == Family::SOeven ? +1 : -1;
}

void check_domain_match(const SignCharacter& a, const SignCharacter& b, const char* who) {
    if (!(a.domain == b.domain)) throw std::invalid_argument(std::string(who) + ": domain mismatch");
}

}  // namespace

ComponentGroup component_group(const WDRep& phi, const GroupKind& kind) {
    if (!classify_parameter(phi, kind).ok)
        throw std::invalid_argument("component_group: parameter fails classification");
    const int want = kind_sign(kind);
    std::vector<std::pair<WDIrred, int>> basis;
    for (const auto& [c, mult] : phi.parts)
        if (sign_of_irred(c) == want) basis.push_back({c, mult});

    std::vector<F2Vec> full_basis;
    for (std::size_t i = 0; i < basis.size(); ++i) full_basis.push_back(F2Vec(1) << i);
    F2Span full = F2Span::from_basis(full_basis);

    // plus subgroup: kernel of a -> sum of n_i over the support, mod 2
    std::vector<F2Vec> plus_basis;
    int pivot = -1;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (basis[i].first.n % 2 != 0) {
            pivot = static_cast<int>(i);
            break;
        }
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (static_cast<int>(i) == pivot) continue;
        F2Vec v = F2Vec(1) << i;
        if (pivot >= 0 && basis[i].first.n % 2 != 0) v |= F2Vec(1) << pivot;
        plus_basis.push_back(v);
    }
    return ComponentGroup{kind, phi, std::move(basis), std::move(full),
                          F2Span::from_basis(plus_basis)};
}

int plus_index(const ComponentGroup& grp) {
    return grp.full.dim() == grp.plus.dim() ? 1 : 2;
}

WDRep minus_eigenspace(const ComponentGroup& grp, F2Vec a) {
    if (!grp.full.contains(a))
        throw std::invalid_argument("minus_eigenspace: element outside the group");
    std::vector<std::pair<WDIrred, int>> parts;
    for (std::size_t i = 0; i < grp.basis.size(); ++i)
        if (a & (F2Vec(1) << i)) parts.push_back({grp.basis[i].first, 1});
    return make_rep(grp.phi.field, std::move(parts));
}

SignCharacter trivial_character(const F2Span& domain) {
    return SignCharacter{domain, std::vector<int>(domain.dim(), +1)};
}

SignCharacter sign_character(const F2Span& domain, std::vector<int> vals) {
    if (vals.size() != static_cast<std::size_t>(domain.dim()))
        throw std::invalid_argument("sign_character: one value per basis vector required");
    for (int v : vals)
        if (v != +1 && v != -1) throw std::invalid_argument("sign_character: values must be +-1");
    return SignCharacter{domain, std::move(vals)};
}

int char_eval(const SignCharacter& chi, F2Vec a) {
    auto coords = chi.domain.coords(a);
    if (!coords) throw std::domain_error("char_eval: element outside the character's domain");
    int r = +1;
    for (std::size_t i = 0; i < chi.vals.size(); ++i)
        if (*coords & (F2Vec(1) << i)) r *= chi.vals[i];
    return r;
}

SignCharacter char_mul(const SignCharacter& a, const SignCharacter& b) {
    check_domain_match(a, b, "char_mul");
    std::vector<int> vals(a.vals.size());
    for (std::size_t i = 0; i < vals.size(); ++i) vals[i] = a.vals[i] * b.vals[i];
    return SignCharacter{a.domain, std::move(vals)};
}

bool char_equal(const SignCharacter& a, const SignCharacter& b) {
    return a.domain == b.domain && a.vals == b.vals;
}

SignCharacter restrict_character(const SignCharacter& chi, const F2Span& sub) {
    std::vector<int> vals;
    for (F2Vec b : sub.basis()) vals.push_back(char_eval(chi, b));
    return SignCharacter{sub, std::move(vals)};
}

SignCharacter eta_c(const ComponentGroup& grp, const SquareClass& c) {
    std::vector<int> vals;
    for (std::size_t i = 0; i < grp.basis.size(); ++i) {
        DetChar det = rep_det(minus_eigenspace(grp, F2Vec(1) << i));
        vals.push_back(quad_char_eval(det.d, c));
    }
    return SignCharacter{grp.full, std::move(vals)};
}

SignCharacter eta_c(const WDRep& phi, const GroupKind& kind, const SquareClass& c) {
    return eta_c(component_group(phi, kind), c);
}

const F2Span& eta_domain(const ComponentGroup& grp) {
    const bool full = grp.kind.family == Family::SOodd || grp.kind.family == Family::Mp;
    return full ? grp.full : grp.plus;
}

EnhancedParam make_enhanced(const GroupKind& kind, const WDRep& phi,
                            const std::vector<int>& eta_vals, const SquareClass& label) {
    if (label.field != phi.field) throw std::invalid_argument("make_enhanced: mixed fields");
    if (kind.family == Family::SOodd && !label.is_one())
        throw std::invalid_argument("make_enhanced: so-odd has a unique Whittaker datum");
    ComponentGroup grp = component_group(phi, kind);
    SignCharacter eta = sign_character(eta_domain(grp), eta_vals);
    return EnhancedParam{kind, phi, std::move(grp), std::move(eta), label};
}

EnhancedParam whittaker_change(const EnhancedParam& e, const SquareClass& c2) {
    if (e.kind.family != Family::Sp && e.kind.family != Family::SOeven)
        throw std::invalid_argument(
            "whittaker_change: only sp and so-even carry Whittaker labels here");
    SquareClass shift = class_mul(c2, e.label);
    SignCharacter tw = restrict_character(eta_c(e.grp, shift), e.eta.domain);
    EnhancedParam out = e;
    out.eta = char_mul(e.eta, tw);
    out.label = c2;
    return out;
}

EnhancedParam dual_enhanced(const EnhancedParam& e) {
    if (e.kind.family != Family::Sp)
        throw std::invalid_argument("dual_enhanced: rule available for sp kind only");
    SignCharacter tw =
        restrict_character(eta_c(e.grp, square_class(e.phi.field, -1)), e.eta.domain);
    EnhancedParam out = e;
    out.eta = char_mul(e.eta, tw);
    return out;
}

int central_sign(const EnhancedParam& e) {
    if (e.kind.family != Family::SOodd && e.kind.family != Family::SOeven)
        throw std::invalid_argument("central_sign: defined for the SO kinds");
    F2Vec z = 0;
    for (std::size_t i = 0; i < e.grp.basis.size(); ++i)
        if (e.grp.basis[i].second % 2 != 0) z |= F2Vec(1) << i;
    return char_eval(e.eta, z);
}

}  // namespace wdcalc
