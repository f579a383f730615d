#include "wdcalc/jsonio.hpp"

#include "wdcalc/dsl.hpp"

namespace wdcalc {

std::string element_label(F2Vec a) {
    if (a == 0) return "1";
    std::string s;
    for (int i = 0; i < 32; ++i)
        if (a & (F2Vec(1) << i)) {
            if (!s.empty()) s += "+";
            s += "e" + std::to_string(i);
        }
    return s;
}

Json rep_json(const WDRep& A) {
    Json out;
    Json parts = Json::array();
    for (const auto& [c, mult] : A.parts) {
        Json ch;
        if (c.chi.opaque) ch["op"] = c.chi.label;
        ch["d"] = class_label(c.chi.d);
        ch["exp"] = rat_to_string(c.x);
        parts.push_back({{"char", ch}, {"n", c.n}, {"mult", mult}});
    }
    out["constituents"] = parts;
    out["dim"] = rep_dim(A);
    DetChar det = rep_det(A);
    out["det"] = {{"d", class_label(det.d)}, {"exp", rat_to_string(det.x)}};
    SelfDualSign sign = sign_of(A);
    out["sign"] = {{"orthogonal", sign.orthogonal}, {"symplectic", sign.symplectic}};
    return out;
}

Json character_json(const SignCharacter& chi) {
    Json out;
    out["dim"] = chi.domain.dim();
    Json gens = Json::array(), vals = Json::array();
    for (std::size_t i = 0; i < chi.domain.basis().size(); ++i) {
        gens.push_back(element_label(chi.domain.basis()[i]));
        vals.push_back(chi.vals[i]);
    }
    out["generators"] = gens;
    out["values"] = vals;
    Json table = Json::array();
    for (F2Vec a : chi.domain.elements())
        table.push_back({{"element", element_label(a)}, {"value", char_eval(chi, a)}});
    out["table"] = table;
    return out;
}

Json packet_json(const EnhancedParam& e) {
    Json out;
    out["group"] = family_name(e.kind.family);
    if (e.kind.family == Family::SOeven) out["disc"] = class_label(e.kind.disc);
    out["rep"] = print_rep(e.phi);
    Json basis = Json::array();
    for (const auto& [c, mult] : e.grp.basis)
        basis.push_back({{"constituent", print_irred(c)}, {"mult", mult}});
    out["basis"] = basis;
    out["A_phi"] = {{"dim", e.grp.full.dim()}};
    Json plus_gens = Json::array();
    for (F2Vec v : e.grp.plus.basis()) plus_gens.push_back(element_label(v));
    out["A_phi_plus"] = {{"dim", e.grp.plus.dim()}, {"generators", plus_gens}};
    out["whittaker"] = class_label(e.label);
    out["eta"] = character_json(e.eta);
    if (e.kind.family == Family::SOodd || e.kind.family == Family::SOeven)
        out["central_sign"] = central_sign(e);
    return out;
}

}  // namespace wdcalc
