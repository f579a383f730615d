#pragma once

#include <vector>

#include "wdcalc/f2.hpp"
#include "wdcalc/wdrep.hpp"

namespace wdcalc {

// Component group of a parameter: the free F2 module on the distinct
// self-dual constituents whose sign matches the parameter (basis order
// follows the canonical constituent order), together with the kernel of
// a -> (-1)^{dim of the a-eigenspace} as the plus subgroup. Opposite-sign
// and opaque constituents contribute nothing.
struct ComponentGroup {
    GroupKind kind;
    WDRep phi;
    std::vector<std::pair<WDIrred, int>> basis;
    F2Span full;
    F2Span plus;
};

ComponentGroup component_group(const WDRep& phi, const GroupKind& kind);

// [full : plus] in {1, 2}; 2 exactly when some basis constituent has odd n.
int plus_index(const ComponentGroup& grp);

// One copy of each basis constituent supported by a (canonical
// representative of the (-1)-eigenspace class).
WDRep minus_eigenspace(const ComponentGroup& grp, F2Vec a);

// Sign character of a subgroup of some A_phi, stored by its values on the
// subgroup's basis and extended multiplicatively.
struct SignCharacter {
    F2Span domain;
    std::vector<int> vals;
};

SignCharacter trivial_character(const F2Span& domain);

// Build from explicit basis values (each +-1, one per domain basis vector).
SignCharacter sign_character(const F2Span& domain, std::vector<int> vals);

// Value at a; a must lie in the domain.
int char_eval(const SignCharacter& chi, F2Vec a);

// Pointwise product; domains must agree.
SignCharacter char_mul(const SignCharacter& a, const SignCharacter& b);

bool char_equal(const SignCharacter& a, const SignCharacter& b);

// Restriction to a subgroup of the domain.
SignCharacter restrict_character(const SignCharacter& chi, const F2Span& sub);

// The twisting character a -> chi_{det M^a}(c) on all of A_phi.
SignCharacter eta_c(const ComponentGroup& grp, const SquareClass& c);
SignCharacter eta_c(const WDRep& phi, const GroupKind& kind, const SquareClass& c);

// Parameter with an enhancement: eta lives on the full group for so-odd and
// mp kinds and on the plus subgroup for sp and so-even. The label is the
// Whittaker datum class (sp, so-even), the psi class (mp), or fixed 1
// (so-odd, unique datum).
struct EnhancedParam {
    GroupKind kind;
    WDRep phi;
    ComponentGroup grp;
    SignCharacter eta;
    SquareClass label;
};

// Domain that the kind prescribes for eta.
const F2Span& eta_domain(const ComponentGroup& grp);

EnhancedParam make_enhanced(const GroupKind& kind, const WDRep& phi,
                            const std::vector<int>& eta_vals, const SquareClass& label);

// Change of Whittaker datum c1 -> c2 for sp and so-even kinds:
// eta <- eta * eta_{c2 c1}, label <- c2. Mp kind is rejected (the psi change
// is an epsilon-bearing rule and lives with the theta maps).
EnhancedParam whittaker_change(const EnhancedParam& e, const SquareClass& c2);

// Contragredient on enhancements, sp kind only: eta <- eta * eta_{-1}.
EnhancedParam dual_enhanced(const EnhancedParam& e);

// eta at the image of the central -1: the sum of the basis elements with odd
// multiplicity. SO kinds only; +1 means the quasi-split pure inner form.
int central_sign(const EnhancedParam& e);

}  // namespace wdcalc
