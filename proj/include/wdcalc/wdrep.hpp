#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wdcalc/localfield.hpp"
#include "wdcalc/rational.hpp"

namespace wdcalc {

// Finite (Weil-group) part of a constituent: either a quadratic character
// chi_d, or an opaque non-self-dual irreducible label carrying an
// accumulated quadratic twist d (op(L) twisted by chi_d). Opaque labels
// occur only in dual pairs inside self-dual reps; the dual label toggles a
// trailing "_dual" suffix, so no opaque label is ever self-dual.
struct FinitePart {
    bool opaque = false;
    SquareClass d;      // the character class, or the twist on an opaque label
    std::string label;  // opaque base label; empty for quadratic parts

    bool operator==(const FinitePart& o) const {
        return opaque == o.opaque && d == o.d && label == o.label;
    }
    bool operator!=(const FinitePart& o) const { return !(*this == o); }
};

FinitePart finite_quad(const SquareClass& d);
FinitePart finite_opaque(const PAdicField& F, const std::string& label,
                         const SquareClass& twist);
std::string opaque_dual_label(const std::string& label);

// One irreducible: chi |.|^x boxtimes nu_n (nu_n the n-dim SL2 factor).
struct WDIrred {
    FinitePart chi;
    Rat x = Rat(0);
    int n = 1;

    bool operator==(const WDIrred& o) const { return chi == o.chi && x == o.x && n == o.n; }
    bool operator!=(const WDIrred& o) const { return !(*this == o); }
};

WDIrred quad_irred(const SquareClass& d, const Rat& x, int n);
WDIrred opaque_irred(const PAdicField& F, const std::string& label, const Rat& x, int n);

// +1 orthogonal, -1 symplectic, 0 not self-dual.
int sign_of_irred(const WDIrred& c);
WDIrred irred_dual(const WDIrred& c);

// Strict total order used for canonical serialization:
// quadratic before opaque, then by self-dual sign, conductor, n, exponent.
bool irred_less(const WDIrred& a, const WDIrred& b);

// Finite multiset of irreducibles with multiplicities, canonically sorted.
struct WDRep {
    PAdicField field;
    std::vector<std::pair<WDIrred, int>> parts;

    bool operator==(const WDRep& o) const { return field == o.field && parts == o.parts; }
    bool operator!=(const WDRep& o) const { return !(*this == o); }
};

WDRep wd_zero(const PAdicField& F);
WDRep make_rep(const PAdicField& F, std::vector<std::pair<WDIrred, int>> parts);
WDRep wd_single(const PAdicField& F, const WDIrred& c, int mult = 1);

int rep_dim(const WDRep& A);
WDRep direct_sum(const WDRep& A, const WDRep& B);
WDRep tensor(const WDRep& A, const WDRep& B);
WDRep rep_dual(const WDRep& A);

// Central character of the determinant: quadratic class plus |.|^x twist.
struct DetChar {
    SquareClass d;
    Rat x = Rat(0);

    bool operator==(const DetChar& o) const { return d == o.d && x == o.x; }
};

// Indeterminate (unpaired opaque constituents) raises a domain error.
DetChar rep_det(const WDRep& A);

WDRep ext_square(const WDRep& A);
WDRep sym_square(const WDRep& A);

// Which self-dual pairings the rep admits; both flags set for reps like
// P + P^dual, neither for reps that are not self-dual at all.
struct SelfDualSign {
    bool orthogonal = false;
    bool symplectic = false;
};

SelfDualSign sign_of(const WDRep& A);

enum class Family { Sp, SOodd, SOeven, Mp };

// Group kind a parameter is classified against; disc is used for SOeven.
struct GroupKind {
    Family family;
    PAdicField field;
    SquareClass disc;

    bool operator==(const GroupKind& o) const {
        return family == o.family && field == o.field &&
               (family != Family::SOeven || disc == o.disc);
    }
};

GroupKind kind_sp(const PAdicField& F);
GroupKind kind_so_odd(const PAdicField& F);
GroupKind kind_so_even(const SquareClass& disc);
GroupKind kind_mp(const PAdicField& F);
const char* family_name(Family f);

enum class ClassifyFail { none, wrong_parity, wrong_sign, wrong_det };

struct ClassifyResult {
    bool ok = false;
    ClassifyFail reason = ClassifyFail::none;
};

// Dimension parity, self-duality sign, and determinant condition for the
// group kind: Sp(W_2n) parameters are odd orthogonal with trivial det;
// SO(V_2n+1) and Mp(W_2n) parameters are even symplectic; SO(V_2n)
// parameters are even orthogonal with det = chi_disc.
ClassifyResult classify_parameter(const WDRep& A, const GroupKind& kind);

struct LanglandsDecomp {
    // (tempered piece, exponent), exponents strictly decreasing and > 0.
    std::vector<std::pair<WDRep, Rat>> pieces;
    WDRep core;  // the exponent-zero part
};

// Splits A = phi_1|.|^{s_1} + ... + core + ... + (phi_1|.|^{s_1})^dual.
// Raises a domain error when A is not stable under dual.
LanglandsDecomp langlands_decompose(const WDRep& A);

// Reassembles a decomposition; inverse of langlands_decompose.
WDRep langlands_assemble(const LanglandsDecomp& dec);

bool is_tempered(const WDRep& A);
bool is_discrete(const WDRep& A, const GroupKind& kind);

// Even-orthogonal reps only: some same-sign constituent has odd dimension.
bool is_epsilon_invariant(const WDRep& A);

}  // namespace wdcalc
