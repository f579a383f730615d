#pragma once

#include <utility>
#include <vector>

#include "wdcalc/exactnum.hpp"
#include "wdcalc/wdrep.hpp"

namespace wdcalc {

// Real pole positions of L(s, A), with multiplicities, sorted ascending.
// Each constituent chi|.|^x (x) nu_n with chi unramified and chi(p) = +1
// contributes one pole at s0 = -x - (n-1)/2; nothing else contributes a
// real pole (unramified chi(p) = -1 poles sit off the real line, ramified
// and opaque constituents have L = 1).
struct PoleLocus {
    std::vector<std::pair<Rat, int>> poles;
};

PoleLocus pole_locus(const WDRep& A);

// true iff L(s, A) has no pole at s = s0.
bool l_regular_at(const WDRep& A, const Rat& s0);

// Quadratic Gauss sum sum_{x unit mod p^k} chi_d(x) e^{2 pi i scale x / p^k},
// 1 for k = 0. Requires k = conductor exponent of chi_d (primitivity) and a
// unit scale. Computed in floating point and snapped to the exact grid.
ExactNumber gauss_sum(const SquareClass& d, int k, long long scale = 1);

// epsilon(1/2, A, psi) for the standard additive character psi that is
// trivial on Z_p and nontrivial on p^{-1} Z_p. Multiplicative over direct
// sums; opaque constituents are rejected.
ExactNumber epsilon_half(const WDRep& A);

// Same with psi replaced by psi_c(x) = psi(c x); only the square class of c
// matters for the supported constituents.
ExactNumber epsilon_half(const WDRep& A, const SquareClass& c);

// epsilon_half coerced to a sign; requires symplectic A (the value is then
// psi-independent and equals +-1; any other exact value is an internal
// inconsistency).
int root_number(const WDRep& A);

// Langlands lambda-factor of the extension F(sqrt(d))/F: epsilon_half of
// chi_d. Satisfies lambda^2 = chi_d(-1).
ExactNumber lambda_factor(const SquareClass& d);

// Adjoint-L-function genericity: Ad(A) is Sym^2 when the dual group is
// symplectic (so-odd and mp kinds) and Lambda^2 otherwise (sp and so-even),
// and A is generic iff L(s, Ad(A)) is regular at s = 1. A must classify as a
// parameter of the given kind. Tempered parameters with opaque constituents
// are generic outright; non-tempered opaque constituents are rejected.
bool is_generic(const WDRep& A, const GroupKind& kind);

}  // namespace wdcalc
