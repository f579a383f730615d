#pragma once

#include <cstddef>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "wdcalc/lfactors.hpp"
#include "wdcalc/packets.hpp"

namespace wdcalc {

// Output of the sign recipes: one character on the full group of the
// symplectic-side parameter M, one on the even-dimension subgroup of the
// orthogonal-side parameter N. Both are multiplicative with values +-1;
// construction aborts otherwise, since a violation means the epsilon ring
// miscomputed.
struct RecipePair {
    SignCharacter chi_on_M;
    SignCharacter chi_on_N;
};

// A character known only on a subgroup of the ambient eta domain, together
// with every full extension. The extension count equals the subgroup index;
// which extension is realized is a dichotomy the lift itself does not
// decide, so all of them are listed.
struct PartialCharacter {
    SignCharacter base;  // on the embedded image, in ambient coordinates
    ComponentGroup ambient;
    std::vector<SignCharacter> extensions;
};

// A lifted parameter with its partially determined character.
struct PrasadLift {
    WDRep phi;
    PartialCharacter eta;
};

// Element-by-element comparison of the direct Fourier-Jacobi recipe with
// the value transported through the theta-twist / Bessel chain. The table
// rows are (a, b, direct value, transported value) over the product of the
// two character domains; verdict holds iff every row agrees, and witness
// points at the first disagreement.
struct SeesawReport {
    bool verdict = false;
    std::vector<std::tuple<F2Vec, F2Vec, int, int>> table;
    std::optional<std::pair<F2Vec, F2Vec>> witness;
};

// Raw recipe values, exposed for independent cross-checking.
//
// bessel_m_value: epsilon(M^a ox N) det(M^a)(-1)^{dim N/2}
//                 det(N)(-1)^{dim M^a/2} for a in the M-side group.
// bessel_n_value: the mirror value epsilon(M ox N^b) det(M)(-1)^{dim N^b/2}
//                 det(N^b)(-1)^{dim M/2}; requires dim N^b even.
// mp_shift_value: the psi-change cocycle epsilon(M^a) epsilon(M^a ox chi_c)
//                 chi_c(-1)^{dim M^a/2}.
int bessel_m_value(const ComponentGroup& gm, const WDRep& N, F2Vec a);
int bessel_n_value(const WDRep& M, const ComponentGroup& gn, F2Vec b);
int mp_shift_value(const ComponentGroup& gm, const SquareClass& c, F2Vec a);

// Sign recipe for the odd/even orthogonal pair: M even symplectic, N even
// orthogonal, quadratic constituents only. chi_on_M lives on the full group
// of M, chi_on_N on the even-dimension subgroup of N.
RecipePair bessel_recipe(const WDRep& M, const WDRep& N);

// Sign recipe for the metaplectic/symplectic pair: M even symplectic, N odd
// orthogonal with trivial determinant. Internally forms N1 = N + 1 and
// applies the Bessel formulas; chi_on_N is the restriction to the
// even-dimension subgroup of N's own group, on which N1^b = N^b.
RecipePair fj_recipe(const WDRep& M, const WDRep& N);

// Additive character change psi -> psi_c on a metaplectic parameter:
// phi -> phi ox chi_c with the component group identified constituent by
// constituent, eta multiplied by the psi-change cocycle, label by c.
// Changing by c1 then c2 equals changing by c1 c2.
EnhancedParam mp_change_psi(const EnhancedParam& e, const SquareClass& c);

// Theta lift to the odd special orthogonal group of discriminant c: the
// parameter twists by chi_c and eta shifts as under mp_change_psi; the
// dual side uses -c instead. The result is so-odd enhanced.
EnhancedParam mp_theta_odd(const EnhancedParam& e, const SquareClass& c,
                           bool dual_side);

// Lift along Sp(W_2n) -> SO(V_2n+2), V of discriminant d: phi' = (phi ox
// chi_V) + 1, with eta transported along the even-dimension subgroups and
// every extension enumerated. The extension is unique iff phi contains
// chi_V. pick selects a single extension by index.
PrasadLift prasad_p1(const EnhancedParam& e, const OrthSpaceLabel& V,
                     std::optional<std::size_t> pick = {});

// Lift along SO(V_2n) -> Sp(W_2n), chi_V the discriminant class of e:
// phi = (phi' ox chi_V) + chi_V. The extension is unique unless phi' admits
// a sign-flipping symmetry and lacks the trivial character.
PrasadLift prasad_p2(const EnhancedParam& e,
                     std::optional<std::size_t> pick = {});

// Exact multiset identity Lambda^2((phi ox chi_V) + 1) =
// Lambda^2(phi) + (phi ox chi_V) for an odd orthogonal phi with trivial
// determinant; the adjoint factor of the lift splits off the twisted
// standard factor.
bool verify_adjoint_factorization(const WDRep& phi, const SquareClass& chi_v);

// Replays the theta-twist / Bessel chain against the direct Fourier-Jacobi
// recipe for a metaplectic M and symplectic N: twist both sides by chi_d,
// add the trivial line on the N side, take the Bessel recipe there, and
// pull back through the psi-change cocycle and the two determinant shifts
// of the Whittaker renormalizations. Inputs must be generic; non-tempered
// inputs are rejected unless allow_nontempered is set.
SeesawReport verify_fj_seesaw(const WDRep& phi_m, const WDRep& phi_n,
                              const SquareClass& d,
                              bool allow_nontempered = false);

}  // namespace wdcalc
