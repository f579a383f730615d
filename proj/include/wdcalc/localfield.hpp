#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace wdcalc {

// Model non-archimedean field Q_p with residue cardinality q = p.
struct PAdicField {
    int p = 0;

    bool operator==(const PAdicField& o) const { return p == o.p; }
    bool operator!=(const PAdicField& o) const { return p != o.p; }
};

// Validates p prime and p < 2^16 (Gauss sums enumerate (Z/p^k)^x directly).
PAdicField padic_field(int p);

// Smallest positive quadratic non-residue mod p; p odd only.
int unit_nonresidue(const PAdicField& F);

// Legendre symbol of a unit a mod odd prime p, in {+1, -1}.
int legendre(long long a, int p);

// Square class in F^x / F^x2, canonical data:
//   vpar  - valuation mod 2;
//   ucode - unit part: p odd -> 0 (residue) or 1 (non-residue);
//           p = 2 -> the unit mod 8, one of {1,3,5,7}.
// Canonical labels: p odd {1, u, p, up}; p = 2 {1,-1,5,-5,2,-2,10,-10}.
struct SquareClass {
    PAdicField field;
    int vpar = 0;
    int ucode = 0;

    bool operator==(const SquareClass& o) const {
        return field == o.field && vpar == o.vpar && ucode == o.ucode;
    }
    bool operator!=(const SquareClass& o) const { return !(*this == o); }
    bool is_one() const { return vpar == 0 && ucode == (field.p == 2 ? 1 : 0); }
};

SquareClass square_class(const PAdicField& F, long long n);
SquareClass square_class_one(const PAdicField& F);

// Group law on F^x / F^x2 (every class is its own inverse).
SquareClass class_mul(const SquareClass& a, const SquareClass& b);

// Canonical integer representative of the class (see table above).
long long class_label(const SquareClass& a);

// All classes in a fixed deterministic order (unramified first).
std::vector<SquareClass> all_square_classes(const PAdicField& F);

// Quadratic Hilbert symbol (a, b) in {+1, -1}; symmetric, bimultiplicative.
int hilbert_symbol(const SquareClass& a, const SquareClass& b);

// chi_d(x) = (x, d).
int quad_char_eval(const SquareClass& d, const SquareClass& x);

// true iff c is a norm from F(sqrt(d)), i.e. (c, d) = +1; d = 1 always true.
bool norm_group_contains(const SquareClass& d, const SquareClass& c);

// disc(V + V') = (-1)^{m m'} d d' for dims m, m' and discs d, d'.
SquareClass disc_direct_sum(int m, const SquareClass& d, int mp, const SquareClass& dp);

// Conductor exponent a of chi_d: the least k with chi_d trivial on units
// congruent to 1 mod p^k. Values: 0 (unramified), 1 (odd p ramified),
// 2 or 3 (p = 2 ramified: conductor 4 resp. 8).
int quad_char_conductor_exp(const SquareClass& d);

// Deterministic sort key for square classes of one field.
int class_sort_key(const SquareClass& d);

// Small positive integer representative of the unit part of the class.
long long class_unit_rep(const SquareClass& d);

// Invariant label of an orthogonal space: dimension, discriminant,
// optional type pair (d, c) with d = disc, and a +/- variant flag for the
// two forms sharing (dim, disc).
struct OrthSpaceLabel {
    int dim = 0;
    SquareClass disc;
    std::optional<std::pair<SquareClass, SquareClass>> type_pair;
    int variant = +1;
};

OrthSpaceLabel orth_space(int dim, const SquareClass& disc);

}  // namespace wdcalc
