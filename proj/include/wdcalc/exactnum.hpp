#pragma once

#include <complex>
#include <string>

#include "wdcalc/localfield.hpp"
#include "wdcalc/rational.hpp"

namespace wdcalc {

// Element of the multiplicative monoid {0} + {zeta8^k * p^e}, with
// zeta8 = e^{2 pi i / 8}, k in Z/8 and e an exact rational. Normal form:
// 0 <= k < 8; the zero element carries k = 0, e = 0.
struct ExactNumber {
    PAdicField field;
    bool zero = false;
    int k = 0;
    Rat e = Rat(0);

    bool operator==(const ExactNumber& o) const {
        if (field != o.field) return false;
        if (zero || o.zero) return zero == o.zero;
        return k == o.k && e == o.e;
    }
    bool operator!=(const ExactNumber& o) const { return !(*this == o); }
};

ExactNumber exact_zero(const PAdicField& F);
ExactNumber exact_one(const PAdicField& F);

// zeta8^k (any integer k).
ExactNumber exact_root8(const PAdicField& F, int k);

// p^e.
ExactNumber exact_ppow(const PAdicField& F, const Rat& e);

// +1 or -1 as a ring element; rejects other arguments.
ExactNumber exact_of_sign(const PAdicField& F, int s);

ExactNumber exact_mul(const ExactNumber& a, const ExactNumber& b);

// Multiplicative inverse; zero is rejected.
ExactNumber exact_inv(const ExactNumber& a);

// a^m for any integer m (negative m inverts; zero^0 = 1, zero^m = 0 for m > 0).
ExactNumber exact_pow(const ExactNumber& a, int m);

std::complex<double> exact_to_complex(const ExactNumber& a);

// "0" or "zeta8^K * P^(E)" with E a reduced rational.
std::string exact_to_string(const ExactNumber& a);

// true iff the value is exactly +1 or -1.
bool exact_is_sign(const ExactNumber& a);

// The sign of a value that exact_is_sign accepts; others are rejected.
int exact_sign_value(const ExactNumber& a);

// Nearest element zeta8^k * p^(m/2) (m integral) of the half-integer grid;
// rejects z of modulus below 1/2 (Gauss sums never are) and z farther than
// 1e-6 from the nearest grid point.
ExactNumber snap_to_exact(const PAdicField& F, std::complex<double> z);

}  // namespace wdcalc
