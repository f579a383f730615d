#include "wdcalc/localfield.hpp"

#include <stdexcept>
#include <string>

namespace wdcalc {

namespace {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

void check_same_field(const PAdicField& a, const PAdicField& b, const char* who) {
    if (a != b) throw std::invalid_argument(std::string(who) + ": mixed fields");
}

// (u - 1)/2 mod 2 for odd u; detects u = 3 mod 4.
int eps2(int u) { return ((u - 1) / 2) & 1; }

// (u^2 - 1)/8 mod 2 for odd u; detects u = 3, 5 mod 8.
int omega2(int u) { return ((u * u - 1) / 8) & 1; }

}  // namespace

PAdicField padic_field(int p) {
    if (!is_prime(p) || p >= (1 << 16))
        throw std::invalid_argument("padic_field: p must be a prime below 2^16");
    return PAdicField{p};
}

int legendre(long long a, int p) {
    if (p == 2) throw std::invalid_argument("legendre: p must be odd");
    long long r = a % p;
    if (r < 0) r += p;
    if (r == 0) throw std::invalid_argument("legendre: argument not a unit");
    // Euler criterion by repeated squaring mod p.
    long long result = 1, base = r, e = (p - 1) / 2;
    while (e > 0) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return result == 1 ? +1 : -1;
}

int unit_nonresidue(const PAdicField& F) {
    if (F.p == 2) throw std::invalid_argument("unit_nonresidue: p must be odd");
    for (int u = 2; u < F.p; ++u)
        if (legendre(u, F.p) == -1) return u;
    throw std::logic_error("unit_nonresidue: none found");
}

SquareClass square_class(const PAdicField& F, long long n) {
    if (F.p == 0) throw std::invalid_argument("square_class: uninitialized field");
    if (n == 0) throw std::invalid_argument("square_class: argument must be nonzero");
    int vpar = 0;
    while (n % F.p == 0) {
        n /= F.p;
        vpar ^= 1;
    }
    SquareClass c;
    c.field = F;
    c.vpar = vpar;
    if (F.p == 2) {
        int u = static_cast<int>(((n % 8) + 8) % 8);
        c.ucode = u;
    } else {
        c.ucode = legendre(n, F.p) == 1 ? 0 : 1;
    }
    return c;
}

SquareClass square_class_one(const PAdicField& F) { return square_class(F, 1); }

SquareClass class_mul(const SquareClass& a, const SquareClass& b) {
    check_same_field(a.field, b.field, "class_mul");
    SquareClass c;
    c.field = a.field;
    c.vpar = a.vpar ^ b.vpar;
    c.ucode = a.field.p == 2 ? (a.ucode * b.ucode) % 8 : (a.ucode ^ b.ucode);
    return c;
}

long long class_label(const SquareClass& a) {
    long long unit;
    if (a.field.p == 2) {
        switch (a.ucode) {
            case 1: unit = 1; break;
            case 7: unit = -1; break;
            case 5: unit = 5; break;
            case 3: unit = -5; break;
            default: throw std::logic_error("class_label: bad ucode");
        }
    } else {
        unit = a.ucode == 0 ? 1 : unit_nonresidue(a.field);
    }
    return a.vpar ? unit * a.field.p : unit;
}

std::vector<SquareClass> all_square_classes(const PAdicField& F) {
    std::vector<SquareClass> out;
    if (F.p == 2) {
        for (int vpar = 0; vpar <= 1; ++vpar)
            for (int ucode : {1, 7, 5, 3}) out.push_back(SquareClass{F, vpar, ucode});
    } else {
        for (int vpar = 0; vpar <= 1; ++vpar)
            for (int ucode : {0, 1}) out.push_back(SquareClass{F, vpar, ucode});
    }
    return out;
}

int hilbert_symbol(const SquareClass& a, const SquareClass& b) {
    check_same_field(a.field, b.field, "hilbert_symbol");
    const int p = a.field.p;
    if (p == 2) {
        int e = eps2(a.ucode) * eps2(b.ucode) + a.vpar * omega2(b.ucode) + b.vpar * omega2(a.ucode);
        return (e & 1) ? -1 : +1;
    }
    // Tame formula: (a, b) = Legendre((-1)^{alpha beta} u_a^beta u_b^alpha).
    int leg_a = a.ucode == 0 ? +1 : -1;
    int leg_b = b.ucode == 0 ? +1 : -1;
    int leg_m1 = (p % 4 == 1) ? +1 : -1;
    int s = 1;
    if (a.vpar && b.vpar) s *= leg_m1;
    if (b.vpar) s *= leg_a;
    if (a.vpar) s *= leg_b;
    return s;
}

int quad_char_eval(const SquareClass& d, const SquareClass& x) { return hilbert_symbol(x, d); }

bool norm_group_contains(const SquareClass& d, const SquareClass& c) {
    return hilbert_symbol(c, d) == +1;
}

SquareClass disc_direct_sum(int m, const SquareClass& d, int mp, const SquareClass& dp) {
    check_same_field(d.field, dp.field, "disc_direct_sum");
    if (m < 0 || mp < 0) throw std::invalid_argument("disc_direct_sum: negative dimension");
    SquareClass out = class_mul(d, dp);
    if ((m & 1) && (mp & 1)) out = class_mul(out, square_class(d.field, -1));
    return out;
}

int quad_char_conductor_exp(const SquareClass& d) {
    if (d.is_one()) return 0;
    if (d.field.p != 2) return d.vpar;  // trivial on units iff even valuation
    const PAdicField F = d.field;
    auto chi = [&](long long x) { return hilbert_symbol(square_class(F, x), d); };
    if (chi(5) == -1) return 3;  // nontrivial on 1 + 4Z_2
    if (chi(3) == -1 || chi(7) == -1) return 2;
    return 0;  // trivial on all units (chi_5 or trivial)
}

int class_sort_key(const SquareClass& d) {
    if (d.field.p == 2) {
        int idx;
        switch (d.ucode) {
            case 1: idx = 0; break;
            case 7: idx = 1; break;
            case 5: idx = 2; break;
            default: idx = 3; break;
        }
        return d.vpar * 4 + idx;
    }
    return d.vpar * 2 + d.ucode;
}

long long class_unit_rep(const SquareClass& d) {
    if (d.field.p == 2) return d.ucode;
    return d.ucode == 0 ? 1 : unit_nonresidue(d.field);
}

OrthSpaceLabel orth_space(int dim, const SquareClass& disc) {
    if (dim <= 0) throw std::invalid_argument("orth_space: dimension must be positive");
    return OrthSpaceLabel{dim, disc, std::nullopt, +1};
}

}  // namespace wdcalc
