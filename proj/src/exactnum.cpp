#include "wdcalc/exactnum.hpp"

#include <cmath>
#include <stdexcept>

namespace wdcalc {

namespace {

int mod8(int k) {
    int r = k % 8;
    return r < 0 ? r + 8 : r;
}

void check_same_field(const PAdicField& a, const PAdicField& b, const char* who) {
    if (a != b) throw std::invalid_argument(std::string(who) + ": mixed fields");
}

}  // namespace

ExactNumber exact_zero(const PAdicField& F) { return ExactNumber{F, true, 0, Rat(0)}; }

ExactNumber exact_one(const PAdicField& F) { return ExactNumber{F, false, 0, Rat(0)}; }

ExactNumber exact_root8(const PAdicField& F, int k) {
    return ExactNumber{F, false, mod8(k), Rat(0)};
}

ExactNumber exact_ppow(const PAdicField& F, const Rat& e) {
    return ExactNumber{F, false, 0, e};
}

ExactNumber exact_of_sign(const PAdicField& F, int s) {
    if (s != 1 && s != -1) throw std::invalid_argument("exact_of_sign: sign must be +1 or -1");
    return exact_root8(F, s == 1 ? 0 : 4);
}

ExactNumber exact_mul(const ExactNumber& a, const ExactNumber& b) {
    check_same_field(a.field, b.field, "exact_mul");
    if (a.zero || b.zero) return exact_zero(a.field);
    return ExactNumber{a.field, false, mod8(a.k + b.k), a.e + b.e};
}

ExactNumber exact_inv(const ExactNumber& a) {
    if (a.zero) throw std::domain_error("exact_inv: zero has no inverse");
    return ExactNumber{a.field, false, mod8(-a.k), -a.e};
}

ExactNumber exact_pow(const ExactNumber& a, int m) {
    if (a.zero) {
        if (m < 0) throw std::domain_error("exact_pow: negative power of zero");
        return m == 0 ? exact_one(a.field) : a;
    }
    return ExactNumber{a.field, false, mod8(a.k * (m % 8)), a.e * m};
}

std::complex<double> exact_to_complex(const ExactNumber& a) {
    if (a.zero) return {0.0, 0.0};
    const double pi = std::acos(-1.0);
    std::complex<double> phase = std::polar(1.0, a.k * pi / 4.0);
    return phase * std::pow(double(a.field.p), rat_to_double(a.e));
}

std::string exact_to_string(const ExactNumber& a) {
    if (a.zero) return "0";
    return "zeta8^" + std::to_string(a.k) + " * " + std::to_string(a.field.p) + "^(" +
           rat_to_string(a.e) + ")";
}

bool exact_is_sign(const ExactNumber& a) {
    return !a.zero && a.e == Rat(0) && (a.k == 0 || a.k == 4);
}

int exact_sign_value(const ExactNumber& a) {
    if (!exact_is_sign(a)) throw std::domain_error("exact_sign_value: value is not a sign");
    return a.k == 0 ? +1 : -1;
}

ExactNumber snap_to_exact(const PAdicField& F, std::complex<double> z) {
    const double pi = std::acos(-1.0);
    double mag = std::abs(z);
    if (mag < 0.5) throw std::domain_error("snap_to_exact: value off the exact grid");
    long long m = std::llround(2.0 * std::log(mag) / std::log(double(F.p)));
    int k = mod8(static_cast<int>(std::llround(std::arg(z) / (pi / 4.0))));
    ExactNumber cand{F, false, k, Rat(m, 2)};
    if (std::abs(z - exact_to_complex(cand)) > 1e-6)
        throw std::domain_error("snap_to_exact: value off the exact grid");
    return cand;
}

}  // namespace wdcalc
