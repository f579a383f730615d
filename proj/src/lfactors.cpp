#include "wdcalc/lfactors.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace wdcalc {

namespace {

bool has_opaque(const WDRep& A) {
    for (const auto& [c, mult] : A.parts)
        if (c.chi.opaque) return true;
    return false;
}

// Real pole of the single constituent's Euler factor, if any.
std::optional<Rat> constituent_pole(const WDIrred& c) {
    if (c.chi.opaque || !c.chi.d.is_one()) return std::nullopt;
    return -c.x - Rat(c.n - 1, 2);
}

// epsilon(1/2, chi_d |.|^x, psi_c) for a one-dimensional constituent, with
// c = p^v u (v in {0,1}); the Tate integral gives chi_d(p)^{a+v} q^{-a/2}
// g(chi_d, psi_u) q^{-(a+v)x} for conductor exponent a >= 1 and
// chi_d(p)^v q^{-vx} for a = 0.
ExactNumber epsilon_char(const SquareClass& d, const Rat& x, int v, long long scale) {
    const PAdicField F = d.field;
    const int a = quad_char_conductor_exp(d);
    const int chi_p = quad_char_eval(d, square_class(F, F.p));
    if (a == 0) {
        ExactNumber r = exact_of_sign(F, v % 2 == 0 ? +1 : chi_p);
        return exact_mul(r, exact_ppow(F, -x * v));
    }
    ExactNumber r = exact_of_sign(F, (a + v) % 2 == 0 ? +1 : chi_p);
    r = exact_mul(r, exact_ppow(F, Rat(-a, 2)));
    r = exact_mul(r, gauss_sum(d, a, scale));
    return exact_mul(r, exact_ppow(F, -x * (a + v)));
}

// epsilon(1/2, chi_d |.|^x (x) nu_n, psi_c): product over the n pieces
// |.|^{x + (n-1)/2 - j}, times the psi-independent monodromy correction
// det(-Frob q^{-1/2} | V^I / V^I cap ker N) over the n-1 pieces below the
// top one (empty when chi is ramified, V^I = 0).
ExactNumber epsilon_constituent(const WDIrred& c, int v, long long scale) {
    const SquareClass d = c.chi.d;
    const PAdicField F = d.field;
    ExactNumber r = exact_one(F);
    for (int j = 0; j < c.n; ++j) {
        Rat xj = c.x + Rat(c.n - 1, 2) - Rat(j);
        r = exact_mul(r, epsilon_char(d, xj, v, scale));
    }
    if (quad_char_conductor_exp(d) == 0) {
        const int chi_p = quad_char_eval(d, square_class(F, F.p));
        ExactNumber delta = exact_of_sign(F, (c.n - 1) % 2 == 0 ? +1 : -chi_p);
        delta = exact_mul(delta, exact_ppow(F, -c.x * (c.n - 1)));
        r = exact_mul(r, delta);
    }
    return r;
}

ExactNumber epsilon_impl(const WDRep& A, int v, long long scale) {
    ExactNumber r = exact_one(A.field);
    for (const auto& [c, mult] : A.parts) {
        if (c.chi.opaque)
            throw std::domain_error("epsilon_half: unsupported opaque constituent");
        r = exact_mul(r, exact_pow(epsilon_constituent(c, v, scale), mult));
    }
    return r;
}

}  // namespace

PoleLocus pole_locus(const WDRep& A) {
    std::map<Rat, int> acc;
    for (const auto& [c, mult] : A.parts)
        if (auto s0 = constituent_pole(c)) acc[*s0] += mult;
    PoleLocus out;
    out.poles.assign(acc.begin(), acc.end());
    return out;
}

bool l_regular_at(const WDRep& A, const Rat& s0) {
    for (const auto& [c, mult] : A.parts)
        if (auto pole = constituent_pole(c); pole && *pole == s0) return false;
    return true;
}

ExactNumber gauss_sum(const SquareClass& d, int k, long long scale) {
    const PAdicField F = d.field;
    if (k != quad_char_conductor_exp(d))
        throw std::invalid_argument("gauss_sum: character not primitive mod p^k");
    if (k == 0) return exact_one(F);
    long long mod = 1;
    for (int i = 0; i < k; ++i) mod *= F.p;
    long long s = scale % mod;
    if (s < 0) s += mod;
    if (s % F.p == 0) throw std::invalid_argument("gauss_sum: scale must be a unit");

    static std::map<std::tuple<int, int, int, long long>, ExactNumber> cache;
    static std::mutex cache_mutex;
    const auto key = std::make_tuple(F.p, d.vpar, d.ucode, s);
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }

    const double pi = std::acos(-1.0);
    std::complex<double> sum = 0.0;
    for (long long x = 1; x < mod; ++x) {
        if (x % F.p == 0) continue;
        int chi = quad_char_eval(d, square_class(F, x));
        long long phase = s * x % mod;
        sum += double(chi) * std::polar(1.0, 2.0 * pi * double(phase) / double(mod));
    }
    ExactNumber val = snap_to_exact(F, sum);

    std::lock_guard<std::mutex> lock(cache_mutex);
    cache.emplace(key, val);
    return val;
}

ExactNumber epsilon_half(const WDRep& A) { return epsilon_impl(A, 0, 1); }

ExactNumber epsilon_half(const WDRep& A, const SquareClass& c) {
    if (c.field != A.field) throw std::invalid_argument("epsilon_half: mixed fields");
    return epsilon_impl(A, c.vpar, class_unit_rep(c));
}

int root_number(const WDRep& A) {
    if (!sign_of(A).symplectic)
        throw std::invalid_argument("root_number: parameter is not symplectic");
    ExactNumber val = epsilon_half(A);
    if (!exact_is_sign(val))
        throw std::logic_error("root_number: epsilon value is not a sign");
    return exact_sign_value(val);
}

ExactNumber lambda_factor(const SquareClass& d) {
    return epsilon_half(wd_single(d.field, quad_irred(d, Rat(0), 1)));
}

bool is_generic(const WDRep& A, const GroupKind& kind) {
    ClassifyResult cls = classify_parameter(A, kind);
    if (!cls.ok) throw std::invalid_argument("is_generic: parameter fails classification");
    if (has_opaque(A)) {
        if (is_tempered(A)) return true;
        throw std::domain_error("is_generic: unsupported non-tempered opaque constituent");
    }
    const bool dual_symplectic = kind.family == Family::SOodd || kind.family == Family::Mp;
    WDRep ad = dual_symplectic ? sym_square(A) : ext_square(A);
    return l_regular_at(ad, Rat(1));
}

}  // namespace wdcalc
