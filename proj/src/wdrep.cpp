#include "wdcalc/wdrep.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace wdcalc {

namespace {

void check_same_field(const PAdicField& a, const PAdicField& b, const char* who) {
    if (a != b) throw std::invalid_argument(std::string(who) + ": mixed fields");
}

bool valid_label(const std::string& s) {
    if (s.empty()) return false;
    auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
    auto alnum = [&](char c) { return alpha(c) || (c >= '0' && c <= '9'); };
    if (!alpha(s[0])) return false;
    for (char c : s)
        if (!alnum(c)) return false;
    return true;
}

int sign_rank(const WDIrred& c) {
    switch (sign_of_irred(c)) {
        case +1: return 0;
        case -1: return 1;
        default: return 2;
    }
}

// Multiplicity map keyed by canonical order; used for pairing checks.
std::map<WDIrred, int, bool (*)(const WDIrred&, const WDIrred&)> part_map(const WDRep& A) {
    std::map<WDIrred, int, bool (*)(const WDIrred&, const WDIrred&)> m(irred_less);
    for (const auto& [c, mult] : A.parts) m[c] = mult;
    return m;
}

WDRep tensor_irreds(const PAdicField& F, const WDIrred& a, int ma, const WDIrred& b, int mb);

}  // namespace

FinitePart finite_quad(const SquareClass& d) { return FinitePart{false, d, ""}; }

FinitePart finite_opaque(const PAdicField& F, const std::string& label,
                         const SquareClass& twist) {
    if (!valid_label(label)) throw std::invalid_argument("finite_opaque: bad label");
    check_same_field(F, twist.field, "finite_opaque");
    return FinitePart{true, twist, label};
}

std::string opaque_dual_label(const std::string& label) {
    const std::string suffix = "_dual";
    if (label.size() > suffix.size() &&
        label.compare(label.size() - suffix.size(), suffix.size(), suffix) == 0)
        return label.substr(0, label.size() - suffix.size());
    return label + suffix;
}

WDIrred quad_irred(const SquareClass& d, const Rat& x, int n) {
    if (n < 1) throw std::invalid_argument("quad_irred: n must be >= 1");
    return WDIrred{finite_quad(d), x, n};
}

WDIrred opaque_irred(const PAdicField& F, const std::string& label, const Rat& x, int n) {
    if (n < 1) throw std::invalid_argument("opaque_irred: n must be >= 1");
    return WDIrred{finite_opaque(F, label, square_class_one(F)), x, n};
}

int sign_of_irred(const WDIrred& c) {
    if (c.chi.opaque || c.x != Rat(0)) return 0;
    return (c.n % 2 == 1) ? +1 : -1;
}

WDIrred irred_dual(const WDIrred& c) {
    WDIrred out = c;
    out.x = -c.x;
    if (c.chi.opaque) out.chi.label = opaque_dual_label(c.chi.label);
    return out;  // quadratic characters are their own inverses
}

bool irred_less(const WDIrred& a, const WDIrred& b) {
    if (a.chi.opaque != b.chi.opaque) return b.chi.opaque;
    int ra = sign_rank(a), rb = sign_rank(b);
    if (ra != rb) return ra < rb;
    if (!a.chi.opaque) {
        int ca = quad_char_conductor_exp(a.chi.d), cb = quad_char_conductor_exp(b.chi.d);
        if (ca != cb) return ca < cb;
    } else if (a.chi.label != b.chi.label) {
        return a.chi.label < b.chi.label;
    }
    if (a.n != b.n) return a.n < b.n;
    if (a.x != b.x) return b.x < a.x;  // positive exponents first
    return class_sort_key(a.chi.d) < class_sort_key(b.chi.d);
}

WDRep wd_zero(const PAdicField& F) { return WDRep{F, {}}; }

WDRep make_rep(const PAdicField& F, std::vector<std::pair<WDIrred, int>> parts) {
    for (const auto& [c, mult] : parts) {
        if (mult < 1) throw std::invalid_argument("make_rep: multiplicity must be >= 1");
        if (c.n < 1) throw std::invalid_argument("make_rep: n must be >= 1");
        check_same_field(F, c.chi.d.field, "make_rep");
    }
    std::sort(parts.begin(), parts.end(),
              [](const auto& a, const auto& b) { return irred_less(a.first, b.first); });
    std::vector<std::pair<WDIrred, int>> merged;
    for (const auto& [c, mult] : parts) {
        if (!merged.empty() && merged.back().first == c)
            merged.back().second += mult;
        else
            merged.emplace_back(c, mult);
    }
    return WDRep{F, std::move(merged)};
}

WDRep wd_single(const PAdicField& F, const WDIrred& c, int mult) {
    return make_rep(F, {{c, mult}});
}

int rep_dim(const WDRep& A) {
    int d = 0;
    for (const auto& [c, mult] : A.parts) d += c.n * mult;
    return d;
}

WDRep direct_sum(const WDRep& A, const WDRep& B) {
    check_same_field(A.field, B.field, "direct_sum");
    std::vector<std::pair<WDIrred, int>> parts = A.parts;
    parts.insert(parts.end(), B.parts.begin(), B.parts.end());
    return make_rep(A.field, std::move(parts));
}

namespace {

WDRep tensor_irreds(const PAdicField& F, const WDIrred& a, int ma, const WDIrred& b, int mb) {
    if (a.chi.opaque && b.chi.opaque)
        throw std::domain_error("tensor: unsupported opaque constituent pair");
    FinitePart chi;
    if (a.chi.opaque || b.chi.opaque) {
        const WDIrred& op = a.chi.opaque ? a : b;
        const WDIrred& qd = a.chi.opaque ? b : a;
        chi = finite_opaque(F, op.chi.label, class_mul(op.chi.d, qd.chi.d));
    } else {
        chi = finite_quad(class_mul(a.chi.d, b.chi.d));
    }
    Rat x = a.x + b.x;
    std::vector<std::pair<WDIrred, int>> parts;
    for (int k = 0; k < std::min(a.n, b.n); ++k)
        parts.push_back({WDIrred{chi, x, a.n + b.n - 1 - 2 * k}, ma * mb});
    return make_rep(F, std::move(parts));
}

}  // namespace

WDRep tensor(const WDRep& A, const WDRep& B) {
    check_same_field(A.field, B.field, "tensor");
    WDRep out = wd_zero(A.field);
    for (const auto& [a, ma] : A.parts)
        for (const auto& [b, mb] : B.parts)
            out = direct_sum(out, tensor_irreds(A.field, a, ma, b, mb));
    return out;
}

WDRep rep_dual(const WDRep& A) {
    std::vector<std::pair<WDIrred, int>> parts;
    for (const auto& [c, mult] : A.parts) parts.emplace_back(irred_dual(c), mult);
    return make_rep(A.field, std::move(parts));
}

DetChar rep_det(const WDRep& A) {
    SquareClass d = square_class_one(A.field);
    Rat x(0);
    auto pm = part_map(A);
    for (const auto& [c, mult] : A.parts) {
        if (c.chi.opaque) {
            // Opaque determinants are unknown; only dual pairs cancel.
            auto it = pm.find(irred_dual(c));
            if (it == pm.end() || it->second != mult)
                throw std::domain_error("rep_det: indeterminate for unpaired opaque constituent");
            continue;
        }
        if ((c.n * mult) % 2 == 1) d = class_mul(d, c.chi.d);
        x += Rat(c.n * mult) * c.x;
    }
    return DetChar{d, x};
}

namespace {

// Lambda^2(chi|.|^x boxtimes nu_n) = |.|^{2x} (nu_{2n-3} + nu_{2n-7} + ...),
// Sym^2 the complementary ladder starting at 2n-1; chi^2 = 1.
WDRep square_of_irred(const PAdicField& F, const WDIrred& c, bool ext) {
    if (c.chi.opaque)
        throw std::domain_error("ext_square/sym_square: unsupported opaque constituent");
    std::vector<std::pair<WDIrred, int>> parts;
    for (int m = ext ? 2 * c.n - 3 : 2 * c.n - 1; m >= 1; m -= 4)
        parts.push_back({quad_irred(square_class_one(F), c.x * 2, m), 1});
    return make_rep(F, std::move(parts));
}

WDRep square_rep(const WDRep& A, bool ext) {
    // Flatten multiplicities; Lambda^2 / Sym^2 distribute with cross tensors.
    std::vector<WDIrred> flat;
    for (const auto& [c, mult] : A.parts)
        for (int i = 0; i < mult; ++i) flat.push_back(c);
    WDRep out = wd_zero(A.field);
    for (std::size_t i = 0; i < flat.size(); ++i) {
        out = direct_sum(out, square_of_irred(A.field, flat[i], ext));
        for (std::size_t j = i + 1; j < flat.size(); ++j)
            out = direct_sum(out, tensor_irreds(A.field, flat[i], 1, flat[j], 1));
    }
    return out;
}

}  // namespace

WDRep ext_square(const WDRep& A) { return square_rep(A, true); }
WDRep sym_square(const WDRep& A) { return square_rep(A, false); }

SelfDualSign sign_of(const WDRep& A) {
    auto pm = part_map(A);
    SelfDualSign s{true, true};
    for (const auto& [c, mult] : A.parts) {
        switch (sign_of_irred(c)) {
            case +1:
                if (mult % 2 == 1) s.symplectic = false;
                break;
            case -1:
                if (mult % 2 == 1) s.orthogonal = false;
                break;
            default: {
                auto it = pm.find(irred_dual(c));
                if (it == pm.end() || it->second != mult) return SelfDualSign{false, false};
            }
        }
    }
    return s;
}

GroupKind kind_sp(const PAdicField& F) { return GroupKind{Family::Sp, F, square_class_one(F)}; }
GroupKind kind_so_odd(const PAdicField& F) {
    return GroupKind{Family::SOodd, F, square_class_one(F)};
}
GroupKind kind_so_even(const SquareClass& disc) {
    return GroupKind{Family::SOeven, disc.field, disc};
}
GroupKind kind_mp(const PAdicField& F) { return GroupKind{Family::Mp, F, square_class_one(F)}; }

const char* family_name(Family f) {
    switch (f) {
        case Family::Sp: return "sp";
        case Family::SOodd: return "so-odd";
        case Family::SOeven: return "so-even";
        case Family::Mp: return "mp";
    }
    return "?";
}

ClassifyResult classify_parameter(const WDRep& A, const GroupKind& kind) {
    check_same_field(A.field, kind.field, "classify_parameter");
    const int d = rep_dim(A);
    const SelfDualSign s = sign_of(A);
    const bool want_odd_dim = kind.family == Family::Sp;
    if ((d % 2 == 1) != want_odd_dim) return {false, ClassifyFail::wrong_parity};
    const bool want_orth = kind.family == Family::Sp || kind.family == Family::SOeven;
    if (want_orth ? !s.orthogonal : !s.symplectic) return {false, ClassifyFail::wrong_sign};
    if (kind.family == Family::Sp) {
        DetChar det = rep_det(A);
        if (!det.d.is_one() || det.x != Rat(0)) return {false, ClassifyFail::wrong_det};
    } else if (kind.family == Family::SOeven) {
        DetChar det = rep_det(A);
        if (det.d != kind.disc || det.x != Rat(0)) return {false, ClassifyFail::wrong_det};
    }
    return {true, ClassifyFail::none};
}

LanglandsDecomp langlands_decompose(const WDRep& A) {
    auto pm = part_map(A);
    for (const auto& [c, mult] : A.parts) {
        if (c.x != Rat(0) || c.chi.opaque) {
            auto it = pm.find(irred_dual(c));
            if (it == pm.end() || it->second != mult)
                throw std::domain_error("langlands_decompose: parameter not dual-stable");
        }
    }
    std::vector<Rat> exps;
    for (const auto& [c, mult] : A.parts)
        if (c.x > Rat(0) && std::find(exps.begin(), exps.end(), c.x) == exps.end())
            exps.push_back(c.x);
    std::sort(exps.begin(), exps.end(), [](const Rat& a, const Rat& b) { return b < a; });
    LanglandsDecomp dec;
    dec.core = wd_zero(A.field);
    std::vector<std::pair<WDIrred, int>> core_parts;
    for (const auto& [c, mult] : A.parts)
        if (c.x == Rat(0)) core_parts.emplace_back(c, mult);
    dec.core = make_rep(A.field, std::move(core_parts));
    for (const Rat& s : exps) {
        std::vector<std::pair<WDIrred, int>> piece;
        for (const auto& [c, mult] : A.parts)
            if (c.x == s) {
                WDIrred stripped = c;
                stripped.x = Rat(0);
                piece.emplace_back(stripped, mult);
            }
        dec.pieces.emplace_back(make_rep(A.field, std::move(piece)), s);
    }
    return dec;
}

namespace {

WDRep shift_exponent(const WDRep& A, const Rat& s) {
    std::vector<std::pair<WDIrred, int>> parts;
    for (const auto& [c, mult] : A.parts) {
        WDIrred shifted = c;
        shifted.x = c.x + s;
        parts.emplace_back(shifted, mult);
    }
    return make_rep(A.field, std::move(parts));
}

}  // namespace

WDRep langlands_assemble(const LanglandsDecomp& dec) {
    WDRep out = dec.core;
    for (const auto& [piece, s] : dec.pieces) {
        WDRep shifted = shift_exponent(piece, s);
        out = direct_sum(out, shifted);
        out = direct_sum(out, rep_dual(shifted));
    }
    return out;
}

bool is_tempered(const WDRep& A) {
    for (const auto& [c, mult] : A.parts)
        if (c.x != Rat(0)) return false;
    return true;
}

bool is_discrete(const WDRep& A, const GroupKind& kind) {
    if (!classify_parameter(A, kind).ok) return false;
    const int target = (kind.family == Family::Sp || kind.family == Family::SOeven) ? +1 : -1;
    for (const auto& [c, mult] : A.parts)
        if (mult != 1 || sign_of_irred(c) != target) return false;
    return true;
}

bool is_epsilon_invariant(const WDRep& A) {
    if (rep_dim(A) % 2 != 0 || !sign_of(A).orthogonal)
        throw std::invalid_argument("is_epsilon_invariant: rep is not even-orthogonal");
    for (const auto& [c, mult] : A.parts)
        if (sign_of_irred(c) == +1 && c.n % 2 == 1) return true;
    return false;
}

}  // namespace wdcalc
