#include "wdcalc/corpus.hpp"

#include <stdexcept>

namespace wdcalc {

WDRep random_parameter(std::mt19937_64& rng, const PAdicField& F, Family family,
                       int max_dim) {
    bool odd_n = family == Family::Sp || family == Family::SOeven;
    if (max_dim < (family == Family::Sp ? 3 : 2))
        throw std::invalid_argument("random_parameter: max_dim too small");
    auto cls = all_square_classes(F);
    // reserve room for the determinant and parity corrections
    int slack = family == Family::Sp ? 2 : (family == Family::SOeven ? 1 : 0);
    WDRep out = wd_zero(F);
    int blocks = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < blocks; ++i) {
        int n = 1 + static_cast<int>(rng() % 4);
        if (n % 2 == (odd_n ? 0 : 1)) n -= (n > 1) ? 1 : -1;
        int mult = 1 + static_cast<int>(rng() % 2);
        while (mult > 0 && rep_dim(out) + n * mult + slack > max_dim) --mult;
        if (mult == 0) continue;
        out = direct_sum(out,
                         wd_single(F, quad_irred(cls[rng() % cls.size()], Rat(0), n), mult));
    }
    if (family == Family::Sp || family == Family::SOeven) {
        if (family == Family::Sp) {
            SquareClass det = rep_det(out).d;
            if (!det.is_one())
                out = direct_sum(out, wd_single(F, quad_irred(det, Rat(0), 1)));
        }
        int want = family == Family::Sp ? 1 : 0;
        if (rep_dim(out) % 2 != want)
            out = direct_sum(out,
                             wd_single(F, quad_irred(square_class_one(F), Rat(0), 1)));
        if (rep_dim(out) == 0)
            out = wd_single(F, quad_irred(square_class_one(F), Rat(0), 1), 2);
    } else if (rep_dim(out) == 0) {
        out = wd_single(F, quad_irred(cls[rng() % cls.size()], Rat(0), 2));
    }
    return out;
}

namespace {

void extend(const PAdicField& F, const std::vector<WDIrred>& blocks, std::size_t from,
            const WDRep& cur, int max_dim, std::vector<WDRep>& out) {
    for (std::size_t i = from; i < blocks.size(); ++i) {
        if (rep_dim(cur) + blocks[i].n > max_dim) continue;
        WDRep next = direct_sum(cur, wd_single(F, blocks[i]));
        out.push_back(next);
        extend(F, blocks, i, next, max_dim, out);
    }
}

}  // namespace

std::vector<WDRep> enumerate_quadratic(const PAdicField& F, bool odd_n, int max_dim) {
    std::vector<WDIrred> blocks;
    for (int n = odd_n ? 1 : 2; n <= max_dim; n += 2)
        for (const SquareClass& d : all_square_classes(F))
            blocks.push_back(quad_irred(d, Rat(0), n));
    std::vector<WDRep> out;
    extend(F, blocks, 0, wd_zero(F), max_dim, out);
    return out;
}

}  // namespace wdcalc
