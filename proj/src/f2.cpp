#include "wdcalc/f2.hpp"

#include <stdexcept>

namespace wdcalc {

namespace {
inline F2Vec lowest_bit(F2Vec v) { return v & (~v + 1); }
}  // namespace

// ech_ is kept fully reduced: each row's pivot (lowest set bit) occurs in no
// other row, so a single reduction pass recovers coordinates.
F2Span F2Span::from_basis(std::vector<F2Vec> basis) {
    F2Span s;
    s.basis_ = std::move(basis);
    for (std::size_t i = 0; i < s.basis_.size(); ++i) {
        F2Vec row = s.basis_[i];
        F2Vec combo = F2Vec{1} << i;
        for (const auto& [erow, ecombo] : s.ech_) {
            if (row & lowest_bit(erow)) {
                row ^= erow;
                combo ^= ecombo;
            }
        }
        if (row == 0) throw std::invalid_argument("F2Span::from_basis: dependent basis");
        F2Vec pivot = lowest_bit(row);
        for (auto& [erow, ecombo] : s.ech_) {
            if (erow & pivot) {
                erow ^= row;
                ecombo ^= combo;
            }
        }
        s.ech_.emplace_back(row, combo);
    }
    return s;
}

std::optional<F2Vec> F2Span::coords(F2Vec v) const {
    F2Vec combo = 0;
    for (const auto& [erow, ecombo] : ech_) {
        if (v & lowest_bit(erow)) {
            v ^= erow;
            combo ^= ecombo;
        }
    }
    if (v != 0) return std::nullopt;
    return combo;
}

std::vector<F2Vec> F2Span::elements() const {
    std::vector<F2Vec> out;
    out.reserve(std::size_t{1} << basis_.size());
    for (F2Vec mask = 0; mask < (F2Vec{1} << basis_.size()); ++mask) {
        F2Vec v = 0;
        for (std::size_t i = 0; i < basis_.size(); ++i)
            if (mask & (F2Vec{1} << i)) v ^= basis_[i];
        out.push_back(v);
    }
    return out;
}

}  // namespace wdcalc
