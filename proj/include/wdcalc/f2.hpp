#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

namespace wdcalc {

// Elements of (Z/2)^m as bitmasks; bit i is the coordinate on the i-th
// basis vector of the ambient index set (m <= 32).
using F2Vec = std::uint32_t;

inline int f2_parity(F2Vec v) { return std::popcount(v) & 1; }

// Span of an independent list of F2 vectors, with coordinate recovery.
class F2Span {
   public:
    F2Span() = default;

    // pre: basis vectors are linearly independent.
    static F2Span from_basis(std::vector<F2Vec> basis);

    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<F2Vec>& basis() const { return basis_; }

    bool contains(F2Vec v) const { return coords(v).has_value(); }

    // Coordinates of v over basis(), as a mask over basis indices.
    std::optional<F2Vec> coords(F2Vec v) const;

    // All 2^dim elements, ordered by coordinate mask (deterministic).
    std::vector<F2Vec> elements() const;

    bool operator==(const F2Span& o) const { return basis_ == o.basis_; }

   private:
    std::vector<F2Vec> basis_;
    // Echelon rows paired with the basis-index combination producing them.
    std::vector<std::pair<F2Vec, F2Vec>> ech_;
};

}  // namespace wdcalc
