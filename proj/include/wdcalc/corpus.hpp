#pragma once

#include <random>
#include <vector>

#include "wdcalc/wdrep.hpp"

namespace wdcalc {

// Seeded random tempered parameter that classifies for the given family:
// constituents are sampled uniformly from square classes x n <= 4 x
// multiplicity <= 2, with n forced to the parity the family's self-duality
// sign demands, then the determinant and dimension parity are corrected by
// appending characters. The draw is fully determined by the generator
// state. max_dim must be at least 2 (at least 3 for Family::Sp).
WDRep random_parameter(std::mt19937_64& rng, const PAdicField& F, Family family,
                       int max_dim);

// Every multiset of quadratic x = 0 constituents of the requested
// self-duality sign parity (n odd for orthogonal, n even for symplectic)
// with total dimension in [1, max_dim], in a deterministic order.
std::vector<WDRep> enumerate_quadratic(const PAdicField& F, bool odd_n, int max_dim);

}  // namespace wdcalc
