#pragma once

#include "srkb/bound.hpp"
#include "srkb/space.hpp"

#include <vector>

namespace srkb {

// Closed-form bounds on A(q, n, m, d). Results above |V| are clamped to |V|;
// the raw value is kept in the detail string.
BoundResult induced_singleton(const SpaceParams& sp, int d);
BoundResult induced_hamming(const SpaceParams& sp, int d);
BoundResult induced_plotkin(const SpaceParams& sp, int d);
BoundResult induced_elias(const SpaceParams& sp, int d);
BoundResult singleton(const SpaceParams& sp, int d);
BoundResult total_distance(const SpaceParams& sp, int d);
BoundResult sphere_packing(const SpaceParams& sp, int d);
BoundResult projective_sphere_packing(const SpaceParams& sp, int d);

// Variant that reproduces the published PSP column: the numerator is
// q^{sum m'n'} as above, the denominator subtracts delta' from every
// remaining block, 1 + sum_{i>l} (q^{n_i - delta'} - 1)/(q - 1) (q^{m_i} - 1),
// evaluated over the rationals. Never smaller than projective_sphere_packing.
BoundResult projective_sphere_packing_table(const SpaceParams& sp, int d);

// All eight closed-form bounds in table column order
// (iS, iH, iP, iE, S, SP, PSP, TD); PSP uses the theorem form.
std::vector<BoundResult> classical_bounds(const SpaceParams& sp, int d);

}  // namespace srkb
