#pragma once

#include "arrtop/chain_complex.hpp"
#include "arrtop/simplicial_complex.hpp"

namespace arrtop {

// Cellular chain complex of the moment-angle complex of K: one cell per word
// in {POINT, CIRCLE, DISK}^n whose DISK positions form a face of K, graded by
// #CIRCLE + 2#DISK.  The boundary converts one DISK to a CIRCLE with the
// graded Leibniz sign (circles to the left count); square-zero is verified on
// construction.  Refuses politely when the admissible cell count exceeds
// `cell_cap` — this is a desk-scale referee, not a production path.
ChainComplex moment_angle_complex(const SimplicialComplex& K,
                                  size_t cell_cap = 5'000'000);

// Unreduced homology of the moment-angle complex; the brute-force oracle the
// formula routes are checked against.
GradedAbelianGroup oracle_homology(const SimplicialComplex& K,
                                   size_t cell_cap = 5'000'000);

}  // namespace arrtop
