#pragma once

#include <map>
#include <string>
#include <vector>

#include "arrtop/graded_group.hpp"
#include "arrtop/matrix.hpp"
#include "arrtop/simplicial_complex.hpp"

namespace arrtop {

// A bounded chain complex of finitely generated free abelian groups.  Slot i
// holds degree lowest_degree + i; boundaries[i] maps slot i to slot i-1 (the
// boundary out of the lowest slot is the zero map to nothing).
struct ChainComplex {
    int lowest_degree = 0;
    std::vector<size_t> dims;
    std::vector<IntMatrix> boundaries;          // boundaries[i]: dims[i-1] x dims[i]
    std::vector<std::vector<std::string>> labels;  // basis labels per slot

    size_t slots() const { return dims.size(); }
    int degree_of_slot(size_t i) const { return lowest_degree + static_cast<int>(i); }

    // Throws internal_error naming the degree where the composite fails.
    void verify_square_zero() const;

    GradedAbelianGroup homology() const;

    // Betti numbers over F_p, same degree indexing as homology(); the
    // internal cross-check mode.  p must be prime (not checked; callers pass
    // small fixed primes).
    std::map<int, long> homology_ranks_mod_p(unsigned long p) const;
};

// The simplicial chain complex of K; reduced includes the empty face in
// degree -1 (augmentation).  Faces in each degree are ordered by bit value,
// and a face's boundary drops vertices with sign (-1)^position over its
// ascending vertex list.
ChainComplex simplicial_chain_complex(const SimplicialComplex& K, bool reduced);

// Reduced homology of K.
GradedAbelianGroup reduced_homology(const SimplicialComplex& K);

}  // namespace arrtop
